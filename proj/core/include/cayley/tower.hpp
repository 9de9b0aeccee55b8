/*
 * Copyright 2026 The cayleycpp authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Layered analysis of the compositions over an ideal alphabet.  Fix an ideal
// T and a J-class J with T + J again an ideal (J sits directly above T).  An
// input word over T + J is stable for a composition f if f preserves the
// length of its leading J-segment.  Restricted to stable words, f is
// captured by a pair: its projection to the trace alphabet J + {0}, plus one
// residual composition over T per trace letter.  This module decides the
// stable-word congruence, builds the pair embedding, and verifies that it is
// an injective morphism into the corresponding semidirect-style product —
// the inductive step that reduces a composition semigroup to the layers of a
// principal series.

#ifndef CAYLEY_TOWER_HPP_
#define CAYLEY_TOWER_HPP_

#include <string>
#include <vector>

#include "enumerate.hpp"
#include "green.hpp"
#include "machine.hpp"
#include "semigroup.hpp"

namespace cayley {

//! A layer context: the normalised semigroup (identity and zero adjoined),
//! the ideal T, the J-class J directly above it, and the three actions the
//! layer analysis uses.  Original element ids are preserved by the
//! normalisation (new elements are appended).
struct TowerContext {
  FiniteSemigroup s;              // normalised semigroup
  std::vector<element_id> ideal;  // T, sorted; always contains the zero
  std::vector<element_id> j_class;  // J, sorted
  bool added_identity = false;
  bool added_zero = false;

  ActionPtr act_tj;  // compositions on words over T + J
  ActionPtr act_t;   // compositions on words over T
  ActionPtr act_tr;  // compositions on the trace alphabet J + {0}

  std::vector<char> letter_in_j;  // per act_tj letter index
  int trace_zero_letter = -1;     // letter index of 0 in act_tr
  //! Per act_tr letter index: the original J element it stands for, or
  //! UNDEFINED for the zero letter.
  std::vector<element_id> j_of_trace_letter;
};

//! Build a layer context.  The input semigroup is normalised by adjoining an
//! identity and then a zero as needed; a freshly adjoined zero joins the
//! ideal automatically.  \p ideal is given in input element ids and
//! \p j_rep is any element of the desired J-class (of the normalised
//! semigroup).
//!
//! \throws NotAnIdealError / PreconditionError if T is not an ideal, J meets
//! T, or T + J is not an ideal.
TowerContext make_tower_context(FiniteSemigroup const& input,
                                std::vector<element_id> ideal,
                                element_id j_rep);

//! Length of the leading all-J segment of an input word over T + J.
int j_prefix_len(TowerContext const& ctx, Word const& w);

//! Is \p w stable for the composition \p f (a generator word): does f
//! preserve the length of the leading J-segment?
bool is_stable(TowerContext const& ctx, Word const& f, Word const& w);

//! The projection of a composition to the trace alphabet, as a canonical
//! machine value over the trace action.
CanonicalElement trace_project(TowerContext const& ctx, Word const& f);

struct StEqualResult {
  bool equal = false;
  //! When not equal: a shortest word over T + J witnessing the difference
  //! (different stability, or different outputs on a mutually stable word).
  Word counterexample;
};

//! Decide the stable-word congruence: same stable set, and equal outputs on
//! every mutually stable word.  Runs a breadth-first search of the product
//! of the two machines augmented with prefix-tracking flags, so the answer
//! is exact and a failure yields a shortest witness.
StEqualResult st_equal(TowerContext const& ctx, Word const& f, Word const& g);

//! The layer invariant of a composition: its trace projection together with
//! one residual composition over T per trace letter — the residual past a
//! stable one-letter prefix [j], or the zero composition when [j] is
//! unstable, and the plain restriction to T-words at the zero letter.
struct StableClass {
  CanonicalElement trace_part;
  std::vector<CanonicalElement> residual;  // indexed by trace letter

  friend bool operator==(StableClass const& x, StableClass const& y) {
    return x.trace_part == y.trace_part && x.residual == y.residual;
  }
  friend bool operator!=(StableClass const& x, StableClass const& y) {
    return !(x == y);
  }
};

StableClass pi_embed(TowerContext const& ctx, Word const& f);

//! The product on pairs under which pi_embed is a morphism:
//! the trace parts compose, and the residual at letter a composes the left
//! operand's residual at (right operand's trace image of a) with the right
//! operand's residual at a.
StableClass semidirect_mul(TowerContext const& ctx, StableClass const& x,
                           StableClass const& y);

struct Verdict {
  bool ok = false;
  std::string detail;
};

//! Over every pair of generator words of length <= max_word_len: the pair
//! map is multiplicative (pi(f) * pi(g) = pi(fg)), and pi(f) = pi(g) holds
//! exactly when f and g are stable-word congruent.  The first failure is
//! reported.
Verdict verify_embedding(TowerContext const& ctx, int max_word_len);

//! Aperiodicity additivity data across one layer: the indices of the
//! enumerated composition semigroups over T + J, over T, and over the trace.
struct AdditivityReport {
  int index_tj = 0;
  int index_t = 0;
  int index_tr = 0;
  bool holds = false;  // index_tj <= index_t + index_tr
};

//! \throws IncompleteEnumerationError if any of the three enumerations
//! exceeds the cap, and PreconditionError (NotAperiodic) if one of them is
//! not aperiodic.
AdditivityReport tower_additivity(TowerContext const& ctx,
                                  EnumOptions const& opts = {});

//! The setting of the memory-division theorem: an aperiodic semigroup with a
//! regular 0-minimal ideal, with its Rees coordinates and extended structure
//! matrix.
struct ZeroMinimalContext {
  FiniteSemigroup s;
  std::vector<element_id> ideal;    // J + {0}, sorted
  std::vector<element_id> j_class;  // J, sorted
  GreenStructure g;
  ReesData rees;
  ExtendedMatrix ext;
};

//! \throws PreconditionError unless S is aperiodic with a zero and \p ideal
//! is a regular 0-minimal ideal.
ZeroMinimalContext make_zero_minimal_context(FiniteSemigroup const& s,
                                             std::vector<element_id> ideal);

//! The positions at which a composition, applied over the ideal alphabet,
//! first visits each row coordinate: position i (1-based) is new if
//! s_{i-1} ... s_1 * a differs from every earlier s_{k-1} ... s_1 * a.  At
//! most |A| positions are new.
//!
//! \throws PreconditionError (ActionKilled) if the full product
//! s_n ... s_1 kills the row coordinate \p a_row.
std::vector<int> new_indices(ZeroMinimalContext const& ctx,
                             Word const& gen_word, int a_row);

}  // namespace cayley

#endif  // CAYLEY_TOWER_HPP_
