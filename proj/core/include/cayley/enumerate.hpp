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

// Closure of the generator machines under composition: enumerate the
// semigroup of all compositions f_{s_n} o ... o f_{s_1} over an action, with
// an element cap because the closure is infinite exactly when the base
// semigroup contains a nontrivial group (in full mode).  On top of the
// enumeration: the aperiodicity index of the enumerated semigroup, and
// checks that structural maps of the base semigroup induce the expected
// morphisms between enumerated semigroups.

#ifndef CAYLEY_ENUMERATE_HPP_
#define CAYLEY_ENUMERATE_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "machine.hpp"
#include "semigroup.hpp"

namespace cayley {

enum class EnumStatus {
  complete,  // closure reached a fixpoint under the cap
  exceeded   // stopped after discovering more elements than the cap
};

struct EnumOptions {
  //! Stop once more than this many distinct elements have been found.
  std::size_t max_elements = 100'000;
  std::size_t state_budget = kDefaultStateBudget;
  //! Restrict to the compositions generated by this subset of base elements
  //! (empty = all of them).
  std::vector<element_id> generators;
};

//! The result of enumerating the composition closure.
//!
//! Elements appear in breadth-first discovery order: all compositions of
//! length L before length L + 1, and inside a level in lexicographic order
//! of their witnesses.  Each witness is the lexicographically least among
//! the shortest generator words realising its element (outermost generator
//! first).
struct EnumResult {
  ActionPtr action;
  EnumStatus status = EnumStatus::complete;
  std::vector<CanonicalElement> elements;
  std::vector<Word> witnesses;  // parallel to elements
  //! Index of the one-generator composition per base generator.  Distinct
  //! generators can share an element in ideal and trace modes; in full mode
  //! the images are pairwise distinct.
  std::vector<int> generator_map;
  //! Length of the longest witness (the closure depth reached).
  int closure_depth = 0;
  //! Composition table over element indices; filled only when complete.
  std::vector<std::vector<int>> table;
  std::size_t max_elements = 0;  // echo of the cap used

  bool complete() const noexcept {
    return status == EnumStatus::complete;
  }

  //! Index of an element equal to \p f, or -1.
  int index_of(CanonicalElement const& f) const;

  //! Package a complete enumeration as a semigroup; element names are the
  //! witness words.  Runs the full table validation on the way (an
  //! independent associativity check of the composition table).
  //!
  //! \throws IncompleteEnumerationError if status is not complete.
  FiniteSemigroup to_semigroup(std::string name = "") const;
};

EnumResult enumerate(ActionPtr const& act, EnumOptions const& opts = {});

//! Aperiodicity index of the enumerated (complete) semigroup.
//!
//! \throws IncompleteEnumerationError if the enumeration was truncated.
std::optional<int> cayley_aperiodicity_index(EnumResult const& e);

//! Outcome of a structural verification.  ok is the verdict; detail names
//! the first failure when not ok.
struct MorphismReport {
  bool ok = false;
  std::string detail;
  //! Element map between the two enumerations, when one was built.
  std::vector<int> element_map;
};

//! Check that a surjective morphism F : S -> T induces a morphism of the
//! enumerated full-mode semigroups by f_s -> f_{F(s)}, inductively over the
//! composition tables, and that the induced map is onto.
//!
//! \p f maps base ids of \p es 's semigroup to base ids of \p et 's.  Both
//! enumerations must be complete and in full mode.
//!
//! \throws PreconditionError (NotAMorphism) if F itself is not a surjective
//! morphism.
MorphismReport induced_morphism(EnumResult const& es, EnumResult const& et,
                                std::vector<element_id> const& f);

//! Check that a subsemigroup T of S yields a division: the compositions
//! over S with generators restricted to T, when restricted to input words
//! over T's own alphabet, are exactly the composition semigroup of T.
//!
//! \throws PreconditionError (NotClosed) if \p sub is not closed under the
//! product.
MorphismReport sub_division_check(FiniteSemigroup const& s,
                                  std::vector<element_id> const& sub,
                                  EnumOptions const& opts = {});

//! Check that the composition semigroup of S x T embeds into the direct
//! product of the composition semigroups of S and T via componentwise
//! projection (injectively and multiplicatively).
MorphismReport product_embedding(FiniteSemigroup const& s,
                                 FiniteSemigroup const& t,
                                 EnumOptions const& opts = {});

}  // namespace cayley

#endif  // CAYLEY_ENUMERATE_HPP_
