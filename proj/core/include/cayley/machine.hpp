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

// Length-preserving string functions attached to a finite semigroup.  Each
// generator s defines
//
//   f_s(a_1 a_2 ... a_k) = (s a_1)(s a_1 a_2) ... (s a_1 a_2 ... a_k)
//
// on words over the input alphabet, and the objects of interest are the
// compositions f_{s_n} o ... o f_{s_1}.  A generator word is stored with the
// OUTERMOST (last applied) generator first, so {s_n, ..., s_1} denotes
// f_{s_n} o ... o f_{s_1} throughout; all interfaces follow this convention.
//
// Such a composition is realised by a cascade of n state cells: reading a
// letter updates the innermost cell by right multiplication and each later
// cell by the freshly updated predecessor, and the outermost cell is emitted.
// Minimising the cascade as a Mealy machine and renumbering its states
// breadth-first yields a canonical value, so function equality is decidable
// by structural identity.
//
// Three action modes share this machinery.  Full: products are computed in
// S with an identity adjoined if needed, and the input alphabet is all of
// S^1.  Ideal: the alphabet is a two-sided ideal of S, products in S itself.
// Trace: the alphabet is a J-class with a zero adjoined, products through the
// Rees quotient by the ideal strictly below the class.

#ifndef CAYLEY_MACHINE_HPP_
#define CAYLEY_MACHINE_HPP_

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "green.hpp"
#include "semigroup.hpp"

namespace cayley {

enum class ActionMode { full, ideal, trace };

//! Fixes how generator words act on strings: the base semigroup S whose
//! elements label generators, the domain semigroup D in which products are
//! computed, the input alphabet (a subset of D), and the embedding of base
//! elements into D.  Immutable; shared by the machine values built over it.
class Action {
 public:
  //! Full mode: D = S^1, alphabet = all of S^1, generators included as
  //! themselves.  The adjoined identity (if any) is an input letter but not a
  //! generator.
  static std::shared_ptr<Action const> full(FiniteSemigroup s);

  //! Ideal mode: D = S, alphabet = the given two-sided ideal, every element
  //! of S a generator.
  //!
  //! \throws NotAnIdealError if the subset is not an ideal.
  static std::shared_ptr<Action const> on_ideal(FiniteSemigroup s,
                                                std::vector<element_id> ideal);

  //! Trace mode for a J-class J: alphabet J + {0}, products through the Rees
  //! quotient of S by the ideal strictly below J (or through S with a fresh
  //! zero when J is the minimal ideal and nothing lies below).
  static std::shared_ptr<Action const> on_trace(FiniteSemigroup const& s,
                                                std::vector<element_id> j);

  //! Trace mode with an explicitly prescribed ideal below: products through
  //! the Rees quotient S / below.  Requires below to be an ideal disjoint
  //! from J with J + below an ideal; the resulting action coincides with
  //! on_trace(s, J) whenever both apply.
  static std::shared_ptr<Action const> on_trace_over(
      FiniteSemigroup const& s, std::vector<element_id> const& below,
      std::vector<element_id> j);

  FiniteSemigroup const& base() const noexcept {
    return _base;
  }

  //! The semigroup in which letter products are computed.
  FiniteSemigroup const& domain() const noexcept {
    return _domain;
  }

  ActionMode mode() const noexcept {
    return _mode;
  }

  //! Input letters as domain ids, ascending.
  std::vector<element_id> const& alphabet() const noexcept {
    return _alphabet;
  }

  int num_letters() const noexcept {
    return static_cast<int>(_alphabet.size());
  }

  //! Letter index of a domain element, or -1 if it is not a letter.
  int letter_index(element_id domain_id) const {
    return _letter_index.at(static_cast<std::size_t>(domain_id));
  }

  element_id letter(int index) const {
    return _alphabet.at(static_cast<std::size_t>(index));
  }

  std::string letter_name(int index) const {
    return _domain.name_of(letter(index));
  }

  //! Image in the domain of a base-semigroup generator.
  element_id generator_image(element_id s) const {
    return _gen_image.at(static_cast<std::size_t>(s));
  }

  //! Content hash; two actions with equal fingerprints are treated as the
  //! same action for the purpose of combining machine values.
  std::uint64_t fingerprint() const noexcept {
    return _fingerprint;
  }

  //! Map a generator word over the base semigroup to the domain word that
  //! realises it.  Throws AlphabetMismatchError on out-of-range letters, and
  //! PreconditionError on the empty word (the identity function is not a
  //! generator product).
  Word to_domain(Word const& gen_word) const;

  //! Validate an input word; throws AlphabetMismatchError if some letter is
  //! not in the alphabet.
  void check_input(Word const& w) const;

  //! Parse a comma-free list of letter names into an input word.
  Word input_from_names(std::vector<std::string> const& names) const;

 private:
  Action() = default;
  static std::shared_ptr<Action const> make(FiniteSemigroup base,
                                            FiniteSemigroup domain,
                                            std::vector<element_id> alphabet,
                                            std::vector<element_id> gen_image,
                                            ActionMode mode);

  FiniteSemigroup _base;
  FiniteSemigroup _domain;
  std::vector<element_id> _alphabet;
  std::vector<int> _letter_index;
  std::vector<element_id> _gen_image;
  ActionMode _mode = ActionMode::full;
  std::uint64_t _fingerprint = 0;
};

using ActionPtr = std::shared_ptr<Action const>;

//! Default cap on explicitly constructed machine states.
constexpr std::size_t kDefaultStateBudget = 1'000'000;

//! A letter-indexed Mealy machine: delta and lambda are num_states x
//! num_letters arrays, outputs are letter indices.
struct MealyMachine {
  std::int32_t num_states = 0;
  std::int32_t num_letters = 0;
  std::vector<std::int32_t> delta;
  std::vector<std::int32_t> lambda;
  std::int32_t initial = 0;

  std::int32_t next(std::int32_t state, std::int32_t letter) const {
    return delta[static_cast<std::size_t>(state) * num_letters + letter];
  }
  std::int32_t out(std::int32_t state, std::int32_t letter) const {
    return lambda[static_cast<std::size_t>(state) * num_letters + letter];
  }
};

//! Apply the composition given by \p gen_word (outermost generator first) to
//! an input word, in one left-to-right pass of the cascade.  The empty input
//! maps to the empty output.
Word apply(Action const& act, Word const& gen_word, Word const& input);

//! As apply(), but the composition is given by a word of domain elements
//! (innermost last), as produced by restriction().
Word apply_domain(Action const& act, Word const& domain_word,
                  Word const& input);

//! The grid of partial products behind one application.  Rows are given
//! INNERMOST FIRST, i.e. rows = {s_1, ..., s_n} lists the first applied
//! generator first, matching the printed array whose row j is the output of
//! f_{s_j} o ... o f_{s_1}.  Returns an (n + 1) x (k + 1) array of domain
//! ids: row 0 holds the input, column 0 the row generators, corner
//! UNDEFINED; every inner cell is (cell to the left) * (cell above).
std::vector<std::vector<element_id>> pascal_array(Action const& act,
                                                  Word const& rows,
                                                  Word const& input);

//! The residual function of f past the input prefix \p v: the domain word
//! {u_n, ..., u_1} (outermost first) whose cells are the cascade state after
//! f has read v.  restriction(f, empty) is f itself (as a domain word).
Word restriction(Action const& act, Word const& gen_word, Word const& v);

//! The explicit cascade transducer of a domain word: states are the
//! reachable state tuples.
//!
//! \throws StateBudgetExceededError past \p state_budget states.
MealyMachine cascade_machine(Action const& act, Word const& domain_word,
                             std::size_t state_budget = kDefaultStateBudget);

//! The one-cell machine with states = generator images and both transition
//! and output given by right multiplication (the machine whose state diagram
//! is the labelled Cayley graph of S).
MealyMachine base_machine(Action const& act);

//! A composition of generators in canonical form: the minimised Mealy
//! machine of the function, states renumbered breadth-first from the initial
//! state with letters in ascending order.  Two values over the same action
//! are equal iff they compute the same string function.  The witness is a
//! generator word that realises the function; it is metadata and does not
//! participate in equality or hashing.
class CanonicalElement {
 public:
  CanonicalElement() = default;

  int num_states() const noexcept {
    return _m.num_states;
  }
  int num_letters() const noexcept {
    return _m.num_letters;
  }
  MealyMachine const& machine() const noexcept {
    return _m;
  }
  ActionPtr const& action() const noexcept {
    return _act;
  }
  Word const& witness() const noexcept {
    return _witness;
  }
  void set_witness(Word w) {
    _witness = std::move(w);
  }

  //! Run the canonical machine on an input word (letter ids from the domain).
  Word evaluate(Word const& input) const;

  //! True iff this is the identity function on the alphabet: one state whose
  //! every output equals its input letter.
  bool is_identity_function() const;

  std::uint64_t hash() const noexcept {
    return _hash;
  }

  //! Structural equality of the canonical machines (witnesses ignored).
  //! Values over actions with different fingerprints compare unequal.
  friend bool operator==(CanonicalElement const& f, CanonicalElement const& g);
  friend bool operator!=(CanonicalElement const& f,
                         CanonicalElement const& g) {
    return !(f == g);
  }

 private:
  friend CanonicalElement minimize_machine(ActionPtr const& act,
                                           MealyMachine const& m);
  MealyMachine _m;
  ActionPtr _act;
  Word _witness;
  std::uint64_t _hash = 0;
};

//! Minimise (partition refinement on output rows, then transition
//! refinement to the fixpoint) and renumber breadth-first.
CanonicalElement minimize_machine(ActionPtr const& act, MealyMachine const& m);

//! Canonical form of the composition given by a generator word, built by
//! composing one-generator machines with intermediate minimisation (so deep
//! words never materialise an exponential cascade).
CanonicalElement canonicalize(ActionPtr const& act, Word const& gen_word,
                              std::size_t state_budget = kDefaultStateBudget);

//! Canonical form of a domain word, e.g. one returned by restriction().
CanonicalElement canonicalize_domain(
    ActionPtr const& act, Word const& domain_word,
    std::size_t state_budget = kDefaultStateBudget);

//! Canonical form of f o g (g applied first).  Witness: f's then g's.
//!
//! \throws AlphabetMismatchError if the action fingerprints differ.
CanonicalElement compose(CanonicalElement const& f, CanonicalElement const& g,
                         std::size_t state_budget = kDefaultStateBudget);

//! Equality of two compositions given by generator words.
bool equal(ActionPtr const& act, Word const& f, Word const& g,
           std::size_t state_budget = kDefaultStateBudget);

//! Equality decided again by an explicit bisimulation between the two
//! machines (an independent route to the same answer as operator==).
bool equal_bisimulation(CanonicalElement const& f, CanonicalElement const& g);

//! The finite portrait of a composition to a given depth: the tree of input
//! prefixes of length < depth, each node carrying the letter-to-output map
//! of the residual function at that prefix.
struct Portrait {
  ActionPtr action;
  int depth = 0;
  //! Nodes in breadth-first order; node 0 is the root.  For node i,
  //! address[i] is the input prefix (domain ids) leading to it, child[i][a]
  //! the node index of its extension by letter a (-1 at the last level), and
  //! output[i][a] the first output letter (domain id) of the residual
  //! function there on input letter a.
  std::vector<Word> address;
  std::vector<std::vector<int>> child;
  std::vector<std::vector<element_id>> output;
};

Portrait portrait(ActionPtr const& act, Word const& gen_word, int depth);

//! Indented text rendering of a portrait.
std::string portrait_text(Portrait const& p);

//! Graphviz renderings.  Edges are labelled "letter/output".  If
//! \p state_names is nonempty it must have one entry per machine state.
std::string to_dot(Action const& act, MealyMachine const& m,
                   std::string const& graph_name = "machine",
                   std::vector<std::string> const& state_names = {});
std::string to_dot(CanonicalElement const& f,
                   std::string const& graph_name = "element");
std::string to_dot(Portrait const& p, std::string const& graph_name =
                                          "portrait");

}  // namespace cayley

#endif  // CAYLEY_MACHINE_HPP_
