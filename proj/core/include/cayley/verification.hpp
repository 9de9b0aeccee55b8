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

//! \file
//! One-shot verification harness for the main equivalence: a finite
//! semigroup S is aperiodic iff the composition closure of its generator
//! functions is finite iff that closure is itself aperiodic.  The harness
//! runs the three-way check over every semigroup of a given order (up to
//! isomorphism) and, for the non-aperiodic cases, certifies free growth:
//! over any nontrivial subgroup the generator functions generate a free
//! semigroup, witnessed by all short words being pairwise distinct.

#ifndef CAYLEY_VERIFICATION_HPP_
#define CAYLEY_VERIFICATION_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cayley/enumerate.hpp"
#include "cayley/semigroup.hpp"

namespace cayley {

//! Outcome of the three-way equivalence check for one semigroup.
struct TheoremCase {
  //! Position in the all_semigroups_of_order listing.
  int index = 0;
  //! Aperiodicity of the base semigroup.
  bool aperiodic = false;
  std::optional<int> semigroup_index;
  //! Whether the composition closure stayed within the element cap.
  bool closure_complete = false;
  //! Number of distinct composition elements established: the full count
  //! when complete, otherwise a certified lower bound exceeding the cap.
  std::size_t closure_size = 0;
  //! Aperiodicity index of the enumerated closure, when complete.
  std::optional<int> closure_index;
  //! aperiodic == closure_complete == closure_index.has_value().
  bool equivalence_ok = false;
  //! Nontrivial subgroups examined for the free-growth witness.
  std::size_t subgroups_checked = 0;
  //! For every nontrivial subgroup G, all words over {phi_g : g in G} of
  //! length <= free_growth_word_len are pairwise distinct.  True when there
  //! is no nontrivial subgroup.
  bool free_growth_ok = true;

  bool ok() const noexcept {
    return equivalence_ok && free_growth_ok;
  }
};

//! Harness result over all semigroups of one order.
struct TheoremReport {
  int order = 0;
  std::size_t cap = 0;
  int free_growth_word_len = 0;
  std::vector<TheoremCase> cases;
  bool ok = false;  // every case passes both checks
};

//! All subsets of S that form a subgroup with more than one element, each
//! returned as a sorted element list.
std::vector<std::vector<element_id>> nontrivial_subgroups(
    FiniteSemigroup const& s);

//! Run the equivalence harness over every semigroup of the given order.
//!
//! For each semigroup: decide aperiodicity from the table, decide whether
//! the composition closure has at most \p cap elements, compute the
//! closure's aperiodicity index when complete, and assert the three-way
//! equivalence.  For non-aperiodic semigroups additionally certify free
//! growth over each nontrivial subgroup with words up to length
//! \p word_len.
//!
//! The cap decision is exact but avoids materialising huge machines: a
//! small probing enumeration settles the finite side, and a closure that
//! outgrows the probe is shown to exceed \p cap by counting distinct
//! behaviours of subgroup-generated compositions on fixed test inputs
//! (distinct outputs witness distinct functions, so the count is a sound
//! lower bound).  Only when no certificate is reached does the harness fall
//! back to enumerating machines up to the full cap.
//!
//! \throws PreconditionError (BoundExceeded) if order > 3; the harness is a
//! desk-scale exhaustive check.
TheoremReport verify_theorem(int order, std::size_t cap = 100'000,
                             int word_len = 5);

//! One human-readable line per case plus a summary line.
std::string theorem_report_text(TheoremReport const& r);

}  // namespace cayley

#endif  // CAYLEY_VERIFICATION_HPP_
