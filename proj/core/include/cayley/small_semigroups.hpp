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

// Exhaustive generation of the semigroups of a small fixed order up to
// isomorphism, plus brute-force isomorphism search.  Anti-isomorphic pairs
// are NOT identified: a semigroup and its opposite count separately unless
// they happen to be isomorphic.

#ifndef CAYLEY_SMALL_SEMIGROUPS_HPP_
#define CAYLEY_SMALL_SEMIGROUPS_HPP_

#include <optional>
#include <vector>

#include "semigroup.hpp"

namespace cayley {

//! The lexicographically least flattened table among all relabellings of the
//! given associative table by permutations of [0, n).
std::vector<std::vector<element_id>> canonical_table(
    std::vector<std::vector<element_id>> const& table);

//! An explicit isomorphism from \p s to \p t as a permutation p with
//! p[a * b] = p[a] * p[b], found by brute force over all permutations
//! (lexicographically least one returned), or nullopt.
std::optional<std::vector<element_id>> find_isomorphism(
    FiniteSemigroup const& s, FiniteSemigroup const& t);

bool are_isomorphic(FiniteSemigroup const& s, FiniteSemigroup const& t);

//! All semigroups of the given order up to isomorphism, as canonical tables
//! in lexicographic order.  Supported for order <= 4 (the search is a
//! backtracking fill of the table with early associativity pruning; beyond 4
//! it is out of desk range).  Expected counts: 1, 5, 24, 188.
//!
//! \throws PreconditionError (BoundExceeded) if order > 4 or order < 1.
std::vector<FiniteSemigroup> all_semigroups_of_order(int order);

}  // namespace cayley

#endif  // CAYLEY_SMALL_SEMIGROUPS_HPP_
