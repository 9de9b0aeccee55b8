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

// Two expansions of a finite semigroup that remember how a product was
// built: the memory semigroup on pairs (element, set of proper suffix
// products), and the Rhodes expansion on R-descending product chains.  The
// memory semigroup controls the machine compositions over an ideal alphabet:
// two generator words with the same memory value induce the same
// composition, which division_check verifies word by word.

#ifndef CAYLEY_EXPANSIONS_HPP_
#define CAYLEY_EXPANSIONS_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "green.hpp"
#include "semigroup.hpp"

namespace cayley {

//! An element of the memory semigroup mem(S): the product of a generator
//! word together with the set of its proper suffix products, kept as a
//! bitset over element ids.  Defined for semigroups of order at most 64.
struct MemElement {
  element_id element = UNDEFINED;
  std::uint64_t memory = 0;

  friend bool operator==(MemElement const& x, MemElement const& y) {
    return x.element == y.element && x.memory == y.memory;
  }
  friend bool operator<(MemElement const& x, MemElement const& y) {
    return x.element != y.element ? x.element < y.element
                                  : x.memory < y.memory;
  }
};

//! The product (s, A)(t, B) = (st, At + {t} + B).
//!
//! \throws PreconditionError (BoundExceeded) if order(S) > 64.
MemElement mem_mul(FiniteSemigroup const& s, MemElement const& x,
                   MemElement const& y);

//! The memory value of a generator word {s_n, ..., s_1} (outermost first):
//! element s_n ... s_1 and memory {s_{n-1} ... s_1, ..., s_2 s_1, s_1}.  A
//! single generator has empty memory.
MemElement phi_mem(FiniteSemigroup const& s, Word const& gen_word);

//! Aperiodicity index of mem(S), computed without materialising the full
//! expansion: each element's power chain is walked with mem_mul directly.
//! nullopt iff S itself is not aperiodic.
std::optional<int> mem_aperiodicity_index(FiniteSemigroup const& s);

//! Number of elements of mem(S) = |S| * 2^|S| (the expansion over all memory
//! sets; only part of it is reachable from generator words).
std::uint64_t mem_order(FiniteSemigroup const& s);

//! An element of the Rhodes expansion: the entries of a product chain
//! s_1, s_1 s_2, s_1 s_2 s_3, ... AFTER reduction, stored first entry first.
//! (Note these are the accumulated products, not the original letters.)
struct ChainElement {
  std::vector<element_id> entries;

  friend bool operator==(ChainElement const& x, ChainElement const& y) {
    return x.entries == y.entries;
  }
};

//! Validate that the entries form a product chain (each entry is reachable
//! from its predecessor by a right multiplication) and erase repetitions up
//! the R-order: while some entry is R-equivalent to its predecessor, the
//! predecessor is deleted.  The result is independent of the deletion order.
//!
//! \throws NotAChainError if some entry is not in (previous entry) * S.
ChainElement rhodes_reduce(FiniteSemigroup const& s,
                           std::vector<element_id> const& entries);

//! Product in the Rhodes expansion: append v's entries premultiplied by u's
//! last entry, then reduce.
ChainElement rhodes_mul(FiniteSemigroup const& s, ChainElement const& u,
                        ChainElement const& v);

//! Verdict of the memory-to-machine division check over an ideal alphabet.
struct DivisionReport {
  bool holds = false;
  std::size_t words_checked = 0;
  std::size_t classes = 0;  // distinct memory values seen
  //! First pair of generator words with equal memory value but different
  //! compositions, when the check fails (lexicographically least, shortest
  //! first).
  Word counterexample_u, counterexample_v;
  std::string detail;
};

//! Group all generator words of length 1 .. max_len by their memory value
//! and verify that words in the same group induce the same composition on
//! input words over the ideal \p ideal.
//!
//! \throws PreconditionError (PreconditionViolated / NoZero) unless S has an
//! identity and a zero and \p ideal is a regular 0-minimal ideal of S.
DivisionReport division_check(FiniteSemigroup const& s,
                              std::vector<element_id> const& ideal,
                              int max_len);

}  // namespace cayley

#endif  // CAYLEY_EXPANSIONS_HPP_
