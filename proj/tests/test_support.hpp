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
//! Shared helpers for the test suite: an independent reference
//! implementation of the generator action (straight from the prefix-product
//! definition, no machinery), seeded random data, and word utilities.

#ifndef CAYLEY_TESTS_TEST_SUPPORT_HPP_
#define CAYLEY_TESTS_TEST_SUPPORT_HPP_

#include <algorithm>
#include <random>
#include <vector>

#include "cayley/machine.hpp"
#include "cayley/semigroup.hpp"

namespace test_support {

//! phi_s on one input word, evaluated by the definition: the k-th output is
//! s * a_1 * ... * a_k.  Products are taken in the action's domain
//! semigroup; \p s is a domain id.
inline cayley::Word reference_single(cayley::FiniteSemigroup const& domain,
                                     cayley::element_id s,
                                     cayley::Word const& w) {
  cayley::Word out;
  out.reserve(w.size());
  cayley::element_id acc = s;
  for (cayley::element_id a : w) {
    acc = domain.product(acc, a);
    out.push_back(acc);
  }
  return out;
}

//! The composite phi_{s_n} o ... o phi_{s_1} evaluated generator by
//! generator, innermost (last entry of \p gen_word) first.  This is the
//! yardstick the cascade/canonical machinery is measured against; it shares
//! no code with it.
inline cayley::Word reference_apply(cayley::Action const& act,
                                    cayley::Word const& gen_word,
                                    cayley::Word const& w) {
  cayley::Word cur = w;
  for (auto it = gen_word.rbegin(); it != gen_word.rend(); ++it) {
    cur = reference_single(act.domain(), act.generator_image(*it), cur);
  }
  return cur;
}

//! Longest common prefix of two words (the meet in the string tree).
inline cayley::Word common_prefix(cayley::Word const& a,
                                  cayley::Word const& b) {
  cayley::Word out;
  for (std::size_t i = 0; i < a.size() && i < b.size() && a[i] == b[i]; ++i) {
    out.push_back(a[i]);
  }
  return out;
}

inline bool is_prefix(cayley::Word const& p, cayley::Word const& w) {
  return p.size() <= w.size() && std::equal(p.begin(), p.end(), w.begin());
}

//! A word of the given length with letters drawn uniformly from \p pool.
template <typename Rng>
cayley::Word random_word(Rng& rng, std::vector<cayley::element_id> const& pool,
                         int length) {
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  cayley::Word w;
  w.reserve(static_cast<std::size_t>(length));
  for (int i = 0; i < length; ++i) {
    w.push_back(pool[pick(rng)]);
  }
  return w;
}

//! All words of length exactly \p len over 0..alphabet_size-1, in
//! lexicographic order.
inline std::vector<cayley::Word> words_of_length(int alphabet_size, int len) {
  std::vector<cayley::Word> out;
  out.push_back({});
  for (int l = 0; l < len; ++l) {
    std::vector<cayley::Word> next;
    for (cayley::Word const& w : out) {
      for (cayley::element_id a = 0; a < alphabet_size; ++a) {
        cayley::Word e = w;
        e.push_back(a);
        next.push_back(std::move(e));
      }
    }
    out = std::move(next);
  }
  return out;
}

//! All words of length 1 .. max_len over 0..alphabet_size-1, shortest first,
//! lexicographic inside a length.
inline std::vector<cayley::Word> words_up_to(int alphabet_size, int max_len) {
  std::vector<cayley::Word> out;
  for (int len = 1; len <= max_len; ++len) {
    std::vector<cayley::Word> level = words_of_length(alphabet_size, len);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

//! Ids 0..n-1.
inline std::vector<cayley::element_id> all_ids(int n) {
  std::vector<cayley::element_id> out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    out[static_cast<std::size_t>(i)] = i;
  }
  return out;
}

}  // namespace test_support

#endif  // CAYLEY_TESTS_TEST_SUPPORT_HPP_
