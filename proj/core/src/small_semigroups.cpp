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

#include "cayley/small_semigroups.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace cayley {

namespace {

std::vector<element_id> flatten(
    std::vector<std::vector<element_id>> const& table) {
  std::vector<element_id> flat;
  flat.reserve(table.size() * table.size());
  for (auto const& row : table) {
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return flat;
}

}  // namespace

std::vector<std::vector<element_id>> canonical_table(
    std::vector<std::vector<element_id>> const& table) {
  int const n = static_cast<int>(table.size());
  std::vector<element_id> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<element_id> best = flatten(table);
  std::vector<element_id> cand(best.size());
  do {
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        cand[static_cast<std::size_t>(perm[static_cast<std::size_t>(a)]) * n
             + perm[static_cast<std::size_t>(b)]] =
            perm[static_cast<std::size_t>(table[static_cast<std::size_t>(a)]
                                               [static_cast<std::size_t>(b)])];
      }
    }
    if (cand < best) {
      best = cand;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::vector<std::vector<element_id>> out(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a) {
    out[static_cast<std::size_t>(a)].assign(
        best.begin() + static_cast<std::ptrdiff_t>(a) * n,
        best.begin() + static_cast<std::ptrdiff_t>(a + 1) * n);
  }
  return out;
}

std::optional<std::vector<element_id>> find_isomorphism(
    FiniteSemigroup const& s, FiniteSemigroup const& t) {
  if (s.order() != t.order()) {
    return std::nullopt;
  }
  int const n = s.order();
  std::vector<element_id> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int a = 0; ok && a < n; ++a) {
      for (int b = 0; ok && b < n; ++b) {
        ok = perm[static_cast<std::size_t>(s.product(a, b))]
             == t.product(perm[static_cast<std::size_t>(a)],
                          perm[static_cast<std::size_t>(b)]);
      }
    }
    if (ok) {
      return perm;  // lexicographically least, since perms are visited in order
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

bool are_isomorphic(FiniteSemigroup const& s, FiniteSemigroup const& t) {
  return find_isomorphism(s, t).has_value();
}

namespace {

// Backtracking fill of an n x n table in row-major order.  After each
// assignment only the triples whose four lookups are all defined already are
// checked, so dead branches are cut as early as possible.
class TableSearch {
 public:
  explicit TableSearch(int n) : _n(n), _cell(n * n, UNDEFINED) {}

  std::set<std::vector<element_id>> run() {
    fill(0);
    return std::move(_found);
  }

 private:
  element_id at(int a, int b) const {
    return _cell[static_cast<std::size_t>(a) * _n + b];
  }

  bool consistent() const {
    for (int a = 0; a < _n; ++a) {
      for (int b = 0; b < _n; ++b) {
        element_id const ab = at(a, b);
        if (ab == UNDEFINED) {
          continue;
        }
        for (int c = 0; c < _n; ++c) {
          element_id const bc = at(b, c);
          if (bc == UNDEFINED) {
            continue;
          }
          element_id const left = at(ab, c);
          element_id const right = at(a, bc);
          if (left != UNDEFINED && right != UNDEFINED && left != right) {
            return false;
          }
        }
      }
    }
    return true;
  }

  void fill(int pos) {
    if (pos == _n * _n) {
      std::vector<std::vector<element_id>> table(
          static_cast<std::size_t>(_n));
      for (int a = 0; a < _n; ++a) {
        table[static_cast<std::size_t>(a)].assign(
            _cell.begin() + static_cast<std::ptrdiff_t>(a) * _n,
            _cell.begin() + static_cast<std::ptrdiff_t>(a + 1) * _n);
      }
      _found.insert(flatten(canonical_table(table)));
      return;
    }
    for (element_id v = 0; v < _n; ++v) {
      _cell[static_cast<std::size_t>(pos)] = v;
      if (consistent()) {
        fill(pos + 1);
      }
    }
    _cell[static_cast<std::size_t>(pos)] = UNDEFINED;
  }

  int _n;
  std::vector<element_id> _cell;
  std::set<std::vector<element_id>> _found;
};

}  // namespace

std::vector<FiniteSemigroup> all_semigroups_of_order(int order) {
  if (order < 1 || order > 4) {
    throw PreconditionError("BoundExceeded",
                            "semigroup generation is supported for orders 1-4, "
                            "got " + std::to_string(order));
  }
  auto const canon = TableSearch(order).run();
  std::vector<FiniteSemigroup> out;
  out.reserve(canon.size());
  int idx = 0;
  for (auto const& flat : canon) {
    std::vector<std::vector<element_id>> table(
        static_cast<std::size_t>(order));
    for (int a = 0; a < order; ++a) {
      table[static_cast<std::size_t>(a)].assign(
          flat.begin() + static_cast<std::ptrdiff_t>(a) * order,
          flat.begin() + static_cast<std::ptrdiff_t>(a + 1) * order);
    }
    out.emplace_back(std::move(table), std::vector<std::string>{},
                     "ord" + std::to_string(order) + "_"
                         + std::to_string(idx++));
  }
  return out;
}

}  // namespace cayley
