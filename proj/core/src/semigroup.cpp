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

#include "cayley/semigroup.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

namespace cayley {

namespace {

std::vector<std::string> default_names(int order,
                                       std::vector<std::string> names) {
  if (names.empty()) {
    names.reserve(static_cast<std::size_t>(order));
    for (int i = 0; i < order; ++i) {
      names.push_back("x" + std::to_string(i));
    }
  }
  return names;
}

// Appends primes to the candidate name until it clashes with none of the
// existing ones.
std::string uniquify(std::string candidate,
                     std::vector<std::string> const& taken) {
  while (std::find(taken.begin(), taken.end(), candidate) != taken.end()) {
    candidate += "'";
  }
  return candidate;
}

}  // namespace

FiniteSemigroup::FiniteSemigroup(std::vector<std::vector<element_id>> table,
                                 std::vector<std::string> names,
                                 std::string name)
    : _order(static_cast<int>(table.size())),
      _table(),
      _names(default_names(static_cast<int>(table.size()), std::move(names))),
      _name(std::move(name)) {
  if (_order == 0) {
    throw PreconditionError("OutOfRangeEntry", "the table is empty");
  }
  _table.reserve(static_cast<std::size_t>(_order) * _order);
  for (int a = 0; a < _order; ++a) {
    if (static_cast<int>(table[a].size()) != _order) {
      throw PreconditionError("OutOfRangeEntry",
                              "row " + std::to_string(a) + " has "
                                  + std::to_string(table[a].size())
                                  + " entries, expected "
                                  + std::to_string(_order));
    }
    for (int b = 0; b < _order; ++b) {
      element_id const v = table[a][b];
      if (v < 0 || v >= _order) {
        throw PreconditionError("OutOfRangeEntry",
                                "entry (" + std::to_string(a) + ", "
                                    + std::to_string(b) + ") = "
                                    + std::to_string(v)
                                    + " is outside [0, "
                                    + std::to_string(_order) + ")");
      }
      _table.push_back(v);
    }
  }
  if (static_cast<int>(_names.size()) != _order) {
    throw PreconditionError("OutOfRangeEntry",
                            "expected " + std::to_string(_order)
                                + " element names, got "
                                + std::to_string(_names.size()));
  }
  {
    std::unordered_set<std::string> seen(_names.begin(), _names.end());
    if (static_cast<int>(seen.size()) != _order) {
      throw PreconditionError("OutOfRangeEntry",
                              "element names are not distinct");
    }
  }
  for (int i = 0; i < _order; ++i) {
    for (int j = 0; j < _order; ++j) {
      for (int k = 0; k < _order; ++k) {
        if (product(product(i, j), k) != product(i, product(j, k))) {
          throw NotAssociativeError(i, j, k);
        }
      }
    }
  }
  for (int e = 0; e < _order; ++e) {
    bool ident = true;
    bool zero = true;
    for (int a = 0; a < _order; ++a) {
      ident = ident && product(e, a) == a && product(a, e) == a;
      zero = zero && product(e, a) == e && product(a, e) == e;
    }
    if (ident) {
      _identity = e;
    }
    if (zero) {
      _zero = e;
    }
  }
}

element_id FiniteSemigroup::product_of(Word const& w) const {
  if (w.empty()) {
    throw PreconditionError("PreconditionViolated",
                            "cannot take the product of the empty word");
  }
  element_id acc = w.front();
  for (std::size_t i = 1; i < w.size(); ++i) {
    acc = product(acc, w[i]);
  }
  return acc;
}

element_id FiniteSemigroup::power(element_id a, int n) const {
  element_id acc = a;
  for (int i = 1; i < n; ++i) {
    acc = product(acc, a);
  }
  return acc;
}

element_id FiniteSemigroup::element_by_name(std::string const& name) const {
  auto const it = std::find(_names.begin(), _names.end(), name);
  return it == _names.end() ? UNDEFINED
                            : static_cast<element_id>(it - _names.begin());
}

std::vector<std::vector<element_id>> FiniteSemigroup::rows() const {
  std::vector<std::vector<element_id>> out(static_cast<std::size_t>(_order));
  for (int a = 0; a < _order; ++a) {
    out[a].assign(_table.begin() + static_cast<std::ptrdiff_t>(a) * _order,
                  _table.begin() + static_cast<std::ptrdiff_t>(a + 1) * _order);
  }
  return out;
}

bool is_ideal(FiniteSemigroup const& s, std::vector<element_id> const& subset) {
  if (subset.empty()) {
    return false;
  }
  std::vector<char> in(static_cast<std::size_t>(s.order()), 0);
  for (element_id x : subset) {
    in.at(static_cast<std::size_t>(x)) = 1;
  }
  for (element_id x : subset) {
    for (element_id a = 0; a < s.order(); ++a) {
      if (!in[static_cast<std::size_t>(s.product(a, x))]
          || !in[static_cast<std::size_t>(s.product(x, a))]) {
        return false;
      }
    }
  }
  return true;
}

void validate_ideal(FiniteSemigroup const& s,
                    std::vector<element_id> const& subset) {
  if (subset.empty()) {
    throw PreconditionError("PreconditionViolated",
                            "an ideal must be nonempty");
  }
  std::vector<char> in(static_cast<std::size_t>(s.order()), 0);
  for (element_id x : subset) {
    if (x < 0 || x >= s.order()) {
      throw PreconditionError("OutOfRangeEntry",
                              "element id " + std::to_string(x)
                                  + " is outside [0, "
                                  + std::to_string(s.order()) + ")");
    }
    in[static_cast<std::size_t>(x)] = 1;
  }
  for (element_id x : subset) {
    for (element_id a = 0; a < s.order(); ++a) {
      if (!in[static_cast<std::size_t>(s.product(a, x))]) {
        throw NotAnIdealError(a, x);
      }
      if (!in[static_cast<std::size_t>(s.product(x, a))]) {
        throw NotAnIdealError(x, a);
      }
    }
  }
}

FiniteSemigroup adjoin_identity(FiniteSemigroup const& s) {
  if (s.is_monoid()) {
    return s;
  }
  int const n = s.order();
  auto table = s.rows();
  for (int a = 0; a < n; ++a) {
    table[a].push_back(a);  // a * 1 = a
  }
  Word last(static_cast<std::size_t>(n + 1));
  for (int a = 0; a <= n; ++a) {
    last[static_cast<std::size_t>(a)] = a;  // 1 * a = a, 1 * 1 = 1
  }
  table.push_back(last);
  auto names = s.names();
  names.push_back(uniquify("1", names));
  return FiniteSemigroup(std::move(table), std::move(names), s.name());
}

namespace {

FiniteSemigroup with_fresh_zero(FiniteSemigroup const& s) {
  int const n = s.order();
  auto table = s.rows();
  for (int a = 0; a < n; ++a) {
    table[a].push_back(n);  // a * 0 = 0
  }
  table.emplace_back(static_cast<std::size_t>(n + 1), n);  // 0 * _ = 0
  auto names = s.names();
  names.push_back(uniquify("0", names));
  return FiniteSemigroup(std::move(table), std::move(names), s.name());
}

}  // namespace

FiniteSemigroup adjoin_zero(FiniteSemigroup const& s) {
  if (s.has_zero()) {
    return s;
  }
  return with_fresh_zero(s);
}

FiniteSemigroup adjoin_zero_always(FiniteSemigroup const& s) {
  return with_fresh_zero(s);
}

std::optional<int> aperiodicity_index(FiniteSemigroup const& s) {
  int index = 1;
  for (element_id a = 0; a < s.order(); ++a) {
    // Walk the power sequence a, a^2, ... until it repeats; at most order
    // steps.  The element is aperiodic iff the eventual cycle is a fixed
    // point, and its index is the least n with a^n = a^(n+1).
    element_id p = a;
    int n = 1;
    bool settled = false;
    for (int step = 0; step <= s.order(); ++step) {
      element_id const next = s.product(p, a);
      if (next == p) {
        settled = true;
        break;
      }
      p = next;
      ++n;
    }
    if (!settled) {
      return std::nullopt;  // the power sequence cycles with period >= 2
    }
    index = std::max(index, n);
  }
  return index;
}

bool is_aperiodic(FiniteSemigroup const& s) {
  return aperiodicity_index(s).has_value();
}

bool is_idempotent_semigroup(FiniteSemigroup const& s) {
  for (element_id a = 0; a < s.order(); ++a) {
    if (!s.is_idempotent(a)) {
      return false;
    }
  }
  return true;
}

std::optional<int> nilpotency_index(FiniteSemigroup const& s) {
  if (!s.has_zero()) {
    throw PreconditionError("NoZero",
                            "nilpotency index requires a semigroup with zero");
  }
  element_id const z = *s.zero();
  // power_set holds S^k as a sorted set of elements; S^1 = S.
  std::set<element_id> power_set;
  for (element_id a = 0; a < s.order(); ++a) {
    power_set.insert(a);
  }
  for (int k = 1; k <= s.order() + 1; ++k) {
    if (power_set.size() == 1 && *power_set.begin() == z) {
      return k;  // S^k = {0}, and k is least since the chain descends
    }
    std::set<element_id> next;
    for (element_id a = 0; a < s.order(); ++a) {
      for (element_id b : power_set) {
        next.insert(s.product(a, b));
      }
    }
    if (next == power_set) {
      return std::nullopt;  // chain stabilised above {0}
    }
    power_set = std::move(next);
  }
  return std::nullopt;
}

FiniteSemigroup direct_product(FiniteSemigroup const& s,
                               FiniteSemigroup const& t) {
  int const n = s.order();
  int const m = t.order();
  std::vector<std::vector<element_id>> table(
      static_cast<std::size_t>(n) * m,
      std::vector<element_id>(static_cast<std::size_t>(n) * m));
  std::vector<std::string> names(static_cast<std::size_t>(n) * m);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < m; ++b) {
      names[static_cast<std::size_t>(a) * m + b] =
          "(" + s.name_of(a) + "," + t.name_of(b) + ")";
      for (int c = 0; c < n; ++c) {
        for (int d = 0; d < m; ++d) {
          table[static_cast<std::size_t>(a) * m + b]
               [static_cast<std::size_t>(c) * m + d] =
                   s.product(a, c) * m + t.product(b, d);
        }
      }
    }
  }
  std::string name;
  if (!s.name().empty() && !t.name().empty()) {
    name = s.name() + "x" + t.name();
  }
  return FiniteSemigroup(std::move(table), std::move(names), std::move(name));
}

ReesQuotient rees_quotient(FiniteSemigroup const& s,
                           std::vector<element_id> const& ideal) {
  validate_ideal(s, ideal);
  std::vector<char> in(static_cast<std::size_t>(s.order()), 0);
  for (element_id x : ideal) {
    in[static_cast<std::size_t>(x)] = 1;
  }
  ReesQuotient out;
  out.map.assign(static_cast<std::size_t>(s.order()), UNDEFINED);
  std::vector<element_id> kept;  // original ids surviving, ascending
  for (element_id a = 0; a < s.order(); ++a) {
    if (!in[static_cast<std::size_t>(a)]) {
      out.map[static_cast<std::size_t>(a)] =
          static_cast<element_id>(kept.size());
      kept.push_back(a);
    }
  }
  element_id const zero = static_cast<element_id>(kept.size());
  out.zero = zero;
  for (element_id a = 0; a < s.order(); ++a) {
    if (in[static_cast<std::size_t>(a)]) {
      out.map[static_cast<std::size_t>(a)] = zero;
    }
  }
  int const q = zero + 1;
  std::vector<std::vector<element_id>> table(
      static_cast<std::size_t>(q), std::vector<element_id>(q, zero));
  for (std::size_t i = 0; i < kept.size(); ++i) {
    for (std::size_t j = 0; j < kept.size(); ++j) {
      table[i][j] = out.map[static_cast<std::size_t>(
          s.product(kept[i], kept[j]))];
    }
  }
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(q));
  for (element_id a : kept) {
    names.push_back(s.name_of(a));
  }
  names.push_back(uniquify("0", names));
  out.quotient = FiniteSemigroup(std::move(table), std::move(names),
                                 s.name().empty() ? "" : s.name() + "/I");
  return out;
}

FiniteSemigroup monogenic(int m, int p) {
  if (m < 1 || p < 1) {
    throw PreconditionError("PreconditionViolated",
                            "monogenic(m, p) needs m >= 1 and p >= 1");
  }
  int const n = m + p - 1;  // elements x^1 .. x^n
  auto reduce = [&](int e) {  // exponent of x^a * x^b, folded into [1, n]
    return e <= n ? e : m + (e - m) % p;
  };
  std::vector<std::vector<element_id>> table(
      static_cast<std::size_t>(n), std::vector<element_id>(n));
  std::vector<std::string> names(static_cast<std::size_t>(n));
  for (int a = 1; a <= n; ++a) {
    names[static_cast<std::size_t>(a - 1)] =
        a == 1 ? "x" : "x" + std::to_string(a);
    for (int b = 1; b <= n; ++b) {
      table[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b - 1)] =
          reduce(a + b) - 1;
    }
  }
  return FiniteSemigroup(std::move(table), std::move(names),
                         "C" + std::to_string(m) + "_" + std::to_string(p));
}

}  // namespace cayley
