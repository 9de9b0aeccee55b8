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

#include "cayley/expansions.hpp"

#include <algorithm>
#include <map>

#include "cayley/machine.hpp"

namespace cayley {

namespace {

void require_mem_capacity(FiniteSemigroup const& s) {
  if (s.order() > 64) {
    throw PreconditionError("BoundExceeded",
                            "memory bitsets support order <= 64, got "
                                + std::to_string(s.order()));
  }
}

}  // namespace

MemElement mem_mul(FiniteSemigroup const& s, MemElement const& x,
                   MemElement const& y) {
  require_mem_capacity(s);
  MemElement out;
  out.element = s.product(x.element, y.element);
  std::uint64_t mem = y.memory;
  mem |= 1ULL << y.element;
  for (element_id a = 0; a < s.order(); ++a) {
    if (x.memory & (1ULL << a)) {
      mem |= 1ULL << s.product(a, y.element);
    }
  }
  out.memory = mem;
  return out;
}

MemElement phi_mem(FiniteSemigroup const& s, Word const& gen_word) {
  require_mem_capacity(s);
  if (gen_word.empty()) {
    throw PreconditionError("PreconditionViolated",
                            "a generator word must be nonempty");
  }
  MemElement acc{gen_word.back(), 0};
  for (std::size_t i = gen_word.size() - 1; i-- > 0;) {
    acc = mem_mul(s, MemElement{gen_word[i], 0}, acc);
  }
  return acc;
}

namespace {

// Walk the power chain of x in mem(S).  Returns the least k with
// x^k = x^(k+1), or nullopt if the chain cycles.
std::optional<int> mem_power_index(FiniteSemigroup const& s,
                                   MemElement const& x) {
  std::vector<MemElement> seen{x};
  MemElement p = x;
  for (;;) {
    MemElement const next = mem_mul(s, p, x);
    if (next == p) {
      return static_cast<int>(seen.size());
    }
    if (std::find(seen.begin(), seen.end(), next) != seen.end()) {
      return std::nullopt;  // a cycle of period >= 2
    }
    seen.push_back(next);
    p = next;
  }
}

}  // namespace

std::optional<int> mem_aperiodicity_index(FiniteSemigroup const& s) {
  require_mem_capacity(s);
  if (s.order() > 16) {
    throw PreconditionError("BoundExceeded",
                            "mem aperiodicity index enumerates all of "
                            "mem(S); supported for order <= 16");
  }
  int index = 1;
  std::uint64_t const masks = 1ULL << s.order();
  for (element_id e = 0; e < s.order(); ++e) {
    for (std::uint64_t mem = 0; mem < masks; ++mem) {
      auto const k = mem_power_index(s, MemElement{e, mem});
      if (!k) {
        return std::nullopt;
      }
      index = std::max(index, *k);
    }
  }
  return index;
}

std::uint64_t mem_order(FiniteSemigroup const& s) {
  require_mem_capacity(s);
  if (s.order() > 57) {
    throw PreconditionError("BoundExceeded", "mem order would overflow");
  }
  return static_cast<std::uint64_t>(s.order()) << s.order();
}

ChainElement rhodes_reduce(FiniteSemigroup const& s,
                           std::vector<element_id> const& entries) {
  if (entries.empty()) {
    throw NotAChainError("a chain must have at least one entry");
  }
  for (element_id const c : entries) {
    if (c < 0 || c >= s.order()) {
      throw NotAChainError("entry " + std::to_string(c)
                           + " is outside [0, " + std::to_string(s.order())
                           + ")");
    }
  }
  for (std::size_t i = 1; i < entries.size(); ++i) {
    bool reachable = false;
    for (element_id x = 0; !reachable && x < s.order(); ++x) {
      reachable = s.product(entries[i - 1], x) == entries[i];
    }
    if (!reachable) {
      throw NotAChainError("entry " + s.name_of(entries[i])
                           + " does not extend " + s.name_of(entries[i - 1])
                           + " by a right multiplication");
    }
  }

  GreenStructure const g = green(s);
  ChainElement out;
  out.entries = entries;
  // Leftmost applicable deletion first; the result does not depend on the
  // order (verified property), this just makes the computation canonical.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 1; i < out.entries.size(); ++i) {
      if (g.r_class_of[static_cast<std::size_t>(out.entries[i])]
          == g.r_class_of[static_cast<std::size_t>(out.entries[i - 1])]) {
        out.entries.erase(out.entries.begin()
                          + static_cast<std::ptrdiff_t>(i - 1));
        changed = true;
        break;
      }
    }
  }
  return out;
}

ChainElement rhodes_mul(FiniteSemigroup const& s, ChainElement const& u,
                        ChainElement const& v) {
  std::vector<element_id> entries = u.entries;
  element_id const last = u.entries.back();
  for (element_id const d : v.entries) {
    entries.push_back(s.product(last, d));
  }
  return rhodes_reduce(s, entries);
}

DivisionReport division_check(FiniteSemigroup const& s,
                              std::vector<element_id> const& ideal,
                              int max_len) {
  if (!s.is_monoid()) {
    throw PreconditionError("PreconditionViolated",
                            "division_check requires an identity");
  }
  if (!s.has_zero()) {
    throw PreconditionError("NoZero", "division_check requires a zero");
  }
  if (!is_aperiodic(s)) {
    throw PreconditionError("NotAperiodic",
                            "division_check requires an aperiodic semigroup");
  }
  std::vector<element_id> elems = ideal;
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  validate_ideal(s, elems);
  element_id const z = *s.zero();
  std::vector<element_id> j_part;
  for (element_id const x : elems) {
    if (x != z) {
      j_part.push_back(x);
    }
  }
  if (elems.size() != j_part.size() + 1) {
    throw PreconditionError("PreconditionViolated",
                            "the ideal must contain the zero");
  }
  if (j_part.empty()) {
    throw PreconditionError("PreconditionViolated",
                            "the ideal must be strictly larger than {0}");
  }
  {
    GreenStructure const g = green(s);
    int const jc = g.j_class_of[static_cast<std::size_t>(j_part.front())];
    if (g.j_classes[static_cast<std::size_t>(jc)] != j_part) {
      throw PreconditionError("PreconditionViolated",
                              "the ideal minus the zero must be a single "
                              "J-class (a 0-minimal ideal)");
    }
    if (!g.j_regular[static_cast<std::size_t>(jc)]) {
      throw PreconditionError("PreconditionViolated",
                              "the 0-minimal ideal must be regular");
    }
  }

  ActionPtr const act = Action::on_ideal(s, elems);
  DivisionReport rep;
  rep.holds = true;

  struct ClassData {
    CanonicalElement canon;
    Word word;
  };
  std::map<MemElement, ClassData> classes;

  Word w;
  int const n = s.order();
  for (int len = 1; len <= max_len && rep.holds; ++len) {
    w.assign(static_cast<std::size_t>(len), 0);
    for (;;) {
      ++rep.words_checked;
      MemElement const m = phi_mem(s, w);
      CanonicalElement c = canonicalize(act, w);
      auto const it = classes.find(m);
      if (it == classes.end()) {
        classes.emplace(m, ClassData{std::move(c), w});
      } else if (!(it->second.canon == c)) {
        rep.holds = false;
        rep.counterexample_u = it->second.word;
        rep.counterexample_v = w;
        rep.detail = "equal memory values with different compositions";
        break;
      }
      // lexicographic odometer over base ids
      int pos = len - 1;
      while (pos >= 0 && w[static_cast<std::size_t>(pos)] == n - 1) {
        w[static_cast<std::size_t>(pos)] = 0;
        --pos;
      }
      if (pos < 0) {
        break;
      }
      ++w[static_cast<std::size_t>(pos)];
    }
  }
  rep.classes = classes.size();
  return rep;
}

}  // namespace cayley
