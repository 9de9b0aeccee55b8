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

#include "cayley/enumerate.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

namespace cayley {

namespace {

// Hash-bucketed lookup of canonical elements by value.
class CanonIndex {
 public:
  int find(std::vector<CanonicalElement> const& elements,
           CanonicalElement const& c) const {
    auto const it = _buckets.find(c.hash());
    if (it == _buckets.end()) {
      return -1;
    }
    for (int const i : it->second) {
      if (elements[static_cast<std::size_t>(i)] == c) {
        return i;
      }
    }
    return -1;
  }

  void insert(CanonicalElement const& c, int index) {
    _buckets[c.hash()].push_back(index);
  }

 private:
  std::unordered_map<std::uint64_t, std::vector<int>> _buckets;
};

struct Closure {
  EnumResult result;
  CanonIndex index;
  std::vector<int> parent;   // per element: the element it left-extends
  std::vector<int> via_gen;  // per element: the extending generator (base id)
};

// Breadth-first closure under composition with the generator machines on the
// left.  Candidates are scanned with the generator ascending outermost and
// the frontier in discovery order, which makes every recorded witness the
// lexicographically least among the shortest words for its element.
Closure close_under_composition(ActionPtr const& act, EnumOptions const& opts) {
  Closure cl;
  EnumResult& e = cl.result;
  e.action = act;
  e.max_elements = opts.max_elements;
  e.status = EnumStatus::complete;

  std::vector<element_id> gens = opts.generators;
  if (gens.empty()) {
    gens.resize(static_cast<std::size_t>(act->base().order()));
    std::iota(gens.begin(), gens.end(), 0);
  } else {
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  }

  std::vector<CanonicalElement> gen_canon;
  gen_canon.reserve(gens.size());
  for (element_id const s : gens) {
    gen_canon.push_back(canonicalize(act, {s}, opts.state_budget));
  }

  e.generator_map.assign(static_cast<std::size_t>(act->base().order()), -1);
  std::vector<int> frontier;
  auto add = [&](CanonicalElement c, int parent, int via) -> int {
    int const found = cl.index.find(e.elements, c);
    if (found >= 0) {
      return found;
    }
    int const idx = static_cast<int>(e.elements.size());
    cl.index.insert(c, idx);
    e.witnesses.push_back(c.witness());
    e.elements.push_back(std::move(c));
    cl.parent.push_back(parent);
    cl.via_gen.push_back(via);
    frontier.push_back(idx);
    return idx;
  };

  bool over = false;
  for (std::size_t gi = 0; gi < gens.size() && !over; ++gi) {
    int const idx = add(gen_canon[gi], -1, -1);
    e.generator_map[static_cast<std::size_t>(gens[gi])] = idx;
    over = e.elements.size() > opts.max_elements;
  }
  e.closure_depth = e.elements.empty() ? 0 : 1;

  std::vector<int> level = std::move(frontier);
  frontier.clear();
  int depth = 1;
  while (!over && !level.empty()) {
    ++depth;
    for (std::size_t gi = 0; gi < gens.size() && !over; ++gi) {
      for (std::size_t fi = 0; fi < level.size() && !over; ++fi) {
        CanonicalElement c =
            compose(gen_canon[gi],
                    e.elements[static_cast<std::size_t>(level[fi])],
                    opts.state_budget);
        std::size_t const before = e.elements.size();
        add(std::move(c), level[fi], gens[gi]);
        if (e.elements.size() > before) {
          e.closure_depth = depth;
          over = e.elements.size() > opts.max_elements;
        }
      }
    }
    level = std::move(frontier);
    frontier.clear();
  }
  if (over) {
    e.status = EnumStatus::exceeded;
  }
  return cl;
}

// Composition table of a complete closure.  Only the columns of the
// generator elements need real machine compositions: every later element
// decomposes as f_j = f_s o f_d, so x o f_j = (x o f_s) o f_d reduces to two
// table lookups once shorter columns are known.
void fill_table(Closure& cl, EnumOptions const& opts) {
  EnumResult& e = cl.result;
  int const n = static_cast<int>(e.elements.size());
  e.table.assign(static_cast<std::size_t>(n), std::vector<int>(n, -1));
  for (int j = 0; j < n; ++j) {
    if (cl.parent[static_cast<std::size_t>(j)] < 0) {
      for (int i = 0; i < n; ++i) {
        CanonicalElement const c =
            compose(e.elements[static_cast<std::size_t>(i)],
                    e.elements[static_cast<std::size_t>(j)],
                    opts.state_budget);
        int const k = cl.index.find(e.elements, c);
        if (k < 0) {
          throw PreconditionError("NotClosed",
                                  "composition left the enumerated set");
        }
        e.table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = k;
      }
    } else {
      int const d = cl.parent[static_cast<std::size_t>(j)];
      int const g = e.generator_map[static_cast<std::size_t>(
          cl.via_gen[static_cast<std::size_t>(j)])];
      for (int i = 0; i < n; ++i) {
        int const ig =
            e.table[static_cast<std::size_t>(i)][static_cast<std::size_t>(g)];
        e.table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
            e.table[static_cast<std::size_t>(ig)][static_cast<std::size_t>(d)];
      }
    }
  }
}

}  // namespace

EnumResult enumerate(ActionPtr const& act, EnumOptions const& opts) {
  Closure cl = close_under_composition(act, opts);
  if (cl.result.status == EnumStatus::complete) {
    fill_table(cl, opts);
  }
  return cl.result;
}

int EnumResult::index_of(CanonicalElement const& f) const {
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (elements[i].hash() == f.hash() && elements[i] == f) {
      return static_cast<int>(i);
    }
  }
  return -1;
}

namespace {

std::string witness_name(FiniteSemigroup const& base, Word const& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0) {
      out += "\xc2\xb7";  // middle dot, keeps names free of commas
    }
    out += base.name_of(w[i]);
  }
  return out;
}

}  // namespace

FiniteSemigroup EnumResult::to_semigroup(std::string name) const {
  if (!complete()) {
    throw IncompleteEnumerationError(
        "cannot package a truncated enumeration as a semigroup");
  }
  std::vector<std::vector<element_id>> t(elements.size());
  for (std::size_t i = 0; i < elements.size(); ++i) {
    t[i].assign(table[i].begin(), table[i].end());
  }
  std::vector<std::string> names;
  names.reserve(elements.size());
  for (auto const& w : witnesses) {
    names.push_back(witness_name(action->base(), w));
  }
  return FiniteSemigroup(std::move(t), std::move(names), std::move(name));
}

std::optional<int> cayley_aperiodicity_index(EnumResult const& e) {
  if (!e.complete()) {
    throw IncompleteEnumerationError(
        "aperiodicity index requires a complete enumeration");
  }
  int const n = static_cast<int>(e.elements.size());
  int index = 1;
  for (int a = 0; a < n; ++a) {
    int p = a;
    int k = 1;
    bool settled = false;
    for (int step = 0; step <= n; ++step) {
      int const next =
          e.table[static_cast<std::size_t>(p)][static_cast<std::size_t>(a)];
      if (next == p) {
        settled = true;
        break;
      }
      p = next;
      ++k;
    }
    if (!settled) {
      return std::nullopt;
    }
    index = std::max(index, k);
  }
  return index;
}

namespace {

void require_complete_full(EnumResult const& e, std::string const& who) {
  if (!e.complete()) {
    throw IncompleteEnumerationError(who
                                     + " requires complete enumerations");
  }
  if (e.action->mode() != ActionMode::full) {
    throw PreconditionError("PreconditionViolated",
                            who + " requires full-mode enumerations");
  }
}

}  // namespace

MorphismReport induced_morphism(EnumResult const& es, EnumResult const& et,
                                std::vector<element_id> const& f) {
  require_complete_full(es, "induced_morphism");
  require_complete_full(et, "induced_morphism");
  FiniteSemigroup const& s = es.action->base();
  FiniteSemigroup const& t = et.action->base();
  if (static_cast<int>(f.size()) != s.order()) {
    throw PreconditionError("NotAMorphism",
                            "the base map must cover every element of the "
                            "source");
  }
  std::vector<char> hit(static_cast<std::size_t>(t.order()), 0);
  for (element_id a = 0; a < s.order(); ++a) {
    element_id const fa = f[static_cast<std::size_t>(a)];
    if (fa < 0 || fa >= t.order()) {
      throw PreconditionError("NotAMorphism", "image out of range");
    }
    hit[static_cast<std::size_t>(fa)] = 1;
    for (element_id b = 0; b < s.order(); ++b) {
      if (f[static_cast<std::size_t>(s.product(a, b))]
          != t.product(fa, f[static_cast<std::size_t>(b)])) {
        throw PreconditionError("NotAMorphism",
                                "the base map is not multiplicative at ("
                                    + std::to_string(a) + ", "
                                    + std::to_string(b) + ")");
      }
    }
  }
  if (std::find(hit.begin(), hit.end(), 0) != hit.end()) {
    throw PreconditionError("NotAMorphism", "the base map is not surjective");
  }

  MorphismReport rep;
  int const n = static_cast<int>(es.elements.size());
  rep.element_map.assign(static_cast<std::size_t>(n), -1);
  // Image of each element, computed from its witness; this certifies that
  // the induced map is well defined before the table checks run.
  for (int i = 0; i < n; ++i) {
    Word w = es.witnesses[static_cast<std::size_t>(i)];
    for (element_id& a : w) {
      a = f[static_cast<std::size_t>(a)];
    }
    int const img = et.index_of(canonicalize(et.action, w));
    if (img < 0) {
      rep.detail = "image of element " + std::to_string(i)
                   + " is missing from the target enumeration";
      return rep;
    }
    rep.element_map[static_cast<std::size_t>(i)] = img;
  }
  for (element_id a = 0; a < s.order(); ++a) {
    if (rep.element_map[static_cast<std::size_t>(
            es.generator_map[static_cast<std::size_t>(a)])]
        != et.generator_map[static_cast<std::size_t>(
            f[static_cast<std::size_t>(a)])]) {
      rep.detail = "generator " + s.name_of(a)
                   + " does not map to the generator of its image";
      return rep;
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      int const lhs = rep.element_map[static_cast<std::size_t>(
          es.table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)])];
      int const rhs =
          et.table[static_cast<std::size_t>(
              rep.element_map[static_cast<std::size_t>(i)])]
                  [static_cast<std::size_t>(
                      rep.element_map[static_cast<std::size_t>(j)])];
      if (lhs != rhs) {
        rep.detail = "not multiplicative at element pair ("
                     + std::to_string(i) + ", " + std::to_string(j) + ")";
        return rep;
      }
    }
  }
  std::vector<char> onto(et.elements.size(), 0);
  for (int const img : rep.element_map) {
    onto[static_cast<std::size_t>(img)] = 1;
  }
  if (std::find(onto.begin(), onto.end(), 0) != onto.end()) {
    rep.detail = "the induced map is not onto the target enumeration";
    return rep;
  }
  rep.ok = true;
  return rep;
}

MorphismReport sub_division_check(FiniteSemigroup const& s,
                                  std::vector<element_id> const& sub,
                                  EnumOptions const& opts) {
  std::vector<element_id> elems = sub;
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  if (elems.empty()) {
    throw PreconditionError("NotClosed", "the subsemigroup is empty");
  }
  std::vector<element_id> sub_id_of(static_cast<std::size_t>(s.order()),
                                    UNDEFINED);
  for (std::size_t i = 0; i < elems.size(); ++i) {
    sub_id_of[static_cast<std::size_t>(elems[i])] =
        static_cast<element_id>(i);
  }
  std::vector<std::vector<element_id>> table(elems.size(),
                                             std::vector<element_id>(
                                                 elems.size()));
  std::vector<std::string> names;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    names.push_back(s.name_of(elems[i]));
    for (std::size_t j = 0; j < elems.size(); ++j) {
      element_id const p = s.product(elems[i], elems[j]);
      if (sub_id_of[static_cast<std::size_t>(p)] == UNDEFINED) {
        throw PreconditionError("NotClosed",
                                s.name_of(elems[i]) + " * "
                                    + s.name_of(elems[j])
                                    + " leaves the subsemigroup");
      }
      table[i][j] = sub_id_of[static_cast<std::size_t>(p)];
    }
  }
  FiniteSemigroup const t(std::move(table), std::move(names),
                          s.name().empty() ? "" : s.name() + ".sub");

  EnumOptions sub_opts = opts;
  sub_opts.generators = elems;
  EnumResult const ec = enumerate(Action::full(s), sub_opts);
  EnumOptions t_opts = opts;
  t_opts.generators.clear();
  EnumResult const et = enumerate(Action::full(t), t_opts);
  if (!ec.complete() || !et.complete()) {
    throw IncompleteEnumerationError(
        "sub_division_check requires complete enumerations");
  }

  MorphismReport rep;
  int const n = static_cast<int>(ec.elements.size());
  rep.element_map.assign(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < n; ++i) {
    Word w = ec.witnesses[static_cast<std::size_t>(i)];
    for (element_id& a : w) {
      a = sub_id_of[static_cast<std::size_t>(a)];  // restriction to T letters
    }
    int const img = et.index_of(canonicalize(et.action, w));
    if (img < 0) {
      rep.detail = "restriction of element " + std::to_string(i)
                   + " is not a composition over the subsemigroup";
      return rep;
    }
    rep.element_map[static_cast<std::size_t>(i)] = img;
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (rep.element_map[static_cast<std::size_t>(
              ec.table[static_cast<std::size_t>(i)][static_cast<std::size_t>(
                  j)])]
          != et.table[static_cast<std::size_t>(
                 rep.element_map[static_cast<std::size_t>(i)])]
                     [static_cast<std::size_t>(
                         rep.element_map[static_cast<std::size_t>(j)])]) {
        rep.detail = "restriction is not multiplicative at ("
                     + std::to_string(i) + ", " + std::to_string(j) + ")";
        return rep;
      }
    }
  }
  std::vector<char> onto(et.elements.size(), 0);
  for (int const img : rep.element_map) {
    onto[static_cast<std::size_t>(img)] = 1;
  }
  if (std::find(onto.begin(), onto.end(), 0) != onto.end()) {
    rep.detail = "restriction does not cover the whole composition "
                 "semigroup of the subsemigroup";
    return rep;
  }
  rep.ok = true;
  return rep;
}

MorphismReport product_embedding(FiniteSemigroup const& s,
                                 FiniteSemigroup const& t,
                                 EnumOptions const& opts) {
  FiniteSemigroup const p = direct_product(s, t);
  EnumResult const ep = enumerate(Action::full(p), opts);
  EnumResult const es = enumerate(Action::full(s), opts);
  EnumResult const et = enumerate(Action::full(t), opts);
  if (!ep.complete() || !es.complete() || !et.complete()) {
    throw IncompleteEnumerationError(
        "product_embedding requires complete enumerations");
  }

  MorphismReport rep;
  int const n = static_cast<int>(ep.elements.size());
  int const m = static_cast<int>(et.elements.size());
  rep.element_map.assign(static_cast<std::size_t>(n), -1);
  std::vector<std::pair<int, int>> proj(static_cast<std::size_t>(n));
  std::unordered_set<std::uint64_t> seen;
  for (int i = 0; i < n; ++i) {
    Word ws, wt;
    for (element_id const a : ep.witnesses[static_cast<std::size_t>(i)]) {
      ws.push_back(a / t.order());
      wt.push_back(a % t.order());
    }
    int const is = es.index_of(canonicalize(es.action, ws));
    int const it = et.index_of(canonicalize(et.action, wt));
    if (is < 0 || it < 0) {
      rep.detail = "projection of element " + std::to_string(i)
                   + " is missing from a factor enumeration";
      return rep;
    }
    proj[static_cast<std::size_t>(i)] = {is, it};
    rep.element_map[static_cast<std::size_t>(i)] = is * m + it;
    if (!seen
             .insert(static_cast<std::uint64_t>(
                         static_cast<std::uint32_t>(is))
                         << 32
                     | static_cast<std::uint32_t>(it))
             .second) {
      rep.detail = "projection pair repeats at element " + std::to_string(i)
                   + ": the map is not injective";
      return rep;
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      int const k =
          ep.table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      auto const& [is_i, it_i] = proj[static_cast<std::size_t>(i)];
      auto const& [is_j, it_j] = proj[static_cast<std::size_t>(j)];
      if (proj[static_cast<std::size_t>(k)].first
              != es.table[static_cast<std::size_t>(is_i)]
                         [static_cast<std::size_t>(is_j)]
          || proj[static_cast<std::size_t>(k)].second
                 != et.table[static_cast<std::size_t>(it_i)]
                            [static_cast<std::size_t>(it_j)]) {
        rep.detail = "projection is not multiplicative at ("
                     + std::to_string(i) + ", " + std::to_string(j) + ")";
        return rep;
      }
    }
  }
  rep.ok = true;
  return rep;
}

}  // namespace cayley
