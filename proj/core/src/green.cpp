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

#include "cayley/green.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace cayley {

namespace {

using Mask = std::vector<char>;

// Principal right ideal xS^1 = {x} + xS as a membership mask.
Mask right_ideal(FiniteSemigroup const& s, element_id x) {
  Mask m(static_cast<std::size_t>(s.order()), 0);
  m[static_cast<std::size_t>(x)] = 1;
  for (element_id a = 0; a < s.order(); ++a) {
    m[static_cast<std::size_t>(s.product(x, a))] = 1;
  }
  return m;
}

Mask left_ideal(FiniteSemigroup const& s, element_id x) {
  Mask m(static_cast<std::size_t>(s.order()), 0);
  m[static_cast<std::size_t>(x)] = 1;
  for (element_id a = 0; a < s.order(); ++a) {
    m[static_cast<std::size_t>(s.product(a, x))] = 1;
  }
  return m;
}

// Principal two-sided ideal S^1 x S^1 = {x} + Sx + xS + SxS.
Mask two_sided_ideal(FiniteSemigroup const& s, element_id x) {
  Mask m(static_cast<std::size_t>(s.order()), 0);
  m[static_cast<std::size_t>(x)] = 1;
  for (element_id a = 0; a < s.order(); ++a) {
    m[static_cast<std::size_t>(s.product(x, a))] = 1;
    m[static_cast<std::size_t>(s.product(a, x))] = 1;
    for (element_id b = 0; b < s.order(); ++b) {
      m[static_cast<std::size_t>(s.product(s.product(a, x), b))] = 1;
    }
  }
  return m;
}

// Group elements by their ideal mask; class indices follow the least element
// of each class.
void classify(std::vector<Mask> const& ideal, std::vector<int>& class_of,
              std::vector<std::vector<element_id>>& classes) {
  int const n = static_cast<int>(ideal.size());
  class_of.assign(static_cast<std::size_t>(n), -1);
  classes.clear();
  std::map<Mask, int> seen;
  for (element_id a = 0; a < n; ++a) {
    auto const [it, fresh] =
        seen.emplace(ideal[static_cast<std::size_t>(a)],
                     static_cast<int>(classes.size()));
    if (fresh) {
      classes.emplace_back();
    }
    class_of[static_cast<std::size_t>(a)] = it->second;
    classes[static_cast<std::size_t>(it->second)].push_back(a);
  }
}

// Strict containment of masks.
bool strictly_below(Mask const& x, Mask const& y) {
  bool proper = false;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] && !y[i]) {
      return false;
    }
    if (y[i] && !x[i]) {
      proper = true;
    }
  }
  return proper;
}

}  // namespace

GreenStructure green(FiniteSemigroup const& s) {
  int const n = s.order();
  std::vector<Mask> r_ideal, l_ideal, j_ideal;
  r_ideal.reserve(static_cast<std::size_t>(n));
  l_ideal.reserve(static_cast<std::size_t>(n));
  j_ideal.reserve(static_cast<std::size_t>(n));
  for (element_id a = 0; a < n; ++a) {
    r_ideal.push_back(right_ideal(s, a));
    l_ideal.push_back(left_ideal(s, a));
    j_ideal.push_back(two_sided_ideal(s, a));
  }

  GreenStructure g;
  classify(r_ideal, g.r_class_of, g.r_classes);
  classify(l_ideal, g.l_class_of, g.l_classes);
  classify(j_ideal, g.j_class_of, g.j_classes);

  int const nj = static_cast<int>(g.j_classes.size());
  g.j_below.assign(static_cast<std::size_t>(nj),
                   std::vector<bool>(static_cast<std::size_t>(nj), false));
  for (int p = 0; p < nj; ++p) {
    for (int q = 0; q < nj; ++q) {
      if (p != q) {
        g.j_below[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)] =
            strictly_below(
                j_ideal[static_cast<std::size_t>(g.j_classes
                                                     [static_cast<std::size_t>(
                                                         p)][0])],
                j_ideal[static_cast<std::size_t>(
                    g.j_classes[static_cast<std::size_t>(q)][0])]);
      }
    }
  }

  g.j_regular.assign(static_cast<std::size_t>(nj), false);
  for (int p = 0; p < nj; ++p) {
    for (element_id a : g.j_classes[static_cast<std::size_t>(p)]) {
      if (s.is_idempotent(a)) {
        g.j_regular[static_cast<std::size_t>(p)] = true;
        break;
      }
    }
  }

  // Linear extension, minimal classes first: repeatedly take the unplaced
  // class all of whose strict predecessors are placed, tie-breaking by least
  // element id.  Every prefix union is then downward closed, hence an ideal.
  std::vector<bool> placed(static_cast<std::size_t>(nj), false);
  for (int step = 0; step < nj; ++step) {
    int pick = -1;
    for (int p = 0; p < nj; ++p) {
      if (placed[static_cast<std::size_t>(p)]) {
        continue;
      }
      bool ready = true;
      for (int q = 0; ready && q < nj; ++q) {
        ready = placed[static_cast<std::size_t>(q)]
                || !g.j_below[static_cast<std::size_t>(q)]
                             [static_cast<std::size_t>(p)];
      }
      if (ready
          && (pick == -1
              || g.j_classes[static_cast<std::size_t>(p)][0]
                     < g.j_classes[static_cast<std::size_t>(pick)][0])) {
        pick = p;
      }
    }
    placed[static_cast<std::size_t>(pick)] = true;
    g.principal_series.push_back(pick);
  }
  return g;
}

std::vector<std::pair<int, bool>> zero_minimal_ideals(
    FiniteSemigroup const& s, GreenStructure const& g) {
  if (!s.has_zero()) {
    throw PreconditionError("NoZero",
                            "0-minimal ideals require a semigroup with zero");
  }
  element_id const z = *s.zero();
  int const zero_class = g.j_class_of[static_cast<std::size_t>(z)];
  std::vector<std::pair<int, bool>> out;
  for (int p = 0; p < static_cast<int>(g.j_classes.size()); ++p) {
    if (p == zero_class) {
      continue;
    }
    std::vector<element_id> with_zero =
        g.j_classes[static_cast<std::size_t>(p)];
    with_zero.push_back(z);
    if (is_ideal(s, with_zero)) {
      out.emplace_back(p, g.j_regular[static_cast<std::size_t>(p)]);
    }
  }
  return out;
}

ReesData rees_coordinates(FiniteSemigroup const& s, GreenStructure const& g,
                          int j_class) {
  if (!is_aperiodic(s)) {
    throw PreconditionError("NotAperiodic",
                            "Rees coordinates are computed for aperiodic "
                            "semigroups only");
  }
  auto const& j = g.j_classes.at(static_cast<std::size_t>(j_class));
  std::vector<char> in_j(static_cast<std::size_t>(s.order()), 0);
  for (element_id x : j) {
    in_j[static_cast<std::size_t>(x)] = 1;
  }

  ReesData rd;
  rd.j_class = j_class;
  rd.coords.assign(static_cast<std::size_t>(s.order()), {-1, -1});

  // Rows: R-classes meeting J, ordered by least element; similarly columns.
  std::map<int, int> row_of_r, col_of_l;
  for (element_id x : j) {  // j is ascending, so first sight = least element
    int const rc = g.r_class_of[static_cast<std::size_t>(x)];
    if (row_of_r.emplace(rc, static_cast<int>(rd.a_rows.size())).second) {
      rd.a_rows.emplace_back();
    }
    int const lc = g.l_class_of[static_cast<std::size_t>(x)];
    if (col_of_l.emplace(lc, static_cast<int>(rd.b_cols.size())).second) {
      rd.b_cols.emplace_back();
    }
    int const a = row_of_r[rc];
    int const b = col_of_l[lc];
    rd.a_rows[static_cast<std::size_t>(a)].push_back(x);
    rd.b_cols[static_cast<std::size_t>(b)].push_back(x);
    rd.coords[static_cast<std::size_t>(x)] = {a, b};
  }

  // Aperiodicity makes H trivial, so (a, b) determines the element.
  if (j.size() != rd.a_rows.size() * rd.b_cols.size()) {
    throw PreconditionError("InconsistentAction",
                            "H-classes of the chosen J-class are not trivial");
  }

  bool any_one = false;
  rd.c_matrix.assign(rd.b_cols.size(),
                     std::vector<int>(rd.a_rows.size(), 0));
  for (std::size_t b = 0; b < rd.b_cols.size(); ++b) {
    for (std::size_t a = 0; a < rd.a_rows.size(); ++a) {
      element_id const y = rd.b_cols[b][0];  // representative of column b
      element_id const x = rd.a_rows[a][0];  // representative of row a
      if (in_j[static_cast<std::size_t>(s.product(y, x))]) {
        rd.c_matrix[b][a] = 1;
        any_one = true;
      }
    }
  }
  rd.is_null = !any_one;
  return rd;
}

ExtendedMatrix extended_matrix(FiniteSemigroup const& s,
                               GreenStructure const& g, ReesData const& rd) {
  auto const& j = g.j_classes.at(static_cast<std::size_t>(rd.j_class));
  std::vector<char> in_j(static_cast<std::size_t>(s.order()), 0);
  for (element_id x : j) {
    in_j[static_cast<std::size_t>(x)] = 1;
  }
  ExtendedMatrix em;
  em.c_ext.assign(static_cast<std::size_t>(s.order()),
                  std::vector<int>(rd.a_rows.size(), 0));
  em.left_action.assign(static_cast<std::size_t>(s.order()),
                        std::vector<int>(rd.a_rows.size(), UNDEFINED));
  for (element_id v = 0; v < s.order(); ++v) {
    for (std::size_t a = 0; a < rd.a_rows.size(); ++a) {
      // Every element of row a must agree on whether v * x stays in J and,
      // if so, on the row of the product: s(a, b) = (a', b) with a'
      // independent of b.
      int target = -1;
      bool stays = false;
      bool first = true;
      for (element_id x : rd.a_rows[a]) {
        element_id const p = s.product(v, x);
        bool const p_in = in_j[static_cast<std::size_t>(p)] != 0;
        int const p_row = p_in ? rd.coords[static_cast<std::size_t>(p)].first
                               : -1;
        if (p_in) {
          // the product must sit in the same column as x
          if (rd.coords[static_cast<std::size_t>(p)].second
              != rd.coords[static_cast<std::size_t>(x)].second) {
            throw PreconditionError("InconsistentAction",
                                    "left multiplication moved an element out "
                                    "of its column");
          }
        }
        if (first) {
          stays = p_in;
          target = p_row;
          first = false;
        } else if (stays != p_in || target != p_row) {
          throw PreconditionError("InconsistentAction",
                                  "left multiplication by "
                                      + s.name_of(v)
                                      + " acts inconsistently on row "
                                      + std::to_string(a));
        }
      }
      if (stays) {
        em.c_ext[static_cast<std::size_t>(v)][a] = 1;
        em.left_action[static_cast<std::size_t>(v)][a] = target;
      }
    }
  }
  return em;
}

TraceSemigroup trace_of_j_class(FiniteSemigroup const& s,
                                GreenStructure const& g, int j_class) {
  auto const& j = g.j_classes.at(static_cast<std::size_t>(j_class));
  std::vector<char> in_j(static_cast<std::size_t>(s.order()), 0);
  for (element_id x : j) {
    in_j[static_cast<std::size_t>(x)] = 1;
  }
  TraceSemigroup tr;
  tr.trace_id_of.assign(static_cast<std::size_t>(s.order()), UNDEFINED);
  for (element_id x : j) {
    tr.trace_id_of[static_cast<std::size_t>(x)] =
        static_cast<element_id>(tr.element_of.size());
    tr.element_of.push_back(x);
  }
  tr.theta = static_cast<element_id>(j.size());
  tr.element_of.push_back(UNDEFINED);
  int const q = tr.theta + 1;
  std::vector<std::vector<element_id>> table(
      static_cast<std::size_t>(q),
      std::vector<element_id>(static_cast<std::size_t>(q), tr.theta));
  for (std::size_t i = 0; i < j.size(); ++i) {
    for (std::size_t k = 0; k < j.size(); ++k) {
      element_id const p = s.product(j[i], j[k]);
      if (in_j[static_cast<std::size_t>(p)]) {
        table[i][k] = tr.trace_id_of[static_cast<std::size_t>(p)];
      }
    }
  }
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(q));
  for (element_id x : j) {
    names.push_back(s.name_of(x));
  }
  names.push_back("theta");
  tr.semigroup = FiniteSemigroup(std::move(table), std::move(names),
                                 s.name().empty() ? "" : s.name() + ".trace");
  return tr;
}

std::string eggbox_text(FiniteSemigroup const& s, GreenStructure const& g) {
  std::ostringstream os;
  // highest classes last in principal_series; print top of the order first
  for (auto it = g.principal_series.rbegin(); it != g.principal_series.rend();
       ++it) {
    int const p = *it;
    auto const& j = g.j_classes[static_cast<std::size_t>(p)];
    std::vector<char> in_j(static_cast<std::size_t>(s.order()), 0);
    for (element_id x : j) {
      in_j[static_cast<std::size_t>(x)] = 1;
    }
    // rows and columns in least-element order, as in rees_coordinates
    std::vector<int> rows, cols;
    for (element_id x : j) {
      int const rc = g.r_class_of[static_cast<std::size_t>(x)];
      if (std::find(rows.begin(), rows.end(), rc) == rows.end()) {
        rows.push_back(rc);
      }
      int const lc = g.l_class_of[static_cast<std::size_t>(x)];
      if (std::find(cols.begin(), cols.end(), lc) == cols.end()) {
        cols.push_back(lc);
      }
    }
    os << "J-class " << p << (g.j_regular[static_cast<std::size_t>(p)]
                                  ? " (regular)"
                                  : " (non-regular)")
       << ":\n";
    for (int rc : rows) {
      os << "  |";
      for (int lc : cols) {
        std::string cell;
        for (element_id x : j) {
          if (g.r_class_of[static_cast<std::size_t>(x)] == rc
              && g.l_class_of[static_cast<std::size_t>(x)] == lc) {
            if (!cell.empty()) {
              cell += " ";
            }
            cell += s.name_of(x);
            if (s.is_idempotent(x)) {
              cell += "*";
            }
          }
        }
        os << " " << cell << " |";
      }
      os << "\n";
    }
  }
  return os.str();
}

std::string structure_matrix_text(FiniteSemigroup const& s,
                                  ReesData const& rd) {
  std::ostringstream os;
  os << "C (rows = L-classes B, columns = R-classes A)";
  if (rd.is_null) {
    os << "  [null J-class]";
  }
  os << "\n";
  for (std::size_t b = 0; b < rd.b_cols.size(); ++b) {
    os << "  " << s.name_of(rd.b_cols[b][0]) << ":";
    for (std::size_t a = 0; a < rd.a_rows.size(); ++a) {
      os << " " << rd.c_matrix[b][a];
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace cayley
