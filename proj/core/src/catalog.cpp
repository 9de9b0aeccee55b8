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

#include "cayley/catalog.hpp"

#include "cayley/exception.hpp"

namespace cayley {

namespace {

std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> out;

  {
    CatalogEntry e;
    e.key = "trivial";
    e.summary = "the one-element semigroup";
    e.semigroup = FiniteSemigroup({{0}}, {"1"}, "trivial");
    // phi_1 is the only composition, and it acts as the identity.
    e.cayley_finite = true;
    e.cayley_order = 1;
    e.cayley_isomorphic_to = "trivial";
    e.cayley_index = 1;
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.key = "S1";
    e.summary = "the left zero semigroup of order 2 (xy = x)";
    e.semigroup = FiniteSemigroup({{0, 0}, {1, 1}}, {"a", "b"}, "S1");
    // phi_s is the constant map onto s, so phi_s . phi_t = phi_s = phi_{st}.
    e.cayley_finite = true;
    e.cayley_order = 2;
    e.cayley_isomorphic_to = "S1";
    e.cayley_index = 1;  // every element is idempotent
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.key = "S2";
    e.summary = "the right zero semigroup of order 2 (xy = y)";
    e.semigroup = FiniteSemigroup({{0, 1}, {0, 1}}, {"a", "b"}, "S2");
    // phi_s fixes every letter past the first and phi_s . phi_t = phi_t.
    e.cayley_finite = true;
    e.cayley_order = 2;
    e.cayley_isomorphic_to = "S2";
    e.cayley_index = 1;
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.key = "S3";
    e.summary = "the two-element semilattice {0, 1} under multiplication";
    e.semigroup = FiniteSemigroup({{0, 0}, {0, 1}}, {"0", "1"}, "S3");
    // phi_1 is the identity on words over {0, 1} and phi_0 sends everything
    // to 0...0, so the compositions form the same semilattice.
    e.cayley_finite = true;
    e.cayley_order = 2;
    e.cayley_isomorphic_to = "S3";
    e.cayley_index = 1;
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.key = "S4";
    e.summary = "the null semigroup of order 2 (all products 0)";
    e.semigroup = FiniteSemigroup({{0, 0}, {0, 0}}, {"0", "x"}, "S4");
    // phi_x . phi_x = phi_0: after the first letter both send everything to
    // zero, and on the first letter x.x = 0.
    e.cayley_finite = true;
    e.cayley_order = 2;
    e.cayley_isomorphic_to = "S4";
    e.cayley_index = 2;  // phi_x^2 = phi_x^3 = phi_0 but phi_x != phi_0
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.key = "S5";
    e.summary = "the cyclic group of order 2";
    e.semigroup = FiniteSemigroup({{0, 1}, {1, 0}}, {"1", "x"}, "S5");
    // phi_1 and phi_x generate a free semigroup of rank 2: the composition
    // semigroup is infinite.
    e.cayley_finite = false;
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.key = "M5";
    e.summary = "the monogenic semigroup <x | x^5 = x^6>";
    e.semigroup = monogenic(5, 1);
    // x^5 is a zero and the compositions inherit phi^5 = phi^6 levelwise;
    // the composition semigroup has 9 elements (closure depth 2) and is
    // aperiodic with index exactly 5 (phi_x^4 != phi_x^5 = phi_x^6).
    e.cayley_finite = true;
    e.cayley_order = 9;
    e.cayley_index = 5;
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace

std::vector<CatalogEntry> const& catalog() {
  static std::vector<CatalogEntry> const entries = build_catalog();
  return entries;
}

CatalogEntry const& catalog_entry(std::string const& key) {
  for (auto const& e : catalog()) {
    if (e.key == key) {
      return e;
    }
  }
  throw CayleyError("unknown catalog key \"" + key + "\" (known: "
                    + catalog_keys_text() + ")");
}

FiniteSemigroup catalog_semigroup(std::string const& key) {
  return catalog_entry(key).semigroup;
}

std::string catalog_keys_text() {
  std::string out;
  for (auto const& e : catalog()) {
    if (!out.empty()) {
      out += ", ";
    }
    out += e.key;
  }
  return out;
}

}  // namespace cayley
