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

// A small built-in catalog of named semigroups: the five semigroups of
// order two, the trivial semigroup, and the monogenic semigroup
// <x | x^5 = x^6>.  Tables are embedded so tests and the command line need
// no external files.

#ifndef CAYLEY_CATALOG_HPP_
#define CAYLEY_CATALOG_HPP_

#include <string>
#include <vector>

#include "semigroup.hpp"

namespace cayley {

//! One catalog item, with recorded facts used as cross-checks.  A value of
//! -1 / "" means "not recorded".
struct CatalogEntry {
  std::string key;      //!< lookup key, e.g. "S1"
  std::string summary;  //!< one-line description
  FiniteSemigroup semigroup;

  bool cayley_finite = false;  //!< is the composition semigroup finite?
  int cayley_order = -1;       //!< its order, when finite and recorded
  //! Catalog key of a semigroup isomorphic to the composition semigroup,
  //! when recorded.
  std::string cayley_isomorphic_to;
  int cayley_index = -1;  //!< its aperiodicity index, when recorded
};

//! The catalog, in a fixed order: trivial, S1..S5, M5.
std::vector<CatalogEntry> const& catalog();

//! Lookup by key.  \throws CayleyError for unknown keys, listing the known
//! ones.
CatalogEntry const& catalog_entry(std::string const& key);
FiniteSemigroup catalog_semigroup(std::string const& key);

//! Comma-separated list of the known keys, for help and error text.
std::string catalog_keys_text();

}  // namespace cayley

#endif  // CAYLEY_CATALOG_HPP_
