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

// Reading and writing semigroups as JSON documents with fields
// `name` (string, optional), `elements` (array of strings, optional) and
// `table` (array of arrays of 0-based element indices; row index = left
// factor).  Parsing validates associativity unless the raw form is
// requested explicitly.

#ifndef CAYLEY_IO_HPP_
#define CAYLEY_IO_HPP_

#include <string>
#include <vector>

#include "semigroup.hpp"

namespace cayley {

//! A parsed but unvalidated document: the table may fail associativity.
struct RawSemigroupData {
  std::string name;
  std::vector<std::string> elements;  // empty means "use default names"
  std::vector<std::vector<element_id>> table;
};

//! Parse a document without checking associativity.  Shape errors (missing
//! or non-square table, out-of-range entries, wrong element-name count)
//! still throw.
//!
//! \throws CayleyError on malformed documents.
RawSemigroupData parse_raw(std::string const& text);

//! Build the validated semigroup from a raw document.
//!
//! \throws NotAssociativeError if the table is not associative.
FiniteSemigroup realize(RawSemigroupData const& raw);

//! parse_raw + realize.
FiniteSemigroup parse_semigroup(std::string const& text);

//! Read and parse a file.  \throws CayleyError if the file cannot be read.
RawSemigroupData load_raw_file(std::string const& path);
FiniteSemigroup load_semigroup_file(std::string const& path);

//! Serialize a semigroup as a JSON document with fields name, elements and
//! table.  parse_semigroup(emit_semigroup(s)) reproduces s exactly.
std::string emit_semigroup(FiniteSemigroup const& s);

}  // namespace cayley

#endif  // CAYLEY_IO_HPP_
