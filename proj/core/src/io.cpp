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

#include "cayley/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cayley/exception.hpp"

namespace cayley {

namespace {

using nlohmann::json;

}  // namespace

RawSemigroupData parse_raw(std::string const& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (json::exception const& e) {
    throw CayleyError(std::string("malformed semigroup document: ")
                      + e.what());
  }
  if (!doc.is_object()) {
    throw CayleyError("malformed semigroup document: expected an object");
  }
  RawSemigroupData raw;
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) {
      throw CayleyError("semigroup document: \"name\" must be a string");
    }
    raw.name = doc["name"].get<std::string>();
  }
  if (!doc.contains("table") || !doc["table"].is_array()) {
    throw CayleyError(
        "semigroup document: missing \"table\" (array of arrays of 0-based "
        "indices)");
  }
  std::size_t const n = doc["table"].size();
  if (n == 0) {
    throw CayleyError("semigroup document: \"table\" must be non-empty");
  }
  for (auto const& row : doc["table"]) {
    if (!row.is_array() || row.size() != n) {
      throw CayleyError(
          "semigroup document: \"table\" must be square (row length = "
          "number of rows)");
    }
    std::vector<element_id> r;
    r.reserve(n);
    for (auto const& cell : row) {
      if (!cell.is_number_integer()) {
        throw CayleyError(
            "semigroup document: table entries must be integers");
      }
      auto const v = cell.get<long long>();
      if (v < 0 || v >= static_cast<long long>(n)) {
        throw CayleyError("semigroup document: table entry "
                          + std::to_string(v) + " out of range [0, "
                          + std::to_string(n) + ")");
      }
      r.push_back(static_cast<element_id>(v));
    }
    raw.table.push_back(std::move(r));
  }
  if (doc.contains("elements")) {
    if (!doc["elements"].is_array() || doc["elements"].size() != n) {
      throw CayleyError(
          "semigroup document: \"elements\" must be an array of one name "
          "per element");
    }
    for (auto const& e : doc["elements"]) {
      if (!e.is_string()) {
        throw CayleyError(
            "semigroup document: element names must be strings");
      }
      raw.elements.push_back(e.get<std::string>());
    }
  }
  return raw;
}

FiniteSemigroup realize(RawSemigroupData const& raw) {
  return FiniteSemigroup(raw.table, raw.elements, raw.name);
}

FiniteSemigroup parse_semigroup(std::string const& text) {
  return realize(parse_raw(text));
}

RawSemigroupData load_raw_file(std::string const& path) {
  std::ifstream in(path);
  if (!in) {
    throw CayleyError("cannot read file: " + path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_raw(buf.str());
}

FiniteSemigroup load_semigroup_file(std::string const& path) {
  return realize(load_raw_file(path));
}

std::string emit_semigroup(FiniteSemigroup const& s) {
  json doc;
  doc["name"] = s.name();
  doc["elements"] = s.names();
  json table = json::array();
  for (element_id i = 0; i < s.order(); ++i) {
    json row = json::array();
    for (element_id j = 0; j < s.order(); ++j) {
      row.push_back(s.product(i, j));
    }
    table.push_back(std::move(row));
  }
  doc["table"] = std::move(table);
  return doc.dump(2) + "\n";
}

}  // namespace cayley
