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

#include <cstdio>
#include <fstream>
#include <string>

#include <catch2/catch_amalgamated.hpp>

#include "cayley/catalog.hpp"
#include "cayley/exception.hpp"
#include "cayley/io.hpp"
#include "cayley/semigroup.hpp"

using cayley::FiniteSemigroup;

namespace {

//! The error message produced by a parse failure, or "" if none is thrown.
std::string parse_error(std::string const& text) {
  try {
    (void)cayley::parse_semigroup(text);
    return "";
  } catch (cayley::CayleyError const& e) {
    return e.what();
  }
}

}  // namespace

TEST_CASE("parsing documents", "[io]") {
  SECTION("a complete document") {
    FiniteSemigroup s = cayley::parse_semigroup(
        R"({"name": "flip", "elements": ["e", "g"],
            "table": [[0, 1], [1, 0]]})");
    CHECK(s.name() == "flip");
    CHECK(s.order() == 2);
    CHECK(s.names() == std::vector<std::string>{"e", "g"});
    CHECK(s.product(1, 1) == 0);
  }
  SECTION("element names and the semigroup name are optional") {
    FiniteSemigroup s =
        cayley::parse_semigroup(R"({"table": [[0, 0], [0, 1]]})");
    CHECK(s.name().empty());
    CHECK(s.names() == std::vector<std::string>{"x0", "x1"});
  }
  SECTION("shape and content errors") {
    CHECK(parse_error("this is not json") != "");
    CHECK(parse_error(R"({"name": "t"})").find("table") !=
          std::string::npos);
    CHECK(parse_error(R"({"table": [[0, 1], [0]]})") != "");
    CHECK(parse_error(R"({"table": [[0, 7], [0, 1]]})") != "");
    CHECK(parse_error(R"({"table": [[0.5, 0], [0, 1]]})") != "");
    CHECK(parse_error(R"({"table": []})") != "");
    CHECK(parse_error(
              R"({"elements": ["a"], "table": [[0, 0], [0, 1]]})") != "");
    CHECK(parse_error(R"({"table": "nope"})") != "");
  }
  SECTION("associativity is deferred for the raw form") {
    // x * x = y, but y absorbs differently on the two sides.
    std::string const text = R"({"table": [[1, 1], [1, 0]]})";
    cayley::RawSemigroupData raw = cayley::parse_raw(text);
    CHECK(raw.table == std::vector<std::vector<cayley::element_id>>{{1, 1},
                                                                    {1, 0}});
    CHECK_THROWS_AS(cayley::realize(raw), cayley::NotAssociativeError);
    CHECK_THROWS_AS(cayley::parse_semigroup(text),
                    cayley::NotAssociativeError);
  }
}

TEST_CASE("serialization round-trips", "[io]") {
  for (cayley::CatalogEntry const& entry : cayley::catalog()) {
    INFO(entry.key);
    std::string const text = cayley::emit_semigroup(entry.semigroup);
    FiniteSemigroup back = cayley::parse_semigroup(text);
    CHECK(back == entry.semigroup);
    CHECK(back.name() == entry.semigroup.name());
  }
}

TEST_CASE("reading files", "[io]") {
  std::string const path = "cayley_io_test_tmp.json";
  {
    std::ofstream out(path);
    out << cayley::emit_semigroup(cayley::catalog_semigroup("S3"));
  }
  FiniteSemigroup s = cayley::load_semigroup_file(path);
  CHECK(s == cayley::catalog_semigroup("S3"));
  std::remove(path.c_str());
  CHECK_THROWS_AS(cayley::load_semigroup_file("does_not_exist_9a1.json"),
                  cayley::CayleyError);
}

TEST_CASE("the built-in catalog", "[io]") {
  auto const& entries = cayley::catalog();
  REQUIRE(entries.size() == 7);
  CHECK(entries.front().key == "trivial");
  CHECK(entries.back().key == "M5");
  for (auto const& e : entries) {
    CHECK_FALSE(e.summary.empty());
    CHECK(cayley::catalog_entry(e.key).semigroup == e.semigroup);
  }
  CHECK(cayley::catalog_semigroup("S5").order() == 2);
  CHECK(cayley::catalog_semigroup("M5").order() == 5);
  CHECK_THROWS_AS(cayley::catalog_entry("nope"), cayley::CayleyError);
  CHECK(cayley::catalog_keys_text().find("M5") != std::string::npos);
}
