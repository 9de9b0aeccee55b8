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

#include <algorithm>
#include <optional>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "cayley/exception.hpp"
#include "cayley/semigroup.hpp"
#include "cayley/small_semigroups.hpp"

using cayley::element_id;
using cayley::FiniteSemigroup;
using cayley::Word;

namespace {

FiniteSemigroup left_zero2() {
  return FiniteSemigroup({{0, 0}, {1, 1}}, {"a", "b"}, "S1");
}

FiniteSemigroup semilattice2() {
  return FiniteSemigroup({{0, 0}, {0, 1}}, {"0", "1"}, "S3");
}

FiniteSemigroup nil2() {
  return FiniteSemigroup({{0, 0}, {0, 0}}, {"0", "x"}, "S4");
}

FiniteSemigroup z2() {
  return FiniteSemigroup({{0, 1}, {1, 0}}, {"1", "x"}, "S5");
}

}  // namespace

TEST_CASE("constructor validates shape and entries", "[core]") {
  SECTION("a valid table constructs") {
    FiniteSemigroup s = z2();
    CHECK(s.order() == 2);
    CHECK(s.product(1, 1) == 0);
    CHECK(s.name_of(1) == "x");
    CHECK(s.name() == "S5");
  }
  SECTION("empty table") {
    CHECK_THROWS_AS(FiniteSemigroup(std::vector<std::vector<element_id>>{}),
                    cayley::PreconditionError);
  }
  SECTION("non-square table") {
    try {
      FiniteSemigroup({{0, 1}, {1}});
      FAIL("expected PreconditionError");
    } catch (cayley::PreconditionError const& e) {
      CHECK(e.kind == "OutOfRangeEntry");
    }
  }
  SECTION("entry out of range") {
    try {
      FiniteSemigroup({{0, 2}, {1, 0}});
      FAIL("expected PreconditionError");
    } catch (cayley::PreconditionError const& e) {
      CHECK(e.kind == "OutOfRangeEntry");
    }
  }
  SECTION("duplicate names") {
    CHECK_THROWS_AS(FiniteSemigroup({{0, 0}, {1, 1}}, {"a", "a"}),
                    cayley::PreconditionError);
  }
  SECTION("name count mismatch") {
    CHECK_THROWS_AS(FiniteSemigroup({{0, 0}, {1, 1}}, {"a"}),
                    cayley::PreconditionError);
  }
  SECTION("default names") {
    FiniteSemigroup s({{0, 0}, {1, 1}});
    CHECK(s.name_of(0) == "x0");
    CHECK(s.name_of(1) == "x1");
    CHECK(s.element_by_name("x1") == 1);
    CHECK(s.element_by_name("nope") == cayley::UNDEFINED);
  }
}

TEST_CASE("constructor rejects non-associative tables", "[core]") {
  // (0*0)*1 = 1*1 = 0 but 0*(0*1) = 0*1 = 1.
  try {
    FiniteSemigroup({{1, 1}, {1, 0}});
    FAIL("expected NotAssociativeError");
  } catch (cayley::NotAssociativeError const& e) {
    std::string const what = e.what();
    CHECK(what.find("associat") != std::string::npos);
  }
  // Full associativity of every constructed semigroup is re-checked by
  // walking all triples by hand.
  for (FiniteSemigroup const& s :
       {left_zero2(), semilattice2(), nil2(), z2(), cayley::monogenic(5, 1)}) {
    for (element_id i = 0; i < s.order(); ++i) {
      for (element_id j = 0; j < s.order(); ++j) {
        for (element_id k = 0; k < s.order(); ++k) {
          REQUIRE(s.product(s.product(i, j), k) == s.product(i, s.product(j, k)));
        }
      }
    }
  }
}

TEST_CASE("identity and zero markers", "[core]") {
  CHECK_FALSE(left_zero2().identity().has_value());
  CHECK_FALSE(left_zero2().zero().has_value());

  FiniteSemigroup s3 = semilattice2();
  REQUIRE(s3.identity().has_value());
  CHECK(*s3.identity() == 1);
  REQUIRE(s3.zero().has_value());
  CHECK(*s3.zero() == 0);
  CHECK(s3.is_monoid());
  CHECK(s3.has_zero());

  FiniteSemigroup g = z2();
  CHECK(g.is_monoid());
  CHECK_FALSE(g.has_zero());

  FiniteSemigroup n = nil2();
  CHECK_FALSE(n.is_monoid());
  REQUIRE(n.zero().has_value());
  CHECK(*n.zero() == 0);
}

TEST_CASE("word products and powers", "[core]") {
  FiniteSemigroup m5 = cayley::monogenic(5, 1);
  // Elements are x, x^2, ..., x^5 as ids 0..4; x^5 is the zero.
  CHECK(m5.order() == 5);
  CHECK(m5.product(0, 0) == 1);
  CHECK(m5.product_of({0, 0, 0}) == 2);
  CHECK(m5.product_of({4}) == 4);
  CHECK(m5.power(0, 1) == 0);
  CHECK(m5.power(0, 5) == 4);
  CHECK(m5.power(0, 6) == 4);  // x^6 = x^5
  CHECK(m5.power(0, 97) == 4);

  FiniteSemigroup g = z2();
  CHECK(g.power(1, 2) == 0);
  CHECK(g.power(1, 3) == 1);
  CHECK(g.product_of({1, 1, 1, 1}) == 0);
}

TEST_CASE("adjoin_identity", "[core]") {
  SECTION("adds one element when there is no identity") {
    FiniteSemigroup s = nil2();
    FiniteSemigroup m = cayley::adjoin_identity(s);
    REQUIRE(m.order() == 3);
    REQUIRE(m.identity().has_value());
    element_id const e = *m.identity();
    CHECK(e == 2);  // appended at the end
    for (element_id x = 0; x < m.order(); ++x) {
      CHECK(m.product(e, x) == x);
      CHECK(m.product(x, e) == x);
    }
    // The original block is untouched.
    for (element_id a = 0; a < 2; ++a) {
      for (element_id b = 0; b < 2; ++b) {
        CHECK(m.product(a, b) == s.product(a, b));
      }
    }
  }
  SECTION("a monoid is returned unchanged") {
    CHECK(cayley::adjoin_identity(semilattice2()) == semilattice2());
    FiniteSemigroup t({{0}}, {"e"});
    CHECK(cayley::adjoin_identity(t) == t);
  }
  SECTION("idempotent operation") {
    FiniteSemigroup once = cayley::adjoin_identity(left_zero2());
    CHECK(cayley::adjoin_identity(once) == once);
  }
  SECTION("fresh name avoids collisions") {
    FiniteSemigroup s({{0, 0}, {1, 1}}, {"1", "b"});
    FiniteSemigroup m = cayley::adjoin_identity(s);
    REQUIRE(m.order() == 3);
    CHECK(m.name_of(2) != "1");
    CHECK(m.element_by_name("b") == 1);
  }
}

TEST_CASE("adjoin_zero", "[core]") {
  SECTION("adds one element when there is no zero") {
    FiniteSemigroup s = left_zero2();
    FiniteSemigroup z = cayley::adjoin_zero(s);
    REQUIRE(z.order() == 3);
    REQUIRE(z.zero().has_value());
    element_id const zero = *z.zero();
    CHECK(zero == 2);
    for (element_id x = 0; x < z.order(); ++x) {
      CHECK(z.product(zero, x) == zero);
      CHECK(z.product(x, zero) == zero);
    }
  }
  SECTION("a semigroup with zero is returned unchanged") {
    CHECK(cayley::adjoin_zero(semilattice2()) == semilattice2());
  }
  SECTION("on a group") {
    FiniteSemigroup z = cayley::adjoin_zero(z2());
    CHECK(z.order() == 3);
    CHECK(z.is_monoid());
    CHECK(z.has_zero());
  }
  SECTION("idempotent operation") {
    FiniteSemigroup once = cayley::adjoin_zero(left_zero2());
    CHECK(cayley::adjoin_zero(once) == once);
  }
  SECTION("adjoin_zero_always adds even to a semigroup with zero") {
    FiniteSemigroup z = cayley::adjoin_zero_always(semilattice2());
    REQUIRE(z.order() == 3);
    REQUIRE(z.zero().has_value());
    CHECK(*z.zero() == 2);
    // The old zero is no longer the global zero.
    CHECK(z.product(0, 2) == 2);
  }
}

TEST_CASE("aperiodicity index", "[core]") {
  CHECK(cayley::aperiodicity_index(left_zero2()) == 1);
  CHECK(cayley::aperiodicity_index(semilattice2()) == 1);
  CHECK(cayley::aperiodicity_index(nil2()) == 2);
  CHECK_FALSE(cayley::aperiodicity_index(z2()).has_value());
  CHECK(cayley::aperiodicity_index(cayley::monogenic(5, 1)) == 5);
  CHECK(cayley::aperiodicity_index(cayley::monogenic(1, 1)) == 1);

  CHECK(cayley::is_aperiodic(nil2()));
  CHECK_FALSE(cayley::is_aperiodic(z2()));
}

TEST_CASE("aperiodicity equals absence of cyclic behaviour", "[core]") {
  // index present  <=>  no element s != s^2 returns to itself: s^k = s for
  // some 2 <= k <= order + 1.  Checked over every semigroup of order <= 3.
  for (int n = 1; n <= 3; ++n) {
    for (FiniteSemigroup const& s : cayley::all_semigroups_of_order(n)) {
      bool cyclic = false;
      for (element_id a = 0; a < s.order(); ++a) {
        if (s.product(a, a) == a) {
          continue;
        }
        for (int k = 2; k <= s.order() + 1; ++k) {
          if (s.power(a, k) == a) {
            cyclic = true;
          }
        }
      }
      CHECK(cayley::aperiodicity_index(s).has_value() == !cyclic);
    }
  }
}

TEST_CASE("idempotent semigroups and nilpotency", "[core]") {
  CHECK(cayley::is_idempotent_semigroup(left_zero2()));
  CHECK(cayley::is_idempotent_semigroup(semilattice2()));
  CHECK_FALSE(cayley::is_idempotent_semigroup(nil2()));
  CHECK_FALSE(cayley::is_idempotent_semigroup(z2()));

  CHECK(cayley::nilpotency_index(nil2()) == 2);
  CHECK_FALSE(cayley::nilpotency_index(semilattice2()).has_value());
  CHECK(cayley::nilpotency_index(cayley::monogenic(5, 1)) == 5);

  // Nilpotency needs a zero to be meaningful.
  try {
    cayley::nilpotency_index(left_zero2());
    FAIL("expected PreconditionError");
  } catch (cayley::PreconditionError const& e) {
    CHECK(e.kind == "NoZero");
  }
}

TEST_CASE("monogenic semigroups", "[core]") {
  FiniteSemigroup m5 = cayley::monogenic(5, 1);
  CHECK(m5.order() == 5);
  CHECK(m5.has_zero());
  CHECK(*m5.zero() == 4);
  CHECK(m5.name_of(0) == "x");

  FiniteSemigroup t = cayley::monogenic(1, 1);
  CHECK(t.order() == 1);
  CHECK(t.is_monoid());

  // Index 1, period 2 is the 2-element cyclic group.
  CHECK(cayley::are_isomorphic(cayley::monogenic(1, 2), z2()));

  // x^m has period p: x^(m+p) = x^m but x^(m+p-1) != x^m for p > 1.
  FiniteSemigroup c = cayley::monogenic(2, 3);
  CHECK(c.order() == 4);
  CHECK(c.power(0, 2 + 3) == c.power(0, 2));
  CHECK_FALSE(cayley::aperiodicity_index(c).has_value());

  FiniteSemigroup m3 = cayley::monogenic(3, 1);
  CHECK(m3.order() == 3);
  CHECK(cayley::aperiodicity_index(m3) == 3);
}

TEST_CASE("direct products", "[core]") {
  FiniteSemigroup p = cayley::direct_product(left_zero2(), semilattice2());
  REQUIRE(p.order() == 4);
  // Pair (s, t) lives at id s * order(T) + t; products are componentwise.
  FiniteSemigroup s = left_zero2();
  FiniteSemigroup t = semilattice2();
  for (element_id a = 0; a < 2; ++a) {
    for (element_id b = 0; b < 2; ++b) {
      for (element_id c = 0; c < 2; ++c) {
        for (element_id d = 0; d < 2; ++d) {
          element_id const x = a * 2 + b;
          element_id const y = c * 2 + d;
          CHECK(p.product(x, y) == s.product(a, c) * 2 + t.product(b, d));
        }
      }
    }
  }
  CHECK(cayley::is_aperiodic(p));

  FiniteSemigroup klein = cayley::direct_product(z2(), z2());
  CHECK(klein.order() == 4);
  CHECK(klein.is_monoid());
  CHECK_FALSE(cayley::aperiodicity_index(klein).has_value());
  // Every element squares to the identity.
  for (element_id a = 0; a < 4; ++a) {
    CHECK(klein.product(a, a) == *klein.identity());
  }

  // Markers combine componentwise.
  FiniteSemigroup q = cayley::direct_product(semilattice2(), semilattice2());
  CHECK(q.is_monoid());
  CHECK(q.has_zero());
}

TEST_CASE("ideals", "[core]") {
  FiniteSemigroup m5 = cayley::monogenic(5, 1);
  CHECK(cayley::is_ideal(m5, {1, 2, 3, 4}));
  CHECK(cayley::is_ideal(m5, {4}));
  CHECK(cayley::is_ideal(m5, {0, 1, 2, 3, 4}));
  CHECK_FALSE(cayley::is_ideal(m5, {0}));
  CHECK_FALSE(cayley::is_ideal(m5, {}));

  // In the left-zero semigroup {a} is a right ideal but not a left one:
  // b * a = b.
  CHECK_FALSE(cayley::is_ideal(left_zero2(), {0}));
  CHECK_THROWS_AS(cayley::validate_ideal(left_zero2(), {0}),
                  cayley::NotAnIdealError);
  CHECK_NOTHROW(cayley::validate_ideal(m5, {2, 3, 4}));
}

TEST_CASE("Rees quotients", "[core]") {
  FiniteSemigroup m5 = cayley::monogenic(5, 1);

  SECTION("collapsing x^2..x^5 leaves the null semigroup of order 2") {
    cayley::ReesQuotient q = cayley::rees_quotient(m5, {1, 2, 3, 4});
    REQUIRE(q.quotient.order() == 2);
    REQUIRE(q.quotient.has_zero());
    CHECK(q.zero == *q.quotient.zero());
    // x stays, everything else becomes the zero class.
    CHECK(q.map[0] != q.zero);
    for (element_id i = 1; i < 5; ++i) {
      CHECK(q.map[i] == q.zero);
    }
    // x * x lands in the collapsed ideal.
    CHECK(q.quotient.product(q.map[0], q.map[0]) == q.zero);
  }

  SECTION("the quotient map is a morphism") {
    for (auto const& [s, ideal] :
         std::vector<std::pair<FiniteSemigroup, std::vector<element_id>>>{
             {m5, {1, 2, 3, 4}},
             {m5, {3, 4}},
             {semilattice2(), {0}},
             {cayley::monogenic(3, 1), {1, 2}}}) {
      cayley::ReesQuotient q = cayley::rees_quotient(s, ideal);
      for (element_id a = 0; a < s.order(); ++a) {
        for (element_id b = 0; b < s.order(); ++b) {
          REQUIRE(q.map[s.product(a, b)] ==
                  q.quotient.product(q.map[a], q.map[b]));
        }
      }
    }
  }

  SECTION("collapsing everything gives the trivial semigroup") {
    cayley::ReesQuotient q = cayley::rees_quotient(m5, {0, 1, 2, 3, 4});
    CHECK(q.quotient.order() == 1);
  }

  SECTION("a non-ideal is rejected") {
    CHECK_THROWS_AS(cayley::rees_quotient(left_zero2(), {0}),
                    cayley::NotAnIdealError);
  }
}

TEST_CASE("structural equality and rows round-trip", "[core]") {
  FiniteSemigroup a = left_zero2();
  FiniteSemigroup b = left_zero2();
  CHECK(a == b);
  CHECK(FiniteSemigroup(a.rows(), a.names()) == a);
  CHECK_FALSE(a == semilattice2());
  // Same table, different names: structurally different values.
  FiniteSemigroup renamed({{0, 0}, {1, 1}}, {"p", "q"});
  CHECK_FALSE(a == renamed);
}
