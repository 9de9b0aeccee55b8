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
#include <random>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "cayley/enumerate.hpp"
#include "cayley/exception.hpp"
#include "cayley/machine.hpp"
#include "cayley/semigroup.hpp"
#include "cayley/tower.hpp"
#include "test_support.hpp"

using cayley::CanonicalElement;
using cayley::element_id;
using cayley::FiniteSemigroup;
using cayley::StableClass;
using cayley::TowerContext;
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

TowerContext semilattice_ctx() {
  return cayley::make_tower_context(semilattice2(), {0}, 1);
}

TowerContext nil_ctx() {
  return cayley::make_tower_context(nil2(), {0}, 1);
}

TowerContext monogenic_ctx() {
  // x^2 and x^3 form the ideal; J = {x}.
  return cayley::make_tower_context(cayley::monogenic(3, 1), {1, 2}, 0);
}

std::vector<TowerContext> all_ctx() {
  return {semilattice_ctx(), nil_ctx(), monogenic_ctx()};
}

//! All generator words over the normalised semigroup of lengths 1..max_len.
std::vector<Word> gen_words(TowerContext const& ctx, int max_len) {
  return test_support::words_up_to(ctx.s.order(), max_len);
}

//! Whether w violates the stable-word congruence for the pair (f, g):
//! different stability, or different outputs on a mutually stable word.
bool violates(TowerContext const& ctx, Word const& f, Word const& g,
              Word const& w) {
  bool const sf = cayley::is_stable(ctx, f, w);
  bool const sg = cayley::is_stable(ctx, g, w);
  if (sf != sg) {
    return true;
  }
  if (!sf) {
    return false;
  }
  return cayley::apply(*ctx.act_tj, f, w) != cayley::apply(*ctx.act_tj, g, w);
}

//! All input words over the T + J alphabet up to max_len (including the
//! empty word).
std::vector<Word> input_words(TowerContext const& ctx, int max_len) {
  std::vector<Word> out{{}};
  std::vector<Word> frontier{{}};
  auto const& alphabet = ctx.act_tj->alphabet();
  for (int len = 1; len <= max_len; ++len) {
    std::vector<Word> next;
    for (Word const& w : frontier) {
      for (element_id a : alphabet) {
        Word e = w;
        e.push_back(a);
        out.push_back(e);
        next.push_back(std::move(e));
      }
    }
    frontier = std::move(next);
  }
  return out;
}

}  // namespace

TEST_CASE("tower context construction", "[tower]") {
  SECTION("the semilattice is already normalised") {
    TowerContext ctx = semilattice_ctx();
    CHECK_FALSE(ctx.added_identity);
    CHECK_FALSE(ctx.added_zero);
    CHECK(ctx.s.order() == 2);
    CHECK(ctx.ideal == std::vector<element_id>{0});
    CHECK(ctx.j_class == std::vector<element_id>{1});
    CHECK(ctx.act_tj->alphabet() == std::vector<element_id>{0, 1});
    CHECK(ctx.act_t->alphabet() == std::vector<element_id>{0});
    CHECK(ctx.act_tr->num_letters() == 2);
    REQUIRE(ctx.letter_in_j.size() == 2);
    CHECK_FALSE(static_cast<bool>(ctx.letter_in_j[0]));
    CHECK(static_cast<bool>(ctx.letter_in_j[1]));
    CHECK(ctx.trace_zero_letter >= 0);
    // The non-zero trace letter stands for the J element 1.
    int const j_letter = 1 - ctx.trace_zero_letter;
    CHECK(ctx.j_of_trace_letter[static_cast<std::size_t>(j_letter)] == 1);
    CHECK(ctx.j_of_trace_letter[static_cast<std::size_t>(
              ctx.trace_zero_letter)] == cayley::UNDEFINED);
  }
  SECTION("the nil semigroup gains an identity") {
    TowerContext ctx = nil_ctx();
    CHECK(ctx.added_identity);
    CHECK_FALSE(ctx.added_zero);
    CHECK(ctx.s.order() == 3);
    CHECK(ctx.ideal == std::vector<element_id>{0});
    CHECK(ctx.j_class == std::vector<element_id>{1});
  }
  SECTION("a freshly adjoined zero joins the ideal") {
    // The left-zero semigroup has neither identity nor zero; with J taken
    // as {a, b}, the ideal starts empty and receives the new zero.
    TowerContext ctx = cayley::make_tower_context(left_zero2(), {}, 0);
    CHECK(ctx.added_identity);
    CHECK(ctx.added_zero);
    CHECK(ctx.s.order() == 4);
    REQUIRE(ctx.s.zero().has_value());
    CHECK(ctx.ideal == std::vector<element_id>{*ctx.s.zero()});
    CHECK(ctx.j_class == std::vector<element_id>{0, 1});
  }
  SECTION("validation") {
    // j_rep inside the ideal.
    CHECK_THROWS_AS(cayley::make_tower_context(semilattice2(), {0}, 0),
                    cayley::PreconditionError);
    // T is not an ideal.
    CHECK_THROWS_AS(cayley::make_tower_context(semilattice2(), {1}, 0),
                    cayley::NotAnIdealError);
    // T + J is not an ideal: in the monogenic semigroup {x^3} + {x} skips
    // x^2.
    CHECK_THROWS_AS(
        cayley::make_tower_context(cayley::monogenic(3, 1), {2}, 0),
        cayley::CayleyError);
  }
}

TEST_CASE("J-prefix lengths", "[tower]") {
  TowerContext ctx = semilattice_ctx();
  CHECK(cayley::j_prefix_len(ctx, {}) == 0);
  CHECK(cayley::j_prefix_len(ctx, {1, 1, 0, 1}) == 2);
  CHECK(cayley::j_prefix_len(ctx, {0, 1}) == 0);
  CHECK(cayley::j_prefix_len(ctx, {1, 1, 1}) == 3);
  CHECK_THROWS_AS(cayley::j_prefix_len(ctx, {7}),
                  cayley::AlphabetMismatchError);

  SECTION("applying a composition never lengthens the J-prefix") {
    std::mt19937 rng(600217);
    for (TowerContext const& c : all_ctx()) {
      auto const gens = test_support::all_ids(c.s.order());
      for (int i = 0; i < 400; ++i) {
        Word const f = test_support::random_word(rng, gens, 1 + i % 3);
        Word const w = test_support::random_word(rng, c.act_tj->alphabet(),
                                                 i % 6);
        CHECK(cayley::j_prefix_len(c, cayley::apply(*c.act_tj, f, w)) <=
              cayley::j_prefix_len(c, w));
      }
    }
  }
}

TEST_CASE("stable words", "[tower]") {
  TowerContext ctx = semilattice_ctx();
  SECTION("worked examples") {
    CHECK(cayley::is_stable(ctx, {1}, {1, 0}));
    CHECK_FALSE(cayley::is_stable(ctx, {0}, {1, 0}));
    CHECK(cayley::is_stable(ctx, {0}, {0, 0}));
  }
  SECTION("every word over T alone is stable for every composition") {
    for (TowerContext const& c : all_ctx()) {
      std::vector<Word> t_words{{}};
      for (int len = 1; len <= 3; ++len) {
        std::vector<Word> next;
        for (Word const& w : t_words) {
          if (static_cast<int>(w.size()) == len - 1) {
            for (element_id a : c.ideal) {
              Word e = w;
              e.push_back(a);
              next.push_back(std::move(e));
            }
          }
        }
        t_words.insert(t_words.end(), next.begin(), next.end());
      }
      for (Word const& f : gen_words(c, 2)) {
        for (Word const& w : t_words) {
          CHECK(cayley::is_stable(c, f, w));
        }
      }
    }
  }
  SECTION("stability transfers to the trace projection") {
    std::mt19937 rng(808711);
    for (TowerContext const& c : all_ctx()) {
      // Reverse map: original J element -> trace letter.
      std::vector<int> trace_letter_of(static_cast<std::size_t>(c.s.order()),
                                       -1);
      for (std::size_t li = 0; li < c.j_of_trace_letter.size(); ++li) {
        element_id const orig = c.j_of_trace_letter[li];
        if (orig != cayley::UNDEFINED) {
          trace_letter_of[static_cast<std::size_t>(orig)] =
              static_cast<int>(li);
        }
      }
      auto const gens = test_support::all_ids(c.s.order());
      for (int i = 0; i < 250; ++i) {
        Word const f = test_support::random_word(rng, gens, 1 + i % 3);
        Word const w = test_support::random_word(rng, c.act_tj->alphabet(),
                                                 i % 5);
        // Project the input word onto the trace alphabet.
        Word w_tr;
        int j_prefix = 0;
        bool in_prefix = true;
        for (element_id a : w) {
          int const li = trace_letter_of[static_cast<std::size_t>(a)];
          w_tr.push_back(c.act_tr->letter(li >= 0 ? li : c.trace_zero_letter));
          if (in_prefix && li >= 0) {
            ++j_prefix;
          } else {
            in_prefix = false;
          }
        }
        CanonicalElement const f_tr = cayley::trace_project(c, f);
        Word const out = f_tr.evaluate(w_tr);
        // The trace-side J-prefix of the output.
        int out_prefix = 0;
        for (element_id o : out) {
          if (c.act_tr->letter_index(o) == c.trace_zero_letter) {
            break;
          }
          ++out_prefix;
        }
        CHECK(cayley::is_stable(c, f, w) == (out_prefix == j_prefix));
      }
    }
  }
}

TEST_CASE("trace projection", "[tower]") {
  TowerContext ctx = semilattice_ctx();
  element_id const zero_dom =
      ctx.act_tr->letter(ctx.trace_zero_letter);
  element_id const j_dom = ctx.act_tr->letter(1 - ctx.trace_zero_letter);

  SECTION("the zero composition projects to the zero function") {
    CanonicalElement const z = cayley::trace_project(ctx, {0});
    CHECK(z.evaluate({j_dom, j_dom}) == Word{zero_dom, zero_dom});
  }
  SECTION("the identity element projects to an identity-like map") {
    CanonicalElement const e = cayley::trace_project(ctx, {1});
    CHECK(e.evaluate({j_dom, j_dom, j_dom}) == Word{j_dom, j_dom, j_dom});
    CHECK(e.evaluate({j_dom, zero_dom, j_dom}) ==
          Word{j_dom, zero_dom, zero_dom});
  }
  SECTION("projection is multiplicative") {
    std::mt19937 rng(417209);
    for (TowerContext const& c : all_ctx()) {
      auto const gens = test_support::all_ids(c.s.order());
      for (int i = 0; i < 200; ++i) {
        Word const u = test_support::random_word(rng, gens, 1 + i % 3);
        Word const v = test_support::random_word(rng, gens, 1 + (i / 2) % 3);
        Word uv = u;
        uv.insert(uv.end(), v.begin(), v.end());
        CHECK(cayley::trace_project(c, uv) ==
              cayley::compose(cayley::trace_project(c, u),
                              cayley::trace_project(c, v)));
      }
    }
  }
}

TEST_CASE("stable-word congruence decision", "[tower]") {
  SECTION("idempotent identity on the semilattice layer") {
    TowerContext ctx = semilattice_ctx();
    cayley::StEqualResult const r = cayley::st_equal(ctx, {1}, {1, 1});
    CHECK(r.equal);
    CHECK(r.counterexample.empty());
  }
  SECTION("distinct generators on the semilattice layer") {
    TowerContext ctx = semilattice_ctx();
    cayley::StEqualResult const r = cayley::st_equal(ctx, {0}, {1});
    REQUIRE_FALSE(r.equal);
    // The counterexample is genuinely violating and of minimal length.
    CHECK(violates(ctx, {0}, {1}, r.counterexample));
    for (Word const& w : input_words(ctx, static_cast<int>(
                                              r.counterexample.size()) - 1)) {
      CHECK_FALSE(violates(ctx, {0}, {1}, w));
    }
  }
  SECTION("agreement with the exhaustive decision at depth 6") {
    for (TowerContext const& ctx : all_ctx()) {
      std::vector<Word> const fs = gen_words(ctx, 2);
      std::vector<Word> const inputs = input_words(ctx, 6);
      for (std::size_t i = 0; i < fs.size(); ++i) {
        for (std::size_t k = i; k < fs.size(); ++k) {
          cayley::StEqualResult const r = cayley::st_equal(ctx, fs[i], fs[k]);
          std::size_t first_violation = 0;
          bool found = false;
          for (Word const& w : inputs) {
            if (violates(ctx, fs[i], fs[k], w)) {
              found = true;
              first_violation = w.size();
              break;
            }
          }
          REQUIRE(r.equal == !found);
          if (found) {
            // Same minimal length (inputs are scanned shortest first).
            CHECK(r.counterexample.size() == first_violation);
            CHECK(violates(ctx, fs[i], fs[k], r.counterexample));
          }
        }
      }
    }
  }
}

TEST_CASE("layer embedding", "[tower]") {
  SECTION("pair values and the product rule") {
    TowerContext ctx = monogenic_ctx();
    std::mt19937 rng(97211);
    auto const gens = test_support::all_ids(ctx.s.order());
    for (int i = 0; i < 150; ++i) {
      Word const u = test_support::random_word(rng, gens, 1 + i % 3);
      Word const v = test_support::random_word(rng, gens, 1 + (i / 2) % 3);
      Word uv = u;
      uv.insert(uv.end(), v.begin(), v.end());
      StableClass const pu = cayley::pi_embed(ctx, u);
      StableClass const pv = cayley::pi_embed(ctx, v);
      CHECK(cayley::semidirect_mul(ctx, pu, pv) == cayley::pi_embed(ctx, uv));
      // The trace component of the pair is the trace projection.
      CHECK(pu.trace_part == cayley::trace_project(ctx, u));
      CHECK(pu.residual.size() ==
            static_cast<std::size_t>(ctx.act_tr->num_letters()));
    }
  }
  SECTION("pair equality is exactly the stable-word congruence") {
    for (TowerContext const& ctx : all_ctx()) {
      std::vector<Word> const fs = gen_words(ctx, 2);
      for (std::size_t i = 0; i < fs.size(); ++i) {
        for (std::size_t k = i + 1; k < fs.size(); ++k) {
          bool const by_pairs =
              cayley::pi_embed(ctx, fs[i]) == cayley::pi_embed(ctx, fs[k]);
          bool const by_congruence =
              cayley::st_equal(ctx, fs[i], fs[k]).equal;
          REQUIRE(by_pairs == by_congruence);
        }
      }
    }
  }
  SECTION("the full verdict on all three layer contexts") {
    for (TowerContext const& ctx : all_ctx()) {
      cayley::Verdict const v = cayley::verify_embedding(ctx, 3);
      CHECK(v.ok);
      INFO(v.detail);
    }
  }
}

TEST_CASE("aperiodicity additivity across a layer", "[tower]") {
  SECTION("frozen layer profiles") {
    // (closure sizes over T+J / T / trace, and their indices.)
    struct Expected {
      TowerContext ctx;
      std::size_t size_tj, size_t_, size_tr;
      int index_tj, index_t, index_tr;
    };
    std::vector<Expected> cases{
        {semilattice_ctx(), 2, 1, 2, 1, 1, 1},
        {nil_ctx(), 2, 1, 2, 1, 1, 1},
        {monogenic_ctx(), 4, 2, 2, 2, 1, 1},
    };
    for (Expected const& e : cases) {
      CHECK(cayley::enumerate(e.ctx.act_tj).elements.size() == e.size_tj);
      CHECK(cayley::enumerate(e.ctx.act_t).elements.size() == e.size_t_);
      CHECK(cayley::enumerate(e.ctx.act_tr).elements.size() == e.size_tr);
      cayley::AdditivityReport const r = cayley::tower_additivity(e.ctx);
      CHECK(r.index_tj == e.index_tj);
      CHECK(r.index_t == e.index_t);
      CHECK(r.index_tr == e.index_tr);
      CHECK(r.holds);
    }
  }
  SECTION("the monogenic layer is tight") {
    cayley::AdditivityReport const r =
        cayley::tower_additivity(monogenic_ctx());
    CHECK(r.index_tj == r.index_t + r.index_tr);
  }
}

TEST_CASE("zero-minimal contexts", "[tower]") {
  FiniteSemigroup s10 = cayley::adjoin_zero(left_zero2());

  SECTION("construction") {
    cayley::ZeroMinimalContext ctx =
        cayley::make_zero_minimal_context(s10, {0, 1, 2});
    CHECK(ctx.j_class == std::vector<element_id>{0, 1});
    CHECK(ctx.rees.a_rows.size() == 2);
    CHECK(ctx.rees.b_cols.size() == 1);
    CHECK(ctx.ext.left_action.size() == 3);
  }
  SECTION("preconditions") {
    CHECK_THROWS_AS(cayley::make_zero_minimal_context(left_zero2(), {0, 1}),
                    cayley::PreconditionError);  // no zero
    FiniteSemigroup zg =
        cayley::adjoin_zero(FiniteSemigroup({{0, 1}, {1, 0}}, {"1", "x"}));
    CHECK_THROWS_AS(cayley::make_zero_minimal_context(zg, {0, 1, 2}),
                    cayley::PreconditionError);  // not aperiodic
    FiniteSemigroup m5 = cayley::monogenic(5, 1);
    // {x^3, x^4, x^5} spans two J-classes above the zero.
    CHECK_THROWS_AS(cayley::make_zero_minimal_context(m5, {2, 3, 4}),
                    cayley::PreconditionError);
    // The nil class {x} is not regular.
    CHECK_THROWS_AS(cayley::make_zero_minimal_context(nil2(), {0, 1}),
                    cayley::PreconditionError);
  }
}

TEST_CASE("new row coordinates along a composition", "[tower]") {
  FiniteSemigroup s10 = cayley::adjoin_zero(left_zero2());
  cayley::ZeroMinimalContext ctx =
      cayley::make_zero_minimal_context(s10, {0, 1, 2});

  SECTION("a single generator always opens position 1") {
    CHECK(cayley::new_indices(ctx, {0}, 0) == std::vector<int>{1});
    CHECK(cayley::new_indices(ctx, {1}, 1) == std::vector<int>{1});
  }
  SECTION("left-zero collapses rows immediately") {
    // Applying a throughout: from row a nothing new appears after 1...
    CHECK(cayley::new_indices(ctx, {0, 0, 0}, 0) == std::vector<int>{1});
    // ...from row b the first application jumps to row a at position 2.
    CHECK(cayley::new_indices(ctx, {0, 0, 0}, 1) == std::vector<int>{1, 2});
  }
  SECTION("matches a direct replay of the left action, never exceeding |A|") {
    std::mt19937 rng(73219);
    std::vector<element_id> const living{0, 1};  // a and b never kill a row
    for (int i = 0; i < 1000; ++i) {
      Word const w =
          test_support::random_word(rng, living, 1 + i % 10);
      for (int row = 0; row < 2; ++row) {
        std::vector<int> expected;
        std::vector<bool> seen(ctx.rees.a_rows.size(), false);
        int coord = row;
        for (std::size_t pos = 1; pos <= w.size(); ++pos) {
          if (pos > 1) {
            // Multiply by the next inner generator: entries are stored
            // outermost first, so step pos applies w[n - pos + 1].
            element_id const s = w[w.size() - pos + 1];
            coord = ctx.ext.left_action[static_cast<std::size_t>(s)]
                                       [static_cast<std::size_t>(coord)];
            REQUIRE(coord != cayley::UNDEFINED);
          }
          if (!seen[static_cast<std::size_t>(coord)]) {
            seen[static_cast<std::size_t>(coord)] = true;
            expected.push_back(static_cast<int>(pos));
          }
        }
        std::vector<int> const got = cayley::new_indices(ctx, w, row);
        CHECK(got == expected);
        CHECK(got.size() <= ctx.rees.a_rows.size());
        REQUIRE_FALSE(got.empty());
        CHECK(got.front() == 1);
      }
    }
  }
  SECTION("a killed row is a precondition failure") {
    try {
      cayley::new_indices(ctx, {2}, 0);  // the zero kills every row
      FAIL("expected PreconditionError");
    } catch (cayley::PreconditionError const& e) {
      CHECK(e.kind == "ActionKilled");
    }
  }
  SECTION("row bounds are checked") {
    CHECK_THROWS_AS(cayley::new_indices(ctx, {0}, 5), cayley::CayleyError);
  }
}

TEST_CASE("ideal-mode closure depth stays within the coordinate bound",
          "[tower]") {
  // Over a 0-minimal alphabet the closure is discovered within |A|^2 + 1
  // rounds.
  FiniteSemigroup s10 = cayley::adjoin_zero(left_zero2());
  cayley::EnumResult const e =
      cayley::enumerate(cayley::Action::on_ideal(s10, {0, 1, 2}));
  REQUIRE(e.complete());
  CHECK(e.closure_depth <= 2 * 2 + 1);
}
