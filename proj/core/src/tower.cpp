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

#include "cayley/tower.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

namespace cayley {

TowerContext make_tower_context(FiniteSemigroup const& input,
                                std::vector<element_id> ideal,
                                element_id j_rep) {
  TowerContext ctx;
  {
    FiniteSemigroup const with_one = adjoin_identity(input);
    ctx.added_identity = with_one.order() != input.order();
    ctx.s = adjoin_zero(with_one);
    ctx.added_zero = ctx.s.order() != with_one.order();
  }
  if (ctx.added_zero) {
    ideal.push_back(*ctx.s.zero());
  }
  std::sort(ideal.begin(), ideal.end());
  ideal.erase(std::unique(ideal.begin(), ideal.end()), ideal.end());
  validate_ideal(ctx.s, ideal);
  ctx.ideal = std::move(ideal);

  if (j_rep < 0 || j_rep >= ctx.s.order()) {
    throw PreconditionError("OutOfRangeEntry",
                            "J-class representative out of range");
  }
  GreenStructure const g = green(ctx.s);
  ctx.j_class = g.j_classes[static_cast<std::size_t>(
      g.j_class_of[static_cast<std::size_t>(j_rep)])];

  std::vector<char> in_t(static_cast<std::size_t>(ctx.s.order()), 0);
  for (element_id const x : ctx.ideal) {
    in_t[static_cast<std::size_t>(x)] = 1;
  }
  for (element_id const x : ctx.j_class) {
    if (in_t[static_cast<std::size_t>(x)]) {
      throw PreconditionError("PreconditionViolated",
                              "the J-class meets the ideal");
    }
  }
  std::vector<element_id> tj = ctx.ideal;
  tj.insert(tj.end(), ctx.j_class.begin(), ctx.j_class.end());
  std::sort(tj.begin(), tj.end());
  validate_ideal(ctx.s, tj);  // J is directly above T

  ctx.act_tj = Action::on_ideal(ctx.s, tj);
  ctx.act_t = Action::on_ideal(ctx.s, ctx.ideal);
  ctx.act_tr = Action::on_trace_over(ctx.s, ctx.ideal, ctx.j_class);

  ctx.letter_in_j.assign(static_cast<std::size_t>(ctx.act_tj->num_letters()),
                         0);
  for (int li = 0; li < ctx.act_tj->num_letters(); ++li) {
    element_id const a = ctx.act_tj->letter(li);
    ctx.letter_in_j[static_cast<std::size_t>(li)] =
        std::binary_search(ctx.j_class.begin(), ctx.j_class.end(), a) ? 1 : 0;
  }

  ReesQuotient const rq = rees_quotient(ctx.s, ctx.ideal);
  ctx.trace_zero_letter = ctx.act_tr->letter_index(rq.zero);
  ctx.j_of_trace_letter.assign(
      static_cast<std::size_t>(ctx.act_tr->num_letters()), UNDEFINED);
  for (element_id const j : ctx.j_class) {
    ctx.j_of_trace_letter[static_cast<std::size_t>(ctx.act_tr->letter_index(
        rq.map[static_cast<std::size_t>(j)]))] = j;
  }
  return ctx;
}

int j_prefix_len(TowerContext const& ctx, Word const& w) {
  ctx.act_tj->check_input(w);
  int len = 0;
  for (element_id const a : w) {
    if (!ctx.letter_in_j[static_cast<std::size_t>(
            ctx.act_tj->letter_index(a))]) {
      break;
    }
    ++len;
  }
  return len;
}

bool is_stable(TowerContext const& ctx, Word const& f, Word const& w) {
  Word const out = apply(*ctx.act_tj, f, w);
  return j_prefix_len(ctx, out) == j_prefix_len(ctx, w);
}

CanonicalElement trace_project(TowerContext const& ctx, Word const& f) {
  return canonicalize(ctx.act_tr, f);
}

namespace {

// Augmented product configuration for the stable-word decision: machine
// states of both operands, plus whether we are still inside the leading
// J-segment of the input, whether each operand has already broken the
// segment (made the word unstable), and whether outputs have differed.
struct StConfig {
  std::int32_t qf, qg;
  bool in_j, f_dead, g_dead, diff;

  std::uint64_t key() const {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(qf))
            << 32)
           ^ (static_cast<std::uint64_t>(static_cast<std::uint32_t>(qg))
              << 4)
           ^ (static_cast<std::uint64_t>(in_j) << 3)
           ^ (static_cast<std::uint64_t>(f_dead) << 2)
           ^ (static_cast<std::uint64_t>(g_dead) << 1)
           ^ static_cast<std::uint64_t>(diff);
  }

  // A word is a witness against stable-word congruence if it is stable for
  // exactly one operand, or stable for both with different outputs.
  bool violates() const {
    return f_dead != g_dead || (!f_dead && !g_dead && diff);
  }
};

}  // namespace

StEqualResult st_equal(TowerContext const& ctx, Word const& f, Word const& g) {
  CanonicalElement const cf = canonicalize(ctx.act_tj, f);
  CanonicalElement const cg = canonicalize(ctx.act_tj, g);
  MealyMachine const& mf = cf.machine();
  MealyMachine const& mg = cg.machine();
  int const nl = ctx.act_tj->num_letters();

  std::vector<StConfig> configs;
  std::vector<std::pair<int, int>> parent;  // (config index, letter index)
  std::unordered_map<std::uint64_t, int> seen;
  StEqualResult res;
  res.equal = true;

  auto push = [&](StConfig const& c, int from, int letter) -> int {
    auto const [it, fresh] =
        seen.emplace(c.key(), static_cast<int>(configs.size()));
    if (!fresh) {
      return -1;
    }
    configs.push_back(c);
    parent.emplace_back(from, letter);
    return it->second;
  };

  StConfig const start{mf.initial, mg.initial, true, false, false, false};
  push(start, -1, -1);
  for (std::size_t i = 0; res.equal && i < configs.size(); ++i) {
    StConfig const c = configs[i];
    for (int li = 0; li < nl; ++li) {
      StConfig n;
      std::int32_t const of = mf.out(c.qf, li);
      std::int32_t const og = mg.out(c.qg, li);
      n.qf = mf.next(c.qf, li);
      n.qg = mg.next(c.qg, li);
      bool const letter_j =
          ctx.letter_in_j[static_cast<std::size_t>(li)] != 0;
      if (c.in_j && letter_j) {
        // Still inside the leading J-segment: an output outside J here
        // shortens the segment for good.
        n.in_j = true;
        n.f_dead =
            c.f_dead || !ctx.letter_in_j[static_cast<std::size_t>(of)];
        n.g_dead =
            c.g_dead || !ctx.letter_in_j[static_cast<std::size_t>(og)];
      } else {
        n.in_j = false;
        n.f_dead = c.f_dead;
        n.g_dead = c.g_dead;
      }
      n.diff = c.diff || of != og;
      if (n.f_dead && n.g_dead) {
        continue;  // unstable for both operands forever: no witness below
      }
      int const idx = push(n, static_cast<int>(i), li);
      if (idx >= 0 && n.violates()) {
        // Reconstruct the witness word from the parent chain.
        Word w;
        for (int at = idx; parent[static_cast<std::size_t>(at)].first >= 0;
             at = parent[static_cast<std::size_t>(at)].first) {
          w.push_back(ctx.act_tj->letter(
              parent[static_cast<std::size_t>(at)].second));
        }
        std::reverse(w.begin(), w.end());
        res.equal = false;
        res.counterexample = std::move(w);
        break;
      }
    }
  }
  return res;
}

namespace {

// The zero composition over T: the one-generator machine of the zero of S.
CanonicalElement zero_residual(TowerContext const& ctx) {
  return canonicalize_domain(ctx.act_t, {*ctx.s.zero()});
}

}  // namespace

StableClass pi_embed(TowerContext const& ctx, Word const& f) {
  StableClass cls;
  cls.trace_part = trace_project(ctx, f);
  cls.residual.resize(static_cast<std::size_t>(ctx.act_tr->num_letters()));
  element_id const prod = ctx.s.product_of(f);  // s_n ... s_1 in S
  for (int li = 0; li < ctx.act_tr->num_letters(); ++li) {
    if (li == ctx.trace_zero_letter) {
      // At the zero letter the pair records the plain restriction to
      // T-words.
      cls.residual[static_cast<std::size_t>(li)] =
          canonicalize(ctx.act_t, f);
      continue;
    }
    element_id const j = ctx.j_of_trace_letter[static_cast<std::size_t>(li)];
    element_id const first_out = ctx.s.product(prod, j);
    if (std::binary_search(ctx.j_class.begin(), ctx.j_class.end(),
                           first_out)) {
      // [j] is stable for f: the residual past it, restricted to T-words.
      cls.residual[static_cast<std::size_t>(li)] = canonicalize_domain(
          ctx.act_t, restriction(*ctx.act_tj, f, {j}));
    } else {
      cls.residual[static_cast<std::size_t>(li)] = zero_residual(ctx);
    }
  }
  return cls;
}

StableClass semidirect_mul(TowerContext const& ctx, StableClass const& x,
                           StableClass const& y) {
  StableClass out;
  out.trace_part = compose(x.trace_part, y.trace_part);
  out.residual.resize(static_cast<std::size_t>(ctx.act_tr->num_letters()));
  for (int li = 0; li < ctx.act_tr->num_letters(); ++li) {
    // Where does y send this trace letter?  Its machine's first output; the
    // zero letter maps to itself, and an unstable letter also answers zero,
    // which composes x's restriction-to-T with y's zero residual — the zero
    // residual again, as required.
    std::int32_t const target =
        y.trace_part.machine().out(y.trace_part.machine().initial, li);
    out.residual[static_cast<std::size_t>(li)] =
        compose(x.residual[static_cast<std::size_t>(target)],
                y.residual[static_cast<std::size_t>(li)]);
  }
  return out;
}

Verdict verify_embedding(TowerContext const& ctx, int max_word_len) {
  Verdict v;
  // All generator words of length 1 .. max_word_len, in length-lexicographic
  // order.
  std::vector<Word> words;
  {
    std::vector<Word> level;
    for (element_id s = 0; s < ctx.s.order(); ++s) {
      level.push_back({s});
    }
    for (int len = 1; len <= max_word_len; ++len) {
      words.insert(words.end(), level.begin(), level.end());
      if (len == max_word_len) {
        break;
      }
      std::vector<Word> next;
      for (auto const& w : level) {
        for (element_id s = 0; s < ctx.s.order(); ++s) {
          Word e = w;
          e.push_back(s);
          next.push_back(std::move(e));
        }
      }
      level = std::move(next);
    }
  }

  std::vector<StableClass> pi;
  pi.reserve(words.size());
  for (auto const& w : words) {
    pi.push_back(pi_embed(ctx, w));
  }

  auto word_names = [&](Word const& w) {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i > 0) {
        out += ",";
      }
      out += ctx.s.name_of(w[i]);
    }
    return out;
  };

  for (std::size_t i = 0; i < words.size(); ++i) {
    for (std::size_t k = 0; k < words.size(); ++k) {
      // Morphism law: the pair product must match the pair of the
      // concatenated word (words[i] outermost).
      Word fg = words[i];
      fg.insert(fg.end(), words[k].begin(), words[k].end());
      StableClass const lhs = semidirect_mul(ctx, pi[i], pi[k]);
      StableClass const rhs = pi_embed(ctx, fg);
      if (lhs != rhs) {
        v.detail = "pair product of (" + word_names(words[i]) + ") and ("
                   + word_names(words[k]) + ") differs from the pair of "
                   "their concatenation";
        return v;
      }
    }
  }
  for (std::size_t i = 0; i < words.size(); ++i) {
    for (std::size_t k = i + 1; k < words.size(); ++k) {
      bool const same_pair = pi[i] == pi[k];
      StEqualResult const st = st_equal(ctx, words[i], words[k]);
      if (same_pair != st.equal) {
        v.detail = "words (" + word_names(words[i]) + ") and ("
                   + word_names(words[k]) + ") have "
                   + (same_pair ? "equal pairs but are not stable-word "
                                  "congruent"
                                : "different pairs but are stable-word "
                                  "congruent");
        return v;
      }
    }
  }
  v.ok = true;
  return v;
}

AdditivityReport tower_additivity(TowerContext const& ctx,
                                  EnumOptions const& opts) {
  AdditivityReport rep;
  auto index_of = [&](ActionPtr const& act) {
    EnumResult const e = enumerate(act, opts);
    auto const idx = cayley_aperiodicity_index(e);
    if (!idx) {
      throw PreconditionError("NotAperiodic",
                              "a layer enumeration is not aperiodic");
    }
    return *idx;
  };
  rep.index_tj = index_of(ctx.act_tj);
  rep.index_t = index_of(ctx.act_t);
  rep.index_tr = index_of(ctx.act_tr);
  rep.holds = rep.index_tj <= rep.index_t + rep.index_tr;
  return rep;
}

ZeroMinimalContext make_zero_minimal_context(FiniteSemigroup const& s,
                                             std::vector<element_id> ideal) {
  ZeroMinimalContext ctx;
  ctx.s = s;
  if (!s.has_zero()) {
    throw PreconditionError("NoZero",
                            "a 0-minimal context requires a zero");
  }
  if (!is_aperiodic(s)) {
    throw PreconditionError("NotAperiodic",
                            "a 0-minimal context requires an aperiodic "
                            "semigroup");
  }
  std::sort(ideal.begin(), ideal.end());
  ideal.erase(std::unique(ideal.begin(), ideal.end()), ideal.end());
  validate_ideal(s, ideal);
  ctx.ideal = std::move(ideal);
  element_id const z = *s.zero();
  for (element_id const x : ctx.ideal) {
    if (x != z) {
      ctx.j_class.push_back(x);
    }
  }
  if (ctx.j_class.size() + 1 != ctx.ideal.size() || ctx.j_class.empty()) {
    throw PreconditionError("PreconditionViolated",
                            "the ideal must be {0} plus a nonempty J-class");
  }
  ctx.g = green(s);
  int const jc =
      ctx.g.j_class_of[static_cast<std::size_t>(ctx.j_class.front())];
  if (ctx.g.j_classes[static_cast<std::size_t>(jc)] != ctx.j_class) {
    throw PreconditionError("PreconditionViolated",
                            "the ideal minus the zero must be a single "
                            "J-class");
  }
  if (!ctx.g.j_regular[static_cast<std::size_t>(jc)]) {
    throw PreconditionError("PreconditionViolated",
                            "the 0-minimal ideal must be regular");
  }
  ctx.rees = rees_coordinates(s, ctx.g, jc);
  ctx.ext = extended_matrix(s, ctx.g, ctx.rees);
  return ctx;
}

std::vector<int> new_indices(ZeroMinimalContext const& ctx,
                             Word const& gen_word, int a_row) {
  if (a_row < 0 || a_row >= static_cast<int>(ctx.rees.a_rows.size())) {
    throw PreconditionError("OutOfRangeEntry", "row coordinate out of range");
  }
  int const n = static_cast<int>(gen_word.size());
  // pi(1) = a, pi(i) = s_{i-1} ... s_1 * a; the word stores s_1 last.
  std::vector<int> visited;
  std::vector<int> out;
  int coord = a_row;
  for (int i = 1; i <= n; ++i) {
    if (std::find(visited.begin(), visited.end(), coord) == visited.end()) {
      out.push_back(i);
      visited.push_back(coord);
    }
    element_id const s = gen_word[static_cast<std::size_t>(n - i)];
    if (s < 0 || s >= ctx.s.order()) {
      throw AlphabetMismatchError("generator id " + std::to_string(s)
                                  + " out of range");
    }
    coord = ctx.ext.left_action[static_cast<std::size_t>(s)]
                               [static_cast<std::size_t>(coord)];
    if (coord == UNDEFINED) {
      throw PreconditionError("ActionKilled",
                              "the word kills row coordinate "
                                  + std::to_string(a_row) + " at step "
                                  + std::to_string(i));
    }
  }
  return out;
}

}  // namespace cayley
