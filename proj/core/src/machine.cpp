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

#include "cayley/machine.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace cayley {

namespace {

constexpr std::uint64_t kFnvOffset = 1469598103934665603ULL;
constexpr std::uint64_t kFnvPrime = 1099511628211ULL;

std::uint64_t fnv_step(std::uint64_t h, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) {
    h ^= (v >> (8 * i)) & 0xff;
    h *= kFnvPrime;
  }
  return h;
}

template <typename Ints>
std::uint64_t fnv_range(std::uint64_t h, Ints const& xs) {
  for (auto const x : xs) {
    h = fnv_step(h, static_cast<std::uint64_t>(x));
  }
  return h;
}

struct WordHash {
  std::size_t operator()(Word const& w) const {
    return static_cast<std::size_t>(fnv_range(kFnvOffset, w));
  }
};

}  // namespace

// ---------------------------------------------------------------------
// Action
// ---------------------------------------------------------------------

std::shared_ptr<Action const> Action::make(FiniteSemigroup base,
                                           FiniteSemigroup domain,
                                           std::vector<element_id> alphabet,
                                           std::vector<element_id> gen_image,
                                           ActionMode mode) {
  auto act = std::shared_ptr<Action>(new Action());
  act->_base = std::move(base);
  act->_domain = std::move(domain);
  act->_alphabet = std::move(alphabet);
  act->_gen_image = std::move(gen_image);
  act->_mode = mode;
  act->_letter_index.assign(static_cast<std::size_t>(act->_domain.order()),
                            -1);
  for (std::size_t i = 0; i < act->_alphabet.size(); ++i) {
    act->_letter_index[static_cast<std::size_t>(act->_alphabet[i])] =
        static_cast<int>(i);
  }
  std::uint64_t h = kFnvOffset;
  h = fnv_step(h, static_cast<std::uint64_t>(act->_mode));
  h = fnv_step(h, static_cast<std::uint64_t>(act->_domain.order()));
  for (element_id a = 0; a < act->_domain.order(); ++a) {
    for (element_id b = 0; b < act->_domain.order(); ++b) {
      h = fnv_step(h, static_cast<std::uint64_t>(act->_domain.product(a, b)));
    }
  }
  h = fnv_range(h, act->_alphabet);
  h = fnv_range(h, act->_gen_image);
  act->_fingerprint = h;
  return act;
}

std::shared_ptr<Action const> Action::full(FiniteSemigroup s) {
  FiniteSemigroup domain = adjoin_identity(s);
  std::vector<element_id> alphabet(static_cast<std::size_t>(domain.order()));
  std::iota(alphabet.begin(), alphabet.end(), 0);
  std::vector<element_id> gen_image(static_cast<std::size_t>(s.order()));
  std::iota(gen_image.begin(), gen_image.end(), 0);
  return make(std::move(s), std::move(domain), std::move(alphabet),
              std::move(gen_image), ActionMode::full);
}

std::shared_ptr<Action const> Action::on_ideal(FiniteSemigroup s,
                                               std::vector<element_id> ideal) {
  validate_ideal(s, ideal);
  std::sort(ideal.begin(), ideal.end());
  ideal.erase(std::unique(ideal.begin(), ideal.end()), ideal.end());
  std::vector<element_id> gen_image(static_cast<std::size_t>(s.order()));
  std::iota(gen_image.begin(), gen_image.end(), 0);
  FiniteSemigroup domain = s;
  return make(std::move(s), std::move(domain), std::move(ideal),
              std::move(gen_image), ActionMode::ideal);
}

namespace {

// Elements strictly below a J-class: (union of principal two-sided ideals of
// its members) minus the class itself.
std::vector<element_id> ideal_strictly_below(FiniteSemigroup const& s,
                                             GreenStructure const& g,
                                             std::vector<element_id> const& j) {
  std::vector<char> in_j(static_cast<std::size_t>(s.order()), 0);
  for (element_id x : j) {
    in_j[static_cast<std::size_t>(x)] = 1;
  }
  int const jc = g.j_class_of[static_cast<std::size_t>(j.front())];
  std::vector<element_id> below;
  for (int p = 0; p < static_cast<int>(g.j_classes.size()); ++p) {
    if (g.j_below[static_cast<std::size_t>(p)][static_cast<std::size_t>(jc)]) {
      for (element_id x : g.j_classes[static_cast<std::size_t>(p)]) {
        below.push_back(x);
      }
    }
  }
  std::sort(below.begin(), below.end());
  return below;
}

void validate_j_class(GreenStructure const& g,
                      std::vector<element_id> const& j) {
  if (j.empty()) {
    throw PreconditionError("PreconditionViolated", "empty J-class given");
  }
  std::vector<element_id> expect =
      g.j_classes.at(static_cast<std::size_t>(
          g.j_class_of.at(static_cast<std::size_t>(j.front()))));
  std::vector<element_id> sorted_j = j;
  std::sort(sorted_j.begin(), sorted_j.end());
  if (sorted_j != expect) {
    throw PreconditionError("PreconditionViolated",
                            "the given set is not a J-class");
  }
}

}  // namespace

std::shared_ptr<Action const> Action::on_trace(FiniteSemigroup const& s,
                                               std::vector<element_id> j) {
  GreenStructure const g = green(s);
  validate_j_class(g, j);
  std::sort(j.begin(), j.end());
  std::vector<element_id> const below = ideal_strictly_below(s, g, j);
  if (!below.empty()) {
    return on_trace_over(s, below, std::move(j));
  }
  // Nothing lies below the class, so its members multiply inside it; a fresh
  // absorbing letter still has to exist to play the role of the zero.
  FiniteSemigroup domain = adjoin_zero_always(s);
  element_id const zero = domain.order() - 1;
  std::vector<element_id> alphabet = j;
  alphabet.push_back(zero);
  std::vector<element_id> gen_image(static_cast<std::size_t>(s.order()));
  std::iota(gen_image.begin(), gen_image.end(), 0);
  return make(s, std::move(domain), std::move(alphabet), std::move(gen_image),
              ActionMode::trace);
}

std::shared_ptr<Action const> Action::on_trace_over(
    FiniteSemigroup const& s, std::vector<element_id> const& below,
    std::vector<element_id> j) {
  std::sort(j.begin(), j.end());
  {
    std::vector<char> in_below(static_cast<std::size_t>(s.order()), 0);
    for (element_id x : below) {
      in_below.at(static_cast<std::size_t>(x)) = 1;
    }
    for (element_id x : j) {
      if (in_below[static_cast<std::size_t>(x)]) {
        throw PreconditionError("PreconditionViolated",
                                "the J-class meets the ideal below it");
      }
    }
    std::vector<element_id> both = below;
    both.insert(both.end(), j.begin(), j.end());
    validate_ideal(s, both);
  }
  ReesQuotient const rq = rees_quotient(s, below);
  std::vector<element_id> alphabet;
  alphabet.reserve(j.size() + 1);
  for (element_id x : j) {
    alphabet.push_back(rq.map[static_cast<std::size_t>(x)]);
  }
  alphabet.push_back(rq.zero);
  std::sort(alphabet.begin(), alphabet.end());
  std::vector<element_id> gen_image(static_cast<std::size_t>(s.order()));
  for (element_id a = 0; a < s.order(); ++a) {
    gen_image[static_cast<std::size_t>(a)] =
        rq.map[static_cast<std::size_t>(a)];
  }
  return make(s, rq.quotient, std::move(alphabet), std::move(gen_image),
              ActionMode::trace);
}

Word Action::to_domain(Word const& gen_word) const {
  if (gen_word.empty()) {
    throw PreconditionError("PreconditionViolated",
                            "a generator word must be nonempty");
  }
  Word out;
  out.reserve(gen_word.size());
  for (element_id s : gen_word) {
    if (s < 0 || s >= _base.order()) {
      throw AlphabetMismatchError("generator id " + std::to_string(s)
                                  + " is outside [0, "
                                  + std::to_string(_base.order()) + ")");
    }
    out.push_back(_gen_image[static_cast<std::size_t>(s)]);
  }
  return out;
}

void Action::check_input(Word const& w) const {
  for (element_id a : w) {
    if (a < 0 || a >= _domain.order()
        || _letter_index[static_cast<std::size_t>(a)] < 0) {
      throw AlphabetMismatchError("input letter " + std::to_string(a)
                                  + " is not in the alphabet");
    }
  }
}

Word Action::input_from_names(std::vector<std::string> const& names) const {
  Word w;
  w.reserve(names.size());
  for (auto const& nm : names) {
    element_id const a = _domain.element_by_name(nm);
    if (a == UNDEFINED || _letter_index[static_cast<std::size_t>(a)] < 0) {
      throw AlphabetMismatchError("\"" + nm + "\" is not an input letter");
    }
    w.push_back(a);
  }
  return w;
}

// ---------------------------------------------------------------------
// Cascade evaluation
// ---------------------------------------------------------------------

namespace {

// State cells of the cascade for a domain word {u_n, ..., u_1} (outermost
// first): cell 0 is the innermost u_1, cell n-1 the outermost u_n.
Word initial_cells(Word const& domain_word) {
  return Word(domain_word.rbegin(), domain_word.rend());
}

// One input letter: innermost cell multiplies by the letter, every later
// cell by its freshly updated predecessor; the outermost cell is the output.
element_id step_cells(FiniteSemigroup const& d, Word& cells, element_id a) {
  cells[0] = d.product(cells[0], a);
  for (std::size_t k = 1; k < cells.size(); ++k) {
    cells[k] = d.product(cells[k], cells[k - 1]);
  }
  return cells.back();
}

}  // namespace

Word apply_domain(Action const& act, Word const& domain_word,
                  Word const& input) {
  if (domain_word.empty()) {
    throw PreconditionError("PreconditionViolated",
                            "a composition must have at least one generator");
  }
  act.check_input(input);
  Word cells = initial_cells(domain_word);
  Word out;
  out.reserve(input.size());
  for (element_id a : input) {
    out.push_back(step_cells(act.domain(), cells, a));
  }
  return out;
}

Word apply(Action const& act, Word const& gen_word, Word const& input) {
  return apply_domain(act, act.to_domain(gen_word), input);
}

std::vector<std::vector<element_id>> pascal_array(Action const& act,
                                                  Word const& rows,
                                                  Word const& input) {
  Word domain_rows = act.to_domain(rows);  // here rows[0] is s_1 (innermost)
  act.check_input(input);
  std::size_t const n = domain_rows.size();
  std::size_t const k = input.size();
  std::vector<std::vector<element_id>> t(
      n + 1, std::vector<element_id>(k + 1, UNDEFINED));
  for (std::size_t c = 0; c < k; ++c) {
    t[0][c + 1] = input[c];
  }
  for (std::size_t r = 0; r < n; ++r) {
    t[r + 1][0] = domain_rows[r];
  }
  for (std::size_t r = 1; r <= n; ++r) {
    for (std::size_t c = 1; c <= k; ++c) {
      t[r][c] = act.domain().product(t[r][c - 1], t[r - 1][c]);
    }
  }
  return t;
}

Word restriction(Action const& act, Word const& gen_word, Word const& v) {
  act.check_input(v);
  Word cells = initial_cells(act.to_domain(gen_word));
  for (element_id a : v) {
    step_cells(act.domain(), cells, a);
  }
  return Word(cells.rbegin(), cells.rend());  // outermost first again
}

// ---------------------------------------------------------------------
// Machines
// ---------------------------------------------------------------------

MealyMachine cascade_machine(Action const& act, Word const& domain_word,
                             std::size_t state_budget) {
  if (domain_word.empty()) {
    throw PreconditionError("PreconditionViolated",
                            "a composition must have at least one generator");
  }
  int const nl = act.num_letters();
  MealyMachine m;
  m.num_letters = nl;
  std::unordered_map<Word, std::int32_t, WordHash> id_of;
  std::vector<Word> states;
  states.push_back(initial_cells(domain_word));
  id_of.emplace(states.front(), 0);
  m.initial = 0;
  for (std::size_t q = 0; q < states.size(); ++q) {
    for (int li = 0; li < nl; ++li) {
      Word next = states[q];
      element_id const out =
          step_cells(act.domain(), next, act.letter(li));
      auto const [it, fresh] =
          id_of.emplace(next, static_cast<std::int32_t>(states.size()));
      if (fresh) {
        if (states.size() >= state_budget) {
          throw StateBudgetExceededError(state_budget);
        }
        states.push_back(std::move(next));
      }
      m.delta.push_back(it->second);
      m.lambda.push_back(act.letter_index(out));
    }
  }
  m.num_states = static_cast<std::int32_t>(states.size());
  return m;
}

MealyMachine base_machine(Action const& act) {
  int const n = act.domain().order();
  int const nl = act.num_letters();
  MealyMachine m;
  m.num_states = n;
  m.num_letters = nl;
  m.initial = 0;
  m.delta.reserve(static_cast<std::size_t>(n) * nl);
  m.lambda.reserve(static_cast<std::size_t>(n) * nl);
  for (element_id q = 0; q < n; ++q) {
    for (int li = 0; li < nl; ++li) {
      element_id const p = act.domain().product(q, act.letter(li));
      m.delta.push_back(p);
      m.lambda.push_back(act.letter_index(p));
    }
  }
  return m;
}

// ---------------------------------------------------------------------
// Minimisation and canonical values
// ---------------------------------------------------------------------

CanonicalElement minimize_machine(ActionPtr const& act, MealyMachine const& m) {
  int const n = m.num_states;
  int const nl = m.num_letters;
  std::vector<int> block(static_cast<std::size_t>(n));
  int num_blocks = 0;
  {
    // Seed the partition with the output rows.
    std::map<std::vector<std::int32_t>, int> seen;
    for (int q = 0; q < n; ++q) {
      std::vector<std::int32_t> row(
          m.lambda.begin() + static_cast<std::ptrdiff_t>(q) * nl,
          m.lambda.begin() + static_cast<std::ptrdiff_t>(q + 1) * nl);
      auto const [it, fresh] = seen.emplace(std::move(row), num_blocks);
      if (fresh) {
        ++num_blocks;
      }
      block[static_cast<std::size_t>(q)] = it->second;
    }
  }
  // Split on successor blocks until nothing changes.
  for (;;) {
    std::map<std::vector<int>, int> seen;
    std::vector<int> next(static_cast<std::size_t>(n));
    int count = 0;
    for (int q = 0; q < n; ++q) {
      std::vector<int> sig;
      sig.reserve(static_cast<std::size_t>(nl) + 1);
      sig.push_back(block[static_cast<std::size_t>(q)]);
      for (int li = 0; li < nl; ++li) {
        sig.push_back(block[static_cast<std::size_t>(m.next(q, li))]);
      }
      auto const [it, fresh] = seen.emplace(std::move(sig), count);
      if (fresh) {
        ++count;
      }
      next[static_cast<std::size_t>(q)] = it->second;
    }
    if (count == num_blocks) {
      break;
    }
    num_blocks = count;
    block = std::move(next);
  }

  // Breadth-first renumbering from the initial block, letters ascending.
  std::vector<int> renumber(static_cast<std::size_t>(num_blocks), -1);
  std::vector<int> rep;  // representative original state per new number
  rep.reserve(static_cast<std::size_t>(num_blocks));
  std::deque<int> queue;
  renumber[static_cast<std::size_t>(
      block[static_cast<std::size_t>(m.initial)])] = 0;
  rep.push_back(m.initial);
  queue.push_back(m.initial);
  while (!queue.empty()) {
    int const q = queue.front();
    queue.pop_front();
    for (int li = 0; li < nl; ++li) {
      int const tb = block[static_cast<std::size_t>(m.next(q, li))];
      if (renumber[static_cast<std::size_t>(tb)] == -1) {
        renumber[static_cast<std::size_t>(tb)] =
            static_cast<int>(rep.size());
        rep.push_back(m.next(q, li));
        queue.push_back(m.next(q, li));
      }
    }
  }

  CanonicalElement f;
  f._act = act;
  f._m.num_states = static_cast<std::int32_t>(rep.size());
  f._m.num_letters = nl;
  f._m.initial = 0;
  f._m.delta.reserve(rep.size() * static_cast<std::size_t>(nl));
  f._m.lambda.reserve(rep.size() * static_cast<std::size_t>(nl));
  for (std::size_t nb = 0; nb < rep.size(); ++nb) {
    int const q = rep[nb];
    for (int li = 0; li < nl; ++li) {
      f._m.delta.push_back(static_cast<std::int32_t>(
          renumber[static_cast<std::size_t>(
              block[static_cast<std::size_t>(m.next(q, li))])]));
      f._m.lambda.push_back(m.out(q, li));
    }
  }
  std::uint64_t h = act ? act->fingerprint() : kFnvOffset;
  h = fnv_step(h, static_cast<std::uint64_t>(f._m.num_states));
  h = fnv_range(h, f._m.delta);
  h = fnv_range(h, f._m.lambda);
  f._hash = h;
  return f;
}

bool operator==(CanonicalElement const& f, CanonicalElement const& g) {
  std::uint64_t const af = f._act ? f._act->fingerprint() : 0;
  std::uint64_t const ag = g._act ? g._act->fingerprint() : 0;
  return af == ag && f._m.num_states == g._m.num_states
         && f._m.num_letters == g._m.num_letters && f._m.delta == g._m.delta
         && f._m.lambda == g._m.lambda;
}

Word CanonicalElement::evaluate(Word const& input) const {
  if (!_act) {
    throw PreconditionError("PreconditionViolated",
                            "evaluate called on a default-constructed value");
  }
  _act->check_input(input);
  Word out;
  out.reserve(input.size());
  std::int32_t q = _m.initial;
  for (element_id a : input) {
    int const li = _act->letter_index(a);
    out.push_back(_act->letter(_m.out(q, li)));
    q = _m.next(q, li);
  }
  return out;
}

bool CanonicalElement::is_identity_function() const {
  if (_m.num_states != 1) {
    return false;
  }
  for (std::int32_t li = 0; li < _m.num_letters; ++li) {
    if (_m.out(0, li) != li) {
      return false;
    }
  }
  return true;
}

CanonicalElement compose(CanonicalElement const& f, CanonicalElement const& g,
                         std::size_t state_budget) {
  if (!f.action() || !g.action()
      || f.action()->fingerprint() != g.action()->fingerprint()) {
    throw AlphabetMismatchError(
        "cannot compose machine values over different actions");
  }
  MealyMachine const& mf = f.machine();
  MealyMachine const& mg = g.machine();
  int const nl = mf.num_letters;
  MealyMachine prod;
  prod.num_letters = nl;
  prod.initial = 0;
  // Reachable pairs (state of g, state of f); g reads the input and f reads
  // g's output.
  std::unordered_map<std::uint64_t, std::int32_t> id_of;
  std::vector<std::pair<std::int32_t, std::int32_t>> states;
  auto key = [&](std::int32_t qg, std::int32_t qf) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(qg)) << 32)
           | static_cast<std::uint32_t>(qf);
  };
  states.emplace_back(mg.initial, mf.initial);
  id_of.emplace(key(mg.initial, mf.initial), 0);
  for (std::size_t q = 0; q < states.size(); ++q) {
    auto const [qg, qf] = states[q];
    for (int li = 0; li < nl; ++li) {
      std::int32_t const b = mg.out(qg, li);
      std::int32_t const c = mf.out(qf, b);
      std::int32_t const ng = mg.next(qg, li);
      std::int32_t const nf = mf.next(qf, b);
      auto const [it, fresh] =
          id_of.emplace(key(ng, nf), static_cast<std::int32_t>(states.size()));
      if (fresh) {
        if (states.size() >= state_budget) {
          throw StateBudgetExceededError(state_budget);
        }
        states.emplace_back(ng, nf);
      }
      prod.delta.push_back(it->second);
      prod.lambda.push_back(c);
    }
  }
  prod.num_states = static_cast<std::int32_t>(states.size());
  CanonicalElement out = minimize_machine(f.action(), prod);
  Word w = f.witness();
  w.insert(w.end(), g.witness().begin(), g.witness().end());
  out.set_witness(std::move(w));
  return out;
}

CanonicalElement canonicalize_domain(ActionPtr const& act,
                                     Word const& domain_word,
                                     std::size_t state_budget) {
  if (domain_word.empty()) {
    throw PreconditionError("PreconditionViolated",
                            "a composition must have at least one generator");
  }
  // Compose single-cell machines from the innermost generator outwards,
  // minimising at each step; intermediate machines stay small even for words
  // whose explicit cascade would be enormous.
  auto single = [&](element_id u) {
    return minimize_machine(act,
                            cascade_machine(*act, Word{u}, state_budget));
  };
  CanonicalElement acc = single(domain_word.back());
  for (std::size_t i = domain_word.size() - 1; i-- > 0;) {
    acc = compose(single(domain_word[i]), acc, state_budget);
  }
  acc.set_witness({});
  return acc;
}

CanonicalElement canonicalize(ActionPtr const& act, Word const& gen_word,
                              std::size_t state_budget) {
  CanonicalElement f =
      canonicalize_domain(act, act->to_domain(gen_word), state_budget);
  f.set_witness(gen_word);
  return f;
}

bool equal(ActionPtr const& act, Word const& f, Word const& g,
           std::size_t state_budget) {
  return canonicalize(act, f, state_budget)
         == canonicalize(act, g, state_budget);
}

bool equal_bisimulation(CanonicalElement const& f, CanonicalElement const& g) {
  if (!f.action() || !g.action()
      || f.action()->fingerprint() != g.action()->fingerprint()) {
    throw AlphabetMismatchError(
        "cannot compare machine values over different actions");
  }
  MealyMachine const& mf = f.machine();
  MealyMachine const& mg = g.machine();
  int const nl = mf.num_letters;
  std::unordered_set<std::uint64_t> seen;
  std::deque<std::pair<std::int32_t, std::int32_t>> queue;
  auto key = [](std::int32_t a, std::int32_t b) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32)
           | static_cast<std::uint32_t>(b);
  };
  queue.emplace_back(mf.initial, mg.initial);
  seen.insert(key(mf.initial, mg.initial));
  while (!queue.empty()) {
    auto const [qf, qg] = queue.front();
    queue.pop_front();
    for (int li = 0; li < nl; ++li) {
      if (mf.out(qf, li) != mg.out(qg, li)) {
        return false;
      }
      auto const k = key(mf.next(qf, li), mg.next(qg, li));
      if (seen.insert(k).second) {
        queue.emplace_back(mf.next(qf, li), mg.next(qg, li));
      }
    }
  }
  return true;
}

// ---------------------------------------------------------------------
// Portraits and rendering
// ---------------------------------------------------------------------

Portrait portrait(ActionPtr const& act_ptr, Word const& gen_word, int depth) {
  Action const& act = *act_ptr;
  Portrait p;
  p.action = act_ptr;
  p.depth = depth;
  if (depth <= 0) {
    return p;
  }
  int const nl = act.num_letters();
  Word const root = initial_cells(act.to_domain(gen_word));
  std::vector<Word> cells;  // cascade state per node, parallel to addresses
  p.address.push_back({});
  cells.push_back(root);
  std::vector<int> level{0};
  for (std::size_t i = 0; i < p.address.size(); ++i) {
    p.child.emplace_back(static_cast<std::size_t>(nl), -1);
    p.output.emplace_back(static_cast<std::size_t>(nl), UNDEFINED);
    for (int li = 0; li < nl; ++li) {
      Word next = cells[i];
      element_id const out = step_cells(act.domain(), next, act.letter(li));
      p.output[i][static_cast<std::size_t>(li)] = out;
      if (level[i] + 1 < depth) {
        p.child[i][static_cast<std::size_t>(li)] =
            static_cast<int>(p.address.size());
        Word addr = p.address[i];
        addr.push_back(act.letter(li));
        p.address.push_back(std::move(addr));
        cells.push_back(std::move(next));
        level.push_back(level[i] + 1);
      }
    }
  }
  return p;
}

namespace {

std::string word_names(FiniteSemigroup const& d, Word const& w) {
  if (w.empty()) {
    return "\xce\xb5";  // epsilon, the empty word
  }
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0) {
      out += ",";
    }
    out += d.name_of(w[i]);
  }
  return out;
}

void portrait_node_text(Portrait const& p, int node, int indent,
                        std::ostringstream& os) {
  Action const& act = *p.action;
  os << std::string(static_cast<std::size_t>(indent) * 2, ' ')
     << word_names(act.domain(), p.address[static_cast<std::size_t>(node)])
     << ": {";
  for (int li = 0; li < act.num_letters(); ++li) {
    if (li > 0) {
      os << ", ";
    }
    os << act.letter_name(li) << "->"
       << act.domain().name_of(
              p.output[static_cast<std::size_t>(node)][static_cast<std::size_t>(
                  li)]);
  }
  os << "}\n";
  for (int li = 0; li < act.num_letters(); ++li) {
    int const c = p.child[static_cast<std::size_t>(node)]
                         [static_cast<std::size_t>(li)];
    if (c >= 0) {
      portrait_node_text(p, c, indent + 1, os);
    }
  }
}

std::string quote(std::string const& s) {
  std::string out = "\"";
  for (char const c : s) {
    if (c == '"' || c == '\\') {
      out += '\\';
    }
    out += c;
  }
  out += "\"";
  return out;
}

}  // namespace

std::string portrait_text(Portrait const& p) {
  std::ostringstream os;
  if (!p.address.empty()) {
    portrait_node_text(p, 0, 0, os);
  }
  return os.str();
}

std::string to_dot(Action const& act, MealyMachine const& m,
                   std::string const& graph_name,
                   std::vector<std::string> const& state_names) {
  std::ostringstream os;
  os << "digraph " << graph_name << " {\n  rankdir=LR;\n"
     << "  node [shape=circle];\n";
  for (std::int32_t q = 0; q < m.num_states; ++q) {
    os << "  q" << q << " [label="
       << quote(state_names.empty()
                    ? "q" + std::to_string(q)
                    : state_names[static_cast<std::size_t>(q)])
       << "];\n";
  }
  os << "  __start [shape=none, label=\"\"];\n  __start -> q" << m.initial
     << ";\n";
  for (std::int32_t q = 0; q < m.num_states; ++q) {
    for (std::int32_t li = 0; li < m.num_letters; ++li) {
      os << "  q" << q << " -> q" << m.next(q, li) << " [label="
         << quote(act.letter_name(li) + "/"
                  + act.letter_name(m.out(q, li)))
         << "];\n";
    }
  }
  os << "}\n";
  return os.str();
}

std::string to_dot(CanonicalElement const& f, std::string const& graph_name) {
  return to_dot(*f.action(), f.machine(), graph_name);
}

std::string to_dot(Portrait const& p, std::string const& graph_name) {
  Action const& act = *p.action;
  std::ostringstream os;
  os << "digraph " << graph_name << " {\n  node [shape=box];\n";
  for (std::size_t i = 0; i < p.address.size(); ++i) {
    std::string label;
    for (int li = 0; li < act.num_letters(); ++li) {
      if (li > 0) {
        label += " ";
      }
      label += act.letter_name(li) + "->"
               + act.domain().name_of(p.output[i][static_cast<std::size_t>(
                   li)]);
    }
    os << "  n" << i << " [label=" << quote(label) << "];\n";
  }
  for (std::size_t i = 0; i < p.address.size(); ++i) {
    for (int li = 0; li < act.num_letters(); ++li) {
      int const c = p.child[i][static_cast<std::size_t>(li)];
      if (c >= 0) {
        os << "  n" << i << " -> n" << c << " [label="
           << quote(act.letter_name(li)) << "];\n";
      }
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace cayley
