// Copyright 2026 The cayleycpp authors.
// SPDX-License-Identifier: Apache-2.0
//
//! \file
//! Microbenchmarks for the core operations: canonicalization, equality
//! decisions, closure enumeration, Green structure, the memory expansion and
//! the order-n semigroup census.

#include <benchmark/benchmark.h>

#include <algorithm>
#include <vector>

#include "cayley/catalog.hpp"
#include "cayley/enumerate.hpp"
#include "cayley/expansions.hpp"
#include "cayley/green.hpp"
#include "cayley/machine.hpp"
#include "cayley/semigroup.hpp"
#include "cayley/small_semigroups.hpp"
#include "cayley/verification.hpp"

namespace {

using cayley::Action;
using cayley::ActionPtr;
using cayley::element_id;
using cayley::FiniteSemigroup;
using cayley::Word;

//! A generator word of the requested length cycling through x, x^2, x^3.
Word cycling_word(int len) {
  Word w;
  w.reserve(static_cast<std::size_t>(len));
  for (int i = 0; i < len; ++i) {
    w.push_back(i % 3);
  }
  return w;
}

void BM_canonicalize(benchmark::State& state) {
  FiniteSemigroup const m5 = cayley::catalog_semigroup("M5");
  ActionPtr const act = Action::full(m5);
  Word const w = cycling_word(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(cayley::canonicalize(act, w));
  }
}
BENCHMARK(BM_canonicalize)->Arg(2)->Arg(4)->Arg(8);

void BM_apply(benchmark::State& state) {
  FiniteSemigroup const m5 = cayley::catalog_semigroup("M5");
  ActionPtr const act = Action::full(m5);
  Word const f = cycling_word(4);
  Word const input(static_cast<std::size_t>(state.range(0)), 5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(cayley::apply(*act, f, input));
  }
}
BENCHMARK(BM_apply)->Arg(8)->Arg(64)->Arg(512);

void BM_equal(benchmark::State& state) {
  FiniteSemigroup const m5 = cayley::catalog_semigroup("M5");
  ActionPtr const act = Action::full(m5);
  Word const f = cycling_word(static_cast<int>(state.range(0)));
  Word g = f;
  std::reverse(g.begin(), g.end());
  for (auto _ : state) {
    benchmark::DoNotOptimize(cayley::equal(act, f, g));
  }
}
BENCHMARK(BM_equal)->Arg(2)->Arg(4)->Arg(8);

void BM_enumerate_full(benchmark::State& state) {
  FiniteSemigroup const m5 = cayley::catalog_semigroup("M5");
  for (auto _ : state) {
    benchmark::DoNotOptimize(cayley::enumerate(Action::full(m5)));
  }
}
BENCHMARK(BM_enumerate_full);

void BM_green(benchmark::State& state) {
  FiniteSemigroup const m5 = cayley::catalog_semigroup("M5");
  for (auto _ : state) {
    benchmark::DoNotOptimize(cayley::green(m5));
  }
}
BENCHMARK(BM_green);

void BM_mem_order(benchmark::State& state) {
  FiniteSemigroup const m5 = cayley::catalog_semigroup("M5");
  for (auto _ : state) {
    benchmark::DoNotOptimize(cayley::mem_order(m5));
  }
}
BENCHMARK(BM_mem_order);

void BM_semigroup_census(benchmark::State& state) {
  int const order = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(cayley::all_semigroups_of_order(order));
  }
}
BENCHMARK(BM_semigroup_census)->Arg(2)->Arg(3);

void BM_verify_theorem_order2(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(cayley::verify_theorem(2));
  }
}
BENCHMARK(BM_verify_theorem_order2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
