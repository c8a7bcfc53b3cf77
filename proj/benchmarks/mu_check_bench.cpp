// Copyright 2026 The twomus Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <vector>

#include "twomus/mu_check.hpp"
#include "twomus/oracle.hpp"

namespace {

using twomus::ClauseSet;
using twomus::Family;

std::vector<std::size_t> chain_lengths(std::size_t c) {
  const std::size_t k0 = c / 2 - 1;
  return {k0, c - 3 - k0};
}

// Randomly renamed and shuffled; the reduction walks memory in random order.
void BM_CsdpFull(benchmark::State& state) {
  const auto c = static_cast<std::size_t>(state.range(0));
  const ClauseSet f = twomus::gen_family(Family::IIb, chain_lengths(c), c);
  const twomus::CsdpOptions options{2, false};
  for (auto _ : state) benchmark::DoNotOptimize(twomus::csdp_full(f, options));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_CsdpFull)->RangeMultiplier(10)->Range(1000, 1000000)->Unit(benchmark::kMillisecond)->Complexity();

// Same chains with consecutive variables and clauses.
void BM_CsdpFullOrdered(benchmark::State& state) {
  const auto c = static_cast<std::size_t>(state.range(0));
  const ClauseSet f = twomus::family_template(Family::IIb, chain_lengths(c));
  const twomus::CsdpOptions options{2, false};
  for (auto _ : state) benchmark::DoNotOptimize(twomus::csdp_full(f, options));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_CsdpFullOrdered)
    ->RangeMultiplier(10)
    ->Range(1000, 1000000)
    ->Unit(benchmark::kMillisecond)
    ->Complexity();

void BM_Is2mu(benchmark::State& state) {
  const auto c = static_cast<std::size_t>(state.range(0));
  const ClauseSet f = twomus::gen_family(Family::IIb, chain_lengths(c), c);
  for (auto _ : state) benchmark::DoNotOptimize(twomus::is_2mu(f));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Is2mu)->RangeMultiplier(10)->Range(1000, 1000000)->Unit(benchmark::kMillisecond)->Complexity();

}  // namespace
