/*
 * Copyright 2026 The princ Authors
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

#include <benchmark/benchmark.h>

#include <random>

#include "princ/congruence.hpp"
#include "princ/construction.hpp"
#include "princ/fuzz.hpp"

using namespace princ;

namespace
{
const TemplateSet &
Templates()
{
  static const TemplateSet t = LoadTemplates(PRINC_BENCH_TEMPLATES);
  return t;
}

// A chain 0 < x1 < ... < xn < 1, the worst case for the size of K.
BoundedPoset
ChainOrder(std::size_t interior)
{
  std::vector<std::string> names{"0"};
  for (std::size_t k = 1; k <= interior; ++k) names.push_back("x" + std::to_string(k));
  names.push_back("1");
  std::vector<std::pair<std::string, std::string>> covers;
  for (std::size_t k = 0; k + 1 < names.size(); ++k) covers.emplace_back(names[k], names[k + 1]);
  return ToBounded(Poset::FromCovers(names, covers));
}

void
BM_AssembleK(benchmark::State &state)
{
  const auto p = ChainOrder(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(AssembleK(p, Templates()));
}
BENCHMARK(BM_AssembleK)->DenseRange(1, 6);

void
BM_PrincipalCongruence(benchmark::State &state)
{
  const auto k = AssembleK(ChainOrder(state.range(0)), Templates()).k;
  const Element n = static_cast<Element>(k.size());
  Element x = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(PrincipalCongruence(k, x % n, (x * 7 + 3) % n));
    ++x;
  }
  state.counters["elements"] = static_cast<double>(n);
}
BENCHMARK(BM_PrincipalCongruence)->DenseRange(1, 6);

void
BM_AllCongruences(benchmark::State &state)
{
  const auto k = AssembleK(ChainOrder(state.range(0)), Templates()).k;
  for (auto _ : state) benchmark::DoNotOptimize(AllCongruences(k));
  state.counters["elements"] = static_cast<double>(k.size());
}
BENCHMARK(BM_AllCongruences)->DenseRange(1, 6);

void
BM_VerifyTheorem(benchmark::State &state)
{
  auto rng = SampleRng(7, static_cast<std::size_t>(state.range(0)));
  const auto p = ToBounded(RandomBoundedPoset(rng, 8));
  for (auto _ : state) benchmark::DoNotOptimize(VerifyTheorem(p, Templates()));
}
BENCHMARK(BM_VerifyTheorem)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
