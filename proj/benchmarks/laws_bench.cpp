// Copyright 2026 The nilcsp Authors
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

#include "nilcsp/generator.hpp"
#include "nilcsp/laws.hpp"

namespace nilcsp {
namespace {

void BM_CheckLaw(benchmark::State& state) {
  auto law = static_cast<LawId>(state.range(0));
  LawCheckOptions options{100, 6, 6, 42};
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_law(law, options));
  }
  state.SetLabel(std::string(to_string(law)));
}
BENCHMARK(BM_CheckLaw)->DenseRange(0, 10, 1);

void BM_Normalize(benchmark::State& state) {
  auto terms = gen_terms(42, static_cast<std::size_t>(state.range(0)),
                         Alphabet{Event::named("a"), Event::named("b")}, 256);
  for (auto _ : state) {
    for (const auto& t : terms) benchmark::DoNotOptimize(normalize(t));
  }
  state.SetItemsProcessed(state.iterations() * 256);
}
BENCHMARK(BM_Normalize)->Arg(6)->Arg(12);

}  // namespace
}  // namespace nilcsp
