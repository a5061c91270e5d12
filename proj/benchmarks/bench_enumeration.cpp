//
// Copyright 2026 The gip Authors
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
//

#include <benchmark/benchmark.h>

#include "gip/diffpriv.hpp"
#include "gip/oracle.hpp"
#include "gip/semichain.hpp"
#include "gip/signals.hpp"

namespace {

gip::StateSpace numbered(int count) {
  std::vector<std::string> labels;
  for (int i = 0; i < count; ++i) labels.push_back("s" + std::to_string(i));
  return gip::StateSpace(std::move(labels));
}

void BM_EnumerateExtremeComplete(benchmark::State& state) {
  const int j = static_cast<int>(state.range(0));
  const gip::Graph g = gip::Graph::complete(numbered(j));
  const gip::Prior prior = gip::Prior::uniform(j);
  const gip::Budget budget{gip::Rational(2)};
  for (auto _ : state) {
    auto result = gip::enumerate_extreme_posteriors(g, prior, budget);
    benchmark::DoNotOptimize(result);
  }
}
BENCHMARK(BM_EnumerateExtremeComplete)->DenseRange(3, 7);

void BM_EnumerateExtremeCube(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const gip::DimensionSpec dims(std::vector<int>(static_cast<std::size_t>(k), 2));
  const gip::Graph g = gip::differential_graph(dims);
  const gip::Prior prior = gip::Prior::uniform(g.size());
  const gip::Budget budget{gip::Rational(2)};
  for (auto _ : state) {
    auto result = gip::enumerate_extreme_posteriors(g, prior, budget);
    benchmark::DoNotOptimize(result);
  }
}
BENCHMARK(BM_EnumerateExtremeCube)->DenseRange(2, 4);

void BM_VertexOracleGrid33(benchmark::State& state) {
  const gip::Graph g = gip::differential_graph(gip::DimensionSpec({3, 3}));
  const gip::Prior prior = gip::Prior::uniform(g.size());
  const gip::Budget budget{gip::Rational(2)};
  for (auto _ : state) {
    auto vertices = gip::vertex_enumeration(g, prior, budget, 9);
    benchmark::DoNotOptimize(vertices);
  }
}
BENCHMARK(BM_VertexOracleGrid33);

void BM_SpanningTreesCube3(benchmark::State& state) {
  const gip::Graph g = gip::differential_graph(gip::DimensionSpec({2, 2, 2}));
  for (auto _ : state) {
    std::size_t count = 0;
    gip::for_each_spanning_tree(g, [&count](const gip::SpanningTree&) { ++count; });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_SpanningTreesCube3);

void BM_DecomposePrior(benchmark::State& state) {
  const int j = static_cast<int>(state.range(0));
  const gip::Graph g = gip::Graph::complete(numbered(j));
  const gip::Prior prior = gip::Prior::uniform(j);
  const gip::Budget budget{gip::Rational(2)};
  const gip::Posterior mu(prior.probs());
  for (auto _ : state) {
    auto signal = gip::decompose_into_extremes(mu, g, prior, budget);
    benchmark::DoNotOptimize(signal);
  }
}
BENCHMARK(BM_DecomposePrior)->DenseRange(3, 6);

}  // namespace
