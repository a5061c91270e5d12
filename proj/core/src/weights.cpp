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

#include "gip/weights.hpp"

#include <algorithm>
#include <cstdlib>

#include "gip/errors.hpp"

namespace gip {

WeightMatrix::WeightMatrix(std::vector<int> potential) : potential_(std::move(potential)) {
  if (potential_.empty()) throw InvalidArgument("empty weight potential");
  const int low = *std::min_element(potential_.begin(), potential_.end());
  for (auto& c : potential_) c -= low;
}

std::vector<std::vector<int>> WeightMatrix::to_matrix() const {
  const int j = size();
  std::vector<std::vector<int>> w(static_cast<std::size_t>(j),
                                  std::vector<int>(static_cast<std::size_t>(j), 0));
  for (int a = 0; a < j; ++a) {
    for (int b = 0; b < j; ++b) w[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = entry(a, b);
  }
  return w;
}

namespace {

// Integer k with value = t^k, or nullopt when value is not a power of t.
// Requires t > 1 and value > 0.
std::optional<int> exact_log(const Rational& value, const Rational& t) {
  if (value == 1) return 0;
  Rational x = value;
  int k = 0;
  if (x > 1) {
    while (x > 1) {
      x /= t;
      ++k;
    }
    return x == 1 ? std::optional<int>(k) : std::nullopt;
  }
  while (x < 1) {
    x *= t;
    --k;
  }
  return x == 1 ? std::optional<int>(k) : std::nullopt;
}

}  // namespace

std::optional<WeightMatrix> integer_weight_matrix(const Posterior& mu, const Prior& prior,
                                                  const Budget& b) {
  if (mu.size() != prior.size()) throw InvalidArgument("posterior/prior dimension mismatch");
  if (b.degenerate()) {
    throw DegenerateBudget("integer weights need t > 1 to give distinct powers");
  }
  for (int i = 0; i < mu.size(); ++i) {
    if (mu[i] == 0) throw NotInteriorPosterior("integer_weight_matrix needs mu > 0 everywhere");
  }

  // All pairwise quotients are powers of t iff each quotient against state 0
  // is; the per-state exponents then are the potential.
  std::vector<int> potential(static_cast<std::size_t>(mu.size()), 0);
  for (int i = 1; i < mu.size(); ++i) {
    const auto k = exact_log(ratio_quotient(mu, prior, 0, i), b.t());
    if (!k) return std::nullopt;
    potential[static_cast<std::size_t>(i)] = *k;
  }
  return WeightMatrix(std::move(potential));
}

Posterior posterior_from_tree_weights(const Graph& g, const std::vector<TreeEdgeWeight>& tree,
                                      const Prior& prior, const Budget& b) {
  const int j = g.size();
  if (prior.size() != j) throw InvalidArgument("prior dimension does not match the graph");
  if (static_cast<int>(tree.size()) != j - 1) {
    throw NotSpanningTree("a spanning tree has exactly J-1 edges");
  }

  std::vector<std::vector<std::pair<int, int>>> incident(static_cast<std::size_t>(j));
  for (const auto& e : tree) {
    if (e.i < 0 || e.i >= j || e.j < 0 || e.j >= j) {
      throw IndexOutOfRange("tree edge endpoint out of range");
    }
    if (!g.adjacent(e.i, e.j)) throw NotSpanningTree("tree edge is not an edge of the graph");
    if (e.weight != 1 && e.weight != -1) {
      throw InvalidArgument("tree edge weights must be +1 or -1");
    }
    incident[static_cast<std::size_t>(e.i)].emplace_back(e.j, e.weight);
    incident[static_cast<std::size_t>(e.j)].emplace_back(e.i, -e.weight);
  }

  // Propagate the potential from state 0; a spanning tree reaches every
  // state exactly once.
  std::vector<int> potential(static_cast<std::size_t>(j), 0);
  std::vector<bool> seen(static_cast<std::size_t>(j), false);
  std::vector<int> stack = {0};
  seen[0] = true;
  int reached = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (auto [u, w] : incident[static_cast<std::size_t>(v)]) {
      if (seen[static_cast<std::size_t>(u)]) continue;
      seen[static_cast<std::size_t>(u)] = true;
      potential[static_cast<std::size_t>(u)] = potential[static_cast<std::size_t>(v)] + w;
      stack.push_back(u);
      ++reached;
    }
  }
  if (reached != j) throw NotSpanningTree("tree edges do not span all states");

  const int low = *std::min_element(potential.begin(), potential.end());
  std::vector<Rational> weighted(static_cast<std::size_t>(j));
  for (int v = 0; v < j; ++v) {
    weighted[static_cast<std::size_t>(v)] =
        pow_rational(b.t(), potential[static_cast<std::size_t>(v)] - low) * prior[v];
  }
  const Rational total = sum(weighted);
  for (auto& w : weighted) w /= total;
  return Posterior(std::move(weighted));
}

}  // namespace gip
