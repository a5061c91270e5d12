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

#include "gip/semichain.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>

#include "gip/errors.hpp"

namespace gip {

SemiChain::SemiChain(std::vector<std::vector<int>> levels, int state_count)
    : levels_(std::move(levels)), level_of_(static_cast<std::size_t>(state_count), 0) {
  if (levels_.size() < 2) throw TooFewLevels("a semi-chain needs at least two levels");
  int covered = 0;
  for (std::size_t l = 0; l < levels_.size(); ++l) {
    auto& level = levels_[l];
    if (level.empty()) throw InvalidSemiChain("levels must be nonempty");
    std::sort(level.begin(), level.end());
    for (int state : level) {
      if (state < 0 || state >= state_count) throw IndexOutOfRange("state index out of range");
      if (level_of_[static_cast<std::size_t>(state)] != 0) {
        throw InvalidSemiChain("levels must be disjoint");
      }
      level_of_[static_cast<std::size_t>(state)] = static_cast<int>(l) + 1;
      ++covered;
    }
  }
  if (covered != state_count) throw InvalidSemiChain("levels must cover all states");
}

bool SemiChain::operator<(const SemiChain& other) const {
  if (level_count() != other.level_count()) return level_count() < other.level_count();
  return levels_ < other.levels_;
}

SpanningTree::SpanningTree(const Graph& g, std::vector<std::pair<int, int>> edges)
    : state_count_(g.size()), edges_(std::move(edges)) {
  const int j = g.size();
  if (static_cast<int>(edges_.size()) != j - 1) {
    throw NotSpanningTree("a spanning tree has exactly J-1 edges");
  }
  std::vector<int> parent(static_cast<std::size_t>(j));
  for (int v = 0; v < j; ++v) parent[static_cast<std::size_t>(v)] = v;
  auto root = [&parent](int v) {
    while (parent[static_cast<std::size_t>(v)] != v) {
      parent[static_cast<std::size_t>(v)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
      v = parent[static_cast<std::size_t>(v)];
    }
    return v;
  };
  for (auto& [a, b] : edges_) {
    if (a > b) std::swap(a, b);
    if (!g.adjacent(a, b)) throw NotSpanningTree("tree edge is not an edge of the host graph");
    const int ra = root(a), rb = root(b);
    if (ra == rb) throw NotSpanningTree("tree edges contain a cycle");
    parent[static_cast<std::size_t>(ra)] = rb;
  }
  std::sort(edges_.begin(), edges_.end());
}

bool validate_semichain(const SemiChain& c, const Graph& g) {
  if (c.state_count() != g.size()) {
    throw StateSetMismatch("semi-chain does not cover the graph's states");
  }
  for (auto [i, j] : g.edges()) {
    if (std::abs(c.level_of(i) - c.level_of(j)) > 1) return false;
  }
  return true;
}

bool is_strongly_connected(const SemiChain& c, const Graph& g) {
  if (!validate_semichain(c, g)) throw InvalidSemiChain("not a semi-chain of this graph");
  std::vector<std::uint64_t> between(static_cast<std::size_t>(g.size()), 0);
  for (auto [i, j] : g.edges()) {
    if (c.level_of(i) != c.level_of(j)) {
      between[static_cast<std::size_t>(i)] |= 1ULL << j;
      between[static_cast<std::size_t>(j)] |= 1ULL << i;
    }
  }
  for (const auto mask : between) {
    if (mask == 0) return false;
  }
  const std::uint64_t all = g.size() == 64 ? ~0ULL : (1ULL << g.size()) - 1;
  return mask_connected(between, all);
}

Posterior posterior_from_chain(const SemiChain& c, const Prior& prior, const Budget& b) {
  if (c.state_count() != prior.size()) {
    throw StateSetMismatch("semi-chain does not cover the prior's states");
  }
  // The shared factor t cancels in the normalization, so exponent l-1 is used.
  std::vector<Rational> weighted(static_cast<std::size_t>(prior.size()));
  for (int v = 0; v < prior.size(); ++v) {
    weighted[static_cast<std::size_t>(v)] = pow_rational(b.t(), c.level_of(v) - 1) * prior[v];
  }
  const Rational total = sum(weighted);
  for (auto& w : weighted) w /= total;
  return Posterior(std::move(weighted));
}

SemiChain reverse(const SemiChain& c) {
  std::vector<std::vector<int>> levels(c.levels().rbegin(), c.levels().rend());
  return SemiChain(std::move(levels), c.state_count());
}

SemiChain downward_fold(const SemiChain& c) {
  if (c.level_count() < 3) throw TooFewLevels("folding needs at least three levels");
  std::vector<std::vector<int>> levels;
  levels.push_back(c.level(1));
  std::vector<int> merged = c.level(0);
  merged.insert(merged.end(), c.level(2).begin(), c.level(2).end());
  levels.push_back(std::move(merged));
  for (int l = 3; l < c.level_count(); ++l) levels.push_back(c.level(l));
  return SemiChain(std::move(levels), c.state_count());
}

SemiChain upward_fold(const SemiChain& c) {
  const int count = c.level_count();
  if (count < 3) throw TooFewLevels("folding needs at least three levels");
  std::vector<std::vector<int>> levels;
  for (int l = 0; l < count - 3; ++l) levels.push_back(c.level(l));
  std::vector<int> merged = c.level(count - 3);
  merged.insert(merged.end(), c.level(count - 1).begin(), c.level(count - 1).end());
  levels.push_back(std::move(merged));
  levels.push_back(c.level(count - 2));
  return SemiChain(std::move(levels), c.state_count());
}

std::vector<SemiChain> enumerate_upward_unfoldings(const SemiChain& c, const Graph& g) {
  if (!validate_semichain(c, g)) throw InvalidSemiChain("not a semi-chain of this graph");

  const std::vector<int>& second = c.level(1);
  std::uint64_t third_mask = 0;
  if (c.level_count() >= 3) {
    for (int v : c.level(2)) third_mask |= 1ULL << v;
  }
  std::uint64_t second_mask = 0;
  for (int v : second) second_mask |= 1ULL << v;

  // The split-off part may have no edge into the remainder of level 2, so it
  // is a union of connected components of the subgraph induced on level 2;
  // components touching level 3 are ineligible.
  std::vector<std::uint64_t> components;  // eligible ones, by discovery order
  int total_components = 0;
  std::uint64_t visited = 0;
  for (int v : second) {
    if ((visited >> v) & 1ULL) continue;
    std::uint64_t component = 1ULL << v;
    std::uint64_t frontier = component;
    while (frontier != 0) {
      std::uint64_t next = 0;
      std::uint64_t scan = frontier;
      while (scan != 0) {
        const int u = std::countr_zero(scan);
        scan &= scan - 1;
        next |= g.neighbor_mask(u) & second_mask;
      }
      frontier = next & ~component;
      component |= frontier;
    }
    visited |= component;
    ++total_components;
    bool eligible = true;
    std::uint64_t scan = component;
    while (scan != 0 && eligible) {
      const int u = std::countr_zero(scan);
      scan &= scan - 1;
      eligible = (g.neighbor_mask(u) & third_mask) == 0;
    }
    if (eligible) components.push_back(component);
  }

  std::vector<SemiChain> result;
  const int eligible_count = static_cast<int>(components.size());
  if (eligible_count == 0) return result;
  for (std::uint64_t pick = 1; pick < (1ULL << eligible_count); ++pick) {
    // Keep the remainder of level 2 nonempty.
    if (std::popcount(pick) == total_components) continue;
    std::uint64_t head_mask = 0;
    for (int k = 0; k < eligible_count; ++k) {
      if ((pick >> k) & 1ULL) head_mask |= components[static_cast<std::size_t>(k)];
    }
    std::vector<int> head, rest;
    for (int v : second) {
      ((head_mask >> v) & 1ULL ? head : rest).push_back(v);
    }

    std::vector<std::vector<int>> levels;
    levels.push_back(std::move(head));
    levels.push_back(c.level(0));
    levels.push_back(std::move(rest));
    for (int l = 2; l < c.level_count(); ++l) levels.push_back(c.level(l));
    result.emplace_back(std::move(levels), c.state_count());
  }
  return result;
}

namespace {

int dsu_root(std::vector<int>& parent, int v) {
  while (parent[static_cast<std::size_t>(v)] != v) {
    parent[static_cast<std::size_t>(v)] =
        parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
    v = parent[static_cast<std::size_t>(v)];
  }
  return v;
}

// Contraction/deletion recursion: the trees through edge e and the trees
// avoiding it partition the set of spanning trees, so each tree is emitted
// exactly once.
void spanning_tree_rec(const Graph& g, std::vector<int> parent, int components,
                       std::vector<int> candidate_ids, std::vector<int>& chosen,
                       const std::function<void(const SpanningTree&)>& emit) {
  if (components == 1) {
    std::vector<std::pair<int, int>> edges;
    edges.reserve(chosen.size());
    for (int id : chosen) edges.push_back(g.edges()[static_cast<std::size_t>(id)]);
    emit(SpanningTree(g, std::move(edges)));
    return;
  }

  // Drop edges that became loops under the current contraction.
  std::vector<int> ids;
  ids.reserve(candidate_ids.size());
  for (int id : candidate_ids) {
    auto [a, b] = g.edges()[static_cast<std::size_t>(id)];
    if (dsu_root(parent, a) != dsu_root(parent, b)) ids.push_back(id);
  }
  if (ids.empty()) return;

  const int pick = ids.front();
  auto [a, b] = g.edges()[static_cast<std::size_t>(pick)];

  // Include: contract the edge.
  {
    std::vector<int> next_parent = parent;
    next_parent[static_cast<std::size_t>(dsu_root(next_parent, a))] = dsu_root(next_parent, b);
    std::vector<int> remaining(ids.begin() + 1, ids.end());
    chosen.push_back(pick);
    spanning_tree_rec(g, std::move(next_parent), components - 1, std::move(remaining), chosen,
                      emit);
    chosen.pop_back();
  }

  // Exclude: only when the remaining edges still connect every component.
  {
    std::vector<int> remaining(ids.begin() + 1, ids.end());
    std::vector<int> comp_parent = parent;
    int comp_count = components;
    for (int id : remaining) {
      auto [u, v] = g.edges()[static_cast<std::size_t>(id)];
      const int ru = dsu_root(comp_parent, u), rv = dsu_root(comp_parent, v);
      if (ru != rv) {
        comp_parent[static_cast<std::size_t>(ru)] = rv;
        --comp_count;
      }
    }
    if (comp_count == 1) {
      spanning_tree_rec(g, std::move(parent), components, std::move(remaining), chosen, emit);
    }
  }
}

}  // namespace

void for_each_spanning_tree(const Graph& g,
                            const std::function<void(const SpanningTree&)>& emit) {
  std::vector<int> parent(static_cast<std::size_t>(g.size()));
  for (int v = 0; v < g.size(); ++v) parent[static_cast<std::size_t>(v)] = v;
  std::vector<int> ids(static_cast<std::size_t>(g.edge_count()));
  for (int i = 0; i < g.edge_count(); ++i) ids[static_cast<std::size_t>(i)] = i;
  std::vector<int> chosen;
  spanning_tree_rec(g, std::move(parent), g.size(), std::move(ids), chosen, emit);
}

std::vector<SpanningTree> enumerate_spanning_trees(const Graph& g) {
  std::vector<SpanningTree> trees;
  for_each_spanning_tree(g, [&trees](const SpanningTree& t) { trees.push_back(t); });
  return trees;
}

std::pair<SemiChain, SemiChain> two_chains_from_spanning_tree(const SpanningTree& tree) {
  const int j = tree.state_count();
  std::vector<std::vector<int>> incident(static_cast<std::size_t>(j));
  for (auto [a, b] : tree.edges()) {
    incident[static_cast<std::size_t>(a)].push_back(b);
    incident[static_cast<std::size_t>(b)].push_back(a);
  }
  // Neighbors always get the opposite color; a tree has no cycles, so the
  // 2-coloring from the root is well defined.
  std::vector<int> color(static_cast<std::size_t>(j), -1);
  std::vector<int> stack = {0};
  color[0] = 0;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int u : incident[static_cast<std::size_t>(v)]) {
      if (color[static_cast<std::size_t>(u)] >= 0) continue;
      color[static_cast<std::size_t>(u)] = 1 - color[static_cast<std::size_t>(v)];
      stack.push_back(u);
    }
  }
  std::vector<int> even, odd;
  for (int v = 0; v < j; ++v) {
    (color[static_cast<std::size_t>(v)] == 0 ? even : odd).push_back(v);
  }
  SemiChain forward({even, odd}, j);
  SemiChain backward({odd, even}, j);
  return {std::move(forward), std::move(backward)};
}

std::vector<SemiChain> enumerate_two_semichains(const Graph& g, TwoChainStrategy strategy) {
  const int j = g.size();
  std::set<SemiChain> chains;

  if (strategy == TwoChainStrategy::kBipartitionScan) {
    // State 0 stays on side A, so each unordered bipartition is visited once.
    for (std::uint64_t mask = 1; mask < (1ULL << (j - 1)); ++mask) {
      const std::uint64_t side_b = mask << 1;
      std::vector<std::uint64_t> crossing(static_cast<std::size_t>(j));
      for (int v = 0; v < j; ++v) {
        const bool in_b = (side_b >> v) & 1ULL;
        crossing[static_cast<std::size_t>(v)] =
            g.neighbor_mask(v) & (in_b ? ~side_b : side_b);
      }
      const std::uint64_t all = j == 64 ? ~0ULL : (1ULL << j) - 1;
      bool spanning = true;
      for (int v = 0; v < j; ++v) {
        if (crossing[static_cast<std::size_t>(v)] == 0) {
          spanning = false;
          break;
        }
      }
      if (!spanning || !mask_connected(crossing, all)) continue;
      std::vector<int> a, bside;
      for (int v = 0; v < j; ++v) ((side_b >> v) & 1ULL ? bside : a).push_back(v);
      chains.emplace(std::vector<std::vector<int>>{a, bside}, j);
      chains.emplace(std::vector<std::vector<int>>{bside, a}, j);
    }
  } else {
    for_each_spanning_tree(g, [&chains](const SpanningTree& tree) {
      auto [forward, backward] = two_chains_from_spanning_tree(tree);
      chains.insert(std::move(forward));
      chains.insert(std::move(backward));
    });
  }
  return {chains.begin(), chains.end()};
}

std::vector<SemiChain> enumerate_all_semichains(const Graph& g, int max_level) {
  std::vector<SemiChain> frontier = enumerate_two_semichains(g);
  std::set<SemiChain> all(frontier.begin(), frontier.end());

  while (!frontier.empty()) {
    std::vector<SemiChain> next;
    for (const SemiChain& chain : frontier) {
      if (max_level > 0 && chain.level_count() + 1 > max_level) continue;
      for (SemiChain& child : enumerate_upward_unfoldings(chain, g)) {
        // Each chain has a unique downward folding, so the closure must
        // visit it exactly once.
        if (!all.insert(child).second) {
          throw InternalError("duplicate semi-chain produced by the unfolding closure");
        }
        next.push_back(std::move(child));
      }
    }
    frontier = std::move(next);
  }
  return {all.begin(), all.end()};
}

ExtremeSet enumerate_extreme_posteriors(const Graph& g, const Prior& prior, const Budget& b,
                                        int max_level) {
  ExtremeSet result;
  if (b.degenerate()) {
    result.degenerate_point = Posterior(prior.probs());
    return result;
  }

  std::map<Posterior, std::vector<SemiChain>> by_posterior;
  for (SemiChain& chain : enumerate_all_semichains(g, max_level)) {
    Posterior mu = posterior_from_chain(chain, prior, b);
    if (!is_member(mu, prior, g, b) || !is_extreme(mu, prior, g, b)) {
      throw InternalError("chain posterior failed the feasibility/extremeness check");
    }
    by_posterior[mu].push_back(chain);
    result.points.push_back({std::move(chain), std::move(mu)});
  }
  for (auto& [mu, chains] : by_posterior) {
    if (chains.size() > 1) result.collisions.push_back({mu, std::move(chains)});
  }
  return result;
}

}  // namespace gip
