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

#ifndef GIP_SEMICHAIN_HPP
#define GIP_SEMICHAIN_HPP

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "gip/belief.hpp"
#include "gip/state_space.hpp"

namespace gip {

/// Ordered partition of the states into L >= 2 disjoint nonempty levels.
/// Levels are stored as sorted index lists; that tuple is the canonical form
/// used for ordering and equality.
class SemiChain {
 public:
  SemiChain(std::vector<std::vector<int>> levels, int state_count);

  int level_count() const { return static_cast<int>(levels_.size()); }
  int state_count() const { return static_cast<int>(level_of_.size()); }
  const std::vector<std::vector<int>>& levels() const { return levels_; }
  const std::vector<int>& level(int l) const { return levels_[static_cast<std::size_t>(l)]; }

  /// 1-based level number of a state.
  int level_of(int state) const { return level_of_[static_cast<std::size_t>(state)]; }

  bool operator==(const SemiChain& other) const { return levels_ == other.levels_; }
  bool operator<(const SemiChain& other) const;

 private:
  std::vector<std::vector<int>> levels_;
  std::vector<int> level_of_;
};

/// Spanning tree of a host graph: J-1 edges, connected, acyclic.
class SpanningTree {
 public:
  SpanningTree(const Graph& g, std::vector<std::pair<int, int>> edges);

  int state_count() const { return state_count_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

 private:
  int state_count_;
  std::vector<std::pair<int, int>> edges_;
};

/// True iff every edge of g joins states whose levels differ by at most one.
/// Throws StateSetMismatch when c does not cover g's states.
bool validate_semichain(const SemiChain& c, const Graph& g);

/// True iff the between-level edges alone connect all states. Requires
/// validate_semichain (else InvalidSemiChain).
bool is_strongly_connected(const SemiChain& c, const Graph& g);

/// mu(theta) = t^{l(theta)} prior(theta) / sum_l t^l prior(level l), exactly.
Posterior posterior_from_chain(const SemiChain& c, const Prior& prior, const Budget& b);

/// Levels in reverse order; an involution.
SemiChain reverse(const SemiChain& c);

/// (L2, L1 u L3, L4, ..., LL); requires L >= 3 (else TooFewLevels).
SemiChain downward_fold(const SemiChain& c);

/// (L1, ..., L_{L-3}, L_{L-2} u L_L, L_{L-1}); requires L >= 3.
SemiChain upward_fold(const SemiChain& c);

/// All upward unfoldings: ordered splits of level 2 into nonempty (A, B)
/// with no edge from A into B or into level 3, each yielding the
/// (L+1)-chain (A, L1, B, L3, ...). Children are produced in the fixed
/// bitmask order of A over the sorted level-2 states.
std::vector<SemiChain> enumerate_upward_unfoldings(const SemiChain& c, const Graph& g);

/// Streams every spanning tree of g exactly once (contraction/deletion
/// enumeration).
void for_each_spanning_tree(const Graph& g, const std::function<void(const SpanningTree&)>& emit);

std::vector<SpanningTree> enumerate_spanning_trees(const Graph& g);

/// The tree's unique 2-coloring as an ordered 2-partition and its reverse;
/// both are strongly connected 2-semi-chains of any host graph containing
/// the tree.
std::pair<SemiChain, SemiChain> two_chains_from_spanning_tree(const SpanningTree& tree);

enum class TwoChainStrategy {
  /// Scan all 2^{J-1} bipartitions, keep those whose crossing edges span.
  kBipartitionScan,
  /// Bipartition every spanning tree, dedup.
  kSpanningTrees,
};

/// All strongly connected 2-semi-chains, duplicate-free, canonically sorted.
/// Both strategies produce identical results; the scan is the default.
std::vector<SemiChain> enumerate_two_semichains(
    const Graph& g, TwoChainStrategy strategy = TwoChainStrategy::kBipartitionScan);

/// All strongly connected L-semi-chains for every L >= 2: the closure of the
/// 2-semi-chains under upward unfolding, breadth-first by L. Every chain is
/// reached exactly once; a repeat visit throws InternalError. max_level = 0
/// means unbounded.
std::vector<SemiChain> enumerate_all_semichains(const Graph& g, int max_level = 0);

struct ChainPosterior {
  SemiChain chain;
  Posterior posterior;
};

/// Distinct chains that map to the same posterior. Theory says this cannot
/// happen for t > 1 and an interior prior; when detected it is reported, not
/// hidden.
struct PosteriorCollision {
  Posterior posterior;
  std::vector<SemiChain> chains;
};

struct ExtremeSet {
  /// (chain, posterior) pairs in canonical chain order; empty when the
  /// budget is degenerate.
  std::vector<ChainPosterior> points;
  std::vector<PosteriorCollision> collisions;
  /// Set iff t = 1: the feasible set collapses to the prior.
  std::optional<Posterior> degenerate_point;
};

/// The extreme posteriors of the feasible set, one per strongly connected
/// semi-chain. Every emitted posterior is checked to be feasible and extreme
/// (InternalError otherwise). t = 1 yields the degenerate singleton.
ExtremeSet enumerate_extreme_posteriors(const Graph& g, const Prior& prior, const Budget& b,
                                        int max_level = 0);

}  // namespace gip

#endif  // GIP_SEMICHAIN_HPP
