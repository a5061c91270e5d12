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

#include "gip/oracle.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdlib>
#include <set>

#include "gip/errors.hpp"

namespace gip {

bool HRep::row_satisfied(std::size_t r, const std::vector<Rational>& mu) const {
  Rational lhs(0);
  for (std::size_t k = 0; k < mu.size(); ++k) {
    if (rows[r][k] != 0) lhs += rows[r][k] * mu[k];
  }
  return lhs <= 0;
}

bool HRep::satisfied_by(const std::vector<Rational>& mu) const {
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (!row_satisfied(r, mu)) return false;
  }
  return true;
}

HRep build_hrep(const Graph& g, const Prior& prior, const Budget& b) {
  HRep h;
  h.rows.reserve(static_cast<std::size_t>(2 * g.edge_count()));
  for (auto [i, j] : g.edges()) {
    std::vector<Rational> upper(static_cast<std::size_t>(g.size()), Rational(0));
    upper[static_cast<std::size_t>(j)] = prior[i];
    upper[static_cast<std::size_t>(i)] = -b.t() * prior[j];
    h.rows.push_back(std::move(upper));

    std::vector<Rational> lower(static_cast<std::size_t>(g.size()), Rational(0));
    lower[static_cast<std::size_t>(i)] = prior[j];
    lower[static_cast<std::size_t>(j)] = -b.t() * prior[i];
    h.rows.push_back(std::move(lower));
  }
  return h;
}

std::vector<Posterior> vertex_enumeration(const Graph& g, const Prior& prior, const Budget& b,
                                          int state_cap) {
  if (b.degenerate()) {
    throw DegenerateBudget("vertex enumeration needs t > 1; the t = 1 set is a point");
  }
  const int j = g.size();
  if (j > state_cap) throw InstanceTooLarge("instance exceeds the oracle state cap");
  if (prior.size() != j) throw InvalidArgument("prior dimension does not match the graph");

  // A J-1 subset of binding inequalities has a unique solution only when its
  // edges are acyclic (a cycle makes the rows dependent or contradictory, and
  // picking both directions of one edge forces zero entries). The acyclic
  // (J-1)-subsets are exactly the spanning trees, so iterate those with all
  // 2^{J-1} direction choices. The binding system fixes every posterior/prior
  // quotient to an integer power of t, so the solution is carried as the
  // exponent vector and checked against the remaining box constraints there.
  std::set<std::vector<int>> potentials;
  for_each_spanning_tree(g, [&](const SpanningTree& tree) {
    // Traversal order with parent pointers for fast re-propagation.
    std::vector<std::vector<std::pair<int, int>>> incident(static_cast<std::size_t>(j));
    for (int e = 0; e < j - 1; ++e) {
      auto [a, bb] = tree.edges()[static_cast<std::size_t>(e)];
      incident[static_cast<std::size_t>(a)].emplace_back(bb, e);
      incident[static_cast<std::size_t>(bb)].emplace_back(a, e);
    }
    // order[k] = (state, parent state, edge id), BFS from state 0.
    std::vector<std::array<int, 3>> order;
    order.reserve(static_cast<std::size_t>(j - 1));
    std::vector<bool> seen(static_cast<std::size_t>(j), false);
    std::vector<int> queue = {0};
    seen[0] = true;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const int v = queue[head];
      for (auto [u, e] : incident[static_cast<std::size_t>(v)]) {
        if (seen[static_cast<std::size_t>(u)]) continue;
        seen[static_cast<std::size_t>(u)] = true;
        order.push_back({u, v, e});
        queue.push_back(u);
      }
    }

    std::vector<std::pair<int, int>> non_tree;
    std::set<std::pair<int, int>> tree_edges(tree.edges().begin(), tree.edges().end());
    for (const auto& edge : g.edges()) {
      if (!tree_edges.count(edge)) non_tree.push_back(edge);
    }

    std::vector<int> c(static_cast<std::size_t>(j), 0);
    for (std::uint64_t mask = 0; mask < (1ULL << (j - 1)); ++mask) {
      for (const auto& [state, parent, e] : order) {
        const int step = ((mask >> e) & 1ULL) ? 1 : -1;
        c[static_cast<std::size_t>(state)] = c[static_cast<std::size_t>(parent)] + step;
      }
      bool feasible = true;
      for (auto [u, v] : non_tree) {
        if (std::abs(c[static_cast<std::size_t>(u)] - c[static_cast<std::size_t>(v)]) > 1) {
          feasible = false;
          break;
        }
      }
      if (!feasible) continue;
      std::vector<int> canonical = c;
      const int low = *std::min_element(canonical.begin(), canonical.end());
      for (auto& x : canonical) x -= low;
      potentials.insert(std::move(canonical));
    }
  });

  // Materialize and re-verify each candidate against the H-representation in
  // plain rational arithmetic.
  const HRep h = build_hrep(g, prior, b);
  std::set<Posterior> vertices;
  for (const auto& potential : potentials) {
    std::vector<Rational> mu(static_cast<std::size_t>(j));
    for (int v = 0; v < j; ++v) {
      mu[static_cast<std::size_t>(v)] =
          pow_rational(b.t(), potential[static_cast<std::size_t>(v)]) * prior[v];
    }
    const Rational total = sum(mu);
    for (auto& x : mu) x /= total;
    for (const auto& x : mu) {
      if (x <= 0) throw InternalError("oracle candidate lost positivity");
    }
    if (!h.satisfied_by(mu)) {
      throw InternalError("oracle candidate failed the exact H-rep verification");
    }
    vertices.insert(Posterior(std::move(mu)));
  }
  return {vertices.begin(), vertices.end()};
}

CrossCheckReport cross_check(const Graph& g, const Prior& prior, const Budget& b, int state_cap) {
  CrossCheckReport report;
  if (b.degenerate()) {
    report.degenerate_budget = true;
    report.oracle_vertices.emplace_back(prior.probs());
    report.chain_vertices.emplace_back(prior.probs());
    return report;
  }

  report.oracle_vertices = vertex_enumeration(g, prior, b, state_cap);

  ExtremeSet chains = enumerate_extreme_posteriors(g, prior, b);
  std::set<Posterior> chain_set;
  for (const auto& point : chains.points) chain_set.insert(point.posterior);
  report.chain_vertices.assign(chain_set.begin(), chain_set.end());
  report.chain_collisions = std::move(chains.collisions);

  std::set_difference(report.oracle_vertices.begin(), report.oracle_vertices.end(),
                      report.chain_vertices.begin(), report.chain_vertices.end(),
                      std::back_inserter(report.missing_from_chains));
  std::set_difference(report.chain_vertices.begin(), report.chain_vertices.end(),
                      report.oracle_vertices.begin(), report.oracle_vertices.end(),
                      std::back_inserter(report.extra_in_chains));
  return report;
}

namespace {

void scan_rec(const Graph& g, int level_target, int state, std::vector<int>& level_of,
              std::vector<int>& level_sizes, int used, std::vector<SemiChain>& out) {
  const int j = g.size();
  if (state == j) {
    if (used != level_target) return;
    std::vector<std::vector<int>> levels(static_cast<std::size_t>(level_target));
    for (int v = 0; v < j; ++v) {
      levels[static_cast<std::size_t>(level_of[static_cast<std::size_t>(v)] - 1)].push_back(v);
    }
    SemiChain chain(std::move(levels), j);
    if (is_strongly_connected(chain, g)) out.push_back(std::move(chain));
    return;
  }

  const int remaining = j - state;
  for (int lvl = 1; lvl <= level_target; ++lvl) {
    // Unused levels must still be fillable by the remaining states.
    const int newly_used = used + (level_sizes[static_cast<std::size_t>(lvl - 1)] == 0 ? 1 : 0);
    if (level_target - newly_used > remaining - 1) continue;

    bool ok = true;
    std::uint64_t neighbors = g.neighbor_mask(state) & ((state == 0) ? 0 : ((1ULL << state) - 1));
    while (neighbors != 0) {
      const int u = std::countr_zero(neighbors);
      neighbors &= neighbors - 1;
      if (std::abs(level_of[static_cast<std::size_t>(u)] - lvl) > 1) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;

    level_of[static_cast<std::size_t>(state)] = lvl;
    ++level_sizes[static_cast<std::size_t>(lvl - 1)];
    scan_rec(g, level_target, state + 1, level_of, level_sizes, newly_used, out);
    --level_sizes[static_cast<std::size_t>(lvl - 1)];
    level_of[static_cast<std::size_t>(state)] = 0;
  }
}

}  // namespace

std::vector<SemiChain> exhaustive_semichain_scan(const Graph& g, int state_cap) {
  const int j = g.size();
  if (j > state_cap) throw InstanceTooLarge("instance exceeds the scan state cap");

  std::vector<SemiChain> found;
  for (int level_target = 2; level_target <= j; ++level_target) {
    std::vector<int> level_of(static_cast<std::size_t>(j), 0);
    std::vector<int> level_sizes(static_cast<std::size_t>(level_target), 0);
    scan_rec(g, level_target, 0, level_of, level_sizes, 0, found);
  }
  std::sort(found.begin(), found.end());
  return found;
}

}  // namespace gip
