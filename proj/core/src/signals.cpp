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

#include "gip/signals.hpp"

#include <algorithm>
#include <set>

#include "gip/errors.hpp"
#include "gip/linalg.hpp"

namespace gip {

Signal::Signal(std::vector<Posterior> support, std::vector<Rational> weights)
    : support_(std::move(support)), weights_(std::move(weights)) {
  if (support_.empty() || support_.size() != weights_.size()) {
    throw InvalidArgument("signal support and weights must match and be nonempty");
  }
  for (const auto& w : weights_) {
    if (w <= 0) throw InvalidArgument("signal weights must be positive");
  }
  if (sum(weights_) != 1) throw InvalidArgument("signal weights must sum to 1");
  std::set<Posterior> distinct(support_.begin(), support_.end());
  if (distinct.size() != support_.size()) {
    throw InvalidArgument("signal support points must be pairwise distinct");
  }
  for (const auto& mu : support_) {
    if (mu.size() != support_[0].size()) throw InvalidArgument("support dimension mismatch");
  }
}

std::vector<Rational> Signal::barycenter() const {
  std::vector<Rational> mean(static_cast<std::size_t>(support_[0].size()), Rational(0));
  for (std::size_t k = 0; k < support_.size(); ++k) {
    for (int i = 0; i < support_[k].size(); ++i) {
      mean[static_cast<std::size_t>(i)] += weights_[k] * support_[k][i];
    }
  }
  return mean;
}

bool bayes_plausible(const Signal& s, const Prior& prior) {
  if (s.support()[0].size() != prior.size()) {
    throw InvalidArgument("signal dimension does not match the prior");
  }
  return s.barycenter() == prior.probs();
}

bool is_privacy_preserving(const Signal& s, const Graph& g, const Prior& prior, const Budget& b) {
  if (!bayes_plausible(s, prior)) {
    throw NotBayesPlausible("signal posteriors do not average to the prior");
  }
  return std::all_of(s.support().begin(), s.support().end(),
                     [&](const Posterior& mu) { return is_member(mu, prior, g, b); });
}

bool is_frontier(const Signal& s, const Graph& g, const Prior& prior, const Budget& b) {
  if (!is_privacy_preserving(s, g, prior, b)) {
    throw NotPrivacyPreserving("signal support leaves the feasible set");
  }
  if (b.degenerate()) return true;
  return std::all_of(s.support().begin(), s.support().end(),
                     [&](const Posterior& mu) { return is_extreme(mu, prior, g, b); });
}

namespace {

// Exact phase-1 simplex for {A lambda = rhs, lambda >= 0} with rhs >= 0.
// Entering column by Dantzig's rule; after a run of degenerate pivots the
// rule switches to Bland's, which cannot cycle. Returns the basic feasible
// solution, or nullopt when the system is infeasible.
std::optional<std::vector<Rational>> solve_feasibility(
    const std::vector<std::vector<Rational>>& columns, std::vector<Rational> rhs) {
  const std::size_t rows = rhs.size();
  const std::size_t structural = columns.size();
  const std::size_t total = structural + rows;  // artificials appended

  // tableau[r] holds the row coefficients; basis[r] the basic column.
  std::vector<std::vector<Rational>> tableau(rows, std::vector<Rational>(total, Rational(0)));
  for (std::size_t c = 0; c < structural; ++c) {
    for (std::size_t r = 0; r < rows; ++r) tableau[r][c] = columns[c][r];
  }
  for (std::size_t r = 0; r < rows; ++r) tableau[r][structural + r] = 1;
  std::vector<std::size_t> basis(rows);
  for (std::size_t r = 0; r < rows; ++r) basis[r] = structural + r;

  // Phase-1 objective (minimize the artificial sum) kept as an explicit
  // reduced-cost row, updated with each pivot. With the artificial basis the
  // initial reduced cost of a structural column is minus its row sum.
  std::vector<Rational> reduced(total, Rational(0));
  for (std::size_t c = 0; c < structural; ++c) {
    for (std::size_t r = 0; r < rows; ++r) reduced[c] -= tableau[r][c];
  }

  int stalled_pivots = 0;
  bool bland = false;
  while (true) {
    std::size_t entering = total;
    if (bland) {
      // Lowest-index column with negative reduced cost.
      for (std::size_t c = 0; c < total; ++c) {
        if (reduced[c] < 0) {
          entering = c;
          break;
        }
      }
    } else {
      // Most negative reduced cost, ties to the lowest index.
      for (std::size_t c = 0; c < total; ++c) {
        if (reduced[c] < 0 && (entering == total || reduced[c] < reduced[entering])) {
          entering = c;
        }
      }
    }
    if (entering == total) break;

    std::size_t leaving = rows;
    Rational best_ratio(0);
    for (std::size_t r = 0; r < rows; ++r) {
      if (tableau[r][entering] <= 0) continue;
      const Rational ratio = rhs[r] / tableau[r][entering];
      if (leaving == rows || ratio < best_ratio ||
          (ratio == best_ratio && basis[r] < basis[leaving])) {
        leaving = r;
        best_ratio = ratio;
      }
    }
    if (leaving == rows) return std::nullopt;  // unbounded cannot happen here

    stalled_pivots = best_ratio == 0 ? stalled_pivots + 1 : 0;
    if (stalled_pivots > 42) bland = true;

    const Rational pivot = tableau[leaving][entering];
    for (auto& x : tableau[leaving]) x /= pivot;
    rhs[leaving] /= pivot;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == leaving || tableau[r][entering] == 0) continue;
      const Rational factor = tableau[r][entering];
      for (std::size_t c = 0; c < total; ++c) tableau[r][c] -= factor * tableau[leaving][c];
      rhs[r] -= factor * rhs[leaving];
    }
    if (reduced[entering] != 0) {
      const Rational factor = reduced[entering];
      for (std::size_t c = 0; c < total; ++c) reduced[c] -= factor * tableau[leaving][c];
    }
    basis[leaving] = entering;
  }

  // Feasible iff every artificial ended at zero.
  for (std::size_t r = 0; r < rows; ++r) {
    if (basis[r] >= structural && rhs[r] != 0) return std::nullopt;
  }
  std::vector<Rational> solution(structural, Rational(0));
  for (std::size_t r = 0; r < rows; ++r) {
    if (basis[r] < structural) solution[basis[r]] = rhs[r];
  }
  return solution;
}

}  // namespace

Signal decompose_into_extremes(const Posterior& mu, const Graph& g, const Prior& prior,
                               const Budget& b) {
  if (b.degenerate()) {
    if (!is_member(mu, prior, g, b)) {
      throw NotMember("only feasible posteriors decompose over the vertex set");
    }
    return Signal({Posterior(prior.probs())}, {Rational(1)});
  }
  const ExtremeSet extremes = enumerate_extreme_posteriors(g, prior, b);
  std::vector<Posterior> vertices;
  {
    std::set<Posterior> distinct;
    for (const auto& point : extremes.points) distinct.insert(point.posterior);
    vertices.assign(distinct.begin(), distinct.end());
  }
  return decompose_into_extremes(mu, vertices, g, prior, b);
}

Signal decompose_into_extremes(const Posterior& mu, const std::vector<Posterior>& vertices,
                               const Graph& g, const Prior& prior, const Budget& b) {
  if (!is_member(mu, prior, g, b)) {
    throw NotMember("only feasible posteriors decompose over the vertex set");
  }
  if (b.degenerate()) {
    return Signal({Posterior(prior.probs())}, {Rational(1)});
  }

  const int j = g.size();
  std::vector<std::vector<Rational>> columns;
  columns.reserve(vertices.size());
  for (const auto& vertex : vertices) {
    std::vector<Rational> column(vertex.probs());
    column.push_back(1);  // convexity row
    columns.push_back(std::move(column));
  }
  std::vector<Rational> rhs(mu.probs());
  rhs.push_back(1);

  auto lambda = solve_feasibility(columns, std::move(rhs));
  if (!lambda) {
    throw InfeasibleDecomposition("feasible posterior failed to decompose over the vertices");
  }

  std::vector<std::size_t> active;
  for (std::size_t k = 0; k < lambda->size(); ++k) {
    if ((*lambda)[k] != 0) active.push_back(k);
  }

  // Support-size reduction: while more than J points are active, the active
  // columns are affinely dependent, so a kernel direction can zero one
  // weight while keeping the rest nonnegative.
  while (static_cast<int>(active.size()) > j) {
    std::vector<std::vector<Rational>> rows(static_cast<std::size_t>(j + 1),
                                            std::vector<Rational>(active.size()));
    for (std::size_t c = 0; c < active.size(); ++c) {
      for (std::size_t r = 0; r < static_cast<std::size_t>(j + 1); ++r) {
        rows[r][c] = columns[active[c]][r];
      }
    }
    std::vector<Rational> direction = kernel_vector(std::move(rows));
    if (direction.empty()) {
      throw InternalError("active decomposition columns unexpectedly independent");
    }
    bool has_positive = std::any_of(direction.begin(), direction.end(),
                                    [](const Rational& d) { return d > 0; });
    if (!has_positive) {
      for (auto& d : direction) d = -d;
    }
    std::size_t limiting = active.size();
    Rational step(0);
    for (std::size_t c = 0; c < active.size(); ++c) {
      if (direction[c] <= 0) continue;
      const Rational ratio = (*lambda)[active[c]] / direction[c];
      if (limiting == active.size() || ratio < step) {
        limiting = c;
        step = ratio;
      }
    }
    for (std::size_t c = 0; c < active.size(); ++c) {
      (*lambda)[active[c]] -= step * direction[c];
    }
    std::vector<std::size_t> still_active;
    for (std::size_t k : active) {
      if ((*lambda)[k] < 0) throw InternalError("support reduction produced a negative weight");
      if ((*lambda)[k] != 0) still_active.push_back(k);
    }
    if (still_active.size() >= active.size()) {
      throw InternalError("support reduction failed to drop a point");
    }
    active = std::move(still_active);
  }

  std::vector<Posterior> support;
  std::vector<Rational> weights;
  for (std::size_t k : active) {
    support.push_back(vertices[k]);
    weights.push_back((*lambda)[k]);
  }
  return Signal(std::move(support), std::move(weights));
}

}  // namespace gip
