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

#include "gip/belief.hpp"

#include <algorithm>
#include <cmath>

#include "gip/errors.hpp"

namespace gip {

Prior::Prior(std::vector<Rational> probs) : probs_(std::move(probs)) {
  if (probs_.size() < 2) throw InvalidArgument("a prior needs at least two entries");
  for (const auto& p : probs_) {
    if (p <= 0) throw InvalidArgument("prior must be interior (all entries > 0)");
  }
  if (sum(probs_) != 1) throw InvalidArgument("prior entries must sum to 1");
}

Prior Prior::uniform(int state_count) {
  if (state_count < 2) throw InvalidArgument("a prior needs at least two entries");
  return Prior(std::vector<Rational>(static_cast<std::size_t>(state_count),
                                     Rational(1, state_count)));
}

Posterior::Posterior(std::vector<Rational> probs) : probs_(std::move(probs)) {
  if (probs_.size() < 2) throw InvalidArgument("a posterior needs at least two entries");
  for (const auto& p : probs_) {
    if (p < 0) throw InvalidArgument("posterior entries must be nonnegative");
  }
  if (sum(probs_) != 1) throw InvalidArgument("posterior entries must sum to 1");
}

Budget::Budget(Rational t) : t_(std::move(t)) {
  if (t_ < 1) throw InvalidArgument("budget t = e^eps must be >= 1");
}

Rational ratio_quotient(const Posterior& mu, const Prior& prior, int i, int j) {
  if (i < 0 || i >= mu.size() || j < 0 || j >= mu.size()) {
    throw IndexOutOfRange("ratio_quotient index out of range");
  }
  if (mu[i] == 0) throw DivideByZero("ratio_quotient with mu(theta_i) = 0");
  return (mu[j] * prior[i]) / (mu[i] * prior[j]);
}

namespace {

void check_dimensions(const Posterior& mu, const Prior& prior, const Graph& g) {
  if (mu.size() != g.size() || prior.size() != g.size()) {
    throw InvalidArgument("posterior/prior dimension does not match the graph");
  }
}

// Edge constraint in cross-multiplied form: mu_j * prior_i <= t * mu_i * prior_j.
bool edge_within_budget(const Posterior& mu, const Prior& prior, const Rational& t, int i, int j) {
  return mu[j] * prior[i] <= t * mu[i] * prior[j];
}

}  // namespace

bool is_member(const Posterior& mu, const Prior& prior, const Graph& g, const Budget& b) {
  check_dimensions(mu, prior, g);
  for (auto [i, j] : g.edges()) {
    if (!edge_within_budget(mu, prior, b.t(), i, j)) return false;
    if (!edge_within_budget(mu, prior, b.t(), j, i)) return false;
  }
  return true;
}

bool is_member(const Posterior& mu, const Prior& prior, const Graph& g, const Budget& b,
               double tolerance) {
  check_dimensions(mu, prior, g);
  const double t = b.t().convert_to<double>();
  for (auto [i, j] : g.edges()) {
    const double ri = mu[i].convert_to<double>() / prior[i].convert_to<double>();
    const double rj = mu[j].convert_to<double>() / prior[j].convert_to<double>();
    if (ri == 0.0 || rj == 0.0) return false;
    const double q = rj / ri;
    if (q > t + tolerance || q < 1.0 / t - tolerance) return false;
  }
  return true;
}

bool is_extreme(const Posterior& mu, const Prior& prior, const Graph& g, const Budget& b) {
  if (b.degenerate()) {
    throw DegenerateBudget("is_extreme needs t > 1; at t = 1 the feasible set is a point");
  }
  if (!is_member(mu, prior, g, b)) throw NotMember("is_extreme requires a feasible posterior");

  // Edges whose quotient equals t or 1/t; mu is a vertex iff they span all
  // states (membership at t > 1 already forces mu > 0 everywhere).
  std::vector<std::uint64_t> binding(static_cast<std::size_t>(g.size()), 0);
  for (auto [i, j] : g.edges()) {
    const Rational lhs = mu[j] * prior[i];
    const Rational rhs = mu[i] * prior[j];
    if (lhs == b.t() * rhs || rhs == b.t() * lhs) {
      binding[static_cast<std::size_t>(i)] |= 1ULL << j;
      binding[static_cast<std::size_t>(j)] |= 1ULL << i;
    }
  }
  for (const auto mask : binding) {
    if (mask == 0) return false;
  }
  const std::uint64_t all = g.size() == 64 ? ~0ULL : (1ULL << g.size()) - 1;
  return mask_connected(binding, all);
}

bool is_extreme(const Posterior& mu, const Prior& prior, const Graph& g, const Budget& b,
                double tolerance) {
  if (b.degenerate()) {
    throw DegenerateBudget("is_extreme needs t > 1; at t = 1 the feasible set is a point");
  }
  if (!is_member(mu, prior, g, b, tolerance)) {
    throw NotMember("is_extreme requires a feasible posterior");
  }
  const double t = b.t().convert_to<double>();
  std::vector<std::uint64_t> binding(static_cast<std::size_t>(g.size()), 0);
  for (auto [i, j] : g.edges()) {
    const double ri = mu[i].convert_to<double>() / prior[i].convert_to<double>();
    const double rj = mu[j].convert_to<double>() / prior[j].convert_to<double>();
    if (ri == 0.0 || rj == 0.0) continue;
    const double q = rj / ri;
    if (std::fabs(q - t) <= tolerance || std::fabs(q - 1.0 / t) <= tolerance) {
      binding[static_cast<std::size_t>(i)] |= 1ULL << j;
      binding[static_cast<std::size_t>(j)] |= 1ULL << i;
    }
  }
  for (const auto mask : binding) {
    if (mask == 0) return false;
  }
  const std::uint64_t all = g.size() == 64 ? ~0ULL : (1ULL << g.size()) - 1;
  return mask_connected(binding, all);
}

}  // namespace gip
