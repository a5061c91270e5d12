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

#ifndef GIP_ORACLE_HPP
#define GIP_ORACLE_HPP

#include <vector>

#include "gip/semichain.hpp"

namespace gip {

/// H-representation of the feasible posterior set: per edge {i, j} the two
/// homogeneous inequalities
///     mu_j * prior_i - t * mu_i * prior_j <= 0   (row 2e)
///     mu_i * prior_j - t * mu_j * prior_i <= 0   (row 2e+1)
/// together with the implicit normalization sum(mu) = 1 and mu >= 0.
struct HRep {
  std::vector<std::vector<Rational>> rows;

  bool row_satisfied(std::size_t r, const std::vector<Rational>& mu) const;
  bool satisfied_by(const std::vector<Rational>& mu) const;
};

HRep build_hrep(const Graph& g, const Prior& prior, const Budget& b);

/// Brute-force vertex enumeration of the feasible set, independent of the
/// semi-chain pipeline: every nonsingular choice of J-1 binding inequalities
/// is solved together with the normalization, and a solution is kept iff it
/// satisfies every remaining constraint strictly interior in mu >= 0.
/// Throws DegenerateBudget for t = 1 and InstanceTooLarge above the cap.
std::vector<Posterior> vertex_enumeration(const Graph& g, const Prior& prior, const Budget& b,
                                          int state_cap = 8);

struct CrossCheckReport {
  std::vector<Posterior> oracle_vertices;
  std::vector<Posterior> chain_vertices;
  std::vector<Posterior> missing_from_chains;
  std::vector<Posterior> extra_in_chains;
  std::vector<PosteriorCollision> chain_collisions;
  bool degenerate_budget = false;

  bool matched() const {
    return missing_from_chains.empty() && extra_in_chains.empty() && chain_collisions.empty();
  }
};

/// Runs both pipelines and compares the vertex sets by exact equality.
CrossCheckReport cross_check(const Graph& g, const Prior& prior, const Budget& b,
                             int state_cap = 8);

/// Brute force over all ordered partitions of the states into 2..J levels,
/// keeping the valid, strongly connected semi-chains. Ground truth for the
/// unfolding closure. Throws InstanceTooLarge above the cap.
std::vector<SemiChain> exhaustive_semichain_scan(const Graph& g, int state_cap = 9);

}  // namespace gip

#endif  // GIP_ORACLE_HPP
