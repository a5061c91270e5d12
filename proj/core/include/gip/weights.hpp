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

#ifndef GIP_WEIGHTS_HPP
#define GIP_WEIGHTS_HPP

#include <optional>
#include <vector>

#include "gip/belief.hpp"

namespace gip {

/// Integer pair weights w_ij with t^{w_ij} equal to the posterior/prior
/// quotient between states i and j. Stored as a per-state integer potential c
/// normalized to min 0, so antisymmetry (w_ij = -w_ji) and path additivity
/// (w_ij + w_jk = w_ik) hold by construction: w_ij = c_j - c_i.
class WeightMatrix {
 public:
  explicit WeightMatrix(std::vector<int> potential);

  int size() const { return static_cast<int>(potential_.size()); }
  int entry(int i, int j) const {
    return potential_[static_cast<std::size_t>(j)] - potential_[static_cast<std::size_t>(i)];
  }
  const std::vector<int>& potential() const { return potential_; }
  std::vector<std::vector<int>> to_matrix() const;

  bool operator==(const WeightMatrix& other) const { return potential_ == other.potential_; }

 private:
  std::vector<int> potential_;
};

/// The unique integer weight matrix with t^{w_ij} = ratio_quotient(mu, i, j)
/// for every pair, when all pairwise quotients are exact integer powers of t;
/// nullopt otherwise. Requires an interior posterior (NotInteriorPosterior)
/// and t > 1 (DegenerateBudget).
std::optional<WeightMatrix> integer_weight_matrix(const Posterior& mu, const Prior& prior,
                                                  const Budget& b);

/// Oriented spanning-tree edge carrying weight +1 or -1; weight w means
/// ratio_quotient(mu, i, j) = t^w for the produced posterior.
struct TreeEdgeWeight {
  int i = 0;
  int j = 0;
  int weight = 1;
};

/// The unique posterior whose quotient along each oriented tree edge is t^w.
/// Equivalently mu ~ t^{c} * prior for the potential c obtained by
/// propagating the weights from a root. The result need not be feasible:
/// non-tree edges may end up with |w| > 1. Throws NotSpanningTree when the
/// edges do not form a spanning tree of g.
Posterior posterior_from_tree_weights(const Graph& g, const std::vector<TreeEdgeWeight>& tree,
                                      const Prior& prior, const Budget& b);

}  // namespace gip

#endif  // GIP_WEIGHTS_HPP
