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

#ifndef GIP_SIGNALS_HPP
#define GIP_SIGNALS_HPP

#include <vector>

#include "gip/semichain.hpp"

namespace gip {

/// Finite-support distribution over posteriors: positive weights summing to
/// one, pairwise distinct support points.
class Signal {
 public:
  Signal(std::vector<Posterior> support, std::vector<Rational> weights);

  int support_size() const { return static_cast<int>(support_.size()); }
  const std::vector<Posterior>& support() const { return support_; }
  const std::vector<Rational>& weights() const { return weights_; }

  /// Exact weighted average of the support posteriors.
  std::vector<Rational> barycenter() const;

 private:
  std::vector<Posterior> support_;
  std::vector<Rational> weights_;
};

/// True iff the signal's posteriors average back to the prior exactly.
bool bayes_plausible(const Signal& s, const Prior& prior);

/// True iff every support posterior lies in the feasible set. The signal
/// must be Bayes plausible (else NotBayesPlausible).
bool is_privacy_preserving(const Signal& s, const Graph& g, const Prior& prior, const Budget& b);

/// True iff every support posterior is an extreme point. The signal must be
/// privacy preserving (else NotPrivacyPreserving). At t = 1 the feasible set
/// is the single point {prior}, which is its own extreme point, so any
/// privacy-preserving signal qualifies.
bool is_frontier(const Signal& s, const Graph& g, const Prior& prior, const Budget& b);

/// Writes a feasible posterior as an exact convex combination of extreme
/// posteriors with at most J support points: a constructive witness that mu
/// is dominated by a frontier signal. Solved as exact linear feasibility
/// (phase-1 simplex with Bland's rule) over the enumerated vertex set,
/// followed by a support-size reduction. Throws NotMember when mu is
/// infeasible; InfeasibleDecomposition indicates a bug.
Signal decompose_into_extremes(const Posterior& mu, const Graph& g, const Prior& prior,
                               const Budget& b);

/// Same, over a shared precomputed vertex set (the enumerate output), so
/// repeated decompositions skip the enumeration.
Signal decompose_into_extremes(const Posterior& mu, const std::vector<Posterior>& vertices,
                               const Graph& g, const Prior& prior, const Budget& b);

}  // namespace gip

#endif  // GIP_SIGNALS_HPP
