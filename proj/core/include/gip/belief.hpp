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

#ifndef GIP_BELIEF_HPP
#define GIP_BELIEF_HPP

#include <algorithm>
#include <vector>

#include "gip/rational.hpp"
#include "gip/state_space.hpp"

namespace gip {

/// Interior prior distribution: strictly positive entries summing to one.
class Prior {
 public:
  explicit Prior(std::vector<Rational> probs);
  static Prior uniform(int state_count);

  int size() const { return static_cast<int>(probs_.size()); }
  const Rational& operator[](int i) const { return probs_[static_cast<std::size_t>(i)]; }
  const std::vector<Rational>& probs() const { return probs_; }

 private:
  std::vector<Rational> probs_;
};

/// Posterior distribution: nonnegative entries summing to one.
class Posterior {
 public:
  explicit Posterior(std::vector<Rational> probs);

  int size() const { return static_cast<int>(probs_.size()); }
  const Rational& operator[](int i) const { return probs_[static_cast<std::size_t>(i)]; }
  const std::vector<Rational>& probs() const { return probs_; }

  bool operator==(const Posterior& other) const { return probs_ == other.probs_; }
  bool operator<(const Posterior& other) const {
    return std::lexicographical_compare(probs_.begin(), probs_.end(), other.probs_.begin(),
                                        other.probs_.end());
  }

 private:
  std::vector<Rational> probs_;
};

/// Multiplicative privacy budget t = e^eps, carried exactly; t >= 1.
class Budget {
 public:
  explicit Budget(Rational t);

  const Rational& t() const { return t_; }
  /// t == 1 collapses the feasible set to the prior alone.
  bool degenerate() const { return t_ == 1; }

 private:
  Rational t_;
};

/// (mu_j / prior_j) / (mu_i / prior_i), exactly. Throws DivideByZero when
/// mu_i = 0.
Rational ratio_quotient(const Posterior& mu, const Prior& prior, int i, int j);

/// Membership in the feasible posterior set: every edge quotient lies in
/// [1/t, t]. Total predicate, evaluated without divisions so zero entries are
/// handled uniformly.
bool is_member(const Posterior& mu, const Prior& prior, const Graph& g, const Budget& b);

/// Float-mode membership: quotients evaluated in double with an absolute
/// tolerance on the two bound checks. The exact overload is the canonical one.
bool is_member(const Posterior& mu, const Prior& prior, const Graph& g, const Budget& b,
               double tolerance);

/// True when mu is a vertex of the feasible set: the edges whose quotient is
/// exactly t or 1/t must connect all states. Requires is_member(mu) (else
/// NotMember) and t > 1 (else DegenerateBudget).
bool is_extreme(const Posterior& mu, const Prior& prior, const Graph& g, const Budget& b);

/// Float-mode extremeness; an edge counts as binding when its quotient is
/// within `tolerance` of t or 1/t.
bool is_extreme(const Posterior& mu, const Prior& prior, const Graph& g, const Budget& b,
                double tolerance);

}  // namespace gip

#endif  // GIP_BELIEF_HPP
