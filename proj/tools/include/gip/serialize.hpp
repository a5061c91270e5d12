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

#ifndef GIP_SERIALIZE_HPP
#define GIP_SERIALIZE_HPP

#include <string>

#include <json.hpp>

#include "gip/oracle.hpp"
#include "gip/problem.hpp"
#include "gip/signals.hpp"

namespace gip {

struct OutputOptions {
  bool float_mode = false;       // decimals with 12 significant digits
  bool chains_only = false;      // omit posteriors from enumerate output
};

/// "p/q" in exact mode, decimal in float mode.
std::string format_rational(const Rational& r, const OutputOptions& options);

/// Compact level string, e.g. "00,11|01,10".
std::string chain_to_levels_string(const SemiChain& chain, const StateSpace& states);

/// Parses the level-string form back into a chain over the given states.
SemiChain parse_levels_string(const std::string& text, const StateSpace& states);

nlohmann::json chain_to_json(const SemiChain& chain, const StateSpace& states);
SemiChain chain_from_json(const nlohmann::json& doc, const StateSpace& states);

nlohmann::json posterior_to_json(const Posterior& mu, const OutputOptions& options);
Posterior posterior_from_json(const nlohmann::json& doc);

nlohmann::json problem_summary_json(const Problem& problem, const OutputOptions& options);

nlohmann::json enumerate_to_json(const Problem& problem, const ExtremeSet& extremes,
                                 const OutputOptions& options);
std::string enumerate_to_csv(const Problem& problem, const ExtremeSet& extremes,
                             const OutputOptions& options);

nlohmann::json report_to_json(const Problem& problem, const CrossCheckReport& report,
                              const OutputOptions& options);

nlohmann::json signal_to_json(const Signal& signal, const OutputOptions& options);

/// DOT rendering; when a chain is supplied its levels become same-rank
/// groups.
std::string graph_to_dot(const Graph& g, const SemiChain* chain = nullptr);
nlohmann::json graph_to_json(const Graph& g);

}  // namespace gip

#endif  // GIP_SERIALIZE_HPP
