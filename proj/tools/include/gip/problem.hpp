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

#ifndef GIP_PROBLEM_HPP
#define GIP_PROBLEM_HPP

#include <optional>
#include <string>

#include <json.hpp>

#include "gip/belief.hpp"
#include "gip/diffpriv.hpp"
#include "gip/state_space.hpp"

namespace gip {

/// A fully built problem instance: graph, interior prior, and budget.
///
/// Problem files are JSON objects:
///   {
///     "states": ["a", "b", "c"],          // or "dims": [2, 2]
///     "prior": "uniform",                  // or ["1/3", "1/3", "1/3"]
///     "budget": {"t": "2"},               // or {"epsilon": "0.6931"}
///     "graph": {"kind": "complete"}        // "differential" | "custom"
///   }
/// A custom graph carries "edges": [[0, 1], ...]. Rational strings are
/// "p/q" or integers; "epsilon" takes a decimal and is converted to the
/// best rational approximation of e^epsilon with denominator <= 10^6,
/// in which case budget_approximate is set.
struct Problem {
  Graph graph;
  Prior prior;
  Budget budget;
  std::optional<DimensionSpec> dims;
  bool budget_approximate = false;
};

Problem parse_problem(const nlohmann::json& doc);
Problem load_problem(const std::string& path);

}  // namespace gip

#endif  // GIP_PROBLEM_HPP
