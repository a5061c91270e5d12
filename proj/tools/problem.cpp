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

#include "gip/problem.hpp"

#include <cmath>
#include <fstream>

#include "gip/errors.hpp"

namespace gip {

namespace {

StateSpace states_from(const nlohmann::json& doc, const std::optional<DimensionSpec>& dims) {
  if (doc.contains("states")) {
    std::vector<std::string> labels;
    for (const auto& entry : doc.at("states")) labels.push_back(entry.get<std::string>());
    return StateSpace(std::move(labels));
  }
  if (dims) {
    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(dims->state_count()));
    for (int v = 0; v < dims->state_count(); ++v) labels.push_back(dims->label_of(v));
    return StateSpace(std::move(labels));
  }
  throw InvalidArgument("problem needs either \"states\" or \"dims\"");
}

Prior prior_from(const nlohmann::json& doc, int state_count) {
  const auto& prior = doc.at("prior");
  if (prior.is_string()) {
    if (prior.get<std::string>() != "uniform") {
      throw InvalidArgument("prior must be \"uniform\" or a list of rationals");
    }
    return Prior::uniform(state_count);
  }
  std::vector<Rational> probs;
  for (const auto& entry : prior) probs.push_back(parse_rational(entry.get<std::string>()));
  if (static_cast<int>(probs.size()) != state_count) {
    throw InvalidArgument("prior length does not match the state count");
  }
  return Prior(std::move(probs));
}

std::pair<Budget, bool> budget_from(const nlohmann::json& doc) {
  const auto& budget = doc.at("budget");
  if (budget.contains("t")) {
    return {Budget(parse_rational(budget.at("t").get<std::string>())), false};
  }
  if (budget.contains("epsilon")) {
    const Rational eps = parse_rational(budget.at("epsilon").get<std::string>());
    if (eps < 0) throw InvalidArgument("epsilon must be nonnegative");
    if (eps == 0) return {Budget(Rational(1)), false};
    const double t = std::exp(eps.convert_to<double>());
    return {Budget(best_rational_approximation(t, 1'000'000)), true};
  }
  throw InvalidArgument("budget needs \"t\" or \"epsilon\"");
}

}  // namespace

Problem parse_problem(const nlohmann::json& doc) {
  std::optional<DimensionSpec> dims;
  if (doc.contains("dims")) {
    std::vector<int> sizes;
    for (const auto& entry : doc.at("dims")) sizes.push_back(entry.get<int>());
    dims.emplace(std::move(sizes));
  }

  StateSpace states = states_from(doc, dims);
  const auto& graph_spec = doc.at("graph");
  const std::string kind = graph_spec.at("kind").get<std::string>();

  std::optional<Graph> graph;
  if (kind == "complete") {
    graph = Graph::complete(std::move(states));
  } else if (kind == "differential") {
    if (!dims) throw InvalidArgument("a differential graph needs \"dims\"");
    Graph built = differential_graph(*dims);
    if (doc.contains("states") && !(built.states() == states)) {
      throw InvalidArgument("\"states\" conflicts with the differential labeling");
    }
    graph = std::move(built);
  } else if (kind == "custom") {
    std::vector<std::pair<int, int>> edges;
    for (const auto& entry : graph_spec.at("edges")) {
      edges.emplace_back(entry.at(0).get<int>(), entry.at(1).get<int>());
    }
    graph = Graph::build(std::move(states), edges);
  } else {
    throw InvalidArgument("graph kind must be complete, differential, or custom");
  }

  Prior prior = prior_from(doc, graph->size());
  auto [budget, approximate] = budget_from(doc);
  return Problem{std::move(*graph), std::move(prior), std::move(budget), std::move(dims),
                 approximate};
}

Problem load_problem(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open problem file: " + path);
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument("malformed problem JSON: " + std::string(e.what()));
  }
  try {
    return parse_problem(doc);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument("problem file: " + std::string(e.what()));
  }
}

}  // namespace gip
