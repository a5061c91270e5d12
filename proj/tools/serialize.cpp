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

#include "gip/serialize.hpp"

#include <sstream>

#include "gip/errors.hpp"

namespace gip {

std::string format_rational(const Rational& r, const OutputOptions& options) {
  return options.float_mode ? to_decimal_string(r) : to_string(r);
}

std::string chain_to_levels_string(const SemiChain& chain, const StateSpace& states) {
  std::string out;
  for (int l = 0; l < chain.level_count(); ++l) {
    if (l > 0) out += '|';
    const auto& level = chain.level(l);
    for (std::size_t k = 0; k < level.size(); ++k) {
      if (k > 0) out += ',';
      out += states.label(level[k]);
    }
  }
  return out;
}

SemiChain parse_levels_string(const std::string& text, const StateSpace& states) {
  std::vector<std::vector<int>> levels;
  std::stringstream level_stream(text);
  std::string level_text;
  while (std::getline(level_stream, level_text, '|')) {
    std::vector<int> level;
    std::stringstream label_stream(level_text);
    std::string label;
    while (std::getline(label_stream, label, ',')) {
      const int index = states.index_of(label);
      if (index < 0) throw InvalidArgument("unknown state label: '" + label + "'");
      level.push_back(index);
    }
    levels.push_back(std::move(level));
  }
  return SemiChain(std::move(levels), states.size());
}

nlohmann::json chain_to_json(const SemiChain& chain, const StateSpace& states) {
  nlohmann::json levels = nlohmann::json::array();
  for (int l = 0; l < chain.level_count(); ++l) {
    nlohmann::json level = nlohmann::json::array();
    for (int state : chain.level(l)) level.push_back(states.label(state));
    levels.push_back(std::move(level));
  }
  return levels;
}

SemiChain chain_from_json(const nlohmann::json& doc, const StateSpace& states) {
  std::vector<std::vector<int>> levels;
  for (const auto& level_doc : doc) {
    std::vector<int> level;
    for (const auto& label : level_doc) {
      const int index = states.index_of(label.get<std::string>());
      if (index < 0) {
        throw InvalidArgument("unknown state label: '" + label.get<std::string>() + "'");
      }
      level.push_back(index);
    }
    levels.push_back(std::move(level));
  }
  return SemiChain(std::move(levels), states.size());
}

nlohmann::json posterior_to_json(const Posterior& mu, const OutputOptions& options) {
  nlohmann::json out = nlohmann::json::array();
  for (int i = 0; i < mu.size(); ++i) out.push_back(format_rational(mu[i], options));
  return out;
}

Posterior posterior_from_json(const nlohmann::json& doc) {
  std::vector<Rational> probs;
  for (const auto& entry : doc) probs.push_back(parse_rational(entry.get<std::string>()));
  return Posterior(std::move(probs));
}

nlohmann::json problem_summary_json(const Problem& problem, const OutputOptions& options) {
  nlohmann::json out;
  out["states"] = problem.graph.states().labels();
  out["edge_count"] = problem.graph.edge_count();
  out["t"] = format_rational(problem.budget.t(), options);
  out["budget_approximate"] = problem.budget_approximate;
  nlohmann::json prior = nlohmann::json::array();
  for (int i = 0; i < problem.prior.size(); ++i) {
    prior.push_back(format_rational(problem.prior[i], options));
  }
  out["prior"] = std::move(prior);
  if (problem.dims) out["dims"] = problem.dims->sizes();
  return out;
}

nlohmann::json enumerate_to_json(const Problem& problem, const ExtremeSet& extremes,
                                 const OutputOptions& options) {
  nlohmann::json out;
  out["problem"] = problem_summary_json(problem, options);
  out["degenerate_budget"] = extremes.degenerate_point.has_value();

  nlohmann::json points = nlohmann::json::array();
  if (extremes.degenerate_point) {
    nlohmann::json record;
    if (!options.chains_only) {
      record["posterior"] = posterior_to_json(*extremes.degenerate_point, options);
    }
    record["levels"] = "";
    record["L"] = 1;
    points.push_back(std::move(record));
  }
  for (const auto& point : extremes.points) {
    nlohmann::json record;
    record["chain"] = chain_to_json(point.chain, problem.graph.states());
    record["levels"] = chain_to_levels_string(point.chain, problem.graph.states());
    record["L"] = point.chain.level_count();
    if (!options.chains_only) {
      record["posterior"] = posterior_to_json(point.posterior, options);
    }
    points.push_back(std::move(record));
  }
  out["points"] = std::move(points);
  out["count"] = out["points"].size();

  nlohmann::json collisions = nlohmann::json::array();
  for (const auto& collision : extremes.collisions) {
    nlohmann::json record;
    record["posterior"] = posterior_to_json(collision.posterior, options);
    nlohmann::json chains = nlohmann::json::array();
    for (const auto& chain : collision.chains) {
      chains.push_back(chain_to_levels_string(chain, problem.graph.states()));
    }
    record["chains"] = std::move(chains);
    collisions.push_back(std::move(record));
  }
  out["collisions"] = std::move(collisions);
  return out;
}

std::string enumerate_to_csv(const Problem& problem, const ExtremeSet& extremes,
                             const OutputOptions& options) {
  std::ostringstream out;
  out << "chain,L";
  if (!options.chains_only) {
    for (const auto& label : problem.graph.states().labels()) {
      if (label.find(',') != std::string::npos) {
        out << ",\"p_" << label << '"';
      } else {
        out << ",p_" << label;
      }
    }
  }
  out << "\n";

  auto emit_posterior = [&](const Posterior& mu) {
    for (int i = 0; i < mu.size(); ++i) out << ',' << format_rational(mu[i], options);
  };
  if (extremes.degenerate_point) {
    out << "\"\",1";
    if (!options.chains_only) emit_posterior(*extremes.degenerate_point);
    out << "\n";
  }
  for (const auto& point : extremes.points) {
    out << '"' << chain_to_levels_string(point.chain, problem.graph.states()) << '"' << ','
        << point.chain.level_count();
    if (!options.chains_only) emit_posterior(point.posterior);
    out << "\n";
  }
  return out.str();
}

nlohmann::json report_to_json(const Problem& problem, const CrossCheckReport& report,
                              const OutputOptions& options) {
  nlohmann::json out;
  out["problem"] = problem_summary_json(problem, options);
  out["matched"] = report.matched();
  out["degenerate_budget"] = report.degenerate_budget;
  out["oracle_count"] = report.oracle_vertices.size();
  out["chain_count"] = report.chain_vertices.size();

  auto posterior_list = [&](const std::vector<Posterior>& list) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& mu : list) arr.push_back(posterior_to_json(mu, options));
    return arr;
  };
  out["missing_from_chains"] = posterior_list(report.missing_from_chains);
  out["extra_in_chains"] = posterior_list(report.extra_in_chains);

  nlohmann::json collisions = nlohmann::json::array();
  for (const auto& collision : report.chain_collisions) {
    nlohmann::json record;
    record["posterior"] = posterior_to_json(collision.posterior, options);
    nlohmann::json chains = nlohmann::json::array();
    for (const auto& chain : collision.chains) {
      chains.push_back(chain_to_levels_string(chain, problem.graph.states()));
    }
    record["chains"] = std::move(chains);
    collisions.push_back(std::move(record));
  }
  out["chain_collisions"] = std::move(collisions);
  return out;
}

nlohmann::json signal_to_json(const Signal& signal, const OutputOptions& options) {
  nlohmann::json out;
  out["support_size"] = signal.support_size();
  nlohmann::json support = nlohmann::json::array();
  for (const auto& mu : signal.support()) support.push_back(posterior_to_json(mu, options));
  out["support"] = std::move(support);
  nlohmann::json weights = nlohmann::json::array();
  Rational total(0);
  for (const auto& w : signal.weights()) {
    weights.push_back(format_rational(w, options));
    total += w;
  }
  out["weights"] = std::move(weights);
  out["weight_sum"] = format_rational(total, options);
  return out;
}

std::string graph_to_dot(const Graph& g, const SemiChain* chain) {
  std::ostringstream out;
  out << "graph gip {\n";
  if (chain) out << "  rankdir=BT;\n";
  for (int v = 0; v < g.size(); ++v) {
    out << "  \"" << g.states().label(v) << "\";\n";
  }
  for (auto [i, j] : g.edges()) {
    out << "  \"" << g.states().label(i) << "\" -- \"" << g.states().label(j) << "\";\n";
  }
  if (chain) {
    for (int l = 0; l < chain->level_count(); ++l) {
      out << "  { rank=same;";
      for (int state : chain->level(l)) out << " \"" << g.states().label(state) << "\";";
      out << " }\n";
    }
  }
  out << "}\n";
  return out.str();
}

nlohmann::json graph_to_json(const Graph& g) {
  nlohmann::json out;
  out["states"] = g.states().labels();
  nlohmann::json edges = nlohmann::json::array();
  for (auto [i, j] : g.edges()) edges.push_back(nlohmann::json::array({i, j}));
  out["edges"] = std::move(edges);
  out["edge_count"] = g.edge_count();
  return out;
}

}  // namespace gip
