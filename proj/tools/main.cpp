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

#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "gip/errors.hpp"
#include "gip/serialize.hpp"

namespace {

gip::Posterior parse_posterior_arg(const std::string& text) {
  std::vector<gip::Rational> probs;
  std::stringstream stream(text);
  std::string entry;
  while (std::getline(stream, entry, ',')) probs.push_back(gip::parse_rational(entry));
  return gip::Posterior(std::move(probs));
}

/// Points at the first violated edge constraint, for error messages.
std::string membership_diagnostic(const gip::Posterior& mu, const gip::Problem& problem) {
  const auto& g = problem.graph;
  for (auto [i, j] : g.edges()) {
    const gip::Rational lhs = mu[j] * problem.prior[i];
    const gip::Rational rhs = mu[i] * problem.prior[j];
    if (lhs > problem.budget.t() * rhs || rhs > problem.budget.t() * lhs) {
      return "edge {" + g.states().label(i) + "," + g.states().label(j) +
             "}: quotient outside [1/t, t] for t = " + gip::to_string(problem.budget.t());
    }
  }
  return "no violated edge found";
}

gip::Prior random_interior_prior(int state_count, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> pick(1, 50);
  std::vector<gip::Rational> weights(static_cast<std::size_t>(state_count));
  gip::Rational total(0);
  for (auto& w : weights) {
    w = gip::Rational(pick(rng));
    total += w;
  }
  for (auto& w : weights) w /= total;
  return gip::Prior(std::move(weights));
}

int run_enumerate(const std::string& path, const std::string& format, bool chains_only,
                  bool float_mode, int max_level) {
  const gip::Problem problem = gip::load_problem(path);
  gip::OutputOptions options{float_mode, chains_only};
  const gip::ExtremeSet extremes =
      gip::enumerate_extreme_posteriors(problem.graph, problem.prior, problem.budget, max_level);
  if (extremes.degenerate_point) {
    std::cerr << "warning: t = 1, the feasible set is the prior alone\n";
  }
  if (!extremes.collisions.empty()) {
    std::cerr << "warning: " << extremes.collisions.size()
              << " posterior collision(s) between distinct chains\n";
  }
  if (format == "csv") {
    std::cout << gip::enumerate_to_csv(problem, extremes, options);
  } else {
    std::cout << gip::enumerate_to_json(problem, extremes, options).dump(2) << "\n";
  }
  return 0;
}

int run_verify(const std::string& path, int oracle_cap, const std::string& format,
               int random_priors, std::uint64_t seed) {
  const gip::Problem problem = gip::load_problem(path);
  gip::OutputOptions options;
  const gip::CrossCheckReport report =
      gip::cross_check(problem.graph, problem.prior, problem.budget, oracle_cap);
  bool all_matched = report.matched();

  // Two-dimensional differential instances also get the division-sequence
  // pipeline compared against the generic 2-semi-chain enumeration.
  std::optional<bool> algorithm1_matched;
  std::size_t sequence_count = 0, two_chain_count = 0;
  if (problem.dims && problem.dims->dimension_count() == 2) {
    const int n1 = problem.dims->sizes()[0];
    const int n2 = problem.dims->sizes()[1];
    const auto sequences = gip::enumerate_division_sequences(n1, n2);
    const auto expanded = gip::expand_sequences_to_chains(sequences, n1);
    const auto scanned = gip::enumerate_two_semichains(problem.graph);
    algorithm1_matched = std::set<gip::SemiChain>(expanded.begin(), expanded.end()) ==
                         std::set<gip::SemiChain>(scanned.begin(), scanned.end());
    sequence_count = sequences.size();
    two_chain_count = scanned.size();
    all_matched = all_matched && *algorithm1_matched;
  }

  std::vector<gip::CrossCheckReport> random_reports;
  if (random_priors > 0) {
    std::mt19937_64 rng(seed);
    for (int round = 0; round < random_priors; ++round) {
      const gip::Prior prior = random_interior_prior(problem.graph.size(), rng);
      random_reports.push_back(
          gip::cross_check(problem.graph, prior, problem.budget, oracle_cap));
      all_matched = all_matched && random_reports.back().matched();
    }
  }

  if (format == "json") {
    nlohmann::json doc = gip::report_to_json(problem, report, options);
    if (algorithm1_matched) {
      doc["algorithm1_matched"] = *algorithm1_matched;
      doc["algorithm1_sequences"] = sequence_count;
    }
    nlohmann::json extras = nlohmann::json::array();
    for (const auto& extra : random_reports) {
      extras.push_back({{"matched", extra.matched()},
                        {"oracle_count", extra.oracle_vertices.size()}});
    }
    doc["random_priors"] = std::move(extras);
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << (report.matched() ? "MATCH" : "MISMATCH") << ", " << report.oracle_vertices.size()
              << " vertices\n";
    if (!report.matched()) {
      std::cout << "  missing from chains: " << report.missing_from_chains.size()
                << ", extra in chains: " << report.extra_in_chains.size()
                << ", collisions: " << report.chain_collisions.size() << "\n";
    }
    if (algorithm1_matched) {
      std::cout << "algorithm1: " << (*algorithm1_matched ? "MATCH" : "MISMATCH") << " ("
                << sequence_count << " sequences, " << two_chain_count << " two-chains)\n";
    }
    for (std::size_t round = 0; round < random_reports.size(); ++round) {
      std::cout << "random prior " << round << ": "
                << (random_reports[round].matched() ? "MATCH" : "MISMATCH") << ", "
                << random_reports[round].oracle_vertices.size() << " vertices\n";
    }
  }
  return all_matched ? 0 : 2;
}

int run_decompose(const std::string& path, const std::string& posterior_text, bool float_mode) {
  const gip::Problem problem = gip::load_problem(path);
  gip::OutputOptions options{float_mode, false};
  const gip::Posterior mu = parse_posterior_arg(posterior_text);
  if (mu.size() != problem.graph.size()) {
    throw gip::InvalidArgument("posterior length does not match the state count");
  }
  const bool member = float_mode
                          ? gip::is_member(mu, problem.prior, problem.graph, problem.budget, 1e-9)
                          : gip::is_member(mu, problem.prior, problem.graph, problem.budget);
  if (!member) {
    throw gip::NotMember("posterior is not feasible: " + membership_diagnostic(mu, problem));
  }
  const gip::Signal signal =
      gip::decompose_into_extremes(mu, problem.graph, problem.prior, problem.budget);
  std::cout << gip::signal_to_json(signal, options).dump(2) << "\n";
  return 0;
}

int run_graph(const std::string& path, const std::string& format, const std::string& chain_text) {
  const gip::Problem problem = gip::load_problem(path);
  std::optional<gip::SemiChain> chain;
  if (!chain_text.empty()) {
    chain = gip::parse_levels_string(chain_text, problem.graph.states());
    if (!gip::validate_semichain(*chain, problem.graph)) {
      throw gip::InvalidArgument("supplied chain is not a semi-chain of this graph");
    }
  }
  if (format == "json") {
    std::cout << gip::graph_to_json(problem.graph).dump(2) << "\n";
  } else {
    std::cout << gip::graph_to_dot(problem.graph, chain ? &*chain : nullptr);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact enumeration of extreme posteriors under graph-based inferential privacy"};
  app.require_subcommand(1);

  std::string problem_path;
  std::string enumerate_format = "json";
  std::string verify_format = "text";
  std::string graph_format = "dot";
  std::string posterior_text;
  std::string chain_text;
  bool chains_only = false;
  bool float_mode = false;
  int max_level = 0;
  int oracle_cap = 8;
  int random_priors = 0;
  std::uint64_t seed = 1;

  auto* enumerate = app.add_subcommand("enumerate", "List all extreme posteriors with their chains");
  enumerate->add_option("-p,--problem", problem_path, "Problem JSON file")->required();
  enumerate->add_option("--format", enumerate_format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  enumerate->add_flag("--chains-only", chains_only, "Omit posteriors from the output");
  enumerate->add_flag("--float", float_mode, "Emit decimals instead of exact rationals");
  enumerate->add_option("--max-level", max_level, "Cap the number of chain levels (0 = unbounded)");

  auto* verify = app.add_subcommand("verify", "Cross-check the chain pipeline against the vertex oracle");
  verify->add_option("-p,--problem", problem_path, "Problem JSON file")->required();
  verify->add_option("--oracle-cap", oracle_cap, "State-count cap for the oracle");
  verify->add_option("--format", verify_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  verify->add_option("--random-priors", random_priors, "Also check this many random interior priors");
  verify->add_option("--seed", seed, "Seed for the random priors");

  auto* decompose = app.add_subcommand("decompose", "Write a feasible posterior as a mix of extreme ones");
  decompose->add_option("-p,--problem", problem_path, "Problem JSON file")->required();
  decompose->add_option("--posterior", posterior_text, "Comma-separated rational entries")->required();
  decompose->add_flag("--float", float_mode, "Emit decimals instead of exact rationals");

  auto* graph = app.add_subcommand("graph", "Emit the privacy graph as DOT or JSON");
  graph->add_option("-p,--problem", problem_path, "Problem JSON file")->required();
  graph->add_option("--format", graph_format, "dot or json")
      ->check(CLI::IsMember({"dot", "json"}));
  graph->add_option("--chain", chain_text, "Levels like \"00,11|01,10\" rendered as ranks");

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(enumerate)) {
      return run_enumerate(problem_path, enumerate_format, chains_only, float_mode, max_level);
    }
    if (app.got_subcommand(verify)) {
      return run_verify(problem_path, oracle_cap, verify_format, random_priors, seed);
    }
    if (app.got_subcommand(decompose)) {
      return run_decompose(problem_path, posterior_text, float_mode);
    }
    if (app.got_subcommand(graph)) {
      return run_graph(problem_path, graph_format, chain_text);
    }
  } catch (const gip::InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
