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

#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "gip/diffpriv.hpp"
#include "gip/errors.hpp"
#include "gip/oracle.hpp"
#include "test_util.hpp"

using namespace gip;

namespace {

SemiChain chain_of(std::vector<std::vector<int>> levels, int state_count) {
  return SemiChain(std::move(levels), state_count);
}

std::set<SemiChain> reversal_closure(const std::vector<SemiChain>& chains) {
  std::set<SemiChain> closed;
  for (const SemiChain& c : chains) {
    closed.insert(c);
    closed.insert(reverse(c));
  }
  return closed;
}

// Compresses a 2-semi-chain of the n1 x n2 grid into its nondecreasing
// division-sequence form; the independent route used to validate the
// sequence enumerator.
DivisionSequence sequence_of_chain(const SemiChain& chain, int n1, int n2) {
  const auto patterns = division_patterns(n2);
  std::map<std::pair<std::vector<int>, std::vector<int>>, int> id_of;
  for (std::size_t id = 0; id < patterns.size(); ++id) {
    id_of[{patterns[id].side(1), patterns[id].side(2)}] = static_cast<int>(id);
  }
  std::vector<int> ids;
  for (int x = 0; x < n1; ++x) {
    std::vector<int> first, second;
    for (int y = 0; y < n2; ++y) {
      (chain.level_of(x * n2 + y) == 1 ? first : second).push_back(y);
    }
    ids.push_back(id_of.at({first, second}));
  }
  std::sort(ids.begin(), ids.end());
  return DivisionSequence{n2, ids};
}

}  // namespace

TEST_CASE("dimension specs") {
  const DimensionSpec dims({3, 2});
  CHECK(dims.state_count() == 6);
  CHECK(dims.tuple_of(5) == std::vector<int>{2, 1});
  CHECK(dims.index_of({2, 1}) == 5);
  CHECK(dims.label_of(3) == "11");
  CHECK(DimensionSpec({12, 2}).label_of(3) == "1,1");
  CHECK_THROWS_AS(DimensionSpec({1, 2}), InvalidArgument);
  CHECK_THROWS_AS(DimensionSpec(std::vector<int>{}), InvalidArgument);
}

TEST_CASE("differential graphs") {
  SUBCASE("2x2 is the 4-cycle") {
    const Graph g = differential_graph(DimensionSpec({2, 2}));
    CHECK(g.size() == 4);
    CHECK(g.edge_count() == 4);
    CHECK(g.states().labels() == std::vector<std::string>{"00", "01", "10", "11"});
    CHECK_FALSE(g.adjacent(0, 3));  // 00 vs 11 differ twice
  }
  SUBCASE("the 3-cube") {
    const Graph g = differential_graph(DimensionSpec({2, 2, 2}));
    CHECK(g.size() == 8);
    CHECK(g.edge_count() == 12);
  }
  SUBCASE("one dimension is complete") {
    const Graph g = differential_graph(DimensionSpec({3}));
    CHECK(g.size() == 3);
    CHECK(g.edge_count() == 3);
  }
}

TEST_CASE("level bound") {
  CHECK(max_level(DimensionSpec({2, 2})) == 3);
  CHECK(max_level(DimensionSpec({3, 3, 3})) == 4);
  CHECK(max_level(DimensionSpec({2})) == 2);
}

TEST_CASE("recursive (K+1)-chain construction") {
  SUBCASE("base case") {
    CHECK(construct_k_plus_1_chain(DimensionSpec({2})) == chain_of({{0}, {1}}, 2));
    CHECK(construct_k_plus_1_chain(DimensionSpec({3})) == chain_of({{0}, {1, 2}}, 3));
  }
  SUBCASE("two binary dimensions") {
    CHECK(construct_k_plus_1_chain(DimensionSpec({2, 2})) ==
          chain_of({{0}, {1, 2}, {3}}, 4));  // ({00},{01,10},{11})
  }
  SUBCASE("3x3 grid gets a strongly connected 3-chain") {
    const DimensionSpec dims({3, 3});
    const SemiChain c = construct_k_plus_1_chain(dims);
    CHECK(c.level_count() == 3);
    CHECK(is_strongly_connected(c, differential_graph(dims)));
    // The anchor copy (second coordinate 0) keeps the base levels; the other
    // copies sit one level higher.
    CHECK(c.level_of(dims.index_of({0, 0})) == 1);
    CHECK(c.level_of(dims.index_of({0, 1})) == 2);
    CHECK(c.level_of(dims.index_of({1, 0})) == 2);
    CHECK(c.level_of(dims.index_of({1, 2})) == 3);
  }
  SUBCASE("present in the full enumeration, and the level bound holds") {
    const std::vector<std::vector<int>> corpus = {{2},    {3},    {2, 2},    {2, 3},
                                                  {3, 2}, {3, 3}, {2, 2, 2}, {4, 2},
                                                  {2, 2, 2, 2}, {3, 3, 2}};
    for (const auto& sizes : corpus) {
      const DimensionSpec dims(sizes);
      const Graph g = differential_graph(dims);
      const auto chains = enumerate_all_semichains(g);
      const SemiChain constructed = construct_k_plus_1_chain(dims);
      CHECK(std::count(chains.begin(), chains.end(), constructed) == 1);
      for (const SemiChain& c : chains) {
        CHECK(c.level_count() <= max_level(dims));
      }
    }
  }
}

TEST_CASE("binary parity chain") {
  SUBCASE("explicit small cases") {
    CHECK(binary_two_chain(1) == chain_of({{0}, {1}}, 2));
    CHECK(binary_two_chain(2) == chain_of({{0, 3}, {1, 2}}, 4));
    CHECK(binary_two_chain(3) == chain_of({{0, 3, 5, 6}, {1, 2, 4, 7}}, 8));
  }
  SUBCASE("no within-level edges") {
    for (int k = 1; k <= 4; ++k) {
      const Graph g = differential_graph(DimensionSpec(std::vector<int>(k, 2)));
      const SemiChain c = binary_two_chain(k);
      for (auto [i, j] : g.edges()) {
        CHECK(c.level_of(i) != c.level_of(j));
      }
    }
  }
  SUBCASE("unique strongly connected 2-semi-chain up to reversal") {
    for (int k = 2; k <= 4; ++k) {
      const Graph g = differential_graph(DimensionSpec(std::vector<int>(k, 2)));
      const auto chains = enumerate_two_semichains(g);
      const SemiChain parity = binary_two_chain(k);
      CHECK(std::set<SemiChain>(chains.begin(), chains.end()) ==
            std::set<SemiChain>{parity, reverse(parity)});
    }
  }
  SUBCASE("lifting the (K-1)-cube chain gives the K-cube chain") {
    for (int k = 2; k <= 5; ++k) {
      const SemiChain base = binary_two_chain(k - 1);
      std::vector<int> level1, level2;
      for (int v = 0; v < 1 << (k - 1); ++v) {
        const bool in_a = base.level_of(v) == 1;
        (in_a ? level1 : level2).push_back(2 * v);      // (". ", 0) keeps the level
        (in_a ? level2 : level1).push_back(2 * v + 1);  // (". ", 1) swaps
      }
      const SemiChain lifted = chain_of({level1, level2}, 1 << k);
      const SemiChain direct = binary_two_chain(k);
      CHECK((lifted == direct || lifted == reverse(direct)));
    }
  }
}

TEST_CASE("division patterns") {
  SUBCASE("order for two columns") {
    const auto patterns = division_patterns(2);
    REQUIRE(patterns.size() == 4);
    CHECK(patterns[0] == DivisionPattern({0}, {1}));
    CHECK(patterns[1] == DivisionPattern({1}, {0}));
    CHECK(patterns[2] == DivisionPattern({0, 1}, {}));
    CHECK(patterns[3] == DivisionPattern({}, {0, 1}));
  }
  SUBCASE("counts") {
    CHECK(division_patterns(3).size() == 8);
    int divided = 0;
    for (const auto& p : division_patterns(3)) divided += p.divided() ? 1 : 0;
    CHECK(divided == 6);
    CHECK(division_patterns(4).size() == 16);
  }
  SUBCASE("sides must partition Y") {
    CHECK_THROWS_AS(DivisionPattern({0}, {0, 1}), InvalidArgument);
    CHECK_THROWS_AS(DivisionPattern({0}, {2}), InvalidArgument);
  }
  SUBCASE("Y needs at least two columns") {
    CHECK_THROWS_AS(division_patterns(1), InvalidArgument);
    CHECK_THROWS_AS(enumerate_division_sequences(1, 2), InvalidArgument);
  }
}

TEST_CASE("division sequence enumeration") {
  SUBCASE("2x2 grid has a single sequence") {
    const auto sequences = enumerate_division_sequences(2, 2);
    REQUIRE(sequences.size() == 1);
    CHECK(sequences[0].pattern_ids == std::vector<int>{0, 1});
  }
  SUBCASE("3x2 grid emits the six expected sequences") {
    const auto sequences = enumerate_division_sequences(3, 2);
    const std::set<std::vector<int>> got = [&] {
      std::set<std::vector<int>> s;
      for (const auto& seq : sequences) s.insert(seq.pattern_ids);
      return s;
    }();
    const std::set<std::vector<int>> expected = {{0, 0, 1}, {0, 1, 1}, {0, 1, 2},
                                                 {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
    CHECK(got == expected);
    CHECK(sequences.size() == expected.size());
  }
  SUBCASE("no duplicates and nondecreasing codes") {
    for (int n1 = 2; n1 <= 4; ++n1) {
      for (int n2 = 2; n2 <= 3; ++n2) {
        const auto sequences = enumerate_division_sequences(n1, n2);
        std::set<std::vector<int>> distinct;
        for (const auto& seq : sequences) {
          CHECK(std::is_sorted(seq.pattern_ids.begin(), seq.pattern_ids.end()));
          CHECK(distinct.insert(seq.pattern_ids).second);
        }
      }
    }
  }
  SUBCASE("matches the compressed exhaustive scan") {
    for (int n1 = 2; n1 <= 4; ++n1) {
      for (int n2 = 2; n2 <= 3; ++n2) {
        const Graph g = differential_graph(DimensionSpec({n1, n2}));
        std::set<std::vector<int>> from_scan;
        for (const SemiChain& c : enumerate_two_semichains(g)) {
          from_scan.insert(sequence_of_chain(c, n1, n2).pattern_ids);
        }
        std::set<std::vector<int>> from_algorithm;
        for (const auto& seq : enumerate_division_sequences(n1, n2)) {
          from_algorithm.insert(seq.pattern_ids);
        }
        CHECK(from_algorithm == from_scan);
      }
    }
  }
}

TEST_CASE("sequence expansion") {
  SUBCASE("two distinct patterns expand to two chains") {
    const auto chains = expand_sequences_to_chains({DivisionSequence{2, {0, 1}}}, 2);
    CHECK(chains.size() == 2);
  }
  SUBCASE("multiset permutations count") {
    const auto chains = expand_sequences_to_chains({DivisionSequence{2, {0, 0, 1}}}, 3);
    CHECK(chains.size() == 3);
  }
  SUBCASE("length mismatch") {
    CHECK_THROWS_AS(expand_sequences_to_chains({DivisionSequence{2, {0, 1}}}, 3), LengthMismatch);
  }
  SUBCASE("full pipeline equals the generic enumeration") {
    const std::vector<std::pair<int, int>> grids = {{2, 2}, {3, 2}, {2, 3}, {3, 3}, {4, 2}};
    for (auto [n1, n2] : grids) {
      const Graph g = differential_graph(DimensionSpec({n1, n2}));
      const auto expanded = expand_sequences_to_chains(enumerate_division_sequences(n1, n2), n1);
      CHECK(reversal_closure(expanded) == reversal_closure(enumerate_two_semichains(g)));
    }
  }
}
