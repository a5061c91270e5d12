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

#include "gip/state_space.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "gip/errors.hpp"

namespace gip {

StateSpace::StateSpace(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.size() < 2) throw InvalidArgument("a state space needs at least two states");
  std::set<std::string_view> seen;
  for (const auto& label : labels_) {
    if (!seen.insert(label).second) {
      throw InvalidArgument("duplicate state label: '" + label + "'");
    }
  }
}

int StateSpace::index_of(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return static_cast<int>(i);
  }
  return -1;
}

Graph Graph::build(StateSpace states, const std::vector<std::pair<int, int>>& edges) {
  const int j = states.size();
  if (j > 64) throw InstanceTooLarge("graphs are limited to 64 states");

  std::set<std::pair<int, int>> dedup;
  for (auto [a, b] : edges) {
    if (a < 0 || a >= j || b < 0 || b >= j) {
      throw IndexOutOfRange("edge endpoint out of range");
    }
    if (a == b) throw SelfLoop("self-loop on state " + states.label(a));
    dedup.emplace(std::min(a, b), std::max(a, b));
  }

  std::vector<std::uint64_t> adjacency(static_cast<std::size_t>(j), 0);
  for (auto [a, b] : dedup) {
    adjacency[static_cast<std::size_t>(a)] |= 1ULL << b;
    adjacency[static_cast<std::size_t>(b)] |= 1ULL << a;
  }

  const std::uint64_t all = j == 64 ? ~0ULL : (1ULL << j) - 1;
  if (!mask_connected(adjacency, all)) {
    throw DisconnectedGraph("edge set does not connect all states");
  }

  return Graph(std::move(states), std::vector<std::pair<int, int>>(dedup.begin(), dedup.end()),
               std::move(adjacency));
}

Graph Graph::complete(StateSpace states) {
  std::vector<std::pair<int, int>> edges;
  const int j = states.size();
  edges.reserve(static_cast<std::size_t>(j) * (j - 1) / 2);
  for (int a = 0; a < j; ++a) {
    for (int b = a + 1; b < j; ++b) edges.emplace_back(a, b);
  }
  return build(std::move(states), edges);
}

bool mask_connected(const std::vector<std::uint64_t>& adjacency, std::uint64_t members) {
  if (members == 0) return true;
  const int start = std::countr_zero(members);
  std::uint64_t reached = 1ULL << start;
  std::uint64_t frontier = reached;
  while (frontier != 0) {
    std::uint64_t next = 0;
    std::uint64_t scan = frontier;
    while (scan != 0) {
      const int v = std::countr_zero(scan);
      scan &= scan - 1;
      next |= adjacency[static_cast<std::size_t>(v)] & members;
    }
    frontier = next & ~reached;
    reached |= frontier;
  }
  return reached == members;
}

}  // namespace gip
