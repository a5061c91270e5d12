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

#ifndef GIP_STATE_SPACE_HPP
#define GIP_STATE_SPACE_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gip {

/// Finite labeled state set; states are addressed by index 0..size()-1.
class StateSpace {
 public:
  /// Requires at least two pairwise distinct labels.
  explicit StateSpace(std::vector<std::string> labels);

  int size() const { return static_cast<int>(labels_.size()); }
  const std::string& label(int i) const { return labels_[static_cast<std::size_t>(i)]; }
  const std::vector<std::string>& labels() const { return labels_; }

  /// Index of a label, or -1 if absent.
  int index_of(std::string_view label) const;

  bool operator==(const StateSpace& other) const { return labels_ == other.labels_; }

 private:
  std::vector<std::string> labels_;
};

/// Undirected connected privacy graph over a StateSpace. Edges are stored as
/// deduplicated unordered pairs (i, j) with i < j; node adjacency is kept as
/// bitmasks, which caps the supported state count at 64 (plenty for the
/// exact-enumeration scales this library targets).
class Graph {
 public:
  /// Validates indices, rejects self-loops, dedups pairs, and checks
  /// connectivity. Throws IndexOutOfRange, SelfLoop, or DisconnectedGraph.
  static Graph build(StateSpace states, const std::vector<std::pair<int, int>>& edges);

  /// The complete graph on the given states.
  static Graph complete(StateSpace states);

  const StateSpace& states() const { return states_; }
  int size() const { return states_.size(); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  bool adjacent(int i, int j) const {
    return (adjacency_[static_cast<std::size_t>(i)] >> j) & 1ULL;
  }
  std::uint64_t neighbor_mask(int i) const { return adjacency_[static_cast<std::size_t>(i)]; }

 private:
  Graph(StateSpace states, std::vector<std::pair<int, int>> edges,
        std::vector<std::uint64_t> adjacency)
      : states_(std::move(states)), edges_(std::move(edges)), adjacency_(std::move(adjacency)) {}

  StateSpace states_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::uint64_t> adjacency_;
};

/// True when the subgraph induced by `members` is connected under the given
/// per-node adjacency masks (isolated empty sets count as connected).
bool mask_connected(const std::vector<std::uint64_t>& adjacency, std::uint64_t members);

}  // namespace gip

#endif  // GIP_STATE_SPACE_HPP
