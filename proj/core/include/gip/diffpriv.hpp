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

#ifndef GIP_DIFFPRIV_HPP
#define GIP_DIFFPRIV_HPP

#include <string>
#include <vector>

#include "gip/semichain.hpp"
#include "gip/state_space.hpp"

namespace gip {

/// Shape of a product state space: K dimensions with at least two values
/// each. States are the K-tuples in row-major order (first coordinate
/// slowest).
class DimensionSpec {
 public:
  explicit DimensionSpec(std::vector<int> sizes);

  int dimension_count() const { return static_cast<int>(sizes_.size()); }
  const std::vector<int>& sizes() const { return sizes_; }
  int state_count() const;

  std::vector<int> tuple_of(int index) const;
  int index_of(const std::vector<int>& tuple) const;
  /// Digit string like "01" when all sizes fit one digit, else
  /// comma-separated values.
  std::string label_of(int index) const;

 private:
  std::vector<int> sizes_;
};

/// Neighboring graph of differential privacy: an edge joins tuples that
/// differ in exactly one coordinate.
Graph differential_graph(const DimensionSpec& dims);

/// Longest possible semi-chain on the differential graph: K + 1 levels.
int max_level(const DimensionSpec& dims);

/// A strongly connected (K+1)-semi-chain, built recursively: duplicate the
/// K-level chain across the new coordinate and shift the copies whose new
/// coordinate differs from the anchor value up one level.
SemiChain construct_k_plus_1_chain(const DimensionSpec& dims);

/// The parity bipartition of the K-cube: level 1 holds the states with even
/// coordinate sum. It has no within-level edges and is the unique strongly
/// connected 2-semi-chain of the cube up to reversal.
SemiChain binary_two_chain(int k);

/// Assignment of the column set Y to the two levels of a 2-semi-chain.
/// Either side may be empty (the undivided patterns).
class DivisionPattern {
 public:
  DivisionPattern(std::vector<int> first, std::vector<int> second);

  const std::vector<int>& side(int level) const;
  bool divided() const { return !first_.empty() && !second_.empty(); }

  bool operator==(const DivisionPattern& other) const {
    return first_ == other.first_ && second_ == other.second_;
  }

 private:
  std::vector<int> first_;
  std::vector<int> second_;
};

/// The 2^{n2} division patterns of Y = {0, ..., n2-1} in the fixed code
/// order: the 2^{n2}-2 divided patterns ordered by the characteristic
/// bitmask of the first side (element y is bit y), then (Y, {}), then
/// ({}, Y).
std::vector<DivisionPattern> division_patterns(int n2);

/// Nondecreasing list of pattern codes (0-based indices into
/// division_patterns(n2)), one per [x]-equivalence class position.
struct DivisionSequence {
  int n2 = 0;
  std::vector<int> pattern_ids;

  bool operator==(const DivisionSequence& other) const {
    return n2 == other.n2 && pattern_ids == other.pattern_ids;
  }
  bool operator<(const DivisionSequence& other) const { return pattern_ids < other.pattern_ids; }
};

/// All increasing, strongly connected division sequences for the n1 x n2
/// grid, emitted in recursion order without duplicates:
///   category I   - every position divided, at least two distinct patterns;
///   category II  - a divided prefix covering Y on one level, padded with
///                  that level's undivided pattern;
///   category III - a divided prefix padded with n' copies of (Y, {}) and
///                  the rest ({}, Y).
std::vector<DivisionSequence> enumerate_division_sequences(int n1, int n2);

/// Materializes every distinct assignment of each sequence's patterns to the
/// n1 [x]-classes as a 2-semi-chain of differential_graph([n1, n2]). Distinct
/// sequences expand to disjoint chain sets; a collision throws InternalError.
std::vector<SemiChain> expand_sequences_to_chains(const std::vector<DivisionSequence>& sequences,
                                                  int n1);

}  // namespace gip

#endif  // GIP_DIFFPRIV_HPP
