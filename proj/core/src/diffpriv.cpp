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

#include "gip/diffpriv.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "gip/errors.hpp"

namespace gip {

DimensionSpec::DimensionSpec(std::vector<int> sizes) : sizes_(std::move(sizes)) {
  if (sizes_.empty()) throw InvalidArgument("a dimension spec needs at least one dimension");
  for (int s : sizes_) {
    if (s < 2) throw InvalidArgument("every dimension needs at least two values");
  }
}

int DimensionSpec::state_count() const {
  long long count = 1;
  for (int s : sizes_) {
    count *= s;
    if (count > 1'000'000) throw InstanceTooLarge("product state space too large");
  }
  return static_cast<int>(count);
}

std::vector<int> DimensionSpec::tuple_of(int index) const {
  std::vector<int> tuple(sizes_.size(), 0);
  for (int k = dimension_count() - 1; k >= 0; --k) {
    tuple[static_cast<std::size_t>(k)] = index % sizes_[static_cast<std::size_t>(k)];
    index /= sizes_[static_cast<std::size_t>(k)];
  }
  return tuple;
}

int DimensionSpec::index_of(const std::vector<int>& tuple) const {
  if (tuple.size() != sizes_.size()) throw InvalidArgument("tuple arity mismatch");
  int index = 0;
  for (std::size_t k = 0; k < sizes_.size(); ++k) {
    if (tuple[k] < 0 || tuple[k] >= sizes_[k]) throw IndexOutOfRange("tuple value out of range");
    index = index * sizes_[k] + tuple[k];
  }
  return index;
}

std::string DimensionSpec::label_of(int index) const {
  const bool compact =
      std::all_of(sizes_.begin(), sizes_.end(), [](int s) { return s <= 10; });
  std::string label;
  const auto tuple = tuple_of(index);
  for (std::size_t k = 0; k < tuple.size(); ++k) {
    if (!compact && k > 0) label += ',';
    label += std::to_string(tuple[k]);
  }
  return label;
}

Graph differential_graph(const DimensionSpec& dims) {
  const int j = dims.state_count();
  if (j < 2) throw InvalidArgument("product state space needs at least two states");

  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(j));
  for (int v = 0; v < j; ++v) labels.push_back(dims.label_of(v));

  std::vector<std::pair<int, int>> edges;
  for (int a = 0; a < j; ++a) {
    const auto ta = dims.tuple_of(a);
    for (int b = a + 1; b < j; ++b) {
      const auto tb = dims.tuple_of(b);
      int differing = 0;
      for (std::size_t k = 0; k < ta.size() && differing < 2; ++k) {
        if (ta[k] != tb[k]) ++differing;
      }
      if (differing == 1) edges.emplace_back(a, b);
    }
  }
  return Graph::build(StateSpace(std::move(labels)), edges);
}

int max_level(const DimensionSpec& dims) { return dims.dimension_count() + 1; }

SemiChain construct_k_plus_1_chain(const DimensionSpec& dims) {
  // Levels over the product of the first m dimensions, built by recursion on
  // m. The anchor value of each new coordinate is 0: the anchor copy keeps
  // its level, all other copies shift up by one.
  const auto& sizes = dims.sizes();
  std::vector<int> level_of(static_cast<std::size_t>(sizes[0]), 2);
  level_of[0] = 1;
  for (std::size_t m = 1; m < sizes.size(); ++m) {
    const int d = sizes[m];
    std::vector<int> next(level_of.size() * static_cast<std::size_t>(d), 0);
    for (std::size_t base = 0; base < level_of.size(); ++base) {
      for (int v = 0; v < d; ++v) {
        next[base * static_cast<std::size_t>(d) + static_cast<std::size_t>(v)] =
            level_of[base] + (v == 0 ? 0 : 1);
      }
    }
    level_of = std::move(next);
  }

  const int level_count = dims.dimension_count() + 1;
  std::vector<std::vector<int>> levels(static_cast<std::size_t>(level_count));
  for (std::size_t v = 0; v < level_of.size(); ++v) {
    levels[static_cast<std::size_t>(level_of[v] - 1)].push_back(static_cast<int>(v));
  }
  SemiChain chain(std::move(levels), static_cast<int>(level_of.size()));
  if (!is_strongly_connected(chain, differential_graph(dims))) {
    throw InternalError("constructed (K+1)-chain is not strongly connected");
  }
  return chain;
}

SemiChain binary_two_chain(int k) {
  if (k < 1) throw InvalidArgument("the cube dimension must be at least 1");
  if (k > 20) throw InstanceTooLarge("cube dimension too large");
  const int j = 1 << k;
  std::vector<int> even, odd;
  for (int v = 0; v < j; ++v) {
    (std::popcount(static_cast<unsigned>(v)) % 2 == 0 ? even : odd).push_back(v);
  }
  return SemiChain({even, odd}, j);
}

DivisionPattern::DivisionPattern(std::vector<int> first, std::vector<int> second)
    : first_(std::move(first)), second_(std::move(second)) {
  std::sort(first_.begin(), first_.end());
  std::sort(second_.begin(), second_.end());
  std::vector<int> both = first_;
  both.insert(both.end(), second_.begin(), second_.end());
  std::sort(both.begin(), both.end());
  for (std::size_t y = 0; y < both.size(); ++y) {
    if (both[y] != static_cast<int>(y)) {
      throw InvalidArgument("division pattern sides must partition Y");
    }
  }
}

const std::vector<int>& DivisionPattern::side(int level) const {
  if (level != 1 && level != 2) throw IndexOutOfRange("pattern level must be 1 or 2");
  return level == 1 ? first_ : second_;
}

std::vector<DivisionPattern> division_patterns(int n2) {
  if (n2 < 2) throw InvalidArgument("Y needs at least two elements");
  if (n2 > 16) throw InstanceTooLarge("too many division patterns");

  std::vector<DivisionPattern> patterns;
  patterns.reserve(1U << n2);
  std::vector<int> all(static_cast<std::size_t>(n2));
  for (int y = 0; y < n2; ++y) all[static_cast<std::size_t>(y)] = y;

  for (unsigned mask = 1; mask + 1 < (1U << n2); ++mask) {
    std::vector<int> first, second;
    for (int y = 0; y < n2; ++y) {
      ((mask >> y) & 1U ? first : second).push_back(y);
    }
    patterns.emplace_back(std::move(first), std::move(second));
  }
  patterns.emplace_back(all, std::vector<int>{});
  patterns.emplace_back(std::vector<int>{}, all);
  return patterns;
}

namespace {

struct SequenceEnumerator {
  int n1 = 0;
  int n2 = 0;
  unsigned full = 0;
  int divided_count = 0;  // 2^{n2} - 2
  std::vector<DivisionSequence> out;
  std::vector<int> prefix;

  void emit_with_padding(int undivided_id, int count) {
    DivisionSequence seq{n2, prefix};
    seq.pattern_ids.insert(seq.pattern_ids.end(), static_cast<std::size_t>(count), undivided_id);
    out.push_back(std::move(seq));
  }

  // union1/union2: columns already reachable on level 1 / level 2 via the
  // divided prefix.
  void recurse(int z, int t_min, unsigned union1, unsigned union2) {
    for (int t = t_min; t < divided_count; ++t) {
      const unsigned first_mask = static_cast<unsigned>(t) + 1U;
      const unsigned u1 = union1 | first_mask;
      const unsigned u2 = union2 | (~first_mask & full);
      prefix.push_back(t);

      // Category I: every class divided, at least two distinct patterns.
      if (z == n1 &&
          !std::all_of(prefix.begin(), prefix.end(), [&](int id) { return id == prefix[0]; })) {
        out.push_back(DivisionSequence{n2, prefix});
      }

      // Category II: pad with classes placed wholly on one level. Such a
      // class is wired to the rest only through the opposite level, so the
      // divided prefix must reach every column there.
      if (z < n1) {
        if (u2 == full) emit_with_padding(divided_count, n1 - z);      // (Y, {}) padding
        if (u1 == full) emit_with_padding(divided_count + 1, n1 - z);  // ({}, Y) padding
      }

      // Category III: undivided classes on both levels; any divided prefix
      // works.
      if (z <= n1 - 2) {
        for (int np = 1; np <= n1 - z - 1; ++np) {
          DivisionSequence seq{n2, prefix};
          seq.pattern_ids.insert(seq.pattern_ids.end(), static_cast<std::size_t>(np),
                                 divided_count);
          seq.pattern_ids.insert(seq.pattern_ids.end(), static_cast<std::size_t>(n1 - np - z),
                                 divided_count + 1);
          out.push_back(std::move(seq));
        }
      }

      if (z < n1) recurse(z + 1, t, u1, u2);
      prefix.pop_back();
    }
  }
};

}  // namespace

std::vector<DivisionSequence> enumerate_division_sequences(int n1, int n2) {
  if (n1 < 2 || n2 < 2) throw InvalidArgument("the grid needs n1, n2 >= 2");
  if (n2 > 16) throw InstanceTooLarge("too many division patterns");

  SequenceEnumerator enumerator;
  enumerator.n1 = n1;
  enumerator.n2 = n2;
  enumerator.full = (1U << n2) - 1U;
  enumerator.divided_count = (1 << n2) - 2;
  enumerator.recurse(1, 0, 0U, 0U);
  return std::move(enumerator.out);
}

std::vector<SemiChain> expand_sequences_to_chains(const std::vector<DivisionSequence>& sequences,
                                                  int n1) {
  std::set<SemiChain> chains;
  std::size_t expected = 0;
  for (const DivisionSequence& seq : sequences) {
    if (static_cast<int>(seq.pattern_ids.size()) != n1) {
      throw LengthMismatch("sequence length does not match the class count");
    }
    const auto patterns = division_patterns(seq.n2);
    const int j = n1 * seq.n2;

    std::vector<int> ids = seq.pattern_ids;
    std::sort(ids.begin(), ids.end());
    do {
      std::vector<int> level1, level2;
      for (int x = 0; x < n1; ++x) {
        const DivisionPattern& pattern = patterns[static_cast<std::size_t>(ids[static_cast<std::size_t>(x)])];
        for (int y : pattern.side(1)) level1.push_back(x * seq.n2 + y);
        for (int y : pattern.side(2)) level2.push_back(x * seq.n2 + y);
      }
      chains.emplace(std::vector<std::vector<int>>{level1, level2}, j);
      ++expected;
    } while (std::next_permutation(ids.begin(), ids.end()));
  }
  if (chains.size() != expected) {
    throw InternalError("distinct division sequences expanded to overlapping chains");
  }
  return {chains.begin(), chains.end()};
}

}  // namespace gip
