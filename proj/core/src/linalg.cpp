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

#include "gip/linalg.hpp"

#include "gip/errors.hpp"

namespace gip {

std::optional<std::vector<Rational>> solve_linear_system(std::vector<std::vector<Rational>> a,
                                                         std::vector<Rational> b) {
  const std::size_t n = a.size();
  if (b.size() != n) throw InvalidArgument("system dimension mismatch");
  for (const auto& row : a) {
    if (row.size() != n) throw InvalidArgument("system matrix must be square");
  }

  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(a[pivot], a[col]);
    std::swap(b[pivot], b[col]);

    const Rational inv = Rational(1) / a[col][col];
    for (std::size_t k = col; k < n; ++k) a[col][k] *= inv;
    b[col] *= inv;
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || a[row][col] == 0) continue;
      const Rational factor = a[row][col];
      for (std::size_t k = col; k < n; ++k) a[row][k] -= factor * a[col][k];
      b[row] -= factor * b[col];
    }
  }
  return b;
}

std::vector<Rational> kernel_vector(std::vector<std::vector<Rational>> a) {
  if (a.empty()) return {};
  const std::size_t rows = a.size();
  const std::size_t cols = a[0].size();

  // Reduced row echelon form, tracking pivot columns.
  std::vector<std::size_t> pivot_col_of_row;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rank]);
    const Rational inv = Rational(1) / a[rank][col];
    for (std::size_t k = col; k < cols; ++k) a[rank][k] *= inv;
    for (std::size_t row = 0; row < rows; ++row) {
      if (row == rank || a[row][col] == 0) continue;
      const Rational factor = a[row][col];
      for (std::size_t k = col; k < cols; ++k) a[row][k] -= factor * a[rank][k];
    }
    pivot_col_of_row.push_back(col);
    ++rank;
  }

  // First free column yields a kernel vector.
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t col : pivot_col_of_row) is_pivot[col] = true;
  for (std::size_t free_col = 0; free_col < cols; ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<Rational> kernel(cols, Rational(0));
    kernel[free_col] = 1;
    for (std::size_t row = 0; row < rank; ++row) {
      kernel[pivot_col_of_row[row]] = -a[row][free_col];
    }
    return kernel;
  }
  return {};
}

}  // namespace gip
