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

#ifndef GIP_LINALG_HPP
#define GIP_LINALG_HPP

#include <optional>
#include <vector>

#include "gip/rational.hpp"

namespace gip {

/// Exact solve of the square system A x = b by Gaussian elimination.
/// Returns nullopt when A is singular.
std::optional<std::vector<Rational>> solve_linear_system(std::vector<std::vector<Rational>> a,
                                                         std::vector<Rational> b);

/// One nonzero kernel vector of the (rows x cols) matrix A, or an empty
/// vector when A has full column rank.
std::vector<Rational> kernel_vector(std::vector<std::vector<Rational>> a);

}  // namespace gip

#endif  // GIP_LINALG_HPP
