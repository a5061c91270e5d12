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

#ifndef GIP_RATIONAL_HPP
#define GIP_RATIONAL_HPP

#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace gip {

using Int = boost::multiprecision::cpp_int;

// Exact rational carrier for probabilities and the budget parameter.
// cpp_rational keeps values in lowest terms with a positive denominator,
// which is exactly the invariant we need.
using Rational = boost::multiprecision::cpp_rational;

Int numerator(const Rational& r);
Int denominator(const Rational& r);

/// Parses "p/q", "p", or a plain decimal such as "0.25" into an exact value.
/// Throws InvalidArgument on malformed input or zero denominators.
Rational parse_rational(std::string_view text);

/// Canonical text form: "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rational& r);

/// Decimal rendering used by the CLI float mode.
std::string to_decimal_string(const Rational& r, int significant_digits = 12);

/// base^exp with integer (possibly negative) exponent; base must be nonzero
/// when exp < 0.
Rational pow_rational(const Rational& base, long exp);

/// Best rational approximation of x with denominator bounded by max_den,
/// computed by walking the continued-fraction convergents.
Rational best_rational_approximation(double x, long max_den);

/// Exact sum of a vector of rationals.
Rational sum(const std::vector<Rational>& values);

}  // namespace gip

#endif  // GIP_RATIONAL_HPP
