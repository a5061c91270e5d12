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

#include "gip/rational.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "gip/errors.hpp"

namespace gip {

namespace {

Int parse_int(std::string_view text) {
  if (text.empty()) throw InvalidArgument("empty integer literal");
  const bool negative = text[0] == '-';
  std::size_t start = (text[0] == '+' || text[0] == '-') ? 1 : 0;
  if (start == text.size()) throw InvalidArgument("sign without digits");
  for (std::size_t i = start; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw InvalidArgument("malformed integer literal: '" + std::string(text) + "'");
    }
  }
  const Int magnitude{std::string(text.substr(start))};
  return negative ? -magnitude : magnitude;
}

}  // namespace

Int numerator(const Rational& r) { return boost::multiprecision::numerator(r); }

Int denominator(const Rational& r) { return boost::multiprecision::denominator(r); }

Rational parse_rational(std::string_view text) {
  // Trim surrounding whitespace.
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw InvalidArgument("empty rational literal");

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Int num = parse_int(text.substr(0, slash));
    Int den = parse_int(text.substr(slash + 1));
    if (den == 0) throw InvalidArgument("zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    if (frac.empty()) return Rational(parse_int(whole));
    bool negative = !whole.empty() && whole[0] == '-';
    Int whole_part = whole.empty() || whole == "-" || whole == "+" ? Int(0) : parse_int(whole);
    Int frac_part = parse_int(frac);
    Int scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    Rational magnitude = Rational(abs(whole_part)) + Rational(frac_part, scale);
    return negative ? -magnitude : magnitude;
  }
  return Rational(parse_int(text));
}

std::string to_string(const Rational& r) {
  std::ostringstream out;
  out << r;  // boost prints "p" or "p/q" in lowest terms
  return out.str();
}

std::string to_decimal_string(const Rational& r, int significant_digits) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.*g", significant_digits, r.convert_to<double>());
  return buffer;
}

Rational pow_rational(const Rational& base, long exp) {
  if (exp == 0) return Rational(1);
  if (base == 0 && exp < 0) throw DivideByZero("0 raised to a negative power");
  Rational b = exp > 0 ? base : Rational(1) / base;
  unsigned long n = exp > 0 ? static_cast<unsigned long>(exp) : static_cast<unsigned long>(-exp);
  Rational result(1);
  while (n > 0) {
    if (n & 1UL) result *= b;
    b *= b;
    n >>= 1UL;
  }
  return result;
}

Rational best_rational_approximation(double x, long max_den) {
  if (max_den < 1) throw InvalidArgument("max_den must be >= 1");
  if (!std::isfinite(x)) throw InvalidArgument("cannot approximate a non-finite value");
  bool negative = x < 0;
  double target = std::fabs(x);

  // Continued-fraction convergents p/q; stop before q exceeds max_den.
  long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  double remainder = target;
  for (int iter = 0; iter < 64; ++iter) {
    double integral = std::floor(remainder);
    if (integral > static_cast<double>(max_den)) break;
    long a = static_cast<long>(integral);
    long p2 = a * p1 + p0;
    long q2 = a * q1 + q0;
    if (q2 > max_den) {
      // Best semiconvergent still within the bound.
      long k = (max_den - q0) / q1;
      long ps = k * p1 + p0;
      long qs = k * q1 + q0;
      double err_conv = std::fabs(static_cast<double>(p1) / q1 - target);
      double err_semi = std::fabs(static_cast<double>(ps) / qs - target);
      long p = err_semi < err_conv ? ps : p1;
      long q = err_semi < err_conv ? qs : q1;
      return negative ? Rational(-p, q) : Rational(p, q);
    }
    p0 = p1; q0 = q1; p1 = p2; q1 = q2;
    double frac = remainder - integral;
    if (frac < 1e-15) break;
    remainder = 1.0 / frac;
  }
  return negative ? Rational(-p1, q1) : Rational(p1, q1);
}

Rational sum(const std::vector<Rational>& values) {
  Rational total(0);
  for (const auto& v : values) total += v;
  return total;
}

}  // namespace gip
