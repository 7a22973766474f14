// Copyright 2026 The Charshift Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <complex>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace charshift {

// Value of a multiplicative or additive character: either exactly zero or
// exactly the root of unity exp(2*pi*i * num/den). Kept in exact rational
// form so algebraic identities (multiplicativity, conjugation, orthogonality
// bookkeeping) can be tested without floating-point slack; conversion to
// complex<double> happens only at the simulator boundary.
class CharValue {
 public:
  constexpr CharValue() = default;  // zero

  static constexpr CharValue zero() { return CharValue(); }
  static constexpr CharValue one() { return root(0, 1); }
  static constexpr CharValue minus_one() { return root(1, 2); }

  // exp(2*pi*i * num/den); den >= 1, num is reduced into [0, den).
  static constexpr CharValue root(std::int64_t num, std::int64_t den) {
    if (den < 1) throw std::domain_error("CharValue: denominator must be >= 1");
    num %= den;
    if (num < 0) num += den;
    const std::int64_t g = std::gcd(num, den);
    CharValue v;
    v.num_ = num / (g == 0 ? 1 : g);
    v.den_ = den / (g == 0 ? 1 : g);
    return v;
  }

  constexpr bool is_zero() const { return den_ == 0; }
  constexpr std::int64_t num() const { return num_; }
  constexpr std::int64_t den() const { return den_; }

  constexpr CharValue operator*(const CharValue& o) const {
    if (is_zero() || o.is_zero()) return zero();
    const std::int64_t l = std::lcm(den_, o.den_);
    return root(num_ * (l / den_) + o.num_ * (l / o.den_), l);
  }

  constexpr CharValue conjugated() const {
    if (is_zero()) return zero();
    return root(den_ - num_, den_);
  }

  std::complex<double> to_complex() const {
    if (is_zero()) return {0.0, 0.0};
    if (num_ == 0) return {1.0, 0.0};
    if (2 * num_ == den_) return {-1.0, 0.0};
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(num_) /
                         static_cast<double>(den_);
    return {std::cos(angle), std::sin(angle)};
  }

  friend constexpr bool operator==(const CharValue&, const CharValue&) =
      default;

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 0;  // 0 encodes the zero value
};

}  // namespace charshift
