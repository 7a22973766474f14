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

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "charshift/charvalue.hpp"
#include "charshift/errors.hpp"
#include "charshift/numtheory.hpp"

namespace charshift::ringchar {

// Largest modulus accepted; the period search enumerates divisors against a
// cached value table of this length.
inline constexpr std::int64_t kRingBound = 1'000'000;

// One CRT factor of a character of (Z/nZ)*: the character of the cyclic
// group (Z/p^m Z)* sending the fixed generator to omega_phi^index.
struct Component {
  std::int64_t prime = 0;
  int exponent = 0;
  std::int64_t modulus = 0;      // p^m
  std::int64_t group_order = 0;  // phi(p^m)
  std::int64_t generator = 0;    // smallest primitive root mod p^m
  std::int64_t index = 0;        // k in [0, group_order)
  std::vector<std::int32_t> dlog;  // discrete logs; -1 at non-units
};

namespace detail {

inline std::int64_t smallest_primitive_root(std::int64_t modulus,
                                            std::int64_t group_order) {
  const auto factors = numtheory::factorize(group_order).factors;
  for (std::int64_t g = 2; g < modulus; ++g) {
    if (std::gcd(g, modulus) != 1) continue;
    bool primitive = true;
    for (const auto& [t, e] : factors) {
      if (numtheory::mod_pow(g, group_order / t, modulus) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) return g;
  }
  throw std::logic_error("smallest_primitive_root: none found");
}

inline Component make_component(std::int64_t prime, int exponent,
                                std::int64_t index) {
  Component c;
  c.prime = prime;
  c.exponent = exponent;
  c.modulus = 1;
  for (int i = 0; i < exponent; ++i) c.modulus *= prime;
  c.group_order = (c.modulus / prime) * (prime - 1);
  if (index < 0 || index >= c.group_order)
    throw std::domain_error("RingChar: component index out of range");
  c.index = index;
  c.generator = smallest_primitive_root(c.modulus, c.group_order);
  c.dlog.assign(c.modulus, -1);
  std::int64_t pow = 1;
  for (std::int64_t t = 0; t < c.group_order; ++t) {
    c.dlog[pow] = static_cast<std::int32_t>(t);
    pow = numtheory::mod_mul(pow, c.generator, c.modulus);
  }
  return c;
}

}  // namespace detail

// Multiplicative character of Z/nZ for odd n >= 3, given as the CRT product
// of one cyclic-group character per prime-power factor, extended by zero on
// non-units. The full value table and the period are computed up front; the
// object is immutable afterwards.
class RingChar {
 public:
  static RingChar make(std::int64_t n,
                       std::span<const std::int64_t> component_indices) {
    return RingChar(n, component_indices);
  }

  // The quadratic (order <= 2) character in every component: k_i = phi_i/2.
  // For squarefree n this is exactly the Jacobi symbol.
  static RingChar quadratic(std::int64_t n) {
    std::vector<std::int64_t> idx;
    for (const auto& [p, e] : numtheory::factorize(n).factors) {
      std::int64_t pe = 1;
      for (int i = 0; i < e; ++i) pe *= p;
      idx.push_back((pe / p) * (p - 1) / 2);
    }
    return RingChar(n, idx);
  }

  std::int64_t modulus() const { return n_; }
  std::int64_t period() const { return period_; }
  const std::vector<Component>& components() const { return components_; }

  CharValue value(std::int64_t x) const {
    x %= n_;
    if (x < 0) x += n_;
    return values_[static_cast<std::size_t>(x)];
  }

  bool completely_nontrivial() const {
    for (const auto& c : components_)
      if (c.index == 0) return false;
    return true;
  }

  bool primitive() const { return completely_nontrivial() && period_ == n_; }

  // The primitive character of Z/period with the same values on
  // [0, period). Requires a completely nontrivial character.
  RingChar restrict_to_period() const {
    if (!completely_nontrivial())
      throw std::domain_error(
          "restrict_to_period: character has a trivial component");
    std::int64_t ell = 1;
    std::vector<std::int64_t> indices;
    for (const auto& c : components_) {
      // Conductor exponent: a = m - v_p(k).
      int v = 0;
      std::int64_t k = c.index;
      while (k % c.prime == 0) {
        k /= c.prime;
        ++v;
      }
      const int a = c.exponent - v;
      std::int64_t pa = 1;
      for (int i = 0; i < a; ++i) pa *= c.prime;
      const std::int64_t phi_a = (pa / c.prime) * (c.prime - 1);
      const std::int64_t g_a =
          detail::smallest_primitive_root(pa, phi_a);
      // chi_i(g_a) is a phi_a-th root of unity; its exponent in base
      // omega_{phi_a} is the new component index.
      const std::int64_t d = c.dlog[g_a % c.modulus];
      const std::int64_t e =
          numtheory::mod_mul(c.index, d, c.group_order);
      indices.push_back(e / (c.group_order / phi_a));
      ell *= pa;
    }
    if (ell != period_)
      throw std::logic_error("restrict_to_period: conductor != period");
    RingChar chi(ell, indices);
    for (std::int64_t x = 0; x < ell; ++x) {
      if (chi.value(x) != value(x))
        throw std::logic_error("restrict_to_period: value mismatch");
    }
    return chi;
  }

 private:
  RingChar(std::int64_t n, std::span<const std::int64_t> component_indices)
      : n_(n) {
    if (n < 3 || n % 2 == 0)
      throw std::domain_error("RingChar: modulus must be odd and >= 3");
    if (n > kRingBound)
      throw capacity_error("RingChar: modulus exceeds the bound 10^6");
    const auto factors = numtheory::factorize(n).factors;
    if (component_indices.size() != factors.size())
      throw std::domain_error("RingChar: component count mismatch");
    for (std::size_t i = 0; i < factors.size(); ++i)
      components_.push_back(detail::make_component(
          factors[i].first, factors[i].second, component_indices[i]));
    build_values();
    find_period();
  }

  void build_values() {
    values_.assign(static_cast<std::size_t>(n_), CharValue::zero());
    for (std::int64_t x = 0; x < n_; ++x) {
      CharValue v = CharValue::one();
      for (const auto& c : components_) {
        const std::int32_t d = c.dlog[x % c.modulus];
        if (d < 0) {
          v = CharValue::zero();
          break;
        }
        v = v * CharValue::root(numtheory::mod_mul(c.index, d, c.group_order),
                                c.group_order);
      }
      values_[static_cast<std::size_t>(x)] = v;
    }
  }

  void find_period() {
    // Smallest divisor d of n with chi(x + d) = chi(x) everywhere, zeros
    // included. d = n always passes.
    for (std::int64_t d : numtheory::divisors(n_)) {
      bool periodic = true;
      for (std::int64_t x = 0; x < n_ && periodic; ++x)
        periodic = values_[static_cast<std::size_t>((x + d) % n_)] ==
                   values_[static_cast<std::size_t>(x)];
      if (periodic) {
        period_ = d;
        return;
      }
    }
    period_ = n_;
  }

  std::int64_t n_;
  std::vector<Component> components_;
  std::vector<CharValue> values_;
  std::int64_t period_ = 0;
};

}  // namespace charshift::ringchar
