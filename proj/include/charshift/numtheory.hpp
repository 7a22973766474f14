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
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "charshift/errors.hpp"

namespace charshift::numtheory {

// Largest integer accepted by factorize(). Trial division only; this is a
// desk-scale library, not a big-number one.
inline constexpr std::int64_t kFactorBound = std::int64_t{1} << 40;

struct ExtendedGcd {
  std::int64_t g;  // gcd(a, b), nonnegative
  std::int64_t u;  // Bezout coefficient of a
  std::int64_t v;  // Bezout coefficient of b
};

// Returns (g, u, v) with u*a + v*b = g = gcd(a, b) >= 0.
inline ExtendedGcd extended_gcd(std::int64_t a, std::int64_t b) {
  if (a == 0 && b == 0)
    throw std::domain_error("extended_gcd: gcd(0, 0) is undefined");
  std::int64_t old_r = a, r = b;
  std::int64_t old_u = 1, u = 0;
  std::int64_t old_v = 0, v = 1;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    old_r = std::exchange(r, old_r - q * r);
    old_u = std::exchange(u, old_u - q * u);
    old_v = std::exchange(v, old_v - q * v);
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_u = -old_u;
    old_v = -old_v;
  }
  return {old_r, old_u, old_v};
}

// (a * b) mod m without overflow. m must be positive.
inline std::int64_t mod_mul(std::int64_t a, std::int64_t b, std::int64_t m) {
  a %= m;
  if (a < 0) a += m;
  b %= m;
  if (b < 0) b += m;
  return static_cast<std::int64_t>(
      static_cast<unsigned __int128>(a) * static_cast<unsigned __int128>(b) %
      static_cast<unsigned __int128>(m));
}

// base^exp mod m by square-and-multiply; at most 2*ceil(log2(exp+1))
// modular multiplications. m >= 2, exp >= 0.
inline std::int64_t mod_pow(std::int64_t base, std::int64_t exp,
                            std::int64_t m) {
  if (m < 2) throw std::domain_error("mod_pow: modulus must be >= 2");
  if (exp < 0) throw std::domain_error("mod_pow: negative exponent");
  base %= m;
  if (base < 0) base += m;
  std::int64_t result = 1;
  while (exp > 0) {
    if (exp & 1) result = mod_mul(result, base, m);
    exp >>= 1;
    if (exp > 0) base = mod_mul(base, base, m);
  }
  return result;
}

// Inverse of a modulo m (gcd(a, m) must be 1).
inline std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
  const auto [g, u, v] = extended_gcd(a, m);
  if (g != 1) throw std::domain_error("mod_inverse: arguments not coprime");
  std::int64_t r = u % m;
  if (r < 0) r += m;
  return r;
}

// Deterministic Miller-Rabin. The fixed witness set decides primality
// correctly for all n < 3.3e24, far beyond the factorization bound.
inline bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  std::int64_t d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  for (std::int64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::int64_t x = mod_pow(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < r; ++i) {
      x = mod_mul(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

// Prime decomposition n = p1^e1 * ... * pk^ek with p1 < p2 < ... .
struct Factorization {
  std::vector<std::pair<std::int64_t, int>> factors;

  std::int64_t value() const {
    std::int64_t n = 1;
    for (const auto& [p, e] : factors)
      for (int i = 0; i < e; ++i) n *= p;
    return n;
  }
};

// Trial division with a 2-3-5 wheel. n in [2, kFactorBound].
inline Factorization factorize(std::int64_t n) {
  if (n < 2) throw std::domain_error("factorize: n must be >= 2");
  if (n > kFactorBound)
    throw capacity_error("factorize: " + std::to_string(n) +
                         " exceeds the desk-scale bound 2^40");
  Factorization f;
  auto strip = [&](std::int64_t p) {
    if (n % p != 0) return;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    f.factors.emplace_back(p, e);
  };
  strip(2);
  strip(3);
  strip(5);
  static constexpr int kWheel[8] = {4, 2, 4, 2, 4, 6, 2, 6};
  std::int64_t p = 7;
  int w = 0;
  while (p * p <= n) {
    strip(p);
    p += kWheel[w];
    w = (w + 1) & 7;
  }
  if (n > 1) f.factors.emplace_back(n, 1);
  return f;
}

inline std::int64_t euler_phi(std::int64_t n) {
  if (n < 1) throw std::domain_error("euler_phi: n must be >= 1");
  if (n == 1) return 1;
  std::int64_t phi = 1;
  for (const auto& [p, e] : factorize(n).factors) {
    std::int64_t pe = 1;
    for (int i = 1; i < e; ++i) pe *= p;
    phi *= pe * (p - 1);
  }
  return phi;
}

// All positive divisors of n, ascending.
inline std::vector<std::int64_t> divisors(std::int64_t n) {
  if (n < 1) throw std::domain_error("divisors: n must be >= 1");
  std::vector<std::int64_t> d{1};
  if (n > 1) {
    for (const auto& [p, e] : factorize(n).factors) {
      const std::size_t base = d.size();
      std::int64_t pe = 1;
      for (int i = 0; i < e; ++i) {
        pe *= p;
        for (std::size_t j = 0; j < base; ++j) d.push_back(d[j] * pe);
      }
    }
  }
  std::sort(d.begin(), d.end());
  return d;
}

// Legendre symbol (x|p) in {-1, 0, +1} via the Euler criterion
// x^((p-1)/2) mod p. p must be an odd prime.
inline int legendre_symbol(std::int64_t x, std::int64_t p) {
  if (p < 3 || p % 2 == 0 || !is_prime(p))
    throw std::domain_error("legendre_symbol: p must be an odd prime");
  const std::int64_t e = mod_pow(x, (p - 1) / 2, p);
  if (e == 0) return 0;
  return e == 1 ? 1 : -1;
}

// Jacobi symbol (x|n) for odd n >= 3, by quadratic reciprocity. Never
// factors n; the product-of-Legendre form is kept as a test oracle.
inline int jacobi_symbol(std::int64_t x, std::int64_t n) {
  if (n < 3 || n % 2 == 0)
    throw std::domain_error("jacobi_symbol: n must be odd and >= 3");
  x %= n;
  if (x < 0) x += n;
  int result = 1;
  while (x != 0) {
    while (x % 2 == 0) {
      x /= 2;
      const std::int64_t m = n % 8;
      if (m == 3 || m == 5) result = -result;
    }
    std::swap(x, n);
    if (x % 4 == 3 && n % 4 == 3) result = -result;
    x %= n;
  }
  return n == 1 ? result : 0;
}

// Residues x mod p_i^{e_i}, one per factor, in canonical range.
inline std::vector<std::int64_t> crt_split(std::int64_t x,
                                           const Factorization& f) {
  std::vector<std::int64_t> residues;
  residues.reserve(f.factors.size());
  for (const auto& [p, e] : f.factors) {
    std::int64_t pe = 1;
    for (int i = 0; i < e; ++i) pe *= p;
    std::int64_t r = x % pe;
    if (r < 0) r += pe;
    residues.push_back(r);
  }
  return residues;
}

// Inverse of crt_split: the unique x in [0, n) with the given residues.
inline std::int64_t crt_join(std::span<const std::int64_t> residues,
                             const Factorization& f) {
  if (residues.size() != f.factors.size())
    throw std::domain_error("crt_join: residue count mismatch");
  const std::int64_t n = f.value();
  std::int64_t x = 0;
  for (std::size_t i = 0; i < residues.size(); ++i) {
    std::int64_t pe = 1;
    for (int j = 0; j < f.factors[i].second; ++j) pe *= f.factors[i].first;
    const std::int64_t m = n / pe;  // product of the other prime powers
    const std::int64_t inv = mod_inverse(m % pe, pe);
    x = (x + mod_mul(mod_mul(residues[i], inv, n), m, n)) % n;
  }
  return x;
}

// Fraction in lowest terms, nonnegative numerator, positive denominator.
struct Fraction {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Fraction() = default;
  Fraction(std::int64_t n, std::int64_t d) {
    if (d <= 0 || n < 0) throw std::domain_error("Fraction: requires n>=0, d>0");
    const std::int64_t g = std::gcd(n, d);
    num = n / g;
    den = d / g;
  }

  double to_double() const {
    return static_cast<double>(num) / static_cast<double>(den);
  }

  friend bool operator==(const Fraction&, const Fraction&) = default;
  friend bool operator<(const Fraction& a, const Fraction& b) {
    return static_cast<__int128>(a.num) * b.den <
           static_cast<__int128>(b.num) * a.den;
  }
};

namespace detail {
// |x/q - a/b| compared exactly: returns -1/0/+1 as the first error is
// smaller/equal/larger than the second.
inline int compare_errors(std::int64_t x, std::int64_t q, const Fraction& f1,
                          const Fraction& f2) {
  using I = __int128;
  auto abs128 = [](I v) { return v < 0 ? -v : v; };
  const I e1 = abs128(I{x} * f1.den - I{f1.num} * q) * f2.den;
  const I e2 = abs128(I{x} * f2.den - I{f2.num} * q) * f1.den;
  if (e1 < e2) return -1;
  if (e1 > e2) return 1;
  return 0;
}
}  // namespace detail

// Best rational approximation a/b to x/q with b <= max_den, computed from
// the continued-fraction convergents plus the final semiconvergent. Among
// the two candidates the error is compared exactly; ties go to the smaller
// denominator. Requires 0 <= x < q and max_den >= 1.
inline Fraction cf_best_approx(std::int64_t x, std::int64_t q,
                               std::int64_t max_den) {
  if (q < 1 || x < 0 || x >= q)
    throw std::domain_error("cf_best_approx: requires 0 <= x < q");
  if (max_den < 1) throw std::domain_error("cf_best_approx: max_den >= 1");
  if (x == 0) return Fraction(0, 1);

  // Convergents h/k of [0; a1, a2, ...] = x/q; (h2, k2) trails (h1, k1).
  std::int64_t h1 = 1, k1 = 0;  // virtual c_{-1} = 1/0
  std::int64_t h2 = 0, k2 = 1;  // virtual c_{-2} = 0/1
  std::int64_t num = x, den = q;
  while (true) {
    const std::int64_t a = num / den;
    const std::int64_t r = num % den;
    const std::int64_t h = a * h1 + h2;
    const std::int64_t k = a * k1 + k2;
    if (k > max_den) {
      // The best bounded approximation is the last convergent or the
      // deepest semiconvergent whose denominator still fits.
      const std::int64_t t = (max_den - k2) / k1;
      const Fraction prev(h1, k1);
      if (t < 1) return prev;
      const Fraction semi(t * h1 + h2, t * k1 + k2);
      const int cmp = detail::compare_errors(x, q, prev, semi);
      if (cmp < 0) return prev;
      if (cmp > 0) return semi;
      return prev.den <= semi.den ? prev : semi;
    }
    h2 = std::exchange(h1, h);
    k2 = std::exchange(k1, k);
    if (r == 0) return Fraction(h1, k1);  // x/q reached exactly
    num = den;
    den = r;
  }
}

}  // namespace charshift::numtheory
