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
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "charshift/charvalue.hpp"
#include "charshift/errors.hpp"
#include "charshift/numtheory.hpp"

namespace charshift::finfield {

// Largest field order accepted for dense simulation.
inline constexpr std::int64_t kFieldBound = std::int64_t{1} << 16;

// Element of F_{p^r}, identified by its index form sum(c_j * p^j) where
// (c_0, ..., c_{r-1}) are the polynomial-basis coefficients. The index is
// what addresses amplitudes in the state-vector engine.
struct FieldElement {
  std::uint32_t index = 0;
  friend constexpr bool operator==(FieldElement, FieldElement) = default;
};

namespace detail {

// Dense polynomials over F_p, lowest degree first, no trailing zeros.
using Poly = std::vector<std::int64_t>;

inline Poly poly_trim(Poly a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

inline Poly poly_mod(Poly a, const Poly& m, std::int64_t p) {
  // m is monic.
  while (a.size() >= m.size()) {
    const std::int64_t c = a.back();
    if (c != 0) {
      const std::size_t shift = a.size() - m.size();
      for (std::size_t i = 0; i < m.size(); ++i) {
        a[shift + i] = (a[shift + i] - c * m[i]) % p;
        if (a[shift + i] < 0) a[shift + i] += p;
      }
    }
    a.pop_back();
  }
  return poly_trim(std::move(a));
}

inline Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m,
                        std::int64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  }
  return poly_mod(std::move(c), m, p);
}

inline Poly poly_powmod(Poly base, std::int64_t e, const Poly& m,
                        std::int64_t p) {
  Poly result{1};
  base = poly_mod(std::move(base), m, p);
  while (e > 0) {
    if (e & 1) result = poly_mulmod(result, base, m, p);
    e >>= 1;
    if (e > 0) base = poly_mulmod(base, base, m, p);
  }
  return result;
}

inline Poly poly_gcd(Poly a, Poly b, std::int64_t p) {
  while (!b.empty()) {
    // Make b monic, then reduce a modulo b.
    const std::int64_t inv = numtheory::mod_inverse(b.back(), p);
    for (auto& c : b) c = numtheory::mod_mul(c, inv, p);
    a = poly_mod(std::move(a), b, p);
    std::swap(a, b);
  }
  return a;
}

// x^(p^k) mod f via k successive p-th powers.
inline Poly frobenius_power(const Poly& f, std::int64_t p, int k) {
  Poly h{0, 1};  // x
  for (int i = 0; i < k; ++i) h = poly_powmod(std::move(h), p, f, p);
  return h;
}

// h - x, trimmed.
inline Poly poly_sub_x(Poly h, std::int64_t p) {
  if (h.size() < 2) h.resize(2, 0);
  h[1] = (h[1] - 1 + p) % p;
  return poly_trim(std::move(h));
}

// Irreducibility over F_p. Degrees up to 3 reduce to a root scan (a
// reducible quadratic or cubic has a linear factor); higher degrees use
// Rabin's test with x^(p^k) - x gcds.
inline bool poly_irreducible(const Poly& f, std::int64_t p) {
  const int r = static_cast<int>(f.size()) - 1;
  if (r == 1) return true;
  if (r <= 3) {
    for (std::int64_t x = 0; x < p; ++x) {
      std::int64_t v = 0;
      for (std::size_t i = f.size(); i-- > 0;) v = (v * x + f[i]) % p;
      if (v == 0) return false;
    }
    return true;
  }
  for (const auto& [t, e] : numtheory::factorize(r).factors) {
    const Poly h = poly_sub_x(frobenius_power(f, p, r / static_cast<int>(t)), p);
    if (poly_gcd(f, h, p).size() > 1) return false;
  }
  return poly_sub_x(frobenius_power(f, p, r), p).empty();
}

}  // namespace detail

// Immutable description of a concrete finite field F_{p^r}: modulus
// polynomial, fixed generator of the unit group and the baby-step table
// used for discrete logs. All of it is built in the constructor; the
// context is safe to share across threads afterwards.
class FieldCtx {
 public:
  // Deterministic construction: the modulus is the lexicographically
  // smallest monic irreducible of degree r (coefficients compared from the
  // constant term up), the generator is the unit of smallest index form
  // with multiplicative order q-1.
  static std::shared_ptr<const FieldCtx> make(std::int64_t p, int r) {
    return std::shared_ptr<const FieldCtx>(new FieldCtx(p, r));
  }

  std::int64_t p() const { return p_; }
  int r() const { return r_; }
  std::int64_t q() const { return q_; }
  const std::vector<std::int64_t>& modulus() const { return modulus_; }
  FieldElement generator() const { return generator_; }
  FieldElement zero() const { return {0}; }
  FieldElement one() const { return element(1); }

  FieldElement element(std::int64_t index) const {
    if (index < 0 || index >= q_)
      throw std::domain_error("FieldCtx: element index out of range");
    return {static_cast<std::uint32_t>(index)};
  }

  std::vector<std::int64_t> coeffs(FieldElement a) const {
    std::vector<std::int64_t> c(r_, 0);
    std::int64_t v = a.index;
    for (int i = 0; i < r_; ++i) {
      c[i] = v % p_;
      v /= p_;
    }
    return c;
  }

  FieldElement from_coeffs(std::span<const std::int64_t> c) const {
    std::int64_t idx = 0;
    for (std::size_t i = std::min<std::size_t>(c.size(), r_); i-- > 0;) {
      std::int64_t v = c[i] % p_;
      if (v < 0) v += p_;
      idx = idx * p_ + v;
    }
    return {static_cast<std::uint32_t>(idx)};
  }

  FieldElement add(FieldElement a, FieldElement b) const {
    std::int64_t idx = 0, mul = 1, va = a.index, vb = b.index;
    for (int i = 0; i < r_; ++i) {
      idx += ((va + vb) % p_) * mul;
      va /= p_;
      vb /= p_;
      mul *= p_;
    }
    return {static_cast<std::uint32_t>(idx)};
  }

  FieldElement neg(FieldElement a) const {
    std::int64_t idx = 0, mul = 1, va = a.index;
    for (int i = 0; i < r_; ++i) {
      idx += ((p_ - va % p_) % p_) * mul;
      va /= p_;
      mul *= p_;
    }
    return {static_cast<std::uint32_t>(idx)};
  }

  FieldElement sub(FieldElement a, FieldElement b) const {
    return add(a, neg(b));
  }

  FieldElement mul(FieldElement a, FieldElement b) const {
    // Schoolbook product on stack buffers (r <= 16), reduced by the monic
    // modulus from the top down.
    std::int64_t da[16], db[16], c[31] = {0};
    std::int64_t va = a.index, vb = b.index;
    for (int i = 0; i < r_; ++i) {
      da[i] = va % p_;
      va /= p_;
      db[i] = vb % p_;
      vb /= p_;
    }
    for (int i = 0; i < r_; ++i) {
      if (da[i] == 0) continue;
      for (int j = 0; j < r_; ++j)
        c[i + j] = (c[i + j] + da[i] * db[j]) % p_;
    }
    for (int deg = 2 * r_ - 2; deg >= r_; --deg) {
      const std::int64_t coef = c[deg];
      if (coef == 0) continue;
      const int shift = deg - r_;
      for (int j = 0; j < r_; ++j) {
        c[shift + j] = (c[shift + j] - coef * modulus_[j]) % p_;
        if (c[shift + j] < 0) c[shift + j] += p_;
      }
      c[deg] = 0;
    }
    std::int64_t idx = 0;
    for (int i = r_ - 1; i >= 0; --i) idx = idx * p_ + c[i];
    return {static_cast<std::uint32_t>(idx)};
  }

  FieldElement pow(FieldElement a, std::int64_t e) const {
    if (e < 0) throw std::domain_error("FieldCtx::pow: negative exponent");
    FieldElement result = one();
    while (e > 0) {
      if (e & 1) result = mul(result, a);
      e >>= 1;
      if (e > 0) a = mul(a, a);
    }
    return result;
  }

  FieldElement inv(FieldElement a) const {
    if (a.index == 0) throw std::domain_error("FieldCtx::inv: zero element");
    return pow(a, q_ - 2);
  }

  // Tr(a) = sum of a^(p^j), j in [0, r); lands in the prime subfield.
  // Evaluated through the precomputed basis traces: Tr is F_p-linear, so
  // Tr(a) = sum_i a_i * Tr(alpha^i).
  std::int64_t trace(FieldElement a) const {
    std::int64_t t = 0, v = a.index;
    for (int i = 0; i < r_; ++i) {
      t += (v % p_) * basis_traces_[static_cast<std::size_t>(i)];
      v /= p_;
    }
    return t % p_;
  }

  // Discrete log base the fixed generator, by baby-step giant-step over
  // the table built at construction.
  std::int64_t dlog(FieldElement a) const {
    if (a.index == 0)
      throw std::domain_error("FieldCtx::dlog: zero has no discrete log");
    FieldElement cur = a;
    for (std::int64_t i = 0; i * baby_count_ < q_ - 1 + baby_count_; ++i) {
      const auto it = baby_table_.find(cur.index);
      if (it != baby_table_.end()) {
        const std::int64_t l = (i * baby_count_ + it->second) % (q_ - 1);
        return l;
      }
      cur = mul(cur, giant_step_);
    }
    throw std::logic_error("FieldCtx::dlog: table lookup failed");
  }

 private:
  FieldCtx(std::int64_t p, int r) : p_(p), r_(r) {
    if (r < 1) throw std::domain_error("FieldCtx: degree must be >= 1");
    if (!numtheory::is_prime(p))
      throw std::domain_error("FieldCtx: p must be prime");
    q_ = 1;
    for (int i = 0; i < r; ++i) {
      q_ *= p;
      if (q_ > kFieldBound)
        throw capacity_error("FieldCtx: p^r exceeds the bound 2^16");
    }
    find_modulus();
    build_basis_traces();
    find_generator();
    build_baby_table();
  }

  detail::Poly to_poly(FieldElement a) const {
    detail::Poly c;
    std::int64_t v = a.index;
    while (v > 0) {
      c.push_back(v % p_);
      v /= p_;
    }
    return c;
  }

  FieldElement from_poly(const detail::Poly& c) const {
    std::int64_t idx = 0;
    for (std::size_t i = c.size(); i-- > 0;) idx = idx * p_ + c[i];
    return {static_cast<std::uint32_t>(idx)};
  }

  void find_modulus() {
    // Enumerate monic degree-r polynomials by ascending low-first
    // coefficient tuple (c_0, c_1, ..., c_{r-1}).
    std::vector<std::int64_t> c(r_, 0);
    while (true) {
      detail::Poly f(c.begin(), c.end());
      f.push_back(1);
      if (detail::poly_irreducible(f, p_)) {
        modulus_ = std::move(f);
        return;
      }
      int i = r_ - 1;
      while (i >= 0 && c[i] == p_ - 1) c[i--] = 0;
      if (i < 0) break;
      ++c[i];
    }
    throw std::logic_error("FieldCtx: no irreducible polynomial found");
  }

  // Tr(alpha^i) for the power basis, each from the Frobenius power sum.
  void build_basis_traces() {
    basis_traces_.resize(static_cast<std::size_t>(r_));
    std::int64_t pw = 1;  // index form of alpha^i
    for (int i = 0; i < r_; ++i) {
      const FieldElement e{static_cast<std::uint32_t>(pw)};
      FieldElement frob = e;
      FieldElement acc = e;
      for (int j = 1; j < r_; ++j) {
        frob = pow(frob, p_);
        acc = add(acc, frob);
      }
      basis_traces_[static_cast<std::size_t>(i)] = acc.index % p_;
      if (i + 1 < r_) {
        const FieldElement next = mul(e, element_alpha());
        pw = next.index;
      }
    }
  }

  FieldElement element_alpha() const {
    // The class of X; for r = 1 the basis is just {1}.
    return {static_cast<std::uint32_t>(r_ > 1 ? p_ : 1)};
  }

  void find_generator() {
    if (q_ == 2) {
      generator_ = one();
      return;
    }
    const auto factors = numtheory::factorize(q_ - 1).factors;
    for (std::int64_t idx = 1; idx < q_; ++idx) {
      const FieldElement g{static_cast<std::uint32_t>(idx)};
      bool full_order = true;
      for (const auto& [t, e] : factors) {
        if (pow(g, (q_ - 1) / t).index == 1) {
          full_order = false;
          break;
        }
      }
      if (full_order) {
        generator_ = g;
        return;
      }
    }
    throw std::logic_error("FieldCtx: no generator found");
  }

  void build_baby_table() {
    baby_count_ = 1;
    while (baby_count_ * baby_count_ < q_ - 1) ++baby_count_;
    FieldElement cur = one();
    for (std::int64_t j = 0; j < baby_count_; ++j) {
      baby_table_.emplace(cur.index, j);
      cur = mul(cur, generator_);
    }
    giant_step_ = pow(generator_, q_ - 1 - baby_count_);  // g^(-baby_count)
  }

  std::int64_t p_;
  int r_;
  std::int64_t q_;
  std::vector<std::int64_t> modulus_;
  FieldElement generator_;
  std::vector<std::int64_t> basis_traces_;
  std::int64_t baby_count_ = 0;
  std::unordered_map<std::uint32_t, std::int64_t> baby_table_;
  FieldElement giant_step_;
};

using FieldCtxPtr = std::shared_ptr<const FieldCtx>;

inline FieldCtxPtr field_make(std::int64_t p, int r) {
  return FieldCtx::make(p, r);
}

// Additive character psi_y(x) = omega_p^Tr(x*y).
inline CharValue additive_char_value(const FieldCtx& ctx, FieldElement y,
                                     FieldElement x) {
  return CharValue::root(ctx.trace(ctx.mul(x, y)), ctx.p());
}

// Multiplicative character of F_q with index k: maps g^l to
// omega_{q-1}^{k*l} and 0 to 0. k = 0 is the trivial character.
class MultCharFF {
 public:
  MultCharFF(FieldCtxPtr ctx, std::int64_t k) : ctx_(std::move(ctx)), k_(k) {
    if (k_ < 0 || k_ >= ctx_->q() - 1)
      throw std::domain_error("MultCharFF: index out of range");
  }

  const FieldCtx& field() const { return *ctx_; }
  const FieldCtxPtr& field_ptr() const { return ctx_; }
  std::int64_t index() const { return k_; }
  bool trivial() const { return k_ == 0; }

  CharValue value(FieldElement a) const {
    if (a.index == 0) return CharValue::zero();
    return CharValue::root(
        numtheory::mod_mul(k_, ctx_->dlog(a), ctx_->q() - 1), ctx_->q() - 1);
  }

 private:
  FieldCtxPtr ctx_;
  std::int64_t k_;
};

}  // namespace charshift::finfield
