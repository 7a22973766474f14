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

#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <memory>
#include <numbers>
#include <span>
#include <stdexcept>
#include <vector>

#include "charshift/charvalue.hpp"
#include "charshift/errors.hpp"
#include "charshift/finfield.hpp"
#include "charshift/numtheory.hpp"
#include "charshift/rng.hpp"

namespace charshift::qsim {

// Dense-vector capacity. Cyclic groups get extra headroom because the
// repeated-state Fourier sampling works over lengths well beyond the
// field/product bound.
inline constexpr std::int64_t kCyclicBound = std::int64_t{1} << 18;
inline constexpr std::int64_t kProductBound = std::int64_t{1} << 16;

// Amplitudes at least this large count as support; unitary rounding dust
// stays many orders of magnitude below it.
inline constexpr double kSupportTol = 1e-9;

namespace detail {

using CVec = std::vector<std::complex<double>>;

// In-place radix-2 FFT, n a power of two. sign=+1 computes
// X_k = sum_x a_x exp(+2*pi*i*x*k/n); no normalization.
inline void fft_pow2(CVec& a, int sign) {
  const std::size_t n = a.size();
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double ang =
        sign * 2.0 * std::numbers::pi / static_cast<double>(len);
    const std::complex<double> wlen(std::cos(ang), std::sin(ang));
    for (std::size_t i = 0; i < n; i += len) {
      std::complex<double> w(1.0, 0.0);
      for (std::size_t j = 0; j < len / 2; ++j) {
        // Resync the twiddle periodically to stop error accumulation.
        if ((j & 63u) == 0 && j != 0)
          w = std::polar(1.0, ang * static_cast<double>(j));
        const auto u = a[i + j];
        const auto v = a[i + j + len / 2] * w;
        a[i + j] = u + v;
        a[i + j + len / 2] = u - v;
        w *= wlen;
      }
    }
  }
}

// X_k = sum_x v_x exp(sign*2*pi*i*x*k/n) for arbitrary n: radix-2 when n is
// a power of two, Bluestein's chirp-z otherwise. No normalization.
inline CVec cyclic_dft_raw(const CVec& v, int sign) {
  const std::size_t n = v.size();
  if (n == 0) return {};
  if ((n & (n - 1)) == 0) {
    CVec a = v;
    fft_pow2(a, sign);
    return a;
  }
  // Bluestein: x*k = (x^2 + k^2 - (k-x)^2) / 2 turns the transform into a
  // linear convolution with the chirp exp(sign*pi*i*j^2/n).
  const auto chirp = [&](std::int64_t j) {
    const std::int64_t e = (j * j) % (2 * static_cast<std::int64_t>(n));
    return std::polar(1.0, sign * std::numbers::pi * static_cast<double>(e) /
                               static_cast<double>(n));
  };
  std::size_t L = 1;
  while (L < 2 * n - 1) L <<= 1;
  CVec b(L, {0.0, 0.0}), c(L, {0.0, 0.0});
  for (std::size_t x = 0; x < n; ++x)
    b[x] = v[x] * chirp(static_cast<std::int64_t>(x));
  for (std::size_t j = 0; j < n; ++j) {
    const auto w = std::conj(chirp(static_cast<std::int64_t>(j)));
    c[j] = w;
    if (j != 0) c[L - j] = w;
  }
  fft_pow2(b, 1);
  fft_pow2(c, 1);
  for (std::size_t i = 0; i < L; ++i) b[i] *= c[i];
  fft_pow2(b, -1);
  CVec out(n);
  const double inv_l = 1.0 / static_cast<double>(L);
  for (std::size_t k = 0; k < n; ++k)
    out[k] = chirp(static_cast<std::int64_t>(k)) * b[k] * inv_l;
  return out;
}

// One forward pass of the positive-sign transform along every axis of a
// mixed-radix layout: index = x_0 + orders[0]*(x_1 + orders[1]*(...)).
// No normalization.
inline void product_dft_raw(CVec& v, std::span<const std::int64_t> orders) {
  std::int64_t stride = 1;
  for (const std::int64_t n : orders) {
    const std::int64_t dim = static_cast<std::int64_t>(v.size());
    const std::int64_t block = stride * n;
    CVec line(static_cast<std::size_t>(n));
    for (std::int64_t base = 0; base < dim; base += block) {
      for (std::int64_t off = 0; off < stride; ++off) {
        for (std::int64_t i = 0; i < n; ++i)
          line[static_cast<std::size_t>(i)] =
              v[static_cast<std::size_t>(base + off + i * stride)];
        CVec t = cyclic_dft_raw(line, 1);
        for (std::int64_t i = 0; i < n; ++i)
          v[static_cast<std::size_t>(base + off + i * stride)] =
              t[static_cast<std::size_t>(i)];
      }
    }
    stride = block;
  }
}

}  // namespace detail

// Indexed finite domain a state vector lives on: Z_n, the additive group of
// F_q (elements addressed by index form), or a product of cyclic groups
// (mixed-radix index, first order varies fastest).
class GroupSpec {
 public:
  enum class Kind { kCyclic, kFieldAdditive, kProduct };

  static GroupSpec cyclic(std::int64_t n) {
    if (n < 1) throw std::domain_error("GroupSpec: cyclic order must be >= 1");
    if (n > kCyclicBound)
      throw capacity_error("GroupSpec: cyclic order exceeds 2^18");
    GroupSpec g;
    g.kind_ = Kind::kCyclic;
    g.dim_ = n;
    g.orders_ = {n};
    return g;
  }

  static GroupSpec field_additive(finfield::FieldCtxPtr ctx) {
    GroupSpec g;
    g.kind_ = Kind::kFieldAdditive;
    g.dim_ = ctx->q();
    g.field_ = std::move(ctx);
    return g;
  }

  static GroupSpec product(std::vector<std::int64_t> orders) {
    if (orders.empty())
      throw std::domain_error("GroupSpec: empty product");
    GroupSpec g;
    g.kind_ = Kind::kProduct;
    g.dim_ = 1;
    for (const std::int64_t n : orders) {
      if (n < 1) throw std::domain_error("GroupSpec: orders must be >= 1");
      g.dim_ *= n;
      if (g.dim_ > kProductBound)
        throw capacity_error("GroupSpec: product dimension exceeds 2^16");
    }
    g.orders_ = std::move(orders);
    return g;
  }

  Kind kind() const { return kind_; }
  std::int64_t dim() const { return dim_; }
  const std::vector<std::int64_t>& orders() const { return orders_; }
  const finfield::FieldCtx& field() const { return *field_; }
  const finfield::FieldCtxPtr& field_ptr() const { return field_; }

  std::int64_t add(std::int64_t a, std::int64_t b) const {
    switch (kind_) {
      case Kind::kCyclic:
        return (a + b) % dim_;
      case Kind::kFieldAdditive:
        return field_
            ->add({static_cast<std::uint32_t>(a)},
                  {static_cast<std::uint32_t>(b)})
            .index;
      case Kind::kProduct: {
        std::int64_t idx = 0, mul = 1;
        for (const std::int64_t n : orders_) {
          idx += ((a % n + b % n) % n) * mul;
          a /= n;
          b /= n;
          mul *= n;
        }
        return idx;
      }
    }
    return 0;
  }

  std::int64_t negate(std::int64_t a) const {
    switch (kind_) {
      case Kind::kCyclic:
        return (dim_ - a % dim_) % dim_;
      case Kind::kFieldAdditive:
        return field_->neg({static_cast<std::uint32_t>(a)}).index;
      case Kind::kProduct: {
        std::int64_t idx = 0, mul = 1;
        for (const std::int64_t n : orders_) {
          idx += ((n - a % n) % n) * mul;
          a /= n;
          mul *= n;
        }
        return idx;
      }
    }
    return 0;
  }

  // Smallest L such that every pairing value is an L-th root of unity.
  std::int64_t pairing_order() const {
    switch (kind_) {
      case Kind::kCyclic:
        return dim_;
      case Kind::kFieldAdditive:
        return field_->p();
      case Kind::kProduct: {
        std::int64_t l = 1;
        for (const std::int64_t n : orders_) l = std::lcm(l, n);
        return l;
      }
    }
    return 1;
  }

  // Exponent e in [0, pairing_order()) with psi_y(x) = exp(2*pi*i*e/L).
  std::int64_t pairing_exponent(std::int64_t x, std::int64_t y) const {
    switch (kind_) {
      case Kind::kCyclic:
        return numtheory::mod_mul(x, y, dim_);
      case Kind::kFieldAdditive:
        return field_->trace(
            field_->mul({static_cast<std::uint32_t>(x)},
                        {static_cast<std::uint32_t>(y)}));
      case Kind::kProduct: {
        const std::int64_t l = pairing_order();
        std::int64_t e = 0;
        for (const std::int64_t n : orders_) {
          e = (e + numtheory::mod_mul(x % n, y % n, n) * (l / n)) % l;
          x /= n;
          y /= n;
        }
        return e;
      }
    }
    return 0;
  }

  // psi_y(x), the character of the group indexed by y evaluated at x.
  CharValue pairing(std::int64_t x, std::int64_t y) const {
    switch (kind_) {
      case Kind::kCyclic:
        return CharValue::root(numtheory::mod_mul(x, y, dim_), dim_);
      case Kind::kFieldAdditive:
        return finfield::additive_char_value(
            *field_, {static_cast<std::uint32_t>(y)},
            {static_cast<std::uint32_t>(x)});
      case Kind::kProduct: {
        CharValue v = CharValue::one();
        for (const std::int64_t n : orders_) {
          v = v * CharValue::root(numtheory::mod_mul(x % n, y % n, n), n);
          x /= n;
          y /= n;
        }
        return v;
      }
    }
    return CharValue::one();
  }

  friend bool operator==(const GroupSpec& a, const GroupSpec& b) {
    return a.kind_ == b.kind_ && a.dim_ == b.dim_ && a.orders_ == b.orders_ &&
           a.field_ == b.field_;
  }

 private:
  GroupSpec() = default;
  Kind kind_ = Kind::kCyclic;
  std::int64_t dim_ = 1;
  std::vector<std::int64_t> orders_;
  finfield::FieldCtxPtr field_;
};

// Unitary transform of a raw coefficient vector over the group's character
// pairing: out[y] = (1/sqrt(dim)) * sum_x psi_y(x) v[x]. This is the matrix
// the engine applies to states; it is exposed at vector level because
// spectra of non-normalized functions (character tables, Gauss sums) are
// needed too.
inline detail::CVec unitary_dft(const GroupSpec& group,
                                std::span<const std::complex<double>> v) {
  if (static_cast<std::int64_t>(v.size()) != group.dim())
    throw std::domain_error("unitary_dft: vector/group size mismatch");
  detail::CVec a(v.begin(), v.end());
  const double scale = 1.0 / std::sqrt(static_cast<double>(group.dim()));
  switch (group.kind()) {
    case GroupSpec::Kind::kCyclic: {
      a = detail::cyclic_dft_raw(a, 1);
      break;
    }
    case GroupSpec::Kind::kProduct: {
      detail::product_dft_raw(a, group.orders());
      break;
    }
    case GroupSpec::Kind::kFieldAdditive: {
      const auto& F = group.field();
      const std::int64_t p = F.p();
      const int r = F.r();
      if (r == 1) {
        a = detail::cyclic_dft_raw(a, 1);
        break;
      }
      // Tr(x*y) = x . (T y) with T_ij = Tr(alpha^(i+j)), so the field
      // transform is the coordinatewise product transform followed by the
      // index permutation y -> T y.
      const std::vector<std::int64_t> orders(r, p);
      detail::product_dft_raw(a, orders);
      std::vector<std::vector<std::int64_t>> T(r,
                                               std::vector<std::int64_t>(r));
      finfield::FieldElement alpha_pow = F.one();
      std::vector<std::int64_t> tr_pow(2 * r - 1);
      const finfield::FieldElement alpha = F.element(p);  // the class of X
      for (int k = 0; k < 2 * r - 1; ++k) {
        tr_pow[k] = F.trace(alpha_pow);
        alpha_pow = F.mul(alpha_pow, alpha);
      }
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) T[i][j] = tr_pow[i + j];
      detail::CVec out(a.size());
      std::vector<std::int64_t> digits(r);
      for (std::int64_t y = 0; y < group.dim(); ++y) {
        std::int64_t t = y;
        for (int i = 0; i < r; ++i) {
          digits[i] = t % p;
          t /= p;
        }
        std::int64_t idx = 0;
        for (int i = r - 1; i >= 0; --i) {
          std::int64_t s = 0;
          for (int j = 0; j < r; ++j) s += T[i][j] * digits[j];
          idx = idx * p + s % p;
        }
        out[static_cast<std::size_t>(y)] = a[static_cast<std::size_t>(idx)];
      }
      a = std::move(out);
      break;
    }
  }
  for (auto& z : a) z *= scale;
  return a;
}

// Inverse transform via conjugation: the kernel is symmetric, so
// F^-1 v = conj(F conj(v)).
inline detail::CVec unitary_dft_inverse(
    const GroupSpec& group, std::span<const std::complex<double>> v) {
  detail::CVec a(v.begin(), v.end());
  for (auto& z : a) z = std::conj(z);
  a = unitary_dft(group, a);
  for (auto& z : a) z = std::conj(z);
  return a;
}

// Immutable unit-norm amplitude vector over an indexed group. Every
// constructor normalizes, keeping the norm-1 invariant tight at operation
// boundaries.
class QState {
 public:
  QState(GroupSpec group, std::vector<std::complex<double>> amplitudes)
      : group_(std::move(group)), amps_(std::move(amplitudes)) {
    if (static_cast<std::int64_t>(amps_.size()) != group_.dim())
      throw std::domain_error("QState: amplitude/group size mismatch");
    double norm2 = 0.0;
    for (const auto& z : amps_) norm2 += std::norm(z);
    if (norm2 < 1e-24)
      throw std::domain_error("QState: zero state cannot be normalized");
    const double inv = 1.0 / std::sqrt(norm2);
    for (auto& z : amps_) z *= inv;
  }

  const GroupSpec& group() const { return group_; }
  const std::vector<std::complex<double>>& amplitudes() const { return amps_; }

 private:
  GroupSpec group_;
  std::vector<std::complex<double>> amps_;
};

// Post-selected preparation outcome: the success branch of the two-query
// superposition routine plus its exact success probability
// |support| / dim. The branch is always returned; callers fold the
// probability into their own success accounting.
struct PrepOutcome {
  QState state;
  numtheory::Fraction success_probability;
};

// Prepare amplitudes proportional to f over the group, where every f value
// is zero or of unit magnitude.
inline PrepOutcome amplitude_encode(
    const GroupSpec& group,
    const std::function<std::complex<double>(std::int64_t)>& f) {
  std::vector<std::complex<double>> amps(
      static_cast<std::size_t>(group.dim()));
  std::int64_t support = 0;
  for (std::int64_t x = 0; x < group.dim(); ++x) {
    const std::complex<double> v = f(x);
    const double mag = std::abs(v);
    if (mag > kSupportTol) {
      if (std::abs(mag - 1.0) > 1e-9)
        throw std::domain_error(
            "amplitude_encode: function values must have magnitude 0 or 1");
      ++support;
    }
    amps[static_cast<std::size_t>(x)] = v;
  }
  if (support == 0)
    throw std::domain_error("amplitude_encode: function is identically zero");
  return PrepOutcome{QState(group, std::move(amps)),
                     numtheory::Fraction(support, group.dim())};
}

inline QState dft(const QState& state) {
  return QState(state.group(), unitary_dft(state.group(), state.amplitudes()));
}

inline QState dft_inverse(const QState& state) {
  return QState(state.group(),
                unitary_dft_inverse(state.group(), state.amplitudes()));
}

// Multiply amplitude x by u(x); u must be unit-magnitude wherever the state
// has support.
inline QState phase_multiply(
    const QState& state,
    const std::function<std::complex<double>(std::int64_t)>& u) {
  std::vector<std::complex<double>> amps = state.amplitudes();
  for (std::int64_t x = 0; x < state.group().dim(); ++x) {
    auto& a = amps[static_cast<std::size_t>(x)];
    if (std::abs(a) <= kSupportTol) continue;
    const std::complex<double> w = u(x);
    if (std::abs(std::abs(w) - 1.0) > 1e-9)
      throw std::domain_error(
          "phase_multiply: |u| must be 1 on the state's support");
    a *= w;
  }
  return QState(state.group(), std::move(amps));
}

inline std::vector<double> exact_distribution(const QState& state) {
  std::vector<double> probs(state.amplitudes().size());
  for (std::size_t i = 0; i < probs.size(); ++i)
    probs[i] = std::norm(state.amplitudes()[i]);
  return probs;
}

// Draw one index from the exact distribution by inverse CDF over the
// deterministic stream.
inline std::int64_t measure_sample(const QState& state, SplitMix64& rng) {
  const double u = rng.next_double();
  double cum = 0.0;
  const auto& amps = state.amplitudes();
  for (std::size_t i = 0; i < amps.size(); ++i) {
    cum += std::norm(amps[i]);
    if (u < cum) return static_cast<std::int64_t>(i);
  }
  return static_cast<std::int64_t>(amps.size()) - 1;
}

}  // namespace charshift::qsim
