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
#include <optional>
#include <stdexcept>
#include <unordered_map>

#include "charshift/errors.hpp"
#include "charshift/finfield.hpp"
#include "charshift/numtheory.hpp"
#include "charshift/rng.hpp"
#include "charshift/shiftalgos.hpp"

namespace charshift::homocrypt {

// The attack simulates a p-dimensional state, so the prime is capped.
inline constexpr std::int64_t kMaxPrime = std::int64_t{1} << 13;

// Toy algebraically homomorphic cryptosystem realized as an opaque-handle
// oracle: ciphertexts are fresh meaningless identifiers, plaintexts live in
// a table behind this class. The public surface is exactly the homomorphic
// add, homomorphic multiply and the zero test, each call counted.
class HomoOracle {
 public:
  struct Handle {
    std::uint64_t id = 0;
  };

  struct Counters {
    std::uint64_t add_calls = 0;
    std::uint64_t mul_calls = 0;
    std::uint64_t zero_calls = 0;
    std::uint64_t peeks = 0;

    std::uint64_t total() const { return add_calls + mul_calls + zero_calls; }
  };

  HomoOracle(std::int64_t p, std::int64_t secret, std::uint64_t seed)
      : p_(p), idgen_(SplitMix64::stream(seed, 0x484f4d4f)) {
    if (p < 3 || p > kMaxPrime || !numtheory::is_prime(p))
      throw std::domain_error(
          "HomoOracle: p must be an odd prime at most 2^13");
    secret %= p_;
    if (secret < 0) secret += p_;
    secret_handle_ = issue(secret);
  }

  std::int64_t prime() const { return p_; }

  // The one ciphertext that escapes the constructor: E(secret).
  Handle secret_ciphertext() const { return secret_handle_; }

  // A: homomorphic addition.
  Handle add(Handle a, Handle b) {
    ++counters_.add_calls;
    return issue((plaintext_of(a) + plaintext_of(b)) % p_);
  }

  // M: homomorphic multiplication.
  Handle mul(Handle a, Handle b) {
    ++counters_.mul_calls;
    return issue(numtheory::mod_mul(plaintext_of(a), plaintext_of(b), p_));
  }

  // Z: zero tester; 0 iff the plaintext is 0.
  int zero_test(Handle h) {
    ++counters_.zero_calls;
    return plaintext_of(h) == 0 ? 0 : 1;
  }

  const Counters& counters() const { return counters_; }

  // Test-only backdoor; every use is counted so tests can assert the attack
  // path never touches it.
  std::int64_t peek_plaintext_for_tests(Handle h) {
    ++counters_.peeks;
    return plaintext_of(h);
  }

 private:
  Handle issue(std::int64_t value) {
    const std::uint64_t id = idgen_.next();
    table_.emplace(id, value);
    return Handle{id};
  }

  std::int64_t plaintext_of(Handle h) const {
    const auto it = table_.find(h.id);
    if (it == table_.end())
      throw std::invalid_argument("HomoOracle: unknown or foreign handle");
    return it->second;
  }

  std::int64_t p_;
  SplitMix64 idgen_;
  std::unordered_map<std::uint64_t, std::int64_t> table_;
  Handle secret_handle_;
  Counters counters_;
};

// Classical query f(x) = (x+s | p) built from E(s) using only A, M and Z:
// E(1) comes from E(s)^(p-1), E(x) from a double-and-add chain on E(1),
// the symbol from the encrypted (p-1)/2-th power plus at most three zero
// tests. Per-call cost is O(log p) oracle operations.
class LegendreQuery {
 public:
  LegendreQuery(HomoOracle& oracle, HomoOracle::Handle es)
      : oracle_(oracle), es_(es), p_(oracle.prime()) {
    const std::uint64_t before = oracle_.counters().total();
    if (oracle_.zero_test(es) == 0)
      throw std::domain_error("LegendreQuery: secret is zero");
    e_one_ = pow_handle(es_, p_ - 1);  // x^(p-1) = 1 for nonzero x
    e_minus_one_ = encrypt(p_ - 1);
    e_zero_ = oracle_.add(e_one_, e_minus_one_);
    setup_ops_ = oracle_.counters().total() - before;
  }

  // Legendre symbol of x + s, in {-1, 0, +1}.
  int operator()(std::int64_t x) {
    x %= p_;
    if (x < 0) x += p_;
    const std::uint64_t before = oracle_.counters().total();
    const HomoOracle::Handle ex = x == 0 ? e_zero_ : encrypt(x);
    const HomoOracle::Handle exs = oracle_.add(ex, es_);
    const HomoOracle::Handle t = pow_handle(exs, (p_ - 1) / 2);
    int result;
    if (oracle_.zero_test(t) == 0) {
      result = 0;
    } else if (oracle_.zero_test(oracle_.add(t, e_minus_one_)) == 0) {
      result = 1;
    } else if (oracle_.zero_test(oracle_.add(t, e_one_)) == 0) {
      result = -1;
    } else {
      throw std::logic_error("LegendreQuery: oracle inconsistency");
    }
    const std::uint64_t used = oracle_.counters().total() - before;
    if (used > max_ops_per_call_) max_ops_per_call_ = used;
    return result;
  }

  std::uint64_t setup_ops() const { return setup_ops_; }
  std::uint64_t max_ops_per_call() const { return max_ops_per_call_; }

  // E(v) for v >= 1 by double-and-add from E(1).
  HomoOracle::Handle encrypt(std::int64_t v) {
    if (v < 1 || v >= p_)
      throw std::domain_error("LegendreQuery: encrypt expects 1 <= v < p");
    int bit = 62;
    while (((v >> bit) & 1) == 0) --bit;
    HomoOracle::Handle acc = e_one_;
    for (--bit; bit >= 0; --bit) {
      acc = oracle_.add(acc, acc);
      if ((v >> bit) & 1) acc = oracle_.add(acc, e_one_);
    }
    return acc;
  }

  HomoOracle::Handle encryption_of_one() const { return e_one_; }
  HomoOracle::Handle encryption_of_zero() const { return e_zero_; }

 private:
  HomoOracle::Handle pow_handle(HomoOracle::Handle base, std::int64_t e) {
    // Square-and-multiply through M. e >= 1.
    std::optional<HomoOracle::Handle> acc;
    while (e > 0) {
      if (e & 1) acc = acc ? oracle_.mul(*acc, base) : base;
      e >>= 1;
      if (e > 0) base = oracle_.mul(base, base);
    }
    return *acc;
  }

  HomoOracle& oracle_;
  HomoOracle::Handle es_;
  std::int64_t p_;
  HomoOracle::Handle e_one_;
  HomoOracle::Handle e_minus_one_;
  HomoOracle::Handle e_zero_;
  std::uint64_t setup_ops_ = 0;
  std::uint64_t max_ops_per_call_ = 0;
};

enum class AttackMode { kExact, kSampled };

struct AttackReport {
  std::int64_t recovered = -1;
  bool verified = false;
  int preparations = 0;              // state preparations performed
  std::uint64_t logical_queries = 0;  // 2 per preparation
  std::uint64_t max_ops_per_point = 0;
  std::uint64_t setup_ops = 0;
  HomoOracle::Counters counters;  // totals after the attack
};

// Recover the secret from E(s) through the public functions only, by
// treating x -> legendre(x+s) as a shifted quadratic character oracle and
// running the field shift solver.
inline AttackReport break_cryptosystem(HomoOracle& oracle,
                                       HomoOracle::Handle es, AttackMode mode,
                                       std::uint64_t seed) {
  AttackReport report;
  if (oracle.zero_test(es) == 0) {
    report.recovered = 0;
    report.verified = true;
    report.counters = oracle.counters();
    return report;  // no quantum work needed
  }
  const std::int64_t p = oracle.prime();
  LegendreQuery query(oracle, es);
  const auto ctx = finfield::field_make(p, 1);
  const finfield::MultCharFF chi(ctx, (p - 1) / 2);
  shiftalgos::ShiftInstanceFF instance{
      chi, [&query](finfield::FieldElement x) {
        switch (query(static_cast<std::int64_t>(x.index))) {
          case 0:
            return CharValue::zero();
          case 1:
            return CharValue::one();
          default:
            return CharValue::minus_one();
        }
      }};

  std::int64_t candidate;
  if (mode == AttackMode::kExact) {
    const auto r = shiftalgos::solve_shift_ff_exact(instance);
    candidate = r.solution.representative;
    report.preparations = 1;
  } else {
    SplitMix64 rng = SplitMix64::stream(seed, 0x42524541);
    const auto r = shiftalgos::solve_shift_ff_sampled(instance, rng);
    candidate = r.solution.representative;
    report.preparations = r.trials;
  }

  // Cryptographic confirmation: E(s) + E(-candidate) must decrypt to zero.
  const HomoOracle::Handle neg =
      candidate == 0 ? query.encryption_of_zero()
                     : query.encrypt(p - candidate);
  if (oracle.zero_test(oracle.add(es, neg)) != 0)
    throw verification_error(
        "break_cryptosystem: recovered value failed the zero test");

  report.recovered = candidate;
  report.verified = true;
  report.logical_queries = 2ull * static_cast<std::uint64_t>(report.preparations);
  report.max_ops_per_point = query.max_ops_per_call();
  report.setup_ops = query.setup_ops();
  report.counters = oracle.counters();
  return report;
}

}  // namespace charshift::homocrypt
