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
#include <vector>

#include "charshift/homocrypt.hpp"
#include "charshift/oracles.hpp"
#include "charshift/qsim.hpp"
#include "charshift/ringchar.hpp"
#include "charshift/rng.hpp"
#include "charshift/shiftalgos.hpp"

namespace charshift::verify {

// Cross-checks of the fast engine and the solvers against the naive
// oracles, packaged for the CLI.
inline std::vector<oracles::OracleReport> run_verification_suite(
    std::uint64_t seed) {
  using Complex = std::complex<double>;
  std::vector<oracles::OracleReport> reports;
  SplitMix64 rng = SplitMix64::stream(seed, 0x76657279);

  // Fast transforms against the direct double sum.
  {
    std::vector<qsim::GroupSpec> groups;
    groups.push_back(qsim::GroupSpec::cyclic(389));
    groups.push_back(qsim::GroupSpec::cyclic(256));
    groups.push_back(
        qsim::GroupSpec::field_additive(finfield::field_make(7, 3)));
    groups.push_back(qsim::GroupSpec::product({4, 9, 13}));
    double worst = 0.0;
    for (const auto& g : groups) {
      for (int rep = 0; rep < 5; ++rep) {
        std::vector<Complex> v(static_cast<std::size_t>(g.dim()));
        for (auto& z : v)
          z = {rng.next_double() - 0.5, rng.next_double() - 0.5};
        const auto fast = qsim::unitary_dft(g, v);
        const auto slow = oracles::dft_reference(g, v);
        for (std::size_t i = 0; i < v.size(); ++i)
          worst = std::max(worst, std::abs(fast[i] - slow[i]));
      }
    }
    reports.push_back(
        oracles::make_report("dft_fast_vs_reference", 0.0, worst, 1e-10));
  }

  // Quadratic field characters against the Euler criterion.
  {
    std::int64_t mismatches = 0;
    for (const std::int64_t p : {std::int64_t{13}, std::int64_t{97}}) {
      const auto F = finfield::field_make(p, 1);
      const finfield::MultCharFF chi(F, (p - 1) / 2);
      for (std::int64_t x = 0; x < p; ++x) {
        const int sym = numtheory::legendre_symbol(x, p);
        const CharValue expected = sym == 0    ? CharValue::zero()
                                   : sym == 1  ? CharValue::one()
                                               : CharValue::minus_one();
        if (chi.value(F->element(x)) != expected) ++mismatches;
      }
    }
    reports.push_back(oracles::make_report("quadratic_char_vs_legendre", 0.0,
                                           static_cast<double>(mismatches),
                                           0.5));
  }

  // Jacobi symbol against the factored Legendre product.
  {
    std::int64_t mismatches = 0;
    for (std::int64_t n = 3; n <= 105; n += 2) {
      const auto f = numtheory::factorize(n).factors;
      for (std::int64_t x = 0; x < n; ++x) {
        int expected = 1;
        for (const auto& [p, e] : f)
          for (int i = 0; i < e; ++i)
            expected *= numtheory::legendre_symbol(x, p);
        if (numtheory::jacobi_symbol(x, n) != expected) ++mismatches;
      }
    }
    reports.push_back(oracles::make_report("jacobi_vs_legendre_product", 0.0,
                                           static_cast<double>(mismatches),
                                           0.5));
  }

  // Gauss identity residual over the fields q <= 49.
  {
    double worst = 0.0;
    for (std::int64_t q = 3; q <= 49; ++q) {
      const auto f = numtheory::factorize(q).factors;
      if (f.size() != 1) continue;
      const auto F = finfield::field_make(f[0].first, f[0].second);
      const auto g = qsim::GroupSpec::field_additive(F);
      for (std::int64_t k = 1; k < q - 1; ++k) {
        const finfield::MultCharFF chi(F, k);
        std::vector<Complex> v(static_cast<std::size_t>(q));
        for (std::int64_t x = 0; x < q; ++x)
          v[static_cast<std::size_t>(x)] =
              chi.value(F->element(x)).to_complex();
        const auto hat = qsim::unitary_dft(g, v);
        const Complex hat1 = hat[1];
        worst = std::max(worst, std::abs(std::abs(hat1) - 1.0));
        for (std::int64_t y = 0; y < q; ++y) {
          const Complex expected =
              std::conj(chi.value(F->element(y)).to_complex()) * hat1;
          worst = std::max(
              worst, std::abs(hat[static_cast<std::size_t>(y)] - expected));
        }
      }
    }
    reports.push_back(
        oracles::make_report("gauss_identity_residual", 0.0, worst, 1e-9));
  }

  // Field solver against exhaustive shift search.
  {
    std::int64_t mismatches = 0;
    const auto F = finfield::field_make(13, 1);
    for (int rep = 0; rep < 6; ++rep) {
      const std::int64_t k = 1 + static_cast<std::int64_t>(rng.next_below(11));
      const std::int64_t s = static_cast<std::int64_t>(rng.next_below(13));
      const finfield::MultCharFF chi(F, k);
      const auto inst =
          shiftalgos::make_field_instance(chi, F->element(s));
      const auto r = shiftalgos::solve_shift_ff_exact(inst);
      const auto expected = oracles::brute_force_shift(
          qsim::GroupSpec::field_additive(F),
          [&](std::int64_t x) { return inst.f(F->element(x)).to_complex(); },
          [&](std::int64_t x) {
            return chi.value(F->element(x)).to_complex();
          });
      if (r.solution.solution_set != expected) ++mismatches;
    }
    reports.push_back(oracles::make_report("field_solver_vs_brute_force", 0.0,
                                           static_cast<double>(mismatches),
                                           0.5));
  }

  // Ring solver against exhaustive shift search.
  {
    std::int64_t mismatches = 0;
    for (const std::int64_t n : {std::int64_t{9}, std::int64_t{45}}) {
      const ringchar::RingChar chi =
          n == 9 ? ringchar::RingChar::make(9, std::vector<std::int64_t>{3})
                 : ringchar::RingChar::quadratic(n);
      const std::int64_t s = static_cast<std::int64_t>(rng.next_below(n));
      const auto inst = shiftalgos::make_ring_instance(chi, s);
      const auto r = shiftalgos::solve_shift_ring_exact(inst);
      const auto expected = oracles::brute_force_shift(
          qsim::GroupSpec::cyclic(n),
          [&](std::int64_t x) { return inst.f(x).to_complex(); },
          [&](std::int64_t x) { return chi.value(x).to_complex(); });
      if (r.solution.solution_set != expected) ++mismatches;
    }
    reports.push_back(oracles::make_report("ring_solver_vs_brute_force", 0.0,
                                           static_cast<double>(mismatches),
                                           0.5));
  }

  // Homomorphic attack against the planted secret.
  {
    std::int64_t mismatches = 0;
    for (std::uint64_t i = 0; i < 3; ++i) {
      const std::int64_t secret =
          static_cast<std::int64_t>(rng.next_below(31));
      homocrypt::HomoOracle oracle(31, secret, seed + i);
      const auto report = homocrypt::break_cryptosystem(
          oracle, oracle.secret_ciphertext(), homocrypt::AttackMode::kSampled,
          seed + i);
      if (report.recovered != secret) ++mismatches;
    }
    reports.push_back(oracles::make_report("homomorphic_attack_vs_secret", 0.0,
                                           static_cast<double>(mismatches),
                                           0.5));
  }

  return reports;
}

}  // namespace charshift::verify
