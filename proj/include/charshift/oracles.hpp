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
#include <numbers>
#include <span>
#include <string>
#include <vector>

#include "charshift/errors.hpp"
#include "charshift/qsim.hpp"

// Deliberately naive classical reference implementations. They are compiled
// into every build (not just tests) so the CLI can emit independently
// verified reports.

namespace charshift::oracles {

inline constexpr double kMatchTol = 1e-9;

// Textbook unitary transform: out[y] = (1/sqrt(dim)) sum_x psi_y(x) v[x],
// evaluated term by term as a direct double sum. The pairing values come
// from a table of roots of unity indexed by the exact integer exponent; no
// fast transform structure is used.
inline std::vector<std::complex<double>> dft_reference(
    const qsim::GroupSpec& group, std::span<const std::complex<double>> v) {
  if (group.dim() > 4096)
    throw capacity_error("dft_reference: dimension exceeds 4096");
  if (static_cast<std::int64_t>(v.size()) != group.dim())
    throw std::domain_error("dft_reference: size mismatch");
  const std::int64_t order = group.pairing_order();
  std::vector<std::complex<double>> roots(static_cast<std::size_t>(order));
  for (std::int64_t t = 0; t < order; ++t)
    roots[static_cast<std::size_t>(t)] =
        std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(t) /
                            static_cast<double>(order));
  std::vector<std::complex<double>> out(v.size());
  const double scale = 1.0 / std::sqrt(static_cast<double>(group.dim()));
  for (std::int64_t y = 0; y < group.dim(); ++y) {
    std::complex<double> acc{0.0, 0.0};
    for (std::int64_t x = 0; x < group.dim(); ++x)
      acc += roots[static_cast<std::size_t>(group.pairing_exponent(x, y))] *
             v[static_cast<std::size_t>(x)];
    out[static_cast<std::size_t>(y)] = acc * scale;
  }
  return out;
}

// Exhaustive answer set of the shift problem: all t with f(x) = g(x + t)
// for every x in the group.
inline std::vector<std::int64_t> brute_force_shift(
    const qsim::GroupSpec& group,
    const std::function<std::complex<double>(std::int64_t)>& f,
    const std::function<std::complex<double>(std::int64_t)>& g,
    double tol = kMatchTol) {
  std::vector<std::int64_t> result;
  for (std::int64_t t = 0; t < group.dim(); ++t) {
    bool match = true;
    for (std::int64_t x = 0; x < group.dim() && match; ++x)
      match = std::abs(f(x) - g(group.add(x, t))) <= tol;
    if (match) result.push_back(t);
  }
  return result;
}

// Smallest positive period of f on the nonnegative integers, scanning
// x in [0, 4*bound).
inline std::int64_t brute_force_period(
    const std::function<std::complex<double>(std::int64_t)>& f,
    std::int64_t bound, double tol = kMatchTol) {
  for (std::int64_t ell = 1; ell <= bound; ++ell) {
    bool periodic = true;
    for (std::int64_t x = 0; x < 4 * bound && periodic; ++x)
      periodic = std::abs(f(x + ell) - f(x)) <= tol;
    if (periodic) return ell;
  }
  throw capacity_error("brute_force_period: no period within bound");
}

// One line of the verification report: a quantity computed both ways.
struct OracleReport {
  std::string name;
  double brute_force_value = 0.0;
  double algorithm_value = 0.0;
  double difference = 0.0;
  bool pass = false;
};

inline OracleReport make_report(std::string name, double brute_force_value,
                                double algorithm_value, double tol) {
  OracleReport r;
  r.name = std::move(name);
  r.brute_force_value = brute_force_value;
  r.algorithm_value = algorithm_value;
  r.difference = std::abs(brute_force_value - algorithm_value);
  r.pass = r.difference <= tol;
  return r;
}

}  // namespace charshift::oracles
