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

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "charshift/charvalue.hpp"
#include "charshift/errors.hpp"
#include "charshift/finfield.hpp"
#include "charshift/numtheory.hpp"
#include "charshift/oracles.hpp"
#include "charshift/qsim.hpp"
#include "charshift/ringchar.hpp"
#include "charshift/rng.hpp"

namespace charshift::shiftalgos {

// Random points used to verify a candidate shift against the oracle. Under
// the shift promise a wrong candidate survives one comparison with
// probability well below 1/2, so the miss rate is at most 2^-40.
inline constexpr int kSpotChecks = 40;

// Retry budgets for sampled solvers.
inline constexpr int kShiftRetryBudget = 25;
inline constexpr int kPeriodRounds = 20;
inline constexpr int kPeriodBatch = 10;

// Full answer set of a hidden shift/coset instance: the subgroup H that
// stabilizes the known function and the coset representative + H of all
// valid shifts, as explicit element lists (desk scale).
struct ShiftSolution {
  std::int64_t representative = 0;
  std::vector<std::int64_t> subgroup;
  std::vector<std::int64_t> solution_set;
};

namespace detail {

inline std::int64_t argmax_smallest(const std::vector<double>& v) {
  std::int64_t best = 0;
  for (std::int64_t i = 1; i < static_cast<std::int64_t>(v.size()); ++i)
    if (v[static_cast<std::size_t>(i)] > v[static_cast<std::size_t>(best)])
      best = i;
  return best;
}

inline std::function<std::complex<double>(std::int64_t)> as_complex_fn(
    const std::function<CharValue(std::int64_t)>& f) {
  return [f](std::int64_t x) { return f(x).to_complex(); };
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Shifted multiplicative characters of finite fields
// ---------------------------------------------------------------------------

// Oracle instance: f is promised to equal x -> chi(x + s) for some hidden s.
struct ShiftInstanceFF {
  finfield::MultCharFF chi;
  std::function<CharValue(finfield::FieldElement)> f;
};

inline ShiftInstanceFF make_field_instance(const finfield::MultCharFF& chi,
                                           finfield::FieldElement shift) {
  auto ctx = chi.field_ptr();
  return {chi, [chi, ctx, shift](finfield::FieldElement x) {
            return chi.value(ctx->add(x, shift));
          }};
}

struct FieldSolveResult {
  ShiftSolution solution;
  bool verified = false;
  numtheory::Fraction prep_probability;  // (q-1)/q
  double answer_mass = 0.0;              // final-state mass on the answer
  double success_probability = 0.0;      // prep * answer mass
  int trials = 1;                        // sampled mode: attempts used
  std::vector<double> final_distribution;  // exact mode only
};

// One sampled run: preparation branch, measurement, spot-check verification.
struct FieldTrial {
  bool prepared = false;
  std::int64_t candidate = -1;
  bool verified = false;
};

namespace detail {

struct FieldPipeline {
  qsim::PrepOutcome prep;
  qsim::QState final_state;
};

inline FieldPipeline run_field_pipeline(const ShiftInstanceFF& inst) {
  if (inst.chi.trivial())
    throw std::domain_error("solve_shift_ff: character must be nontrivial");
  const auto& ctx = inst.chi.field_ptr();
  const qsim::GroupSpec group = qsim::GroupSpec::field_additive(ctx);
  auto prep = qsim::amplitude_encode(group, [&](std::int64_t x) {
    return inst.f(ctx->element(x)).to_complex();
  });
  qsim::QState st = qsim::dft(prep.state);
  st = qsim::phase_multiply(st, [&](std::int64_t y) -> std::complex<double> {
    if (y == 0) return {1.0, 0.0};
    return inst.chi.value(ctx->element(y)).to_complex();
  });
  st = qsim::dft_inverse(st);
  return {std::move(prep), std::move(st)};
}

inline bool verify_field_candidate(const ShiftInstanceFF& inst,
                                   finfield::FieldElement t, SplitMix64& rng,
                                   int checks) {
  const auto& ctx = inst.chi.field_ptr();
  for (int i = 0; i < checks; ++i) {
    const auto x = ctx->element(
        static_cast<std::int64_t>(rng.next_below(ctx->q())));
    if (inst.f(x) != inst.chi.value(ctx->add(x, t))) return false;
  }
  return true;
}

inline bool verify_field_candidate_full(const ShiftInstanceFF& inst,
                                        finfield::FieldElement t) {
  const auto& ctx = inst.chi.field_ptr();
  for (std::int64_t x = 0; x < ctx->q(); ++x) {
    const auto xe = ctx->element(x);
    if (inst.f(xe) != inst.chi.value(ctx->add(xe, t))) return false;
  }
  return true;
}

}  // namespace detail

// Exact mode: the final distribution is computed in full, the answer is its
// argmax (negated back to the shift) and the reported success probability is
// the preparation fraction times the answer mass.
inline FieldSolveResult solve_shift_ff_exact(const ShiftInstanceFF& inst) {
  auto pipe = detail::run_field_pipeline(inst);
  const auto& ctx = inst.chi.field_ptr();
  FieldSolveResult result;
  result.final_distribution = qsim::exact_distribution(pipe.final_state);
  const std::int64_t peak = detail::argmax_smallest(result.final_distribution);
  const finfield::FieldElement shift = ctx->neg(ctx->element(peak));
  result.solution.representative = shift.index;
  result.solution.subgroup = {0};
  result.solution.solution_set = {static_cast<std::int64_t>(shift.index)};
  result.verified = detail::verify_field_candidate_full(inst, shift);
  result.prep_probability = pipe.prep.success_probability;
  result.answer_mass =
      result.final_distribution[static_cast<std::size_t>(peak)];
  result.success_probability =
      result.prep_probability.to_double() * result.answer_mass;
  return result;
}

inline FieldTrial solve_shift_ff_trial(const ShiftInstanceFF& inst,
                                       SplitMix64& rng) {
  auto pipe = detail::run_field_pipeline(inst);
  FieldTrial trial;
  if (rng.next_double() >= pipe.prep.success_probability.to_double())
    return trial;  // preparation branch failed
  trial.prepared = true;
  const std::int64_t measured = qsim::measure_sample(pipe.final_state, rng);
  const auto& ctx = inst.chi.field_ptr();
  const finfield::FieldElement shift = ctx->neg(ctx->element(measured));
  trial.candidate = shift.index;
  trial.verified = detail::verify_field_candidate(inst, shift, rng,
                                                  kSpotChecks);
  return trial;
}

// Sampled mode with retries: loops trials until one verifies.
inline FieldSolveResult solve_shift_ff_sampled(
    const ShiftInstanceFF& inst, SplitMix64& rng,
    int max_trials = kShiftRetryBudget) {
  const auto& ctx = inst.chi.field_ptr();
  for (int t = 1; t <= max_trials; ++t) {
    const FieldTrial trial = solve_shift_ff_trial(inst, rng);
    if (!trial.verified) continue;
    FieldSolveResult result;
    result.solution.representative = trial.candidate;
    result.solution.subgroup = {0};
    result.solution.solution_set = {trial.candidate};
    result.verified = true;
    result.prep_probability =
        numtheory::Fraction(ctx->q() - 1, ctx->q());
    result.answer_mass = result.prep_probability.to_double();
    result.success_probability =
        result.answer_mass * result.answer_mass;
    result.trials = t;
    return result;
  }
  throw verification_error(
      "solve_shift_ff: no verified candidate within the retry budget");
}

// ---------------------------------------------------------------------------
// Shifted multiplicative characters of Z/nZ
// ---------------------------------------------------------------------------

struct ShiftInstanceRing {
  ringchar::RingChar chi;
  std::function<CharValue(std::int64_t)> f;
};

inline ShiftInstanceRing make_ring_instance(const ringchar::RingChar& chi,
                                            std::int64_t shift) {
  return {chi, [chi, shift](std::int64_t x) { return chi.value(x + shift); }};
}

struct RingSolveResult {
  ShiftSolution solution;  // within Z_n
  bool verified = false;
  std::int64_t period = 0;
  numtheory::Fraction stage1_prep;  // phi(n)/n
  numtheory::Fraction stage2_prep;  // phi(l)/l
  double stage2_mass = 0.0;         // mass on -s mod l
  double success_probability = 0.0;  // product of the three factors
  int trials = 1;
  std::vector<double> stage1_distribution;  // exact mode only
  std::vector<double> stage2_distribution;  // exact mode only
};

struct RingTrial {
  bool stage1_prepared = false;
  std::int64_t period_found = 0;
  bool stage2_prepared = false;
  std::int64_t candidate = -1;
  bool verified = false;
};

namespace detail {

struct CyclicStage {
  qsim::PrepOutcome prep;
  qsim::QState final_state;
};

// The field-algorithm pattern over Z_l for a primitive character: encode,
// transform, divide out the character spectrum as a phase (identity off the
// unit support), transform back.
inline CyclicStage run_cyclic_stage(
    const ringchar::RingChar& prim,
    const std::function<CharValue(std::int64_t)>& f) {
  const std::int64_t ell = prim.modulus();
  const qsim::GroupSpec group = qsim::GroupSpec::cyclic(ell);
  auto prep = qsim::amplitude_encode(group, detail::as_complex_fn(f));
  qsim::QState st = qsim::dft(prep.state);
  st = qsim::phase_multiply(st, [&](std::int64_t y) -> std::complex<double> {
    if (std::gcd(y, ell) != 1) return {1.0, 0.0};
    return prim.value(y).to_complex();
  });
  st = qsim::dft_inverse(st);
  return {std::move(prep), std::move(st)};
}

inline bool verify_ring_candidate(const ShiftInstanceRing& inst,
                                  std::int64_t t, SplitMix64& rng,
                                  int checks) {
  const std::int64_t n = inst.chi.modulus();
  for (int i = 0; i < checks; ++i) {
    const std::int64_t x = static_cast<std::int64_t>(rng.next_below(n));
    if (inst.f(x) != inst.chi.value(x + t)) return false;
  }
  return true;
}

inline bool verify_ring_candidate_full(const ShiftInstanceRing& inst,
                                       std::int64_t t) {
  const std::int64_t n = inst.chi.modulus();
  for (std::int64_t x = 0; x < n; ++x)
    if (inst.f(x) != inst.chi.value(x + t)) return false;
  return true;
}

inline ShiftSolution ring_solution(std::int64_t n, std::int64_t ell,
                                   std::int64_t shift_mod_ell) {
  ShiftSolution sol;
  sol.representative = shift_mod_ell % ell;
  for (std::int64_t h = 0; h < n; h += ell) {
    sol.subgroup.push_back(h);
    sol.solution_set.push_back(sol.representative + h);
  }
  return sol;
}

}  // namespace detail

// Exact mode of the two-stage ring solver: stage 1 reads the period off the
// spectral support (gcd with the measured index), stage 2 reruns the field
// pattern over Z_l with the restricted primitive character.
inline RingSolveResult solve_shift_ring_exact(const ShiftInstanceRing& inst) {
  if (!inst.chi.completely_nontrivial())
    throw std::domain_error(
        "solve_shift_ring: character must be completely nontrivial");
  const std::int64_t n = inst.chi.modulus();
  const qsim::GroupSpec group = qsim::GroupSpec::cyclic(n);
  auto prep1 = qsim::amplitude_encode(group, detail::as_complex_fn(inst.f));
  const qsim::QState spectrum = qsim::dft(prep1.state);

  RingSolveResult result;
  result.stage1_distribution = qsim::exact_distribution(spectrum);
  const std::int64_t measured =
      detail::argmax_smallest(result.stage1_distribution);
  result.period = n / std::gcd(n, measured);
  const ringchar::RingChar prim = inst.chi.restrict_to_period();
  if (prim.modulus() != result.period)
    throw std::logic_error("solve_shift_ring: measured period mismatch");

  auto stage2 = detail::run_cyclic_stage(prim, inst.f);
  result.stage2_distribution = qsim::exact_distribution(stage2.final_state);
  const std::int64_t peak =
      detail::argmax_smallest(result.stage2_distribution);
  const std::int64_t shift = (result.period - peak) % result.period;

  result.solution = detail::ring_solution(n, result.period, shift);
  result.verified = detail::verify_ring_candidate_full(inst, shift);
  result.stage1_prep = prep1.success_probability;
  result.stage2_prep = stage2.prep.success_probability;
  result.stage2_mass =
      result.stage2_distribution[static_cast<std::size_t>(peak)];
  result.success_probability = result.stage1_prep.to_double() *
                               result.stage2_prep.to_double() *
                               result.stage2_mass;
  return result;
}

inline RingTrial solve_shift_ring_trial(const ShiftInstanceRing& inst,
                                        SplitMix64& rng) {
  if (!inst.chi.completely_nontrivial())
    throw std::domain_error(
        "solve_shift_ring: character must be completely nontrivial");
  const std::int64_t n = inst.chi.modulus();
  RingTrial trial;
  const qsim::GroupSpec group = qsim::GroupSpec::cyclic(n);
  auto prep1 = qsim::amplitude_encode(group, detail::as_complex_fn(inst.f));
  if (rng.next_double() >= prep1.success_probability.to_double())
    return trial;
  trial.stage1_prepared = true;
  const qsim::QState spectrum = qsim::dft(prep1.state);
  const std::int64_t measured = qsim::measure_sample(spectrum, rng);
  trial.period_found = n / std::gcd(n, measured);

  const ringchar::RingChar prim = inst.chi.restrict_to_period();
  if (prim.modulus() != trial.period_found) return trial;  // off-support fluke

  auto stage2 = detail::run_cyclic_stage(prim, inst.f);
  if (rng.next_double() >= stage2.prep.success_probability.to_double())
    return trial;
  trial.stage2_prepared = true;
  const std::int64_t peak = qsim::measure_sample(stage2.final_state, rng);
  trial.candidate = (trial.period_found - peak) % trial.period_found;
  trial.verified =
      detail::verify_ring_candidate(inst, trial.candidate, rng, kSpotChecks);
  return trial;
}

inline RingSolveResult solve_shift_ring_sampled(
    const ShiftInstanceRing& inst, SplitMix64& rng,
    int max_trials = kShiftRetryBudget) {
  const std::int64_t n = inst.chi.modulus();
  for (int t = 1; t <= max_trials; ++t) {
    const RingTrial trial = solve_shift_ring_trial(inst, rng);
    if (!trial.verified) continue;
    RingSolveResult result;
    result.period = trial.period_found;
    result.solution = detail::ring_solution(n, trial.period_found,
                                            trial.candidate);
    result.verified = true;
    result.stage1_prep =
        numtheory::Fraction(numtheory::euler_phi(n), n);
    result.stage2_prep = numtheory::Fraction(
        numtheory::euler_phi(trial.period_found), trial.period_found);
    result.stage2_mass = result.stage2_prep.to_double();
    result.success_probability = result.stage1_prep.to_double() *
                                 result.stage2_prep.to_double() *
                                 result.stage2_mass;
    result.trials = t;
    return result;
  }
  throw verification_error(
      "solve_shift_ring: no verified candidate within the retry budget");
}

// ---------------------------------------------------------------------------
// Approximate Fourier sampling of a periodic function on Z
// ---------------------------------------------------------------------------

// Distribution over reduced fractions.
struct FractionDistribution {
  std::map<numtheory::Fraction, double> mass;
};

inline double l1_distance(const FractionDistribution& a,
                          const FractionDistribution& b) {
  double d = 0.0;
  auto ia = a.mass.begin();
  auto ib = b.mass.begin();
  while (ia != a.mass.end() || ib != b.mass.end()) {
    if (ib == b.mass.end() || (ia != a.mass.end() && ia->first < ib->first)) {
      d += std::abs(ia->second);
      ++ia;
    } else if (ia == a.mass.end() || ib->first < ia->first) {
      d += std::abs(ib->second);
      ++ib;
    } else {
      d += std::abs(ia->second - ib->second);
      ++ia;
      ++ib;
    }
  }
  return d;
}

namespace detail {

// Spectrum over Z_q of the function repeated on [0, m) and zero-padded.
inline qsim::QState repeated_spectrum(
    const std::function<std::complex<double>(std::int64_t)>& f,
    std::int64_t m, std::int64_t q_len) {
  if (m < 1 || q_len < m)
    throw std::domain_error("approx_fourier_sample: requires 1 <= m <= q_len");
  if (q_len > qsim::kCyclicBound)
    throw capacity_error(
        "approx_fourier_sample: transform length exceeds the cyclic bound");
  std::vector<std::complex<double>> amps(static_cast<std::size_t>(q_len),
                                         {0.0, 0.0});
  for (std::int64_t x = 0; x < m; ++x)
    amps[static_cast<std::size_t>(x)] = f(x);
  return qsim::dft(
      qsim::QState(qsim::GroupSpec::cyclic(q_len), std::move(amps)));
}

}  // namespace detail

// Exact distribution of continued-fraction-reduced Fourier samples of the
// repeated state: sample x over Z_q, return the best approximation of x/q
// with denominator at most denom_bound.
inline FractionDistribution cf_distribution(
    const std::function<std::complex<double>(std::int64_t)>& f, std::int64_t m,
    std::int64_t q_len, std::int64_t denom_bound) {
  const qsim::QState spectrum = detail::repeated_spectrum(f, m, q_len);
  FractionDistribution dist;
  const auto probs = qsim::exact_distribution(spectrum);
  for (std::int64_t x = 0; x < q_len; ++x)
    dist.mass[numtheory::cf_best_approx(x, q_len, denom_bound)] +=
        probs[static_cast<std::size_t>(x)];
  return dist;
}

// Exact distribution of reduced fractions x/n from Fourier sampling the
// function directly over Z_n.
inline FractionDistribution rf_distribution(
    const std::function<std::complex<double>(std::int64_t)>& f,
    std::int64_t n) {
  std::vector<std::complex<double>> amps(static_cast<std::size_t>(n));
  for (std::int64_t x = 0; x < n; ++x)
    amps[static_cast<std::size_t>(x)] = f(x);
  const qsim::QState spectrum =
      qsim::dft(qsim::QState(qsim::GroupSpec::cyclic(n), std::move(amps)));
  FractionDistribution dist;
  const auto probs = qsim::exact_distribution(spectrum);
  for (std::int64_t x = 0; x < n; ++x)
    dist.mass[numtheory::Fraction(x, n)] += probs[static_cast<std::size_t>(x)];
  return dist;
}

// One continued-fraction Fourier sample.
inline numtheory::Fraction approx_fourier_sample(
    const std::function<std::complex<double>(std::int64_t)>& f, std::int64_t m,
    std::int64_t q_len, std::int64_t denom_bound, SplitMix64& rng) {
  const qsim::QState spectrum = detail::repeated_spectrum(f, m, q_len);
  const std::int64_t x = qsim::measure_sample(spectrum, rng);
  return numtheory::cf_best_approx(x, q_len, denom_bound);
}

// ---------------------------------------------------------------------------
// Unknown modulus: recover the period first, then the shift
// ---------------------------------------------------------------------------

// The oracle plus the character family it was drawn from: given a modulus,
// char_family must produce the character whose shifts f realizes (e.g. the
// quadratic character family when f is a shifted Jacobi-style symbol).
struct UnknownPeriodInstance {
  std::function<CharValue(std::int64_t)> f;
  std::function<ringchar::RingChar(std::int64_t)> char_family;
};

inline UnknownPeriodInstance make_unknown_instance(
    const ringchar::RingChar& chi, std::int64_t shift,
    std::function<ringchar::RingChar(std::int64_t)> family) {
  return {[chi, shift](std::int64_t x) { return chi.value(x + shift); },
          std::move(family)};
}

struct UnknownSolveResult {
  std::int64_t period = 0;
  ShiftSolution solution;  // modulo `period`; all shifts = rep + period*Z
  bool verified = false;
  int rounds = 0;
  int shift_trials = 0;
  std::vector<std::int64_t> denominators;  // all batch denominators observed
};

inline UnknownSolveResult solve_shift_unknown_n(
    const UnknownPeriodInstance& inst, std::int64_t period_bound,
    double epsilon, SplitMix64& rng, int max_rounds = kPeriodRounds,
    int batch = kPeriodBatch) {
  if (period_bound < 2)
    throw std::domain_error("solve_shift_unknown_n: period bound must be >= 2");
  if (!(epsilon > 0.0) || epsilon >= 1.0)
    throw std::domain_error("solve_shift_unknown_n: epsilon must be in (0,1)");
  // A constant oracle has period 1, which the problem excludes.
  bool constant = true;
  for (std::int64_t x = 1; x <= 64 && constant; ++x)
    constant = inst.f(x) == inst.f(0);
  if (constant)
    throw std::domain_error("solve_shift_unknown_n: oracle has period 1");

  const double nn = static_cast<double>(period_bound);
  const double md = std::ceil(nn * nn / (epsilon * epsilon));
  if (std::ceil(md / epsilon) > static_cast<double>(qsim::kCyclicBound))
    throw capacity_error(
        "solve_shift_unknown_n: sampling length exceeds the cyclic bound");
  const std::int64_t m = static_cast<std::int64_t>(md);
  const std::int64_t q_len =
      static_cast<std::int64_t>(std::ceil(static_cast<double>(m) / epsilon));
  const auto fc = detail::as_complex_fn(inst.f);
  const qsim::QState spectrum = detail::repeated_spectrum(fc, m, q_len);
  const std::int64_t check_range = std::max<std::int64_t>(
      4 * period_bound * period_bound, 256);
  auto is_period = [&](std::int64_t d) {
    for (int i = 0; i < kSpotChecks; ++i) {
      const std::int64_t x =
          static_cast<std::int64_t>(rng.next_below(check_range));
      if (inst.f(x) != inst.f(x + d)) return false;
    }
    return true;
  };

  UnknownSolveResult result;
  std::int64_t period = 0;
  for (int round = 1; round <= max_rounds && period == 0; ++round) {
    result.rounds = round;
    std::int64_t ell = 1;
    for (int i = 0; i < batch; ++i) {
      const std::int64_t x = qsim::measure_sample(spectrum, rng);
      const numtheory::Fraction fr =
          numtheory::cf_best_approx(x, q_len, period_bound);
      result.denominators.push_back(fr.den);
      ell = std::lcm(ell, fr.den);
    }
    if (ell <= 1 || ell > period_bound) continue;  // corrupted batch
    // The batch LCM can overshoot to a multiple of the true period when a
    // sample rounds to a spurious fraction; take the smallest divisor that
    // spot-checks as a period.
    for (const std::int64_t d : numtheory::divisors(ell)) {
      if (d > 1 && is_period(d)) {
        period = d;
        break;
      }
    }
  }
  if (period == 0) {
    std::ostringstream msg;
    msg << "solve_shift_unknown_n: no period verified after " << max_rounds
        << " rounds; denominators seen:";
    for (const std::int64_t d : result.denominators) msg << ' ' << d;
    throw verification_error(msg.str());
  }
  result.period = period;

  const ringchar::RingChar prim = inst.char_family(period);
  if (!prim.primitive())
    throw promise_violation(
        "solve_shift_unknown_n: character family is not primitive at the "
        "recovered period");
  for (int t = 1; t <= kShiftRetryBudget; ++t) {
    result.shift_trials = t;
    auto stage = detail::run_cyclic_stage(prim, inst.f);
    if (rng.next_double() >= stage.prep.success_probability.to_double())
      continue;
    const std::int64_t peak = qsim::measure_sample(stage.final_state, rng);
    const std::int64_t candidate = (period - peak) % period;
    bool ok = true;
    for (int i = 0; i < kSpotChecks && ok; ++i) {
      const std::int64_t x =
          static_cast<std::int64_t>(rng.next_below(check_range));
      ok = inst.f(x) == prim.value(x + candidate);
    }
    if (!ok) continue;
    result.solution.representative = candidate;
    result.solution.subgroup = {0};
    result.solution.solution_set = {candidate};
    result.verified = true;
    return result;
  }
  throw verification_error(
      "solve_shift_unknown_n: no verified shift within the retry budget");
}

// ---------------------------------------------------------------------------
// Hidden coset problem
// ---------------------------------------------------------------------------

// f is promised to be a shift of the known function g; |f| is constant on
// its support and |g-hat| is constant on its support.
struct HcpInstance {
  qsim::GroupSpec group;
  std::function<std::complex<double>(std::int64_t)> g;
  std::function<std::complex<double>(std::int64_t)> f;
};

inline HcpInstance make_hcp_instance(
    const qsim::GroupSpec& group,
    std::function<std::complex<double>(std::int64_t)> g, std::int64_t shift) {
  auto f = [group, g, shift](std::int64_t x) {
    return g(group.add(x, shift));
  };
  return {group, std::move(g), std::move(f)};
}

struct HcpSolveResult {
  ShiftSolution solution;
  bool verified = false;
  numtheory::Fraction alpha;  // support fraction of f
  numtheory::Fraction beta;   // spectral support fraction of g
  double answer_mass = 0.0;
  double success_probability = 0.0;  // alpha * beta
  std::vector<double> final_distribution;  // exact mode only
};

struct HcpTrial {
  bool prepared = false;
  std::int64_t candidate = -1;
  bool verified = false;
};

namespace detail {

struct HcpPipeline {
  qsim::PrepOutcome prep;
  qsim::QState final_state;
  numtheory::Fraction beta;
};

inline HcpPipeline run_hcp_pipeline(const HcpInstance& inst) {
  const qsim::GroupSpec& group = inst.group;
  const std::int64_t dim = group.dim();

  // |f| must be constant on its support; rescale it to unit magnitude.
  double f_mag = 0.0;
  for (std::int64_t x = 0; x < dim && f_mag == 0.0; ++x)
    f_mag = std::abs(inst.f(x));
  if (f_mag == 0.0)
    throw std::domain_error("solve_hidden_coset: f is identically zero");
  for (std::int64_t x = 0; x < dim; ++x) {
    const double a = std::abs(inst.f(x));
    if (a > qsim::kSupportTol * f_mag && std::abs(a - f_mag) > 1e-8 * f_mag)
      throw promise_violation(
          "solve_hidden_coset: |f| is not constant on its support");
  }
  auto prep = qsim::amplitude_encode(group, [&](std::int64_t x) {
    return inst.f(x) / f_mag;
  });

  // Spectrum of the known function; only its phases and support are used.
  std::vector<std::complex<double>> gvec(static_cast<std::size_t>(dim));
  for (std::int64_t x = 0; x < dim; ++x)
    gvec[static_cast<std::size_t>(x)] = inst.g(x);
  const auto ghat = qsim::unitary_dft(group, gvec);
  double gmax = 0.0;
  for (const auto& z : ghat) gmax = std::max(gmax, std::abs(z));
  if (gmax == 0.0)
    throw std::domain_error("solve_hidden_coset: g-hat has empty support");
  std::int64_t support = 0;
  for (const auto& z : ghat) {
    const double a = std::abs(z);
    if (a > 1e-9 * gmax) {
      ++support;
      if (std::abs(a - gmax) > 1e-8 * gmax)
        throw promise_violation(
            "solve_hidden_coset: |g-hat| is not constant on its support");
    }
  }

  qsim::QState st = qsim::dft(prep.state);
  st = qsim::phase_multiply(st, [&](std::int64_t y) -> std::complex<double> {
    const auto z = ghat[static_cast<std::size_t>(y)];
    if (std::abs(z) <= 1e-9 * gmax) return {1.0, 0.0};  // divide only on support
    return std::conj(z) / std::abs(z);
  });
  st = qsim::dft_inverse(st);
  return {std::move(prep), std::move(st), numtheory::Fraction(support, dim)};
}

// Largest subgroup on whose cosets g is constant, by exhaustive scan.
inline std::vector<std::int64_t> stabilizer_of(
    const qsim::GroupSpec& group,
    const std::function<std::complex<double>(std::int64_t)>& g) {
  std::vector<std::int64_t> h;
  for (std::int64_t c = 0; c < group.dim(); ++c) {
    bool stabilizes = true;
    for (std::int64_t x = 0; x < group.dim() && stabilizes; ++x)
      stabilizes = std::abs(g(group.add(x, c)) - g(x)) <= oracles::kMatchTol;
    if (stabilizes) h.push_back(c);
  }
  return h;
}

inline bool verify_hcp_candidate_full(const HcpInstance& inst,
                                      std::int64_t t) {
  for (std::int64_t x = 0; x < inst.group.dim(); ++x)
    if (std::abs(inst.f(x) - inst.g(inst.group.add(x, t))) >
        oracles::kMatchTol)
      return false;
  return true;
}

}  // namespace detail

inline HcpSolveResult solve_hidden_coset_exact(const HcpInstance& inst) {
  auto pipe = detail::run_hcp_pipeline(inst);
  HcpSolveResult result;
  result.final_distribution = qsim::exact_distribution(pipe.final_state);
  const std::int64_t peak = detail::argmax_smallest(result.final_distribution);
  const std::int64_t candidate = inst.group.negate(peak);
  const std::vector<std::int64_t> h =
      detail::stabilizer_of(inst.group, inst.g);
  result.solution.subgroup = h;
  std::vector<std::int64_t> coset;
  for (const std::int64_t e : h) coset.push_back(inst.group.add(candidate, e));
  std::sort(coset.begin(), coset.end());
  result.solution.solution_set = std::move(coset);
  result.solution.representative = result.solution.solution_set.front();
  result.verified = detail::verify_hcp_candidate_full(inst, candidate);
  result.alpha = pipe.prep.success_probability;
  result.beta = pipe.beta;
  result.answer_mass =
      result.final_distribution[static_cast<std::size_t>(peak)];
  result.success_probability =
      result.alpha.to_double() * result.beta.to_double();
  return result;
}

inline HcpTrial solve_hidden_coset_trial(const HcpInstance& inst,
                                         SplitMix64& rng) {
  auto pipe = detail::run_hcp_pipeline(inst);
  HcpTrial trial;
  if (rng.next_double() >= pipe.prep.success_probability.to_double())
    return trial;
  trial.prepared = true;
  const std::int64_t measured = qsim::measure_sample(pipe.final_state, rng);
  trial.candidate = inst.group.negate(measured);
  trial.verified = true;
  for (int i = 0; i < kSpotChecks && trial.verified; ++i) {
    const std::int64_t x =
        static_cast<std::int64_t>(rng.next_below(inst.group.dim()));
    trial.verified = std::abs(inst.f(x) - inst.g(inst.group.add(
                                  x, trial.candidate))) <= oracles::kMatchTol;
  }
  return trial;
}

// ---------------------------------------------------------------------------
// Identifying the hidden subgroup
// ---------------------------------------------------------------------------

namespace detail {

// Joint kernel of the sampled character indices, by exhaustive scan with
// exact pairing arithmetic.
inline std::vector<std::int64_t> joint_kernel(
    const qsim::GroupSpec& group, const std::vector<std::int64_t>& samples) {
  std::vector<std::int64_t> kernel;
  for (std::int64_t x = 0; x < group.dim(); ++x) {
    bool in_kernel = true;
    for (const std::int64_t y : samples) {
      if (group.pairing(x, y) != CharValue::one()) {
        in_kernel = false;
        break;
      }
    }
    if (in_kernel) kernel.push_back(x);
  }
  return kernel;
}

}  // namespace detail

// Register method: superpose all inputs, compute g into a register, measure
// the register (simulated by an exact conditional collapse), transform the
// residual coset state and sample a character index. The subgroup is the
// joint kernel of the samples.
inline std::vector<std::int64_t> identify_subgroup_standard(
    const qsim::GroupSpec& group,
    const std::function<std::complex<double>(std::int64_t)>& g,
    int num_samples, SplitMix64& rng) {
  const std::int64_t dim = group.dim();
  std::map<std::pair<std::int64_t, std::int64_t>, std::vector<std::int64_t>>
      buckets;
  for (std::int64_t x = 0; x < dim; ++x) {
    const std::complex<double> v = g(x);
    buckets[{std::llround(v.real() * 1e9), std::llround(v.imag() * 1e9)}]
        .push_back(x);
  }
  std::vector<std::int64_t> samples;
  for (int round = 0; round < num_samples; ++round) {
    // Measure the register: pick a g-value with its exact probability.
    const double u = rng.next_double();
    double cum = 0.0;
    const std::vector<std::int64_t>* chosen = &buckets.begin()->second;
    for (const auto& [key, members] : buckets) {
      cum += static_cast<double>(members.size()) / static_cast<double>(dim);
      chosen = &members;
      if (u < cum) break;
    }
    std::vector<std::complex<double>> amps(static_cast<std::size_t>(dim),
                                           {0.0, 0.0});
    for (const std::int64_t x : *chosen)
      amps[static_cast<std::size_t>(x)] = {1.0, 0.0};
    const qsim::QState coset =
        qsim::dft(qsim::QState(group, std::move(amps)));
    samples.push_back(qsim::measure_sample(coset, rng));
  }
  return detail::joint_kernel(group, samples);
}

struct AmplitudeSubgroupResult {
  std::vector<std::int64_t> subgroup;
  bool promise_ok = true;  // |g-hat| constant on its support
};

// Amplitude method: encode g into the amplitudes, transform and sample; the
// samples lie in the spectral support and their joint kernel is the
// subgroup. A non-constant |g-hat| is reported, not rejected.
inline AmplitudeSubgroupResult identify_subgroup_amplitude(
    const qsim::GroupSpec& group,
    const std::function<std::complex<double>(std::int64_t)>& g,
    int num_samples, SplitMix64& rng) {
  auto prep = qsim::amplitude_encode(group, g);
  const qsim::QState spectrum = qsim::dft(prep.state);
  AmplitudeSubgroupResult result;
  double amax = 0.0;
  for (const auto& z : spectrum.amplitudes())
    amax = std::max(amax, std::abs(z));
  for (const auto& z : spectrum.amplitudes()) {
    const double a = std::abs(z);
    if (a > 1e-9 * amax && std::abs(a - amax) > 1e-8 * amax)
      result.promise_ok = false;
  }
  std::vector<std::int64_t> samples;
  for (int i = 0; i < num_samples; ++i)
    samples.push_back(qsim::measure_sample(spectrum, rng));
  result.subgroup = detail::joint_kernel(group, samples);
  return result;
}

}  // namespace charshift::shiftalgos
