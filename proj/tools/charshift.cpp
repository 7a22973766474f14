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

// Command-line driver: construct hidden shift instances, run the solvers in
// exact or sampled mode, and emit machine-readable reports. One line per
// run by default; --json switches to a flat JSON document with the same
// fields. Identical parameters, seed and version produce identical bytes;
// timing is only added under --timing because it breaks that guarantee.

#include <chrono>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "charshift/homocrypt.hpp"
#include "charshift/report.hpp"
#include "charshift/verify.hpp"
#include "charshift/version.hpp"

namespace {

using namespace charshift;
using Complex = std::complex<double>;

struct CommonOpts {
  std::uint64_t seed = 0;
  bool seed_given = false;
  bool json = false;
  bool timing = false;
};

void add_common(CLI::App* cmd, CommonOpts* c) {
  cmd->add_option("--seed", c->seed, "Master seed (default: CHARSHIFT_SEED or 0)")
      ->each([c](const std::string&) { c->seed_given = true; });
  cmd->add_flag("--json", c->json, "Emit the report as JSON");
  cmd->add_flag("--timing", c->timing,
                "Append wall time (breaks byte reproducibility)");
}

std::uint64_t resolve_seed(const CommonOpts& c) {
  if (c.seed_given) return c.seed;
  if (const char* env = std::getenv("CHARSHIFT_SEED")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0')
      throw std::domain_error("CHARSHIFT_SEED is not an integer");
    return static_cast<std::uint64_t>(v);
  }
  return 0;
}

report::RunReport base_report(const std::string& command,
                              const CommonOpts& c) {
  report::RunReport r;
  r.add("command", command);
  r.add("version", kVersion);
  r.add("schema", kReportSchema);
  r.add("seed", resolve_seed(c));
  return r;
}

// Character spec: "jacobi" / "2-torsion" for the quadratic character in
// every component, or an explicit comma-separated component index list.
ringchar::RingChar parse_ring_char(std::int64_t n, const std::string& spec) {
  if (spec == "jacobi" || spec == "2-torsion")
    return ringchar::RingChar::quadratic(n);
  std::vector<std::int64_t> indices;
  std::size_t pos = 0;
  while (pos <= spec.size()) {
    const std::size_t next = spec.find(',', pos);
    const std::string tok =
        spec.substr(pos, next == std::string::npos ? next : next - pos);
    if (tok.empty()) throw std::domain_error("bad --char component list");
    indices.push_back(std::stoll(tok));
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  return ringchar::RingChar::make(n, indices);
}

void emit(const report::RunReport& r, const CommonOpts& c,
          std::chrono::steady_clock::time_point start) {
  report::RunReport out = r;
  if (c.timing) {
    const double ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - start)
                          .count();
    out.add("wall_ms", ms);
  }
  std::fputs((c.json ? out.to_json() : out.to_line()).c_str(), stdout);
}

// ---------------------------------------------------------------------------

int run_solve_ff(std::int64_t p, int r, std::int64_t k, std::int64_t shift,
                 bool random_shift, const std::string& mode, int trials,
                 const CommonOpts& c) {
  const auto start = std::chrono::steady_clock::now();
  const std::uint64_t seed = resolve_seed(c);
  const auto ctx = finfield::field_make(p, r);
  if (random_shift)
    shift = static_cast<std::int64_t>(
        SplitMix64::stream(seed, 0xF00D).next_below(ctx->q()));
  const finfield::MultCharFF chi(ctx, k);
  const auto inst =
      shiftalgos::make_field_instance(chi, ctx->element(shift));

  auto rep = base_report("solve-ff", c);
  rep.add("p", p);
  rep.add("r", r);
  rep.add("q", ctx->q());
  rep.add("char_index", k);
  rep.add("shift", shift);
  rep.add("mode", mode);
  const double theory =
      (1.0 - 1.0 / ctx->q()) * (1.0 - 1.0 / ctx->q());

  if (mode == "exact") {
    const auto res = shiftalgos::solve_shift_ff_exact(inst);
    rep.add("solution", res.solution.solution_set);
    rep.add("subgroup", res.solution.subgroup);
    rep.add("prep_probability", res.prep_probability);
    rep.add("success_probability", res.success_probability);
    rep.add("theoretical_success", theory);
    rep.add("oracle_verified", res.verified);
    emit(rep, c, start);
    return res.verified ? 0 : 3;
  }

  int successes = 0;
  std::int64_t found = -1;
  for (int t = 0; t < trials; ++t) {
    SplitMix64 rng = SplitMix64::stream(seed, static_cast<std::uint64_t>(t));
    const auto trial = shiftalgos::solve_shift_ff_trial(inst, rng);
    if (trial.verified) {
      ++successes;
      if (found < 0) found = trial.candidate;
    }
  }
  rep.add("trials", trials);
  rep.add("successes", static_cast<std::int64_t>(successes));
  rep.add("empirical_success",
          trials > 0 ? static_cast<double>(successes) / trials : 0.0);
  rep.add("theoretical_success", theory);
  if (found >= 0) rep.add("solution", std::vector<std::int64_t>{found});
  rep.add("oracle_verified", found >= 0);
  emit(rep, c, start);
  if (found < 0)
    throw verification_error("solve-ff: no trial produced a verified shift");
  return 0;
}

int run_solve_ring(std::int64_t n, const std::string& char_spec,
                   std::int64_t shift, bool random_shift,
                   const std::string& mode, int trials, const CommonOpts& c) {
  const auto start = std::chrono::steady_clock::now();
  const std::uint64_t seed = resolve_seed(c);
  if (random_shift)
    shift = static_cast<std::int64_t>(
        SplitMix64::stream(seed, 0xF00D).next_below(n));
  const ringchar::RingChar chi = parse_ring_char(n, char_spec);
  const auto inst = shiftalgos::make_ring_instance(chi, shift);

  auto rep = base_report("solve-ring", c);
  rep.add("n", n);
  rep.add("char", char_spec);
  rep.add("shift", shift);
  rep.add("mode", mode);

  if (mode == "exact") {
    const auto res = shiftalgos::solve_shift_ring_exact(inst);
    rep.add("period", res.period);
    rep.add("solution", res.solution.solution_set);
    rep.add("subgroup", res.solution.subgroup);
    rep.add("stage1_prep", res.stage1_prep);
    rep.add("stage2_prep", res.stage2_prep);
    rep.add("success_probability", res.success_probability);
    rep.add("oracle_verified", res.verified);
    emit(rep, c, start);
    return res.verified ? 0 : 3;
  }

  int successes = 0;
  shiftalgos::RingTrial first_hit;
  for (int t = 0; t < trials; ++t) {
    SplitMix64 rng = SplitMix64::stream(seed, static_cast<std::uint64_t>(t));
    const auto trial = shiftalgos::solve_shift_ring_trial(inst, rng);
    if (trial.verified) {
      ++successes;
      if (first_hit.candidate < 0) first_hit = trial;
    }
  }
  const std::int64_t ell = chi.period();
  const double theory =
      (static_cast<double>(numtheory::euler_phi(n)) / n) *
      (static_cast<double>(numtheory::euler_phi(ell)) / ell) *
      (static_cast<double>(numtheory::euler_phi(ell)) / ell);
  rep.add("trials", trials);
  rep.add("successes", static_cast<std::int64_t>(successes));
  rep.add("empirical_success",
          trials > 0 ? static_cast<double>(successes) / trials : 0.0);
  rep.add("theoretical_success", theory);
  if (first_hit.candidate >= 0) {
    rep.add("period", first_hit.period_found);
    std::vector<std::int64_t> sol;
    for (std::int64_t t = first_hit.candidate; t < n; t += first_hit.period_found)
      sol.push_back(t);
    rep.add("solution", sol);
  }
  rep.add("oracle_verified", first_hit.candidate >= 0);
  emit(rep, c, start);
  if (first_hit.candidate < 0)
    throw verification_error("solve-ring: no trial produced a verified shift");
  return 0;
}

int run_solve_unknown(std::int64_t n, const std::string& char_spec,
                      std::int64_t shift, std::int64_t period_bound,
                      double epsilon, const CommonOpts& c) {
  const auto start = std::chrono::steady_clock::now();
  const std::uint64_t seed = resolve_seed(c);
  const ringchar::RingChar chi = parse_ring_char(n, char_spec);
  const auto family = [&char_spec](std::int64_t modulus) {
    return parse_ring_char(modulus, char_spec);
  };
  const auto inst = shiftalgos::make_unknown_instance(chi, shift, family);
  SplitMix64 rng = SplitMix64::stream(seed, 0x554e4b4e);
  const auto res =
      shiftalgos::solve_shift_unknown_n(inst, period_bound, epsilon, rng);

  auto rep = base_report("solve-unknown-n", c);
  rep.add("hidden_n", n);
  rep.add("char", char_spec);
  rep.add("shift", shift);
  rep.add("period_bound", period_bound);
  rep.add("epsilon", epsilon);
  rep.add("period", res.period);
  rep.add("representative", res.solution.representative);
  rep.add("rounds", res.rounds);
  rep.add("shift_trials", res.shift_trials);
  rep.add("oracle_verified",
          res.verified && res.solution.representative == shift % res.period);
  emit(rep, c, start);
  return 0;
}

int run_solve_hcp(const std::string& instance, const std::string& orders_csv,
                  std::int64_t n, const std::string& char_spec,
                  std::int64_t shift, const CommonOpts& c) {
  const auto start = std::chrono::steady_clock::now();
  auto rep = base_report("solve-hcp", c);
  rep.add("instance", instance);

  qsim::GroupSpec group = qsim::GroupSpec::cyclic(1);
  std::function<Complex(std::int64_t)> g;
  if (instance == "z8-flat") {
    group = qsim::GroupSpec::cyclic(8);
    g = [](std::int64_t x) -> Complex {
      static const Complex block[4] = {
          {0.0, 0.0},
          {1.0, 0.0},
          {-std::sqrt(0.5), std::sqrt(0.5)},
          {0.0, 1.0}};
      return block[x % 4];
    };
  } else if (instance == "delta") {
    std::vector<std::int64_t> orders;
    std::size_t pos = 0;
    while (pos <= orders_csv.size()) {
      const std::size_t next = orders_csv.find(',', pos);
      orders.push_back(std::stoll(orders_csv.substr(
          pos, next == std::string::npos ? next : next - pos)));
      if (next == std::string::npos) break;
      pos = next + 1;
    }
    group = qsim::GroupSpec::product(orders);
    rep.add("orders", orders);
    g = [](std::int64_t x) -> Complex {
      return x == 0 ? Complex{1.0, 0.0} : Complex{0.0, 0.0};
    };
  } else if (instance == "ring-char") {
    const ringchar::RingChar chi = parse_ring_char(n, char_spec);
    group = qsim::GroupSpec::cyclic(n);
    rep.add("n", n);
    rep.add("char", char_spec);
    g = [chi](std::int64_t x) { return chi.value(x).to_complex(); };
  } else {
    throw std::domain_error("unknown --instance (z8-flat, delta, ring-char)");
  }

  rep.add("shift", shift);
  const auto inst = shiftalgos::make_hcp_instance(group, g, shift);
  const auto res = shiftalgos::solve_hidden_coset_exact(inst);
  rep.add("alpha", res.alpha);
  rep.add("beta", res.beta);
  rep.add("solution", res.solution.solution_set);
  rep.add("subgroup", res.solution.subgroup);
  rep.add("success_probability", res.success_probability);
  rep.add("oracle_verified", res.verified);
  emit(rep, c, start);
  return res.verified ? 0 : 3;
}

int run_break_homo(std::int64_t p, std::int64_t secret, bool random_secret,
                   const std::string& mode, const CommonOpts& c) {
  const auto start = std::chrono::steady_clock::now();
  const std::uint64_t seed = resolve_seed(c);
  if (random_secret)
    secret = static_cast<std::int64_t>(
        SplitMix64::stream(seed, 0x5345435254).next_below(p));
  homocrypt::HomoOracle oracle(p, secret, seed);
  const auto report = homocrypt::break_cryptosystem(
      oracle, oracle.secret_ciphertext(),
      mode == "exact" ? homocrypt::AttackMode::kExact
                      : homocrypt::AttackMode::kSampled,
      seed);

  auto rep = base_report("break-homo", c);
  rep.add("p", p);
  rep.add("mode", mode);
  rep.add("recovered", report.recovered);
  rep.add("match", report.recovered == secret);
  rep.add("zero_test_verified", report.verified);
  rep.add("preparations", report.preparations);
  rep.add("logical_queries", report.logical_queries);
  rep.add("add_calls", report.counters.add_calls);
  rep.add("mul_calls", report.counters.mul_calls);
  rep.add("zero_calls", report.counters.zero_calls);
  rep.add("max_ops_per_point", report.max_ops_per_point);
  rep.add("setup_ops", report.setup_ops);
  emit(rep, c, start);
  return report.recovered == secret ? 0 : 3;
}

int run_gauss_table(std::int64_t p, int r, std::int64_t k, std::int64_t n,
                    const std::string& char_spec, const CommonOpts& c) {
  const auto start = std::chrono::steady_clock::now();
  auto rep = base_report("gauss-table", c);

  std::vector<Complex> hat;
  std::vector<CharValue> chi_values;
  std::int64_t dim = 0, step = 1;
  if (n > 0) {
    const ringchar::RingChar chi = parse_ring_char(n, char_spec);
    if (!chi.completely_nontrivial())
      throw std::domain_error(
          "gauss-table: character must be completely nontrivial");
    rep.add("n", n);
    rep.add("char", char_spec);
    rep.add("period", chi.period());
    dim = n;
    step = n / chi.period();
    const ringchar::RingChar prim = chi.restrict_to_period();
    chi_values.resize(static_cast<std::size_t>(chi.period()));
    for (std::int64_t z = 0; z < chi.period(); ++z)
      chi_values[static_cast<std::size_t>(z)] = prim.value(z);
    std::vector<Complex> v(static_cast<std::size_t>(n));
    for (std::int64_t x = 0; x < n; ++x)
      v[static_cast<std::size_t>(x)] = chi.value(x).to_complex();
    hat = qsim::unitary_dft(qsim::GroupSpec::cyclic(n), v);
  } else {
    const auto ctx = finfield::field_make(p, r);
    const finfield::MultCharFF chi(ctx, k);
    if (chi.trivial())
      throw std::domain_error("gauss-table: character must be nontrivial");
    rep.add("p", p);
    rep.add("r", r);
    rep.add("k", k);
    dim = ctx->q();
    chi_values.resize(static_cast<std::size_t>(dim));
    for (std::int64_t x = 0; x < dim; ++x)
      chi_values[static_cast<std::size_t>(x)] = chi.value(ctx->element(x));
    std::vector<Complex> v(static_cast<std::size_t>(dim));
    for (std::int64_t x = 0; x < dim; ++x)
      v[static_cast<std::size_t>(x)] =
          chi_values[static_cast<std::size_t>(x)].to_complex();
    hat = qsim::unitary_dft(qsim::GroupSpec::field_additive(ctx), v);
  }

  // Identity residual: off the support multiples the transform vanishes; on
  // them it is conj(chi') times the value at the first support point.
  const Complex ref = hat[static_cast<std::size_t>(step)];
  double residual = 0.0;
  for (std::int64_t y = 0; y < dim; ++y) {
    Complex expected{0.0, 0.0};
    if (y % step == 0)
      expected =
          std::conj(chi_values[static_cast<std::size_t>(y / step)].to_complex()) *
          ref;
    residual = std::max(residual,
                        std::abs(hat[static_cast<std::size_t>(y)] - expected));
    rep.add("chi_hat_" + std::to_string(y), hat[static_cast<std::size_t>(y)]);
  }
  rep.add("gauss_magnitude_error",
          std::abs(std::abs(ref) / std::sqrt(static_cast<double>(step)) - 1.0));
  rep.add("identity_residual_max", residual);
  emit(rep, c, start);
  return residual < 1e-9 ? 0 : 3;
}

int run_verify(const CommonOpts& c) {
  const std::uint64_t seed = resolve_seed(c);
  const auto reports = verify::run_verification_suite(seed);
  bool all_pass = true;
  for (const auto& r : reports) {
    report::RunReport line;
    line.add("check", r.name);
    line.add("brute_force", r.brute_force_value);
    line.add("algorithm", r.algorithm_value);
    line.add("difference", r.difference);
    line.add("pass", r.pass);
    std::fputs((c.json ? line.to_json() : line.to_line()).c_str(), stdout);
    all_pass = all_pass && r.pass;
  }
  report::RunReport summary;
  summary.add("command", "verify");
  summary.add("version", kVersion);
  summary.add("seed", seed);
  summary.add("checks", static_cast<std::int64_t>(reports.size()));
  summary.add("all_pass", all_pass);
  std::fputs((c.json ? summary.to_json() : summary.to_line()).c_str(), stdout);
  return all_pass ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hidden shift solvers over finite fields and rings, on an "
               "exactly verifiable dense simulator"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kVersion));

  CommonOpts common;

  // solve-ff
  std::int64_t ff_p = 7;
  int ff_r = 1;
  std::int64_t ff_k = 1, ff_shift = 0;
  bool ff_random_shift = false;
  std::string ff_mode = "exact";
  int ff_trials = 1;
  auto* ff = app.add_subcommand(
      "solve-ff", "Shifted multiplicative character over a finite field");
  ff->add_option("--p", ff_p, "Field characteristic (prime)")->required();
  ff->add_option("--r", ff_r, "Extension degree");
  ff->add_option("--char-index", ff_k, "Character index in [1, q-1)")
      ->required();
  auto* ff_shift_opt = ff->add_option("--shift", ff_shift, "Hidden shift");
  ff->add_flag("--random-shift", ff_random_shift, "Draw the shift from the seed")
      ->excludes(ff_shift_opt);
  ff->add_option("--mode", ff_mode, "exact|sampled")
      ->check(CLI::IsMember({"exact", "sampled"}));
  ff->add_option("--trials", ff_trials, "Sampled-mode trial count");
  add_common(ff, &common);

  // solve-ring
  std::int64_t ring_n = 15, ring_shift = 0;
  bool ring_random_shift = false;
  std::string ring_char = "jacobi", ring_mode = "exact";
  int ring_trials = 1;
  auto* ring = app.add_subcommand(
      "solve-ring", "Shifted multiplicative character over Z/nZ");
  ring->add_option("--n", ring_n, "Odd modulus >= 3")->required();
  ring->add_option("--char", ring_char,
                   "jacobi | 2-torsion | comma-separated component indices");
  auto* ring_shift_opt = ring->add_option("--shift", ring_shift, "Hidden shift");
  ring->add_flag("--random-shift", ring_random_shift,
                 "Draw the shift from the seed")
      ->excludes(ring_shift_opt);
  ring->add_option("--mode", ring_mode, "exact|sampled")
      ->check(CLI::IsMember({"exact", "sampled"}));
  ring->add_option("--trials", ring_trials, "Sampled-mode trial count");
  add_common(ring, &common);

  // solve-unknown-n
  std::int64_t un_n = 15, un_shift = 0, un_bound = 16;
  std::string un_char = "jacobi";
  double un_eps = 0.1;
  auto* un = app.add_subcommand(
      "solve-unknown-n",
      "Shifted ring character with the modulus hidden from the solver");
  un->add_option("--n", un_n, "Hidden modulus (instance construction only)")
      ->required();
  un->add_option("--char", un_char, "Character family spec");
  un->add_option("--shift", un_shift, "Hidden shift")->required();
  un->add_option("--period-bound", un_bound, "Upper bound on the period")
      ->required();
  un->add_option("--epsilon", un_eps, "Sampling accuracy in (0,1)");
  add_common(un, &common);

  // solve-hcp
  std::string hcp_instance = "z8-flat", hcp_orders = "4,4",
              hcp_char = "jacobi";
  std::int64_t hcp_n = 15, hcp_shift = 0;
  auto* hcp = app.add_subcommand("solve-hcp",
                                 "Hidden coset instance (exact mode)");
  hcp->add_option("--instance", hcp_instance, "z8-flat | delta | ring-char");
  hcp->add_option("--orders", hcp_orders, "Cyclic orders for delta instances");
  hcp->add_option("--n", hcp_n, "Modulus for ring-char instances");
  hcp->add_option("--char", hcp_char, "Character spec for ring-char instances");
  hcp->add_option("--shift", hcp_shift, "Hidden shift")->required();
  add_common(hcp, &common);

  // break-homo
  std::int64_t homo_p = 31, homo_secret = 0;
  bool homo_random_secret = false;
  std::string homo_mode = "sampled";
  auto* homo = app.add_subcommand(
      "break-homo", "Recover a secret from the homomorphic-handle oracle");
  homo->add_option("--p", homo_p, "Plaintext field prime <= 8192")->required();
  auto* homo_secret_opt =
      homo->add_option("--secret", homo_secret, "Planted secret");
  homo->add_flag("--random-secret", homo_random_secret,
                 "Draw the secret from the seed")
      ->excludes(homo_secret_opt);
  homo->add_option("--mode", homo_mode, "exact|sampled")
      ->check(CLI::IsMember({"exact", "sampled"}));
  add_common(homo, &common);

  // gauss-table
  std::int64_t gt_p = 7, gt_k = 1, gt_n = 0;
  int gt_r = 1;
  std::string gt_char = "jacobi";
  auto* gt = app.add_subcommand(
      "gauss-table", "Character spectrum and its identity residual");
  gt->add_option("--p", gt_p, "Field characteristic");
  gt->add_option("--r", gt_r, "Extension degree");
  gt->add_option("--k", gt_k, "Field character index");
  gt->add_option("--n", gt_n, "Ring modulus (selects the ring table)");
  gt->add_option("--char", gt_char, "Ring character spec");
  add_common(gt, &common);

  // verify
  auto* vf = app.add_subcommand(
      "verify", "Run the oracle cross-check suite and print one report per line");
  add_common(vf, &common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // help/version exit 0, bad parameters exit 2
  }

  try {
    if (app.got_subcommand(ff))
      return run_solve_ff(ff_p, ff_r, ff_k, ff_shift, ff_random_shift, ff_mode,
                          ff_trials, common);
    if (app.got_subcommand(ring))
      return run_solve_ring(ring_n, ring_char, ring_shift, ring_random_shift,
                            ring_mode, ring_trials, common);
    if (app.got_subcommand(un))
      return run_solve_unknown(un_n, un_char, un_shift, un_bound, un_eps,
                               common);
    if (app.got_subcommand(hcp))
      return run_solve_hcp(hcp_instance, hcp_orders, hcp_n, hcp_char,
                           hcp_shift, common);
    if (app.got_subcommand(homo))
      return run_break_homo(homo_p, homo_secret, homo_random_secret, homo_mode,
                            common);
    if (app.got_subcommand(gt))
      return run_gauss_table(gt_p, gt_r, gt_k, gt_n, gt_char, common);
    if (app.got_subcommand(vf)) return run_verify(common);
  } catch (const capacity_error& e) {
    std::fprintf(stderr, "capacity error: %s\n", e.what());
    return 4;
  } catch (const verification_error& e) {
    std::fprintf(stderr, "verification failure: %s\n", e.what());
    return 3;
  } catch (const promise_violation& e) {
    std::fprintf(stderr, "promise violation: %s\n", e.what());
    return 2;
  } catch (const std::domain_error& e) {
    std::fprintf(stderr, "parameter error: %s\n", e.what());
    return 2;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "parameter error: %s\n", e.what());
    return 2;
  }
  return 2;
}
