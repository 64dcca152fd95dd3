// Copyright 2026 The wqed Authors
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

#include "wqed/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>

#include "wqed/analytics.hpp"
#include "wqed/steady.hpp"
#include "wqed/sweep.hpp"

namespace wqed {

namespace {

constexpr double kHygieneSlack = 1e-10;

double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

CheckResult make_check(std::string name, double value, double tolerance, std::string detail) {
  return CheckResult{std::move(name), value <= tolerance, value, tolerance, std::move(detail)};
}

// Tracks every steady state seen by the suite.
struct Hygiene {
  int states = 0;
  int violations = 0;

  void record(const DensityMatrix& rho) {
    ++states;
    const double p = purity(rho);
    const double c = concurrence(rho);
    const bool in_range = p >= -kHygieneSlack && p <= 1.0 + kHygieneSlack && c >= -kHygieneSlack &&
                          c <= 1.0 + kHygieneSlack;
    if (!diagnose(rho.matrix()).ok() || !in_range) ++violations;
  }
};

// Long-time RK4 evolution from |gg>, in chunks of 1024 steps.
DensityMatrix evolve_to_stationary(const Superoperator& l, double t_final) {
  constexpr double kDt = 1e-3;
  Superoperator chunk = rk4_step_matrix(l, kDt);
  for (int i = 0; i < 10; ++i) chunk = chunk * chunk;
  const double chunk_time = 1024 * kDt;
  VecOperator v = vec(DensityMatrix::ground().matrix());
  for (double t = 0.0; t < t_final; t += chunk_time) v = chunk * v;
  return DensityMatrix::normalized(unvec(v));
}

CheckResult generator_equivalence(std::mt19937_64& rng) {
  double worst = 0.0;
  constexpr int kDraws = 50;
  for (int i = 0; i < kDraws; ++i) {
    const RandomPoint point = draw_point(rng);
    const Drive drive = Drive::from_power(i % 2 ? Port::Backward : Port::Forward, point.power);
    const Superoperator diff = build_liouvillian(point.params, drive) - build_liouvillian_jump_form(point.params, drive);
    worst = std::max(worst, diff.cwiseAbs().maxCoeff());
  }
  return make_check("generator_equivalence", worst, 1e-12, std::to_string(kDraws) + " draws, max entry difference");
}

CheckResult steady_vs_evolution(std::mt19937_64& rng, Hygiene& hygiene) {
  double worst = 0.0;
  int done = 0;
  constexpr int kDraws = 10;
  while (done < kDraws) {
    const RandomPoint point = draw_point(rng);
    const Superoperator l = build_liouvillian(point.params, Drive::from_power(Port::Forward, point.power));
    const double gap = liouvillian_gap(l);
    if (!(gap > 0.05)) continue;
    const SteadyResult steady = steady_state(l);
    if (steady.kernel_dim != 1) continue;
    hygiene.record(steady.rho);
    worst = std::max(worst, trace_distance(steady.rho, evolve_to_stationary(l, 25.0 / gap)));
    ++done;
  }
  return make_check("steady_vs_evolution", worst, 1e-6, std::to_string(kDraws) + " draws, trace distance");
}

CheckResult time_reversal(std::mt19937_64& rng) {
  double worst = 0.0;
  double literal_at_pi = 0.0;
  constexpr int kDraws = 50;
  for (int i = 0; i < kDraws; ++i) {
    RandomPoint point = draw_point(rng);
    const Drive drive = Drive::from_power(i % 2 ? Port::Backward : Port::Forward, point.power);
    worst = std::max(worst, verify_symmetries(point.params, drive).time_reversal_residual);
    point.params.phi = kPi;
    literal_at_pi = std::max(literal_at_pi, verify_symmetries(point.params, drive).time_reversal_literal_residual);
  }
  return make_check("time_reversal_identity", std::max(worst, literal_at_pi), 1e-12,
                    "conj(H) vs reversed drive, theta -> -theta");
}

CheckResult permutation_identity(std::mt19937_64& rng, Hygiene& hygiene) {
  double worst = 0.0;
  constexpr int kDraws = 20;
  for (int i = 0; i < kDraws; ++i) {
    const RandomPoint point = draw_point(rng, true);
    const Drive drive = Drive::from_power(Port::Forward, point.power);
    worst = std::max(worst, verify_symmetries(point.params, drive).worst());
    hygiene.record(steady_state(build_liouvillian(point.params, drive)).rho);
  }
  return make_check("permutation_identity", worst, 1e-10, "T^F(theta) = T^B(-theta) with symmetric detuning");
}

struct PureStateCase {
  SystemParams params;
  double power;
};

std::vector<PureStateCase> pure_state_cases(std::mt19937_64& rng) {
  std::vector<PureStateCase> cases;
  for (int i = 0; i < 8; ++i) {
    const int n = i % 2;
    const double sign = n ? -1.0 : 1.0;
    SystemParams p;
    p.phi = n * kPi;
    p.j_mag = uniform(rng, 0.3, 2.0);
    // Keep theta away from 0 and pi so J sin(theta) != 0.
    p.theta = uniform(rng, 0.2, kPi - 0.2) + (i % 4 >= 2 ? kPi : 0.0);
    p.set_symmetric_detuning(sign * p.j_mag * std::cos(p.theta));
    cases.push_back({p, uniform(rng, 0.01, 5.0)});

    SystemParams q;
    q.phi = n * kPi;
    q.j_mag = uniform(rng, 0.3, 2.0);
    q.theta = i % 4 >= 2 ? 3.0 * kPi / 2.0 : kPi / 2.0;
    q.set_antisymmetric_detuning(uniform(rng, -1.5, 1.5));
    cases.push_back({q, uniform(rng, 0.01, 5.0)});
  }
  return cases;
}

std::vector<CheckResult> pure_state_checks(std::mt19937_64& rng, Hygiene& hygiene) {
  double annihilation = 0.0, eigen = 0.0, purity_gap = 0.0, transparency = 0.0, concurrence_gap = 0.0;
  int missing = 0;
  const std::vector<PureStateCase> cases = pure_state_cases(rng);
  for (const PureStateCase& c : cases) {
    for (const Port port : {Port::Forward, Port::Backward}) {
      const Drive drive = Drive::from_power(port, c.power);
      const PureStateClassification cls = classify_pure_state(c.params, drive);
      if (!cls.exists || !cls.state) {
        ++missing;
        continue;
      }
      const StateVector& psi = *cls.state;
      const JumpOperators jumps = jump_operators(c.params.phi);
      annihilation = std::max({annihilation, (jumps.right * psi).norm(), (jumps.left * psi).norm()});
      const QOperator h = build_hamiltonian(c.params, drive);
      eigen = std::max(eigen, (h * psi - cls.energy * psi).norm());

      const DensityMatrix rho = steady_state(build_liouvillian(c.params, drive)).rho;
      hygiene.record(rho);
      purity_gap = std::max(purity_gap, std::abs(1.0 - purity(rho)));
      const PortIntensities i = port_intensities(rho, c.params, drive);
      transparency = std::max({transparency, std::abs(i.T - 1.0), std::abs(i.R)});
      concurrence_gap = std::max(concurrence_gap, std::abs(concurrence(rho) - closed_form_concurrence(c.params, drive)));
    }
  }
  const std::string detail = std::to_string(cases.size()) + " family points, both ports";
  std::vector<CheckResult> out;
  out.push_back(make_check("pure_state_classified", missing, 0.0, detail));
  out.push_back(make_check("pure_state_dark_to_both_channels", annihilation, 1e-12, detail));
  out.push_back(make_check("pure_state_eigenvector", eigen, 1e-10, detail));
  out.push_back(make_check("pure_state_purity", purity_gap, 1e-8, detail));
  out.push_back(make_check("pure_state_transparency", transparency, 1e-8, "|T - 1| and |R|"));
  out.push_back(make_check("pure_state_concurrence_closed_form", concurrence_gap, 1e-6, detail));
  return out;
}

CheckResult one_way_coupling(std::mt19937_64& rng) {
  double worst = 0.0;
  double weakest_open = std::numeric_limits<double>::infinity();
  for (int i = 0; i < 20; ++i) {
    SystemParams p;
    p.phi = uniform(rng, 0.0, kTwoPi);
    p.j_mag = p.gamma_wg;
    p.theta = wrap_angle(p.phi + kPi / 2.0);
    const DirectionalCouplings forward = directional_couplings(p);
    worst = std::max(worst, std::abs(forward.b_to_a));
    weakest_open = std::min(weakest_open, std::abs(forward.a_to_b));
    // A_ab = i J e^{-i theta} + Gamma e^{i phi} vanishes at theta = -phi - pi/2.
    p.theta = wrap_angle(-p.phi - kPi / 2.0);
    const DirectionalCouplings backward = directional_couplings(p);
    worst = std::max(worst, std::abs(backward.a_to_b));
    weakest_open = std::min(weakest_open, std::abs(backward.b_to_a));
  }
  CheckResult r = make_check("one_way_coupling", worst, 1e-12, "closed channel at theta = phi + pi/2 and -phi - pi/2");
  r.passed = r.passed && weakest_open > 0.0;
  return r;
}

CheckResult serial_parallel_agreement() {
  RunConfig config;
  config.params.set_symmetric_detuning(0.5);
  config.params.j_mag = 1.0;
  config.params.theta = 18.0 * kPi / 25.0;
  config.params.phi = 9.0 * kPi / 25.0;
  config.direction = Direction::Both;
  config.sweep = SweepAxis{SweepVariable::Power, 1e-3, 10.0, 24, SweepScale::Log, true};
  config.outputs = {Observable::T, Observable::Concurrence};
  const Table serial = run(config, 1);
  const Table parallel = run(config, 4);
  double worst = 0.0;
  for (std::size_t r = 0; r < serial.rows.size(); ++r) {
    for (std::size_t o = 0; o < serial.rows[r].observables.size(); ++o) {
      const auto& a = serial.rows[r].observables[o];
      const auto& b = parallel.rows[r].observables[o];
      worst = std::max(worst, a && b ? std::abs(*a - *b) : (a || b ? 1.0 : 0.0));
    }
  }
  return make_check("serial_parallel_agreement", worst, 0.0, "24-point sweep, 1 vs 4 workers");
}

}  // namespace

RandomPoint draw_point(std::mt19937_64& rng, bool symmetric_detuning) {
  RandomPoint point;
  SystemParams& p = point.params;
  p.j_mag = uniform(rng, 0.0, 2.0);
  p.theta = uniform(rng, 0.0, kTwoPi);
  p.phi = uniform(rng, 0.0, kTwoPi);
  p.delta_a = uniform(rng, -1.5, 1.5);
  p.delta_b = symmetric_detuning ? p.delta_a : uniform(rng, -1.5, 1.5);
  point.power = uniform(rng, 0.01, 5.0);
  return point;
}

std::vector<CheckResult> run_invariant_suite(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Hygiene hygiene;
  std::vector<CheckResult> results;
  results.push_back(generator_equivalence(rng));
  results.push_back(steady_vs_evolution(rng, hygiene));
  results.push_back(time_reversal(rng));
  results.push_back(permutation_identity(rng, hygiene));
  for (CheckResult& r : pure_state_checks(rng, hygiene)) results.push_back(std::move(r));
  results.push_back(one_way_coupling(rng));
  results.push_back(serial_parallel_agreement());
  results.push_back(make_check("density_matrix_hygiene", hygiene.violations, 0.0,
                               std::to_string(hygiene.states) + " steady states"));
  return results;
}

void print_report(std::ostream& out, const std::vector<CheckResult>& results) {
  for (const CheckResult& r : results) {
    out << (r.passed ? "PASS " : "FAIL ") << r.name << " " << format_number(r.value) << " <= "
        << format_number(r.tolerance) << " (" << r.detail << ")\n";
  }
}

}  // namespace wqed
