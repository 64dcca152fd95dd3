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

#include <benchmark/benchmark.h>

#include "wqed/observables.hpp"
#include "wqed/operators.hpp"
#include "wqed/steady.hpp"
#include "wqed/sweep.hpp"

namespace wqed {
namespace {

SystemParams dmi_params() {
  SystemParams p;
  p.set_symmetric_detuning(0.5);
  p.j_mag = 1.0;
  p.theta = 18.0 * kPi / 25.0;
  p.phi = 9.0 * kPi / 25.0;
  return p;
}

void BM_BuildLiouvillian(benchmark::State& state) {
  const SystemParams p = dmi_params();
  const Drive d = Drive::from_power(Port::Forward, 0.35);
  for (auto _ : state) benchmark::DoNotOptimize(build_liouvillian(p, d));
}
BENCHMARK(BM_BuildLiouvillian);

void BM_SteadyState(benchmark::State& state) {
  const Superoperator l = build_liouvillian(dmi_params(), Drive::from_power(Port::Forward, 0.35));
  for (auto _ : state) benchmark::DoNotOptimize(steady_state(l));
}
BENCHMARK(BM_SteadyState);

// J = 0, phi = pi has a two-dimensional kernel and falls back to evolution.
void BM_SteadyStateDegenerate(benchmark::State& state) {
  SystemParams p;
  p.phi = kPi;
  const Superoperator l = build_liouvillian(p, Drive::from_power(Port::Forward, 1.0));
  for (auto _ : state) benchmark::DoNotOptimize(steady_state(l));
}
BENCHMARK(BM_SteadyStateDegenerate)->Unit(benchmark::kMillisecond);

void BM_Concurrence(benchmark::State& state) {
  const SystemParams p = dmi_params();
  const DensityMatrix rho = steady_state(build_liouvillian(p, Drive::from_power(Port::Forward, 1.0))).rho;
  for (auto _ : state) benchmark::DoNotOptimize(concurrence(rho));
}
BENCHMARK(BM_Concurrence);

void BM_PowerSweep(benchmark::State& state) {
  RunConfig c;
  c.params = dmi_params();
  c.direction = Direction::Both;
  c.outputs = {Observable::T_c, Observable::T_inc, Observable::Concurrence, Observable::G2_R};
  c.sweep = SweepAxis{SweepVariable::Power, 1e-3, 10.0, static_cast<int>(state.range(0)), SweepScale::Log};
  for (auto _ : state) benchmark::DoNotOptimize(run(c, 1));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_PowerSweep)->Arg(200)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace wqed

BENCHMARK_MAIN();
