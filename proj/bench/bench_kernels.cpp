// Copyright 2026 The Authors.
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


// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include <vector>

#include "ks/counterexample.hpp"
#include "ks/kernels.hpp"

namespace {

using namespace ks;

std::vector<HermitianMatrix> weaver_terms(int k) {
  const auto w = counterexample::make_instance(k);
  std::vector<HermitianMatrix> terms;
  for (const auto& v : w.normalized.vectors()) terms.push_back(rank_one(v));
  return terms;
}

template <auto Kernel>
void signs(benchmark::State& state) {
  const auto terms = weaver_terms(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(terms));
}

// Opnorm of the part sums over the 8 vectors of the k = 9 instance.
kernels::AssignmentObjective part_norm_objective(std::size_t r) {
  static const auto terms = weaver_terms(9);
  return [r](std::span<const std::size_t> a) {
    std::vector<HermitianMatrix> parts(r, HermitianMatrix::zero(terms.front().dim()));
    for (std::size_t i = 0; i < a.size(); ++i) parts[a[i]] = parts[a[i]] + terms[i];
    double worst = 0.0;
    for (const auto& p : parts) worst = std::max(worst, opnorm(p));
    return worst;
  };
}

template <auto Kernel>
void assignment(benchmark::State& state) {
  const auto r = static_cast<std::size_t>(state.range(0));
  const auto objective = part_norm_objective(r);
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(8, r, objective));
}

template <auto Kernel>
void quadratic_form(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const HermitianMatrix h = kernels::gaussian_hermitian(4, 1, 0);
  std::vector<ComplexVector> points;
  for (std::size_t i = 0; i < n; ++i) {
    const HermitianMatrix g = kernels::gaussian_hermitian(4, 2, i);
    points.push_back(eigensystem(g).eigenvectors.back());
  }
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(h, points));
}

template <auto Kernel>
void gaussian(benchmark::State& state) {
  const auto samples = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(3, samples, 7));
}

}  // namespace

BENCHMARK(signs<kernels::serial::min_signed_norm>)->Name("min_signed_norm/serial")->Arg(10)->Arg(13)->Unit(benchmark::kMillisecond);
BENCHMARK(signs<kernels::parallel::min_signed_norm>)->Name("min_signed_norm/parallel")->Arg(10)->Arg(13)->Unit(benchmark::kMillisecond);
BENCHMARK(assignment<kernels::serial::min_assignment>)->Name("min_assignment/serial")->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK(assignment<kernels::parallel::min_assignment>)->Name("min_assignment/parallel")->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK(quadratic_form<kernels::serial::max_quadratic_form>)->Name("max_quadratic_form/serial")->Arg(1 << 16)->Unit(benchmark::kMillisecond);
BENCHMARK(quadratic_form<kernels::parallel::max_quadratic_form>)->Name("max_quadratic_form/parallel")->Arg(1 << 16)->Unit(benchmark::kMillisecond);
BENCHMARK(gaussian<kernels::serial::gaussian_opnorms>)->Name("gaussian_opnorms/serial")->Arg(20000)->Unit(benchmark::kMillisecond);
BENCHMARK(gaussian<kernels::parallel::gaussian_opnorms>)->Name("gaussian_opnorms/parallel")->Arg(20000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
