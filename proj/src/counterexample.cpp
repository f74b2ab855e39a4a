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

#include "ks/counterexample.hpp"

#include <cmath>
#include <string>

#include "ks/discrepancy.hpp"
#include "ks/error.hpp"
#include "ks/kernels.hpp"

namespace ks::counterexample {

namespace {

void require_k(int k) {
  if (k < 5) throw InvalidArgument("counterexample: k must be >= 5 (got " + std::to_string(k) + ")");
}

}  // namespace

Instance make_instance(int k) {
  require_k(k);
  const double km1 = static_cast<double>(k - 1);
  const double alpha = std::pow(km1, -1.5);
  const double beta = std::pow(km1, -0.5);
  const double delta = (2.0 * k - 3.0) / (km1 * km1);
  const std::size_t dim = static_cast<std::size_t>(k);

  std::vector<ComplexVector> primed, normalized;
  const double root = std::sqrt(delta);
  for (std::size_t i = 0; i + 1 < dim; ++i) {
    std::vector<Complex> v(dim, Complex(-alpha));
    v[i] = (k - 2) * alpha;
    v[dim - 1] = beta;
    std::vector<Complex> u(v);
    for (auto& z : u) z /= root;
    primed.emplace_back(std::move(v));
    normalized.emplace_back(std::move(u));
  }
  return Instance{k,     alpha, beta, delta, 1.0 / delta, VectorSystem(dim, std::move(primed)),
                  VectorSystem(dim, std::move(normalized))};
}

double signed_lower_bound(int k) {
  require_k(k);
  const double km1 = k - 1.0;
  const double delta = (2.0 * k - 3.0) / (km1 * km1);
  return 1.0 / (delta * std::sqrt(km1));
}

double center_distance_closed_form(int k, std::size_t c) {
  const double km1 = k - 1.0;
  const double x = static_cast<double>(c);
  const double t = x / km1 - 0.5;
  return std::sqrt(x * (km1 - x) / (km1 * km1 * km1) + t * t);
}

CenterDistance subset_center_distance(const Instance& w, std::span<const std::size_t> subset) {
  const std::size_t dim = static_cast<std::size_t>(w.k);
  HermitianMatrix sum = HermitianMatrix::zero(dim);
  std::vector<bool> seen(dim - 1, false);
  for (std::size_t i : subset) {
    if (i + 1 >= dim) throw InvalidArgument("subset_center_distance: index out of range");
    if (seen[i]) throw InvalidArgument("subset_center_distance: repeated index");
    seen[i] = true;
    sum.add_rank_one(w.primed[i]);
  }
  const ComplexVector ek = ComplexVector::basis(dim, dim - 1);
  const double direct = (sum.apply(ek) - ek * 0.5).norm();
  return CenterDistance{direct, center_distance_closed_form(w.k, subset.size())};
}

VerificationReport frame_identity_check(const Instance& w) {
  const std::size_t dim = static_cast<std::size_t>(w.k);
  const ComplexVector ek = ComplexVector::basis(dim, dim - 1);
  const double image_residual = (frame_operator(w.primed).apply(ek) - ek).norm();
  const double top = frame_bound(w.normalized);

  VerificationReport r;
  r.command = "frame-identity";
  r.claims.push_back(Claim::make("primed_frame_operator_fixes_e_k", image_residual,
                                 Relation::kLessEqual, 0.0, 1e-10));
  r.claims.push_back(Claim::make("normalized_frame_bound_equals_inverse_delta", top,
                                 Relation::kEqual, w.N, 1e-9));
  r.details = {{"k", w.k}, {"frame_bound", top}, {"N", w.N}};
  return r;
}

VerificationReport verify_counterexample(const Instance& w, Mode mode, std::uint64_t budget,
                                         std::uint64_t seed) {
  std::vector<HermitianMatrix> terms;
  for (const auto& v : w.normalized.vectors()) terms.push_back(rank_one(v));
  const double lower = signed_lower_bound(w.k);

  VerificationReport r;
  r.command = "signed-lower-bound";
  r.seed = seed;
  r.budget = budget;
  SignSearchOutcome found;
  if (mode == Mode::kExhaustive) {
    if (w.k > kMaxExhaustiveK)
      throw BudgetExceeded("verify_counterexample: exhaustive mode is limited to k <= " +
                           std::to_string(kMaxExhaustiveK));
    auto best = kernels::parallel::min_signed_norm(terms);
    found = SignSearchOutcome{SignVector{std::move(best.signs)}, best.value, true, best.evaluations};
    r.claims.push_back(Claim::make("min_signed_norm_above_lower_bound", found.value,
                                   Relation::kGreaterEqual, lower, 1e-9));
  } else {
    found = greedy_sign_descent(terms, budget, seed);
    r.claims.push_back(Claim::make("heuristic_signed_norm_above_lower_bound", found.value,
                                   Relation::kGreaterEqual, lower, 1e-9));
  }
  r.details = {{"k", w.k},
               {"mode", mode == Mode::kExhaustive ? "exhaustive" : "heuristic"},
               {"exact", found.exact},
               {"min_signed_norm", found.value},
               {"lower_bound", lower},
               {"signs", found.signs.signs},
               {"evaluations", found.evaluations}};
  return r;
}

BalancingWitness balancing_witness(int k) {
  const Instance w = make_instance(k);
  BalancingWitness out{k, {}, signed_lower_bound(k), 0.0};
  for (const auto& v : w.normalized.vectors()) out.matrices.push_back(rank_one(v));
  out.ratio_to_sqrt_k = out.lower_bound / std::sqrt(static_cast<double>(k));
  return out;
}

}  // namespace ks::counterexample
