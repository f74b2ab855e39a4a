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

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "ks/discrepancy.hpp"
#include "ks/error.hpp"
#include "ks/kernels.hpp"
#include "ks/reductions.hpp"
#include "ks/rng.hpp"

namespace ks {

namespace {

std::vector<HermitianMatrix> rank_ones(const VectorSystem& vs) {
  std::vector<HermitianMatrix> out;
  out.reserve(vs.size());
  for (const auto& v : vs.vectors()) out.push_back(rank_one(v));
  return out;
}

// r^n, or limit + 1 once it passes limit.
std::uint64_t capped_power(std::size_t r, std::size_t n, std::uint64_t limit) {
  std::uint64_t p = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (p > limit / std::max<std::size_t>(r, 1)) return limit + 1;
    p *= r;
  }
  return p;
}

double part_max_bound(const VectorSystem& vs, std::size_t r, std::span<const std::size_t> a) {
  std::vector<HermitianMatrix> sums(r, HermitianMatrix::zero(vs.k()));
  std::vector<bool> used(r, false);
  for (std::size_t i = 0; i < a.size(); ++i) {
    sums[a[i]].add_rank_one(vs[i]);
    used[a[i]] = true;
  }
  double worst = 0.0;
  for (std::size_t j = 0; j < r; ++j)
    if (used[j]) worst = std::max(worst, max_eigenvalue(sums[j]));
  return worst;
}

}  // namespace

double signed_norm(const VectorSystem& vs, const SignVector& s) {
  if (s.signs.size() != vs.size()) throw InvalidArgument("signed_norm: length mismatch");
  HermitianMatrix sum = HermitianMatrix::zero(vs.k());
  for (std::size_t i = 0; i < vs.size(); ++i) sum.add_rank_one(vs[i], s.signs[i]);
  return opnorm(sum);
}

SignSearchOutcome exhaustive_sign_search(const VectorSystem& vs, std::size_t limit) {
  if (vs.size() > limit)
    throw BudgetExceeded("exhaustive_sign_search: n = " + std::to_string(vs.size()) +
                         " exceeds the limit " + std::to_string(limit));
  const auto terms = rank_ones(vs);
  auto r = kernels::parallel::min_signed_norm(terms);
  return SignSearchOutcome{SignVector{std::move(r.signs)}, r.value, true, r.evaluations};
}

PartitionSearchResult exhaustive_partition_search(const VectorSystem& vs, std::size_t r, double N,
                                                  std::uint64_t limit) {
  if (r == 0) throw InvalidArgument("exhaustive_partition_search: r must be >= 1");
  const std::uint64_t count = capped_power(r, vs.size(), limit);
  if (count > limit)
    throw BudgetExceeded("exhaustive_partition_search: r^n = " + std::to_string(r) + "^" +
                         std::to_string(vs.size()) + " exceeds the budget " + std::to_string(limit));
  auto best = kernels::parallel::min_assignment(
      vs.size(), r, [&](std::span<const std::size_t> a) { return part_max_bound(vs, r, a); });
  Partition p(r, std::move(best.assignment));
  return PartitionSearchResult{partition_certificate(vs, p, N), true, best.evaluations};
}

PartitionSearchResult anneal_partition_search(const VectorSystem& vs, std::size_t r, double N,
                                              std::uint64_t seed, const AnnealSchedule& schedule) {
  if (r < 2) throw InvalidArgument("anneal_partition_search: r must be >= 2");
  if (!(schedule.t_start > 0.0) || !(schedule.t_end > 0.0))
    throw InvalidArgument("anneal_partition_search: temperatures must be positive");
  const std::size_t n = vs.size();
  CounterRng rng(seed, 0);

  std::vector<std::size_t> a(n);
  for (auto& x : a) x = static_cast<std::size_t>(rng.below(r));

  std::vector<HermitianMatrix> sums(r, HermitianMatrix::zero(vs.k()));
  for (std::size_t i = 0; i < n; ++i) sums[a[i]].add_rank_one(vs[i]);
  auto part_bound = [&](const HermitianMatrix& s) { return max_eigenvalue(s); };
  std::vector<double> bounds(r);
  for (std::size_t j = 0; j < r; ++j) bounds[j] = part_bound(sums[j]);
  auto worst_of = [](const std::vector<double>& b) { return *std::max_element(b.begin(), b.end()); };

  const double scale = std::max(frame_bound(vs), 1e-300);
  double current = worst_of(bounds);
  double best_value = current;
  std::vector<std::size_t> best = a;
  std::uint64_t evaluations = 1;

  const double steps = static_cast<double>(std::max<std::uint64_t>(schedule.steps, 1));
  const double ratio = std::log(schedule.t_end / schedule.t_start);
  for (std::uint64_t step = 0; step < schedule.steps; ++step) {
    const double temperature =
        scale * schedule.t_start * std::exp(ratio * static_cast<double>(step) / steps);
    const std::size_t i = static_cast<std::size_t>(rng.below(n));
    const std::size_t from = a[i];
    std::size_t to = static_cast<std::size_t>(rng.below(r - 1));
    if (to >= from) ++to;
    const double u = rng.uniform();

    HermitianMatrix from_sum = sums[from];
    from_sum.add_rank_one(vs[i], -1.0);
    HermitianMatrix to_sum = sums[to];
    to_sum.add_rank_one(vs[i]);
    std::vector<double> trial = bounds;
    trial[from] = part_bound(from_sum);
    trial[to] = part_bound(to_sum);
    const double value = worst_of(trial);
    ++evaluations;

    const double delta = value - current;
    if (delta <= 0.0 || u < std::exp(-delta / temperature)) {
      a[i] = to;
      sums[from] = std::move(from_sum);
      sums[to] = std::move(to_sum);
      bounds = std::move(trial);
      current = value;
      if (current < best_value && !kernels::within_tie(current, best_value)) {
        best_value = current;
        best = a;
      }
    }
  }
  Partition p(r, std::move(best));
  return PartitionSearchResult{partition_certificate(vs, p, N), false, evaluations};
}

PavingSearchResult exhaustive_paving_search(const HermitianMatrix& A, std::size_t r,
                                            std::uint64_t limit) {
  if (r == 0) throw InvalidArgument("exhaustive_paving_search: r must be >= 1");
  const std::uint64_t count = capped_power(r, A.dim(), limit);
  if (count > limit)
    throw BudgetExceeded("exhaustive_paving_search: r^n = " + std::to_string(r) + "^" +
                         std::to_string(A.dim()) + " exceeds the budget " + std::to_string(limit));
  auto best = kernels::parallel::min_assignment(A.dim(), r, [&](std::span<const std::size_t> a) {
    return paving_quality(A, Partition(r, std::vector<std::size_t>(a.begin(), a.end())));
  });
  Partition p(r, std::move(best.assignment));
  return PavingSearchResult{p, best.value, true, best.evaluations};
}

SignSearchOutcome greedy_sign_descent(std::span<const HermitianMatrix> terms, std::uint64_t budget,
                                      std::uint64_t seed, double stop_at) {
  const std::size_t n = terms.size();
  if (n == 0) throw InvalidArgument("greedy_sign_descent: no terms");
  if (budget == 0) throw InvalidArgument("greedy_sign_descent: budget must be >= 1");
  const std::size_t dim = terms[0].dim();

  SignSearchOutcome best{SignVector{}, std::numeric_limits<double>::infinity(), false, 0};
  std::uint64_t spent = 0;
  for (std::uint64_t restart = 0; spent < budget; ++restart) {
    CounterRng rng(seed, restart);
    std::vector<int> s(n);
    HermitianMatrix sum = HermitianMatrix::zero(dim);
    for (std::size_t i = 0; i < n; ++i) {
      s[i] = rng.below(2) ? -1 : 1;
      sum += terms[i] * static_cast<double>(s[i]);
    }
    double value = opnorm(sum);
    ++spent;
    bool improved = true;
    while (improved && spent < budget && value > stop_at) {
      improved = false;
      double best_flip = value;
      std::size_t flip = n;
      HermitianMatrix flip_sum = sum;
      for (std::size_t i = 0; i < n && spent < budget; ++i) {
        HermitianMatrix trial = sum + terms[i] * (-2.0 * s[i]);
        const double v = opnorm(trial);
        ++spent;
        if (v < best_flip && !kernels::within_tie(v, best_flip)) {
          best_flip = v;
          flip = i;
          flip_sum = std::move(trial);
        }
      }
      if (flip < n) {
        s[flip] = -s[flip];
        sum = std::move(flip_sum);
        value = best_flip;
        improved = true;
      }
    }
    // The global flip has the same value; report the representative with s_1 = +1.
    if (s[0] < 0)
      for (int& x : s) x = -x;
    if (value < best.value && !kernels::within_tie(value, best.value)) {
      best.value = value;
      best.signs = SignVector{s};
    }
    if (best.value <= stop_at) break;
  }
  best.evaluations = spent;
  return best;
}

BanaszczykContext gaussian_median_radius(std::size_t k, std::size_t samples, std::uint64_t seed) {
  if (k == 0) throw InvalidArgument("gaussian_median_radius: k must be >= 1");
  if (samples < 1000) throw InvalidArgument("gaussian_median_radius: needs at least 1000 samples");
  std::vector<double> norms = kernels::parallel::gaussian_opnorms(k, samples, seed);
  const std::size_t mid = samples / 2;
  std::nth_element(norms.begin(), norms.begin() + static_cast<std::ptrdiff_t>(mid), norms.end());
  double median = norms[mid];
  if (samples % 2 == 0) {
    const double below = *std::max_element(norms.begin(), norms.begin() + static_cast<std::ptrdiff_t>(mid));
    median = 0.5 * (median + below);
  }
  return BanaszczykContext{k, median, 5.0 * median, samples, seed};
}

BalancingResult banaszczyk_sign_search(std::span<const HermitianMatrix> terms, double M,
                                       std::uint64_t budget, std::uint64_t seed) {
  if (terms.empty()) throw InvalidArgument("banaszczyk_sign_search: no matrices");
  for (std::size_t i = 0; i < terms.size(); ++i)
    if (terms[i].frobenius_norm() > 0.2 + 1e-12)
      throw InvalidArgument("banaszczyk_sign_search: ||B_" + std::to_string(i) +
                            "||_2 exceeds 1/5");
  if (terms.size() <= 20) {
    auto r = kernels::parallel::min_signed_norm(terms);
    const bool ok = r.value <= M;
    return BalancingResult{SignVector{std::move(r.signs)}, r.value, ok, true, r.evaluations};
  }
  auto g = greedy_sign_descent(terms, budget, seed, M);
  return BalancingResult{std::move(g.signs), g.value, g.value <= M, false, g.evaluations};
}

}  // namespace ks
