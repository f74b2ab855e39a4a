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


#include <cmath>
#include <variant>

#include "doctest.h"
#include "ks/counterexample.hpp"
#include "ks/discrepancy.hpp"
#include "ks/error.hpp"
#include "support.hpp"

using namespace ks;

namespace {

VectorSystem basis(std::size_t k, std::size_t copies = 1) {
  std::vector<ComplexVector> vs;
  for (std::size_t c = 0; c < copies; ++c)
    for (std::size_t i = 0; i < k; ++i) vs.push_back(ComplexVector::basis(k, i));
  return VectorSystem(k, std::move(vs));
}

CoordinateProfile random_profile(std::size_t n, std::size_t k, CounterRng& rng) {
  CoordinateProfile cp{k, {}};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<double> a(k);
    double total = 0.0;
    for (auto& x : a) {
      x = rng.uniform() < 0.5 ? 0.0 : rng.uniform();
      total += x;
    }
    const double target = rng.uniform();
    if (total > 0)
      for (auto& x : a) x *= target / total;
    cp.a.push_back(std::move(a));
  }
  return cp;
}

std::vector<HermitianMatrix> rank_ones(const VectorSystem& vs, double weight = 1.0) {
  std::vector<HermitianMatrix> out;
  for (const auto& v : vs.vectors()) out.push_back(rank_one(v) * weight);
  return out;
}

// independent brute force straight from the definition
double brute_min_signed(const VectorSystem& vs) {
  double best = 1e300;
  const std::size_t n = vs.size();
  for (std::uint64_t p = 0; p < (std::uint64_t{1} << n); ++p) {
    HermitianMatrix sum = HermitianMatrix::zero(vs.k());
    for (std::size_t i = 0; i < n; ++i) sum.add_rank_one(vs[i], ((p >> i) & 1u) ? -1.0 : 1.0);
    best = std::min(best, ks::testing::lapack_opnorm(sum));
  }
  return best;
}

}  // namespace

TEST_CASE("coordinate profile") {
  auto cp = coordinate_profile(VectorSystem(2, {ComplexVector::basis(2, 0)}));
  CHECK(cp.a[0] == std::vector<double>{1.0, 0.0});
  const double s = 1.0 / std::sqrt(2.0);
  cp = coordinate_profile(VectorSystem(2, {ComplexVector{s, Complex(0, s)}}));
  CHECK(cp.a[0][0] == doctest::Approx(0.5));
  CHECK(cp.a[0][1] == doctest::Approx(0.5));

  const auto w = counterexample::make_instance(5);
  cp = coordinate_profile(w.primed);
  const std::vector<double> expect{0.140625, 0.015625, 0.015625, 0.015625, 0.25};
  for (std::size_t j = 0; j < 5; ++j) CHECK(std::abs(cp.a[0][j] - expect[j]) <= 1e-15);

  CHECK_THROWS_AS(coordinate_profile(VectorSystem(1, {ComplexVector{1.1}})), InvalidArgument);
}

TEST_CASE("Beck-Fiala signing") {
  CoordinateProfile one{1, {{1.0}}};
  auto s = beck_fiala_signs(one);
  REQUIRE(s.signs.size() == 1);
  CHECK(std::abs(s.signs[0]) == 1);
  CHECK(linf_discrepancy(one, s) == 1.0);

  CoordinateProfile twin{1, {{1.0}, {1.0}}};
  s = beck_fiala_signs(twin);
  CHECK(linf_discrepancy(twin, s) <= 2.0);

  CounterRng rng(47, 0);
  for (int trial = 0; trial < 200; ++trial) {
    const auto cp = random_profile(1 + rng.below(50), 1 + rng.below(50), rng);
    const auto signs = beck_fiala_signs(cp);
    REQUIRE(signs.signs.size() == cp.a.size());
    for (int x : signs.signs) CHECK((x == 1 || x == -1));
    CHECK(linf_discrepancy(cp, signs) <= 2.0 + 1e-9);
    CHECK(signs == beck_fiala_signs(cp));
  }

  // profiles from actual vectors
  for (int trial = 0; trial < 50; ++trial) {
    const auto vs = ks::testing::random_system(1 + trial % 6, 1 + trial % 17, 1.0, rng);
    const auto cp = coordinate_profile(vs);
    CHECK(linf_discrepancy(cp, beck_fiala_signs(cp)) <= 2.0 + 1e-9);
  }
}

TEST_CASE("exhaustive sign search") {
  auto r = exhaustive_sign_search(VectorSystem(1, {ComplexVector{1.0}, ComplexVector{1.0}}));
  CHECK(r.value == 0.0);
  CHECK(r.signs.signs == std::vector<int>{1, -1});
  CHECK(r.exact);

  r = exhaustive_sign_search(basis(2));
  CHECK(r.value == doctest::Approx(1.0));
  CHECK(r.signs.signs == std::vector<int>{1, 1});

  const auto w = counterexample::make_instance(5);
  r = exhaustive_sign_search(w.normalized);
  CHECK(r.value >= 8.0 / 7.0 - 1e-9);
  CHECK(r.value == doctest::Approx(1.1428571428571426).epsilon(1e-12));
  CHECK(std::abs(r.value - brute_min_signed(w.normalized)) <= 1e-12);
  CHECK(r.signs.signs == std::vector<int>{1, 1, -1, -1});

  std::vector<ComplexVector> many(25, ComplexVector{1.0});
  CHECK_THROWS_AS(exhaustive_sign_search(VectorSystem(1, many)), BudgetExceeded);
}

TEST_CASE("sign search oracle values for the counterexample family") {
  const auto w6 = counterexample::make_instance(6);
  const auto r6 = exhaustive_sign_search(w6.normalized);
  CHECK(r6.value == doctest::Approx(1.4842018546222822).epsilon(1e-10));
  CHECK(r6.signs.signs == std::vector<int>{1, 1, 1, -1, -1});
  const auto w7 = counterexample::make_instance(7);
  const auto r7 = exhaustive_sign_search(w7.normalized);
  CHECK(r7.value == doctest::Approx(1.33608531424537).epsilon(1e-10));
  CHECK(r7.signs.signs == std::vector<int>{1, 1, 1, -1, -1, -1});
}

TEST_CASE("sign search invariances") {
  CounterRng rng(53, 0);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t k = 2 + trial % 3, n = 3 + trial % 8;
    const auto vs = ks::testing::random_system(k, n, 1.0, rng);
    const auto r = exhaustive_sign_search(vs);
    CHECK(r.signs.signs[0] == 1);
    CHECK(std::abs(r.value - brute_min_signed(vs)) <= 1e-10);
    CHECK(std::abs(signed_norm(vs, r.signs) - r.value) <= 1e-10);
    SignVector flipped = r.signs;
    for (int& x : flipped.signs) x = -x;
    CHECK(std::abs(signed_norm(vs, flipped) - r.value) <= 1e-12);

    const auto u = ks::testing::random_unitary(k, rng);
    std::vector<ComplexVector> rotated;
    for (const auto& v : vs.vectors()) rotated.push_back(ks::testing::apply_unitary(u, v));
    const auto rr = exhaustive_sign_search(VectorSystem(k, rotated));
    CHECK(std::abs(rr.value - r.value) <= 1e-9);
  }
}

TEST_CASE("exhaustive partition search") {
  auto p = exhaustive_partition_search(basis(2), 2, 1.0);
  CHECK(p.optimal);
  // both parts of {e1, e2} and the single part tie at 1; lexicographic order keeps (1, 1)
  CHECK(p.certificate.partition == Partition(2, {0, 0}));
  CHECK(p.certificate.max_bound() == doctest::Approx(1.0));
  CHECK(p.certificate.slack == doctest::Approx(0.0));

  p = exhaustive_partition_search(basis(3, 2), 2, 2.0);
  CHECK(p.certificate.max_bound() == doctest::Approx(1.0));
  CHECK(p.certificate.slack == doctest::Approx(1.0));

  const auto w = counterexample::make_instance(5);
  p = exhaustive_partition_search(w.normalized, 2, w.N);
  CHECK(p.certificate.max_bound() == doctest::Approx(10.0 / 7.0).epsilon(1e-12));
  CHECK(p.certificate.partition == Partition(2, {0, 0, 1, 1}));
  CHECK(p.certificate.slack <= w.N - counterexample::signed_lower_bound(5) + 1e-9);

  std::vector<ComplexVector> many(25, ComplexVector{1.0});
  CHECK_THROWS_AS(exhaustive_partition_search(VectorSystem(1, many), 2, 25.0), BudgetExceeded);
}

TEST_CASE("partition optimum sits between the signed-sum bounds") {
  // sum_X A = (S + T)/2 with T the signed sum, so by Weyl
  // (lambda_min(S) + min|T|)/2 <= optimum <= (lambda_max(S) + min|T|)/2.
  CounterRng rng(59, 0);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t k = 1 + trial % 3, n = 2 + trial % 11;
    const auto vs = ks::testing::random_system(k, n, 1.0, rng);
    const auto ev = eigenvalues(frame_operator(vs));
    const double t = exhaustive_sign_search(vs).value;
    const double opt = exhaustive_partition_search(vs, 2, ev.back()).certificate.max_bound();
    CHECK(opt >= (ev.front() + t) / 2 - 1e-9);
    CHECK(opt <= (ev.back() + t) / 2 + 1e-9);
  }
  for (int k = 5; k <= 9; ++k) {
    const auto w = counterexample::make_instance(k);
    const double lb = counterexample::signed_lower_bound(k);
    const double opt =
        exhaustive_partition_search(w.normalized, 2, w.N).certificate.max_bound();
    CHECK(opt >= lb - 1e-9);
    CHECK(opt <= (w.N + exhaustive_sign_search(w.normalized).value) / 2 + 1e-9);
  }
}

TEST_CASE("annealing") {
  const auto two = basis(3, 2);
  const auto a = anneal_partition_search(two, 2, 2.0, 7);
  CHECK_FALSE(a.optimal);
  CHECK(a.certificate.slack == doctest::Approx(1.0));

  const auto again = anneal_partition_search(two, 2, 2.0, 7);
  CHECK(again.certificate.partition == a.certificate.partition);
  CHECK(again.certificate.per_part_bound == a.certificate.per_part_bound);

  CHECK_THROWS_AS(anneal_partition_search(two, 1, 2.0, 7), InvalidArgument);

  CounterRng rng(61, 0);
  for (int trial = 0; trial < 8; ++trial) {
    const std::size_t n = 4 + trial;
    const auto vs = ks::testing::random_system(2, n, 1.0, rng);
    const double N = frame_bound(vs);
    const auto exact = exhaustive_partition_search(vs, 2, N);
    AnnealSchedule quick;
    quick.steps = 2000;
    const auto heur = anneal_partition_search(vs, 2, N, 100 + trial, quick);
    CHECK(heur.certificate.max_bound() >= exact.certificate.max_bound() - 1e-12);

    // never worse than its own starting point
    AnnealSchedule none;
    none.steps = 0;
    const auto start = anneal_partition_search(vs, 2, N, 100 + trial, none);
    CHECK(heur.certificate.max_bound() <= start.certificate.max_bound() + 1e-12);
  }
}

TEST_CASE("paving search") {
  const auto flip = HermitianMatrix::from_entries(2, {0, 1, 1, 0});
  const auto best = exhaustive_paving_search(flip, 2);
  CHECK(best.quality == 0.0);
  CHECK(best.partition == Partition(2, {0, 1}));
}

TEST_CASE("numerical rank") {
  const auto b = basis(3, 2);
  CHECK(numerical_rank(b.vectors()) == 3);
  const std::vector<ComplexVector> dependent{ComplexVector{1.0, 2.0}, ComplexVector{Complex(0, 2), Complex(0, 4)}};
  CHECK(numerical_rank(dependent) == 1);
  const std::vector<ComplexVector> zero{ComplexVector::zero(3)};
  CHECK(numerical_rank(zero) == 0);
}

TEST_CASE("matroid spanning partition") {
  auto result = matroid_spanning_partition(basis(3, 2), 2);
  REQUIRE(std::holds_alternative<Partition>(result));
  const auto& p = std::get<Partition>(result);
  const auto b = basis(3, 2);
  for (const auto& part : p.members()) CHECK(numerical_rank(b.select(part).vectors()) == 3);

  result = matroid_spanning_partition(VectorSystem(2, {ComplexVector::basis(2, 0)}), 2);
  REQUIRE(std::holds_alternative<ViolatingSet>(result));
  const auto& x = std::get<ViolatingSet>(result);
  CHECK(2 * (2 - x.complement_rank) > x.indices.size());

  // completed counterexample system rescaled to an integer tight frame
  const auto w = counterexample::make_instance(5);
  const double N = std::ceil(w.N);
  const auto tight = complete_to_tight(scale_system(w.normalized, std::sqrt(N / w.N)), N, 1.0);
  result = matroid_spanning_partition(tight.system, 2);
  REQUIRE(std::holds_alternative<Partition>(result));
  for (const auto& part : std::get<Partition>(result).members())
    CHECK(numerical_rank(tight.system.select(part).vectors()) == 5);

  CounterRng rng(67, 0);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t k = 2 + trial % 4, copies = 2 + trial % 2;
    const auto sys = ks::testing::rotated_basis_copies(k, copies, rng);
    const auto out = matroid_spanning_partition(sys, copies);
    REQUIRE(std::holds_alternative<Partition>(out));
    for (const auto& part : std::get<Partition>(out).members())
      CHECK(numerical_rank(sys.select(part).vectors()) == k);

    // drop one vector: copies spanning parts need copies * k vectors
    std::vector<std::size_t> keep;
    for (std::size_t i = 1; i < sys.size(); ++i) keep.push_back(i);
    const auto short_sys = sys.select(keep);
    const auto fail = matroid_spanning_partition(short_sys, copies);
    REQUIRE(std::holds_alternative<ViolatingSet>(fail));
    const auto& v = std::get<ViolatingSet>(fail);
    std::vector<std::size_t> rest;
    for (std::size_t i = 0, j = 0; i < short_sys.size(); ++i) {
      if (j < v.indices.size() && v.indices[j] == i) {
        ++j;
        continue;
      }
      rest.push_back(i);
    }
    const std::size_t d = rest.empty() ? 0 : numerical_rank(short_sys.select(rest).vectors());
    CHECK(d == v.complement_rank);
    CHECK(copies * (k - d) > v.indices.size());
  }
}

TEST_CASE("Gaussian median radius") {
  const auto a = gaussian_median_radius(1, 200000, 5);
  CHECK(std::abs(a.R_hat - 0.67449) <= 0.01);
  CHECK(a.M == 5.0 * a.R_hat);
  CHECK(gaussian_median_radius(1, 200000, 5).R_hat == a.R_hat);
  for (std::uint64_t seed : {1u, 2u})
    CHECK(gaussian_median_radius(2, 20000, seed).R_hat > gaussian_median_radius(1, 20000, seed).R_hat);
  CHECK_THROWS_AS(gaussian_median_radius(1, 999, 0), InvalidArgument);
}

TEST_CASE("Banaszczyk sign search") {
  const auto ctx = gaussian_median_radius(2, 20000, 3);
  const VectorSystem single(2, {ComplexVector{0.6, 0.8}});
  auto r = banaszczyk_sign_search(rank_ones(single, 0.2), ctx.M, 1000, 1);
  CHECK(r.success);
  CHECK(r.value == doctest::Approx(0.2));

  const VectorSystem pair(2, {ComplexVector{0.6, 0.8}, ComplexVector{0.6, 0.8}});
  r = banaszczyk_sign_search(rank_ones(pair, 0.2), ctx.M, 1000, 1);
  CHECK(r.value == 0.0);
  CHECK(r.signs.signs == std::vector<int>{1, -1});
  CHECK(r.exhaustive);

  CHECK_THROWS_AS(banaszczyk_sign_search(rank_ones(single, 0.3), ctx.M, 1000, 1), InvalidArgument);

  CounterRng rng(71, 0);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t k = 1 + trial % 3;
    const auto sys = ks::testing::random_system(k, 25, 1.0, rng);
    const auto c = gaussian_median_radius(k, 2000, trial);
    const auto g = banaszczyk_sign_search(rank_ones(sys, 0.2), c.M, 5000, trial);
    CHECK_FALSE(g.exhaustive);
    CHECK(g.success);
    CHECK(std::abs(signed_norm(sys, g.signs) * 0.2 - g.value) <= 1e-12);
    CHECK(g.evaluations <= 5000);
  }
}

TEST_CASE("greedy descent") {
  const auto w = counterexample::make_instance(8);
  const auto terms = rank_ones(w.normalized);
  const auto g = greedy_sign_descent(terms, 500, 9);
  CHECK(g.signs.signs[0] == 1);
  CHECK_FALSE(g.exact);
  CHECK(g.value >= exhaustive_sign_search(w.normalized).value - 1e-12);
  CHECK(std::abs(signed_norm(w.normalized, g.signs) - g.value) <= 1e-12);
  const auto again = greedy_sign_descent(terms, 500, 9);
  CHECK(again.signs == g.signs);
  CHECK(again.value == g.value);
}

TEST_CASE("epsilon nets") {
  auto net = build_epsilon_net(1, 0.1, 0);
  REQUIRE(net.points.size() == 1);
  CHECK(net.points[0][0] == Complex(1.0));
  CHECK(net.certified);

  net = build_epsilon_net(2, 0.1, 0);
  CHECK(net.certified);
  CHECK(net.points.size() == epsilon_net_size(2, 0.1));
  for (const auto& p : net.points) {
    CHECK(std::abs(p.norm() - 1.0) <= 1e-12);
    CHECK(p[0].imag() == 0.0);
    CHECK(p[0].real() >= 0.0);
  }
  CHECK(empirical_covering_radius(net, 10000, 3) <= 0.1);

  const auto net3 = build_epsilon_net(3, 1.0, 4);
  CHECK_FALSE(net3.certified);
  for (const auto& p : net3.points) CHECK(std::abs(p.norm() - 1.0) <= 1e-12);

  CHECK_THROWS_AS(build_epsilon_net(4, 0.01, 0), BudgetExceeded);
  CHECK_THROWS_AS(build_epsilon_net(2, 0.0, 0), InvalidArgument);

  const auto z = phase_normalize(ComplexVector{Complex(0), Complex(0, -2), Complex(1, 1)});
  CHECK(z[1] == Complex(2.0));
  CHECK(std::abs(z[2] - Complex(1, 1) * Complex(0, 1)) <= 1e-15);
}

TEST_CASE("net certified bound") {
  const auto net1 = build_epsilon_net(1, 0.05, 0);
  const VectorSystem one(1, {ComplexVector{1.0}});
  const std::vector<std::size_t> all{0};
  auto b = net_certified_bound(one, all, net1, 1.0);
  CHECK(b.net_max == doctest::Approx(1.0));

  b = net_certified_bound(one, {}, net1, 1.0);
  CHECK(b.net_max == 0.0);
  CHECK(b.certified_sup_bound == doctest::Approx(2.0 * 0.05));

  const auto net2 = build_epsilon_net(2, 0.02, 0);
  CHECK_THROWS_AS(net_certified_bound(one, all, net2, 1.0), InvalidArgument);

  CounterRng rng(73, 0);
  for (int trial = 0; trial < 20; ++trial) {
    const auto vs = ks::testing::random_system(2, 2 + trial % 6, 1.0, rng);
    const double N = frame_bound(vs);
    std::vector<std::size_t> x;
    for (std::size_t i = 0; i < vs.size(); ++i)
      if (rng.below(2)) x.push_back(i);
    const double eps = 0.1;
    const auto net = build_epsilon_net(2, eps / (4 * N), 0);
    const auto nb = net_certified_bound(vs, x, net, N);
    const double exact = subset_frame_bound(vs, x);
    CHECK(nb.net_max <= exact + 1e-12);
    CHECK(exact <= nb.certified_sup_bound);
  }
}
