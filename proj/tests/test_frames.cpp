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
#include <numbers>

#include "doctest.h"
#include "ks/counterexample.hpp"
#include "ks/discrepancy.hpp"
#include "ks/error.hpp"
#include "ks/frames.hpp"
#include "support.hpp"

using namespace ks;

namespace {

VectorSystem basis(std::size_t k, std::size_t copies = 1) {
  std::vector<ComplexVector> vs;
  for (std::size_t c = 0; c < copies; ++c)
    for (std::size_t i = 0; i < k; ++i) vs.push_back(ComplexVector::basis(k, i));
  return VectorSystem(k, std::move(vs));
}

double distance_to_scalar(const HermitianMatrix& h, double N) {
  return (h - HermitianMatrix::identity(h.dim()) * N).frobenius_norm();
}

}  // namespace

TEST_CASE("frame operator and bound") {
  CHECK(distance_to_scalar(frame_operator(basis(3)), 1.0) == 0.0);
  const double s = 1.0 / std::sqrt(2.0);
  const auto f = frame_operator(VectorSystem(2, {ComplexVector{s, s}}));
  CHECK(std::abs(f(0, 1) - 0.5) < 1e-15);
  CHECK(std::abs(f(1, 1) - 0.5) < 1e-15);

  const auto w = counterexample::make_instance(5);
  const auto e5 = ComplexVector::basis(5, 4);
  CHECK((frame_operator(w.primed).apply(e5) - e5).norm() <= 1e-12);

  CHECK(frame_bound(basis(4)) == doctest::Approx(1.0));
  CHECK(frame_bound(basis(3, 2)) == doctest::Approx(2.0));
  CHECK(std::abs(frame_bound(w.normalized) - 16.0 / 7.0) <= 1e-9);
}

TEST_CASE("frame bound agrees with the LAPACK oracle") {
  CounterRng rng(4, 4);
  for (int trial = 0; trial < 30; ++trial) {
    const auto vs = ks::testing::random_system(1 + trial % 5, 1 + trial % 9, 1.0, rng);
    CHECK(frame_bound(vs) ==
          doctest::Approx(ks::testing::lapack_max_eigenvalue(frame_operator(vs))).epsilon(1e-11));
  }
}

TEST_CASE("subset frame bound") {
  const auto vs = basis(3, 2);
  CHECK(subset_frame_bound(vs, {}) == 0.0);
  const std::vector<std::size_t> all{0, 1, 2, 3, 4, 5};
  CHECK(subset_frame_bound(vs, all) == doctest::Approx(frame_bound(vs)));
  const std::vector<std::size_t> first{0, 1, 2};
  CHECK(subset_frame_bound(vs, first) == doctest::Approx(1.0));
  const std::vector<std::size_t> bad{6};
  CHECK_THROWS_AS(subset_frame_bound(vs, bad), InvalidArgument);

  // X subset of Y => bound(X) <= bound(Y)
  CounterRng rng(8, 0);
  for (int trial = 0; trial < 40; ++trial) {
    const auto sys = ks::testing::random_system(3, 8, 1.0, rng);
    std::vector<std::size_t> x, y;
    for (std::size_t i = 0; i < 8; ++i) {
      const auto u = rng.below(3);
      if (u == 0) x.push_back(i);
      if (u <= 1) y.push_back(i);
    }
    CHECK(subset_frame_bound(sys, x) <= subset_frame_bound(sys, y) + 1e-12);
  }
}

TEST_CASE("partition certificate") {
  const VectorSystem two = basis(2);
  const auto cert = partition_certificate(two, Partition(2, {0, 1}), 1.0);
  CHECK(cert.per_part_bound == std::vector<double>{1.0, 1.0});
  CHECK(cert.slack == 0.0);

  const auto w = counterexample::make_instance(5);
  const double lb = counterexample::signed_lower_bound(5);
  for (std::uint32_t pattern = 0; pattern < 16; ++pattern) {
    std::vector<std::size_t> a(4);
    for (std::size_t i = 0; i < 4; ++i) a[i] = (pattern >> i) & 1u;
    const auto c = partition_certificate(w.normalized, Partition(2, a), w.N);
    CHECK(c.slack <= w.N - lb + 1e-9);
    CHECK(c.slack == w.N - c.max_bound());
  }

  const auto single = partition_certificate(w.normalized, Partition(1, {0, 0, 0, 0}), w.N);
  CHECK(single.slack == doctest::Approx(w.N - frame_bound(w.normalized)));

  CHECK_THROWS_AS(partition_certificate(two, Partition(2, {0}), 1.0), InvalidArgument);
}

TEST_CASE("scale_system") {
  const auto vs = basis(3);
  const auto same = scale_system(vs, 1.0);
  for (std::size_t i = 0; i < 3; ++i) CHECK((same[i] - vs[i]).norm() == 0.0);
  CHECK(frame_bound(scale_system(vs, std::sqrt(2.0))) == doctest::Approx(2.0));
  CHECK_THROWS_AS(scale_system(vs, 0.0), InvalidArgument);
  CHECK_THROWS_AS(scale_system(vs, -1.0), InvalidArgument);

  const auto w = counterexample::make_instance(5);
  const auto scaled = scale_system(w.primed, 1.0 / std::sqrt(w.delta));
  for (std::size_t i = 0; i < 4; ++i) CHECK((scaled[i] - w.normalized[i]).norm() <= 1e-15);
}

TEST_CASE("scaling leaves the optimal partition unchanged") {
  CounterRng rng(13, 0);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t n = 4 + trial % 5;
    const auto vs = ks::testing::random_system(2, n, 1.0, rng);
    const double N = frame_bound(vs);
    const auto base = exhaustive_partition_search(vs, 2, N);
    for (double t : {0.3, 1.7}) {
      const auto scaled = exhaustive_partition_search(scale_system(vs, t), 2, N * t * t);
      CHECK(scaled.certificate.partition == base.certificate.partition);
      CHECK(std::abs(scaled.certificate.max_bound() - t * t * base.certificate.max_bound()) <= 1e-9);
    }
  }
}

TEST_CASE("complete_to_tight") {
  const auto one = complete_to_tight(VectorSystem(1, {ComplexVector{1.0 / std::sqrt(2.0)}}), 1.0, 0.5);
  REQUIRE(one.system.size() == 2);
  CHECK(one.trace.added.size() == 1);
  CHECK(one.trace.added[0].norm_squared() == doctest::Approx(0.5));

  const auto tight = complete_to_tight(basis(3, 2), 2.0, 1.0);
  CHECK(tight.trace.added.empty());
  CHECK(tight.system.size() == 6);

  const auto w = counterexample::make_instance(5);
  const auto done = complete_to_tight(w.normalized, w.N, 1.0);
  CHECK(distance_to_scalar(frame_operator(done.system), w.N) <= 1e-9);
  const auto oracle = ks::testing::lapack_eigenvalues(frame_operator(done.system));
  CHECK(std::abs(oracle.front() - w.N) <= 1e-9);
  CHECK(std::abs(oracle.back() - w.N) <= 1e-9);

  CHECK_THROWS_AS(complete_to_tight(basis(2, 2), 1.5, 1.0), Infeasible);
  CHECK_THROWS_AS(complete_to_tight(basis(2), 1.0, 0.0), InvalidArgument);

  CounterRng rng(17, 0);
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t k = 1 + trial % 4;
    const auto vs = ks::testing::random_system(k, 2 + trial % 6, 1.0, rng);
    const double N = frame_bound(vs) + rng.uniform();
    const double cap = 0.1 + rng.uniform();
    const auto c = complete_to_tight(vs, N, cap);
    CHECK(distance_to_scalar(frame_operator(c.system), N) <= 1e-9);
    for (std::size_t i = 0; i < vs.size(); ++i) {
      // prefix preserved verbatim
      for (std::size_t j = 0; j < k; ++j) CHECK(c.system[i][j] == vs[i][j]);
    }
    for (const auto& a : c.trace.added) CHECK(a.norm_squared() <= cap + 1e-12);
    CHECK(distance_to_scalar(c.trace.residual + frame_operator(vs), N) <= 1e-10);
    double sum_b = 0.0;
    for (double b : c.trace.residual_eigenvalues) sum_b += b;
    CHECK(std::abs(sum_b - c.trace.residual.trace()) <= 1e-10);
    // dropping the padding gives back the input frame operator
    std::vector<std::size_t> prefix(vs.size());
    for (std::size_t i = 0; i < prefix.size(); ++i) prefix[i] = i;
    CHECK((frame_operator(c.system.select(prefix)) - frame_operator(vs)).frobenius_norm() == 0.0);
  }
}

TEST_CASE("unit_norm_lift") {
  const auto lifted = unit_norm_lift(VectorSystem(1, {ComplexVector{0.6}}));
  REQUIRE(lifted.size() == 2);
  REQUIRE(lifted.k() == 2);
  CHECK(std::abs(lifted[0][0] - 0.6) < 1e-15);
  CHECK(std::abs(lifted[0][1] - 0.8) < 1e-15);
  CHECK(lifted[1][0] == Complex(0));
  CHECK(lifted[1][1] == Complex(1));

  const auto units = unit_norm_lift(basis(2));
  REQUIRE(units.size() == 4);
  CHECK(units.k() == 4);
  for (std::size_t i = 0; i < 2; ++i) {
    CHECK(units[i][2 + i] == Complex(0));
    CHECK((units[2 + i] - ComplexVector::basis(4, 2 + i)).norm() == 0.0);
  }

  CHECK_THROWS_AS(unit_norm_lift(VectorSystem(1, {ComplexVector{1.1}})), InvalidArgument);

  CounterRng rng(23, 0);
  int checked = 0;
  for (int trial = 0; trial < 40; ++trial) {
    auto vs = ks::testing::random_system(3, 5, 1.0, rng);
    const double b = frame_bound(vs);
    if (b > 2.0) vs = scale_system(vs, std::sqrt(2.0 / b));
    const auto out = unit_norm_lift(vs, 4.0);
    CHECK(out.size() == 8);
    for (const auto& w : out.vectors()) CHECK(std::abs(w.norm() - 1.0) <= 1e-12);
    CHECK(ks::testing::lapack_max_eigenvalue(frame_operator(out)) <= 4.0 + 1e-9);
    for (int s = 0; s < 100; ++s) {
      const auto u = ks::testing::random_unit(8, rng);
      double sum = 0.0;
      for (const auto& w : out.vectors()) sum += std::norm(inner(u, w));
      CHECK(sum <= 4.0 + 1e-9);
    }
    ++checked;
  }
  CHECK(checked == 40);
}

TEST_CASE("tight_pad_unit") {
  const auto scalar = tight_pad_unit(VectorSystem(1, {ComplexVector{1.0}}), 2);
  REQUIRE(scalar.system.size() == 2);
  CHECK(std::abs(scalar.system[1][0] - 1.0) <= 1e-15);
  CHECK(distance_to_scalar(frame_operator(scalar.system), 2.0) <= 1e-15);

  const auto dft = tight_pad_unit(basis(2), 2);
  REQUIRE(dft.system.size() == 4);
  CHECK(distance_to_scalar(dft.trace.residual, 1.0) <= 1e-12);
  const double s = 1.0 / std::sqrt(2.0);
  // residual eigenbasis is (up to phase) e_1, e_2; rows of the 2-point DFT / sqrt 2 once it is
  const auto& u0 = dft.trace.added[0];
  const auto& u1 = dft.trace.added[1];
  CHECK(std::abs(std::abs(u0[0]) - s) <= 1e-12);
  CHECK(std::abs(std::abs(u0[1]) - s) <= 1e-12);
  CHECK(std::abs(inner(u0, u1)) <= 1e-12);
  CHECK(distance_to_scalar(frame_operator(dft.system), 2.0) <= 1e-12);

  CHECK_THROWS_AS(tight_pad_unit(VectorSystem(2, {ComplexVector::basis(2, 0)}), 2), InvalidArgument);
  CHECK_THROWS_AS(tight_pad_unit(VectorSystem(1, {ComplexVector{0.5}}), 2), InvalidArgument);
  CHECK_THROWS_AS(tight_pad_unit(VectorSystem(1, {ComplexVector{1.0}}), 1), InvalidArgument);
  CHECK_THROWS_AS(tight_pad_unit(VectorSystem(2, {ComplexVector{1.0, 0.0}, ComplexVector{1.0, 0.0}}), 1),
                  InvalidArgument);
}

TEST_CASE("unit completion pipeline on the counterexample family") {
  // lift the k=5 family (scaled under N - sqrt N), then pad to N I
  const auto w = counterexample::make_instance(5);
  const int N = 9;
  const double target = N - std::sqrt(static_cast<double>(N));
  // the family has 4 vectors in C^5; add one zero-free vector to reach n >= k
  std::vector<ComplexVector> vs(w.normalized.vectors().begin(), w.normalized.vectors().end());
  vs.push_back(ComplexVector::basis(5, 0) * 0.5);
  auto sys = VectorSystem(5, std::move(vs));
  sys = scale_system(sys, std::min(1.0, std::sqrt(target / frame_bound(sys))));
  const auto lifted = unit_norm_lift(sys, static_cast<double>(N));
  REQUIRE(lifted.size() == lifted.k());
  const auto padded = tight_pad_unit(lifted, N);
  CHECK(padded.system.size() == lifted.size() * N);
  CHECK(distance_to_scalar(frame_operator(padded.system), N) <= 1e-8);
  for (const auto& x : padded.system.vectors()) CHECK(std::abs(x.norm() - 1.0) <= 1e-10);

  HermitianMatrix sum_u = HermitianMatrix::zero(lifted.k());
  for (std::size_t s = 0; s < lifted.size(); ++s) sum_u.add_rank_one(padded.trace.added[s]);
  CHECK((sum_u - padded.trace.residual * (1.0 / (N - 1))).frobenius_norm() <= 1e-9);
  CHECK(std::abs(padded.trace.residual.trace() - (N - 1.0) * lifted.size()) <= 1e-8);
}
