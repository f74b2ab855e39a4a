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

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <variant>
#include <vector>

#include "ks/frames.hpp"
#include "ks/hermitian.hpp"

namespace ks {

struct SignVector {
  std::vector<int> signs;  // each +1 or -1

  bool operator==(const SignVector&) const = default;
};

// a_i[j] = |<e_j, v_i>|^2, so ||a_i||_1 = ||v_i||^2.
struct CoordinateProfile {
  std::size_t k;
  std::vector<std::vector<double>> a;
};

CoordinateProfile coordinate_profile(const VectorSystem& vs);

// || sum_i s_i a_i ||_inf
double linf_discrepancy(const CoordinateProfile& cp, const SignVector& s);

// Iterated-rounding signing with || sum_i s_i a_i ||_inf <= 2 whenever every
// ||a_i||_1 <= 1. Throws InternalError if the bound fails.
SignVector beck_fiala_signs(const CoordinateProfile& cp);

// opnorm(sum_i s_i A_{v_i})
double signed_norm(const VectorSystem& vs, const SignVector& s);

struct SignSearchOutcome {
  SignVector signs;
  double value;
  bool exact;
  std::uint64_t evaluations;
};

// Global minimum of opnorm(sum_i s_i A_{v_i}) over s with s_1 = +1; ties go
// to the lexicographically smallest pattern, + before -. Refuses n > limit.
SignSearchOutcome exhaustive_sign_search(const VectorSystem& vs, std::size_t limit = 24);

struct PartitionSearchResult {
  PartitionCertificate certificate;
  bool optimal;
  std::uint64_t evaluations;
};

inline constexpr std::uint64_t kDefaultPartitionBudget = std::uint64_t{1} << 24;

// Minimizes max_j lambda_max(sum_{X_j} A_{v_i}) over all assignments; the
// lexicographically smallest optimal assignment wins. Refuses r^n > limit.
PartitionSearchResult exhaustive_partition_search(const VectorSystem& vs, std::size_t r, double N,
                                                  std::uint64_t limit = kDefaultPartitionBudget);

struct AnnealSchedule {
  std::uint64_t steps = 20000;
  // Temperatures are relative to the frame bound of the input.
  double t_start = 0.2;
  double t_end = 1e-4;
};

PartitionSearchResult anneal_partition_search(const VectorSystem& vs, std::size_t r, double N,
                                              std::uint64_t seed, const AnnealSchedule& schedule = {});

struct PavingSearchResult {
  Partition partition;
  double quality;  // max_j ||Q_j A Q_j||
  bool optimal;
  std::uint64_t evaluations;
};

PavingSearchResult exhaustive_paving_search(const HermitianMatrix& A, std::size_t r,
                                            std::uint64_t limit = kDefaultPartitionBudget);

// Rank of a family in C^k by complete-pivoting elimination; pivots at or
// below 1e-10 * (largest column norm) count as zero.
std::size_t numerical_rank(std::span<const ComplexVector> vectors);

// Certificate that no partition into r spanning parts exists: with
// d = rank of the complement of X, r * (k - d) > |X|.
struct ViolatingSet {
  std::vector<std::size_t> indices;  // X, sorted, 0-based
  std::size_t complement_rank;       // d
};

// Matroid-union augmentation over r copies of the linear matroid. On success
// every part contains a basis of C^k (vectors outside the bases go to part
// 0); otherwise returns the set X read off the final exchange graph.
std::variant<Partition, ViolatingSet> matroid_spanning_partition(const VectorSystem& vs,
                                                                 std::size_t r);

struct BanaszczykContext {
  std::size_t k;
  double R_hat;  // empirical median of opnorm over Gaussian self-adjoint matrices
  double M;      // 5 * R_hat
  std::size_t samples;
  std::uint64_t seed;
};

BanaszczykContext gaussian_median_radius(std::size_t k, std::size_t samples, std::uint64_t seed);

struct BalancingResult {
  SignVector signs;
  double value;  // opnorm(sum_i s_i B_i) of the best pattern seen
  bool success;  // value <= M
  bool exhaustive;
  std::uint64_t evaluations;
};

// Exhaustive for n <= 20; otherwise seeded random restarts with greedy
// single flips until `budget` evaluations are spent or a pattern reaches M.
BalancingResult banaszczyk_sign_search(std::span<const HermitianMatrix> terms, double M,
                                       std::uint64_t budget, std::uint64_t seed);

// Restarted greedy single-flip descent on opnorm(sum s_i T_i). Stops early
// once the value drops to `stop_at`.
SignSearchOutcome greedy_sign_descent(std::span<const HermitianMatrix> terms, std::uint64_t budget,
                                      std::uint64_t seed, double stop_at = -1.0);

struct EpsilonNet {
  std::size_t k;
  double mesh;
  std::vector<ComplexVector> points;  // unit, first nonzero coordinate real >= 0
  bool certified;                     // covering radius <= mesh is proven (k <= 2)
};

inline constexpr std::size_t kDefaultNetPoints = 4'000'000;

// k = 1: the single point {1}. k = 2: a (theta, phi) lattice on
// (cos theta, e^{i phi} sin theta) with certified covering radius <= mesh.
// k >= 3: seeded random oversampling, not certified.
EpsilonNet build_epsilon_net(std::size_t k, double mesh, std::uint64_t seed,
                             std::size_t max_points = kDefaultNetPoints);

// Number of points build_epsilon_net would produce.
std::size_t epsilon_net_size(std::size_t k, double mesh);

// Largest distance from `trials` random phase-normalized unit vectors to
// their nearest net point.
double empirical_covering_radius(const EpsilonNet& net, std::size_t trials, std::uint64_t seed);

// Rotates u so its first nonzero coordinate is real and nonnegative.
ComplexVector phase_normalize(const ComplexVector& u);

struct NetBound {
  double net_max;              // max over net points of sum_{i in X} |<u, v_i>|^2
  double certified_sup_bound;  // net_max + 2 N mesh
};

NetBound net_certified_bound(const VectorSystem& vs, std::span<const std::size_t> subset,
                             const EpsilonNet& net, double N);

}  // namespace ks
