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
#include <string>
#include <vector>

#include "ks/frames.hpp"
#include "ks/hermitian.hpp"
#include "ks/report.hpp"

namespace ks::counterexample {

// k - 1 real vectors in C^k (k >= 5):
//   v'_i = (k-2) alpha e_i - alpha sum_{j != i, j < k} e_j + beta e_k,
// alpha = (k-1)^{-3/2}, beta = (k-1)^{-1/2}, |v'_i|^2 = delta = (2k-3)/(k-1)^2,
// and the normalized v_i = v'_i / sqrt(delta).
struct Instance {
  int k;
  double alpha;
  double beta;
  double delta;
  double N;  // 1 / delta
  VectorSystem primed;
  VectorSystem normalized;
};

Instance make_instance(int k);

// 1 / (delta sqrt(k - 1)): no signing of the A_{v_i} has smaller norm.
double signed_lower_bound(int k);

// sqrt(c(k-1-c)/(k-1)^3 + (c/(k-1) - 1/2)^2)
double center_distance_closed_form(int k, std::size_t c);

struct CenterDistance {
  double direct;       // || sum_{i in X} A_{v'_i} e_k - e_k / 2 ||
  double closed_form;
};

// X holds 0-based indices into the k - 1 vectors.
CenterDistance subset_center_distance(const Instance& w, std::span<const std::size_t> subset);

// frame_operator(primed) e_k == e_k and frame_bound(normalized) == 1/delta.
VerificationReport frame_identity_check(const Instance& w);

enum class Mode { kExhaustive, kHeuristic };

inline constexpr int kMaxExhaustiveK = 18;

// Minimum over signings of || sum_i s_i A_{v_i} ||: exact (exhaustive, k <= 18)
// or a greedy upper value (heuristic). Either way it must sit above
// signed_lower_bound(k).
VerificationReport verify_counterexample(const Instance& w, Mode mode, std::uint64_t budget,
                                         std::uint64_t seed);

struct BalancingWitness {
  int k;
  std::vector<HermitianMatrix> matrices;  // A_{v_i}, trace norm 1
  double lower_bound;
  double ratio_to_sqrt_k;
};

BalancingWitness balancing_witness(int k);

}  // namespace ks::counterexample
