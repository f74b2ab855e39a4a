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

// Data-parallel inner loops of the search engines. Every kernel has a
// straightforward serial reference (kept for testing and benchmarking) and
// an OpenMP version. The OpenMP versions shard work into fixed-size chunks
// whose boundaries do not depend on the thread count, and reduce chunk
// results serially in chunk order, so their output is identical for any
// number of threads.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "ks/hermitian.hpp"

namespace ks::kernels {

// Values within this relative distance are ties, resolved lexicographically.
inline constexpr double kTieTolerance = 1e-12;

inline bool within_tie(double a, double b) {
  if (!std::isfinite(a) || !std::isfinite(b)) return a == b;
  const double scale = std::max({1.0, std::abs(a), std::abs(b)});
  return std::abs(a - b) <= kTieTolerance * scale;
}

struct SignSearchResult {
  std::vector<int> signs;  // +1 / -1, signs[0] == +1
  double value;            // opnorm(sum_i signs[i] * terms[i])
  std::uint64_t evaluations;
};

// Objective on an assignment of n items to parts 0..r-1. Must be pure: the
// parallel kernel calls it concurrently.
using AssignmentObjective = std::function<double(std::span<const std::size_t>)>;

struct AssignmentSearchResult {
  std::vector<std::size_t> assignment;
  double value;
  std::uint64_t evaluations;
};

struct FormMaximum {
  double value;       // max_p <H u_p, u_p>
  std::size_t index;  // smallest maximizing point
};

namespace serial {

// Brute force over all 2^n sign patterns, each sum rebuilt from scratch.
SignSearchResult min_signed_norm(std::span<const HermitianMatrix> terms);

// Brute force over all r^n assignments in lexicographic order.
AssignmentSearchResult min_assignment(std::size_t n, std::size_t r,
                                      const AssignmentObjective& objective);

FormMaximum max_quadratic_form(const HermitianMatrix& h, std::span<const ComplexVector> points);

// opnorm of `samples` standard Gaussian self-adjoint k x k matrices; sample s
// draws from CounterRng(seed, s).
std::vector<double> gaussian_opnorms(std::size_t k, std::size_t samples, std::uint64_t seed);

}  // namespace serial

namespace parallel {

// Gray-code walk over the 2^(n-1) patterns with signs[0] = +1, updating the
// running sum by +-2 M_i per flip; each chunk restarts from a fresh sum.
SignSearchResult min_signed_norm(std::span<const HermitianMatrix> terms);

// Restricted-growth assignments only (assignment[0] = 0, each new label is
// at most one past the largest so far). These are the lexicographically
// smallest representatives of their relabeling classes, so for
// label-invariant objectives the optimum matches the serial brute force.
AssignmentSearchResult min_assignment(std::size_t n, std::size_t r,
                                      const AssignmentObjective& objective);

FormMaximum max_quadratic_form(const HermitianMatrix& h, std::span<const ComplexVector> points);

std::vector<double> gaussian_opnorms(std::size_t k, std::size_t samples, std::uint64_t seed);

}  // namespace parallel

// Standard Gaussian on self-adjoint matrices with density proportional to
// exp(-||A||_HS^2 / 2): N(0,1) diagonal, N(0,1/2) real and imaginary parts
// off the diagonal.
HermitianMatrix gaussian_hermitian(std::size_t k, std::uint64_t seed, std::uint64_t stream);

// Real part of <H u, u>.
double quadratic_form(const HermitianMatrix& h, const ComplexVector& u);

// Lexicographic comparison of sign vectors with +1 before -1.
bool signs_less(std::span<const int> a, std::span<const int> b);

}  // namespace ks::kernels
