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
#include <optional>
#include <span>
#include <vector>

#include "ks/hermitian.hpp"

namespace ks {

// n >= 1 vectors in C^k. Norm constraints are checked by the operations that
// need them, not here.
class VectorSystem {
 public:
  VectorSystem(std::size_t k, std::vector<ComplexVector> vectors);

  std::size_t k() const { return k_; }
  std::size_t size() const { return vectors_.size(); }
  const ComplexVector& operator[](std::size_t i) const { return vectors_[i]; }
  std::span<const ComplexVector> vectors() const { return vectors_; }

  double max_norm_squared() const;
  // Subsystem of the given (0-based) indices, in the given order.
  VectorSystem select(std::span<const std::size_t> indices) const;

 private:
  std::size_t k_;
  std::vector<ComplexVector> vectors_;
};

// Assignment of n indices to parts 0..r-1. Parts may be empty.
class Partition {
 public:
  Partition(std::size_t r, std::vector<std::size_t> assignment);

  std::size_t parts() const { return r_; }
  std::size_t size() const { return assignment_.size(); }
  std::size_t part_of(std::size_t i) const { return assignment_[i]; }
  std::span<const std::size_t> assignment() const { return assignment_; }
  // members()[j] = sorted indices assigned to part j
  std::vector<std::vector<std::size_t>> members() const;

  bool operator==(const Partition&) const = default;

 private:
  std::size_t r_;
  std::vector<std::size_t> assignment_;
};

struct PartitionCertificate {
  Partition partition;
  std::vector<double> per_part_bound;
  double slack;  // N - max(per_part_bound)
  double N;

  double max_bound() const;
};

struct TightPadTrace {
  HermitianMatrix residual;                // B = N*I - frame operator of the input
  std::vector<double> residual_eigenvalues;
  std::vector<ComplexVector> residual_eigenvectors;
  std::vector<ComplexVector> added;        // vectors appended to the input, in order
};

struct TightCompletion {
  VectorSystem system;
  TightPadTrace trace;
};

HermitianMatrix frame_operator(const VectorSystem& vs);

// Optimal upper frame bound: lambda_max of the frame operator.
double frame_bound(const VectorSystem& vs);

// lambda_max(sum_{i in X} A_{v_i}); 0 for empty X.
double subset_frame_bound(const VectorSystem& vs, std::span<const std::size_t> subset);

PartitionCertificate partition_certificate(const VectorSystem& vs, const Partition& p, double N);

VectorSystem scale_system(const VectorSystem& vs, double t);

// Appends rank-one pieces of N*I - S (each of squared norm <= cap) so that
// the frame operator becomes N*I. Residual eigenvalues below 1e-12 are
// dropped; each remaining b_t f_t f_t* is cut into ceil(b_t / cap) equal
// pieces.
TightCompletion complete_to_tight(const VectorSystem& vs, double N, double cap);

// Lifts n vectors of norm <= 1 in C^k to n + k unit vectors in C^{k+n}:
// w_i = v_i + sqrt(1 - |v_i|^2) e_{k+i}, followed by e_{k+1}, ..., e_{2k}.
// Requires n >= k. When `N` is given, also checks the hypothesis
// N >= 4 and frame_bound <= N - sqrt(N) under which the lift has frame
// bound <= N.
VectorSystem unit_norm_lift(const VectorSystem& vs, std::optional<double> N = std::nullopt);

// Pads m unit vectors in C^m with frame bound <= N (integer) to mN unit
// vectors with frame operator N*I: the residual B is spread over m unit
// vectors u_s with <u_s, f_t> = sqrt(b_t / ((N-1)m)) e^{2 pi i s t / m},
// each repeated N-1 times (copy-major order).
TightCompletion tight_pad_unit(const VectorSystem& vs, int N);

}  // namespace ks
