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
#include <vector>

#include "ks/frames.hpp"
#include "ks/hermitian.hpp"

namespace ks {

// 0/1 diagonal matrix selecting `support` (sorted, 0-based) out of n coordinates.
struct DiagonalProjection {
  std::size_t n;
  std::vector<std::size_t> support;

  bool operator==(const DiagonalProjection&) const = default;
};

struct ReductionTrace {
  std::size_t m;                  // vector count after completion
  VectorSystem w;                 // v_i / sqrt(N), then the padding
  HermitianMatrix P;              // Gram projection, P[j][i] = <w_i, w_j>
  HermitianMatrix D;              // diagonal part of P
  HermitianMatrix A;              // P - D
};

// v_i = sqrt(N) * P e_i written in an orthonormal basis of range(P). The
// basis is the eigenvectors of P with eigenvalue >= 1/2, by descending
// eigenvalue (stable on the eigensolver order).
VectorSystem projection_to_vectors(const HermitianMatrix& P, double N);

// Scales by 1/sqrt(N), completes to a Parseval frame with pieces of squared
// norm <= 1/N, and returns the Gram projection in C^m together with its
// diagonal and zero-diagonal parts.
ReductionTrace vectors_to_projection(const VectorSystem& vs, double N);

std::vector<DiagonalProjection> partition_to_diagonal_projections(const Partition& p);

// Q A Q: rows and columns outside the support zeroed.
HermitianMatrix compress(const HermitianMatrix& A, const DiagonalProjection& Q);

// max_j ||Q_j A Q_j||
double paving_quality(const HermitianMatrix& A, const Partition& p);

}  // namespace ks
