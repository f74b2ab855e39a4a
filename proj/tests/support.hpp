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

// Shared generators and independent oracles for the test binaries.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#define lapack_complex_float std::complex<float>
#define lapack_complex_double std::complex<double>
#include <lapacke.h>

#include "ks/frames.hpp"
#include "ks/hermitian.hpp"
#include "ks/rng.hpp"

namespace ks::testing {

// Eigenvalues (ascending) by LAPACK zheev; independent of the Jacobi path.
inline std::vector<double> lapack_eigenvalues(const HermitianMatrix& h) {
  const int n = static_cast<int>(h.dim());
  std::vector<Complex> a(h.entries().begin(), h.entries().end());
  std::vector<double> w(h.dim());
  const int info = LAPACKE_zheev(LAPACK_ROW_MAJOR, 'N', 'U', n, a.data(), n, w.data());
  if (info != 0) throw std::runtime_error("zheev failed");
  return w;
}

inline double lapack_max_eigenvalue(const HermitianMatrix& h) { return lapack_eigenvalues(h).back(); }

inline double lapack_opnorm(const HermitianMatrix& h) {
  const auto w = lapack_eigenvalues(h);
  return std::max(std::abs(w.front()), std::abs(w.back()));
}

// Singular values (descending) of a row-major rows x cols complex matrix (zgesvd).
inline std::vector<double> lapack_singular_values(std::vector<Complex> a, int rows, int cols) {
  std::vector<double> s(static_cast<std::size_t>(std::min(rows, cols)));
  std::vector<double> superb(s.size() + 1);
  const int info = LAPACKE_zgesvd(LAPACK_ROW_MAJOR, 'N', 'N', rows, cols, a.data(), cols, s.data(),
                                  nullptr, 1, nullptr, 1, superb.data());
  if (info != 0) throw std::runtime_error("zgesvd failed");
  return s;
}

inline double lapack_max_singular(std::vector<Complex> a, int rows, int cols) {
  return lapack_singular_values(std::move(a), rows, cols).front();
}

// Rank of a family of vectors: singular values above 1e-10 * the largest.
inline std::size_t lapack_rank(std::span<const ComplexVector> vs) {
  if (vs.empty()) return 0;
  const int rows = static_cast<int>(vs.size()), cols = static_cast<int>(vs[0].dim());
  std::vector<Complex> a;
  for (const auto& v : vs) a.insert(a.end(), v.entries().begin(), v.entries().end());
  const auto s = lapack_singular_values(std::move(a), rows, cols);
  std::size_t rank = 0;
  for (double x : s)
    if (x > 1e-10 * s.front()) ++rank;
  return rank;
}

inline ComplexVector gaussian_vector(std::size_t k, CounterRng& rng) {
  std::vector<Complex> z(k);
  for (auto& x : z) x = Complex(rng.normal(), rng.normal());
  return ComplexVector(std::move(z));
}

inline ComplexVector random_unit(std::size_t k, CounterRng& rng) {
  ComplexVector v = gaussian_vector(k, rng);
  return v * (1.0 / v.norm());
}

// Random vector with norm uniformly distributed in [0, max_norm].
inline ComplexVector random_ball(std::size_t k, double max_norm, CounterRng& rng) {
  return random_unit(k, rng) * (max_norm * rng.uniform());
}

inline VectorSystem random_system(std::size_t k, std::size_t n, double max_norm, CounterRng& rng) {
  std::vector<ComplexVector> vs;
  for (std::size_t i = 0; i < n; ++i) vs.push_back(random_ball(k, max_norm, rng));
  return VectorSystem(k, std::move(vs));
}

inline HermitianMatrix random_hermitian(std::size_t n, CounterRng& rng) {
  std::vector<Complex> e(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    e[i * n + i] = rng.normal();
    for (std::size_t j = i + 1; j < n; ++j) {
      e[i * n + j] = Complex(rng.normal(), rng.normal());
      e[j * n + i] = std::conj(e[i * n + j]);
    }
  }
  return HermitianMatrix::from_entries(n, std::move(e));
}

// Rows of a Haar-ish random k x n matrix with orthonormal rows (Gram-Schmidt
// on complex Gaussian rows).
inline std::vector<std::vector<Complex>> orthonormal_rows(std::size_t k, std::size_t n, CounterRng& rng) {
  std::vector<std::vector<Complex>> rows;
  while (rows.size() < k) {
    std::vector<Complex> r(n);
    for (auto& x : r) x = Complex(rng.normal(), rng.normal());
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& q : rows) {
        Complex dot{};
        for (std::size_t i = 0; i < n; ++i) dot += r[i] * std::conj(q[i]);
        for (std::size_t i = 0; i < n; ++i) r[i] -= dot * q[i];
      }
    double norm = 0.0;
    for (const auto& x : r) norm += std::norm(x);
    norm = std::sqrt(norm);
    if (norm < 1e-8) continue;
    for (auto& x : r) x /= norm;
    rows.push_back(std::move(r));
  }
  return rows;
}

// Random unitary (columns orthonormal), row-major n x n.
inline std::vector<Complex> random_unitary(std::size_t n, CounterRng& rng) {
  const auto rows = orthonormal_rows(n, n, rng);
  std::vector<Complex> u(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) u[i * n + j] = rows[i][j];
  return u;
}

inline ComplexVector apply_unitary(const std::vector<Complex>& u, const ComplexVector& v) {
  const std::size_t n = v.dim();
  std::vector<Complex> out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[i] += u[i * n + j] * v[j];
  return ComplexVector(std::move(out));
}

// P = V* V for V with orthonormal rows; resampled until delta(P) <= 1/N.
inline HermitianMatrix random_projection(std::size_t k, std::size_t n, double N, CounterRng& rng) {
  for (int attempt = 0; attempt < 10000; ++attempt) {
    const auto rows = orthonormal_rows(k, n, rng);
    std::vector<Complex> p(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t a = 0; a < k; ++a) p[i * n + j] += std::conj(rows[a][i]) * rows[a][j];
    // exact Hermitian
    for (std::size_t i = 0; i < n; ++i) {
      p[i * n + i] = p[i * n + i].real();
      for (std::size_t j = i + 1; j < n; ++j) p[j * n + i] = std::conj(p[i * n + j]);
    }
    HermitianMatrix P = HermitianMatrix::from_entries(n, std::move(p));
    if (diagonal_delta(P) <= 1.0 / N) return P;
  }
  throw std::runtime_error("random_projection: could not meet delta(P) <= 1/N");
}

// copies of the canonical basis of C^k, each copy rotated by its own random unitary
inline VectorSystem rotated_basis_copies(std::size_t k, std::size_t copies, CounterRng& rng) {
  std::vector<ComplexVector> vs;
  for (std::size_t c = 0; c < copies; ++c) {
    const auto u = random_unitary(k, rng);
    for (std::size_t i = 0; i < k; ++i) vs.push_back(apply_unitary(u, ComplexVector::basis(k, i)));
  }
  return VectorSystem(k, std::move(vs));
}

inline double frobenius_distance(const HermitianMatrix& a, const HermitianMatrix& b) {
  return (a - b).frobenius_norm();
}

}  // namespace ks::testing
