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

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace ks {

using Complex = std::complex<double>;

// Dense complex vector with finite entries and dimension >= 1.
class ComplexVector {
 public:
  explicit ComplexVector(std::vector<Complex> entries);
  ComplexVector(std::initializer_list<Complex> entries)
      : ComplexVector(std::vector<Complex>(entries)) {}

  static ComplexVector zero(std::size_t dim);
  // Canonical basis vector e_index (0-based index).
  static ComplexVector basis(std::size_t dim, std::size_t index);

  std::size_t dim() const { return entries_.size(); }
  const Complex& operator[](std::size_t i) const { return entries_[i]; }
  std::span<const Complex> entries() const { return entries_; }

  double norm_squared() const;
  double norm() const;

  ComplexVector operator*(Complex s) const;
  ComplexVector operator+(const ComplexVector& o) const;
  ComplexVector operator-(const ComplexVector& o) const;

 private:
  std::vector<Complex> entries_;
};

// <u, v> = sum_i u_i conj(v_i); linear in the first argument.
Complex inner(const ComplexVector& u, const ComplexVector& v);

// Dense self-adjoint matrix, row-major. The stored entries satisfy
// h(i, j) == conj(h(j, i)) exactly and the diagonal is real.
class HermitianMatrix {
 public:
  static constexpr double kSymmetryTolerance = 1e-12;

  // Validates finiteness and self-adjointness (max |h_ij - conj(h_ji)| <=
  // kSymmetryTolerance), then stores (H + H*)/2.
  static HermitianMatrix from_entries(std::size_t dim,
                                      std::vector<Complex> entries);
  static HermitianMatrix zero(std::size_t dim);
  static HermitianMatrix identity(std::size_t dim);
  static HermitianMatrix diagonal(std::span<const double> diag);

  std::size_t dim() const { return dim_; }
  const Complex& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * dim_ + j];
  }
  std::span<const Complex> entries() const { return entries_; }

  // this += weight * v v*
  void add_rank_one(const ComplexVector& v, double weight = 1.0);

  HermitianMatrix operator+(const HermitianMatrix& o) const;
  HermitianMatrix operator-(const HermitianMatrix& o) const;
  HermitianMatrix operator*(double s) const;
  HermitianMatrix& operator+=(const HermitianMatrix& o);

  ComplexVector apply(const ComplexVector& v) const;
  double trace() const;
  double frobenius_norm() const;

 private:
  HermitianMatrix(std::size_t dim, std::vector<Complex> entries)
      : dim_(dim), entries_(std::move(entries)) {}

  std::size_t dim_;
  std::vector<Complex> entries_;
};

struct Eigensystem {
  std::vector<double> eigenvalues;          // ascending
  std::vector<ComplexVector> eigenvectors;  // orthonormal, eigenvectors[t] pairs with eigenvalues[t]
};

// A_v : u -> <u, v> v, i.e. the matrix v v*.
HermitianMatrix rank_one(const ComplexVector& v);

// Cyclic Jacobi. Converges when the off-diagonal Frobenius mass drops to
// 1e-13 * ||H||_F; throws ConvergenceError after 100 sweeps.
Eigensystem eigensystem(const HermitianMatrix& h);
std::vector<double> eigenvalues(const HermitianMatrix& h);

double max_eigenvalue(const HermitianMatrix& h);
double opnorm(const HermitianMatrix& h);

// (sum |lambda_t|^p)^(1/p); p = +infinity gives opnorm. p < 1 is rejected.
double schatten_norm(const HermitianMatrix& h, double p);

// Max |h_ij - conj(h_ji)| over the raw entries.
double hermitian_deviation(std::size_t dim, std::span<const Complex> entries);

// ||P^2 - P||_F <= tol and P self-adjoint within tol.
bool is_projection(const HermitianMatrix& p, double tol);

// max_i Re p_ii
double diagonal_delta(const HermitianMatrix& p);

}  // namespace ks
