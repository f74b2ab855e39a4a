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

#include "ks/hermitian.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "ks/error.hpp"

namespace ks {

namespace {

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

constexpr double kJacobiRelativeTolerance = 1e-13;
constexpr int kJacobiMaxSweeps = 100;

double off_diagonal_mass(std::size_t n, const std::vector<Complex>& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) s += std::norm(a[i * n + j]);
  return std::sqrt(s);
}

// Diagonalizes `a` (n x n, Hermitian, row-major) in place. When `v` is
// non-null it accumulates the unitary whose columns are eigenvectors.
void jacobi(std::size_t n, std::vector<Complex>& a, std::vector<Complex>* v) {
  if (v) {
    v->assign(n * n, Complex{});
    for (std::size_t i = 0; i < n; ++i) (*v)[i * n + i] = 1.0;
  }
  double fro = 0.0;
  for (const Complex& z : a) fro += std::norm(z);
  fro = std::sqrt(fro);
  if (fro == 0.0) return;
  const double target = kJacobiRelativeTolerance * fro;

  for (int sweep = 0; sweep < kJacobiMaxSweeps; ++sweep) {
    if (off_diagonal_mass(n, a) <= target) return;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex apq = a[p * n + q];
        const double g = std::abs(apq);
        if (g == 0.0) continue;
        const double app = a[p * n + p].real();
        const double aqq = a[q * n + q].real();
        // Rotate the phase of a_pq away, then a real Jacobi rotation.
        const Complex phase = std::conj(apq) / g;  // e^{-i phi}
        const double theta = (aqq - app) / (2.0 * g);
        double t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        if (theta < 0.0) t = -t;
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        // U restricted to (p, q): [[c, s], [-s e^{-i phi}, c e^{-i phi}]].
        const Complex upp = c, upq = s;
        const Complex uqp = -s * phase, uqq = c * phase;
        for (std::size_t k = 0; k < n; ++k) {  // A <- A U
          const Complex akp = a[k * n + p], akq = a[k * n + q];
          a[k * n + p] = akp * upp + akq * uqp;
          a[k * n + q] = akp * upq + akq * uqq;
        }
        for (std::size_t k = 0; k < n; ++k) {  // A <- U* A
          const Complex apk = a[p * n + k], aqk = a[q * n + k];
          a[p * n + k] = std::conj(upp) * apk + std::conj(uqp) * aqk;
          a[q * n + k] = std::conj(upq) * apk + std::conj(uqq) * aqk;
        }
        a[p * n + q] = 0.0;
        a[q * n + p] = 0.0;
        a[p * n + p] = a[p * n + p].real();
        a[q * n + q] = a[q * n + q].real();
        if (v) {
          auto& m = *v;
          for (std::size_t k = 0; k < n; ++k) {
            const Complex vkp = m[k * n + p], vkq = m[k * n + q];
            m[k * n + p] = vkp * upp + vkq * uqp;
            m[k * n + q] = vkp * upq + vkq * uqq;
          }
        }
      }
    }
  }
  const double off = off_diagonal_mass(n, a);
  if (off <= target) return;
  throw ConvergenceError("Jacobi eigensolver did not converge in " +
                             std::to_string(kJacobiMaxSweeps) +
                             " sweeps; off-diagonal residual " + std::to_string(off),
                         off);
}

}  // namespace

ComplexVector::ComplexVector(std::vector<Complex> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw InvalidArgument("ComplexVector: dimension must be >= 1");
  for (const Complex& z : entries_)
    if (!finite(z)) throw InvalidArgument("ComplexVector: non-finite entry");
}

ComplexVector ComplexVector::zero(std::size_t dim) {
  return ComplexVector(std::vector<Complex>(dim));
}

ComplexVector ComplexVector::basis(std::size_t dim, std::size_t index) {
  if (index >= dim) throw InvalidArgument("basis: index out of range");
  std::vector<Complex> e(dim);
  e[index] = 1.0;
  return ComplexVector(std::move(e));
}

double ComplexVector::norm_squared() const {
  double s = 0.0;
  for (const Complex& z : entries_) s += std::norm(z);
  return s;
}

double ComplexVector::norm() const { return std::sqrt(norm_squared()); }

ComplexVector ComplexVector::operator*(Complex s) const {
  std::vector<Complex> out(entries_);
  for (Complex& z : out) z *= s;
  return ComplexVector(std::move(out));
}

ComplexVector ComplexVector::operator+(const ComplexVector& o) const {
  if (o.dim() != dim()) throw InvalidArgument("ComplexVector: dimension mismatch");
  std::vector<Complex> out(entries_);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += o[i];
  return ComplexVector(std::move(out));
}

ComplexVector ComplexVector::operator-(const ComplexVector& o) const {
  return *this + o * Complex(-1.0);
}

Complex inner(const ComplexVector& u, const ComplexVector& v) {
  if (u.dim() != v.dim()) throw InvalidArgument("inner: dimension mismatch");
  Complex s{};
  for (std::size_t i = 0; i < u.dim(); ++i) s += u[i] * std::conj(v[i]);
  return s;
}

double hermitian_deviation(std::size_t dim, std::span<const Complex> e) {
  double dev = 0.0;
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = i; j < dim; ++j)
      dev = std::max(dev, std::abs(e[i * dim + j] - std::conj(e[j * dim + i])));
  return dev;
}

HermitianMatrix HermitianMatrix::from_entries(std::size_t dim, std::vector<Complex> entries) {
  if (dim == 0) throw InvalidArgument("HermitianMatrix: dimension must be >= 1");
  if (entries.size() != dim * dim)
    throw InvalidArgument("HermitianMatrix: expected " + std::to_string(dim * dim) +
                          " entries, got " + std::to_string(entries.size()));
  for (const Complex& z : entries)
    if (!finite(z)) throw InvalidArgument("HermitianMatrix: non-finite entry");
  const double dev = hermitian_deviation(dim, entries);
  if (dev > kSymmetryTolerance)
    throw InvalidArgument("HermitianMatrix: not self-adjoint (deviation " +
                          std::to_string(dev) + ")");
  for (std::size_t i = 0; i < dim; ++i) {
    entries[i * dim + i] = entries[i * dim + i].real();
    for (std::size_t j = i + 1; j < dim; ++j) {
      const Complex avg = 0.5 * (entries[i * dim + j] + std::conj(entries[j * dim + i]));
      entries[i * dim + j] = avg;
      entries[j * dim + i] = std::conj(avg);
    }
  }
  return HermitianMatrix(dim, std::move(entries));
}

HermitianMatrix HermitianMatrix::zero(std::size_t dim) {
  if (dim == 0) throw InvalidArgument("HermitianMatrix: dimension must be >= 1");
  return HermitianMatrix(dim, std::vector<Complex>(dim * dim));
}

HermitianMatrix HermitianMatrix::identity(std::size_t dim) {
  HermitianMatrix m = zero(dim);
  for (std::size_t i = 0; i < dim; ++i) m.entries_[i * dim + i] = 1.0;
  return m;
}

HermitianMatrix HermitianMatrix::diagonal(std::span<const double> diag) {
  HermitianMatrix m = zero(diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) {
    if (!std::isfinite(diag[i])) throw InvalidArgument("HermitianMatrix: non-finite entry");
    m.entries_[i * diag.size() + i] = diag[i];
  }
  return m;
}

void HermitianMatrix::add_rank_one(const ComplexVector& v, double weight) {
  if (v.dim() != dim_) throw InvalidArgument("add_rank_one: dimension mismatch");
  for (std::size_t i = 0; i < dim_; ++i) {
    entries_[i * dim_ + i] += weight * std::norm(v[i]);
    for (std::size_t j = i + 1; j < dim_; ++j) {
      const Complex z = weight * v[i] * std::conj(v[j]);
      entries_[i * dim_ + j] += z;
      entries_[j * dim_ + i] += std::conj(z);
    }
  }
}

HermitianMatrix HermitianMatrix::operator+(const HermitianMatrix& o) const {
  HermitianMatrix out = *this;
  out += o;
  return out;
}

HermitianMatrix& HermitianMatrix::operator+=(const HermitianMatrix& o) {
  if (o.dim_ != dim_) throw InvalidArgument("HermitianMatrix: dimension mismatch");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += o.entries_[i];
  return *this;
}

HermitianMatrix HermitianMatrix::operator-(const HermitianMatrix& o) const {
  return *this + o * -1.0;
}

HermitianMatrix HermitianMatrix::operator*(double s) const {
  HermitianMatrix out = *this;
  for (Complex& z : out.entries_) z *= s;
  return out;
}

ComplexVector HermitianMatrix::apply(const ComplexVector& v) const {
  if (v.dim() != dim_) throw InvalidArgument("apply: dimension mismatch");
  std::vector<Complex> out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    Complex s{};
    for (std::size_t j = 0; j < dim_; ++j) s += entries_[i * dim_ + j] * v[j];
    out[i] = s;
  }
  return ComplexVector(std::move(out));
}

double HermitianMatrix::trace() const {
  double t = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) t += entries_[i * dim_ + i].real();
  return t;
}

double HermitianMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const Complex& z : entries_) s += std::norm(z);
  return std::sqrt(s);
}

HermitianMatrix rank_one(const ComplexVector& v) {
  HermitianMatrix m = HermitianMatrix::zero(v.dim());
  m.add_rank_one(v);
  return m;
}

Eigensystem eigensystem(const HermitianMatrix& h) {
  const std::size_t n = h.dim();
  std::vector<Complex> a(h.entries().begin(), h.entries().end());
  std::vector<Complex> v;
  jacobi(n, a, &v);

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return a[x * n + x].real() < a[y * n + y].real();
  });

  Eigensystem es;
  es.eigenvalues.reserve(n);
  es.eigenvectors.reserve(n);
  for (std::size_t t : order) {
    es.eigenvalues.push_back(a[t * n + t].real());
    std::vector<Complex> col(n);
    for (std::size_t k = 0; k < n; ++k) col[k] = v[k * n + t];
    es.eigenvectors.emplace_back(std::move(col));
  }
  return es;
}

std::vector<double> eigenvalues(const HermitianMatrix& h) {
  const std::size_t n = h.dim();
  std::vector<Complex> a(h.entries().begin(), h.entries().end());
  jacobi(n, a, nullptr);
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = a[i * n + i].real();
  std::sort(out.begin(), out.end());
  return out;
}

double max_eigenvalue(const HermitianMatrix& h) { return eigenvalues(h).back(); }

double opnorm(const HermitianMatrix& h) {
  const auto ev = eigenvalues(h);
  return std::max(std::abs(ev.front()), std::abs(ev.back()));
}

double schatten_norm(const HermitianMatrix& h, double p) {
  if (!(p >= 1.0)) throw InvalidArgument("schatten_norm: p must be >= 1 (got " + std::to_string(p) + ")");
  const auto ev = eigenvalues(h);
  if (std::isinf(p)) return std::max(std::abs(ev.front()), std::abs(ev.back()));
  double s = 0.0;
  for (double l : ev) s += std::pow(std::abs(l), p);
  return std::pow(s, 1.0 / p);
}

bool is_projection(const HermitianMatrix& p, double tol) {
  const std::size_t n = p.dim();
  if (hermitian_deviation(n, p.entries()) > tol) return false;
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Complex z{};
      for (std::size_t k = 0; k < n; ++k) z += p(i, k) * p(k, j);
      s += std::norm(z - p(i, j));
    }
  }
  return std::sqrt(s) <= tol;
}

double diagonal_delta(const HermitianMatrix& p) {
  double d = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < p.dim(); ++i) d = std::max(d, p(i, i).real());
  return d;
}

}  // namespace ks
