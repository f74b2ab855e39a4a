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

#include "ks/reductions.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <string>

#include "ks/error.hpp"

namespace ks {

namespace {

constexpr double kProjectionTolerance = 1e-8;
constexpr double kDeltaSlack = 1e-10;

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

}  // namespace

VectorSystem projection_to_vectors(const HermitianMatrix& P, double N) {
  if (!(N > 0.0)) throw InvalidArgument("projection_to_vectors: N must be positive");
  if (!is_projection(P, kProjectionTolerance))
    throw InvalidArgument("projection_to_vectors: input is not an orthogonal projection (tol 1e-8)");
  const double delta = diagonal_delta(P);
  if (delta > 1.0 / N + kDeltaSlack)
    throw InvalidArgument("projection_to_vectors: delta(P) = " + num(delta) + " exceeds 1/N = " +
                          num(1.0 / N));

  Eigensystem es = eigensystem(P);
  std::vector<std::size_t> range;
  for (std::size_t t = 0; t < es.eigenvalues.size(); ++t)
    if (es.eigenvalues[t] >= 0.5) range.push_back(t);
  if (range.empty()) throw InvalidArgument("projection_to_vectors: P is the zero projection");
  std::stable_sort(range.begin(), range.end(), [&](std::size_t a, std::size_t b) {
    return es.eigenvalues[a] > es.eigenvalues[b];
  });

  const std::size_t n = P.dim();
  const std::size_t k = range.size();
  const double root = std::sqrt(N);
  std::vector<ComplexVector> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    // <P e_i, g_a> = <e_i, g_a> = conj(g_a[i])
    std::vector<Complex> v(k);
    for (std::size_t a = 0; a < k; ++a) v[a] = root * std::conj(es.eigenvectors[range[a]][i]);
    out.emplace_back(std::move(v));
  }
  return VectorSystem(k, std::move(out));
}

ReductionTrace vectors_to_projection(const VectorSystem& vs, double N) {
  if (!(N > 0.0)) throw InvalidArgument("vectors_to_projection: N must be positive");
  for (std::size_t i = 0; i < vs.size(); ++i)
    if (vs[i].norm_squared() > 1.0 + 2e-12)
      throw InvalidArgument("vectors_to_projection: vector " + std::to_string(i) + " has norm " +
                            num(vs[i].norm()) + " > 1");
  const double bound = frame_bound(vs);
  if (bound > N + 1e-10)
    throw Infeasible("vectors_to_projection: frame bound " + num(bound) + " exceeds N = " + num(N));

  const VectorSystem scaled = scale_system(vs, 1.0 / std::sqrt(N));
  TightCompletion done = complete_to_tight(scaled, 1.0, 1.0 / N);
  const VectorSystem& w = done.system;
  const std::size_t m = w.size();

  std::vector<Complex> p(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) p[j * m + i] = inner(w[i], w[j]);
  HermitianMatrix P = HermitianMatrix::from_entries(m, std::move(p));

  std::vector<double> diag(m);
  for (std::size_t i = 0; i < m; ++i) diag[i] = P(i, i).real();
  HermitianMatrix D = HermitianMatrix::diagonal(diag);
  HermitianMatrix A = P - D;
  return ReductionTrace{m, w, std::move(P), std::move(D), std::move(A)};
}

std::vector<DiagonalProjection> partition_to_diagonal_projections(const Partition& p) {
  std::vector<DiagonalProjection> out;
  for (auto& members : p.members()) out.push_back(DiagonalProjection{p.size(), std::move(members)});
  return out;
}

HermitianMatrix compress(const HermitianMatrix& A, const DiagonalProjection& Q) {
  if (A.dim() != Q.n)
    throw InvalidArgument("compress: matrix dimension " + std::to_string(A.dim()) +
                          " vs projection dimension " + std::to_string(Q.n));
  const std::size_t n = A.dim();
  std::vector<bool> keep(n, false);
  for (std::size_t i : Q.support) {
    if (i >= n) throw InvalidArgument("compress: support index out of range");
    keep[i] = true;
  }
  std::vector<Complex> e(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (keep[i] && keep[j]) e[i * n + j] = A(i, j);
  return HermitianMatrix::from_entries(n, std::move(e));
}

double paving_quality(const HermitianMatrix& A, const Partition& p) {
  if (A.dim() != p.size())
    throw InvalidArgument("paving_quality: matrix dimension " + std::to_string(A.dim()) +
                          " vs partition length " + std::to_string(p.size()));
  // ||QAQ|| equals the norm of the principal submatrix on the support.
  double worst = 0.0;
  for (const auto& q : partition_to_diagonal_projections(p)) {
    const std::size_t s = q.support.size();
    if (s == 0) continue;
    std::vector<Complex> sub(s * s);
    for (std::size_t a = 0; a < s; ++a)
      for (std::size_t b = 0; b < s; ++b) sub[a * s + b] = A(q.support[a], q.support[b]);
    worst = std::max(worst, opnorm(HermitianMatrix::from_entries(s, std::move(sub))));
  }
  return worst;
}

}  // namespace ks
