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

#include "ks/frames.hpp"

#include <algorithm>
#include <cstdio>
#include <cmath>
#include <numbers>
#include <string>

#include "ks/error.hpp"

namespace ks {

namespace {

constexpr double kDropEigenvalue = 1e-12;
constexpr double kFrameBoundSlack = 1e-10;

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

}  // namespace

VectorSystem::VectorSystem(std::size_t k, std::vector<ComplexVector> vectors)
    : k_(k), vectors_(std::move(vectors)) {
  if (k_ == 0) throw InvalidArgument("VectorSystem: k must be >= 1");
  if (vectors_.empty()) throw InvalidArgument("VectorSystem: needs at least one vector");
  for (const auto& v : vectors_)
    if (v.dim() != k_)
      throw InvalidArgument("VectorSystem: vector of dimension " + std::to_string(v.dim()) +
                            " in a system with k = " + std::to_string(k_));
}

double VectorSystem::max_norm_squared() const {
  double m = 0.0;
  for (const auto& v : vectors_) m = std::max(m, v.norm_squared());
  return m;
}

VectorSystem VectorSystem::select(std::span<const std::size_t> indices) const {
  std::vector<ComplexVector> out;
  out.reserve(indices.size());
  for (std::size_t i : indices) {
    if (i >= size()) throw InvalidArgument("VectorSystem: index " + std::to_string(i) + " out of range");
    out.push_back(vectors_[i]);
  }
  return VectorSystem(k_, std::move(out));
}

Partition::Partition(std::size_t r, std::vector<std::size_t> assignment)
    : r_(r), assignment_(std::move(assignment)) {
  if (r_ == 0) throw InvalidArgument("Partition: r must be >= 1");
  for (std::size_t a : assignment_)
    if (a >= r_) throw InvalidArgument("Partition: part index out of range");
}

std::vector<std::vector<std::size_t>> Partition::members() const {
  std::vector<std::vector<std::size_t>> out(r_);
  for (std::size_t i = 0; i < assignment_.size(); ++i) out[assignment_[i]].push_back(i);
  return out;
}

double PartitionCertificate::max_bound() const {
  return *std::max_element(per_part_bound.begin(), per_part_bound.end());
}

HermitianMatrix frame_operator(const VectorSystem& vs) {
  HermitianMatrix s = HermitianMatrix::zero(vs.k());
  for (const auto& v : vs.vectors()) s.add_rank_one(v);
  return s;
}

double frame_bound(const VectorSystem& vs) { return max_eigenvalue(frame_operator(vs)); }

double subset_frame_bound(const VectorSystem& vs, std::span<const std::size_t> subset) {
  if (subset.empty()) return 0.0;
  HermitianMatrix s = HermitianMatrix::zero(vs.k());
  for (std::size_t i : subset) {
    if (i >= vs.size())
      throw InvalidArgument("subset_frame_bound: index " + std::to_string(i) + " out of range");
    s.add_rank_one(vs[i]);
  }
  return max_eigenvalue(s);
}

PartitionCertificate partition_certificate(const VectorSystem& vs, const Partition& p, double N) {
  if (p.size() != vs.size())
    throw InvalidArgument("partition_certificate: partition covers " + std::to_string(p.size()) +
                          " indices, system has " + std::to_string(vs.size()));
  std::vector<double> bounds;
  for (const auto& part : p.members()) bounds.push_back(subset_frame_bound(vs, part));
  const double worst = *std::max_element(bounds.begin(), bounds.end());
  return PartitionCertificate{p, std::move(bounds), N - worst, N};
}

VectorSystem scale_system(const VectorSystem& vs, double t) {
  if (!(t > 0.0) || !std::isfinite(t)) throw InvalidArgument("scale_system: t must be > 0");
  std::vector<ComplexVector> out;
  out.reserve(vs.size());
  for (const auto& v : vs.vectors()) out.push_back(v * t);
  return VectorSystem(vs.k(), std::move(out));
}

TightCompletion complete_to_tight(const VectorSystem& vs, double N, double cap) {
  if (!(cap > 0.0)) throw InvalidArgument("complete_to_tight: cap must be > 0");
  const HermitianMatrix s = frame_operator(vs);
  const double bound = max_eigenvalue(s);
  if (bound > N + kFrameBoundSlack)
    throw Infeasible("complete_to_tight: frame bound " + num(bound) + " exceeds N = " + num(N));

  HermitianMatrix residual = HermitianMatrix::identity(vs.k()) * N - s;
  Eigensystem es = eigensystem(residual);

  std::vector<ComplexVector> all(vs.vectors().begin(), vs.vectors().end());
  std::vector<ComplexVector> added;
  for (std::size_t t = 0; t < es.eigenvalues.size(); ++t) {
    const double b = es.eigenvalues[t];
    if (b < kDropEigenvalue) continue;
    // The (1 - 1e-13) factor keeps b == cap (up to rounding) in one piece.
    const double pieces = std::max(1.0, std::ceil(b / cap * (1.0 - 1e-13)));
    const ComplexVector piece = es.eigenvectors[t] * std::sqrt(b / pieces);
    for (double c = 0; c < pieces; c += 1.0) {
      added.push_back(piece);
      all.push_back(piece);
    }
  }
  return TightCompletion{VectorSystem(vs.k(), std::move(all)),
                         TightPadTrace{std::move(residual), std::move(es.eigenvalues),
                                       std::move(es.eigenvectors), std::move(added)}};
}

VectorSystem unit_norm_lift(const VectorSystem& vs, std::optional<double> N) {
  const std::size_t k = vs.k();
  const std::size_t n = vs.size();
  if (n < k)
    throw InvalidArgument("unit_norm_lift: needs n >= k (restrict to the span first); n = " +
                          std::to_string(n) + ", k = " + std::to_string(k));
  for (std::size_t i = 0; i < n; ++i)
    if (vs[i].norm_squared() > 1.0 + 2e-12)
      throw InvalidArgument("unit_norm_lift: vector " + std::to_string(i) + " has norm " +
                            num(vs[i].norm()) + " > 1");
  if (N) {
    if (*N < 4.0) throw InvalidArgument("unit_norm_lift: N must be >= 4");
    const double bound = frame_bound(vs);
    if (bound > *N - std::sqrt(*N) + kFrameBoundSlack)
      throw Infeasible("unit_norm_lift: frame bound " + num(bound) + " exceeds N - sqrt(N) = " +
                       num(*N - std::sqrt(*N)));
  }
  const std::size_t m = k + n;
  std::vector<ComplexVector> out;
  out.reserve(m);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Complex> w(m);
    std::copy(vs[i].entries().begin(), vs[i].entries().end(), w.begin());
    w[k + i] = std::sqrt(std::max(0.0, 1.0 - vs[i].norm_squared()));
    out.emplace_back(std::move(w));
  }
  for (std::size_t i = 0; i < k; ++i) out.push_back(ComplexVector::basis(m, k + i));
  return VectorSystem(m, std::move(out));
}

TightCompletion tight_pad_unit(const VectorSystem& vs, int N) {
  const std::size_t m = vs.k();
  if (N < 2) throw InvalidArgument("tight_pad_unit: N must be an integer >= 2");
  if (vs.size() != m)
    throw InvalidArgument("tight_pad_unit: needs as many vectors as dimensions (" +
                          std::to_string(vs.size()) + " vectors in C^" + std::to_string(m) + ")");
  for (std::size_t i = 0; i < m; ++i)
    if (std::abs(vs[i].norm() - 1.0) > 1e-10)
      throw InvalidArgument("tight_pad_unit: vector " + std::to_string(i) + " is not unit");

  const HermitianMatrix s = frame_operator(vs);
  const double bound = max_eigenvalue(s);
  if (bound > N + kFrameBoundSlack)
    throw Infeasible("tight_pad_unit: frame bound " + num(bound) + " exceeds N = " +
                     std::to_string(N));

  HermitianMatrix residual = HermitianMatrix::identity(m) * static_cast<double>(N) - s;
  const double scale = static_cast<double>(N - 1) * static_cast<double>(m);
  if (std::abs(residual.trace() - scale) > 1e-8)
    throw InternalError("tight_pad_unit: trace identity tr(B) = (N-1)m failed: " +
                        num(residual.trace()) + " vs " + num(scale));

  Eigensystem es = eigensystem(residual);
  std::vector<double> weight(m);
  for (std::size_t t = 0; t < m; ++t) weight[t] = std::sqrt(std::max(0.0, es.eigenvalues[t]) / scale);

  std::vector<ComplexVector> unit;
  unit.reserve(m);
  for (std::size_t s_idx = 0; s_idx < m; ++s_idx) {
    std::vector<Complex> u(m);
    for (std::size_t t = 0; t < m; ++t) {
      // <u_s, f_t> = c_st, so u_s = sum_t c_st f_t.
      const double angle = 2.0 * std::numbers::pi * static_cast<double>((s_idx * t) % m) /
                           static_cast<double>(m);
      const Complex c = weight[t] * std::polar(1.0, angle);
      const ComplexVector& f = es.eigenvectors[t];
      for (std::size_t a = 0; a < m; ++a) u[a] += c * f[a];
    }
    unit.emplace_back(std::move(u));
  }

  std::vector<ComplexVector> all(vs.vectors().begin(), vs.vectors().end());
  std::vector<ComplexVector> added;
  for (int copy = 0; copy < N - 1; ++copy)
    for (const auto& u : unit) {
      added.push_back(u);
      all.push_back(u);
    }
  return TightCompletion{VectorSystem(m, std::move(all)),
                         TightPadTrace{std::move(residual), std::move(es.eigenvalues),
                                       std::move(es.eigenvectors), std::move(added)}};
}

}  // namespace ks
