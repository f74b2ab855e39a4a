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

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "ks/discrepancy.hpp"
#include "ks/error.hpp"

namespace ks {

namespace {

constexpr double kPivotThreshold = 1e-11;
constexpr double kSnap = 1e-12;

// A nonzero vector y with M y = 0, where M is rows x cols (row-major) and
// rows < cols. Lowest-index free column gets y = 1.
std::vector<double> null_vector(std::vector<double> m, std::size_t rows, std::size_t cols) {
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t best = row;
    for (std::size_t r = row + 1; r < rows; ++r)
      if (std::abs(m[r * cols + col]) > std::abs(m[best * cols + col])) best = r;
    if (std::abs(m[best * cols + col]) <= kPivotThreshold) continue;
    for (std::size_t c = 0; c < cols; ++c) std::swap(m[row * cols + c], m[best * cols + c]);
    const double p = m[row * cols + col];
    for (std::size_t c = 0; c < cols; ++c) m[row * cols + c] /= p;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == row) continue;
      const double f = m[r * cols + col];
      if (f == 0.0) continue;
      for (std::size_t c = 0; c < cols; ++c) m[r * cols + c] -= f * m[row * cols + c];
    }
    pivot_col.push_back(col);
    is_pivot[col] = true;
    ++row;
  }
  std::size_t free = cols;
  for (std::size_t c = 0; c < cols; ++c)
    if (!is_pivot[c]) {
      free = c;
      break;
    }
  if (free == cols) throw InternalError("beck_fiala_signs: active system has trivial nullspace");
  std::vector<double> y(cols, 0.0);
  y[free] = 1.0;
  for (std::size_t r = 0; r < pivot_col.size(); ++r) y[pivot_col[r]] = -m[r * cols + free];
  return y;
}

}  // namespace

CoordinateProfile coordinate_profile(const VectorSystem& vs) {
  CoordinateProfile cp{vs.k(), {}};
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (vs[i].norm_squared() > 1.0 + 1e-12)
      throw InvalidArgument("coordinate_profile: vector " + std::to_string(i) + " has norm > 1");
    std::vector<double> row(vs.k());
    for (std::size_t j = 0; j < vs.k(); ++j) row[j] = std::norm(vs[i][j]);
    cp.a.push_back(std::move(row));
  }
  return cp;
}

double linf_discrepancy(const CoordinateProfile& cp, const SignVector& s) {
  if (s.signs.size() != cp.a.size()) throw InvalidArgument("linf_discrepancy: length mismatch");
  double worst = 0.0;
  for (std::size_t j = 0; j < cp.k; ++j) {
    double sum = 0.0;
    for (std::size_t i = 0; i < cp.a.size(); ++i) sum += s.signs[i] * cp.a[i][j];
    worst = std::max(worst, std::abs(sum));
  }
  return worst;
}

SignVector beck_fiala_signs(const CoordinateProfile& cp) {
  const std::size_t n = cp.a.size();
  const std::size_t k = cp.k;
  for (std::size_t i = 0; i < n; ++i) {
    if (cp.a[i].size() != k) throw InvalidArgument("beck_fiala_signs: ragged profile");
    double l1 = 0.0;
    for (double x : cp.a[i]) {
      if (!(x >= 0.0) || !std::isfinite(x))
        throw InvalidArgument("beck_fiala_signs: entries must be finite and nonnegative");
      l1 += x;
    }
    if (l1 > 1.0 + 1e-12)
      throw InvalidArgument("beck_fiala_signs: ||a_" + std::to_string(i) + "||_1 > 1");
  }

  std::vector<double> x(n, 0.0);
  std::vector<bool> frozen(n, false);
  for (std::size_t round = 0; round < n; ++round) {
    std::vector<std::size_t> floating;
    for (std::size_t i = 0; i < n; ++i)
      if (!frozen[i]) floating.push_back(i);
    if (floating.empty()) break;

    // Rows whose floating mass exceeds 1 must keep their sum fixed. There
    // are fewer of them than floating variables since each ||a_i||_1 <= 1.
    std::vector<std::size_t> active;
    for (std::size_t j = 0; j < k; ++j) {
      double mass = 0.0;
      for (std::size_t i : floating) mass += cp.a[i][j];
      if (mass > 1.0) active.push_back(j);
    }
    std::vector<double> m(active.size() * floating.size());
    for (std::size_t r = 0; r < active.size(); ++r)
      for (std::size_t c = 0; c < floating.size(); ++c)
        m[r * floating.size() + c] = cp.a[floating[c]][active[r]];
    const std::vector<double> y = null_vector(std::move(m), active.size(), floating.size());

    double step = std::numeric_limits<double>::infinity();
    std::size_t hit = floating.size();
    for (std::size_t c = 0; c < floating.size(); ++c) {
      if (y[c] == 0.0) continue;
      const double xi = x[floating[c]];
      const double t = y[c] > 0.0 ? (1.0 - xi) / y[c] : (-1.0 - xi) / y[c];
      if (t < step) {
        step = t;
        hit = c;
      }
    }
    if (hit == floating.size()) throw InternalError("beck_fiala_signs: zero direction");
    for (std::size_t c = 0; c < floating.size(); ++c) x[floating[c]] += step * y[c];
    x[floating[hit]] = y[hit] > 0.0 ? 1.0 : -1.0;
    for (std::size_t i : floating) {
      if (std::abs(x[i] - 1.0) <= kSnap) x[i] = 1.0;
      if (std::abs(x[i] + 1.0) <= kSnap) x[i] = -1.0;
      if (x[i] == 1.0 || x[i] == -1.0) frozen[i] = true;
    }
  }

  SignVector s{std::vector<int>(n)};
  for (std::size_t i = 0; i < n; ++i) {
    if (!frozen[i]) throw InternalError("beck_fiala_signs: variable left fractional");
    s.signs[i] = x[i] > 0.0 ? 1 : -1;
  }
  const double disc = linf_discrepancy(cp, s);
  if (disc > 2.0 + 1e-9)
    throw InternalError("beck_fiala_signs: discrepancy " + std::to_string(disc) + " exceeds 2");
  return s;
}

}  // namespace ks
