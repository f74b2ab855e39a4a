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

#include <cmath>
#include <limits>

#include "ks/error.hpp"
#include "ks/kernels.hpp"
#include "ks/rng.hpp"

namespace ks::kernels {

HermitianMatrix gaussian_hermitian(std::size_t k, std::uint64_t seed, std::uint64_t stream) {
  CounterRng rng(seed, stream);
  std::vector<Complex> e(k * k);
  const double off_sd = std::sqrt(0.5);
  for (std::size_t i = 0; i < k; ++i) {
    e[i * k + i] = rng.normal();
    for (std::size_t j = i + 1; j < k; ++j) {
      const double re = off_sd * rng.normal();
      const double im = off_sd * rng.normal();
      e[i * k + j] = Complex(re, im);
      e[j * k + i] = Complex(re, -im);
    }
  }
  return HermitianMatrix::from_entries(k, std::move(e));
}

double quadratic_form(const HermitianMatrix& h, const ComplexVector& u) {
  const std::size_t n = h.dim();
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    Complex row{};
    for (std::size_t j = 0; j < n; ++j) row += h(i, j) * u[j];
    s += (std::conj(u[i]) * row).real();
  }
  return s;
}

bool signs_less(std::span<const int> a, std::span<const int> b) {
  for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i)
    if (a[i] != b[i]) return a[i] > b[i];  // +1 sorts first
  return a.size() < b.size();
}

namespace serial {

SignSearchResult min_signed_norm(std::span<const HermitianMatrix> terms) {
  const std::size_t n = terms.size();
  if (n == 0) throw InvalidArgument("min_signed_norm: no terms");
  if (n > 40) throw BudgetExceeded("min_signed_norm: serial brute force limited to 40 terms");
  const std::size_t dim = terms[0].dim();
  SignSearchResult best{{}, std::numeric_limits<double>::infinity(), 0};
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<int> signs(n);
    HermitianMatrix sum = HermitianMatrix::zero(dim);
    for (std::size_t i = 0; i < n; ++i) {
      signs[i] = (mask >> (n - 1 - i)) & 1 ? -1 : 1;
      sum += terms[i] * static_cast<double>(signs[i]);
    }
    const double v = opnorm(sum);
    ++best.evaluations;
    if (v < best.value && !within_tie(v, best.value)) {
      best.value = v;
      best.signs = std::move(signs);
    }
  }
  return best;
}

AssignmentSearchResult min_assignment(std::size_t n, std::size_t r,
                                      const AssignmentObjective& objective) {
  if (n == 0 || r == 0) throw InvalidArgument("min_assignment: empty problem");
  std::vector<std::size_t> a(n, 0);
  AssignmentSearchResult best{{}, std::numeric_limits<double>::infinity(), 0};
  while (true) {
    const double v = objective(a);
    ++best.evaluations;
    if (v < best.value && !within_tie(v, best.value)) {
      best.value = v;
      best.assignment = a;
    }
    // odometer increment, last position fastest
    std::size_t pos = n;
    while (pos > 0) {
      --pos;
      if (++a[pos] < r) break;
      a[pos] = 0;
      if (pos == 0) return best;
    }
  }
}

FormMaximum max_quadratic_form(const HermitianMatrix& h, std::span<const ComplexVector> points) {
  FormMaximum best{-std::numeric_limits<double>::infinity(), 0};
  for (std::size_t p = 0; p < points.size(); ++p) {
    const double v = quadratic_form(h, points[p]);
    if (v > best.value) best = {v, p};
  }
  return best;
}

std::vector<double> gaussian_opnorms(std::size_t k, std::size_t samples, std::uint64_t seed) {
  std::vector<double> out(samples);
  for (std::size_t s = 0; s < samples; ++s) out[s] = opnorm(gaussian_hermitian(k, seed, s));
  return out;
}

}  // namespace serial
}  // namespace ks::kernels
