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
#include <numbers>
#include <string>

#include "ks/discrepancy.hpp"
#include "ks/error.hpp"
#include "ks/kernels.hpp"
#include "ks/rng.hpp"

namespace ks {

namespace {

// theta in [0, pi/2] sampled at A + 1 points with spacing <= mesh; at each
// theta, ceil(2 pi sin(theta) / mesh) phases. Nearest theta is within
// mesh/2 along a unit-speed curve, nearest phase within sin(theta) * pi / M
// <= mesh/2, so every phase-normalized unit vector is within mesh.
struct Lattice2 {
  std::size_t theta_intervals;
  std::vector<std::size_t> phases;  // per theta row
  std::size_t total;
};

Lattice2 lattice2(double mesh) {
  const double half_pi = std::numbers::pi / 2.0;
  const double a = std::ceil(half_pi / mesh);
  if (a > 1e7) throw BudgetExceeded("build_epsilon_net: mesh too small");
  Lattice2 l{static_cast<std::size_t>(a), {}, 0};
  for (std::size_t i = 0; i <= l.theta_intervals; ++i) {
    const double theta = half_pi * static_cast<double>(i) / static_cast<double>(l.theta_intervals);
    const double m = std::max(1.0, std::ceil(2.0 * std::numbers::pi * std::sin(theta) / mesh));
    l.phases.push_back(static_cast<std::size_t>(m));
    l.total += static_cast<std::size_t>(m);
  }
  return l;
}

std::size_t random_net_size(std::size_t k, double mesh) {
  // Covering numbers of the (2k-2)-dimensional phase quotient grow like
  // mesh^-(2k-2); oversample by a constant factor.
  const double count = 4.0 * std::pow(3.0 / mesh, static_cast<double>(2 * k - 2));
  if (count > 1e15) return std::numeric_limits<std::size_t>::max();
  return static_cast<std::size_t>(std::ceil(count));
}

ComplexVector random_unit(std::size_t k, CounterRng& rng) {
  std::vector<Complex> z(k);
  double norm = 0.0;
  while (norm == 0.0) {
    norm = 0.0;
    for (auto& x : z) {
      x = Complex(rng.normal(), rng.normal());
      norm += std::norm(x);
    }
  }
  norm = std::sqrt(norm);
  for (auto& x : z) x /= norm;
  return phase_normalize(ComplexVector(std::move(z)));
}

}  // namespace

ComplexVector phase_normalize(const ComplexVector& u) {
  for (std::size_t i = 0; i < u.dim(); ++i) {
    const double a = std::abs(u[i]);
    if (a == 0.0) continue;
    std::vector<Complex> out(u.entries().begin(), u.entries().end());
    const Complex rot = std::conj(u[i]) / a;
    for (auto& x : out) x *= rot;
    out[i] = a;
    return ComplexVector(std::move(out));
  }
  return u;
}

std::size_t epsilon_net_size(std::size_t k, double mesh) {
  if (k == 0) throw InvalidArgument("epsilon_net_size: k must be >= 1");
  if (!(mesh > 0.0)) throw InvalidArgument("epsilon_net_size: mesh must be > 0");
  if (k == 1) return 1;
  if (k == 2) return lattice2(mesh).total;
  return random_net_size(k, mesh);
}

EpsilonNet build_epsilon_net(std::size_t k, double mesh, std::uint64_t seed,
                             std::size_t max_points) {
  const std::size_t count = epsilon_net_size(k, mesh);
  if (count > max_points)
    throw BudgetExceeded("build_epsilon_net: mesh " + std::to_string(mesh) + " in k = " +
                         std::to_string(k) + " needs about " + std::to_string(count) +
                         " points (limit " + std::to_string(max_points) + ")");
  EpsilonNet net{k, mesh, {}, k <= 2};
  net.points.reserve(count);
  if (k == 1) {
    net.points.push_back(ComplexVector{Complex(1.0)});
  } else if (k == 2) {
    const Lattice2 l = lattice2(mesh);
    for (std::size_t i = 0; i <= l.theta_intervals; ++i) {
      const double theta =
          std::numbers::pi / 2.0 * static_cast<double>(i) / static_cast<double>(l.theta_intervals);
      const double c = std::cos(theta);
      const double s = std::sin(theta);
      for (std::size_t b = 0; b < l.phases[i]; ++b) {
        const double phi = 2.0 * std::numbers::pi * static_cast<double>(b) /
                           static_cast<double>(l.phases[i]);
        net.points.push_back(ComplexVector{Complex(c), std::polar(s, phi)});
      }
    }
  } else {
    for (std::size_t p = 0; p < count; ++p) {
      CounterRng rng(seed, p);
      net.points.push_back(random_unit(k, rng));
    }
  }
  return net;
}

double empirical_covering_radius(const EpsilonNet& net, std::size_t trials, std::uint64_t seed) {
  std::vector<double> nearest(trials);
#pragma omp parallel for schedule(static)
  for (std::int64_t t = 0; t < static_cast<std::int64_t>(trials); ++t) {
    CounterRng rng(seed, static_cast<std::uint64_t>(t));
    const ComplexVector u = random_unit(net.k, rng);
    double best = std::numeric_limits<double>::infinity();
    for (const auto& p : net.points) {
      double d = 0.0;
      for (std::size_t i = 0; i < net.k; ++i) d += std::norm(u[i] - p[i]);
      best = std::min(best, d);
    }
    nearest[static_cast<std::size_t>(t)] = std::sqrt(best);
  }
  return trials ? *std::max_element(nearest.begin(), nearest.end()) : 0.0;
}

NetBound net_certified_bound(const VectorSystem& vs, std::span<const std::size_t> subset,
                             const EpsilonNet& net, double N) {
  if (net.k != vs.k())
    throw InvalidArgument("net_certified_bound: net dimension " + std::to_string(net.k) +
                          " vs system dimension " + std::to_string(vs.k()));
  const double slack = 2.0 * N * net.mesh;
  if (subset.empty()) return NetBound{0.0, slack};
  HermitianMatrix h = HermitianMatrix::zero(vs.k());
  for (std::size_t i : subset) {
    if (i >= vs.size()) throw InvalidArgument("net_certified_bound: index out of range");
    h.add_rank_one(vs[i]);
  }
  const double net_max = kernels::parallel::max_quadratic_form(h, net.points).value;
  return NetBound{net_max, net_max + slack};
}

}  // namespace ks
