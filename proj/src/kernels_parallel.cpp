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

#include <bit>
#include <exception>
#include <limits>
#include <mutex>

#include "ks/error.hpp"
#include "ks/kernels.hpp"

namespace ks::kernels::parallel {

namespace {

constexpr std::uint64_t kChunk = 4096;

// Collects the first exception thrown inside an OpenMP region so it can be
// rethrown on the calling thread.
class ExceptionSlot {
 public:
  template <class F>
  void run(F&& f) {
    try {
      f();
    } catch (...) {
      std::lock_guard lock(mu_);
      if (!error_) error_ = std::current_exception();
    }
  }
  void rethrow() const {
    if (error_) std::rethrow_exception(error_);
  }

 private:
  std::mutex mu_;
  std::exception_ptr error_;
};

std::uint64_t chunks_for(std::uint64_t total) { return (total + kChunk - 1) / kChunk; }

struct SignChunk {
  double value = std::numeric_limits<double>::infinity();
  std::uint64_t pattern = 0;  // bit (n-1-i) set <=> signs[i] == -1
};

}  // namespace

SignSearchResult min_signed_norm(std::span<const HermitianMatrix> terms) {
  const std::size_t n = terms.size();
  if (n == 0) throw InvalidArgument("min_signed_norm: no terms");
  if (n > 40) throw BudgetExceeded("min_signed_norm: exhaustive search limited to 40 terms");
  const std::size_t dim = terms[0].dim();
  for (const auto& t : terms)
    if (t.dim() != dim) throw InvalidArgument("min_signed_norm: terms of different dimension");

  std::vector<HermitianMatrix> twice_plus, twice_minus;
  for (const auto& t : terms) {
    twice_plus.push_back(t * 2.0);
    twice_minus.push_back(t * -2.0);
  }

  const std::uint64_t total = std::uint64_t{1} << (n - 1);
  const std::uint64_t chunks = chunks_for(total);
  std::vector<SignChunk> results(chunks);
  ExceptionSlot slot;

#pragma omp parallel for schedule(dynamic)
  for (std::int64_t c = 0; c < static_cast<std::int64_t>(chunks); ++c) {
    slot.run([&] {
      const std::uint64_t begin = static_cast<std::uint64_t>(c) * kChunk;
      const std::uint64_t end = std::min(total, begin + kChunk);
      SignChunk best;
      std::uint64_t gray = begin ^ (begin >> 1);
      HermitianMatrix sum = HermitianMatrix::zero(dim);
      for (std::size_t i = 0; i < n; ++i)
        sum += terms[i] * ((gray >> (n - 1 - i)) & 1 ? -1.0 : 1.0);
      for (std::uint64_t p = begin; p < end; ++p) {
        if (p != begin) {
          const std::uint64_t next = p ^ (p >> 1);
          const std::uint64_t flipped = next ^ gray;
          const std::size_t i = n - 1 - static_cast<std::size_t>(std::countr_zero(flipped));
          sum += (next & flipped) ? twice_minus[i] : twice_plus[i];
          gray = next;
        }
        const double v = opnorm(sum);
        if ((v < best.value && !within_tie(v, best.value)) ||
            (within_tie(v, best.value) && gray < best.pattern)) {
          best.value = v;
          best.pattern = gray;
        }
      }
      results[static_cast<std::size_t>(c)] = best;
    });
  }
  slot.rethrow();

  SignChunk best;
  for (const SignChunk& r : results) {
    if ((r.value < best.value && !within_tie(r.value, best.value)) ||
        (within_tie(r.value, best.value) && r.pattern < best.pattern))
      best = r;
  }
  SignSearchResult out{std::vector<int>(n), best.value, total};
  for (std::size_t i = 0; i < n; ++i) out.signs[i] = (best.pattern >> (n - 1 - i)) & 1 ? -1 : 1;
  return out;
}

AssignmentSearchResult min_assignment(std::size_t n, std::size_t r,
                                      const AssignmentObjective& objective) {
  if (n == 0 || r == 0) throw InvalidArgument("min_assignment: empty problem");
  std::uint64_t total = 1;
  for (std::size_t i = 1; i < n; ++i) {
    if (total > (std::uint64_t{1} << 62) / r)
      throw BudgetExceeded("min_assignment: r^n overflows the enumeration counter");
    total *= r;
  }
  const std::uint64_t chunks = chunks_for(total);

  struct Chunk {
    double value = std::numeric_limits<double>::infinity();
    std::vector<std::size_t> assignment;
    std::uint64_t evaluations = 0;
  };
  std::vector<Chunk> results(chunks);
  ExceptionSlot slot;

#pragma omp parallel for schedule(dynamic)
  for (std::int64_t c = 0; c < static_cast<std::int64_t>(chunks); ++c) {
    slot.run([&] {
      const std::uint64_t begin = static_cast<std::uint64_t>(c) * kChunk;
      const std::uint64_t end = std::min(total, begin + kChunk);
      Chunk best;
      std::vector<std::size_t> a(n, 0);
      for (std::uint64_t idx = begin; idx < end; ++idx) {
        std::uint64_t rest = idx;
        for (std::size_t pos = n; pos-- > 1;) {
          a[pos] = static_cast<std::size_t>(rest % r);
          rest /= r;
        }
        std::size_t top = 0;
        bool growth = true;
        for (std::size_t pos = 1; pos < n && growth; ++pos) {
          if (a[pos] > top + 1) growth = false;
          top = std::max(top, a[pos]);
        }
        if (!growth) continue;
        const double v = objective(a);
        ++best.evaluations;
        if (v < best.value && !within_tie(v, best.value)) {
          best.value = v;
          best.assignment = a;
        }
      }
      results[static_cast<std::size_t>(c)] = std::move(best);
    });
  }
  slot.rethrow();

  AssignmentSearchResult out{{}, std::numeric_limits<double>::infinity(), 0};
  for (Chunk& r : results) {
    out.evaluations += r.evaluations;
    if (r.assignment.empty()) continue;
    if (r.value < out.value && !within_tie(r.value, out.value)) {
      out.value = r.value;
      out.assignment = std::move(r.assignment);
    }
  }
  return out;
}

FormMaximum max_quadratic_form(const HermitianMatrix& h, std::span<const ComplexVector> points) {
  const std::uint64_t chunks = chunks_for(points.size());
  std::vector<FormMaximum> results(chunks, {-std::numeric_limits<double>::infinity(), 0});
#pragma omp parallel for schedule(static)
  for (std::int64_t c = 0; c < static_cast<std::int64_t>(chunks); ++c) {
    const std::size_t begin = static_cast<std::size_t>(c) * kChunk;
    const std::size_t end = std::min<std::size_t>(points.size(), begin + kChunk);
    FormMaximum best{-std::numeric_limits<double>::infinity(), begin};
    for (std::size_t p = begin; p < end; ++p) {
      const double v = quadratic_form(h, points[p]);
      if (v > best.value) best = {v, p};
    }
    results[static_cast<std::size_t>(c)] = best;
  }
  FormMaximum best{-std::numeric_limits<double>::infinity(), 0};
  for (const auto& r : results)
    if (r.value > best.value) best = r;
  return best;
}

std::vector<double> gaussian_opnorms(std::size_t k, std::size_t samples, std::uint64_t seed) {
  std::vector<double> out(samples);
  ExceptionSlot slot;
#pragma omp parallel for schedule(static)
  for (std::int64_t s = 0; s < static_cast<std::int64_t>(samples); ++s) {
    slot.run([&] {
      out[static_cast<std::size_t>(s)] =
          opnorm(gaussian_hermitian(k, seed, static_cast<std::uint64_t>(s)));
    });
  }
  slot.rethrow();
  return out;
}

}  // namespace ks::kernels::parallel
