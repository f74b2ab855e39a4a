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
#include <deque>
#include <limits>
#include <optional>

#include "ks/discrepancy.hpp"
#include "ks/error.hpp"

namespace ks {

namespace {

constexpr double kRankTolerance = 1e-10;
constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

class SpanningPartitioner {
 public:
  SpanningPartitioner(const VectorSystem& vs, std::size_t r)
      : vs_(vs), r_(r), parts_(r), owner_(vs.size(), kNone) {}

  // One pass of greedy matroid-union insertion, repeated until stable.
  void run() {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t x = 0; x < vs_.size(); ++x)
        if (owner_[x] == kNone && augment(x)) changed = true;
    }
  }

  bool spanning() const {
    for (const auto& p : parts_)
      if (p.size() != vs_.k()) return false;
    return true;
  }

  Partition partition() const {
    std::vector<std::size_t> a(vs_.size(), 0);
    for (std::size_t e = 0; e < vs_.size(); ++e)
      if (owner_[e] != kNone) a[e] = owner_[e];
    return Partition(r_, std::move(a));
  }

  // Elements reachable from the unassigned ones in the exchange graph span
  // every part's share of them, so X = complement of that set satisfies
  // |X| + r * rank(E \ X) = |union of parts| < r k.
  ViolatingSet violation() const {
    std::vector<bool> reached(vs_.size(), false);
    std::deque<std::size_t> queue;
    for (std::size_t e = 0; e < vs_.size(); ++e)
      if (owner_[e] == kNone) {
        reached[e] = true;
        queue.push_back(e);
      }
    while (!queue.empty()) {
      const std::size_t y = queue.front();
      queue.pop_front();
      for (std::size_t j = 0; j < r_; ++j) {
        if (owner_[y] == j) continue;
        for (std::size_t z : circuit(j, y))
          if (!reached[z]) {
            reached[z] = true;
            queue.push_back(z);
          }
      }
    }
    ViolatingSet out{{}, 0};
    std::vector<ComplexVector> kept;
    for (std::size_t e = 0; e < vs_.size(); ++e) {
      if (reached[e])
        kept.push_back(vs_[e]);
      else
        out.indices.push_back(e);
    }
    out.complement_rank = numerical_rank(kept);
    return out;
  }

 private:
  bool independent_with(std::size_t part, std::size_t add, std::size_t drop = kNone) const {
    std::vector<ComplexVector> family;
    for (std::size_t e : parts_[part])
      if (e != drop) family.push_back(vs_[e]);
    family.push_back(vs_[add]);
    return numerical_rank(family) == family.size();
  }

  // Elements z of part j such that part j - z + y is independent, given that
  // part j + y is dependent: the fundamental circuit of y minus y itself.
  std::vector<std::size_t> circuit(std::size_t j, std::size_t y) const {
    if (independent_with(j, y)) return {};
    std::vector<std::size_t> out;
    for (std::size_t z : parts_[j])
      if (independent_with(j, y, z)) out.push_back(z);
    return out;
  }

  // Shortest augmenting path from x by BFS over exchange edges.
  bool augment(std::size_t x) {
    struct Step {
      std::size_t prev;
      std::size_t part;
    };
    std::vector<std::optional<Step>> parent(vs_.size());
    std::vector<bool> seen(vs_.size(), false);
    std::deque<std::size_t> queue{x};
    seen[x] = true;
    while (!queue.empty()) {
      const std::size_t y = queue.front();
      queue.pop_front();
      for (std::size_t j = 0; j < r_; ++j) {
        if (owner_[y] == j) continue;
        if (independent_with(j, y)) {
          // y -> j, then walk back: each predecessor takes its successor's slot.
          std::vector<std::pair<std::size_t, std::size_t>> moves{{y, j}};
          for (std::size_t cur = y; cur != x;) {
            const Step s = *parent[cur];
            moves.emplace_back(s.prev, s.part);
            cur = s.prev;
          }
          for (const auto& [e, part] : moves)
            if (owner_[e] != kNone) std::erase(parts_[owner_[e]], e);
          for (const auto& [e, part] : moves) {
            parts_[part].push_back(e);
            owner_[e] = part;
          }
          return true;
        }
        for (std::size_t z : parts_[j]) {
          if (seen[z] || !independent_with(j, y, z)) continue;
          seen[z] = true;
          parent[z] = Step{y, j};
          queue.push_back(z);
        }
      }
    }
    return false;
  }

  const VectorSystem& vs_;
  std::size_t r_;
  std::vector<std::vector<std::size_t>> parts_;
  std::vector<std::size_t> owner_;
};

}  // namespace

std::size_t numerical_rank(std::span<const ComplexVector> vectors) {
  if (vectors.empty()) return 0;
  const std::size_t rows = vectors[0].dim();
  const std::size_t cols = vectors.size();
  std::vector<Complex> m(rows * cols);
  double scale = 0.0;
  for (std::size_t c = 0; c < cols; ++c) {
    if (vectors[c].dim() != rows) throw InvalidArgument("numerical_rank: dimension mismatch");
    for (std::size_t r = 0; r < rows; ++r) m[r * cols + c] = vectors[c][r];
    scale = std::max(scale, vectors[c].norm());
  }
  if (scale == 0.0) return 0;
  const double threshold = kRankTolerance * scale;

  std::size_t rank = 0;
  std::vector<std::size_t> row_of(rows), col_of(cols);
  for (std::size_t i = 0; i < rows; ++i) row_of[i] = i;
  for (std::size_t i = 0; i < cols; ++i) col_of[i] = i;
  for (; rank < std::min(rows, cols); ++rank) {
    double best = 0.0;
    std::size_t br = rank, bc = rank;
    for (std::size_t r = rank; r < rows; ++r)
      for (std::size_t c = rank; c < cols; ++c) {
        const double a = std::abs(m[row_of[r] * cols + col_of[c]]);
        if (a > best) {
          best = a;
          br = r;
          bc = c;
        }
      }
    if (best <= threshold) break;
    std::swap(row_of[rank], row_of[br]);
    std::swap(col_of[rank], col_of[bc]);
    const Complex pivot = m[row_of[rank] * cols + col_of[rank]];
    for (std::size_t r = rank + 1; r < rows; ++r) {
      const Complex f = m[row_of[r] * cols + col_of[rank]] / pivot;
      if (f == Complex{}) continue;
      for (std::size_t c = rank; c < cols; ++c)
        m[row_of[r] * cols + col_of[c]] -= f * m[row_of[rank] * cols + col_of[c]];
    }
  }
  return rank;
}

std::variant<Partition, ViolatingSet> matroid_spanning_partition(const VectorSystem& vs,
                                                                 std::size_t r) {
  if (r == 0) throw InvalidArgument("matroid_spanning_partition: r must be >= 1");
  SpanningPartitioner engine(vs, r);
  engine.run();
  if (engine.spanning()) {
    Partition p = engine.partition();
    for (const auto& part : p.members()) {
      std::vector<ComplexVector> family;
      for (std::size_t i : part) family.push_back(vs[i]);
      if (numerical_rank(family) != vs.k())
        throw InternalError("matroid_spanning_partition: part fails the rank check");
    }
    return p;
  }
  return engine.violation();
}

}  // namespace ks
