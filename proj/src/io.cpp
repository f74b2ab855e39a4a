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

#include "ks/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "ks/error.hpp"

namespace ks::io {

namespace {

json complex_list(std::span<const Complex> zs) {
  json out = json::array();
  for (const Complex& z : zs) out.push_back(json::array({z.real(), z.imag()}));
  return out;
}

std::vector<Complex> complex_list_from(const json& j, const char* what) {
  if (!j.is_array()) throw InvalidArgument(std::string(what) + ": expected an array of [re, im]");
  std::vector<Complex> out;
  out.reserve(j.size());
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number())
      throw InvalidArgument(std::string(what) + ": entries must be [re, im] number pairs");
    out.emplace_back(e[0].get<double>(), e[1].get<double>());
  }
  return out;
}

template <class F>
auto guarded(const char* what, F&& f) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string(what) + ": " + e.what());
  }
}

}  // namespace

json to_json(const ComplexVector& v) { return json{{"entries", complex_list(v.entries())}}; }

json to_json(const HermitianMatrix& m) {
  return json{{"dim", m.dim()}, {"entries", complex_list(m.entries())}};
}

json to_json(const VectorSystem& vs) {
  json vectors = json::array();
  for (const auto& v : vs.vectors()) vectors.push_back(complex_list(v.entries()));
  return json{{"k", vs.k()}, {"vectors", vectors}};
}

json to_json(const Partition& p) {
  json a = json::array();
  for (std::size_t x : p.assignment()) a.push_back(x + 1);
  return json{{"r", p.parts()}, {"assignment", a}};
}

json to_json(const SignVector& s) { return json{{"signs", s.signs}}; }

json to_json(const DiagonalProjection& q) {
  json support = json::array();
  for (std::size_t i : q.support) support.push_back(i + 1);
  return json{{"n", q.n}, {"support", support}};
}

ComplexVector vector_from_json(const json& j) {
  return guarded("vector", [&] { return ComplexVector(complex_list_from(j.at("entries"), "vector")); });
}

HermitianMatrix matrix_from_json(const json& j) {
  return guarded("matrix", [&] {
    return HermitianMatrix::from_entries(j.at("dim").get<std::size_t>(),
                                         complex_list_from(j.at("entries"), "matrix"));
  });
}

VectorSystem system_from_json(const json& j) {
  return guarded("system", [&] {
    std::vector<ComplexVector> vs;
    for (const auto& v : j.at("vectors")) vs.emplace_back(complex_list_from(v, "system"));
    return VectorSystem(j.at("k").get<std::size_t>(), std::move(vs));
  });
}

Partition partition_from_json(const json& j) {
  return guarded("partition", [&] {
    const auto r = j.at("r").get<std::size_t>();
    std::vector<std::size_t> a;
    for (const auto& x : j.at("assignment")) {
      const auto part = x.get<long long>();
      if (part < 1 || static_cast<std::size_t>(part) > r)
        throw InvalidArgument("partition: part index " + std::to_string(part) + " outside 1.." +
                              std::to_string(r));
      a.push_back(static_cast<std::size_t>(part - 1));
    }
    return Partition(r, std::move(a));
  });
}

SignVector signs_from_json(const json& j) {
  return guarded("signs", [&] {
    SignVector s{j.at("signs").get<std::vector<int>>()};
    for (int x : s.signs)
      if (x != 1 && x != -1) throw InvalidArgument("signs: entries must be +1 or -1");
    return s;
  });
}

DiagonalProjection diagonal_from_json(const json& j) {
  return guarded("diagonal projection", [&] {
    DiagonalProjection q{j.at("n").get<std::size_t>(), {}};
    for (const auto& x : j.at("support")) {
      const auto i = x.get<long long>();
      if (i < 1 || static_cast<std::size_t>(i) > q.n)
        throw InvalidArgument("diagonal projection: support index out of range");
      q.support.push_back(static_cast<std::size_t>(i - 1));
    }
    if (!std::is_sorted(q.support.begin(), q.support.end()) ||
        std::adjacent_find(q.support.begin(), q.support.end()) != q.support.end())
      throw InvalidArgument("diagonal projection: support must be sorted and distinct");
    return q;
  });
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw InvalidArgument(path.string() + ": " + e.what());
  }
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidArgument("cannot write " + path.string());
  out << text;
  if (!out) throw InvalidArgument("write failed for " + path.string());
}

}  // namespace ks::io
