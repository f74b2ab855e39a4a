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

// JSON forms of the domain types. Part and support indices are 1-based on
// the wire and 0-based in memory.
//
//   vector      {"entries": [[re, im], ...]}
//   matrix      {"dim": n, "entries": [[re, im], ...]}          row-major, n^2
//   system      {"k": k, "vectors": [[[re, im], ...], ...]}
//   partition   {"r": r, "assignment": [1, 2, ...]}
//   signs       {"signs": [1, -1, ...]}
//   diagonal    {"n": n, "support": [1, 4, ...]}                sorted

#include <filesystem>
#include <string>

#include "json.hpp"
#include "ks/discrepancy.hpp"
#include "ks/frames.hpp"
#include "ks/hermitian.hpp"
#include "ks/reductions.hpp"

namespace ks::io {

using nlohmann::json;

json to_json(const ComplexVector& v);
json to_json(const HermitianMatrix& m);
json to_json(const VectorSystem& vs);
json to_json(const Partition& p);
json to_json(const SignVector& s);
json to_json(const DiagonalProjection& q);

ComplexVector vector_from_json(const json& j);
HermitianMatrix matrix_from_json(const json& j);
VectorSystem system_from_json(const json& j);
Partition partition_from_json(const json& j);
SignVector signs_from_json(const json& j);
DiagonalProjection diagonal_from_json(const json& j);

json read_json_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace ks::io
