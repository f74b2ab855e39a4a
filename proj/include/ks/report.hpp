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

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace ks {

enum class Relation { kLessEqual, kGreaterEqual, kEqual };

// One checked statement: `computed <relation> bound` up to `tolerance`.
struct Claim {
  std::string name;
  double computed;
  Relation relation;
  double bound;
  double tolerance;
  bool pass;

  static Claim make(std::string name, double computed, Relation relation, double bound,
                    double tolerance);
  // Re-derives the pass flag from the stored numbers.
  bool recheck() const;
};

struct VerificationReport {
  std::string command;
  std::string inputs_digest;
  std::vector<Claim> claims;
  std::uint64_t seed = 0;
  std::uint64_t budget = 0;
  double wall_time_seconds = 0.0;
  nlohmann::json details = nlohmann::json::object();

  bool passed() const;
  // True when every stored pass flag matches its recomputation.
  bool self_consistent() const;
};

nlohmann::json to_json(const VerificationReport& r);
VerificationReport report_from_json(const nlohmann::json& j);

// Header plus one row per claim.
std::string report_csv(const VerificationReport& r);

// JSON text with every floating-point number printed to 17 significant digits.
std::string dump_json(const nlohmann::json& j, int indent = 2);

// 64-bit FNV-1a of the bytes, as 16 hex digits.
std::string digest(std::string_view bytes);

}  // namespace ks
