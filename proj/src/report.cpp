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

#include "ks/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "ks/error.hpp"

namespace ks {

namespace {

const char* relation_name(Relation r) {
  switch (r) {
    case Relation::kLessEqual: return "le";
    case Relation::kGreaterEqual: return "ge";
    case Relation::kEqual: return "eq";
  }
  return "?";
}

Relation parse_relation(const std::string& s) {
  if (s == "le") return Relation::kLessEqual;
  if (s == "ge") return Relation::kGreaterEqual;
  if (s == "eq") return Relation::kEqual;
  throw InvalidArgument("report: unknown relation '" + s + "'");
}

bool holds(double computed, Relation rel, double bound, double tol) {
  if (!std::isfinite(computed)) return false;
  switch (rel) {
    case Relation::kLessEqual: return computed <= bound + tol;
    case Relation::kGreaterEqual: return computed >= bound - tol;
    case Relation::kEqual: return std::abs(computed - bound) <= tol;
  }
  return false;
}

std::string format_double(double x) {
  if (!std::isfinite(x)) return "null";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  std::string s = buf;
  // keep it a JSON float so it reads back as a double
  if (s.find_first_of(".eE") == std::string::npos) s += ".0";
  return s;
}

void write(const nlohmann::json& j, std::ostringstream& out, int indent, int depth) {
  const std::string pad = indent > 0 ? std::string(static_cast<std::size_t>(indent * (depth + 1)), ' ') : "";
  const std::string close_pad = indent > 0 ? std::string(static_cast<std::size_t>(indent * depth), ' ') : "";
  const char* nl = indent > 0 ? "\n" : "";
  switch (j.type()) {
    case nlohmann::json::value_t::object: {
      if (j.empty()) {
        out << "{}";
        return;
      }
      out << "{" << nl;
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out << "," << nl;
        first = false;
        out << pad << nlohmann::json(it.key()).dump() << (indent > 0 ? ": " : ":");
        write(it.value(), out, indent, depth + 1);
      }
      out << nl << close_pad << "}";
      return;
    }
    case nlohmann::json::value_t::array: {
      if (j.empty()) {
        out << "[]";
        return;
      }
      // Arrays of scalars stay on one line.
      bool flat = true;
      for (const auto& e : j)
        if (e.is_structured()) flat = false;
      if (flat || indent == 0) {
        out << "[";
        for (std::size_t i = 0; i < j.size(); ++i) {
          if (i) out << (indent > 0 ? ", " : ",");
          write(j[i], out, indent, depth + 1);
        }
        out << "]";
        return;
      }
      out << "[" << nl;
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) out << "," << nl;
        out << pad;
        write(j[i], out, indent, depth + 1);
      }
      out << nl << close_pad << "]";
      return;
    }
    case nlohmann::json::value_t::number_float:
      out << format_double(j.get<double>());
      return;
    default:
      out << j.dump();
  }
}

}  // namespace

Claim Claim::make(std::string name, double computed, Relation relation, double bound,
                  double tolerance) {
  return Claim{std::move(name), computed, relation, bound, tolerance,
               holds(computed, relation, bound, tolerance)};
}

bool Claim::recheck() const { return holds(computed, relation, bound, tolerance); }

bool VerificationReport::passed() const {
  for (const auto& c : claims)
    if (!c.pass) return false;
  return true;
}

bool VerificationReport::self_consistent() const {
  for (const auto& c : claims)
    if (c.pass != c.recheck()) return false;
  return true;
}

nlohmann::json to_json(const VerificationReport& r) {
  nlohmann::json claims = nlohmann::json::array();
  for (const auto& c : r.claims)
    claims.push_back({{"name", c.name},
                      {"computed", c.computed},
                      {"relation", relation_name(c.relation)},
                      {"bound", c.bound},
                      {"tolerance", c.tolerance},
                      {"pass", c.pass}});
  return nlohmann::json{{"command", r.command},
                        {"inputs_digest", r.inputs_digest},
                        {"seed", r.seed},
                        {"budget", r.budget},
                        {"passed", r.passed()},
                        {"claims", claims},
                        {"details", r.details},
                        {"wall_time_seconds", r.wall_time_seconds}};
}

VerificationReport report_from_json(const nlohmann::json& j) {
  try {
    VerificationReport r;
    r.command = j.at("command").get<std::string>();
    r.inputs_digest = j.at("inputs_digest").get<std::string>();
    r.seed = j.at("seed").get<std::uint64_t>();
    r.budget = j.at("budget").get<std::uint64_t>();
    r.wall_time_seconds = j.value("wall_time_seconds", 0.0);
    r.details = j.value("details", nlohmann::json::object());
    for (const auto& c : j.at("claims")) {
      const auto number = [&](const char* key) {
        return c.at(key).is_null() ? std::nan("") : c.at(key).get<double>();
      };
      r.claims.push_back(Claim{c.at("name").get<std::string>(), number("computed"),
                               parse_relation(c.at("relation").get<std::string>()),
                               number("bound"), number("tolerance"), c.at("pass").get<bool>()});
    }
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("report: malformed JSON: ") + e.what());
  }
}

std::string report_csv(const VerificationReport& r) {
  std::ostringstream out;
  out << "command,claim,computed,relation,bound,tolerance,pass\n";
  for (const auto& c : r.claims)
    out << r.command << ',' << c.name << ',' << format_double(c.computed) << ','
        << relation_name(c.relation) << ',' << format_double(c.bound) << ','
        << format_double(c.tolerance) << ',' << (c.pass ? "true" : "false") << '\n';
  return out.str();
}

std::string dump_json(const nlohmann::json& j, int indent) {
  std::ostringstream out;
  write(j, out, indent, 0);
  return out.str();
}

std::string digest(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace ks
