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


#include "ks/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <optional>
#include <sstream>
#include <variant>

#include "CLI11.hpp"
#include "ks/counterexample.hpp"
#include "ks/discrepancy.hpp"
#include "ks/error.hpp"
#include "ks/io.hpp"
#include "ks/reductions.hpp"
#include "ks/report.hpp"
#include "ks/rng.hpp"

namespace ks::cli {

namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

// Subsets checked against the closed form when 2^(k-1) is too many.
constexpr std::size_t kSampledSubsets = 4096;
constexpr int kExhaustiveSubsetK = 16;
constexpr std::uint64_t kDefaultHeuristicBudget = 20000;
constexpr std::uint64_t kDefaultSignBudget = std::uint64_t{1} << 23;
constexpr std::size_t kDefaultRadiusSamples = 100000;
constexpr double kAbsNormalMedian = 0.67448975019608171;

struct Common {
  std::uint64_t seed = 0;
  std::optional<std::uint64_t> budget;
  std::string out;
  std::string format = "json";
  std::optional<double> tol;
};

void add_common(CLI::App* app, Common& c) {
  app->add_option("--seed", c.seed, "64-bit seed for every random choice");
  app->add_option("--budget", c.budget, "evaluation / enumeration cap");
  app->add_option("--out", c.out, "write the report here instead of stdout");
  app->add_option("--format", c.format, "report format")->check(CLI::IsMember({"json", "csv"}));
  app->add_option("--tol", c.tol, "override every claim tolerance")->check(CLI::PositiveNumber);
}

std::string inputs_digest(const std::string& command, const json& inputs) {
  return digest(command + "\n" + dump_json(inputs, 0));
}

json load(const std::string& path) { return io::read_json_file(path); }

// Re-raises module errors with the input file named.
template <class F>
auto with_file(const std::string& path, F&& f) {
  try {
    return f();
  } catch (const BudgetExceeded&) {
    throw;
  } catch (const InvalidArgument& e) {
    throw InvalidArgument(path + ": " + e.what());
  }
}

std::vector<std::size_t> iota(std::size_t n) {
  std::vector<std::size_t> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = i;
  return v;
}

class Emitter {
 public:
  Emitter(const Common& c, std::ostream& out) : c_(c), out_(out), start_(Clock::now()) {}

  // Finishes the report, writes it, and returns the exit code.
  int emit(VerificationReport r, const std::string& csv_override = {}) {
    r.seed = c_.seed;
    if (c_.tol)
      for (auto& claim : r.claims)
        claim = Claim::make(claim.name, claim.computed, claim.relation, claim.bound, *c_.tol);
    r.wall_time_seconds = std::chrono::duration<double>(Clock::now() - start_).count();
    std::string text;
    if (c_.format == "csv")
      text = csv_override.empty() ? report_csv(r) : csv_override;
    else
      text = dump_json(to_json(r)) + "\n";
    if (c_.out.empty())
      out_ << text;
    else
      io::write_text_file(c_.out, text);
    return r.passed() ? kPass : kClaimFailed;
  }

 private:
  const Common& c_;
  std::ostream& out_;
  Clock::time_point start_;
};

std::string csv_number(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

// ---------------------------------------------------------------- gen-weaver

int gen_weaver(int k, const Common& c, std::ostream& out) {
  const auto w = counterexample::make_instance(k);
  const json instance{{"k", w.k},
                      {"alpha", w.alpha},
                      {"beta", w.beta},
                      {"delta", w.delta},
                      {"N", w.N},
                      {"lower_bound", counterexample::signed_lower_bound(k)},
                      {"primed", io::to_json(w.primed)},
                      {"normalized", io::to_json(w.normalized)}};
  if (c.out.empty()) {
    out << dump_json(instance) << "\n";
    return kPass;
  }
  const std::filesystem::path dir(c.out);
  std::filesystem::create_directories(dir);
  const std::string stem = "weaver_k" + std::to_string(k);
  io::write_text_file(dir / (stem + ".json"), dump_json(instance) + "\n");
  io::write_text_file(dir / (stem + "_vectors.json"), dump_json(io::to_json(w.normalized)) + "\n");
  return kPass;
}

// ------------------------------------------------------------- verify-weaver

// Largest |direct - closed form| over all subsets (k <= 16) or over a seeded
// sample that includes one subset of every size.
std::pair<double, std::uint64_t> closed_form_gap(const counterexample::Instance& w,
                                                 std::uint64_t seed) {
  const std::size_t n = static_cast<std::size_t>(w.k - 1);
  double worst = 0.0;
  std::uint64_t checked = 0;
  auto check = [&](const std::vector<std::size_t>& s) {
    const auto d = counterexample::subset_center_distance(w, s);
    worst = std::max(worst, std::abs(d.direct - d.closed_form));
    ++checked;
  };
  if (w.k <= kExhaustiveSubsetK) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      std::vector<std::size_t> s;
      for (std::size_t i = 0; i < n; ++i)
        if ((mask >> i) & 1u) s.push_back(i);
      check(s);
    }
    return {worst, checked};
  }
  for (std::size_t c = 0; c <= n; ++c) check(std::vector<std::size_t>(iota(c)));
  CounterRng rng(seed, static_cast<std::uint64_t>(w.k));
  for (std::size_t t = 0; t < kSampledSubsets; ++t) {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < n; ++i)
      if (rng.below(2)) s.push_back(i);
    check(s);
  }
  return {worst, checked};
}

int verify_weaver(const std::vector<int>& ks, const std::string& mode_name, const Common& c,
                  std::ostream& out) {
  Emitter em(c, out);
  const auto mode = mode_name == "exhaustive" ? counterexample::Mode::kExhaustive
                                              : counterexample::Mode::kHeuristic;
  const std::uint64_t budget = c.budget.value_or(kDefaultHeuristicBudget);
  for (int k : ks) {
    if (k < 5) throw InvalidArgument("verify-weaver: k must be >= 5 (got " + std::to_string(k) + ")");
    if (mode == counterexample::Mode::kExhaustive && k > counterexample::kMaxExhaustiveK)
      throw BudgetExceeded("verify-weaver: exhaustive mode is limited to k <= " +
                           std::to_string(counterexample::kMaxExhaustiveK) + " (got " +
                           std::to_string(k) + "); use --mode heuristic");
  }

  VerificationReport r;
  r.command = "verify-weaver";
  r.budget = mode == counterexample::Mode::kHeuristic ? budget : 0;
  r.inputs_digest = inputs_digest(r.command, {{"k", ks}, {"mode", mode_name}, {"seed", c.seed},
                                              {"budget", r.budget}});
  json rows = json::array();
  std::ostringstream csv;
  csv << "k,alpha,beta,delta,N,lower_bound,min_signed_norm_or_bound,mode\n";
  for (int k : ks) {
    const auto w = counterexample::make_instance(k);
    const std::string tag = "k" + std::to_string(k) + ".";

    const auto frame = counterexample::frame_identity_check(w);
    for (const auto& claim : frame.claims) {
      Claim copy = claim;
      copy.name = tag + claim.name;
      r.claims.push_back(copy);
    }
    const auto [gap, subsets] = closed_form_gap(w, c.seed);
    r.claims.push_back(
        Claim::make(tag + "center_distance_closed_form", gap, Relation::kLessEqual, 0.0, 1e-12));

    const auto signed_report = counterexample::verify_counterexample(w, mode, budget, c.seed);
    for (const auto& claim : signed_report.claims) {
      Claim copy = claim;
      copy.name = tag + claim.name;
      r.claims.push_back(copy);
    }
    const auto& d = signed_report.details;
    json row{{"k", k},
             {"alpha", w.alpha},
             {"beta", w.beta},
             {"delta", w.delta},
             {"N", w.N},
             {"frame_bound", frame.details["frame_bound"]},
             {"lower_bound", d["lower_bound"]},
             {"min_signed_norm_or_bound", d["min_signed_norm"]},
             {"mode", mode_name},
             {"exact", d["exact"]},
             {"signs", d["signs"]},
             {"evaluations", d["evaluations"]},
             {"subsets_checked", subsets}};
    rows.push_back(row);
    csv << k << ',' << csv_number(w.alpha) << ',' << csv_number(w.beta) << ','
        << csv_number(w.delta) << ',' << csv_number(w.N) << ','
        << csv_number(d["lower_bound"].get<double>()) << ','
        << csv_number(d["min_signed_norm"].get<double>()) << ',' << mode_name << '\n';
  }
  r.details = {{"mode", mode_name}, {"instances", rows}};
  return em.emit(std::move(r), csv.str());
}

// -------------------------------------------------------------------- reduce

int reduce(const std::string& direction, const std::string& in, double N,
           const std::string& result_path, const Common& c, std::ostream& out) {
  Emitter em(c, out);
  if (!(N > 0.0) || !std::isfinite(N)) throw InvalidArgument("reduce: --N must be positive");
  const json input = load(in);
  VerificationReport r;
  r.command = "reduce " + direction;
  r.inputs_digest = inputs_digest(r.command, {{"input", input}, {"N", N}});
  json result;

  if (direction == "proj2vec") {
    const HermitianMatrix P = with_file(in, [&] { return io::matrix_from_json(input); });
    const VectorSystem v = with_file(in, [&] { return projection_to_vectors(P, N); });
    double max_norm = 0.0, gram = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
      max_norm = std::max(max_norm, v[i].norm_squared());
      for (std::size_t j = 0; j < v.size(); ++j)
        gram = std::max(gram, std::abs(inner(v[i], v[j]) - N * P(j, i)));
    }
    const double bound = frame_bound(v);
    r.claims.push_back(Claim::make("max_norm_squared", max_norm, Relation::kLessEqual, 1.0, 1e-9));
    r.claims.push_back(Claim::make("frame_bound_equals_N", bound, Relation::kEqual, N, 1e-8));
    r.claims.push_back(Claim::make("gram_matches_N_P", gram, Relation::kLessEqual, 0.0, 1e-8));
    r.details = {{"k", v.k()}, {"n", v.size()}, {"frame_bound", bound}};
    result = io::to_json(v);
  } else {
    const VectorSystem vs = with_file(in, [&] { return io::system_from_json(input); });
    const ReductionTrace t = with_file(in, [&] { return vectors_to_projection(vs, N); });
    const double residual = (t.P - HermitianMatrix::from_entries(t.m, [&] {
                               std::vector<Complex> sq(t.m * t.m);
                               for (std::size_t i = 0; i < t.m; ++i)
                                 for (std::size_t j = 0; j < t.m; ++j)
                                   for (std::size_t l = 0; l < t.m; ++l)
                                     sq[i * t.m + j] += t.P(i, l) * t.P(l, j);
                               return sq;
                             }()))
                                .frobenius_norm();
    const double parseval =
        (frame_operator(t.w) - HermitianMatrix::identity(t.w.k())).frobenius_norm();
    double max_piece = 0.0;
    for (std::size_t i = vs.size(); i < t.m; ++i) max_piece = std::max(max_piece, t.w[i].norm_squared());
    const double a_norm = opnorm(t.A);
    r.claims.push_back(Claim::make("projection_residual", residual, Relation::kLessEqual, 0.0, 1e-8));
    r.claims.push_back(
        Claim::make("delta_P_le_inverse_N", diagonal_delta(t.P), Relation::kLessEqual, 1.0 / N, 1e-10));
    r.claims.push_back(Claim::make("completion_is_parseval", parseval, Relation::kLessEqual, 0.0, 1e-9));
    r.claims.push_back(
        Claim::make("padding_norm_squared_le_inverse_N", max_piece, Relation::kLessEqual, 1.0 / N, 1e-12));
    r.claims.push_back(
        Claim::make("zero_diagonal_part_norm", a_norm, Relation::kLessEqual, 1.0 + 1.0 / N, 1e-8));
    r.details = {{"m", t.m}, {"k", vs.k()}, {"n", vs.size()}, {"delta_P", diagonal_delta(t.P)}};
    result = {{"m", t.m}, {"w", io::to_json(t.w)}, {"P", io::to_json(t.P)}, {"D", io::to_json(t.D)},
              {"A", io::to_json(t.A)}};
  }
  if (result_path.empty())
    r.details["result"] = result;
  else
    io::write_text_file(result_path, dump_json(result) + "\n");
  return em.emit(std::move(r));
}

// -------------------------------------------------------------------- search

struct SearchOptions {
  std::string kind;
  std::string in;
  std::size_t r = 2;
  std::optional<double> N;
  std::optional<double> M;
  std::size_t samples = kDefaultRadiusSamples;
  bool heuristic = false;
};

std::vector<HermitianMatrix> rank_ones(const VectorSystem& vs, double weight) {
  std::vector<HermitianMatrix> out;
  for (const auto& v : vs.vectors()) out.push_back(rank_one(v) * weight);
  return out;
}

int search(const SearchOptions& o, const Common& c, std::ostream& out) {
  Emitter em(c, out);
  if (o.r < 1) throw InvalidArgument("search: --r must be >= 1");
  const json input = load(o.in);
  VerificationReport r;
  r.command = "search " + o.kind;
  json params{{"r", o.r}, {"heuristic", o.heuristic}, {"seed", c.seed}};
  if (o.N) params["N"] = *o.N;
  if (o.M) params["M"] = *o.M;
  if (o.kind == "banaszczyk") params["samples"] = o.samples;

  if (o.kind == "pave") {
    const HermitianMatrix A = with_file(o.in, [&] { return io::matrix_from_json(input); });
    r.budget = c.budget.value_or(kDefaultPartitionBudget);
    const auto best = exhaustive_paving_search(A, o.r, r.budget);
    const double norm = opnorm(A);
    r.claims.push_back(Claim::make("quality_le_opnorm", best.quality, Relation::kLessEqual, norm, 1e-12));
    r.claims.push_back(Claim::make("quality_recomputed", paving_quality(A, best.partition),
                                   Relation::kEqual, best.quality, 1e-12));
    json supports = json::array();
    for (const auto& q : partition_to_diagonal_projections(best.partition)) supports.push_back(io::to_json(q));
    r.details = {{"kind", o.kind},   {"value", best.quality},   {"optimal", best.optimal},
                 {"opnorm", norm},   {"partition", io::to_json(best.partition)},
                 {"projections", supports}, {"evaluations", best.evaluations}};
  } else {
    const VectorSystem vs = with_file(o.in, [&] { return io::system_from_json(input); });
    const double frame = frame_bound(vs);

    if (o.kind == "signs") {
      SignSearchOutcome found;
      if (o.heuristic) {
        r.budget = c.budget.value_or(kDefaultHeuristicBudget);
        found = greedy_sign_descent(rank_ones(vs, 1.0), r.budget, c.seed);
      } else {
        r.budget = c.budget.value_or(kDefaultSignBudget);
        const std::size_t n = vs.size();
        const bool too_many = n > 64 || (n >= 1 && (std::uint64_t{1} << (n - 1)) > r.budget);
        if (too_many)
          throw BudgetExceeded("search signs: 2^(n-1) patterns for n = " + std::to_string(n) +
                               " exceed the budget " + std::to_string(r.budget) +
                               "; raise --budget or pass --heuristic");
        found = exhaustive_sign_search(vs, 64);
      }
      r.claims.push_back(Claim::make("witness_value_recomputed", signed_norm(vs, found.signs),
                                     Relation::kEqual, found.value, 1e-9));
      r.details = {{"kind", o.kind},         {"value", found.value},
                   {"optimal", found.exact}, {"signs", io::to_json(found.signs)},
                   {"frame_bound", frame},   {"evaluations", found.evaluations}};
    } else if (o.kind == "partition") {
      const double N = o.N.value_or(frame);
      PartitionSearchResult found{partition_certificate(vs, Partition(o.r, std::vector<std::size_t>(vs.size(), 0)), N),
                                  false, 0};
      if (o.heuristic) {
        r.budget = c.budget.value_or(kDefaultHeuristicBudget);
        AnnealSchedule schedule;
        schedule.steps = r.budget;
        found = anneal_partition_search(vs, o.r, N, c.seed, schedule);
      } else {
        r.budget = c.budget.value_or(kDefaultPartitionBudget);
        found = exhaustive_partition_search(vs, o.r, N, r.budget);
      }
      const auto& cert = found.certificate;
      r.claims.push_back(Claim::make("slack_is_N_minus_max_bound", cert.slack, Relation::kEqual,
                                     N - cert.max_bound(), 1e-12));
      r.claims.push_back(Claim::make("max_bound_recomputed",
                                     partition_certificate(vs, cert.partition, N).max_bound(),
                                     Relation::kEqual, cert.max_bound(), 1e-12));
      r.claims.push_back(Claim::make("max_bound_le_frame_bound", cert.max_bound(),
                                     Relation::kLessEqual, frame, 1e-9));
      r.details = {{"kind", o.kind},
                   {"value", cert.max_bound()},
                   {"optimal", found.optimal},
                   {"N", N},
                   {"slack", cert.slack},
                   {"per_part_bound", cert.per_part_bound},
                   {"partition", io::to_json(cert.partition)},
                   {"frame_bound", frame},
                   {"evaluations", found.evaluations}};
    } else if (o.kind == "matroid") {
      if (o.r < 2) throw InvalidArgument("search matroid: --r must be >= 2");
      const auto outcome = matroid_spanning_partition(vs, o.r);
      if (const auto* p = std::get_if<Partition>(&outcome)) {
        std::size_t min_rank = vs.k();
        json ranks = json::array();
        for (const auto& part : p->members()) {
          const std::size_t rank = part.empty() ? 0 : numerical_rank(vs.select(part).vectors());
          ranks.push_back(rank);
          min_rank = std::min(min_rank, rank);
        }
        r.claims.push_back(Claim::make("every_part_spans", static_cast<double>(min_rank),
                                       Relation::kEqual, static_cast<double>(vs.k()), 0.0));
        r.details = {{"kind", o.kind}, {"outcome", "spanning_partition"},
                     {"partition", io::to_json(*p)}, {"part_ranks", ranks}};
      } else {
        const auto& x = std::get<ViolatingSet>(outcome);
        const double excess = static_cast<double>(o.r) * static_cast<double>(vs.k() - x.complement_rank) -
                              static_cast<double>(x.indices.size());
        r.claims.push_back(Claim::make("violated_count", excess, Relation::kGreaterEqual, 1.0, 0.0));
        json indices = json::array();
        for (std::size_t i : x.indices) indices.push_back(i + 1);
        r.details = {{"kind", o.kind}, {"outcome", "violating_set"}, {"X", indices},
                     {"complement_rank", x.complement_rank}};
      }
    } else {  // banaszczyk
      for (std::size_t i = 0; i < vs.size(); ++i)
        if (vs[i].norm_squared() > 1.0 + 2e-12)
          throw InvalidArgument(o.in + ": vector " + std::to_string(i + 1) + " has norm > 1");
      double M = 0.0;
      json radius;
      if (o.M) {
        M = *o.M;
      } else {
        const auto ctx = gaussian_median_radius(vs.k(), o.samples, c.seed);
        M = ctx.M;
        radius = {{"R_hat", ctx.R_hat}, {"samples", ctx.samples}};
      }
      r.budget = c.budget.value_or(kDefaultHeuristicBudget);
      const auto found = banaszczyk_sign_search(rank_ones(vs, 0.2), M, r.budget, c.seed);
      r.claims.push_back(Claim::make("signed_sum_within_M", found.value, Relation::kLessEqual, M, 0.0));
      r.details = {{"kind", o.kind},
                   {"value", found.value},
                   {"M", M},
                   {"success", found.success},
                   {"optimal", found.exhaustive},
                   {"signs", io::to_json(found.signs)},
                   {"evaluations", found.evaluations}};
      if (!radius.is_null()) r.details["radius"] = radius;
    }
  }
  params["budget"] = r.budget;
  r.inputs_digest = inputs_digest(r.command, {{"input", input}, {"params", params}});
  return em.emit(std::move(r));
}

// ----------------------------------------------------------------- net-check

int net_check(const std::string& in, const std::vector<std::size_t>& subset1, double epsilon,
              std::optional<double> N_opt, bool heuristic_net, const Common& c, std::ostream& out) {
  Emitter em(c, out);
  if (!(epsilon > 0.0) || !std::isfinite(epsilon))
    throw InvalidArgument("net-check: --epsilon must be > 0");
  const json input = load(in);
  const VectorSystem vs = with_file(in, [&] { return io::system_from_json(input); });
  if (vs.k() > 3 && !heuristic_net)
    throw InvalidArgument("net-check: nets are limited to k <= 3 (got k = " + std::to_string(vs.k()) +
                          "); pass --heuristic-net to use a sampled net");
  std::vector<std::size_t> subset;
  if (subset1.empty()) {
    subset = iota(vs.size());
  } else {
    for (std::size_t i : subset1) {
      if (i < 1 || i > vs.size())
        throw InvalidArgument("net-check: subset index " + std::to_string(i) + " outside 1.." +
                              std::to_string(vs.size()));
      subset.push_back(i - 1);
    }
  }
  const double N = N_opt.value_or(frame_bound(vs));
  if (!(N > 0.0)) throw InvalidArgument("net-check: --N must be positive");
  const double mesh = epsilon / (4.0 * N);

  VerificationReport r;
  r.command = "net-check";
  r.budget = c.budget.value_or(kDefaultNetPoints);
  const auto net = build_epsilon_net(vs.k(), mesh, c.seed, r.budget);
  const auto nb = net_certified_bound(vs, subset, net, N);
  const double exact = subset_frame_bound(vs, subset);
  r.claims.push_back(Claim::make("net_max_le_sup", nb.net_max, Relation::kLessEqual, exact, 1e-12));
  r.claims.push_back(Claim::make("sup_le_certified_bound", exact, Relation::kLessEqual,
                                 nb.certified_sup_bound, 1e-12));
  json sub = json::array();
  for (std::size_t i : subset) sub.push_back(i + 1);
  r.inputs_digest = inputs_digest(r.command, {{"input", input}, {"subset", sub}, {"epsilon", epsilon},
                                              {"N", N}, {"seed", c.seed}, {"budget", r.budget}});
  r.details = {{"k", vs.k()},
               {"N", N},
               {"epsilon", epsilon},
               {"mesh", mesh},
               {"net_points", net.points.size()},
               {"certified", net.certified},
               {"net_max", nb.net_max},
               {"certified_sup_bound", nb.certified_sup_bound},
               {"eigenvalue_sup", exact}};
  return em.emit(std::move(r));
}

// --------------------------------------------------------- banaszczyk-radius

int banaszczyk_radius(std::size_t k, std::size_t samples, const Common& c, std::ostream& out) {
  Emitter em(c, out);
  const auto ctx = gaussian_median_radius(k, samples, c.seed);
  VerificationReport r;
  r.command = "banaszczyk-radius";
  r.inputs_digest = inputs_digest(r.command, {{"k", k}, {"samples", samples}, {"seed", c.seed}});
  r.claims.push_back(Claim::make("M_is_five_R", ctx.M, Relation::kEqual, 5.0 * ctx.R_hat, 0.0));
  r.claims.push_back(Claim::make("R_positive", ctx.R_hat, Relation::kGreaterEqual, 0.0, 0.0));
  if (k == 1)
    r.claims.push_back(
        Claim::make("median_of_abs_normal", ctx.R_hat, Relation::kEqual, kAbsNormalMedian, 0.01));
  r.details = {{"k", k}, {"samples", samples}, {"R_hat", ctx.R_hat}, {"M", ctx.M}};
  return em.emit(std::move(r));
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Discrepancy, frame and paving verification toolkit", "kstool"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "expand all help");

  Common common;
  std::function<int()> action;

  auto* gen = app.add_subcommand("gen-weaver", "write the k-th counterexample instance");
  int gen_k = 0;
  gen->add_option("--k", gen_k, "dimension (>= 5)")->required();
  add_common(gen, common);
  gen->callback([&] { action = [&] { return gen_weaver(gen_k, common, out); }; });

  auto* verify = app.add_subcommand("verify-weaver", "check the counterexample identities and bound");
  std::vector<int> verify_ks;
  std::string mode = "exhaustive";
  verify->add_option("--k", verify_ks, "dimensions, comma separated")->required()->delimiter(',');
  verify->add_option("--mode", mode)->check(CLI::IsMember({"exhaustive", "heuristic"}));
  add_common(verify, common);
  verify->callback([&] { action = [&] { return verify_weaver(verify_ks, mode, common, out); }; });

  auto* red = app.add_subcommand("reduce", "projection <-> vector system reductions");
  std::string direction, red_in, result_path;
  double red_N = 0.0;
  red->add_option("--direction", direction)->required()->check(CLI::IsMember({"proj2vec", "vec2proj"}));
  red->add_option("--in", red_in, "input JSON")->required();
  red->add_option("--N", red_N)->required();
  red->add_option("--result", result_path, "write the constructed object here");
  add_common(red, common);
  red->callback([&] { action = [&] { return reduce(direction, red_in, red_N, result_path, common, out); }; });

  auto* srch = app.add_subcommand("search", "signing, partition, paving and spanning searches");
  SearchOptions so;
  srch->add_option("--kind", so.kind)
      ->required()
      ->check(CLI::IsMember({"signs", "partition", "pave", "matroid", "banaszczyk"}));
  srch->add_option("--in", so.in, "input JSON")->required();
  srch->add_option("--r", so.r, "number of parts");
  srch->add_option("--N", so.N, "bound to report slack against (default: frame bound)");
  srch->add_option("--M", so.M, "balancing radius (default: 5 x Gaussian median radius)");
  srch->add_option("--samples", so.samples, "Gaussian samples for the default radius");
  srch->add_flag("--heuristic", so.heuristic, "seeded heuristic instead of exhaustive search");
  add_common(srch, common);
  srch->callback([&] { action = [&] { return search(so, common, out); }; });

  auto* net = app.add_subcommand("net-check", "quadratic-form bound from an epsilon/(4N) net");
  std::string net_in;
  std::vector<std::size_t> subset;
  double epsilon = 0.0;
  std::optional<double> net_N;
  bool heuristic_net = false;
  net->add_option("--in", net_in, "vector system JSON")->required();
  net->add_option("--subset", subset, "1-based indices, comma separated (default: all)")->delimiter(',');
  net->add_option("--epsilon", epsilon)->required();
  net->add_option("--N", net_N, "frame bound hypothesis (default: frame bound)");
  net->add_flag("--heuristic-net", heuristic_net, "allow sampled nets for k > 3");
  add_common(net, common);
  net->callback([&] {
    action = [&] { return net_check(net_in, subset, epsilon, net_N, heuristic_net, common, out); };
  });

  auto* rad = app.add_subcommand("banaszczyk-radius", "Gaussian median operator-norm radius");
  std::size_t rad_k = 0, rad_samples = kDefaultRadiusSamples;
  rad->add_option("--k", rad_k)->required()->check(CLI::PositiveNumber);
  rad->add_option("--samples", rad_samples);
  add_common(rad, common);
  rad->callback([&] { action = [&] { return banaszczyk_radius(rad_k, rad_samples, common, out); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kPass;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "kstool: " << e.what() << "\n";
    return kUsageError;
  }

  try {
    return action();
  } catch (const BudgetExceeded& e) {
    err << "kstool: refused: " << e.what() << "\n";
    return kBudgetRefused;
  } catch (const InvalidArgument& e) {
    err << "kstool: error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "kstool: error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    err << "kstool: internal error: " << e.what() << "\n";
    return kClaimFailed;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"kstool"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace ks::cli
