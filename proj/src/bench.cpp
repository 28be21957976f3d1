// Copyright 2026 The arbest Authors.
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

#include "arbest/bench.hpp"

#include <charconv>
#include <chrono>
#include <exception>
#include <stdexcept>

#include "arbest/fortified.hpp"
#include "arbest/generators.hpp"
#include "arbest/warmup.hpp"
#include "json.hpp"

namespace arbest {

namespace {

using nlohmann::json;

constexpr std::uint64_t kCompareLabel = 0xB3C4;

struct Cell {
  GenSpec spec;
  std::string algo = "fortified";
  std::string mode = "estimate";
  std::vector<double> thresholds;
  std::vector<std::uint64_t> seeds;
  std::uint32_t num_tests = 0;
  std::optional<double> budget_beta;
  Pacing pacing = Pacing::staggered;
  std::uint32_t lanes = 0;
  double sample_constant = 1.0;
};

template <class T>
T get_or(const json& j, const char* key, T fallback) {
  return j.contains(key) ? j.at(key).get<T>() : fallback;
}

Pacing parse_pacing(const std::string& s) {
  if (s == "staggered") return Pacing::staggered;
  if (s == "naive") return Pacing::naive;
  throw std::invalid_argument("unknown schedule '" + s + "'");
}

std::string_view pacing_name(Pacing p) { return p == Pacing::naive ? "naive" : "staggered"; }

Cell parse_cell(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("cell is not an object");
  Cell c;
  c.spec.family = parse_family(get_or<std::string>(j, "family", "forest"));
  c.spec.n = get_or<Vertex>(j, "n", 0);
  c.spec.lambda = get_or<std::uint32_t>(j, "lambda", 1);
  c.spec.d_mult = get_or<std::uint32_t>(j, "d_mult", 120);
  c.spec.fan = get_or<std::uint32_t>(j, "fan", 4);
  c.spec.m = get_or<std::uint64_t>(j, "m", 0);
  c.spec.seed = get_or<std::uint64_t>(j, "graph_seed", 1);
  c.algo = get_or<std::string>(j, "algo", "fortified");
  if (c.algo != "fortified" && c.algo != "warmup") {
    throw std::invalid_argument("unknown algo '" + c.algo + "'");
  }
  c.mode = get_or<std::string>(j, "mode", "estimate");
  if (c.mode != "estimate" && c.mode != "compare") {
    throw std::invalid_argument("unknown mode '" + c.mode + "'");
  }
  c.thresholds = get_or<std::vector<double>>(j, "thresholds", {});
  if (c.mode == "compare" && c.thresholds.empty()) {
    throw std::invalid_argument("compare cell needs a thresholds list");
  }
  for (double t : c.thresholds) {
    if (!(t >= 1.0)) throw std::invalid_argument("thresholds must be >= 1");
  }
  if (j.contains("seeds")) {
    c.seeds = j.at("seeds").get<std::vector<std::uint64_t>>();
  } else {
    const auto seed = get_or<std::uint64_t>(j, "seed", 1);
    const auto reps = get_or<std::uint64_t>(j, "repetitions", 1);
    for (std::uint64_t r = 0; r < reps; ++r) c.seeds.push_back(seed + r);
  }
  c.num_tests = get_or<std::uint32_t>(j, "tests", 0);
  if (j.contains("budget_beta")) c.budget_beta = j.at("budget_beta").get<double>();
  c.pacing = parse_pacing(get_or<std::string>(j, "schedule", "staggered"));
  c.lanes = get_or<std::uint32_t>(j, "lanes", 0);
  c.sample_constant = get_or<double>(j, "sample_constant", 1.0);
  return c;
}

ResultRow error_row(const json& j, const std::string& what) {
  ResultRow r;
  if (j.is_object()) {
    if (j.contains("family") && j.at("family").is_string()) r.family = j.at("family");
    if (j.contains("n") && j.at("n").is_number_unsigned()) r.n = j.at("n");
  }
  r.error = what;
  return r;
}

void run_cell(const Cell& c, bool timing, std::vector<ResultRow>& rows) {
  const StaticGraph g = generate(c.spec);
  const LambdaTruth truth = lambda_truth(c.spec, g);
  ResultRow base;
  base.graph_id = graph_id(c.spec);
  base.family = std::string(family_name(c.spec.family));
  base.n = g.num_vertices();
  base.m = g.num_edges();
  if (truth.exact()) base.lambda_true = truth.lower;
  base.lambda_lower = truth.lower;
  base.lambda_upper = truth.upper;
  base.algo = c.algo;
  base.schedule = std::string(pacing_name(c.pacing));

  ComparatorConfig fcfg;
  fcfg.num_tests = c.num_tests;
  fcfg.pacing = c.pacing;
  WarmupConfig wcfg;
  wcfg.num_tests = c.num_tests;
  wcfg.pacing = c.pacing;
  wcfg.lanes = c.lanes;
  wcfg.sample_constant = c.sample_constant;
  if (c.budget_beta) fcfg.budget_beta = wcfg.budget_beta = *c.budget_beta;

  for (std::uint64_t seed : c.seeds) {
    const RngStream rng(seed);
    if (c.mode == "estimate") {
      const EstimateReport rep =
          c.algo == "warmup" ? warmup_estimate(g, wcfg, rng) : estimate(g, fcfg, rng);
      ResultRow r = base;
      r.lambda_hat = rep.lambda_hat;
      r.verdict = rep.thresholds.empty() || rep.thresholds.back().verdict == Verdict::yes
                      ? "YES"
                      : "NO";
      r.neighbor_queries = rep.total_neighbor_queries();
      r.degree_queries = rep.total_degree_queries();
      r.steps = rep.total_steps();
      r.wall_ms = timing ? rep.wall_ms : 0.0;
      r.seed = seed;
      rows.push_back(std::move(r));
      continue;
    }
    for (std::size_t i = 0; i < c.thresholds.size(); ++i) {
      const double lambda = c.thresholds[i];
      const RngStream sub = rng.split(kCompareLabel, i);
      const auto start = std::chrono::steady_clock::now();
      const ComparatorResult res = c.algo == "warmup"
                                       ? warmup_comparator(g, lambda, wcfg, sub)
                                       : fortified_comparator(g, lambda, fcfg, sub);
      const double ms = std::chrono::duration<double, std::milli>(
                            std::chrono::steady_clock::now() - start)
                            .count();
      ResultRow r = base;
      r.threshold = lambda;
      r.verdict = res.verdict == Verdict::yes ? "YES" : "NO";
      r.neighbor_queries = res.neighbor_queries;
      r.degree_queries = res.degree_queries;
      r.steps = res.steps;
      r.wall_ms = timing ? ms : 0.0;
      r.seed = seed;
      rows.push_back(std::move(r));
    }
  }
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + '"';
}

}  // namespace

std::string format_double(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

std::vector<ResultRow> run_benchmark(std::string_view config_json, std::optional<bool> timing) {
  json doc;
  try {
    doc = json::parse(config_json);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("bench config is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw std::invalid_argument("bench config must be a JSON object");
  const json cells = doc.value("cells", json::array());
  if (!cells.is_array()) throw std::invalid_argument("bench config 'cells' must be an array");
  const bool use_timing = timing.value_or(doc.value("timing", false));

  std::vector<ResultRow> rows;
  for (const json& j : cells) {
    const std::size_t before = rows.size();
    try {
      run_cell(parse_cell(j), use_timing, rows);
    } catch (const std::exception& e) {
      rows.resize(before);
      rows.push_back(error_row(j, e.what()));
    }
  }
  return rows;
}

std::string csv_header() {
  return "graph_id,family,n,m,lambda_true,lambda_lower,lambda_upper,algo,schedule,threshold,"
         "verdict,lambda_hat,neighbor_queries,degree_queries,steps,wall_ms,seed,error";
}

std::string to_csv(const std::vector<ResultRow>& rows) {
  std::string out = csv_header() + "\n";
  for (const ResultRow& r : rows) {
    out += csv_field(r.graph_id) + ',' + csv_field(r.family) + ',' + std::to_string(r.n) + ',' +
           std::to_string(r.m) + ',' + (r.lambda_true ? std::to_string(*r.lambda_true) : "") +
           ',' + std::to_string(r.lambda_lower) + ',' + std::to_string(r.lambda_upper) + ',' +
           r.algo + ',' + r.schedule + ',' + (r.threshold ? format_double(*r.threshold) : "") +
           ',' + r.verdict + ',' + (r.lambda_hat ? format_double(*r.lambda_hat) : "") + ',' +
           std::to_string(r.neighbor_queries) + ',' + std::to_string(r.degree_queries) + ',' +
           std::to_string(r.steps) + ',' + format_double(r.wall_ms) + ',' +
           std::to_string(r.seed) + ',' + csv_field(r.error) + '\n';
  }
  return out;
}

std::string to_json(const std::vector<ResultRow>& rows) {
  json out = json::array();
  for (const ResultRow& r : rows) {
    json j = {{"graph_id", r.graph_id},
              {"family", r.family},
              {"n", r.n},
              {"m", r.m},
              {"lambda_true", r.lambda_true ? json(*r.lambda_true) : json(nullptr)},
              {"lambda_lower", r.lambda_lower},
              {"lambda_upper", r.lambda_upper},
              {"algo", r.algo},
              {"schedule", r.schedule},
              {"threshold", r.threshold ? json(*r.threshold) : json(nullptr)},
              {"verdict", r.verdict},
              {"lambda_hat", r.lambda_hat ? json(*r.lambda_hat) : json(nullptr)},
              {"neighbor_queries", r.neighbor_queries},
              {"degree_queries", r.degree_queries},
              {"steps", r.steps},
              {"wall_ms", r.wall_ms},
              {"seed", r.seed},
              {"error", r.error}};
    out.push_back(std::move(j));
  }
  return out.dump(2);
}

}  // namespace arbest
