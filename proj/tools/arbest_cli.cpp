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

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "arbest/arbest.h"
#include "json.hpp"

namespace {

using nlohmann::json;

struct CliError {
  arbest_status status;
};

void check(arbest_status s) {
  if (s != ARBEST_OK) throw CliError{s};
}

// Owning wrappers for the C handles.
template <class T, void (*Free)(T*)>
struct Handle {
  T* p = nullptr;
  Handle() = default;
  Handle(const Handle&) = delete;
  Handle& operator=(const Handle&) = delete;
  ~Handle() { Free(p); }
};

using Graph = Handle<arbest_graph, arbest_graph_free>;
using Text = Handle<arbest_text, arbest_text_free>;
using Peel = Handle<arbest_peel, arbest_peel_free>;
using TVec = Handle<arbest_tvector, arbest_tvector_free>;
using Estimate = Handle<arbest_estimate, arbest_estimate_free>;

void load(const std::string& path, Graph& g) { check(arbest_graph_load_file(path.c_str(), &g.p)); }

std::string fmt(double x) {
  std::ostringstream s;
  s.precision(17);
  s << x;
  return s.str();
}

const char* verdict(int yes) { return yes ? "YES" : "NO"; }

void emit(bool as_json, const json& j, const std::string& text) {
  if (as_json) {
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << text;
  }
}

struct GenArgs {
  std::string family = "forest";
  uint32_t n = 0;
  uint32_t lambda = 1;
  uint32_t d_mult = 120;
  uint32_t fan = 4;
  uint64_t m = 0;
  uint64_t seed = 1;
  std::string out;
  bool json = false;
};

int run_gen(const GenArgs& a) {
  arbest_gen_spec spec;
  arbest_gen_spec_init(&spec);
  spec.family = a.family.c_str();
  spec.n = a.n;
  spec.lambda = a.lambda;
  spec.d_mult = a.d_mult;
  spec.fan = a.fan;
  spec.m = a.m;
  spec.seed = a.seed;
  Graph g;
  check(arbest_generate(&spec, &g.p));
  Text comment;
  check(arbest_gen_describe(&spec, &comment.p));
  uint32_t lo = 0, hi = 0;
  check(arbest_lambda_truth(&spec, g.p, &lo, &hi));
  if (a.out.empty() || a.out == "-") {
    Text body;
    check(arbest_graph_to_text(g.p, arbest_text_data(comment.p), &body.p));
    std::cout << arbest_text_data(body.p);
    return 0;
  }
  check(arbest_graph_save_file(g.p, a.out.c_str(), arbest_text_data(comment.p)));
  json j = {{"file", a.out},
            {"description", arbest_text_data(comment.p)},
            {"n", arbest_graph_num_vertices(g.p)},
            {"m", arbest_graph_num_edges(g.p)},
            {"lambda_lower", lo},
            {"lambda_upper", hi}};
  std::ostringstream t;
  t << "wrote " << a.out << ": " << arbest_text_data(comment.p) << " m=" << arbest_graph_num_edges(g.p)
    << " lambda in [" << lo << ", " << hi << "]\n";
  emit(a.json, j, t.str());
  return 0;
}

struct BaselineArgs {
  std::string graph;
  std::string op = "degeneracy";
  double lambda = 1.0;
  double c = 1.0;
  bool json = false;
};

int run_baseline(const BaselineArgs& a) {
  Graph g;
  load(a.graph, g);
  const uint32_t n = arbest_graph_num_vertices(g.p);
  json j = {{"op", a.op}, {"n", n}, {"m", arbest_graph_num_edges(g.p)}};
  std::ostringstream t;
  if (a.op == "degeneracy") {
    uint32_t d = 0;
    std::vector<uint32_t> order(n);
    check(arbest_degeneracy(g.p, &d, order.data()));
    j["degeneracy"] = d;
    j["order"] = order;
    t << "degeneracy " << d << '\n';
  } else if (a.op == "peel") {
    Peel p;
    check(arbest_threshold_peel(g.p, a.lambda, 0, &p.p));
    const size_t k = arbest_peel_removed_count(p.p);
    const uint32_t* order = arbest_peel_order(p.p);
    const uint32_t* degs = arbest_peel_removal_degrees(p.p);
    const uint32_t* core = arbest_peel_core(p.p);
    j["lambda"] = a.lambda;
    j["threshold"] = arbest_peel_threshold(p.p);
    j["order"] = std::vector<uint32_t>(order, order + k);
    j["removal_degrees"] = std::vector<uint32_t>(degs, degs + k);
    j["core"] = std::vector<uint32_t>(core, core + arbest_peel_core_size(p.p));
    t << "threshold " << arbest_peel_threshold(p.p) << ": removed " << k << ", core "
      << arbest_peel_core_size(p.p) << '\n';
  } else if (a.op == "arboricity") {
    uint32_t l = 0;
    check(arbest_brute_force_arboricity(g.p, &l));
    j["arboricity"] = l;
    t << "arboricity " << l << '\n';
  } else if (a.op == "density") {
    uint64_t num = 0, den = 1;
    check(arbest_brute_force_density(g.p, &num, &den));
    j["density"] = {{"num", num}, {"den", den}, {"value", double(num) / double(den)}};
    t << "density " << num << '/' << den << '\n';
  } else if (a.op == "trecursion") {
    TVec tv;
    check(arbest_t_recursion(g.p, a.lambda, a.c, &tv.p));
    const size_t k = arbest_tvector_size(tv.p);
    const uint32_t* order = arbest_tvector_order(tv.p);
    const double* values = arbest_tvector_values(tv.p);
    j["lambda"] = a.lambda;
    j["c"] = a.c;
    j["order"] = std::vector<uint32_t>(order, order + k);
    j["values"] = std::vector<double>(values, values + k);
    j["total"] = arbest_tvector_total(tv.p);
    t << "S " << fmt(arbest_tvector_total(tv.p)) << " over " << k << " vertices\n";
  } else {
    std::cerr << "unknown --op '" << a.op << "'\n";
    return 2;
  }
  emit(a.json, j, t.str());
  return 0;
}

struct RunArgs {
  std::string graph;
  std::string algo = "fortified";
  std::string schedule = "staggered";
  double lambda = 1.0;
  uint32_t tests = 0;
  double beta = 0;
  uint32_t lanes = 0;
  double c_s = 1.0;
  uint64_t seed = 1;
  bool json = false;
  bool calibrate = false;
  uint32_t runs = 20;
  double c = 1.0;
};

arbest_options to_options(const RunArgs& a) {
  arbest_options o;
  arbest_options_init(&o);
  o.algo = a.algo == "warmup" ? ARBEST_ALGO_WARMUP : ARBEST_ALGO_FORTIFIED;
  o.schedule = a.schedule == "naive" ? ARBEST_SCHEDULE_NAIVE : ARBEST_SCHEDULE_STAGGERED;
  o.num_tests = a.tests;
  o.budget_beta = a.beta;
  o.lanes = a.lanes;
  o.sample_constant = a.c_s;
  o.seed = a.seed;
  return o;
}

int run_compare(const RunArgs& a) {
  Graph g;
  load(a.graph, g);
  if (a.calibrate) {
    arbest_calibration cal;
    check(arbest_calibrate(g.p, a.lambda, a.c, a.runs, a.seed, &cal));
    json j = {{"lambda", cal.lambda},        {"c", cal.c},
              {"S", cal.s},                  {"beta_from_S", cal.beta_from_s},
              {"beta_observed", cal.beta_observed}, {"mean_steps", cal.mean_steps},
              {"max_steps", cal.max_steps},  {"runs", cal.runs},
              {"seed", a.seed}};
    std::ostringstream t;
    t << "S = " << fmt(cal.s) << "\nbeta for budget 10 S / lambda: " << fmt(cal.beta_from_s)
      << "\nobserved beta over " << cal.runs << " runs: " << fmt(cal.beta_observed)
      << " (mean steps " << fmt(cal.mean_steps) << ", max " << cal.max_steps << ")\n";
    emit(a.json, j, t.str());
    return 0;
  }
  const arbest_options o = to_options(a);
  arbest_compare_result r;
  check(arbest_compare(g.p, a.lambda, &o, &r));
  json j = {{"algo", a.algo},
            {"schedule", a.schedule},
            {"lambda", a.lambda},
            {"verdict", verdict(r.yes)},
            {"yes_votes", r.yes_votes},
            {"no_votes", r.no_votes},
            {"tests_run", r.tests_run},
            {"neighbor_queries", r.neighbor_queries},
            {"degree_queries", r.degree_queries},
            {"steps", r.steps},
            {"seed", a.seed}};
  std::ostringstream t;
  t << verdict(r.yes) << " (" << r.yes_votes << " yes, " << r.no_votes << " no; "
    << r.neighbor_queries << " neighbor + " << r.degree_queries << " degree queries, " << r.steps
    << " steps)\n";
  emit(a.json, j, t.str());
  return 0;
}

int run_estimate(const RunArgs& a) {
  Graph g;
  load(a.graph, g);
  const arbest_options o = to_options(a);
  Estimate e;
  check(arbest_estimate_run(g.p, &o, &e.p));
  json thresholds = json::array();
  std::ostringstream t;
  for (size_t i = 0; i < arbest_estimate_threshold_count(e.p); ++i) {
    arbest_threshold_record rec;
    check(arbest_estimate_threshold(e.p, i, &rec));
    thresholds.push_back({{"lambda", rec.lambda},
                          {"verdict", verdict(rec.yes)},
                          {"neighbor_queries", rec.neighbor_queries},
                          {"degree_queries", rec.degree_queries},
                          {"steps", rec.steps}});
    t << "lambda " << fmt(rec.lambda) << ": " << verdict(rec.yes) << " (" << rec.neighbor_queries
      << " neighbor, " << rec.degree_queries << " degree queries)\n";
  }
  const double lambda_hat = arbest_estimate_lambda_hat(e.p);
  json j = {{"lambda_hat", lambda_hat},
            {"thresholds", thresholds},
            {"seed", arbest_estimate_seed(e.p)},
            {"wall_ms", arbest_estimate_wall_ms(e.p)}};
  t << "lambda_hat = " << fmt(lambda_hat) << '\n';
  emit(a.json, j, t.str());
  return 0;
}

struct BenchArgs {
  std::string config;
  std::string out;
  bool json = false;
  bool timing = false;
};

int run_bench(const BenchArgs& a) {
  std::ifstream in(a.config);
  if (!in) {
    std::cerr << "error: cannot open " << a.config << '\n';
    return 1;
  }
  std::stringstream buf;
  buf << in.rdbuf();
  Text result;
  check(arbest_bench_run(buf.str().c_str(), a.timing ? 1 : -1, a.json, &result.p));
  if (a.out.empty() || a.out == "-") {
    std::cout << arbest_text_data(result.p);
    if (a.json) std::cout << '\n';
    return 0;
  }
  std::ofstream out(a.out);
  out << arbest_text_data(result.p);
  if (!out) {
    std::cerr << "error: cannot write " << a.out << '\n';
    return 1;
  }
  return 0;
}

void add_run_flags(CLI::App* cmd, RunArgs& a, bool with_lambda) {
  cmd->add_option("--graph", a.graph, "Edge-list file")->required()->check(CLI::ExistingFile);
  cmd->add_option("--algo", a.algo, "fortified or warmup")
      ->check(CLI::IsMember({"fortified", "warmup"}));
  if (with_lambda) cmd->add_option("--lambda", a.lambda, "Threshold lambda (>= 1)");
  cmd->add_option("--tests", a.tests, "Number of tests, odd (0: 2 ceil(log2 n) + 1)");
  cmd->add_option("--budget-beta", a.beta, "Budget constant (0: algorithm default)");
  cmd->add_option("--schedule", a.schedule, "staggered or naive")
      ->check(CLI::IsMember({"staggered", "naive"}));
  cmd->add_option("--lanes", a.lanes, "Warm-up lanes L (0: 3 ceil(log2 n))");
  cmd->add_option("--c-s", a.c_s, "Warm-up root sampling constant");
  cmd->add_option("--seed", a.seed, "Master seed (64-bit)");
  cmd->add_flag("--json", a.json, "Machine-readable output");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sublinear-time arboricity estimation"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* g = app.add_subcommand("gen", "Generate a synthetic graph");
  g->add_option("--family", gen.family, "planted-core, layered, uniform, forest, clique-union")
      ->check(CLI::IsMember({"planted-core", "layered", "uniform", "forest", "clique-union"}));
  g->add_option("--n", gen.n, "Vertex count")->required();
  g->add_option("--lambda", gen.lambda, "Family lambda parameter");
  g->add_option("--d-mult", gen.d_mult, "Planted-core degree multiplier");
  g->add_option("--fan", gen.fan, "Layered shrink factor");
  g->add_option("--m", gen.m, "Uniform edge count");
  g->add_option("--seed", gen.seed, "Seed (64-bit)");
  g->add_option("--out", gen.out, "Output file (default stdout)");
  g->add_flag("--json", gen.json, "Machine-readable summary");

  BaselineArgs base;
  auto* b = app.add_subcommand("baseline", "Exact full-knowledge baselines");
  b->add_option("--graph", base.graph, "Edge-list file")->required()->check(CLI::ExistingFile);
  b->add_option("--op", base.op, "degeneracy, peel, arboricity, density, trecursion")
      ->check(CLI::IsMember({"degeneracy", "peel", "arboricity", "density", "trecursion"}));
  b->add_option("--lambda", base.lambda, "Peeling threshold parameter");
  b->add_option("--c-const", base.c, "Cost constant C of the T recursion");
  b->add_flag("--json", base.json, "Machine-readable output");

  RunArgs cmp;
  auto* c = app.add_subcommand("compare", "Run the comparator at one threshold");
  add_run_flags(c, cmp, true);
  c->add_flag("--calibrate", cmp.calibrate, "Report the budget constant the graph needs");
  c->add_option("--runs", cmp.runs, "Calibration runs");
  c->add_option("--c-const", cmp.c, "Cost constant C for calibration");

  RunArgs est;
  auto* e = app.add_subcommand("estimate", "Estimate the arboricity");
  add_run_flags(e, est, false);

  BenchArgs bench;
  auto* r = app.add_subcommand("bench", "Run a benchmark config");
  r->add_option("--config", bench.config, "JSON config file")->required()->check(CLI::ExistingFile);
  r->add_option("--out", bench.out, "Output file (default stdout)");
  r->add_flag("--json", bench.json, "JSON rows instead of CSV");
  r->add_flag("--timing", bench.timing, "Record wall-clock times");

  CLI11_PARSE(app, argc, argv);

  try {
    if (g->parsed()) return run_gen(gen);
    if (b->parsed()) return run_baseline(base);
    if (c->parsed()) return run_compare(cmp);
    if (e->parsed()) return run_estimate(est);
    if (r->parsed()) return run_bench(bench);
  } catch (const CliError& err) {
    std::cerr << "error (" << arbest_status_name(err.status) << "): " << arbest_last_error()
              << '\n';
    return 1;
  }
  return 0;
}
