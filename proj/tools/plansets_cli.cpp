// Copyright 2026 The plansets Authors
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

// plansets command-line tool.
//
// Exit codes: 0 success, 1 planner failure, 2 usage or input error,
// 3 incomplete plan set.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "plansets/bench.hpp"
#include "plansets/genset.hpp"
#include "plansets/pddl.hpp"
#include "plansets/report.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace plansets;

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIncomplete = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raw flag values; applied on top of the config file only when given.
struct Flags {
  std::string metric = "action";
  std::string dist = "uniform";
  std::string d = "0.5";
  std::size_t k = 4;
  std::size_t k0 = 3;
  int gamma = 0;
  double timeout = 600;
  std::uint64_t seed = 1;
  std::string out;
  std::string format = "json";
  std::string config;
  std::string dump_ground;
  std::string durations;
  std::size_t workers = 1;
  double noise = 0;
};

struct Options {
  CLI::App* app = nullptr;
  Flags flags;
};

void AddCommonFlags(CLI::App* sub, Flags& f) {
  sub->add_option("--metric", f.metric, "action|clink|state-pad|state-hold");
  sub->add_option("--dist", f.dist, "uniform|tri:<mode>");
  sub->add_option("--d", f.d, "diversity threshold in (0, 1]");
  sub->add_option("--k", f.k, "plan set size");
  sub->add_option("--k0", f.k0, "hybrid seeding size");
  sub->add_option("--gamma", f.gamma, "balance factor for the action distance (>= 1)");
  sub->add_option("--timeout", f.timeout, "time bound in seconds");
  sub->add_option("--seed", f.seed, "master RNG seed");
  sub->add_option("--noise", f.noise, "probability of a random open-list pick");
  sub->add_option("--out", f.out, "output path (default stdout)");
  sub->add_option("--format", f.format, "json|csv")->check(CLI::IsMember({"json", "csv"}));
  sub->add_option("--config", f.config, "JSON config file");
}

bool Given(const CLI::App* sub, const std::string& name) { return sub->count(name) > 0; }

void RequireFile(const std::string& path) {
  if (!fs::is_regular_file(path)) throw UsageError("file not found: " + path);
}

// Explicit flags win over the config file, which wins over defaults.
GenConfig BuildConfig(const CLI::App* sub, const Flags& f) {
  GenConfig cfg;
  json config = json::object();
  if (!f.config.empty()) {
    RequireFile(f.config);
    try {
      config = json::parse(ReadFile(f.config));
    } catch (const json::exception& ex) {
      throw UsageError(std::string("bad config file: ") + ex.what());
    }
  }
  auto pick = [&](const std::string& key, auto flag_value) {
    using T = decltype(flag_value);
    if (Given(sub, "--" + key) || !config.contains(key)) return flag_value;
    return config.at(key).template get<T>();
  };
  cfg.metric = ParseMetric(pick("metric", f.metric));
  cfg.dist = WeightDistribution::Parse(pick("dist", f.dist));
  if (Given(sub, "--d") || !config.contains("d")) {
    cfg.d = ParseRational(f.d);
  } else {
    cfg.d = RationalFromJson(config.at("d"));
  }
  cfg.k = pick("k", f.k);
  cfg.k0 = pick("k0", f.k0);
  const int gamma = pick("gamma", f.gamma);
  if (gamma != 0) cfg.gamma = gamma;
  cfg.time_bound_seconds = pick("timeout", f.timeout);
  cfg.seed = pick("seed", f.seed);
  if (config.contains("search")) cfg.search = config.at("search").get<SearchConfig>();
  if (config.contains("stall_limit")) cfg.stall_limit = config.at("stall_limit").get<std::size_t>();
  if (config.contains("baseline_noise")) cfg.baseline_noise = config.at("baseline_noise").get<double>();
  if (config.contains("noise")) cfg.search.noise = config.at("noise").get<double>();
  if (Given(sub, "--noise")) cfg.search.noise = f.noise;
  cfg.search.seed = cfg.seed;
  cfg.search.time_budget_seconds = std::min(cfg.search.time_budget_seconds, cfg.time_bound_seconds);
  cfg.search.Validate();
  return cfg;
}

void WriteOutput(const Flags& f, const std::string& text) {
  if (f.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(f.out, std::ios::binary);
  if (!out) throw UsageError("cannot write '" + f.out + "'");
  out << text;
}

std::string DefaultDurations(const std::string& domain_path) {
  fs::path p(domain_path);
  fs::path sidecar = p.parent_path() / (p.stem().string() + ".durations.json");
  return fs::exists(sidecar) ? sidecar.string() : "";
}

GroundProblem LoadProblem(const std::string& domain, const std::string& problem, const Flags& f) {
  RequireFile(domain);
  RequireFile(problem);
  std::string durations = f.durations;
  if (durations.empty()) {
    durations = DefaultDurations(domain);
  } else {
    RequireFile(durations);
  }
  std::vector<std::string> warnings;
  GroundProblem ground;
  try {
    ground = LoadProblemFiles(domain, problem, durations, &warnings);
  } catch (const ParseError& ex) {
    throw UsageError(ex.what());
  }
  for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
  if (!f.dump_ground.empty()) {
    std::ofstream out(f.dump_ground, std::ios::binary);
    if (!out) throw UsageError("cannot write '" + f.dump_ground + "'");
    out << GroundProblemToJson(ground).dump(2) << "\n";
  }
  return ground;
}

std::string PlansToCsv(const GroundProblem& problem, const PlanSetResult& result) {
  std::ostringstream out;
  out << "index,time,cost,provenance,steps\n";
  for (std::size_t i = 0; i < result.plans.size(); ++i) {
    std::string steps;
    for (const auto& s : StepNames(problem, result.plans[i])) steps += (steps.empty() ? "" : " ") + s;
    out << i << ',' << FormatNumber(ToDouble(result.points[i].time)) << ','
        << FormatNumber(ToDouble(result.points[i].cost)) << ',' << result.plans[i].provenance << ",\"" << steps
        << "\"\n";
  }
  return out.str();
}

int EmitResult(const GroundProblem& problem, const PlanSetResult& result, const Flags& f) {
  if (f.format == "csv") {
    WriteOutput(f, PlansToCsv(problem, result));
  } else {
    WriteOutput(f, PlanSetResultToJson(problem, result).dump(2) + "\n");
  }
  std::cerr << result.method << ": " << StatusName(result.status) << ", " << result.plans.size() << " plan(s), "
            << result.stop_reason << "\n";
  switch (result.status) {
    case PlanSetResult::Status::kComplete:
      return 0;
    case PlanSetResult::Status::kIncomplete:
      return kExitIncomplete;
    case PlanSetResult::Status::kFailed:
      return kExitFailure;
  }
  return kExitFailure;
}

TimeCostPoint PointFromJson(const json& j) {
  if (j.is_array() && j.size() == 2) return {RationalFromJson(j[0]), RationalFromJson(j[1])};
  if (j.is_object()) return {RationalFromJson(j.at("time")), RationalFromJson(j.at("cost"))};
  throw UsageError("points must be [time, cost] pairs or {time, cost} objects");
}

std::vector<TimeCostPoint> LoadPoints(const std::string& path) {
  RequireFile(path);
  const json j = json::parse(ReadFile(path));
  const json& list = j.is_object() && j.contains("points") ? j.at("points") : j;
  if (!list.is_array()) throw UsageError("points file must hold an array");
  std::vector<TimeCostPoint> points;
  for (const auto& p : list) points.push_back(PointFromJson(p));
  return points;
}

// A plan file is a single plan object or a plan-set document with "plans".
std::vector<Plan> LoadPlans(const GroundProblem& problem, const std::string& path) {
  RequireFile(path);
  const json j = json::parse(ReadFile(path));
  std::vector<Plan> plans;
  auto load = [&](const json& item) {
    try {
      plans.push_back(ResolvePlanFile(problem, PlanFileFromJson(item)));
    } catch (const ValidationError& ex) {
      throw UsageError(path + ": " + ex.what());
    }
  };
  if (j.is_object() && j.contains("plans")) {
    for (const auto& item : j.at("plans")) load(item);
  } else {
    load(j);
  }
  return plans;
}

std::vector<std::string> SplitList(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Plan set generation and evaluation"};
  app.require_subcommand(1);

  Flags f;
  std::string domain;
  std::string problem;
  std::optional<double> weight;
  std::string method = "hybrid";
  std::vector<std::string> plan_files;
  std::string points_file;
  std::string corpus;
  std::string methods = "sampling,hybrid";
  std::string dists = "uniform";
  std::string seeds = "1";

  auto problem_args = [&](CLI::App* sub) {
    sub->add_option("domain", domain, "domain .pddl file")->required();
    sub->add_option("problem", problem, "problem .pddl file")->required();
    sub->add_option("--durations", f.durations, "durations sidecar (default: <domain>.durations.json if present)");
    sub->add_option("--dump-ground", f.dump_ground, "write the grounded problem as JSON");
    AddCommonFlags(sub, f);
  };

  CLI::App* solve = app.add_subcommand("solve", "find a single plan");
  problem_args(solve);
  solve->add_option("--w", weight, "optimize w*makespan + (1-w)*cost instead of cost");

  CLI::App* diverse = app.add_subcommand("diverse", "generate k mutually d-distant plans");
  problem_args(diverse);

  CLI::App* icpgen = app.add_subcommand("icpgen", "generate a plan set for a weight distribution");
  problem_args(icpgen);
  icpgen->add_option("--method", method, "sampling|icpseq|hybrid|random")
      ->check(CLI::IsMember({"sampling", "icpseq", "hybrid", "random"}));

  CLI::App* eval = app.add_subcommand("eval", "report quality metrics of a plan set");
  eval->add_option("--domain", domain, "domain .pddl file");
  eval->add_option("--problem", problem, "problem .pddl file");
  eval->add_option("--durations", f.durations, "durations sidecar");
  eval->add_option("plans", plan_files, "plan files (JSON)");
  eval->add_option("--points", points_file, "precomputed (time, cost) points (JSON)");
  AddCommonFlags(eval, f);

  CLI::App* bench = app.add_subcommand("bench", "run the method x distribution x seed grid over a corpus");
  bench->add_option("corpus", corpus, "corpus directory")->required();
  bench->add_option("--methods", methods, "comma-separated methods");
  bench->add_option("--dists", dists, "comma-separated distributions");
  bench->add_option("--seeds", seeds, "comma-separated seeds");
  bench->add_option("--workers", f.workers, "parallel grid cells");
  AddCommonFlags(bench, f);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& ex) {
    const int code = app.exit(ex);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*solve) {
      const GenConfig cfg = BuildConfig(solve, f);
      const GroundProblem ground = LoadProblem(domain, problem, f);
      SearchConfig search = cfg.search;
      search.objective_w = weight;
      if (weight && !(*weight >= 0 && *weight <= 1)) throw UsageError("--w must lie in [0, 1]");
      const SolveResult solved = Solve(ground, EvaluationContext::Plain(), search);
      PlanSetResult result;
      result.method = "solve";
      result.seed = cfg.seed;
      result.dist = cfg.dist;
      result.searches = 1;
      result.nodes_expanded = solved.expanded;
      result.stop_reason = StatusName(solved.status);
      if (solved.plan) {
        result.plans.push_back(*solved.plan);
        result.plans.back().provenance = "solve";
        result.status = PlanSetResult::Status::kComplete;
      }
      ComputeSetMetrics(ground, result);
      return EmitResult(ground, result, f);
    }
    if (*diverse) {
      const GenConfig cfg = BuildConfig(diverse, f);
      const GroundProblem ground = LoadProblem(domain, problem, f);
      return EmitResult(ground, GenerateDiverse(ground, cfg), f);
    }
    if (*icpgen) {
      const GenConfig cfg = BuildConfig(icpgen, f);
      const GroundProblem ground = LoadProblem(domain, problem, f);
      return EmitResult(ground, RunMethod(method, ground, cfg), f);
    }
    if (*eval) {
      const GenConfig cfg = BuildConfig(eval, f);
      EvalReport report;
      if (!points_file.empty()) {
        if (!plan_files.empty()) throw UsageError("give either plan files or --points, not both");
        report = EvaluatePoints(LoadPoints(points_file), cfg.dist);
      } else {
        if (domain.empty() || problem.empty()) throw UsageError("eval needs --domain and --problem with plan files");
        if (plan_files.empty()) throw UsageError("no plan files given");
        const GroundProblem ground = LoadProblem(domain, problem, f);
        std::vector<Plan> plans;
        for (const auto& path : plan_files) {
          for (auto& p : LoadPlans(ground, path)) plans.push_back(std::move(p));
        }
        std::vector<DistanceMetric> metrics;
        if (Given(eval, "--metric")) {
          metrics.push_back(cfg.metric);
        } else {
          metrics = {DistanceMetric::kAction, DistanceMetric::kCausalLink, DistanceMetric::kStatePad,
                     DistanceMetric::kStateHold};
        }
        report = EvaluatePlans(ground, plans, cfg.dist, metrics);
      }
      WriteOutput(f, f.format == "csv" ? EvalReportToCsv(report) : EvalReportToJson(report).dump(2) + "\n");
      return 0;
    }
    if (*bench) {
      BenchConfig bc;
      bc.gen = BuildConfig(bench, f);
      bc.methods = SplitList(methods);
      bc.dists.clear();
      for (const auto& d : SplitList(dists)) bc.dists.push_back(WeightDistribution::Parse(d));
      bc.seeds.clear();
      for (const auto& s : SplitList(seeds)) bc.seeds.push_back(std::stoull(s));
      bc.workers = f.workers;
      const std::vector<CorpusEntry> entries = DiscoverCorpus(corpus);
      if (entries.empty()) throw UsageError("no problems found under " + corpus);
      const std::vector<BenchRow> rows = RunBench(entries, bc);
      // Bench tables default to CSV.
      if (!Given(bench, "--format") || f.format == "csv") {
        WriteOutput(f, BenchRowsToCsv(rows));
      } else {
        json out = json::array();
        for (const auto& r : rows) {
          out.push_back({{"domain", r.domain},
                         {"problem", r.problem},
                         {"method", r.method},
                         {"dist", r.dist},
                         {"seed", r.seed},
                         {"status", r.status},
                         {"plans", r.plans},
                         {"icp", r.icp ? json(*r.icp) : json(nullptr)},
                         {"lch_contribution", r.lch_contribution ? json(*r.lch_contribution) : json(nullptr)},
                         {"error", r.error},
                         {"runtime_seconds", r.runtime_seconds}});
        }
        WriteOutput(f, out.dump(2) + "\n");
      }
      return 0;
    }
  } catch (const UsageError& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kExitUsage;
  } catch (const json::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}
