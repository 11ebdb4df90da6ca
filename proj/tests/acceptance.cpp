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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails.

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "plansets/bench.hpp"
#include "plansets/distance.hpp"
#include "plansets/genset.hpp"
#include "plansets/icp.hpp"
#include "plansets/pddl.hpp"
#include "plansets/report.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace plansets;

namespace {

using Clock = std::chrono::steady_clock;

double Seconds(Clock::time_point start) { return std::chrono::duration<double>(Clock::now() - start).count(); }

std::string Data(const std::string& relative) { return std::string(PLANSETS_DATA_DIR) + "/" + relative; }

// Collects failure notes for one criterion.
struct Check {
  std::vector<std::string> failures;
  void Expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

struct Outcome {
  bool pass;
  std::string detail;
};

int failed_criteria = 0;

void Report(int number, const std::string& name, const std::function<Outcome()>& body) {
  const auto start = Clock::now();
  Outcome out{false, ""};
  try {
    out = body();
  } catch (const std::exception& ex) {
    out = {false, std::string("exception: ") + ex.what()};
  }
  if (!out.pass) ++failed_criteria;
  std::printf("[%s] criterion %d: %s (%.2fs) %s\n", out.pass ? "PASS" : "FAIL", number, name.c_str(), Seconds(start),
              out.detail.c_str());
  std::fflush(stdout);
}

Outcome Finish(const Check& c, const std::string& summary) {
  if (c.failures.empty()) return {true, summary};
  std::string detail = summary + " | failures:";
  for (std::size_t i = 0; i < c.failures.size() && i < 5; ++i) detail += " [" + c.failures[i] + "]";
  if (c.failures.size() > 5) detail += " ... (" + std::to_string(c.failures.size()) + " total)";
  return {false, detail};
}

std::string Fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

struct CliRun {
  int exit_code;
  std::string out;
  double seconds;
};

CliRun RunCli(const std::string& args, const std::string& out_path) {
  const std::string cmd = std::string(PLANSETS_CLI) + " " + args + " --out " + out_path + " 2>/dev/null";
  const auto start = Clock::now();
  const int status = std::system(cmd.c_str());
  const double seconds = Seconds(start);
  CliRun run{WIFEXITED(status) ? WEXITSTATUS(status) : -1, "", seconds};
  std::ifstream in(out_path, std::ios::binary);
  std::stringstream buf;
  buf << in.rdbuf();
  run.out = buf.str();
  return run;
}

// Removes the wall-clock parts of a CLI payload.
std::string DataPayload(const std::string& text) {
  if (!text.empty() && (text[0] == '{' || text[0] == '[')) {
    json j = json::parse(text);
    if (j.is_object()) j.erase("timing");
    if (j.is_array()) {
      for (auto& row : j) {
        if (row.is_object()) row.erase("runtime_seconds");
      }
    }
    return j.dump();
  }
  std::istringstream in(text);
  std::string out;
  bool bench = text.rfind("domain,problem,", 0) == 0;
  for (std::string line; std::getline(in, line);) out += (bench ? line.substr(0, line.rfind(',')) : line) + "\n";
  return out;
}

const std::vector<TimeCostPoint> kSeven{{4, 25}, {6, 22}, {7, 15}, {8, 20}, {10, 12}, {11, 14}, {12, 5}};

std::vector<TimeCostPoint> Pick(std::initializer_list<int> ids) {
  std::vector<TimeCostPoint> out;
  for (int i : ids) out.push_back(kSeven[i - 1]);
  return out;
}

double IcpOf(const std::vector<TimeCostPoint>& pts, const WeightDistribution& dist) {
  return Icp(std::span<const TimeCostPoint>(pts), dist);
}

Outcome FrontierGolden() {
  const auto start = Clock::now();
  Check c;
  const auto pareto = ParetoIndices(std::span<const TimeCostPoint>(kSeven));
  c.Expect(pareto == std::vector<std::size_t>{0, 1, 2, 4, 6}, "pareto set");
  const HullResult hull = LowerConvexHull(std::span<const TimeCostPoint>(kSeven));
  c.Expect(hull.indices == std::vector<std::size_t>{0, 2, 6}, "hull set");
  c.Expect(hull.breakpoints.size() == 4, "breakpoint count");
  if (hull.breakpoints.size() == 4) {
    c.Expect(std::abs(ToDouble(hull.breakpoints[1]) - 2.0 / 3.0) <= 1e-9, "breakpoint 2/3");
    c.Expect(std::abs(ToDouble(hull.breakpoints[2]) - 10.0 / 13.0) <= 1e-9, "breakpoint 10/13");
  }
  const WeightDistribution uniform = WeightDistribution::Uniform();
  const double icp125 = IcpOf(Pick({1, 2, 5}), uniform);
  const double icp257 = IcpOf(Pick({2, 5, 7}), uniform);
  c.Expect(std::abs(icp125 - 10.05) <= 0.01, "ICP{p1,p2,p5}=" + Fmt(icp125));
  c.Expect(std::abs(icp257 - 7.71) <= 0.01, "ICP{p2,p5,p7}=" + Fmt(icp257));
  c.Expect(Value(kSeven[0], Rational(4, 5)) == Rational(41, 5), "V(p1,0.8)");
  c.Expect(Value(kSeven[6], Rational(4, 5)) == Rational(53, 5), "V(p7,0.8)");
  const double elapsed = Seconds(start);
  c.Expect(elapsed < 1.0, "runtime " + Fmt(elapsed) + "s");
  return Finish(c, "ICP{p1,p2,p5}=" + Fmt(icp125) + " ICP{p2,p5,p7}=" + Fmt(icp257) + " breakpoints 2/3, 10/13");
}

Outcome TriadGolden() {
  Check c;
  const GroundProblem g = LoadProblemFiles(Data("fixtures/triad-domain.pddl"), Data("fixtures/triad-problem.pddl"));
  const PlanFeatures p1 = ExtractFeatures(g, PlanFromNames(g, {"(a1)", "(a2)", "(a3)"}));
  const PlanFeatures p2 = ExtractFeatures(g, PlanFromNames(g, {"(a1)", "(a2)", "(a4)"}));
  const PlanFeatures p3 = ExtractFeatures(g, PlanFromNames(g, {"(a5)", "(a6)"}));
  const Rational a12 = ActionDistance(p1, p2);
  const Rational cl12 = CausalLinkDistance(p1, p2);
  const Rational a13 = ActionDistance(p1, p3);
  const Rational pad = StateDistancePad(p1, p3);
  const Rational hold = StateDistanceHold(p1, p3);
  c.Expect(a12 == Rational(1, 2), "dA(p1,p2)=" + ToString(a12));
  c.Expect(cl12 == Rational(4, 7), "dCL(p1,p2)=" + ToString(cl12));
  c.Expect(a13 == Rational(1), "dA(p1,p3)=" + ToString(a13));
  c.Expect(pad == Rational(13, 18), "pad(p1,p3)=" + ToString(pad));
  c.Expect(hold == Rational(1, 2), "hold(p1,p3)=" + ToString(hold));
  return Finish(c, "dA=" + ToString(a12) + " dCL=" + ToString(cl12) + " dA13=" + ToString(a13) + " pad=" +
                       ToString(pad) + " hold=" + ToString(hold));
}

Outcome OracleEquivalence() {
  const auto start = Clock::now();
  Check c;
  std::mt19937_64 rng(20260101);
  std::uniform_real_distribution<double> coord(1.0, 100.0);
  const std::vector<WeightDistribution> dists{WeightDistribution::Uniform(), WeightDistribution::Triangular(0.2),
                                              WeightDistribution::Triangular(0.8)};
  double worst = 0;
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = 1 + rng() % 20;
    std::vector<TimeCostPoint> pts;
    std::vector<TimeCostEstimate> est;
    for (std::size_t j = 0; j < n; ++j) {
      pts.push_back({RationalFromDouble(coord(rng)), RationalFromDouble(coord(rng))});
      est.push_back(ToEstimate(pts.back()));
    }
    const WeightDistribution& dist = dists[i % 3];
    const double err = std::abs(IcpOf(pts, dist) - IpfNumeric(est, dist, 1000000));
    worst = std::max(worst, err);
    c.Expect(err <= 1e-6, "instance " + std::to_string(i) + " err " + Fmt(err));
  }
  const double elapsed = Seconds(start);
  c.Expect(elapsed < 60.0, "runtime " + Fmt(elapsed) + "s");
  return Finish(c, "200 instances, max |icp - ipf_numeric| = " + Fmt(worst));
}

PlanFeatures RandomFeatures(std::mt19937_64& rng) {
  auto subset = [&](std::size_t universe) {
    std::vector<ActionId> out;
    for (ActionId a = 0; a < universe; ++a) {
      if (rng() % 2) out.push_back(a);
    }
    return out;
  };
  PlanFeatures f;
  f.actions = subset(10);
  for (ActionId a : subset(8)) f.causal_links.push_back({static_cast<StepRef>(rng() % 3) - 2, a, kGoalStep});
  std::sort(f.causal_links.begin(), f.causal_links.end());
  f.causal_links.erase(std::unique(f.causal_links.begin(), f.causal_links.end()), f.causal_links.end());
  const std::size_t len = rng() % 6;
  for (std::size_t i = 0; i <= len; ++i) {
    const auto s = subset(6);
    f.trajectory.states.push_back(AtomSet(s.begin(), s.end()));
  }
  return f;
}

std::vector<TimeCostPoint> RandomPoints(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<int> coord(1, 100);
  std::vector<TimeCostPoint> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back({coord(rng), coord(rng)});
  return out;
}

Outcome Properties() {
  Check c;
  std::mt19937_64 rng(77);
  const std::vector<WeightDistribution> dists{WeightDistribution::Uniform(), WeightDistribution::Triangular(0.2),
                                              WeightDistribution::Triangular(0.8)};
  constexpr int kCases = 1000;
  int monotone = 0, dominance = 0, dominated = 0, metric = 0, split = 0, order = 0;
  for (int i = 0; i < kCases; ++i) {
    const WeightDistribution& dist = dists[i % 3];
    // Set extension.
    auto base = RandomPoints(rng, 1 + rng() % 12);
    auto extended = base;
    extended.push_back(RandomPoints(rng, 1)[0]);
    if (IcpOf(extended, dist) <= IcpOf(base, dist) + 1e-12) ++monotone;
    // Dominated set.
    std::vector<TimeCostPoint> worse;
    for (const auto& p : base) {
      const int dt = static_cast<int>(rng() % 5);
      const int dc = static_cast<int>(rng() % 5);
      worse.push_back({p.time + dt + (dt + dc == 0 ? 1 : 0), p.cost + dc});
    }
    if (IcpOf(base, dist) < IcpOf(worse, dist)) ++dominance;
    // Dominated insertion.
    auto padded = base;
    const auto& anchor = base[rng() % base.size()];
    padded.push_back({anchor.time + static_cast<int>(rng() % 10), anchor.cost + 1 + static_cast<int>(rng() % 10)});
    if (IcpOf(padded, dist) == IcpOf(base, dist)) ++dominated;
    // Distances.
    const PlanFeatures a = RandomFeatures(rng);
    const PlanFeatures b = RandomFeatures(rng);
    bool ok = true;
    for (DistanceMetric m : {DistanceMetric::kAction, DistanceMetric::kCausalLink, DistanceMetric::kStatePad,
                             DistanceMetric::kStateHold}) {
      const Rational ab = Distance(m, a, b);
      ok = ok && ab == Distance(m, b, a) && ab >= 0 && ab <= 1 && Distance(m, a, a) == 0;
    }
    if (ok) ++metric;
    const OneSidedActionDistance parts = SplitActionDistance(a, b);
    if (parts.only_in_first + parts.only_in_second == ActionDistance(a, b)) ++split;
    // Set quality ordering.
    std::vector<PlanFeatures> set;
    for (std::size_t j = 0, n = 2 + rng() % 5; j < n; ++j) set.push_back(RandomFeatures(rng));
    bool ordered = true;
    for (DistanceMetric m : {DistanceMetric::kAction, DistanceMetric::kCausalLink, DistanceMetric::kStatePad,
                             DistanceMetric::kStateHold}) {
      const Rational lo = SetQuality(set, m, Aggregate::kMin);
      const Rational mid = SetQuality(set, m, Aggregate::kAvg);
      const Rational hi = SetQuality(set, m, Aggregate::kMax);
      ordered = ordered && lo <= mid && mid <= hi;
    }
    if (ordered) ++order;
  }
  c.Expect(monotone == kCases, "monotonicity " + std::to_string(monotone));
  c.Expect(dominance == kCases, "dominance " + std::to_string(dominance));
  c.Expect(dominated == kCases, "dominated insertion " + std::to_string(dominated));
  c.Expect(metric == kCases, "metric axioms " + std::to_string(metric));
  c.Expect(split == kCases, "two-term split " + std::to_string(split));
  c.Expect(order == kCases, "min<=avg<=max " + std::to_string(order));
  return Finish(c, "6 suites x " + std::to_string(kCases) + " cases");
}

Outcome DiverseCli(const std::string& tmp) {
  Check c;
  const std::string problem =
      Data("fixtures/two-route-domain.pddl") + " " + Data("fixtures/two-route-problem.pddl");
  const CliRun ok = RunCli("diverse " + problem + " --d 0.5 --k 2 --metric action --seed 1", tmp + "/d1.json");
  c.Expect(ok.exit_code == 0, "exit " + std::to_string(ok.exit_code));
  double zmin = -1;
  std::size_t plans = 0;
  if (ok.exit_code == 0) {
    const json j = json::parse(ok.out);
    plans = j["plans"].size();
    zmin = j["distances"]["action"]["min"].get<double>();
  }
  c.Expect(plans == 2, "plans " + std::to_string(plans));
  c.Expect(zmin >= 0.5, "zeta_min " + Fmt(zmin));
  c.Expect(ok.seconds < 10, "runtime " + Fmt(ok.seconds));
  // Three plans cannot be pairwise 0.9 apart: same-route pairs sit at 2/3.
  const CliRun high = RunCli("diverse " + problem + " --d 0.9 --k 3 --metric action --seed 1", tmp + "/d2.json");
  c.Expect(high.exit_code == 3, "high-d exit " + std::to_string(high.exit_code));
  std::string status;
  if (!high.out.empty()) {
    const json j = json::parse(high.out);
    status = j["status"];
    if (j["plans"].size() >= 2) {
      c.Expect(j["distances"]["action"]["min"].get<double>() >= 0.9, "incomplete set violates d");
    }
  }
  c.Expect(status == "incomplete", "high-d status " + status);
  return Finish(c, "d=0.5,k=2: exit " + std::to_string(ok.exit_code) + ", zeta_min " + Fmt(zmin) + " in " +
                       Fmt(ok.seconds) + "s; d=0.9,k=3: exit " + std::to_string(high.exit_code) + " (" + status + ")");
}

std::vector<CorpusEntry> Corpus() {
  const auto corpus = DiscoverCorpus(Data("corpus"));
  std::set<std::string> domains;
  for (const auto& e : corpus) domains.insert(e.domain);
  if (domains.size() < 3 || corpus.size() < 9) throw std::runtime_error("corpus smaller than 3 x 3");
  return corpus;
}

Outcome DirectionalBaseline() {
  Check c;
  BenchConfig cfg;
  cfg.methods = {"diverse", "random"};
  cfg.seeds = {1, 2, 3};
  cfg.gen.k = 4;
  cfg.gen.d = Rational(1, 5);
  cfg.gen.time_bound_seconds = 120;
  const auto rows = RunBench(Corpus(), cfg);
  std::size_t cells = 0;
  std::size_t wins = 0;
  for (std::size_t i = 0; i + 1 < rows.size(); i += 2) {
    const BenchRow& diverse = rows[i];
    const BenchRow& random = rows[i + 1];
    c.Expect(diverse.status != "error" && random.status != "error", diverse.problem + ": " + diverse.error + random.error);
    // An undefined set distance (fewer than two plans) counts as 0.
    const double zd = diverse.zeta ? ToDouble(diverse.zeta->min) : 0.0;
    const double zr = random.zeta ? ToDouble(random.zeta->min) : 0.0;
    ++cells;
    if (zd >= zr) ++wins;
  }
  const double share = cells ? static_cast<double>(wins) / static_cast<double>(cells) : 0.0;
  c.Expect(share >= 0.8, "share " + Fmt(share));
  return Finish(c, std::to_string(wins) + "/" + std::to_string(cells) + " cells with greedy zeta_min >= baseline (" +
                       Fmt(100 * share) + "%)");
}

Outcome HybridDominance() {
  Check c;
  const auto corpus = Corpus();
  std::size_t runs = 0;
  std::size_t improved = 0;
  for (const char* spec : {"uniform", "tri:0.2", "tri:0.8"}) {
    for (const auto& entry : corpus) {
      const GroundProblem g = LoadProblemFiles(entry.domain_path, entry.problem_path, entry.durations_path);
      GenConfig cfg;
      cfg.k = 10;
      cfg.k0 = 3;
      cfg.time_bound_seconds = 600;
      cfg.dist = WeightDistribution::Parse(spec);
      const PlanSetResult r = GenerateHybrid(g, cfg);
      const std::string cell = entry.domain + "/" + entry.problem + "/" + spec;
      ++runs;
      if (!r.phase1_icp) {
        c.Expect(false, cell + ": no phase-1 set");
        continue;
      }
      c.Expect(r.icp <= *r.phase1_icp, cell + ": final above phase 1");
      if (!r.acceptance_trace.empty()) {
        ++improved;
        c.Expect(r.icp < *r.phase1_icp, cell + ": accepted plan without improvement");
        c.Expect(r.acceptance_trace.front() < *r.phase1_icp, cell + ": first acceptance not below phase 1");
      }
      for (std::size_t i = 1; i < r.acceptance_trace.size(); ++i) {
        c.Expect(r.acceptance_trace[i] < r.acceptance_trace[i - 1], cell + ": trace not strictly decreasing");
      }
      c.Expect(r.icp == IcpOf(r.points, cfg.dist), cell + ": reported ICP drifts from recomputation");
    }
  }
  return Finish(c, std::to_string(runs) + " runs, " + std::to_string(improved) + " improved in phase 2");
}

Outcome Determinism(const std::string& tmp) {
  Check c;
  const std::string two = Data("fixtures/two-route-domain.pddl") + " " + Data("fixtures/two-route-problem.pddl");
  const std::string zeno = Data("corpus/zeno-lite/domain.pddl") + " " + Data("corpus/zeno-lite/p02.pddl");
  const std::vector<std::string> commands{
      "solve " + zeno + " --seed 5 --noise 0.3",
      "solve " + zeno + " --seed 5 --format csv",
      "diverse " + two + " --d 0.2 --k 4 --seed 3",
      "diverse " + zeno + " --d 0.2 --k 4 --seed 3 --metric clink",
      "icpgen " + zeno + " --method sampling --k 5 --seed 9 --dist tri:0.8",
      "icpgen " + zeno + " --method icpseq --k 4 --seed 9",
      "icpgen " + zeno + " --method hybrid --k 5 --k0 2 --seed 9 --dist tri:0.2",
      "icpgen " + zeno + " --method random --k 4 --seed 9 --format csv",
      "eval --points " + Data("fixtures/frontier-points.json"),
      "eval --domain " + Data("fixtures/triad-domain.pddl") + " --problem " + Data("fixtures/triad-problem.pddl") +
          " " + Data("fixtures/triad-p1.json") + " " + Data("fixtures/triad-p2.json") + " " +
          Data("fixtures/triad-p3.json"),
      "bench " + Data("corpus") + " --methods sampling,hybrid --k 4 --k0 2 --seeds 1,2 --workers 2",
      "bench " + Data("corpus") + " --methods sampling,hybrid --k 4 --k0 2 --seeds 1 --format json",
  };
  std::size_t identical = 0;
  for (std::size_t i = 0; i < commands.size(); ++i) {
    const CliRun a = RunCli(commands[i], tmp + "/det-a-" + std::to_string(i));
    const CliRun b = RunCli(commands[i], tmp + "/det-b-" + std::to_string(i));
    const bool same = a.exit_code == b.exit_code && !a.out.empty() && DataPayload(a.out) == DataPayload(b.out);
    c.Expect(same, commands[i].substr(0, commands[i].find(' ')) + " #" + std::to_string(i));
    identical += same;
  }
  return Finish(c, std::to_string(identical) + "/" + std::to_string(commands.size()) +
                       " commands byte-identical (timing fields excluded)");
}

}  // namespace

int main() {
  const fs::path tmp = fs::temp_directory_path() / ("plansets-acceptance-" + std::to_string(::getpid()));
  fs::create_directories(tmp);
  Report(1, "frontier golden suite", FrontierGolden);
  Report(2, "triad golden suite", TriadGolden);
  Report(3, "closed-form ICP vs quadrature oracle", OracleEquivalence);
  Report(4, "property suites", Properties);
  Report(5, "diverse generation on the two-route fixture", [&] { return DiverseCli(tmp.string()); });
  Report(6, "greedy diverse vs random baseline", DirectionalBaseline);
  Report(7, "hybrid dominance over its sampling phase", HybridDominance);
  Report(8, "determinism of CLI payloads", [&] { return Determinism(tmp.string()); });
  fs::remove_all(tmp);
  std::printf("%d of 8 criteria failed\n", failed_criteria);
  return failed_criteria == 0 ? 0 : 1;
}
