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

#include "plansets/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <filesystem>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace plansets {
namespace {

namespace fs = std::filesystem;

struct CellKey {
  std::size_t entry;
  std::size_t dist;
  std::size_t seed;
};

std::string Optional(const std::optional<double>& value) { return value ? FormatNumber(*value) : ""; }

// Keeps CSV fields free of separators.
std::string Sanitize(std::string text) {
  std::replace(text.begin(), text.end(), ',', ';');
  std::replace(text.begin(), text.end(), '\n', ' ');
  return text;
}

}  // namespace

std::vector<CorpusEntry> DiscoverCorpus(const std::string& dir) {
  if (!fs::is_directory(dir)) throw std::runtime_error("corpus directory not found: " + dir);
  std::vector<fs::path> domains;
  for (const auto& e : fs::directory_iterator(dir)) {
    if (e.is_directory() && fs::exists(e.path() / "domain.pddl")) domains.push_back(e.path());
  }
  std::sort(domains.begin(), domains.end());
  std::vector<CorpusEntry> corpus;
  for (const auto& d : domains) {
    std::vector<fs::path> problems;
    for (const auto& e : fs::directory_iterator(d)) {
      if (e.path().extension() == ".pddl" && e.path().filename() != "domain.pddl") problems.push_back(e.path());
    }
    std::sort(problems.begin(), problems.end());
    const fs::path durations = d / "domain.durations.json";
    for (const auto& p : problems) {
      corpus.push_back({d.filename().string(), p.stem().string(), (d / "domain.pddl").string(), p.string(),
                        fs::exists(durations) ? durations.string() : ""});
    }
  }
  return corpus;
}

bool IsKnownMethod(const std::string& method) {
  return method == "sampling" || method == "icpseq" || method == "hybrid" || method == "diverse" ||
         method == "random";
}

PlanSetResult RunMethod(const std::string& method, const GroundProblem& problem, const GenConfig& cfg) {
  if (method == "sampling") return GenerateSampling(problem, cfg);
  if (method == "icpseq") return GenerateIcpSequential(problem, cfg);
  if (method == "hybrid") return GenerateHybrid(problem, cfg);
  if (method == "diverse") return GenerateDiverse(problem, cfg);
  if (method == "random") return GenerateRandomBaseline(problem, cfg);
  throw std::invalid_argument("unknown method: " + method);
}

std::vector<std::optional<double>> LchContribution(const std::vector<std::vector<TimeCostPoint>>& sets) {
  std::vector<TimeCostPoint> pool;
  for (const auto& s : sets) pool.insert(pool.end(), s.begin(), s.end());
  std::vector<std::optional<double>> out(sets.size());
  if (pool.empty()) return out;
  const HullResult hull = LowerConvexHull(std::span<const TimeCostPoint>(pool));
  for (std::size_t m = 0; m < sets.size(); ++m) {
    std::size_t credited = 0;
    for (const auto& h : hull.points) {
      if (std::find(sets[m].begin(), sets[m].end(), h) != sets[m].end()) ++credited;
    }
    out[m] = 100.0 * static_cast<double>(credited) / static_cast<double>(hull.points.size());
  }
  return out;
}

std::vector<BenchRow> RunBench(const std::vector<CorpusEntry>& corpus, const BenchConfig& cfg) {
  for (const auto& m : cfg.methods) {
    if (!IsKnownMethod(m)) throw std::invalid_argument("unknown method: " + m);
  }
  // Grid order: entry, distribution, seed, method.
  std::vector<CellKey> groups;
  for (std::size_t e = 0; e < corpus.size(); ++e) {
    for (std::size_t d = 0; d < cfg.dists.size(); ++d) {
      for (std::size_t s = 0; s < cfg.seeds.size(); ++s) groups.push_back({e, d, s});
    }
  }
  const std::size_t methods = cfg.methods.size();
  std::vector<BenchRow> rows(groups.size() * methods);

  auto run_cell = [&](std::size_t index) {
    const CellKey& key = groups[index / methods];
    const std::string& method = cfg.methods[index % methods];
    const CorpusEntry& entry = corpus[key.entry];
    BenchRow row;
    row.domain = entry.domain;
    row.problem = entry.problem;
    row.method = method;
    row.dist = cfg.dists[key.dist].ToString();
    row.seed = cfg.seeds[key.seed];
    const auto start = std::chrono::steady_clock::now();
    try {
      const GroundProblem problem = LoadProblemFiles(entry.domain_path, entry.problem_path, entry.durations_path);
      GenConfig gen = cfg.gen;
      gen.dist = cfg.dists[key.dist];
      // All methods of one cell group share the derived seed.
      gen.seed = DeriveSeed(row.seed, key.entry);
      const PlanSetResult result = RunMethod(method, problem, gen);
      row.status = StatusName(result.status);
      row.plans = result.plans.size();
      row.points = result.points;
      if (!result.plans.empty()) row.icp = result.icp;
      auto it = result.distances.find(gen.metric);
      if (it != result.distances.end()) row.zeta = it->second;
      std::vector<double> times;
      std::vector<double> costs;
      for (const auto& p : result.points) {
        times.push_back(ToDouble(p.time));
        costs.push_back(ToDouble(p.cost));
      }
      row.makespan = Spread(times);
      row.cost = Spread(costs);
    } catch (const std::exception& ex) {
      row.status = "error";
      row.error = Sanitize(ex.what());
      row.makespan = row.cost = Spread(std::span<const double>());
    }
    row.runtime_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    rows[index] = std::move(row);
  };

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < rows.size(); i = next++) run_cell(i);
  };
  const std::size_t workers = std::max<std::size_t>(1, std::min(cfg.workers, rows.size()));
  std::vector<std::thread> pool;
  for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  for (std::size_t g = 0; g < groups.size(); ++g) {
    std::vector<std::vector<TimeCostPoint>> sets;
    for (std::size_t m = 0; m < methods; ++m) sets.push_back(rows[g * methods + m].points);
    const auto shares = LchContribution(sets);
    for (std::size_t m = 0; m < methods; ++m) rows[g * methods + m].lch_contribution = shares[m];
  }
  return rows;
}

std::string BenchCsvHeader() {
  return "domain,problem,method,dist,seed,status,plans,icp,zeta_min,zeta_avg,zeta_max,makespan_median,"
         "makespan_stddev,cost_median,cost_stddev,lch_contribution,error,runtime_seconds";
}

std::string BenchRowsToCsv(const std::vector<BenchRow>& rows) {
  std::ostringstream out;
  out << BenchCsvHeader() << '\n';
  for (const auto& r : rows) {
    out << r.domain << ',' << r.problem << ',' << r.method << ',' << r.dist << ',' << r.seed << ',' << r.status
        << ',' << r.plans << ',' << Optional(r.icp) << ',';
    if (r.zeta) {
      out << FormatNumber(ToDouble(r.zeta->min)) << ',' << FormatNumber(ToDouble(r.zeta->avg)) << ','
          << FormatNumber(ToDouble(r.zeta->max)) << ',';
    } else {
      out << ",,,";
    }
    out << FormatNumber(r.makespan.median) << ',' << FormatNumber(r.makespan.stddev) << ','
        << FormatNumber(r.cost.median) << ',' << FormatNumber(r.cost.stddev) << ','
        << Optional(r.lch_contribution) << ',' << r.error << ',' << FormatNumber(r.runtime_seconds) << '\n';
  }
  return out.str();
}

}  // namespace plansets
