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


#ifndef PLANSETS_BENCH_HPP_
#define PLANSETS_BENCH_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "plansets/genset.hpp"
#include "plansets/report.hpp"

namespace plansets {

// A corpus directory holds one subdirectory per domain: domain.pddl, an
// optional domain.durations.json and any number of problem .pddl files.
struct CorpusEntry {
  std::string domain;
  std::string problem;
  std::string domain_path;
  std::string problem_path;
  std::string durations_path;
};

std::vector<CorpusEntry> DiscoverCorpus(const std::string& dir);

// Method names: sampling, icpseq, hybrid, diverse, random.
PlanSetResult RunMethod(const std::string& method, const GroundProblem& problem, const GenConfig& cfg);
bool IsKnownMethod(const std::string& method);

struct BenchConfig {
  std::vector<std::string> methods{"sampling", "hybrid"};
  std::vector<WeightDistribution> dists{WeightDistribution::Uniform()};
  std::vector<std::uint64_t> seeds{1};
  GenConfig gen;
  std::size_t workers = 1;
};

struct BenchRow {
  std::string domain;
  std::string problem;
  std::string method;
  std::string dist;
  std::uint64_t seed = 0;
  std::string status;
  std::size_t plans = 0;
  std::optional<double> icp;
  std::optional<SetDistances> zeta;
  SpreadStats makespan;
  SpreadStats cost;
  std::optional<double> lch_contribution;
  std::string error;
  double runtime_seconds = 0.0;
  std::vector<TimeCostPoint> points;
};

// Percentage of the pooled hull credited to each method; a hull point shared by
// several methods credits all of them. Empty pools give nullopt.
std::vector<std::optional<double>> LchContribution(const std::vector<std::vector<TimeCostPoint>>& sets);

std::vector<BenchRow> RunBench(const std::vector<CorpusEntry>& corpus, const BenchConfig& cfg);

// Column order is fixed; runtime_seconds is always the last column.
std::string BenchCsvHeader();
std::string BenchRowsToCsv(const std::vector<BenchRow>& rows);

}  // namespace plansets

#endif  // PLANSETS_BENCH_HPP_
