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

#ifndef PLANSETS_GENSET_HPP_
#define PLANSETS_GENSET_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "plansets/distance.hpp"
#include "plansets/icp.hpp"
#include "plansets/search.hpp"

namespace plansets {

struct GenConfig {
  std::size_t k = 4;
  // Diversity threshold in (0, 1].
  Rational d{1, 2};
  DistanceMetric metric = DistanceMetric::kAction;
  std::optional<int> gamma;
  WeightDistribution dist = WeightDistribution::Uniform();
  // Number of sampled weights seeding the hybrid method; 0 < k0 < k.
  std::size_t k0 = 3;
  double time_bound_seconds = 600.0;
  SearchConfig search;
  std::uint64_t seed = 1;
  // Consecutive searches without progress before a strategy gives up.
  std::size_t stall_limit = 5;
  // Noise of the independent searches of the random baseline.
  double baseline_noise = 0.5;
  // Parallel searches for the sampling phase.
  std::size_t workers = 1;

  void ValidateDiverse() const;
  void ValidateHybrid() const;
};

struct SetDistances {
  Rational min;
  Rational avg;
  Rational max;
};

struct PlanSetResult {
  enum class Status { kComplete, kIncomplete, kFailed };
  Status status = Status::kFailed;
  std::string method;
  std::uint64_t seed = 0;
  WeightDistribution dist = WeightDistribution::Uniform();
  std::vector<Plan> plans;
  std::vector<TimeCostPoint> points;
  // Set quality under every metric; absent with fewer than two plans.
  std::map<DistanceMetric, SetDistances> distances;
  double icp = 0.0;
  // ICP after each plan accepted by the ICP-driven phase.
  std::vector<double> acceptance_trace;
  std::optional<double> phase1_icp;
  std::size_t phase1_plans = 0;
  std::string stop_reason;
  std::size_t searches = 0;
  std::size_t nodes_expanded = 0;
  double wall_seconds = 0.0;
};

std::string StatusName(PlanSetResult::Status status);

// Fills points, distances and icp from plans and dist.
void ComputeSetMetrics(const GroundProblem& problem, PlanSetResult& result);

// Greedy dDISTANTkSET: repeated diversity-biased searches around the plan
// with the most d-distant archive partners; the reported set grows by each
// new plan that is d-distant from all plans reported so far.
PlanSetResult GenerateDiverse(const GroundProblem& problem, const GenConfig& cfg);

// k independent noisy searches without any distance requirement.
PlanSetResult GenerateRandomBaseline(const GroundProblem& problem, const GenConfig& cfg);

// One search per sampled weight; duplicates and dominated plans dropped.
PlanSetResult GenerateSampling(const GroundProblem& problem, const GenConfig& cfg);
PlanSetResult GenerateSamplingWithWeights(const GroundProblem& problem, const GenConfig& cfg,
                                          const std::vector<double>& weights);

// Grows `seed_set` with plans that strictly lower its ICP.
PlanSetResult GenerateIcpSequential(const GroundProblem& problem, const GenConfig& cfg,
                                    const PlanSetResult* seed_set = nullptr);

// Sampling with k0 weights, then ICP-sequential up to k plans.
PlanSetResult GenerateHybrid(const GroundProblem& problem, const GenConfig& cfg);

// Deterministic per-stream seeds from one master seed.
std::uint64_t DeriveSeed(std::uint64_t master, std::uint64_t stream);

// Everything except "timing" is a pure function of the inputs and seeds.
nlohmann::json PlanSetResultToJson(const GroundProblem& problem, const PlanSetResult& result);

}  // namespace plansets

#endif  // PLANSETS_GENSET_HPP_
