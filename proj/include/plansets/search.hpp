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

#ifndef PLANSETS_SEARCH_HPP_
#define PLANSETS_SEARCH_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "plansets/distance.hpp"
#include "plansets/icp.hpp"
#include "plansets/plan.hpp"

namespace plansets {

struct SearchConfig {
  // Weights of the execution-cost (or ICP), temporal, search-cost and
  // diversity terms. Normalized by their sum before use.
  double alpha_exec = 1.0;
  double alpha_time = 0.0;
  double alpha_search = 0.5;
  double alpha_diversity = 1.0;
  // When set, the execution-cost term becomes V(p, w) = w*time + (1-w)*cost.
  std::optional<double> objective_w;
  // Probability of expanding a random open node instead of the best one.
  double noise = 0.0;
  // With noise > 0, restart from the root after this many expansions
  // without a solution (0 = never).
  std::size_t restart_after = 0;
  std::uint64_t seed = 1;
  std::size_t node_budget = 20000;
  double time_budget_seconds = 60.0;
  // Keep a hash of every expanded node (for reproducibility checks).
  bool record_trace = false;

  void Validate() const;
};

void to_json(nlohmann::json& j, const SearchConfig& cfg);
// Missing keys keep their defaults.
void from_json(const nlohmann::json& j, SearchConfig& cfg);

// Reference-plan bias for diverse generation.
struct DiverseTarget {
  Plan reference;
  PlanFeatures reference_features;
  Rational d;
  DistanceMetric metric = DistanceMetric::kAction;
  std::optional<int> gamma;
  // Further plans a solution must also be d-distant from (and
  // gamma-balanced against, when gamma is set).
  std::vector<PlanFeatures> constraints;
  // n and k of the alpha_D schedule.
  std::size_t plans_generated = 1;
  std::size_t k = 1;

  bool Satisfied(const PlanFeatures& candidate) const;
};

// Plan-set context for ICP-sensitive search.
struct IcpTarget {
  std::vector<TimeCostPoint> plan_set;
  WeightDistribution dist = WeightDistribution::Uniform();
  // Solutions must lower the set's ICP by more than this.
  double accept_epsilon = 1e-9;
};

struct EvaluationContext {
  enum class Mode { kPlain, kDiverse, kIcpEstimate };
  Mode mode = Mode::kPlain;
  std::optional<DiverseTarget> diverse;
  std::optional<IcpTarget> icp;

  static EvaluationContext Plain() { return {}; }
  static EvaluationContext Diverse(const GroundProblem& problem, Plan reference, Rational d,
                                   DistanceMetric metric = DistanceMetric::kAction,
                                   std::optional<int> gamma = std::nullopt, std::size_t plans_generated = 1,
                                   std::size_t k = 1);
  static EvaluationContext IcpEstimate(std::vector<TimeCostPoint> plan_set, WeightDistribution dist);
};

// A neighbourhood element: the current partial plan extended by one
// action, together with its relaxed completion.
struct Candidate {
  std::vector<ActionId> prior_actions;  // distinct actions before the new one, sorted
  std::optional<ActionId> new_action;
  std::vector<ActionId> relaxed_actions;  // sorted
  double est_cost = 0.0;                  // prefix cost + relaxed cost
  double est_time = 0.0;                  // estimated makespan of prefix + relaxation
};

struct EvalTerms {
  double quality = 0.0;    // cost, V(p, w), or ICP(P ∪ {p_R})
  double temporal = 0.0;   // estimated makespan
  double search = 0.0;     // relaxed plan size
  double diversity = 0.0;  // |(p0 - p) ∩ p_R|
  double alpha_diversity = 0.0;  // schedule factor in [0, 1]
};

EvalTerms EvaluateTerms(const Candidate& candidate, const EvaluationContext& ctx, const SearchConfig& cfg);

// min(1, (d / max(current_distance, 0.01)) * plans_generated / k).
double DiversityWeight(double d, double current_distance, std::size_t plans_generated, std::size_t k);

// Running maxima of the raw terms; scores divide each term by its maximum.
class TermScales {
 public:
  // Returns true if any maximum grew.
  bool Observe(const EvalTerms& terms);
  double Score(const EvalTerms& terms, const SearchConfig& cfg) const;

 private:
  std::array<double, 4> max_{0.0, 0.0, 0.0, 0.0};
};

// Observe + Score.
double Evaluate(const Candidate& candidate, const EvaluationContext& ctx, const SearchConfig& cfg,
                TermScales& scales);

struct SolveResult {
  enum class Status { kSolved, kBudgetExhausted, kUnreachable };
  Status status = Status::kUnreachable;
  std::optional<Plan> plan;
  std::size_t expanded = 0;
  std::size_t generated = 0;
  std::size_t restarts = 0;
  std::vector<std::uint64_t> trace;
};

std::string StatusName(SolveResult::Status status);

// Greedy best-first forward search ordered by the evaluation function.
// Deterministic for a fixed (problem, ctx, cfg); randomness only enters
// through cfg.noise. In diverse mode only plans meeting the distance
// target count as solutions; in ICP mode only plans that lower the set's
// ICP do. `start_prefix` (applicable from the initial state) seeds a
// second start node next to the empty plan.
SolveResult Solve(const GroundProblem& problem, const EvaluationContext& ctx, const SearchConfig& cfg,
                  const std::vector<ActionId>& start_prefix = {});

}  // namespace plansets

#endif  // PLANSETS_SEARCH_HPP_
