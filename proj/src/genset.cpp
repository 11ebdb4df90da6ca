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

#include "plansets/genset.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <future>
#include <limits>
#include <random>
#include <stdexcept>

namespace plansets {
namespace {

using Clock = std::chrono::steady_clock;

constexpr std::uint64_t kStreamDiverse = 0x100000;
constexpr std::uint64_t kStreamBaseline = 0x200000;
constexpr std::uint64_t kStreamSampling = 0x300000;
constexpr std::uint64_t kStreamIcp = 0x400000;
constexpr std::uint64_t kStreamWeights = 0x500000;

class Deadline {
 public:
  explicit Deadline(double seconds) : start_(Clock::now()), seconds_(seconds) {}
  double Elapsed() const { return std::chrono::duration<double>(Clock::now() - start_).count(); }
  double Remaining() const { return seconds_ - Elapsed(); }
  bool Expired() const { return Remaining() <= 0; }

 private:
  Clock::time_point start_;
  double seconds_;
};

SearchConfig SearchFor(const GenConfig& cfg, std::uint64_t seed, const Deadline& deadline) {
  SearchConfig search = cfg.search;
  search.seed = seed;
  search.time_budget_seconds = std::max(1e-3, std::min(search.time_budget_seconds, deadline.Remaining()));
  return search;
}

bool HasPlan(const std::vector<Plan>& plans, const Plan& plan) {
  return std::any_of(plans.begin(), plans.end(), [&](const Plan& p) { return SameSteps(p, plan); });
}

std::vector<TimeCostPoint> PointsOf(const GroundProblem& problem, const std::vector<Plan>& plans) {
  std::vector<TimeCostPoint> points;
  for (const auto& p : plans) points.push_back(Project(problem, p));
  return points;
}

nlohmann::json DoubleOrNull(double value) {
  if (!std::isfinite(value)) return nullptr;
  return value;
}

}  // namespace

void GenConfig::ValidateDiverse() const {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (!(d > 0 && d <= 1)) throw std::invalid_argument("d must lie in (0, 1]");
  if (gamma && *gamma < 1) throw std::invalid_argument("gamma must be >= 1");
}

void GenConfig::ValidateHybrid() const {
  if (!(k0 > 0 && k0 < k)) throw std::invalid_argument("hybrid requires 0 < k0 < k");
}

std::uint64_t DeriveSeed(std::uint64_t master, std::uint64_t stream) {
  // splitmix64 finalizer over the combined value.
  std::uint64_t z = master + 0x9E3779B97F4A7C15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::string StatusName(PlanSetResult::Status status) {
  switch (status) {
    case PlanSetResult::Status::kComplete:
      return "complete";
    case PlanSetResult::Status::kIncomplete:
      return "incomplete";
    case PlanSetResult::Status::kFailed:
      return "failed";
  }
  return "?";
}

void ComputeSetMetrics(const GroundProblem& problem, PlanSetResult& result) {
  result.points = PointsOf(problem, result.plans);
  result.distances.clear();
  if (result.plans.size() >= 2) {
    std::vector<PlanFeatures> features;
    for (const auto& p : result.plans) features.push_back(ExtractFeatures(problem, p));
    for (DistanceMetric m : {DistanceMetric::kAction, DistanceMetric::kCausalLink, DistanceMetric::kStatePad,
                             DistanceMetric::kStateHold}) {
      result.distances[m] = {SetQuality(features, m, Aggregate::kMin), SetQuality(features, m, Aggregate::kAvg),
                             SetQuality(features, m, Aggregate::kMax)};
    }
  }
  result.icp = Icp(std::span<const TimeCostPoint>(result.points), result.dist);
}

PlanSetResult GenerateDiverse(const GroundProblem& problem, const GenConfig& cfg) {
  cfg.ValidateDiverse();
  const Deadline deadline(cfg.time_bound_seconds);
  PlanSetResult result;
  result.method = "diverse";
  result.seed = cfg.seed;
  result.dist = cfg.dist;

  std::vector<Plan> archive;
  std::vector<PlanFeatures> features;
  std::vector<std::size_t> reported;
  std::size_t generated = 0;
  std::size_t stall = 0;
  std::mt19937_64 rng(DeriveSeed(cfg.seed, kStreamDiverse));

  auto distant = [&](std::size_t i, std::size_t j) {
    if (Distance(cfg.metric, features[i], features[j]) < cfg.d) return false;
    return !cfg.gamma || GammaBalanced(features[i], features[j], cfg.d, *cfg.gamma);
  };

  result.stop_reason = "k-reached";
  while (reported.size() < cfg.k) {
    if (deadline.Expired()) {
      result.stop_reason = "time-bound";
      break;
    }
    if (stall >= cfg.stall_limit) {
      result.stop_reason = "stalled";
      break;
    }
    EvaluationContext ctx = EvaluationContext::Plain();
    std::vector<ActionId> prefix;
    if (!archive.empty()) {
      // Reference: the archive plan with the most d-distant partners.
      std::size_t best = 0;
      std::size_t best_count = 0;
      std::vector<std::vector<std::size_t>> partners(archive.size());
      for (std::size_t i = 0; i < archive.size(); ++i) {
        for (std::size_t j = 0; j < archive.size(); ++j) {
          if (i != j && distant(i, j)) partners[i].push_back(j);
        }
        if (partners[i].size() > best_count) {
          best = i;
          best_count = partners[i].size();
        }
      }
      std::vector<std::size_t> pool = partners[best];
      pool.push_back(best);
      const Plan& start = archive[pool[static_cast<std::size_t>(UnitDraw(rng) * static_cast<double>(pool.size()))]];
      for (ActionId a : start.steps) {
        if (UnitDraw(rng) >= 0.5) prefix.push_back(a);
      }
      ctx = EvaluationContext::Diverse(problem, archive[best], cfg.d, cfg.metric, cfg.gamma, generated, cfg.k);
      for (std::size_t r : reported) {
        if (r != best) ctx.diverse->constraints.push_back(features[r]);
      }
    }
    const SearchConfig search = SearchFor(cfg, DeriveSeed(cfg.seed, kStreamDiverse + result.searches), deadline);
    const SolveResult solved = Solve(problem, ctx, search, prefix);
    ++result.searches;
    result.nodes_expanded += solved.expanded;
    if (!solved.plan) {
      ++stall;
      continue;
    }
    ++generated;
    if (HasPlan(archive, *solved.plan)) {
      ++stall;
      continue;
    }
    Plan plan = *solved.plan;
    plan.provenance = "diverse";
    archive.push_back(plan);
    features.push_back(ExtractFeatures(problem, plan));
    const std::size_t added = archive.size() - 1;
    if (std::all_of(reported.begin(), reported.end(), [&](std::size_t r) { return distant(added, r); })) {
      reported.push_back(added);
      stall = 0;
    } else {
      ++stall;
    }
  }
  for (std::size_t r : reported) result.plans.push_back(archive[r]);
  result.status = result.plans.empty()             ? PlanSetResult::Status::kFailed
                  : result.plans.size() == cfg.k ? PlanSetResult::Status::kComplete
                                                   : PlanSetResult::Status::kIncomplete;
  ComputeSetMetrics(problem, result);
  result.wall_seconds = deadline.Elapsed();
  return result;
}

PlanSetResult GenerateRandomBaseline(const GroundProblem& problem, const GenConfig& cfg) {
  if (cfg.k < 1) throw std::invalid_argument("k must be >= 1");
  const Deadline deadline(cfg.time_bound_seconds);
  PlanSetResult result;
  result.method = "random";
  result.seed = cfg.seed;
  result.dist = cfg.dist;
  for (std::size_t i = 0; i < cfg.k && !deadline.Expired(); ++i) {
    SearchConfig search = SearchFor(cfg, DeriveSeed(cfg.seed, kStreamBaseline + i), deadline);
    search.noise = cfg.baseline_noise;
    const SolveResult solved = Solve(problem, EvaluationContext::Plain(), search);
    ++result.searches;
    result.nodes_expanded += solved.expanded;
    if (solved.plan && !HasPlan(result.plans, *solved.plan)) {
      Plan plan = *solved.plan;
      plan.provenance = "random";
      result.plans.push_back(std::move(plan));
    }
  }
  result.status = result.plans.empty() ? PlanSetResult::Status::kFailed : PlanSetResult::Status::kComplete;
  result.stop_reason = result.searches == cfg.k ? "k-searches" : "time-bound";
  ComputeSetMetrics(problem, result);
  result.wall_seconds = deadline.Elapsed();
  return result;
}

PlanSetResult GenerateSamplingWithWeights(const GroundProblem& problem, const GenConfig& cfg,
                                          const std::vector<double>& weights) {
  const Deadline deadline(cfg.time_bound_seconds);
  PlanSetResult result;
  result.method = "sampling";
  result.seed = cfg.seed;
  result.dist = cfg.dist;

  auto run = [&](std::size_t i) {
    SearchConfig search = SearchFor(cfg, DeriveSeed(cfg.seed, kStreamSampling + i), deadline);
    search.objective_w = weights[i];
    return Solve(problem, EvaluationContext::Plain(), search);
  };
  std::vector<SolveResult> solved(weights.size());
  if (cfg.workers > 1) {
    // Independent searches; results are gathered in weight order.
    for (std::size_t begin = 0; begin < weights.size(); begin += cfg.workers) {
      std::vector<std::future<SolveResult>> batch;
      for (std::size_t i = begin; i < std::min(weights.size(), begin + cfg.workers); ++i) {
        batch.push_back(std::async(std::launch::async, run, i));
      }
      for (std::size_t i = 0; i < batch.size(); ++i) solved[begin + i] = batch[i].get();
    }
  } else {
    for (std::size_t i = 0; i < weights.size(); ++i) solved[i] = run(i);
  }

  std::vector<Plan> found;
  for (std::size_t i = 0; i < solved.size(); ++i) {
    ++result.searches;
    result.nodes_expanded += solved[i].expanded;
    if (solved[i].plan && !HasPlan(found, *solved[i].plan)) {
      Plan plan = *solved[i].plan;
      plan.provenance = "sampling:w=" + std::to_string(weights[i]);
      found.push_back(std::move(plan));
    }
  }
  const std::vector<TimeCostPoint> points = PointsOf(problem, found);
  std::vector<std::size_t> keep = ParetoIndices(std::span<const TimeCostPoint>(points));
  std::sort(keep.begin(), keep.end());
  for (std::size_t i : keep) result.plans.push_back(found[i]);
  result.status = result.plans.empty() ? PlanSetResult::Status::kFailed : PlanSetResult::Status::kComplete;
  result.stop_reason = "k-searches";
  ComputeSetMetrics(problem, result);
  result.wall_seconds = deadline.Elapsed();
  return result;
}

PlanSetResult GenerateSampling(const GroundProblem& problem, const GenConfig& cfg) {
  if (cfg.k < 1) throw std::invalid_argument("k must be >= 1");
  std::mt19937_64 rng(DeriveSeed(cfg.seed, kStreamWeights));
  std::vector<double> weights;
  for (std::size_t i = 0; i < cfg.k; ++i) weights.push_back(SampleWeight(cfg.dist, rng));
  return GenerateSamplingWithWeights(problem, cfg, weights);
}

PlanSetResult GenerateIcpSequential(const GroundProblem& problem, const GenConfig& cfg,
                                    const PlanSetResult* seed_set) {
  if (cfg.k < 1) throw std::invalid_argument("k must be >= 1");
  const Deadline deadline(cfg.time_bound_seconds);
  PlanSetResult result;
  result.method = "icp-sequential";
  result.seed = cfg.seed;
  result.dist = cfg.dist;
  if (seed_set) {
    for (const auto& p : seed_set->plans) {
      if (!HasPlan(result.plans, p)) result.plans.push_back(p);
    }
  }
  std::vector<TimeCostPoint> points = PointsOf(problem, result.plans);
  double current = Icp(std::span<const TimeCostPoint>(points), cfg.dist);
  std::size_t stall = 0;
  std::size_t iteration = 0;
  result.stop_reason = "k-reached";
  while (result.plans.size() < cfg.k) {
    if (deadline.Expired()) {
      result.stop_reason = "time-bound";
      break;
    }
    if (stall >= cfg.stall_limit) {
      result.stop_reason = "stalled";
      break;
    }
    const SearchConfig search = SearchFor(cfg, DeriveSeed(cfg.seed, kStreamIcp + iteration++), deadline);
    const SolveResult solved = Solve(problem, EvaluationContext::IcpEstimate(points, cfg.dist), search);
    ++result.searches;
    result.nodes_expanded += solved.expanded;
    if (solved.status == SolveResult::Status::kUnreachable) {
      // The whole space was searched: no plan lowers the ICP.
      result.stop_reason = "exhausted";
      break;
    }
    bool accepted = false;
    if (solved.plan && !HasPlan(result.plans, *solved.plan)) {
      std::vector<TimeCostPoint> extended = points;
      extended.push_back(Project(problem, *solved.plan));
      const double next = Icp(std::span<const TimeCostPoint>(extended), cfg.dist);
      if (std::isinf(current) || next < current - 1e-9) {
        Plan plan = *solved.plan;
        plan.provenance = "icp-sequential";
        result.plans.push_back(std::move(plan));
        points = std::move(extended);
        current = next;
        result.acceptance_trace.push_back(current);
        accepted = true;
      }
    }
    if (accepted) {
      stall = 0;
    } else if (cfg.search.noise == 0) {
      // Without noise a retry repeats the same search.
      result.stop_reason = "stalled";
      break;
    } else {
      ++stall;
    }
  }
  result.status = result.plans.empty() ? PlanSetResult::Status::kFailed : PlanSetResult::Status::kComplete;
  ComputeSetMetrics(problem, result);
  result.wall_seconds = deadline.Elapsed();
  return result;
}

PlanSetResult GenerateHybrid(const GroundProblem& problem, const GenConfig& cfg) {
  cfg.ValidateHybrid();
  const Deadline deadline(cfg.time_bound_seconds);
  GenConfig phase1_cfg = cfg;
  phase1_cfg.k = cfg.k0;
  const PlanSetResult phase1 = GenerateSampling(problem, phase1_cfg);
  if (phase1.plans.empty()) {
    PlanSetResult failed = phase1;
    failed.method = "hybrid";
    failed.stop_reason = "phase1-failed";
    failed.phase1_icp = phase1.icp;
    return failed;
  }
  GenConfig phase2_cfg = cfg;
  phase2_cfg.time_bound_seconds = std::max(0.0, deadline.Remaining());
  PlanSetResult result = GenerateIcpSequential(problem, phase2_cfg, &phase1);
  result.method = "hybrid";
  result.phase1_icp = phase1.icp;
  result.phase1_plans = phase1.plans.size();
  result.searches += phase1.searches;
  result.nodes_expanded += phase1.nodes_expanded;
  result.wall_seconds = deadline.Elapsed();
  return result;
}

nlohmann::json PlanSetResultToJson(const GroundProblem& problem, const PlanSetResult& result) {
  nlohmann::json plans = nlohmann::json::array();
  for (std::size_t i = 0; i < result.plans.size(); ++i) {
    const Plan& p = result.plans[i];
    plans.push_back({{"steps", StepNames(problem, p)},
                     {"time", RationalToJson(result.points[i].time)},
                     {"cost", RationalToJson(result.points[i].cost)},
                     {"provenance", p.provenance},
                     {"seed", p.seed}});
  }
  nlohmann::json distances = nlohmann::json::object();
  for (DistanceMetric m : {DistanceMetric::kAction, DistanceMetric::kCausalLink, DistanceMetric::kStatePad,
                           DistanceMetric::kStateHold}) {
    auto it = result.distances.find(m);
    if (it == result.distances.end()) {
      distances[MetricName(m)] = nullptr;
    } else {
      distances[MetricName(m)] = {{"min", ToDouble(it->second.min)},
                                  {"avg", ToDouble(it->second.avg)},
                                  {"max", ToDouble(it->second.max)}};
    }
  }
  const HullResult hull = LowerConvexHull(std::span<const TimeCostPoint>(result.points));
  nlohmann::json breakpoints = nlohmann::json::array();
  for (const auto& b : hull.breakpoints) breakpoints.push_back(ToDouble(b));
  nlohmann::json out = {
      {"method", result.method},
      {"status", StatusName(result.status)},
      {"stop_reason", result.stop_reason},
      {"seed", result.seed},
      {"dist", result.dist.ToString()},
      {"plans", std::move(plans)},
      {"distances", std::move(distances)},
      {"icp", DoubleOrNull(result.icp)},
      {"pareto", ParetoIndices(std::span<const TimeCostPoint>(result.points))},
      {"hull", {{"plans", hull.indices}, {"breakpoints", std::move(breakpoints)}}},
      {"acceptance_trace", result.acceptance_trace},
      {"stats", {{"searches", result.searches}, {"nodes_expanded", result.nodes_expanded}}},
      {"timing", {{"wall_seconds", result.wall_seconds}}},
  };
  if (result.phase1_icp) {
    out["phase1"] = {{"icp", DoubleOrNull(*result.phase1_icp)}, {"plans", result.phase1_plans}};
  }
  return out;
}

}  // namespace plansets
