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

#include "plansets/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace plansets {
namespace {

std::vector<DistanceMetric> AllMetrics() {
  return {DistanceMetric::kAction, DistanceMetric::kCausalLink, DistanceMetric::kStatePad,
          DistanceMetric::kStateHold};
}

void FillPointStats(EvalReport& report) {
  std::vector<double> times;
  std::vector<double> costs;
  for (const auto& p : report.points) {
    times.push_back(ToDouble(p.time));
    costs.push_back(ToDouble(p.cost));
  }
  report.makespan = Spread(times);
  report.cost = Spread(costs);
  report.pareto = ParetoIndices(std::span<const TimeCostPoint>(report.points));
  report.hull = LowerConvexHull(std::span<const TimeCostPoint>(report.points));
  report.icp = Icp(report.hull, report.dist);
}

nlohmann::json Nullable(double value) {
  if (!std::isfinite(value)) return nullptr;
  return value;
}

}  // namespace

double Median(std::vector<double> values) {
  if (values.empty()) return std::nan("");
  std::sort(values.begin(), values.end());
  const std::size_t n = values.size();
  if (n % 2 == 1) return values[n / 2];
  return (values[n / 2 - 1] + values[n / 2]) / 2;
}

double PopulationStddev(std::span<const double> values) {
  if (values.empty()) return std::nan("");
  double mean = 0;
  for (double v : values) mean += v;
  mean /= static_cast<double>(values.size());
  double sq = 0;
  for (double v : values) sq += (v - mean) * (v - mean);
  return std::sqrt(sq / static_cast<double>(values.size()));
}

SpreadStats Spread(std::span<const double> values) {
  return {Median(std::vector<double>(values.begin(), values.end())), PopulationStddev(values)};
}

EvalReport EvaluatePlans(const GroundProblem& problem, std::span<const Plan> plans, const WeightDistribution& dist,
                         std::span<const DistanceMetric> metrics) {
  EvalReport report;
  report.dist = dist;
  std::vector<PlanFeatures> features;
  for (const auto& p : plans) {
    report.points.push_back(Project(problem, p));
    features.push_back(ExtractFeatures(problem, p));
  }
  for (DistanceMetric m : metrics) {
    if (features.size() < 2) {
      report.distances.emplace_back(m, std::nullopt);
    } else {
      report.distances.emplace_back(m, SetDistances{SetQuality(features, m, Aggregate::kMin),
                                                    SetQuality(features, m, Aggregate::kAvg),
                                                    SetQuality(features, m, Aggregate::kMax)});
    }
  }
  FillPointStats(report);
  return report;
}

EvalReport EvaluatePoints(std::span<const TimeCostPoint> points, const WeightDistribution& dist) {
  EvalReport report;
  report.dist = dist;
  report.points.assign(points.begin(), points.end());
  for (DistanceMetric m : AllMetrics()) report.distances.emplace_back(m, std::nullopt);
  FillPointStats(report);
  return report;
}

nlohmann::json EvalReportToJson(const EvalReport& report) {
  nlohmann::json points = nlohmann::json::array();
  for (const auto& p : report.points) {
    points.push_back({{"time", RationalToJson(p.time)}, {"cost", RationalToJson(p.cost)}});
  }
  nlohmann::json distances = nlohmann::json::object();
  for (const auto& [metric, value] : report.distances) {
    if (!value) {
      distances[MetricName(metric)] = nullptr;
    } else {
      distances[MetricName(metric)] = {
          {"min", ToDouble(value->min)}, {"avg", ToDouble(value->avg)}, {"max", ToDouble(value->max)}};
    }
  }
  nlohmann::json breakpoints = nlohmann::json::array();
  for (const auto& b : report.hull.breakpoints) breakpoints.push_back(ToDouble(b));
  return {
      {"dist", report.dist.ToString()},
      {"points", std::move(points)},
      {"distances", std::move(distances)},
      {"pareto", report.pareto},
      {"hull", {{"plans", report.hull.indices}, {"breakpoints", std::move(breakpoints)}}},
      {"icp", Nullable(report.icp)},
      {"makespan", {{"median", Nullable(report.makespan.median)}, {"stddev", Nullable(report.makespan.stddev)}}},
      {"cost", {{"median", Nullable(report.cost.median)}, {"stddev", Nullable(report.cost.stddev)}}},
  };
}

std::string EvalReportToCsv(const EvalReport& report) {
  std::ostringstream out;
  out << "index,time,cost,pareto,hull\n";
  for (std::size_t i = 0; i < report.points.size(); ++i) {
    const bool pareto = std::find(report.pareto.begin(), report.pareto.end(), i) != report.pareto.end();
    const bool hull = std::find(report.hull.indices.begin(), report.hull.indices.end(), i) !=
                      report.hull.indices.end();
    out << i << ',' << FormatNumber(ToDouble(report.points[i].time)) << ','
        << FormatNumber(ToDouble(report.points[i].cost)) << ',' << (pareto ? 1 : 0) << ',' << (hull ? 1 : 0)
        << '\n';
  }
  return out.str();
}

std::string FormatNumber(double value) {
  if (!std::isfinite(value)) return "";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", value);
  return buf;
}

}  // namespace plansets
