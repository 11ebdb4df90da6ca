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


#ifndef PLANSETS_REPORT_HPP_
#define PLANSETS_REPORT_HPP_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "plansets/genset.hpp"

namespace plansets {

// Median of an even count is the mean of the two central values.
double Median(std::vector<double> values);
// Population standard deviation; 0 for fewer than two values.
double PopulationStddev(std::span<const double> values);

struct SpreadStats {
  double median = 0.0;
  double stddev = 0.0;
};

SpreadStats Spread(std::span<const double> values);

struct EvalReport {
  std::vector<TimeCostPoint> points;
  // Empty when plans were not available or fewer than two were given.
  std::vector<std::pair<DistanceMetric, std::optional<SetDistances>>> distances;
  std::vector<std::size_t> pareto;
  HullResult hull;
  double icp = 0.0;
  WeightDistribution dist = WeightDistribution::Uniform();
  SpreadStats makespan;
  SpreadStats cost;
};

// Report over full plans; set distances are computed for every metric.
EvalReport EvaluatePlans(const GroundProblem& problem, std::span<const Plan> plans, const WeightDistribution& dist,
                         std::span<const DistanceMetric> metrics);

// Report over precomputed points only; set distances are reported as null.
EvalReport EvaluatePoints(std::span<const TimeCostPoint> points, const WeightDistribution& dist);

nlohmann::json EvalReportToJson(const EvalReport& report);
std::string EvalReportToCsv(const EvalReport& report);

// Fixed formatting shared by every CSV writer.
std::string FormatNumber(double value);

}  // namespace plansets

#endif  // PLANSETS_REPORT_HPP_
