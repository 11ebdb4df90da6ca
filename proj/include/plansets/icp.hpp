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

#ifndef PLANSETS_ICP_HPP_
#define PLANSETS_ICP_HPP_

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "plansets/time_cost.hpp"

namespace plansets {

// Density over the makespan weight w in V(p, w) = w*time + (1-w)*cost.
class WeightDistribution {
 public:
  enum class Kind { kUniform, kTriangular };

  static WeightDistribution Uniform() { return WeightDistribution(Kind::kUniform, 0.5); }
  // Triangular on [0, 1] peaking at `mode`, which must lie in (0, 1).
  static WeightDistribution Triangular(double mode);
  // "uniform" or "tri:<mode>".
  static WeightDistribution Parse(std::string_view spec);

  Kind kind() const { return kind_; }
  double mode() const { return mode_; }
  double Density(double w) const;
  double Mean() const;
  // Inverse CDF.
  double Quantile(double u) const;
  std::string ToString() const;

  bool operator==(const WeightDistribution&) const = default;

 private:
  WeightDistribution(Kind kind, double mode) : kind_(kind), mode_(mode) {}
  Kind kind_;
  double mode_;
};

inline double Value(const TimeCostEstimate& p, double w) { return w * p.time + (1 - w) * p.cost; }
inline Rational Value(const TimeCostPoint& p, const Rational& w) { return w * p.time + (1 - w) * p.cost; }

// Indices of the non-dominated points, ordered by increasing time. Of a
// group of identical points only the first index survives.
template <typename Scalar>
std::vector<std::size_t> ParetoIndices(std::span<const BasicTimeCost<Scalar>> points);

std::vector<TimeCostPoint> ParetoFilter(std::span<const TimeCostPoint> points);

// Lower convex hull of a point set, i.e. the points that uniquely minimize
// V(., w) on some interval of w.
template <typename Scalar>
struct BasicHull {
  // Indices into the input, ordered by increasing time.
  std::vector<std::size_t> indices;
  std::vector<BasicTimeCost<Scalar>> points;
  // 0 = w_0 < w_1 < ... < w_k = 1.
  std::vector<Scalar> breakpoints;
  // owners[s] is the hull position (into `points`) optimal on
  // [breakpoints[s], breakpoints[s + 1]].
  std::vector<std::size_t> owners;

  // Hull position optimal at w; on a breakpoint, the plan optimal just
  // above it.
  std::size_t OptimalAt(const Scalar& w) const;
};

using HullResult = BasicHull<Rational>;
using HullEstimate = BasicHull<double>;

// Empty input yields an empty hull (no breakpoints).
template <typename Scalar>
BasicHull<Scalar> LowerConvexHull(std::span<const BasicTimeCost<Scalar>> points);

// Integrated convex preference: expected best V over the weight
// distribution, in closed form over hull segments. +infinity for an empty
// set.
double Icp(std::span<const TimeCostPoint> points, const WeightDistribution& dist);
double Icp(std::span<const TimeCostEstimate> points, const WeightDistribution& dist);
double Icp(const HullResult& hull, const WeightDistribution& dist);

// Closed-form integral of h(w) * V(point, w) over [lo, hi].
double SegmentIntegral(const TimeCostEstimate& point, double lo, double hi, const WeightDistribution& dist);

// Midpoint-rule quadrature of the min-envelope over `grid` cells; an
// independent check on Icp(). grid >= 2.
double IpfNumeric(std::span<const TimeCostEstimate> points, const WeightDistribution& dist, std::size_t grid);

// Uniform double in [0, 1) from the top 53 bits of one draw.
double UnitDraw(std::mt19937_64& rng);
double SampleWeight(const WeightDistribution& dist, std::mt19937_64& rng);

extern template std::vector<std::size_t> ParetoIndices(std::span<const TimeCostPoint>);
extern template std::vector<std::size_t> ParetoIndices(std::span<const TimeCostEstimate>);
extern template HullResult LowerConvexHull(std::span<const TimeCostPoint>);
extern template HullEstimate LowerConvexHull(std::span<const TimeCostEstimate>);
extern template struct BasicHull<Rational>;
extern template struct BasicHull<double>;

}  // namespace plansets

#endif  // PLANSETS_ICP_HPP_
