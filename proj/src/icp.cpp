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

#include "plansets/icp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace plansets {
namespace {

// Exact for Rational; a small tolerance absorbs round-off for doubles.
template <typename Scalar>
bool Positive(const Scalar& x) {
  if constexpr (std::is_floating_point_v<Scalar>) {
    return x > 1e-9;
  } else {
    return x > 0;
  }
}

template <typename Scalar>
Scalar Cross(const BasicTimeCost<Scalar>& a, const BasicTimeCost<Scalar>& b, const BasicTimeCost<Scalar>& c) {
  return (b.time - a.time) * (c.cost - a.cost) - (b.cost - a.cost) * (c.time - a.time);
}

}  // namespace

WeightDistribution WeightDistribution::Triangular(double mode) {
  if (!(mode > 0.0 && mode < 1.0)) throw std::invalid_argument("triangular mode must lie in (0, 1)");
  return WeightDistribution(Kind::kTriangular, mode);
}

WeightDistribution WeightDistribution::Parse(std::string_view spec) {
  if (spec == "uniform") return Uniform();
  if (spec.starts_with("tri:")) {
    const std::string mode_text(spec.substr(4));
    std::size_t used = 0;
    double mode = 0;
    try {
      mode = std::stod(mode_text, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != mode_text.size()) {
      throw std::invalid_argument("bad distribution '" + std::string(spec) + "'");
    }
    return Triangular(mode);
  }
  throw std::invalid_argument("unknown distribution '" + std::string(spec) + "' (uniform | tri:<mode>)");
}

double WeightDistribution::Density(double w) const {
  if (w < 0.0 || w > 1.0) return 0.0;
  if (kind_ == Kind::kUniform) return 1.0;
  return w <= mode_ ? 2.0 * w / mode_ : 2.0 * (1.0 - w) / (1.0 - mode_);
}

double WeightDistribution::Mean() const { return kind_ == Kind::kUniform ? 0.5 : (1.0 + mode_) / 3.0; }

double WeightDistribution::Quantile(double u) const {
  if (kind_ == Kind::kUniform) return u;
  if (u <= mode_) return std::sqrt(mode_ * u);
  return 1.0 - std::sqrt((1.0 - mode_) * (1.0 - u));
}

std::string WeightDistribution::ToString() const {
  if (kind_ == Kind::kUniform) return "uniform";
  std::string text = std::to_string(mode_);
  while (text.size() > 1 && text.back() == '0') text.pop_back();
  if (text.back() == '.') text.pop_back();
  return "tri:" + text;
}

template <typename Scalar>
std::vector<std::size_t> ParetoIndices(std::span<const BasicTimeCost<Scalar>> points) {
  std::vector<std::size_t> order(points.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (points[a].time != points[b].time) return points[a].time < points[b].time;
    return points[a].cost < points[b].cost;
  });
  std::vector<std::size_t> out;
  for (std::size_t idx : order) {
    // Everything kept so far has time <= this point's time.
    if (out.empty() || points[idx].cost < points[out.back()].cost) out.push_back(idx);
  }
  return out;
}

std::vector<TimeCostPoint> ParetoFilter(std::span<const TimeCostPoint> points) {
  std::vector<TimeCostPoint> out;
  for (std::size_t idx : ParetoIndices(points)) out.push_back(points[idx]);
  return out;
}

template <typename Scalar>
std::size_t BasicHull<Scalar>::OptimalAt(const Scalar& w) const {
  if (owners.empty()) throw std::logic_error("empty hull");
  // First segment whose upper end lies strictly above w.
  auto it = std::upper_bound(breakpoints.begin() + 1, breakpoints.end() - 1, w);
  return owners[static_cast<std::size_t>(it - (breakpoints.begin() + 1))];
}

template <typename Scalar>
BasicHull<Scalar> LowerConvexHull(std::span<const BasicTimeCost<Scalar>> points) {
  BasicHull<Scalar> hull;
  for (std::size_t idx : ParetoIndices(points)) {
    while (hull.indices.size() >= 2 &&
           !Positive(Cross(points[hull.indices[hull.indices.size() - 2]], points[hull.indices.back()],
                           points[idx]))) {
      hull.indices.pop_back();
    }
    hull.indices.push_back(idx);
  }
  if (hull.indices.empty()) return hull;
  for (std::size_t idx : hull.indices) hull.points.push_back(points[idx]);

  // Larger w favours shorter plans: walk the hull from its cheapest end.
  const std::size_t m = hull.points.size();
  hull.breakpoints.push_back(Scalar(0));
  for (std::size_t pos = m - 1; pos > 0; --pos) {
    const auto& faster = hull.points[pos - 1];
    const auto& cheaper = hull.points[pos];
    const Scalar cost_gap = faster.cost - cheaper.cost;
    const Scalar time_gap = cheaper.time - faster.time;
    hull.breakpoints.push_back(cost_gap / (time_gap + cost_gap));
    hull.owners.push_back(pos);
  }
  hull.owners.push_back(0);
  hull.breakpoints.push_back(Scalar(1));
  return hull;
}

double SegmentIntegral(const TimeCostEstimate& point, double lo, double hi, const WeightDistribution& dist) {
  const double t = point.time;
  const double c = point.cost;
  if (dist.kind() == WeightDistribution::Kind::kUniform) {
    return c * (hi - lo) + (t - c) * (hi * hi - lo * lo) / 2.0;
  }
  const double m = dist.mode();
  double total = 0.0;
  if (lo < m) {
    const double b = std::min(hi, m);
    // h(w) = 2w/m on [0, m].
    total += 2.0 / m * (c * (b * b - lo * lo) / 2.0 + (t - c) * (b * b * b - lo * lo * lo) / 3.0);
  }
  if (hi > m) {
    const double a = std::max(lo, m);
    // h(w) = 2(1-w)/(1-m) on [m, 1].
    auto antiderivative = [&](double w) { return c * w + (t - 2.0 * c) * w * w / 2.0 - (t - c) * w * w * w / 3.0; };
    total += 2.0 / (1.0 - m) * (antiderivative(hi) - antiderivative(a));
  }
  return total;
}

double Icp(const HullResult& hull, const WeightDistribution& dist) {
  if (hull.owners.empty()) return std::numeric_limits<double>::infinity();
  double total = 0.0;
  for (std::size_t s = 0; s < hull.owners.size(); ++s) {
    total += SegmentIntegral(ToEstimate(hull.points[hull.owners[s]]), ToDouble(hull.breakpoints[s]),
                             ToDouble(hull.breakpoints[s + 1]), dist);
  }
  return total;
}

double Icp(std::span<const TimeCostPoint> points, const WeightDistribution& dist) {
  return Icp(LowerConvexHull(points), dist);
}

double Icp(std::span<const TimeCostEstimate> points, const WeightDistribution& dist) {
  const HullEstimate hull = LowerConvexHull(points);
  if (hull.owners.empty()) return std::numeric_limits<double>::infinity();
  double total = 0.0;
  for (std::size_t s = 0; s < hull.owners.size(); ++s) {
    total += SegmentIntegral(hull.points[hull.owners[s]], hull.breakpoints[s], hull.breakpoints[s + 1], dist);
  }
  return total;
}

double IpfNumeric(std::span<const TimeCostEstimate> points, const WeightDistribution& dist, std::size_t grid) {
  if (grid < 2) throw std::invalid_argument("grid must be >= 2");
  if (points.empty()) return std::numeric_limits<double>::infinity();
  const double step = 1.0 / static_cast<double>(grid);
  double total = 0.0;
  for (std::size_t i = 0; i < grid; ++i) {
    const double w = (static_cast<double>(i) + 0.5) * step;
    double best = std::numeric_limits<double>::infinity();
    for (const auto& p : points) best = std::min(best, Value(p, w));
    total += dist.Density(w) * best;
  }
  return total * step;
}

double UnitDraw(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

double SampleWeight(const WeightDistribution& dist, std::mt19937_64& rng) { return dist.Quantile(UnitDraw(rng)); }

template std::vector<std::size_t> ParetoIndices(std::span<const TimeCostPoint>);
template std::vector<std::size_t> ParetoIndices(std::span<const TimeCostEstimate>);
template HullResult LowerConvexHull(std::span<const TimeCostPoint>);
template HullEstimate LowerConvexHull(std::span<const TimeCostEstimate>);
template struct BasicHull<Rational>;
template struct BasicHull<double>;

}  // namespace plansets
