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

#include "plansets/distance.hpp"

#include <algorithm>
#include <iterator>
#include <stdexcept>

namespace plansets {
namespace {

template <typename T>
std::size_t IntersectionSize(const std::vector<T>& a, const std::vector<T>& b) {
  std::size_t n = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++n;
      ++i;
      ++j;
    }
  }
  return n;
}

template <typename T>
Rational Jaccard(const std::vector<T>& a, const std::vector<T>& b) {
  const std::size_t common = IntersectionSize(a, b);
  const std::size_t all = a.size() + b.size() - common;
  if (all == 0) return 0;
  return 1 - Rational(common, all);
}

template <bool kHold>
Rational StateDistance(const PlanFeatures& p, const PlanFeatures& q) {
  const auto* longer = &p.trajectory.states;
  const auto* shorter = &q.trajectory.states;
  if (longer->size() < shorter->size()) std::swap(longer, shorter);
  const std::size_t k = longer->size() - 1;
  const std::size_t k_short = shorter->size() - 1;
  if (k == 0) return 0;
  Rational sum = 0;
  for (std::size_t i = 1; i <= k_short; ++i) sum += StateDelta((*longer)[i], (*shorter)[i]);
  for (std::size_t i = k_short + 1; i <= k; ++i) {
    sum += kHold ? StateDelta((*longer)[i], (*shorter)[k_short]) : Rational(1);
  }
  return sum / k;
}

}  // namespace

DistanceMetric ParseMetric(std::string_view name) {
  if (name == "action") return DistanceMetric::kAction;
  if (name == "clink") return DistanceMetric::kCausalLink;
  if (name == "state-pad") return DistanceMetric::kStatePad;
  if (name == "state-hold") return DistanceMetric::kStateHold;
  throw std::invalid_argument("unknown metric '" + std::string(name) + "'");
}

std::string MetricName(DistanceMetric metric) {
  switch (metric) {
    case DistanceMetric::kAction:
      return "action";
    case DistanceMetric::kCausalLink:
      return "clink";
    case DistanceMetric::kStatePad:
      return "state-pad";
    case DistanceMetric::kStateHold:
      return "state-hold";
  }
  return "?";
}

PlanFeatures ExtractFeatures(const GroundProblem& problem, const Plan& plan) {
  PlanFeatures f;
  f.trajectory = Simulate(problem, plan);
  f.causal_links = ExtractCausalLinks(problem, plan);
  f.actions = plan.steps;
  std::sort(f.actions.begin(), f.actions.end());
  f.actions.erase(std::unique(f.actions.begin(), f.actions.end()), f.actions.end());
  return f;
}

Rational StateDelta(const AtomSet& s, const AtomSet& t) { return Jaccard(s, t); }

Rational ActionDistance(const PlanFeatures& p, const PlanFeatures& q) { return Jaccard(p.actions, q.actions); }

Rational CausalLinkDistance(const PlanFeatures& p, const PlanFeatures& q) {
  return Jaccard(p.causal_links, q.causal_links);
}

Rational StateDistancePad(const PlanFeatures& p, const PlanFeatures& q) { return StateDistance<false>(p, q); }

Rational StateDistanceHold(const PlanFeatures& p, const PlanFeatures& q) { return StateDistance<true>(p, q); }

Rational Distance(DistanceMetric metric, const PlanFeatures& p, const PlanFeatures& q) {
  switch (metric) {
    case DistanceMetric::kAction:
      return ActionDistance(p, q);
    case DistanceMetric::kCausalLink:
      return CausalLinkDistance(p, q);
    case DistanceMetric::kStatePad:
      return StateDistancePad(p, q);
    case DistanceMetric::kStateHold:
      return StateDistanceHold(p, q);
  }
  throw std::logic_error("bad metric");
}

OneSidedActionDistance SplitActionDistance(const PlanFeatures& p, const PlanFeatures& q) {
  const std::size_t common = IntersectionSize(p.actions, q.actions);
  const std::size_t all = p.actions.size() + q.actions.size() - common;
  if (all == 0) return {0, 0};
  return {Rational(p.actions.size() - common, all), Rational(q.actions.size() - common, all)};
}

bool GammaBalanced(const PlanFeatures& p, const PlanFeatures& q, const Rational& d, int gamma) {
  if (gamma < 1) throw std::invalid_argument("gamma must be >= 1");
  const auto split = SplitActionDistance(p, q);
  const Rational threshold = d / gamma;
  return split.only_in_first >= threshold && split.only_in_second >= threshold;
}

Rational SetQuality(std::span<const PlanFeatures> plans, DistanceMetric metric, Aggregate aggregate) {
  if (plans.size() < 2) throw std::invalid_argument("set quality needs at least two plans");
  Rational lo = 1;
  Rational hi = 0;
  Rational sum = 0;
  for (std::size_t i = 0; i < plans.size(); ++i) {
    for (std::size_t j = i + 1; j < plans.size(); ++j) {
      const Rational d = Distance(metric, plans[i], plans[j]);
      lo = std::min(lo, d);
      hi = std::max(hi, d);
      sum += d;
    }
  }
  switch (aggregate) {
    case Aggregate::kMin:
      return lo;
    case Aggregate::kMax:
      return hi;
    case Aggregate::kAvg:
      return sum / Rational(plans.size() * (plans.size() - 1) / 2);
  }
  throw std::logic_error("bad aggregate");
}

}  // namespace plansets
