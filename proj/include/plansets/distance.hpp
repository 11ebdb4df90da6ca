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

#ifndef PLANSETS_DISTANCE_HPP_
#define PLANSETS_DISTANCE_HPP_

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "plansets/plan.hpp"
#include "plansets/rational.hpp"

namespace plansets {

enum class DistanceMetric { kAction, kCausalLink, kStatePad, kStateHold };
enum class Aggregate { kMin, kMax, kAvg };

// "action" | "clink" | "state-pad" | "state-hold".
DistanceMetric ParseMetric(std::string_view name);
std::string MetricName(DistanceMetric metric);

// Base-level features of a validated plan, computed once and reused for
// every pairwise distance.
struct PlanFeatures {
  std::vector<ActionId> actions;  // distinct actions, sorted
  CausalLinkSet causal_links;
  Trajectory trajectory;
};

PlanFeatures ExtractFeatures(const GroundProblem& problem, const Plan& plan);

// 1 - |s ∩ s'| / |s ∪ s'|, and 0 when both are empty.
Rational StateDelta(const AtomSet& s, const AtomSet& t);

Rational ActionDistance(const PlanFeatures& p, const PlanFeatures& q);
Rational CausalLinkDistance(const PlanFeatures& p, const PlanFeatures& q);
// State-sequence distances; the longer trajectory is always taken as the
// reference length k, so both are symmetric. Missing steps of the shorter
// plan count as fully different (pad) or as staying in its last state (hold).
Rational StateDistancePad(const PlanFeatures& p, const PlanFeatures& q);
Rational StateDistanceHold(const PlanFeatures& p, const PlanFeatures& q);

Rational Distance(DistanceMetric metric, const PlanFeatures& p, const PlanFeatures& q);

// The two one-sided terms of the action distance:
// |A(p) - A(q)| / |A(p) ∪ A(q)| and |A(q) - A(p)| / |A(p) ∪ A(q)|.
struct OneSidedActionDistance {
  Rational only_in_first;
  Rational only_in_second;
};
OneSidedActionDistance SplitActionDistance(const PlanFeatures& p, const PlanFeatures& q);

// Both one-sided terms must reach d / gamma. gamma >= 1.
bool GammaBalanced(const PlanFeatures& p, const PlanFeatures& q, const Rational& d, int gamma);

// Min, max or mean distance over all unordered pairs; needs >= 2 plans.
Rational SetQuality(std::span<const PlanFeatures> plans, DistanceMetric metric, Aggregate aggregate);

}  // namespace plansets

#endif  // PLANSETS_DISTANCE_HPP_
