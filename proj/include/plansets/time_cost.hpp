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

#ifndef PLANSETS_TIME_COST_HPP_
#define PLANSETS_TIME_COST_HPP_

#include "plansets/rational.hpp"

namespace plansets {

// A plan projected onto (makespan, execution cost).
template <typename Scalar>
struct BasicTimeCost {
  Scalar time{0};
  Scalar cost{0};
  bool operator==(const BasicTimeCost&) const = default;
};

using TimeCostPoint = BasicTimeCost<Rational>;
// Floating-point variant used for in-search estimates.
using TimeCostEstimate = BasicTimeCost<double>;

inline TimeCostEstimate ToEstimate(const TimeCostPoint& p) { return {ToDouble(p.time), ToDouble(p.cost)}; }

}  // namespace plansets

#endif  // PLANSETS_TIME_COST_HPP_
