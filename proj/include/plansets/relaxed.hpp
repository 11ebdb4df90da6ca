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

#ifndef PLANSETS_RELAXED_HPP_
#define PLANSETS_RELAXED_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "plansets/pddl.hpp"

namespace plansets {

struct RelaxedPlanResult {
  bool reachable = false;
  std::vector<ActionId> actions;  // sorted
  // Sum of the selected actions' costs (penalties excluded).
  double cost = 0.0;
  // Earliest time at which every goal holds in the temporal relaxation.
  double makespan = 0.0;
};

// Delete-relaxation machinery over one grounded problem. Holds scratch
// buffers, so an instance must not be shared between threads.
class RelaxedPlanner {
 public:
  explicit RelaxedPlanner(const GroundProblem& problem);

  // Supporters are chosen by additive cost (action cost + penalty + the
  // cost of reaching its preconditions). `penalty` is indexed by ActionId
  // and may be empty. `ready_times`, when given, is aligned with `state`
  // and holds the time at which each state atom becomes available.
  RelaxedPlanResult Compute(const AtomSet& state, const AtomSet& goals, std::span<const std::uint8_t> penalty = {},
                            std::span<const double> ready_times = {});

 private:
  const GroundProblem& problem_;
  std::vector<std::vector<ActionId>> consumers_;
  std::vector<ActionId> no_precondition_actions_;
  std::vector<double> base_cost_;
  std::vector<double> duration_;
  // Scratch.
  std::vector<double> atom_cost_;
  std::vector<double> atom_time_;
  std::vector<std::int64_t> supporter_;
  std::vector<std::uint32_t> pending_;
  std::vector<double> accumulated_;
  std::vector<std::uint8_t> selected_;
  std::vector<std::uint8_t> achieved_;
};

// One-shot convenience wrapper around RelaxedPlanner.
RelaxedPlanResult RelaxedPlan(const GroundProblem& problem, const AtomSet& state, const AtomSet& goals,
                              std::span<const std::uint8_t> penalty = {});

}  // namespace plansets

#endif  // PLANSETS_RELAXED_HPP_
