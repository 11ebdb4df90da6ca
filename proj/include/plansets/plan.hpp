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

#ifndef PLANSETS_PLAN_HPP_
#define PLANSETS_PLAN_HPP_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "plansets/pddl.hpp"
#include "plansets/time_cost.hpp"

namespace plansets {

struct Plan {
  std::vector<ActionId> steps;
  // Which generator produced the plan and with what seed; reporting only.
  std::string provenance;
  std::uint64_t seed = 0;
};

// Exact step-sequence equality (provenance ignored).
inline bool SameSteps(const Plan& a, const Plan& b) { return a.steps == b.steps; }

// states[0] is the initial state; states.size() == steps.size() + 1.
struct Trajectory {
  std::vector<AtomSet> states;
};

class ValidationError : public std::runtime_error {
 public:
  enum class Kind { kUnknownAction, kPreconditionViolated, kGoalUnsatisfied, kMismatch };
  ValidationError(Kind kind, std::string message, std::optional<std::size_t> step = std::nullopt,
                  AtomSet missing = {});
  Kind kind() const { return kind_; }
  std::optional<std::size_t> step() const { return step_; }
  const AtomSet& missing() const { return missing_; }

 private:
  Kind kind_;
  std::optional<std::size_t> step_;
  AtomSet missing_;
};

Plan PlanFromNames(const GroundProblem& problem, const std::vector<std::string>& names);
std::vector<std::string> StepNames(const GroundProblem& problem, const Plan& plan);

// Executes the plan from the initial state. Throws ValidationError on the
// first unmet precondition or if the final state misses a goal.
Trajectory Simulate(const GroundProblem& problem, const Plan& plan);

// Producer/consumer endpoints: either a ground action or one of the two
// dummy steps standing for the initial state and the goal.
using StepRef = std::int64_t;
inline constexpr StepRef kInitStep = -1;
inline constexpr StepRef kGoalStep = -2;

struct CausalLink {
  StepRef producer = kInitStep;
  AtomId atom = 0;
  StepRef consumer = kGoalStep;
  auto operator<=>(const CausalLink&) const = default;
};

// Sorted and duplicate-free.
using CausalLinkSet = std::vector<CausalLink>;

// One link per precondition occurrence and per goal atom, supported by the
// latest earlier step that adds the atom (INIT when none does).
CausalLinkSet ExtractCausalLinks(const GroundProblem& problem, const Plan& plan);

// True iff the link's producer adds the atom (or INIT holds it), the
// consumer needs it (or GOAL contains it) and no step strictly between them
// deletes it, for at least one pair of occurrences in the plan.
bool CausalLinkHolds(const GroundProblem& problem, const Plan& plan, const CausalLink& link);

// True when step `earlier` must precede step `later` in any deordering:
// causal support, or either action deleting a precondition or add effect of
// the other.
bool MustPrecede(const GroundAction& earlier, const GroundAction& later);

// Per-step finish times of the deordered plan (longest duration-weighted
// path through the precedence graph ending at each step).
std::vector<Rational> FinishTimes(const GroundProblem& problem, const Plan& plan);

// (makespan, total cost). Validates the plan first.
TimeCostPoint Project(const GroundProblem& problem, const Plan& plan);

// Plan file: {"problem": path, "steps": [names], "time"?: n, "cost"?: n}.
struct PlanFile {
  std::string problem;
  std::vector<std::string> steps;
  std::optional<Rational> time;
  std::optional<Rational> cost;
};

PlanFile PlanFileFromJson(const nlohmann::json& json);
// Resolves and validates against `problem`; recorded time/cost must match
// the recomputed projection exactly.
Plan ResolvePlanFile(const GroundProblem& problem, const PlanFile& file);
nlohmann::json PlanFileToJson(const GroundProblem& problem, const Plan& plan,
                              const std::string& problem_path);

}  // namespace plansets

#endif  // PLANSETS_PLAN_HPP_
