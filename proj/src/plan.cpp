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

#include "plansets/plan.hpp"

#include <algorithm>
#include <iterator>

namespace plansets {
namespace {

bool Intersects(const AtomSet& a, const AtomSet& b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      return true;
    }
  }
  return false;
}

bool Contains(const AtomSet& set, AtomId atom) { return std::binary_search(set.begin(), set.end(), atom); }

AtomSet Missing(const AtomSet& required, const AtomSet& state) {
  AtomSet out;
  std::set_difference(required.begin(), required.end(), state.begin(), state.end(), std::back_inserter(out));
  return out;
}

AtomSet Apply(const AtomSet& state, const GroundAction& action) {
  AtomSet kept;
  std::set_difference(state.begin(), state.end(), action.delete_effects.begin(), action.delete_effects.end(),
                      std::back_inserter(kept));
  AtomSet next;
  std::set_union(kept.begin(), kept.end(), action.add_effects.begin(), action.add_effects.end(),
                 std::back_inserter(next));
  return next;
}

}  // namespace

ValidationError::ValidationError(Kind kind, std::string message, std::optional<std::size_t> step,
                                 AtomSet missing)
    : std::runtime_error(std::move(message)), kind_(kind), step_(step), missing_(std::move(missing)) {}

Plan PlanFromNames(const GroundProblem& problem, const std::vector<std::string>& names) {
  Plan plan;
  for (std::size_t i = 0; i < names.size(); ++i) {
    const auto id = problem.FindAction(names[i]);
    if (!id) {
      throw ValidationError(ValidationError::Kind::kUnknownAction,
                            "step " + std::to_string(i) + ": unknown action " + names[i], i);
    }
    plan.steps.push_back(*id);
  }
  return plan;
}

std::vector<std::string> StepNames(const GroundProblem& problem, const Plan& plan) {
  std::vector<std::string> out;
  out.reserve(plan.steps.size());
  for (ActionId id : plan.steps) out.push_back(problem.actions.at(id).name);
  return out;
}

Trajectory Simulate(const GroundProblem& problem, const Plan& plan) {
  Trajectory trajectory;
  trajectory.states.reserve(plan.steps.size() + 1);
  trajectory.states.push_back(problem.init);
  for (std::size_t i = 0; i < plan.steps.size(); ++i) {
    if (plan.steps[i] >= problem.actions.size()) {
      throw ValidationError(ValidationError::Kind::kUnknownAction,
                            "step " + std::to_string(i) + ": action id out of range", i);
    }
    const GroundAction& action = problem.actions[plan.steps[i]];
    const AtomSet& state = trajectory.states.back();
    AtomSet missing = Missing(action.preconditions, state);
    if (!missing.empty()) {
      throw ValidationError(ValidationError::Kind::kPreconditionViolated,
                            "step " + std::to_string(i) + " " + action.name + ": unsatisfied preconditions " +
                                AtomSetToString(problem, missing),
                            i, std::move(missing));
    }
    trajectory.states.push_back(Apply(state, action));
  }
  AtomSet missing = Missing(problem.goals, trajectory.states.back());
  if (!missing.empty()) {
    throw ValidationError(ValidationError::Kind::kGoalUnsatisfied,
                          "goals not reached: " + AtomSetToString(problem, missing), std::nullopt,
                          std::move(missing));
  }
  return trajectory;
}

CausalLinkSet ExtractCausalLinks(const GroundProblem& problem, const Plan& plan) {
  Simulate(problem, plan);
  CausalLinkSet links;
  auto latest_adder = [&](AtomId atom, std::size_t before) -> StepRef {
    for (std::size_t i = before; i-- > 0;) {
      if (Contains(problem.actions[plan.steps[i]].add_effects, atom)) return plan.steps[i];
    }
    return kInitStep;
  };
  for (std::size_t j = 0; j < plan.steps.size(); ++j) {
    for (AtomId atom : problem.actions[plan.steps[j]].preconditions) {
      links.push_back({latest_adder(atom, j), atom, static_cast<StepRef>(plan.steps[j])});
    }
  }
  for (AtomId atom : problem.goals) links.push_back({latest_adder(atom, plan.steps.size()), atom, kGoalStep});
  std::sort(links.begin(), links.end());
  links.erase(std::unique(links.begin(), links.end()), links.end());
  return links;
}

bool CausalLinkHolds(const GroundProblem& problem, const Plan& plan, const CausalLink& link) {
  const std::size_t n = plan.steps.size();
  // Positions: 0 = INIT, 1..n = steps, n + 1 = GOAL.
  auto produces = [&](std::size_t pos) {
    if (pos == 0) return link.producer == kInitStep && Contains(problem.init, link.atom);
    if (pos > n) return false;
    const ActionId id = plan.steps[pos - 1];
    return link.producer == static_cast<StepRef>(id) && Contains(problem.actions[id].add_effects, link.atom);
  };
  auto consumes = [&](std::size_t pos) {
    if (pos == n + 1) return link.consumer == kGoalStep && Contains(problem.goals, link.atom);
    if (pos == 0) return false;
    const ActionId id = plan.steps[pos - 1];
    return link.consumer == static_cast<StepRef>(id) && Contains(problem.actions[id].preconditions, link.atom);
  };
  for (std::size_t p = 0; p <= n; ++p) {
    if (!produces(p)) continue;
    for (std::size_t c = p + 1; c <= n + 1; ++c) {
      if (!consumes(c)) continue;
      bool clobbered = false;
      for (std::size_t m = p + 1; m < c && !clobbered; ++m) {
        clobbered = Contains(problem.actions[plan.steps[m - 1]].delete_effects, link.atom);
      }
      if (!clobbered) return true;
    }
  }
  return false;
}

bool MustPrecede(const GroundAction& earlier, const GroundAction& later) {
  return Intersects(earlier.add_effects, later.preconditions) ||
         Intersects(earlier.delete_effects, later.preconditions) ||
         Intersects(earlier.delete_effects, later.add_effects) ||
         Intersects(later.delete_effects, earlier.preconditions) ||
         Intersects(later.delete_effects, earlier.add_effects);
}

std::vector<Rational> FinishTimes(const GroundProblem& problem, const Plan& plan) {
  std::vector<Rational> finish(plan.steps.size());
  for (std::size_t j = 0; j < plan.steps.size(); ++j) {
    const GroundAction& later = problem.actions[plan.steps[j]];
    Rational start = 0;
    for (std::size_t i = 0; i < j; ++i) {
      if (finish[i] > start && MustPrecede(problem.actions[plan.steps[i]], later)) start = finish[i];
    }
    finish[j] = start + later.duration;
  }
  return finish;
}

TimeCostPoint Project(const GroundProblem& problem, const Plan& plan) {
  Simulate(problem, plan);
  TimeCostPoint point;
  for (const Rational& f : FinishTimes(problem, plan)) point.time = std::max(point.time, f);
  for (ActionId id : plan.steps) point.cost += problem.actions[id].cost;
  return point;
}

PlanFile PlanFileFromJson(const nlohmann::json& json) {
  if (!json.is_object() || !json.contains("steps") || !json["steps"].is_array()) {
    throw std::invalid_argument("plan file must be an object with a 'steps' array");
  }
  PlanFile file;
  if (json.contains("problem")) file.problem = json["problem"].get<std::string>();
  for (const auto& step : json["steps"]) file.steps.push_back(step.get<std::string>());
  if (json.contains("time")) file.time = RationalFromJson(json["time"]);
  if (json.contains("cost")) file.cost = RationalFromJson(json["cost"]);
  return file;
}

Plan ResolvePlanFile(const GroundProblem& problem, const PlanFile& file) {
  Plan plan = PlanFromNames(problem, file.steps);
  const TimeCostPoint point = Project(problem, plan);
  if (file.time && *file.time != point.time) {
    throw ValidationError(ValidationError::Kind::kMismatch,
                          "recorded time " + ToString(*file.time) + " != computed " + ToString(point.time));
  }
  if (file.cost && *file.cost != point.cost) {
    throw ValidationError(ValidationError::Kind::kMismatch,
                          "recorded cost " + ToString(*file.cost) + " != computed " + ToString(point.cost));
  }
  return plan;
}

nlohmann::json PlanFileToJson(const GroundProblem& problem, const Plan& plan, const std::string& problem_path) {
  const TimeCostPoint point = Project(problem, plan);
  return {{"problem", problem_path},
          {"steps", StepNames(problem, plan)},
          {"time", RationalToJson(point.time)},
          {"cost", RationalToJson(point.cost)}};
}

}  // namespace plansets
