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

#include "plansets/relaxed.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <queue>
#include <utility>

namespace plansets {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
using QueueEntry = std::pair<double, AtomId>;
using MinQueue = std::priority_queue<QueueEntry, std::vector<QueueEntry>, std::greater<>>;

}  // namespace

RelaxedPlanner::RelaxedPlanner(const GroundProblem& problem)
    : problem_(problem),
      consumers_(problem.atoms.size()),
      atom_cost_(problem.atoms.size()),
      atom_time_(problem.atoms.size()),
      supporter_(problem.atoms.size()),
      pending_(problem.actions.size()),
      accumulated_(problem.actions.size()),
      selected_(problem.actions.size()),
      achieved_(problem.atoms.size()) {
  for (ActionId a = 0; a < problem.actions.size(); ++a) {
    const GroundAction& action = problem.actions[a];
    for (AtomId q : action.preconditions) consumers_[q].push_back(a);
    if (action.preconditions.empty()) no_precondition_actions_.push_back(a);
    base_cost_.push_back(ToDouble(action.cost));
    duration_.push_back(ToDouble(action.duration));
  }
}

RelaxedPlanResult RelaxedPlanner::Compute(const AtomSet& state, const AtomSet& goals,
                                          std::span<const std::uint8_t> penalty,
                                          std::span<const double> ready_times) {
  const auto& actions = problem_.actions;
  auto selection_cost = [&](ActionId a) { return base_cost_[a] + (penalty.empty() ? 0.0 : penalty[a]); };

  // Additive cost labels (generalized Dijkstra).
  std::fill(atom_cost_.begin(), atom_cost_.end(), kInf);
  std::fill(supporter_.begin(), supporter_.end(), -1);
  std::fill(accumulated_.begin(), accumulated_.end(), 0.0);
  for (ActionId a = 0; a < actions.size(); ++a) pending_[a] = static_cast<std::uint32_t>(actions[a].preconditions.size());
  MinQueue queue;
  for (AtomId q : state) {
    atom_cost_[q] = 0.0;
    queue.emplace(0.0, q);
  }
  auto fire_cost = [&](ActionId a) {
    const double value = selection_cost(a) + accumulated_[a];
    for (AtomId q : actions[a].add_effects) {
      if (value < atom_cost_[q]) {
        atom_cost_[q] = value;
        supporter_[q] = a;
        queue.emplace(value, q);
      }
    }
  };
  for (ActionId a : no_precondition_actions_) fire_cost(a);
  while (!queue.empty()) {
    const auto [cost, q] = queue.top();
    queue.pop();
    if (cost > atom_cost_[q]) continue;
    for (ActionId a : consumers_[q]) {
      accumulated_[a] += cost;
      if (--pending_[a] == 0) fire_cost(a);
    }
  }

  RelaxedPlanResult result;
  for (AtomId g : goals) {
    if (atom_cost_[g] == kInf) return result;
  }
  result.reachable = true;

  // Earliest-achievement times (max over preconditions + duration).
  std::fill(atom_time_.begin(), atom_time_.end(), kInf);
  std::fill(accumulated_.begin(), accumulated_.end(), 0.0);
  for (ActionId a = 0; a < actions.size(); ++a) pending_[a] = static_cast<std::uint32_t>(actions[a].preconditions.size());
  for (std::size_t i = 0; i < state.size(); ++i) {
    atom_time_[state[i]] = ready_times.empty() ? 0.0 : ready_times[i];
    queue.emplace(atom_time_[state[i]], state[i]);
  }
  auto fire_time = [&](ActionId a) {
    const double finish = accumulated_[a] + duration_[a];
    for (AtomId q : actions[a].add_effects) {
      if (finish < atom_time_[q]) {
        atom_time_[q] = finish;
        queue.emplace(finish, q);
      }
    }
  };
  for (ActionId a : no_precondition_actions_) fire_time(a);
  while (!queue.empty()) {
    const auto [time, q] = queue.top();
    queue.pop();
    if (time > atom_time_[q]) continue;
    for (ActionId a : consumers_[q]) {
      accumulated_[a] = std::max(accumulated_[a], time);
      if (--pending_[a] == 0) fire_time(a);
    }
  }
  for (AtomId g : goals) result.makespan = std::max(result.makespan, atom_time_[g]);

  // Backchain from the goals through the best supporters.
  std::fill(selected_.begin(), selected_.end(), 0);
  std::fill(achieved_.begin(), achieved_.end(), 0);
  for (AtomId q : state) achieved_[q] = 1;
  std::vector<AtomId> open(goals.rbegin(), goals.rend());
  while (!open.empty()) {
    const AtomId q = open.back();
    open.pop_back();
    if (achieved_[q]) continue;
    const auto a = static_cast<ActionId>(supporter_[q]);
    if (selected_[a]) continue;
    selected_[a] = 1;
    result.actions.push_back(a);
    result.cost += base_cost_[a];
    for (AtomId added : actions[a].add_effects) achieved_[added] = 1;
    for (auto it = actions[a].preconditions.rbegin(); it != actions[a].preconditions.rend(); ++it) {
      if (!achieved_[*it]) open.push_back(*it);
    }
  }
  std::sort(result.actions.begin(), result.actions.end());
  return result;
}

RelaxedPlanResult RelaxedPlan(const GroundProblem& problem, const AtomSet& state, const AtomSet& goals,
                              std::span<const std::uint8_t> penalty) {
  RelaxedPlanner planner(problem);
  return planner.Compute(state, goals, penalty);
}

}  // namespace plansets
