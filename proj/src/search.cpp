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

#include "plansets/search.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <limits>
#include <random>
#include <stdexcept>
#include <unordered_map>

#include "plansets/relaxed.hpp"

namespace plansets {
namespace {

std::size_t CountCommon(const std::vector<ActionId>& a, const std::vector<ActionId>& b) {
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

bool Contains(const std::vector<ActionId>& sorted, ActionId a) {
  return std::binary_search(sorted.begin(), sorted.end(), a);
}

std::vector<ActionId> WithAction(std::vector<ActionId> sorted, std::optional<ActionId> a) {
  if (a && !Contains(sorted, *a)) sorted.insert(std::upper_bound(sorted.begin(), sorted.end(), *a), *a);
  return sorted;
}

double JaccardDistance(const std::vector<ActionId>& a, const std::vector<ActionId>& b) {
  const std::size_t common = CountCommon(a, b);
  const std::size_t all = a.size() + b.size() - common;
  return all == 0 ? 0.0 : 1.0 - static_cast<double>(common) / static_cast<double>(all);
}

std::uint64_t HashSteps(const std::vector<ActionId>& steps) {
  std::uint64_t h = 1469598103934665603ULL;
  for (ActionId a : steps) {
    h ^= static_cast<std::uint64_t>(a) + 1;
    h *= 1099511628211ULL;
  }
  h ^= steps.size();
  return h;
}

struct ClosedKey {
  AtomSet state;
  std::vector<ActionId> actions;
  bool operator==(const ClosedKey&) const = default;
};

struct ClosedKeyHash {
  std::size_t operator()(const ClosedKey& key) const {
    std::uint64_t h = 14695981039346656037ULL;
    for (AtomId q : key.state) h = (h ^ q) * 1099511628211ULL;
    h = (h ^ 0xffffffffULL) * 1099511628211ULL;
    for (ActionId a : key.actions) h = (h ^ a) * 1099511628211ULL;
    return static_cast<std::size_t>(h);
  }
};

struct Node {
  AtomSet state;
  std::int64_t parent = -1;
  ActionId action = 0;
  double finish = 0.0;  // finish time of `action`
  double g_cost = 0.0;
  double g_time = 0.0;
  EvalTerms terms;
};

struct OpenEntry {
  double score;
  std::uint64_t order;
  std::size_t node;
};

// Min-heap on (score, order).
struct OpenAfter {
  bool operator()(const OpenEntry& a, const OpenEntry& b) const {
    if (a.score != b.score) return a.score > b.score;
    return a.order > b.order;
  }
};

class Solver {
 public:
  Solver(const GroundProblem& problem, const EvaluationContext& ctx, const SearchConfig& cfg)
      : problem_(problem),
        ctx_(ctx),
        cfg_(cfg),
        relaxed_(problem),
        rng_(cfg.seed),
        penalty_(problem.actions.size(), 0) {
    time_labels_ = cfg.objective_w.has_value() || cfg.alpha_time > 0 ||
                   ctx.mode == EvaluationContext::Mode::kIcpEstimate;
    if (ctx_.mode == EvaluationContext::Mode::kIcpEstimate) {
      icp_before_ = Icp(std::span<const TimeCostPoint>(ctx_.icp->plan_set), ctx_.icp->dist);
    }
  }

  SolveResult Run(const std::vector<ActionId>& start_prefix) {
    start_ = std::chrono::steady_clock::now();
    SolveResult result;
    if (!relaxed_.Compute(problem_.init, problem_.goals).reachable) {
      result.status = SolveResult::Status::kUnreachable;
      return result;
    }
    Seed(start_prefix);
    std::size_t since_restart = 0;
    while (!open_.empty()) {
      if (result.expanded >= cfg_.node_budget || ((result.expanded & 63) == 0 && OutOfTime())) {
        result.status = SolveResult::Status::kBudgetExhausted;
        result.generated = generated_;
        return result;
      }
      if (cfg_.noise > 0 && cfg_.restart_after > 0 && since_restart >= cfg_.restart_after) {
        open_.clear();
        closed_.clear();
        Seed(start_prefix);
        since_restart = 0;
        ++result.restarts;
      }
      const std::size_t current = PopNext();
      ++result.expanded;
      ++since_restart;
      const auto [steps, finishes] = PathTo(current);
      if (cfg_.record_trace) result.trace.push_back(HashSteps(steps));
      if (std::includes(nodes_[current].state.begin(), nodes_[current].state.end(), problem_.goals.begin(),
                        problem_.goals.end())) {
        Plan plan{steps, ProvenanceTag(), cfg_.seed};
        if (Accepts(plan)) {
          Simulate(problem_, plan);
          result.status = SolveResult::Status::kSolved;
          result.plan = std::move(plan);
          result.generated = generated_;
          return result;
        }
      }
      Expand(current, steps, finishes);
    }
    result.status = SolveResult::Status::kUnreachable;
    result.generated = generated_;
    return result;
  }

 private:
  std::string ProvenanceTag() const {
    switch (ctx_.mode) {
      case EvaluationContext::Mode::kPlain:
        return cfg_.objective_w ? "solve:plain:w=" + std::to_string(*cfg_.objective_w) : "solve:plain";
      case EvaluationContext::Mode::kDiverse:
        return "solve:diverse";
      case EvaluationContext::Mode::kIcpEstimate:
        return "solve:icp";
    }
    return "solve";
  }

  bool OutOfTime() const {
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start_;
    return elapsed.count() > cfg_.time_budget_seconds;
  }

  void Seed(const std::vector<ActionId>& start_prefix) {
    nodes_.clear();
    Node root;
    root.state = problem_.init;
    nodes_.push_back(root);
    const bool diverse = ctx_.mode == EvaluationContext::Mode::kDiverse;
    Dominated(ClosedKey{problem_.init, {}}, 0.0, 0.0);
    Push(0, MakeCandidate(0, {}, std::nullopt, {}));
    // The seed prefix is replayed greedily; inapplicable steps are skipped.
    std::size_t tip = 0;
    std::vector<ActionId> steps;
    std::vector<double> finishes;
    for (ActionId a : start_prefix) {
      const auto& pre = problem_.actions.at(a).preconditions;
      if (!std::includes(nodes_[tip].state.begin(), nodes_[tip].state.end(), pre.begin(), pre.end())) continue;
      tip = AddChild(tip, a, steps, finishes);
      steps.push_back(a);
      finishes.push_back(nodes_[tip].finish);
    }
    if (tip != 0) {
      std::vector<ActionId> prior(steps.begin(), steps.end() - 1);
      std::sort(prior.begin(), prior.end());
      prior.erase(std::unique(prior.begin(), prior.end()), prior.end());
      ClosedKey key{nodes_[tip].state, diverse ? WithAction(prior, steps.back()) : std::vector<ActionId>{}};
      const Candidate c = MakeCandidate(tip, prior, steps.back(), steps);
      if (!std::isinf(c.est_cost) && !Dominated(key, nodes_[tip].g_cost, nodes_[tip].g_time)) Push(tip, c);
    }
    RescoreIfNeeded();
  }

  std::size_t AddChild(std::size_t parent, ActionId a, const std::vector<ActionId>& steps,
                       const std::vector<double>& finishes) {
    const GroundAction& action = problem_.actions[a];
    Node child;
    const AtomSet& state = nodes_[parent].state;
    AtomSet kept;
    std::set_difference(state.begin(), state.end(), action.delete_effects.begin(), action.delete_effects.end(),
                        std::back_inserter(kept));
    std::set_union(kept.begin(), kept.end(), action.add_effects.begin(), action.add_effects.end(),
                   std::back_inserter(child.state));
    double start = 0.0;
    for (std::size_t i = 0; i < steps.size(); ++i) {
      if (finishes[i] > start && MustPrecede(problem_.actions[steps[i]], action)) start = finishes[i];
    }
    child.parent = static_cast<std::int64_t>(parent);
    child.action = a;
    child.finish = start + ToDouble(action.duration);
    child.g_cost = nodes_[parent].g_cost + ToDouble(action.cost);
    child.g_time = std::max(nodes_[parent].g_time, child.finish);
    nodes_.push_back(std::move(child));
    return nodes_.size() - 1;
  }

  std::pair<std::vector<ActionId>, std::vector<double>> PathTo(std::size_t node) const {
    std::vector<ActionId> steps;
    std::vector<double> finishes;
    for (auto n = static_cast<std::int64_t>(node); nodes_[n].parent >= 0; n = nodes_[n].parent) {
      steps.push_back(nodes_[n].action);
      finishes.push_back(nodes_[n].finish);
    }
    std::reverse(steps.begin(), steps.end());
    std::reverse(finishes.begin(), finishes.end());
    return {steps, finishes};
  }

  // Builds the candidate for `node`, whose plan is `steps` (the last one
  // being `new_action` when present). Sets relaxed_actions empty and
  // est_cost to +inf when the relaxation cannot reach the goals.
  Candidate MakeCandidate(std::size_t node, std::vector<ActionId> prior, std::optional<ActionId> new_action,
                          const std::vector<ActionId>& steps) {
    const Node& n = nodes_[node];
    Candidate c;
    c.prior_actions = std::move(prior);
    c.new_action = new_action;

    std::vector<double> ready(n.state.size(), 0.0);
    if (!steps.empty()) {
      // Availability of each state atom: finish of its latest adder.
      std::vector<double> step_finish(steps.size());
      auto walk = static_cast<std::int64_t>(node);
      for (std::size_t i = steps.size(); i-- > 0; walk = nodes_[walk].parent) step_finish[i] = nodes_[walk].finish;
      for (std::size_t s = 0; s < n.state.size(); ++s) {
        for (std::size_t i = steps.size(); i-- > 0;) {
          const auto& adds = problem_.actions[steps[i]].add_effects;
          if (std::binary_search(adds.begin(), adds.end(), n.state[s])) {
            ready[s] = step_finish[i];
            break;
          }
        }
      }
    }

    std::span<const std::uint8_t> penalty;
    std::vector<ActionId> touched;
    if (ctx_.mode == EvaluationContext::Mode::kDiverse) {
      const auto& target = *ctx_.diverse;
      const std::vector<ActionId> current = WithAction(c.prior_actions, new_action);
      const double weight = DiversityWeight(ToDouble(target.d), JaccardDistance(current, target.reference_features.actions),
                                            target.plans_generated, target.k);
      if (weight > 0 && cfg_.alpha_diversity > 0) {
        for (ActionId a : target.reference_features.actions) {
          if (!Contains(current, a)) {
            penalty_[a] = 1;
            touched.push_back(a);
          }
        }
        penalty = penalty_;
      }
    }
    const RelaxedPlanResult relaxed = relaxed_.Compute(n.state, problem_.goals, penalty, ready);
    for (ActionId a : touched) penalty_[a] = 0;
    if (!relaxed.reachable) {
      c.est_cost = std::numeric_limits<double>::infinity();
      return c;
    }
    c.relaxed_actions = relaxed.actions;
    c.est_cost = n.g_cost + relaxed.cost;
    c.est_time = std::max(n.g_time, relaxed.makespan);
    return c;
  }

  void Push(std::size_t node, const Candidate& candidate) {
    nodes_[node].terms = EvaluateTerms(candidate, ctx_, cfg_);
    scales_changed_ |= scales_.Observe(nodes_[node].terms);
    open_.push_back({scales_.Score(nodes_[node].terms, cfg_), order_++, node});
    std::push_heap(open_.begin(), open_.end(), OpenAfter{});
    ++generated_;
  }

  void RescoreIfNeeded() {
    if (!scales_changed_) return;
    for (auto& entry : open_) entry.score = scales_.Score(nodes_[entry.node].terms, cfg_);
    std::make_heap(open_.begin(), open_.end(), OpenAfter{});
    scales_changed_ = false;
  }

  std::size_t PopNext() {
    if (cfg_.noise > 0 && open_.size() > 1 && UnitDraw(rng_) < cfg_.noise) {
      const std::size_t pick = static_cast<std::size_t>(UnitDraw(rng_) * static_cast<double>(open_.size()));
      const std::size_t node = open_[pick].node;
      open_[pick] = open_.back();
      open_.pop_back();
      std::make_heap(open_.begin(), open_.end(), OpenAfter{});
      return node;
    }
    std::pop_heap(open_.begin(), open_.end(), OpenAfter{});
    const std::size_t node = open_.back().node;
    open_.pop_back();
    return node;
  }

  bool Dominated(const ClosedKey& key, double cost, double time) {
    auto& labels = closed_[key];
    const double t = time_labels_ ? time : 0.0;
    for (const auto& [c0, t0] : labels) {
      if (c0 <= cost + 1e-12 && t0 <= t + 1e-12) return true;
    }
    std::erase_if(labels, [&](const auto& l) { return cost <= l.first && t <= l.second; });
    labels.emplace_back(cost, t);
    return false;
  }

  void Expand(std::size_t current, const std::vector<ActionId>& steps, const std::vector<double>& finishes) {
    std::vector<ActionId> prior = steps;
    std::sort(prior.begin(), prior.end());
    prior.erase(std::unique(prior.begin(), prior.end()), prior.end());
    const bool diverse = ctx_.mode == EvaluationContext::Mode::kDiverse;
    std::vector<ActionId> child_steps = steps;
    child_steps.push_back(0);
    for (ActionId a = 0; a < problem_.actions.size(); ++a) {
      const auto& pre = problem_.actions[a].preconditions;
      const AtomSet& state = nodes_[current].state;
      if (!std::includes(state.begin(), state.end(), pre.begin(), pre.end())) continue;
      const std::size_t child = AddChild(current, a, steps, finishes);
      ClosedKey key{nodes_[child].state, diverse ? WithAction(prior, a) : std::vector<ActionId>{}};
      if (Dominated(key, nodes_[child].g_cost, nodes_[child].g_time)) {
        nodes_.pop_back();
        continue;
      }
      child_steps.back() = a;
      const Candidate c = MakeCandidate(child, prior, a, child_steps);
      if (std::isinf(c.est_cost)) {
        nodes_.pop_back();
        continue;
      }
      Push(child, c);
    }
    RescoreIfNeeded();
  }

  bool Accepts(const Plan& plan) const {
    switch (ctx_.mode) {
      case EvaluationContext::Mode::kPlain:
        return true;
      case EvaluationContext::Mode::kDiverse: {
        return ctx_.diverse->Satisfied(ExtractFeatures(problem_, plan));
      }
      case EvaluationContext::Mode::kIcpEstimate: {
        std::vector<TimeCostPoint> extended = ctx_.icp->plan_set;
        extended.push_back(Project(problem_, plan));
        const double after = Icp(std::span<const TimeCostPoint>(extended), ctx_.icp->dist);
        return std::isinf(icp_before_) || after < icp_before_ - ctx_.icp->accept_epsilon;
      }
    }
    return false;
  }

  const GroundProblem& problem_;
  const EvaluationContext& ctx_;
  const SearchConfig& cfg_;
  RelaxedPlanner relaxed_;
  std::mt19937_64 rng_;
  std::vector<std::uint8_t> penalty_;
  std::vector<Node> nodes_;
  std::vector<OpenEntry> open_;
  std::unordered_map<ClosedKey, std::vector<std::pair<double, double>>, ClosedKeyHash> closed_;
  TermScales scales_;
  bool scales_changed_ = false;
  bool time_labels_ = false;
  double icp_before_ = std::numeric_limits<double>::infinity();
  std::uint64_t order_ = 0;
  std::size_t generated_ = 0;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace

void SearchConfig::Validate() const {
  for (double a : {alpha_exec, alpha_time, alpha_search, alpha_diversity}) {
    if (!(a >= 0)) throw std::invalid_argument("search coefficients must be nonnegative");
  }
  if (alpha_exec + alpha_time + alpha_search <= 0) {
    throw std::invalid_argument("at least one of alpha_exec, alpha_time, alpha_search must be positive");
  }
  if (objective_w && !(*objective_w >= 0 && *objective_w <= 1)) {
    throw std::invalid_argument("objective_w must lie in [0, 1]");
  }
  if (!(noise >= 0 && noise <= 1)) throw std::invalid_argument("noise must lie in [0, 1]");
  if (node_budget == 0 || !(time_budget_seconds > 0)) throw std::invalid_argument("budgets must be positive");
}

void to_json(nlohmann::json& j, const SearchConfig& cfg) {
  j = {{"alpha_exec", cfg.alpha_exec},
       {"alpha_time", cfg.alpha_time},
       {"alpha_search", cfg.alpha_search},
       {"alpha_diversity", cfg.alpha_diversity},
       {"noise", cfg.noise},
       {"restart_after", cfg.restart_after},
       {"seed", cfg.seed},
       {"node_budget", cfg.node_budget},
       {"time_budget", cfg.time_budget_seconds}};
  if (cfg.objective_w) j["objective_w"] = *cfg.objective_w;
}

void from_json(const nlohmann::json& j, SearchConfig& cfg) {
  cfg.alpha_exec = j.value("alpha_exec", cfg.alpha_exec);
  cfg.alpha_time = j.value("alpha_time", cfg.alpha_time);
  cfg.alpha_search = j.value("alpha_search", cfg.alpha_search);
  cfg.alpha_diversity = j.value("alpha_diversity", cfg.alpha_diversity);
  cfg.noise = j.value("noise", cfg.noise);
  cfg.restart_after = j.value("restart_after", cfg.restart_after);
  cfg.seed = j.value("seed", cfg.seed);
  cfg.node_budget = j.value("node_budget", cfg.node_budget);
  cfg.time_budget_seconds = j.value("time_budget", cfg.time_budget_seconds);
  if (j.contains("objective_w") && !j["objective_w"].is_null()) cfg.objective_w = j["objective_w"].get<double>();
  cfg.Validate();
}

bool DiverseTarget::Satisfied(const PlanFeatures& candidate) const {
  auto ok = [&](const PlanFeatures& other) {
    if (Distance(metric, candidate, other) < d) return false;
    return !gamma || GammaBalanced(candidate, other, d, *gamma);
  };
  return ok(reference_features) && std::all_of(constraints.begin(), constraints.end(), ok);
}

EvaluationContext EvaluationContext::Diverse(const GroundProblem& problem, Plan reference, Rational d,
                                             DistanceMetric metric, std::optional<int> gamma,
                                             std::size_t plans_generated, std::size_t k) {
  EvaluationContext ctx;
  ctx.mode = Mode::kDiverse;
  PlanFeatures features = ExtractFeatures(problem, reference);
  ctx.diverse = DiverseTarget{std::move(reference), std::move(features), std::move(d), metric, gamma, {},
                              plans_generated, std::max<std::size_t>(k, 1)};
  return ctx;
}

EvaluationContext EvaluationContext::IcpEstimate(std::vector<TimeCostPoint> plan_set, WeightDistribution dist) {
  EvaluationContext ctx;
  ctx.mode = Mode::kIcpEstimate;
  ctx.icp = IcpTarget{std::move(plan_set), dist, 1e-9};
  return ctx;
}

double DiversityWeight(double d, double current_distance, std::size_t plans_generated, std::size_t k) {
  const double base = d / std::max(current_distance, 0.01);
  return std::min(1.0, base * static_cast<double>(plans_generated) / static_cast<double>(std::max<std::size_t>(k, 1)));
}

EvalTerms EvaluateTerms(const Candidate& candidate, const EvaluationContext& ctx, const SearchConfig& cfg) {
  EvalTerms terms;
  terms.temporal = candidate.est_time;
  terms.search = static_cast<double>(candidate.relaxed_actions.size());
  if (ctx.mode == EvaluationContext::Mode::kIcpEstimate) {
    std::vector<TimeCostEstimate> points;
    for (const auto& p : ctx.icp->plan_set) points.push_back(ToEstimate(p));
    points.push_back({candidate.est_time, candidate.est_cost});
    terms.quality = Icp(std::span<const TimeCostEstimate>(points), ctx.icp->dist);
  } else if (cfg.objective_w) {
    terms.quality = Value(TimeCostEstimate{candidate.est_time, candidate.est_cost}, *cfg.objective_w);
  } else {
    terms.quality = candidate.est_cost;
  }
  if (ctx.mode == EvaluationContext::Mode::kDiverse) {
    const auto& target = *ctx.diverse;
    const auto& reference = target.reference_features.actions;
    const std::vector<ActionId> extension = WithAction(candidate.relaxed_actions, candidate.new_action);
    std::size_t reintroduced = 0;
    for (ActionId a : reference) {
      if (!Contains(candidate.prior_actions, a) && Contains(extension, a)) ++reintroduced;
    }
    terms.diversity = static_cast<double>(reintroduced);
    const std::vector<ActionId> current = WithAction(candidate.prior_actions, candidate.new_action);
    terms.alpha_diversity = DiversityWeight(ToDouble(target.d), JaccardDistance(current, reference),
                                            target.plans_generated, target.k);
  }
  return terms;
}

bool TermScales::Observe(const EvalTerms& terms) {
  const std::array<double, 4> raw{terms.quality, terms.temporal, terms.search, terms.diversity};
  bool changed = false;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (std::isfinite(raw[i]) && raw[i] > max_[i]) {
      max_[i] = raw[i];
      changed = true;
    }
  }
  return changed;
}

double TermScales::Score(const EvalTerms& terms, const SearchConfig& cfg) const {
  const double total = cfg.alpha_exec + cfg.alpha_time + cfg.alpha_search + cfg.alpha_diversity;
  auto scaled = [&](double value, std::size_t i) { return max_[i] > 0 ? value / max_[i] : 0.0; };
  const double score = cfg.alpha_exec * scaled(terms.quality, 0) + cfg.alpha_time * scaled(terms.temporal, 1) +
                       cfg.alpha_search * scaled(terms.search, 2) +
                       cfg.alpha_diversity * terms.alpha_diversity * scaled(terms.diversity, 3);
  return score / total;
}

double Evaluate(const Candidate& candidate, const EvaluationContext& ctx, const SearchConfig& cfg,
                TermScales& scales) {
  const EvalTerms terms = EvaluateTerms(candidate, ctx, cfg);
  scales.Observe(terms);
  return scales.Score(terms, cfg);
}

std::string StatusName(SolveResult::Status status) {
  switch (status) {
    case SolveResult::Status::kSolved:
      return "solved";
    case SolveResult::Status::kBudgetExhausted:
      return "budget-exhausted";
    case SolveResult::Status::kUnreachable:
      return "unreachable";
  }
  return "?";
}

SolveResult Solve(const GroundProblem& problem, const EvaluationContext& ctx, const SearchConfig& cfg,
                  const std::vector<ActionId>& start_prefix) {
  cfg.Validate();
  if (ctx.mode == EvaluationContext::Mode::kDiverse && !ctx.diverse) {
    throw std::invalid_argument("diverse context without a reference plan");
  }
  if (ctx.mode == EvaluationContext::Mode::kIcpEstimate && !ctx.icp) {
    throw std::invalid_argument("ICP context without a plan set");
  }
  return Solver(problem, ctx, cfg).Run(start_prefix);
}

}  // namespace plansets
