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

#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "plansets/distance.hpp"

using namespace plansets;
using plansets::testing::LoadFixture;
using plansets::testing::P;

namespace {

template <typename T>
Rational Jaccard(const std::set<T>& a, const std::set<T>& b) {
  std::set<T> both;
  std::set<T> either(a.begin(), a.end());
  for (const T& x : b) {
    if (a.contains(x)) both.insert(x);
    either.insert(x);
  }
  if (either.empty()) return 0;
  return 1 - Rational(both.size(), either.size());
}

std::set<AtomId> AsSet(const AtomSet& s) { return {s.begin(), s.end()}; }

// Direct transcription of the padded and held state distances.
Rational StateOracle(const Trajectory& x, const Trajectory& y, bool hold) {
  const Trajectory& longer = x.states.size() >= y.states.size() ? x : y;
  const Trajectory& shorter = x.states.size() >= y.states.size() ? y : x;
  const std::size_t k = longer.states.size() - 1;
  const std::size_t kp = shorter.states.size() - 1;
  if (k == 0) return 0;
  Rational sum = 0;
  for (std::size_t i = 1; i <= k; ++i) {
    if (i <= kp) {
      sum += Jaccard(AsSet(longer.states[i]), AsSet(shorter.states[i]));
    } else if (hold) {
      sum += Jaccard(AsSet(longer.states[i]), AsSet(shorter.states[kp]));
    } else {
      sum += 1;
    }
  }
  return sum / k;
}

PlanFeatures WithActions(std::vector<ActionId> actions) {
  PlanFeatures f;
  f.actions = std::move(actions);
  return f;
}

struct Triad {
  GroundProblem g = LoadFixture("triad");
  PlanFeatures p1 = ExtractFeatures(g, P(g, {"(a1)", "(a2)", "(a3)"}));
  PlanFeatures p2 = ExtractFeatures(g, P(g, {"(a1)", "(a2)", "(a4)"}));
  PlanFeatures p3 = ExtractFeatures(g, P(g, {"(a5)", "(a6)"}));
};

}  // namespace

TEST_SUITE("distance") {
  TEST_CASE("triad golden values are exact") {
    const Triad t;
    CHECK(ActionDistance(t.p1, t.p2) == Rational(1, 2));
    CHECK(CausalLinkDistance(t.p1, t.p2) == Rational(4, 7));
    CHECK(ActionDistance(t.p1, t.p3) == Rational(1));
    CHECK(StateDistancePad(t.p1, t.p3) == Rational(13, 18));
    CHECK(StateDistanceHold(t.p1, t.p3) == Rational(1, 2));
  }

  TEST_CASE("library agrees with the direct formulas on the triad") {
    const Triad t;
    const std::vector<const PlanFeatures*> all{&t.p1, &t.p2, &t.p3};
    for (const auto* a : all) {
      for (const auto* b : all) {
        CHECK(ActionDistance(*a, *b) ==
              Jaccard(std::set<ActionId>(a->actions.begin(), a->actions.end()),
                      std::set<ActionId>(b->actions.begin(), b->actions.end())));
        CHECK(CausalLinkDistance(*a, *b) ==
              Jaccard(std::set<CausalLink>(a->causal_links.begin(), a->causal_links.end()),
                      std::set<CausalLink>(b->causal_links.begin(), b->causal_links.end())));
        CHECK(StateDistancePad(*a, *b) == StateOracle(a->trajectory, b->trajectory, false));
        CHECK(StateDistanceHold(*a, *b) == StateOracle(a->trajectory, b->trajectory, true));
      }
    }
  }

  TEST_CASE("disjoint action sets share only init-to-goal links") {
    const Triad t;
    // p1 and p3 share no action, hence no link with an action endpoint.
    CHECK(CausalLinkDistance(t.p1, t.p3) == Rational(1));
  }

  TEST_CASE("identity") {
    const Triad t;
    for (const auto* p : {&t.p1, &t.p2, &t.p3}) {
      for (DistanceMetric m : {DistanceMetric::kAction, DistanceMetric::kCausalLink, DistanceMetric::kStatePad,
                               DistanceMetric::kStateHold}) {
        CHECK(Distance(m, *p, *p) == 0);
      }
    }
  }

  TEST_CASE("empty plan against a plan of length k") {
    const Triad t;
    PlanFeatures empty;
    empty.trajectory.states.push_back(t.g.init);
    CHECK(StateDistancePad(empty, t.p1) == 1);
    CHECK(StateDistancePad(t.p1, empty) == 1);
    CHECK(StateDistancePad(empty, empty) == 0);
    CHECK(StateDistanceHold(empty, empty) == 0);
    CHECK(ActionDistance(empty, empty) == 0);
  }

  TEST_CASE("equal-length plans: pad and hold agree") {
    const Triad t;
    CHECK(StateDistancePad(t.p1, t.p2) == StateDistanceHold(t.p1, t.p2));
  }

  TEST_CASE("state delta") {
    CHECK(StateDelta({1}, {1}) == 0);
    CHECK(StateDelta({1}, {2}) == 1);
    CHECK(StateDelta({1, 2}, {2, 3}) == Rational(2, 3));
    CHECK(StateDelta({}, {}) == 0);
  }

  TEST_CASE("set quality aggregates") {
    // Pairwise action distances 1/5, 3/5 and 2/5.
    const std::vector<PlanFeatures> plans{WithActions({0, 1, 2, 3}), WithActions({0, 1, 2, 3, 4}),
                                          WithActions({0, 1, 4})};
    CHECK(SetQuality(plans, DistanceMetric::kAction, Aggregate::kMin) == Rational(1, 5));
    CHECK(SetQuality(plans, DistanceMetric::kAction, Aggregate::kMax) == Rational(3, 5));
    CHECK(SetQuality(plans, DistanceMetric::kAction, Aggregate::kAvg) == Rational(2, 5));
    const std::vector<PlanFeatures> dup{plans[0], plans[0]};
    CHECK(SetQuality(dup, DistanceMetric::kAction, Aggregate::kMin) == 0);
    CHECK_THROWS_AS(SetQuality(std::span<const PlanFeatures>(plans.data(), 1), DistanceMetric::kAction,
                               Aggregate::kMin),
                    std::invalid_argument);
  }

  TEST_CASE("triad set minimum") {
    const Triad t;
    const std::vector<PlanFeatures> set{t.p1, t.p2, t.p3};
    const Rational d23 = ActionDistance(t.p2, t.p3);
    CHECK(d23 == 1);
    CHECK(SetQuality(set, DistanceMetric::kAction, Aggregate::kMin) == std::min({Rational(1, 2), Rational(1), d23}));
  }

  TEST_CASE("gamma balance") {
    // Strict subset: nothing only in the first plan.
    CHECK_FALSE(GammaBalanced(WithActions({0, 1}), WithActions({0, 1, 2}), Rational(1, 10), 1));
    // |p-q| = |q-p| = 3 over a union of 10: 0.3 per side, distance 0.6.
    const PlanFeatures p = WithActions({0, 1, 2, 3, 4, 5, 6});
    const PlanFeatures q = WithActions({0, 1, 2, 3, 7, 8, 9});
    CHECK(ActionDistance(p, q) == Rational(3, 5));
    CHECK(GammaBalanced(p, q, Rational(3, 5), 2));
    // gamma = 1 needs each side at d, so the total must reach 2d.
    CHECK_FALSE(GammaBalanced(p, q, Rational(3, 5), 1));
    CHECK(GammaBalanced(p, q, Rational(3, 10), 1));
    CHECK_THROWS(GammaBalanced(p, q, Rational(1, 2), 0));
  }

  TEST_CASE("randomized metric properties") {
    std::mt19937_64 rng(42);
    auto random_set = [&](std::size_t universe) {
      std::vector<ActionId> out;
      for (ActionId a = 0; a < universe; ++a) {
        if (rng() % 2) out.push_back(a);
      }
      return out;
    };
    auto random_features = [&] {
      PlanFeatures f = WithActions(random_set(8));
      for (ActionId a : random_set(6)) f.causal_links.push_back({static_cast<StepRef>(a) - 1, a, kGoalStep});
      std::sort(f.causal_links.begin(), f.causal_links.end());
      const std::size_t len = rng() % 5;
      for (std::size_t i = 0; i <= len; ++i) {
        std::vector<ActionId> s = random_set(5);
        f.trajectory.states.push_back(AtomSet(s.begin(), s.end()));
      }
      return f;
    };
    for (int i = 0; i < 300; ++i) {
      const PlanFeatures a = random_features();
      const PlanFeatures b = random_features();
      for (DistanceMetric m : {DistanceMetric::kAction, DistanceMetric::kCausalLink, DistanceMetric::kStatePad,
                               DistanceMetric::kStateHold}) {
        const Rational ab = Distance(m, a, b);
        CHECK(ab == Distance(m, b, a));
        CHECK(ab >= 0);
        CHECK(ab <= 1);
      }
      CHECK(StateDistancePad(a, b) == StateOracle(a.trajectory, b.trajectory, false));
      CHECK(StateDistanceHold(a, b) == StateOracle(a.trajectory, b.trajectory, true));
      const OneSidedActionDistance split = SplitActionDistance(a, b);
      CHECK(split.only_in_first + split.only_in_second == ActionDistance(a, b));
    }
  }

  TEST_CASE("metric names") {
    for (const char* name : {"action", "clink", "state-pad", "state-hold"}) CHECK(MetricName(ParseMetric(name)) == name);
    CHECK_THROWS(ParseMetric("euclid"));
  }
}
