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

#include "doctest.h"
#include "fixtures.hpp"
#include "plansets/relaxed.hpp"
#include "plansets/search.hpp"

using namespace plansets;
using plansets::testing::DataPath;
using plansets::testing::FromText;
using plansets::testing::LoadFixture;
using plansets::testing::P;

namespace {

std::vector<std::uint8_t> PenaltyOn(const GroundProblem& g, const std::string& action) {
  std::vector<std::uint8_t> penalty(g.actions.size(), 0);
  penalty[g.FindAction(action).value()] = 1;
  return penalty;
}

GroundProblem Corpus(const std::string& domain, const std::string& problem) {
  const std::string dir = DataPath("corpus/" + domain + "/");
  return LoadProblemFiles(dir + "domain.pddl", dir + problem + ".pddl", dir + "domain.durations.json");
}

}  // namespace

TEST_SUITE("search") {
  TEST_CASE("relaxed plan of satisfied goals is empty") {
    const GroundProblem g = LoadFixture("chain");
    const RelaxedPlanResult r = RelaxedPlan(g, g.init, g.init);
    CHECK(r.reachable);
    CHECK(r.actions.empty());
    CHECK(r.cost == 0);
    CHECK(r.makespan == 0);
  }

  TEST_CASE("relaxed plan backchains a chain") {
    const GroundProblem g = FromText(R"((define (domain ab) (:predicates (a) (b) (c))
      (:action ab :parameters () :precondition (a) :effect (b))
      (:action bc :parameters () :precondition (b) :effect (c))
      (:action ca :parameters () :precondition (c) :effect (a))))",
                                     "(define (problem ab1) (:domain ab) (:init (a)) (:goal (c)))");
    const RelaxedPlanResult r = RelaxedPlan(g, g.init, g.goals);
    CHECK(r.reachable);
    CHECK(r.actions == std::vector<ActionId>{g.FindAction("(ab)").value(), g.FindAction("(bc)").value()});
    CHECK(r.cost == doctest::Approx(2));
    CHECK(r.makespan == doctest::Approx(2));
  }

  TEST_CASE("penalty switches to the dearer supporter") {
    const GroundProblem g = LoadFixture("two-supporter");
    const ActionId cheap = g.FindAction("(cheap)").value();
    const ActionId dear = g.FindAction("(dear)").value();
    CHECK(RelaxedPlan(g, g.init, g.goals).actions == std::vector<ActionId>{cheap});
    // Cost 1 + penalty 1 exceeds 1.5.
    CHECK(RelaxedPlan(g, g.init, g.goals, PenaltyOn(g, "(cheap)")).actions == std::vector<ActionId>{dear});
    // Penalties shape the choice but not the reported cost.
    CHECK(RelaxedPlan(g, g.init, g.goals, PenaltyOn(g, "(cheap)")).cost == doctest::Approx(1.5));
  }

  TEST_CASE("unreachable goals are signalled") {
    const GroundProblem g = LoadFixture("chain");
    AtomSet nothing;
    CHECK_FALSE(RelaxedPlan(g, nothing, g.goals).reachable);
  }

  TEST_CASE("relaxed makespan follows durations") {
    const GroundProblem g = LoadFixture("logistics");
    const RelaxedPlanResult r = RelaxedPlan(g, g.init, g.goals);
    REQUIRE(r.reachable);
    // Supporters are picked by cost (the truck route: 1 + 2 + 2 + 1) while
    // times take the earliest achiever: load and fly in parallel, then unload.
    CHECK(r.cost == doctest::Approx(6));
    CHECK(r.makespan == doctest::Approx(3));
  }

  TEST_CASE("zero diversity weight leaves the score unchanged") {
    const GroundProblem g = LoadFixture("two-route");
    SearchConfig cfg;
    cfg.alpha_diversity = 0;
    const Candidate c{{}, g.FindAction("(a1)"), {g.FindAction("(a2)").value()}, 2.0, 4.0};
    const EvaluationContext diverse =
        EvaluationContext::Diverse(g, P(g, {"(a1)", "(a2)"}), Rational(1, 2), DistanceMetric::kAction);
    TermScales plain_scales;
    TermScales diverse_scales;
    CHECK(Evaluate(c, EvaluationContext::Plain(), cfg, plain_scales) ==
          Evaluate(c, diverse, cfg, diverse_scales));
  }

  TEST_CASE("diversity term counts reintroduced reference actions") {
    const GroundProblem g = LoadFixture("two-route");
    const ActionId a1 = g.FindAction("(a1)").value();
    const ActionId a2 = g.FindAction("(a2)").value();
    const ActionId b1 = g.FindAction("(b1)").value();
    const EvaluationContext ctx = EvaluationContext::Diverse(g, P(g, {"(a1)", "(a2)"}), Rational(1, 2));
    const SearchConfig cfg;
    CHECK(EvaluateTerms(Candidate{{}, a1, {a2}, 2, 4}, ctx, cfg).diversity == 2);
    CHECK(EvaluateTerms(Candidate{{}, b1, {g.FindAction("(b2)").value()}, 3, 4}, ctx, cfg).diversity == 0);
  }

  TEST_CASE("ICP estimate on an empty set is the single-plan closed form") {
    const EvaluationContext ctx = EvaluationContext::IcpEstimate({}, WeightDistribution::Uniform());
    const EvalTerms t = EvaluateTerms(Candidate{{}, std::nullopt, {}, 5.0, 12.0}, ctx, SearchConfig{});
    CHECK(t.quality == doctest::Approx(5 + (12 - 5) / 2.0));
  }

  TEST_CASE("ICP estimate prefers the completion that extends the hull") {
    const EvaluationContext ctx =
        EvaluationContext::IcpEstimate({{6, 22}, {10, 12}}, WeightDistribution::Uniform());
    const EvalTerms cheap_slow = EvaluateTerms(Candidate{{}, std::nullopt, {}, 5.0, 12.0}, ctx, SearchConfig{});
    const EvalTerms fast_dear = EvaluateTerms(Candidate{{}, std::nullopt, {}, 25.0, 4.0}, ctx, SearchConfig{});
    CHECK(cheap_slow.quality < fast_dear.quality);
  }

  TEST_CASE("diversity weight schedule") {
    CHECK(DiversityWeight(0.5, 0.25, 1, 4) == doctest::Approx(0.5));
    CHECK(DiversityWeight(0.5, 0.0, 1, 4) == doctest::Approx(1.0));
    double last = 0;
    for (std::size_t n = 1; n < 20; ++n) {
      const double w = DiversityWeight(0.4, 0.3, n, 4);
      CHECK(w >= last);
      CHECK(w <= 1);
      last = w;
    }
  }

  TEST_CASE("trivial problem gives the empty plan") {
    const GroundProblem g = FromText(R"((define (domain t) (:predicates (p))
      (:action a :parameters () :precondition (p) :effect (p))))",
                                     "(define (problem t1) (:domain t) (:init (p)) (:goal (p)))");
    const SolveResult r = Solve(g, EvaluationContext::Plain(), SearchConfig{});
    REQUIRE(r.plan);
    CHECK(r.plan->steps.empty());
  }

  TEST_CASE("objective weight trades cost for makespan") {
    const GroundProblem g = LoadFixture("logistics");
    SearchConfig fast;
    fast.objective_w = 1.0;
    SearchConfig cheap;
    cheap.objective_w = 0.0;
    const SolveResult a = Solve(g, EvaluationContext::Plain(), fast);
    const SolveResult b = Solve(g, EvaluationContext::Plain(), cheap);
    REQUIRE(a.plan);
    REQUIRE(b.plan);
    CHECK(Project(g, *a.plan).time <= Project(g, *b.plan).time);
    CHECK(Project(g, *a.plan) == TimeCostPoint{4, 22});
    CHECK(Project(g, *b.plan) == TimeCostPoint{22, 6});
  }

  TEST_CASE("diverse context finds a plan away from the reference") {
    const GroundProblem g = LoadFixture("two-route");
    const Plan reference = P(g, {"(a1)", "(a2)"});
    const SolveResult r =
        Solve(g, EvaluationContext::Diverse(g, reference, Rational(1, 2)), SearchConfig{});
    REQUIRE(r.plan);
    CHECK(ActionDistance(ExtractFeatures(g, *r.plan), ExtractFeatures(g, reference)) >= Rational(1, 2));
  }

  TEST_CASE("unsatisfiable diverse target exhausts the space") {
    const GroundProblem g = LoadFixture("single-route");
    const SolveResult r =
        Solve(g, EvaluationContext::Diverse(g, P(g, {"(x1)", "(y)"}), Rational(9, 10)), SearchConfig{});
    CHECK_FALSE(r.plan);
    CHECK(r.status == SolveResult::Status::kUnreachable);
  }

  TEST_CASE("fixed seed gives identical results") {
    const GroundProblem g = Corpus("zeno-lite", "p02");
    SearchConfig cfg;
    cfg.noise = 0.3;
    cfg.seed = 99;
    cfg.record_trace = true;
    const SolveResult a = Solve(g, EvaluationContext::Plain(), cfg);
    const SolveResult b = Solve(g, EvaluationContext::Plain(), cfg);
    REQUIRE(a.plan);
    REQUIRE(b.plan);
    CHECK(a.plan->steps == b.plan->steps);
    CHECK(a.trace == b.trace);
    CHECK(a.expanded == b.expanded);
  }

  TEST_CASE("returned plans always validate") {
    for (const auto& [domain, problem] : std::vector<std::pair<std::string, std::string>>{
             {"zeno-lite", "p01"}, {"delivery", "p02"}, {"driverlog-lite", "p01"}}) {
      const GroundProblem g = Corpus(domain, problem);
      for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        SearchConfig cfg;
        cfg.noise = 0.5;
        cfg.seed = seed;
        const SolveResult r = Solve(g, EvaluationContext::Plain(), cfg);
        REQUIRE(r.plan);
        CHECK_NOTHROW(Simulate(g, *r.plan));
      }
    }
  }

  TEST_CASE("zero diversity weight follows the plain search until it succeeds") {
    const GroundProblem g = LoadFixture("two-route");
    SearchConfig cfg;
    cfg.alpha_diversity = 0;
    cfg.record_trace = true;
    const SolveResult plain = Solve(g, EvaluationContext::Plain(), cfg);
    const SolveResult diverse =
        Solve(g, EvaluationContext::Diverse(g, P(g, {"(b1)", "(b2)"}), Rational(1, 2)), cfg);
    REQUIRE(plain.trace.size() <= diverse.trace.size());
    CHECK(std::equal(plain.trace.begin(), plain.trace.end(), diverse.trace.begin()));
  }

  TEST_CASE("budget exhaustion is reported") {
    const GroundProblem g = Corpus("driverlog-lite", "p03");
    SearchConfig cfg;
    cfg.node_budget = 3;
    const SolveResult r = Solve(g, EvaluationContext::Plain(), cfg);
    CHECK_FALSE(r.plan);
    CHECK(r.status == SolveResult::Status::kBudgetExhausted);
  }

  TEST_CASE("config json round trip and validation") {
    SearchConfig cfg;
    cfg.alpha_time = 0.25;
    cfg.objective_w = 0.75;
    cfg.noise = 0.1;
    const nlohmann::json j = cfg;
    const SearchConfig back = j.get<SearchConfig>();
    CHECK(back.alpha_time == 0.25);
    CHECK(back.objective_w == 0.75);
    CHECK(back.noise == 0.1);
    SearchConfig bad;
    bad.noise = 2;
    CHECK_THROWS(bad.Validate());
  }
}
