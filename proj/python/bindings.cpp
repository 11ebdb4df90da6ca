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

// Python bindings. Structured results cross the boundary as JSON text and
// are decoded by the pure-Python wrapper.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <stdexcept>

#include <string>
#include <utility>
#include <vector>

#include "plansets/bench.hpp"
#include "plansets/distance.hpp"
#include "plansets/genset.hpp"
#include "plansets/icp.hpp"
#include "plansets/pddl.hpp"
#include "plansets/plan.hpp"
#include "plansets/report.hpp"
#include "plansets/search.hpp"
#include "plansets/sexpr.hpp"

namespace py = pybind11;
using namespace plansets;

namespace {

using PyPoint = std::pair<double, double>;

std::vector<TimeCostPoint> ToPoints(const std::vector<PyPoint>& raw) {
  std::vector<TimeCostPoint> out;
  out.reserve(raw.size());
  for (const auto& [t, c] : raw) out.push_back({RationalFromDouble(t), RationalFromDouble(c)});
  return out;
}

Plan ToPlan(const GroundProblem& problem, const std::vector<std::string>& steps) { return PlanFromNames(problem, steps); }

GenConfig MakeConfig(std::size_t k, const std::string& d, const std::string& metric, const std::string& dist,
                     std::size_t k0, double timeout, std::uint64_t seed, double noise) {
  GenConfig cfg;
  cfg.k = k;
  cfg.d = ParseRational(d);
  cfg.metric = ParseMetric(metric);
  cfg.dist = WeightDistribution::Parse(dist);
  cfg.k0 = k0;
  cfg.time_bound_seconds = timeout;
  cfg.seed = seed;
  cfg.search.noise = noise;
  return cfg;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Native core of plansets";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  py::class_<GroundProblem>(m, "Problem")
      .def_property_readonly("num_actions", [](const GroundProblem& g) { return g.actions.size(); })
      .def_property_readonly("num_atoms", [](const GroundProblem& g) { return g.atoms.size(); })
      .def("to_json", [](const GroundProblem& g) { return GroundProblemToJson(g).dump(); });

  m.def(
      "load_problem",
      [](const std::string& domain, const std::string& problem, const std::string& durations) {
        return LoadProblemFiles(domain, problem, durations);
      }, py::arg("domain"), py::arg("problem"), py::arg("durations") = "");

  m.def(
      "icp",
      [](const std::vector<PyPoint>& points, const std::string& dist) {
        const auto pts = ToPoints(points);
        return Icp(std::span<const TimeCostPoint>(pts), WeightDistribution::Parse(dist));
      },
      py::arg("points"), py::arg("dist") = "uniform");
  m.def(
      "pareto",
      [](const std::vector<PyPoint>& points) {
        const auto pts = ToPoints(points);
        return ParetoIndices(std::span<const TimeCostPoint>(pts));
      },
      py::arg("points"));
  m.def(
      "hull",
      [](const std::vector<PyPoint>& points) {
        const auto pts = ToPoints(points);
        const HullResult hull = LowerConvexHull(std::span<const TimeCostPoint>(pts));
        std::vector<std::string> breakpoints;
        for (const auto& b : hull.breakpoints) breakpoints.push_back(ToString(b));
        return std::make_pair(hull.indices, breakpoints);
      },
      py::arg("points"));

  m.def(
      "distance",
      [](const GroundProblem& g, const std::vector<std::string>& a, const std::vector<std::string>& b,
         const std::string& metric) {
        const PlanFeatures fa = ExtractFeatures(g, ToPlan(g, a));
        const PlanFeatures fb = ExtractFeatures(g, ToPlan(g, b));
        return ToString(Distance(ParseMetric(metric), fa, fb));
      },
      py::arg("problem"), py::arg("a"), py::arg("b"), py::arg("metric") = "action");

  m.def(
      "solve",
      [](const GroundProblem& g, std::optional<double> w, std::uint64_t seed, double noise) {
        SearchConfig cfg;
        cfg.objective_w = w;
        cfg.seed = seed;
        cfg.noise = noise;
        const SolveResult r = Solve(g, EvaluationContext::Plain(), cfg);
        if (!r.plan) return py::object(py::none());
        return py::object(py::str(PlanFileToJson(g, *r.plan, "").dump()));
      },
      py::arg("problem"), py::arg("w") = std::nullopt, py::arg("seed") = 1, py::arg("noise") = 0.0);

  m.def(
      "generate",
      [](const GroundProblem& g, const std::string& method, std::size_t k, const std::string& d,
         const std::string& metric, const std::string& dist, std::size_t k0, double timeout, std::uint64_t seed,
         double noise) {
        if (!IsKnownMethod(method)) throw std::invalid_argument("unknown method: " + method);
        const GenConfig cfg = MakeConfig(k, d, metric, dist, k0, timeout, seed, noise);
        PlanSetResult r;
        {
          py::gil_scoped_release release;
          r = RunMethod(method, g, cfg);
        }
        return PlanSetResultToJson(g, r).dump();
      },
      py::arg("problem"), py::arg("method") = "hybrid", py::arg("k") = 4, py::arg("d") = "1/2",
      py::arg("metric") = "action", py::arg("dist") = "uniform", py::arg("k0") = 3, py::arg("timeout") = 600.0,
      py::arg("seed") = 1, py::arg("noise") = 0.0);

  m.def(
      "evaluate",
      [](const GroundProblem& g, const std::vector<std::vector<std::string>>& plans, const std::string& dist) {
        std::vector<Plan> resolved;
        for (const auto& p : plans) resolved.push_back(ToPlan(g, p));
        const std::vector<DistanceMetric> metrics{DistanceMetric::kAction, DistanceMetric::kCausalLink,
                                                  DistanceMetric::kStatePad, DistanceMetric::kStateHold};
        return EvalReportToJson(EvaluatePlans(g, resolved, WeightDistribution::Parse(dist), metrics)).dump();
      },
      py::arg("problem"), py::arg("plans"), py::arg("dist") = "uniform");
}
