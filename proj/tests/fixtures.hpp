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


#ifndef PLANSETS_TESTS_FIXTURES_HPP_
#define PLANSETS_TESTS_FIXTURES_HPP_

#include <filesystem>
#include <string>
#include <vector>

#include "plansets/pddl.hpp"
#include "plansets/plan.hpp"

namespace plansets::testing {

inline std::string DataPath(const std::string& relative) { return std::string(PLANSETS_DATA_DIR) + "/" + relative; }

// Loads data/fixtures/<name>-domain.pddl and <name>-problem.pddl, plus the
// durations sidecar when one exists.
inline GroundProblem LoadFixture(const std::string& name) {
  const std::string base = DataPath("fixtures/" + name);
  const std::string durations = base + "-domain.durations.json";
  return LoadProblemFiles(base + "-domain.pddl", base + "-problem.pddl",
                          std::filesystem::exists(durations) ? durations : "");
}

inline GroundProblem FromText(const std::string& domain, const std::string& problem,
                              const std::string& durations = "") {
  GroundProblem ground = ParseProblem(problem, ParseDomain(domain));
  if (!durations.empty()) ground = LoadDurations(ground, durations);
  return ground;
}

inline Plan P(const GroundProblem& problem, const std::vector<std::string>& names) {
  return PlanFromNames(problem, names);
}

}  // namespace plansets::testing

#endif  // PLANSETS_TESTS_FIXTURES_HPP_
