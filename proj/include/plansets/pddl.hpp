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

#ifndef PLANSETS_PDDL_HPP_
#define PLANSETS_PDDL_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "plansets/rational.hpp"
#include "plansets/sexpr.hpp"

namespace plansets {

using AtomId = std::uint32_t;
using ActionId = std::uint32_t;
// Sorted, duplicate-free.
using AtomSet = std::vector<AtomId>;

struct TypedName {
  std::string name;
  std::string type = "object";
  bool operator==(const TypedName&) const = default;
};

// A predicate applied to variables ("?x") and/or constants.
struct Literal {
  std::string predicate;
  std::vector<std::string> args;
  bool operator==(const Literal&) const = default;
};

struct PredicateDecl {
  std::string name;
  std::vector<TypedName> parameters;
  bool operator==(const PredicateDecl&) const = default;
};

struct ActionSchema {
  std::string name;
  std::vector<TypedName> parameters;
  std::vector<Literal> preconditions;
  std::vector<Literal> add_effects;
  std::vector<Literal> delete_effects;
  Rational cost{1};
  Rational duration{1};
  bool operator==(const ActionSchema&) const = default;
};

struct DomainDescription {
  std::string name;
  std::vector<std::string> requirements;
  // Declared types with their parent ("object" at the root).
  std::vector<TypedName> types;
  std::vector<TypedName> constants;
  std::vector<PredicateDecl> predicates;
  bool has_total_cost = false;
  std::vector<ActionSchema> actions;
  bool operator==(const DomainDescription&) const = default;
};

struct GroundAction {
  // Canonical name, e.g. "(drive truck1 depot market)".
  std::string name;
  std::string schema;
  std::vector<std::string> args;
  AtomSet preconditions;
  AtomSet add_effects;
  AtomSet delete_effects;
  Rational cost{1};
  Rational duration{1};
};

struct GroundProblem {
  std::string domain_name;
  std::string problem_name;
  std::vector<TypedName> objects;
  // Atom names in lexicographic order; AtomId indexes this vector.
  std::vector<std::string> atoms;
  // Sorted lexicographically by name; ActionId indexes this vector.
  std::vector<GroundAction> actions;
  AtomSet init;
  AtomSet goals;

  std::optional<ActionId> FindAction(std::string_view name) const;
  std::optional<AtomId> FindAtom(std::string_view name) const;
  const std::string& AtomName(AtomId id) const { return atoms[id]; }

 private:
  friend void IndexProblem(GroundProblem&);
  std::map<std::string, ActionId, std::less<>> action_index_;
  std::map<std::string, AtomId, std::less<>> atom_index_;
};

DomainDescription ParseDomain(std::string_view text);
GroundProblem ParseProblem(std::string_view text, const DomainDescription& domain);

// Pretty-prints a domain; ParseDomain(PrintDomain(d)) == d.
std::string PrintDomain(const DomainDescription& domain);

// Applies a sidecar JSON object {"schema-name": duration, ...} to every
// grounding of the named schemas. Unknown names are reported through
// `warnings`; non-positive durations throw std::invalid_argument.
GroundProblem LoadDurations(const GroundProblem& problem, std::string_view sidecar,
                            std::vector<std::string>* warnings = nullptr);

// Rebuilds the name lookup tables; needed after editing atoms/actions by hand.
void IndexProblem(GroundProblem& problem);

std::string AtomSetToString(const GroundProblem& problem, const AtomSet& atoms);

nlohmann::json GroundProblemToJson(const GroundProblem& problem);

// Reads a whole file; throws std::runtime_error if it cannot be opened.
std::string ReadFile(const std::string& path);

// Convenience: domain + problem files, plus an optional durations sidecar.
GroundProblem LoadProblemFiles(const std::string& domain_path, const std::string& problem_path,
                               const std::string& durations_path = "",
                               std::vector<std::string>* warnings = nullptr);

}  // namespace plansets

#endif  // PLANSETS_PDDL_HPP_
