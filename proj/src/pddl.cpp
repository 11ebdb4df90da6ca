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

#include "plansets/pddl.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace plansets {
namespace {

const std::set<std::string, std::less<>> kSupportedRequirements = {":strips", ":typing",
                                                                   ":action-costs"};

bool IsVariable(std::string_view s) { return !s.empty() && s.front() == '?'; }

// Parses "a b - t c d - u e" into typed names (untyped -> "object").
std::vector<TypedName> ParseTypedList(const std::vector<SExpr>& items, std::size_t begin) {
  std::vector<TypedName> out;
  std::size_t pending_from = 0;
  for (std::size_t i = begin; i < items.size(); ++i) {
    const SExpr& item = items[i];
    if (item.is_list) item.Fail("expected a name in typed list");
    if (item.symbol == "-") {
      if (i + 1 >= items.size()) item.Fail("missing type after '-'");
      const SExpr& type = items[i + 1];
      if (type.HasHead("either")) type.Fail("'either' types are not supported");
      if (type.is_list) type.Fail("expected a type name");
      for (std::size_t j = pending_from; j < out.size(); ++j) out[j].type = type.symbol;
      pending_from = out.size();
      ++i;
      continue;
    }
    out.push_back({item.symbol, "object"});
  }
  return out;
}

const SExpr& ExpectList(const SExpr& e, const char* what) {
  if (!e.is_list) e.Fail(std::string("expected ") + what);
  return e;
}

class DomainParser {
 public:
  DomainDescription Parse(const SExpr& root) {
    if (!root.HasHead("define") || root.items.size() < 2) root.Fail("expected (define (domain ...) ...)");
    const SExpr& header = root.items[1];
    if (!header.HasHead("domain") || header.items.size() != 2 || header.items[1].is_list) {
      header.Fail("expected (domain <name>)");
    }
    domain_.name = header.items[1].symbol;
    for (std::size_t i = 2; i < root.items.size(); ++i) {
      const SExpr& section = ExpectList(root.items[i], "a domain section");
      if (section.items.empty() || section.items.front().is_list) section.Fail("empty section");
      const std::string& key = section.items.front().symbol;
      if (key == ":requirements") {
        ParseRequirements(section);
      } else if (key == ":types") {
        ParseTypes(section);
      } else if (key == ":constants") {
        domain_.constants = ParseTypedList(section.items, 1);
      } else if (key == ":predicates") {
        ParsePredicates(section);
      } else if (key == ":functions") {
        ParseFunctions(section);
      } else if (key == ":action") {
        actions_.push_back(&section);
      } else {
        section.Fail("unsupported domain section '" + key + "'");
      }
    }
    for (const SExpr* action : actions_) ParseAction(*action);
    return std::move(domain_);
  }

 private:
  void ParseRequirements(const SExpr& section) {
    for (std::size_t i = 1; i < section.items.size(); ++i) {
      const SExpr& flag = section.items[i];
      if (flag.is_list || !kSupportedRequirements.contains(flag.symbol)) {
        flag.Fail("unsupported requirement '" + flag.symbol + "'");
      }
      domain_.requirements.push_back(flag.symbol);
    }
  }

  void ParseTypes(const SExpr& section) {
    domain_.types = ParseTypedList(section.items, 1);
    std::set<std::string> known = {"object"};
    for (const auto& t : domain_.types) known.insert(t.name);
    // A parent used without its own declaration is taken as a subtype of object.
    const std::size_t declared = domain_.types.size();
    for (std::size_t i = 0; i < declared; ++i) {
      const std::string parent = domain_.types[i].type;
      if (known.insert(parent).second) domain_.types.push_back({parent, "object"});
    }
  }

  void ParsePredicates(const SExpr& section) {
    for (std::size_t i = 1; i < section.items.size(); ++i) {
      const SExpr& decl = ExpectList(section.items[i], "a predicate declaration");
      if (decl.items.empty() || decl.items.front().is_list) decl.Fail("malformed predicate");
      PredicateDecl pred{decl.items.front().symbol, ParseTypedList(decl.items, 1)};
      for (const auto& p : pred.parameters) {
        if (!IsVariable(p.name)) decl.Fail("predicate parameters must be variables");
        CheckType(decl, p.type);
      }
      if (FindPredicate(pred.name)) decl.Fail("duplicate predicate '" + pred.name + "'");
      domain_.predicates.push_back(std::move(pred));
    }
  }

  void ParseFunctions(const SExpr& section) {
    for (std::size_t i = 1; i < section.items.size(); ++i) {
      const SExpr& item = section.items[i];
      if (item.is_list) {
        if (item.items.size() != 1 || !item.items.front().IsSymbol("total-cost")) {
          item.Fail("numeric fluents other than total-cost are not supported");
        }
        domain_.has_total_cost = true;
      } else if (item.symbol == "-") {
        if (i + 1 >= section.items.size() || !section.items[i + 1].IsSymbol("number")) {
          item.Fail("functions must be of type number");
        }
        ++i;
      } else {
        item.Fail("malformed function declaration");
      }
    }
  }

  void ParseAction(const SExpr& section) {
    if (section.items.size() < 2 || section.items[1].is_list) section.Fail("expected action name");
    ActionSchema schema;
    schema.name = section.items[1].symbol;
    for (const auto& existing : domain_.actions) {
      if (existing.name == schema.name) section.Fail("duplicate action name '" + schema.name + "'");
    }
    bool cost_seen = false;
    for (std::size_t i = 2; i < section.items.size(); i += 2) {
      const SExpr& key = section.items[i];
      if (key.is_list || i + 1 >= section.items.size()) key.Fail("malformed action body");
      const SExpr& value = section.items[i + 1];
      if (key.symbol == ":parameters") {
        schema.parameters = ParseTypedList(ExpectList(value, "a parameter list").items, 0);
        for (const auto& p : schema.parameters) {
          if (!IsVariable(p.name)) value.Fail("action parameters must be variables");
          CheckType(value, p.type);
        }
      } else if (key.symbol == ":precondition") {
        ParsePrecondition(value, schema);
      } else if (key.symbol == ":effect") {
        ParseEffect(value, schema, cost_seen);
      } else {
        key.Fail("unsupported action field '" + key.symbol + "'");
      }
    }
    for (const auto& add : schema.add_effects) {
      if (std::find(schema.delete_effects.begin(), schema.delete_effects.end(), add) !=
          schema.delete_effects.end()) {
        section.Fail("action '" + schema.name + "' adds and deletes the same literal");
      }
    }
    domain_.actions.push_back(std::move(schema));
  }

  void ParsePrecondition(const SExpr& e, ActionSchema& schema) {
    if (e.is_list && e.items.empty()) return;
    if (e.HasHead("and")) {
      for (std::size_t i = 1; i < e.items.size(); ++i) ParsePrecondition(e.items[i], schema);
      return;
    }
    if (e.HasHead("not")) e.Fail("negative preconditions are not supported");
    for (const char* head : {"or", "imply", "exists", "forall", "when", "="}) {
      if (e.HasHead(head)) e.Fail(std::string("'") + head + "' in preconditions is not supported");
    }
    schema.preconditions.push_back(ParseLiteral(e, schema));
  }

  void ParseEffect(const SExpr& e, ActionSchema& schema, bool& cost_seen) {
    if (e.is_list && e.items.empty()) return;
    if (e.HasHead("and")) {
      for (std::size_t i = 1; i < e.items.size(); ++i) ParseEffect(e.items[i], schema, cost_seen);
      return;
    }
    if (e.HasHead("when") || e.HasHead("forall")) e.Fail("conditional effects are not supported");
    if (e.HasHead("not")) {
      if (e.items.size() != 2) e.Fail("malformed negative effect");
      schema.delete_effects.push_back(ParseLiteral(e.items[1], schema));
      return;
    }
    if (e.HasHead("increase")) {
      if (e.items.size() != 3 || !e.items[1].is_list || e.items[1].items.size() != 1 ||
          !e.items[1].items.front().IsSymbol("total-cost")) {
        e.Fail("numeric fluents other than total-cost are not supported");
      }
      if (e.items[2].is_list) e.Fail("action costs must be numeric constants");
      if (cost_seen) e.Fail("multiple total-cost effects");
      Rational cost;
      try {
        cost = ParseRational(e.items[2].symbol);
      } catch (const std::invalid_argument&) {
        e.items[2].Fail("malformed cost '" + e.items[2].symbol + "'");
      }
      if (cost < 0) e.items[2].Fail("action costs must be nonnegative");
      schema.cost = cost;
      cost_seen = true;
      return;
    }
    for (const char* head : {"decrease", "assign", "scale-up", "scale-down"}) {
      if (e.HasHead(head)) e.Fail("numeric fluents other than total-cost are not supported");
    }
    schema.add_effects.push_back(ParseLiteral(e, schema));
  }

  Literal ParseLiteral(const SExpr& e, const ActionSchema& schema) {
    if (!e.is_list || e.items.empty() || e.items.front().is_list) e.Fail("expected an atom");
    Literal lit{e.items.front().symbol, {}};
    const PredicateDecl* pred = FindPredicate(lit.predicate);
    if (!pred) e.Fail("undeclared predicate '" + lit.predicate + "'");
    if (pred->parameters.size() + 1 != e.items.size()) e.Fail("wrong arity for '" + lit.predicate + "'");
    for (std::size_t i = 1; i < e.items.size(); ++i) {
      const SExpr& arg = e.items[i];
      if (arg.is_list) arg.Fail("nested terms are not supported");
      if (IsVariable(arg.symbol)) {
        const bool declared = std::any_of(schema.parameters.begin(), schema.parameters.end(),
                                          [&](const TypedName& p) { return p.name == arg.symbol; });
        if (!declared) arg.Fail("undeclared variable '" + arg.symbol + "'");
      } else {
        const bool constant = std::any_of(domain_.constants.begin(), domain_.constants.end(),
                                          [&](const TypedName& c) { return c.name == arg.symbol; });
        if (!constant) arg.Fail("undeclared constant '" + arg.symbol + "'");
      }
      lit.args.push_back(arg.symbol);
    }
    return lit;
  }

  const PredicateDecl* FindPredicate(std::string_view name) const {
    for (const auto& p : domain_.predicates) {
      if (p.name == name) return &p;
    }
    return nullptr;
  }

  void CheckType(const SExpr& where, const std::string& type) const {
    if (type == "object") return;
    for (const auto& t : domain_.types) {
      if (t.name == type) return;
    }
    where.Fail("undeclared type '" + type + "'");
  }

  DomainDescription domain_;
  std::vector<const SExpr*> actions_;
};

std::string AtomString(const std::string& predicate, const std::vector<std::string>& args) {
  std::string out = "(" + predicate;
  for (const auto& a : args) out += " " + a;
  return out + ")";
}

bool IsSubtype(const DomainDescription& domain, std::string type, const std::string& ancestor) {
  for (int guard = 0; guard < 1000; ++guard) {
    if (type == ancestor || ancestor == "object") return true;
    if (type == "object") return false;
    auto it = std::find_if(domain.types.begin(), domain.types.end(),
                           [&](const TypedName& t) { return t.name == type; });
    if (it == domain.types.end()) return false;
    type = it->type;
  }
  throw std::runtime_error("cyclic type hierarchy");
}

std::string FormatRational(const Rational& value) {
  if (auto decimal = ToDecimalString(value)) return *decimal;
  return ToString(value);
}

void PrintTypedList(std::ostringstream& out, const std::vector<TypedName>& names) {
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i) out << ' ';
    out << names[i].name;
    // A trailing untyped run may stay bare; anything else names its type,
    // since a bare name takes the type of the next typed group.
    const bool tail_untyped = std::all_of(names.begin() + static_cast<std::ptrdiff_t>(i), names.end(),
                                          [](const TypedName& n) { return n.type == "object"; });
    if (!tail_untyped) out << " - " << names[i].type;
  }
}

void PrintLiteral(std::ostringstream& out, const Literal& lit) {
  out << AtomString(lit.predicate, lit.args);
}

}  // namespace

std::optional<ActionId> GroundProblem::FindAction(std::string_view name) const {
  auto it = action_index_.find(name);
  if (it == action_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<AtomId> GroundProblem::FindAtom(std::string_view name) const {
  auto it = atom_index_.find(name);
  if (it == atom_index_.end()) return std::nullopt;
  return it->second;
}

void IndexProblem(GroundProblem& problem) {
  problem.action_index_.clear();
  problem.atom_index_.clear();
  for (ActionId i = 0; i < problem.actions.size(); ++i) problem.action_index_.emplace(problem.actions[i].name, i);
  for (AtomId i = 0; i < problem.atoms.size(); ++i) problem.atom_index_.emplace(problem.atoms[i], i);
}

DomainDescription ParseDomain(std::string_view text) { return DomainParser().Parse(ParseSExpr(text)); }

GroundProblem ParseProblem(std::string_view text, const DomainDescription& domain) {
  const SExpr root = ParseSExpr(text);
  if (!root.HasHead("define") || root.items.size() < 2) root.Fail("expected (define (problem ...) ...)");
  const SExpr& header = root.items[1];
  if (!header.HasHead("problem") || header.items.size() != 2 || header.items[1].is_list) {
    header.Fail("expected (problem <name>)");
  }
  GroundProblem problem;
  problem.problem_name = header.items[1].symbol;
  problem.domain_name = domain.name;

  std::vector<TypedName> objects = domain.constants;
  const SExpr* init_section = nullptr;
  const SExpr* goal_section = nullptr;
  bool domain_seen = false;
  for (std::size_t i = 2; i < root.items.size(); ++i) {
    const SExpr& section = ExpectList(root.items[i], "a problem section");
    if (section.items.empty() || section.items.front().is_list) section.Fail("empty section");
    const std::string& key = section.items.front().symbol;
    if (key == ":domain") {
      if (section.items.size() != 2 || section.items[1].is_list) section.Fail("expected (:domain <name>)");
      if (section.items[1].symbol != domain.name) {
        section.Fail("problem is for domain '" + section.items[1].symbol + "', not '" + domain.name + "'");
      }
      domain_seen = true;
    } else if (key == ":objects") {
      for (auto& obj : ParseTypedList(section.items, 1)) {
        if (obj.type != "object" &&
            std::none_of(domain.types.begin(), domain.types.end(),
                         [&](const TypedName& t) { return t.name == obj.type; })) {
          section.Fail("undeclared type '" + obj.type + "'");
        }
        objects.push_back(std::move(obj));
      }
    } else if (key == ":init") {
      init_section = &section;
    } else if (key == ":goal") {
      goal_section = &section;
    } else if (key == ":metric") {
      // Plans are always evaluated on (makespan, total-cost).
    } else if (key == ":requirements") {
      for (std::size_t j = 1; j < section.items.size(); ++j) {
        if (!kSupportedRequirements.contains(section.items[j].symbol)) {
          section.items[j].Fail("unsupported requirement '" + section.items[j].symbol + "'");
        }
      }
    } else {
      section.Fail("unsupported problem section '" + key + "'");
    }
  }
  if (!domain_seen) root.Fail("problem does not name its domain");
  if (!goal_section) root.Fail("problem has no :goal");
  {
    std::set<std::string> seen;
    for (const auto& o : objects) {
      if (!seen.insert(o.name).second) root.Fail("duplicate object '" + o.name + "'");
    }
  }
  problem.objects = objects;

  auto ground_atom = [&](const SExpr& e) {
    if (!e.is_list || e.items.empty() || e.items.front().is_list) e.Fail("expected a ground atom");
    const std::string& pred_name = e.items.front().symbol;
    auto pred = std::find_if(domain.predicates.begin(), domain.predicates.end(),
                             [&](const PredicateDecl& p) { return p.name == pred_name; });
    if (pred == domain.predicates.end()) e.Fail("undeclared predicate '" + pred_name + "'");
    if (pred->parameters.size() + 1 != e.items.size()) e.Fail("wrong arity for '" + pred_name + "'");
    std::vector<std::string> args;
    for (std::size_t i = 1; i < e.items.size(); ++i) {
      const SExpr& arg = e.items[i];
      auto obj = std::find_if(objects.begin(), objects.end(),
                              [&](const TypedName& o) { return !arg.is_list && o.name == arg.symbol; });
      if (obj == objects.end()) arg.Fail("undeclared object '" + arg.symbol + "'");
      if (!IsSubtype(domain, obj->type, pred->parameters[i - 1].type)) {
        arg.Fail("object '" + arg.symbol + "' has the wrong type for '" + pred_name + "'");
      }
      args.push_back(arg.symbol);
    }
    return AtomString(pred_name, args);
  };

  std::set<std::string> init_atoms;
  if (init_section) {
    for (std::size_t i = 1; i < init_section->items.size(); ++i) {
      const SExpr& e = init_section->items[i];
      if (e.HasHead("=")) {
        if (e.items.size() == 3 && e.items[1].is_list && e.items[1].items.size() == 1 &&
            e.items[1].items.front().IsSymbol("total-cost")) {
          continue;
        }
        e.Fail("numeric fluents other than total-cost are not supported");
      }
      if (e.HasHead("not")) e.Fail("negative initial literals are not supported");
      init_atoms.insert(ground_atom(e));
    }
  }

  std::set<std::string> goal_atoms;
  std::function<void(const SExpr&)> collect_goal = [&](const SExpr& e) {
    if (e.is_list && e.items.empty()) return;
    if (e.HasHead("and")) {
      for (std::size_t i = 1; i < e.items.size(); ++i) collect_goal(e.items[i]);
      return;
    }
    if (e.HasHead("not") || e.HasHead("or") || e.HasHead("exists") || e.HasHead("forall") ||
        e.HasHead("preference")) {
      e.Fail("only conjunctions of positive atoms are supported as goals");
    }
    goal_atoms.insert(ground_atom(e));
  };
  for (std::size_t i = 1; i < goal_section->items.size(); ++i) collect_goal(goal_section->items[i]);
  if (goal_atoms.empty()) goal_section->Fail("goal list is empty");

  // Predicates never touched by an effect are static; bindings that violate
  // a static precondition can never fire.
  std::set<std::string> fluent_predicates;
  for (const auto& a : domain.actions) {
    for (const auto& l : a.add_effects) fluent_predicates.insert(l.predicate);
    for (const auto& l : a.delete_effects) fluent_predicates.insert(l.predicate);
  }

  struct RawAction {
    std::string name;
    const ActionSchema* schema;
    std::vector<std::string> args;
    std::vector<std::string> pre, add, del;
  };
  std::vector<RawAction> raw;
  std::set<std::string> all_atoms = init_atoms;
  all_atoms.insert(goal_atoms.begin(), goal_atoms.end());

  for (const auto& schema : domain.actions) {
    std::vector<std::vector<const TypedName*>> candidates;
    for (const auto& param : schema.parameters) {
      std::vector<const TypedName*> c;
      for (const auto& o : objects) {
        if (IsSubtype(domain, o.type, param.type)) c.push_back(&o);
      }
      candidates.push_back(std::move(c));
    }
    std::vector<std::size_t> choice(schema.parameters.size(), 0);
    const bool empty_domain = std::any_of(candidates.begin(), candidates.end(),
                                          [](const auto& c) { return c.empty(); });
    if (empty_domain) continue;
    for (;;) {
      std::unordered_map<std::string, std::string> binding;
      std::vector<std::string> args;
      for (std::size_t p = 0; p < choice.size(); ++p) {
        binding[schema.parameters[p].name] = candidates[p][choice[p]]->name;
        args.push_back(candidates[p][choice[p]]->name);
      }
      auto ground = [&](const Literal& lit) {
        std::vector<std::string> a;
        for (const auto& arg : lit.args) a.push_back(IsVariable(arg) ? binding.at(arg) : arg);
        return AtomString(lit.predicate, a);
      };
      RawAction ra{AtomString(schema.name, args), &schema, args, {}, {}, {}};
      bool feasible = true;
      for (const auto& lit : schema.preconditions) {
        std::string atom = ground(lit);
        if (!fluent_predicates.contains(lit.predicate) && !init_atoms.contains(atom)) {
          feasible = false;
          break;
        }
        ra.pre.push_back(std::move(atom));
      }
      if (feasible) {
        for (const auto& lit : schema.add_effects) ra.add.push_back(ground(lit));
        for (const auto& lit : schema.delete_effects) ra.del.push_back(ground(lit));
        all_atoms.insert(ra.pre.begin(), ra.pre.end());
        all_atoms.insert(ra.add.begin(), ra.add.end());
        all_atoms.insert(ra.del.begin(), ra.del.end());
        raw.push_back(std::move(ra));
      }
      std::size_t p = 0;
      while (p < choice.size() && ++choice[p] == candidates[p].size()) choice[p++] = 0;
      if (p == choice.size()) break;
    }
  }

  problem.atoms.assign(all_atoms.begin(), all_atoms.end());
  std::unordered_map<std::string, AtomId> atom_id;
  for (AtomId i = 0; i < problem.atoms.size(); ++i) atom_id.emplace(problem.atoms[i], i);
  auto to_set = [&](const auto& names) {
    AtomSet out;
    for (const auto& n : names) out.push_back(atom_id.at(n));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  };

  std::sort(raw.begin(), raw.end(), [](const RawAction& a, const RawAction& b) { return a.name < b.name; });
  for (const auto& ra : raw) {
    GroundAction ga;
    ga.name = ra.name;
    ga.schema = ra.schema->name;
    ga.args = ra.args;
    ga.preconditions = to_set(ra.pre);
    ga.add_effects = to_set(ra.add);
    AtomSet del = to_set(ra.del);
    // Delete-then-add semantics when a binding makes them coincide.
    std::set_difference(del.begin(), del.end(), ga.add_effects.begin(), ga.add_effects.end(),
                        std::back_inserter(ga.delete_effects));
    ga.cost = ra.schema->cost;
    ga.duration = ra.schema->duration;
    problem.actions.push_back(std::move(ga));
  }
  problem.init = to_set(init_atoms);
  problem.goals = to_set(goal_atoms);
  IndexProblem(problem);
  return problem;
}

std::string PrintDomain(const DomainDescription& domain) {
  std::ostringstream out;
  out << "(define (domain " << domain.name << ")\n";
  if (!domain.requirements.empty()) {
    out << "  (:requirements";
    for (const auto& r : domain.requirements) out << ' ' << r;
    out << ")\n";
  }
  if (!domain.types.empty()) {
    out << "  (:types ";
    PrintTypedList(out, domain.types);
    out << ")\n";
  }
  if (!domain.constants.empty()) {
    out << "  (:constants ";
    PrintTypedList(out, domain.constants);
    out << ")\n";
  }
  out << "  (:predicates";
  for (const auto& p : domain.predicates) {
    out << " (" << p.name;
    if (!p.parameters.empty()) out << ' ';
    PrintTypedList(out, p.parameters);
    out << ')';
  }
  out << ")\n";
  if (domain.has_total_cost) out << "  (:functions (total-cost) - number)\n";
  for (const auto& a : domain.actions) {
    out << "  (:action " << a.name << "\n    :parameters (";
    PrintTypedList(out, a.parameters);
    out << ")\n    :precondition (and";
    for (const auto& l : a.preconditions) {
      out << ' ';
      PrintLiteral(out, l);
    }
    out << ")\n    :effect (and";
    for (const auto& l : a.add_effects) {
      out << ' ';
      PrintLiteral(out, l);
    }
    for (const auto& l : a.delete_effects) {
      out << " (not ";
      PrintLiteral(out, l);
      out << ')';
    }
    if (a.cost != 1) out << " (increase (total-cost) " << FormatRational(a.cost) << ')';
    out << "))\n";
  }
  out << ")\n";
  return out.str();
}

GroundProblem LoadDurations(const GroundProblem& problem, std::string_view sidecar,
                            std::vector<std::string>* warnings) {
  GroundProblem out = problem;
  const auto json = nlohmann::json::parse(sidecar.begin(), sidecar.end());
  if (!json.is_object()) throw std::invalid_argument("durations sidecar must be a JSON object");
  for (const auto& [name, value] : json.items()) {
    const Rational duration = RationalFromJson(value);
    if (duration <= 0) {
      throw std::invalid_argument("duration for '" + name + "' must be positive, got " + value.dump());
    }
    bool matched = false;
    for (auto& action : out.actions) {
      if (action.schema == name) {
        action.duration = duration;
        matched = true;
      }
    }
    if (!matched && warnings) warnings->push_back("durations: no action schema named '" + name + "'");
  }
  return out;
}

std::string AtomSetToString(const GroundProblem& problem, const AtomSet& atoms) {
  std::string out = "{";
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    if (i) out += ", ";
    out += problem.AtomName(atoms[i]);
  }
  return out + "}";
}

nlohmann::json GroundProblemToJson(const GroundProblem& problem) {
  auto names = [&](const AtomSet& atoms) {
    nlohmann::json arr = nlohmann::json::array();
    for (AtomId a : atoms) arr.push_back(problem.AtomName(a));
    return arr;
  };
  nlohmann::json actions = nlohmann::json::array();
  for (const auto& a : problem.actions) {
    actions.push_back({{"name", a.name},
                       {"schema", a.schema},
                       {"pre", names(a.preconditions)},
                       {"add", names(a.add_effects)},
                       {"del", names(a.delete_effects)},
                       {"cost", RationalToJson(a.cost)},
                       {"duration", RationalToJson(a.duration)}});
  }
  return {{"domain", problem.domain_name},
          {"problem", problem.problem_name},
          {"init", names(problem.init)},
          {"goals", names(problem.goals)},
          {"actions", std::move(actions)}};
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

GroundProblem LoadProblemFiles(const std::string& domain_path, const std::string& problem_path,
                               const std::string& durations_path, std::vector<std::string>* warnings) {
  const DomainDescription domain = ParseDomain(ReadFile(domain_path));
  GroundProblem problem = ParseProblem(ReadFile(problem_path), domain);
  if (!durations_path.empty()) problem = LoadDurations(problem, ReadFile(durations_path), warnings);
  return problem;
}

}  // namespace plansets
