#pragma once

#include <map>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "semunit/fact.hpp"
#include "semunit/iri.hpp"

namespace semunit {

/// Rule argument: a "?name" variable or a ground term.
using RuleTerm = std::variant<std::string, Term>;

/// Literal with optional strong negation; negation as failure sits on the
/// rule, not the atom.
struct RuleAtom {
  std::string predicate;
  bool strong_neg = false;
  std::vector<RuleTerm> args;
};

RuleAtom rule_atom(std::string predicate, std::vector<RuleTerm> args,
                   bool strong_neg = false);

struct Rule {
  std::string id;
  RuleAtom head;
  std::vector<RuleAtom> body;
  std::vector<RuleAtom> naf; // satisfied when no matching fact is derivable
};

struct Program {
  std::vector<Fact> facts;
  std::vector<Rule> rules;
};

struct Model {
  std::set<Fact> facts;
  std::map<Fact, std::string> provenance; // derived fact -> rule id
};

/// Strata per predicate symbol; strong negation makes a distinct symbol.
/// Fails with NotStratifiable on recursion through negation as failure.
std::map<std::string, int> stratify(const Program& program);

/// Bottom-up evaluation, stratum by stratum. Fails with Inconsistent when a
/// fact and its strong negation are both derived.
Model solve(const Program& program);

}  // namespace semunit
