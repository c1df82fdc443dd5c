#include "semunit/logic.hpp"

#include <fmt/format.h>

#include <algorithm>

#include "semunit/error.hpp"

namespace semunit {

namespace {

std::string symbol(const std::string& predicate, bool strong_neg) {
  return strong_neg ? "-" + predicate : predicate;
}

std::string symbol(const RuleAtom& a) { return symbol(a.predicate, a.strong_neg); }

using Subst = std::map<std::string, Term>;

bool unify(const RuleAtom& atom, const Fact& fact, Subst& s) {
  if (atom.predicate != fact.predicate || atom.strong_neg != fact.strong_neg ||
      atom.args.size() != fact.args.size()) {
    return false;
  }
  for (std::size_t i = 0; i < atom.args.size(); ++i) {
    if (const auto* var = std::get_if<std::string>(&atom.args[i])) {
      auto [it, fresh] = s.emplace(*var, fact.args[i]);
      if (!fresh && !(it->second == fact.args[i])) return false;
    } else if (!(std::get<Term>(atom.args[i]) == fact.args[i])) {
      return false;
    }
  }
  return true;
}

Fact instantiate(const RuleAtom& atom, const Subst& s) {
  Fact f;
  f.predicate = atom.predicate;
  f.strong_neg = atom.strong_neg;
  for (const RuleTerm& t : atom.args) {
    if (const auto* var = std::get_if<std::string>(&t)) {
      auto it = s.find(*var);
      if (it == s.end()) raise(Err::UnboundVariable, *var);
      f.args.push_back(it->second);
    } else {
      f.args.push_back(std::get<Term>(t));
    }
  }
  return f;
}

void check_safety(const Rule& r) {
  std::set<std::string> bound;
  for (const RuleAtom& a : r.body) {
    for (const RuleTerm& t : a.args) {
      if (const auto* var = std::get_if<std::string>(&t)) bound.insert(*var);
    }
  }
  auto check = [&](const RuleAtom& a, const char* where) {
    for (const RuleTerm& t : a.args) {
      if (const auto* var = std::get_if<std::string>(&t)) {
        if (!bound.count(*var)) {
          raise(Err::InvalidSpec,
                fmt::format("rule {}: ?{} unbound in {}", r.id, *var, where));
        }
      }
    }
  };
  check(r.head, "head");
  for (const RuleAtom& a : r.naf) check(a, "negation");
}

}  // namespace

RuleAtom rule_atom(std::string predicate, std::vector<RuleTerm> args, bool strong_neg) {
  RuleAtom a;
  a.predicate = std::move(predicate);
  a.strong_neg = strong_neg;
  a.args = std::move(args);
  return a;
}

std::map<std::string, int> stratify(const Program& program) {
  std::map<std::string, int> strata;
  for (const Fact& f : program.facts) strata.emplace(symbol(f.predicate, f.strong_neg), 0);
  for (const Rule& r : program.rules) {
    strata.emplace(symbol(r.head), 0);
    for (const RuleAtom& a : r.body) strata.emplace(symbol(a), 0);
    for (const RuleAtom& a : r.naf) strata.emplace(symbol(a), 0);
  }
  const std::size_t bound = strata.size() + 1;
  bool changed = true;
  for (std::size_t pass = 0; changed && pass <= bound; ++pass) {
    changed = false;
    for (const Rule& r : program.rules) {
      int& h = strata[symbol(r.head)];
      for (const RuleAtom& a : r.body) {
        if (strata[symbol(a)] > h) {
          h = strata[symbol(a)];
          changed = true;
        }
      }
      for (const RuleAtom& a : r.naf) {
        if (strata[symbol(a)] + 1 > h) {
          h = strata[symbol(a)] + 1;
          changed = true;
        }
      }
    }
  }
  if (changed) {
    raise(Err::NotStratifiable, "recursion through negation as failure");
  }
  return strata;
}

Model solve(const Program& program) {
  for (const Rule& r : program.rules) check_safety(r);
  const auto strata = stratify(program);
  int max_stratum = 0;
  for (const auto& [sym, level] : strata) max_stratum = std::max(max_stratum, level);

  Model m;
  m.facts.insert(program.facts.begin(), program.facts.end());

  for (int level = 0; level <= max_stratum; ++level) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const Rule& r : program.rules) {
        if (strata.at(symbol(r.head)) != level) continue;
        std::vector<Subst> substitutions{{}};
        for (const RuleAtom& b : r.body) {
          std::vector<Subst> next;
          for (const Subst& s : substitutions) {
            for (const Fact& f : m.facts) {
              Subst extended = s;
              if (unify(b, f, extended)) next.push_back(std::move(extended));
            }
          }
          substitutions = std::move(next);
          if (substitutions.empty()) break;
        }
        for (const Subst& s : substitutions) {
          bool blocked = false;
          for (const RuleAtom& n : r.naf) {
            if (m.facts.count(instantiate(n, s))) {
              blocked = true;
              break;
            }
          }
          if (blocked) continue;
          Fact head = instantiate(r.head, s);
          if (m.facts.insert(head).second) {
            m.provenance.emplace(std::move(head), r.id);
            changed = true;
          }
        }
      }
    }
  }

  for (const Fact& f : m.facts) {
    if (f.strong_neg) continue;
    Fact neg = f;
    neg.strong_neg = true;
    if (m.facts.count(neg)) {
      raise(Err::Inconsistent,
            fmt::format("{} holds together with its strong negation", f.predicate));
    }
  }
  return m;
}

}  // namespace semunit
