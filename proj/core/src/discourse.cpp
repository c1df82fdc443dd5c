#include "semunit/discourse.hpp"

#include <fmt/format.h>

#include "semunit/modifier.hpp"
#include "semunit/resource.hpp"
#include "semunit/statement.hpp"
#include "semunit/vocab.hpp"
#include "semunit/error.hpp"

namespace semunit {

namespace {

Iri stance_property(Stance s) {
  switch (s) {
    case Stance::Positive: return vocab::asserts;
    case Stance::Negative: return vocab::negates;
    case Stance::Agnostic: return vocab::agnostic_about;
  }
  return vocab::asserts;
}

Iri stance_class(Stance s) {
  switch (s) {
    case Stance::Positive: return vocab::positive_epistemic_unit;
    case Stance::Negative: return vocab::negative_epistemic_unit;
    case Stance::Agnostic: return vocab::agnostic_epistemic_unit;
  }
  return vocab::positive_epistemic_unit;
}

// An if clause is admissible when it is an assertional statement unit or a
// boolean combination of such units.
bool assertional_clause(const Store& store, const Gupri& g) {
  const SemanticUnit& u = store.unit(g);
  if (u.has_kind(vocab::boolean_unit)) {
    for (const Gupri& operand : boolean_unit_operands(store, g)) {
      if (!assertional_clause(store, operand)) return false;
    }
    return true;
  }
  return u.owns_data_graph && !u.is_negated() &&
         u.category() == StatementCategory::Assertional;
}

bool case_or_result_clause(const Store& store, const Gupri& g) {
  const SemanticUnit& u = store.unit(g);
  if (!u.owns_data_graph) return false;
  if (u.has_kind(vocab::named_individual_identification_unit)) return true;
  return u.category() == StatementCategory::Assertional;
}

}  // namespace

Gupri assert_stance(Store& store, const Iri& agent, Stance stance, const Gupri& target) {
  const TypedResource& res = store.resource(agent);
  if (res.category != ResourceCategory::NamedIndividual) {
    raise(Err::InvalidSpec, fmt::format("{} is not a named individual", agent.value));
  }
  const bool referential = store.unit(target).has_kind(vocab::epistemic_unit);
  const Gupri g = create_complex_statement_unit(
      store, "epistemic", agent,
      {triple(agent, stance_property(stance), target)});
  store.add_kind(g, vocab::epistemic_unit);
  store.add_kind(g, stance_class(stance));
  if (referential) store.add_kind(g, vocab::referential_epistemic_unit);
  return g;
}

std::map<Stance, std::set<Iri>> stance_map(const Store& store, const Gupri& target) {
  if (!store.has_unit(target)) raise(Err::UnknownUnit, target.value);
  std::map<Stance, std::set<Iri>> out;
  for (const auto& [g, u] : store.units()) {
    if (!u.has_kind(vocab::epistemic_unit)) continue;
    if (u.has_kind(vocab::referential_epistemic_unit)) continue;
    if (!u.subject) continue;
    for (const Triple& t : store.data_graph(g)) {
      if (!term_is_iri(t.object) || term_iri(t.object) != target) continue;
      if (t.predicate == vocab::asserts) {
        out[Stance::Positive].insert(t.subject);
      } else if (t.predicate == vocab::negates) {
        out[Stance::Negative].insert(t.subject);
      } else if (t.predicate == vocab::agnostic_about) {
        out[Stance::Agnostic].insert(t.subject);
      }
    }
  }
  return out;
}

DirectiveUnit build_directive(Store& store, const Gupri& target) {
  const SemanticUnit& u = store.unit(target);
  if (!u.owns_data_graph) {
    raise(Err::NotAStatementUnit, fmt::format("{} owns no data graph", target.value));
  }
  Iri subtype = vocab::assertional_directive_unit;
  switch (u.category().value_or(StatementCategory::Assertional)) {
    case StatementCategory::Contingent:
      subtype = vocab::contingent_directive_unit;
      break;
    case StatementCategory::Prototypical:
      subtype = vocab::prototypical_directive_unit;
      break;
    case StatementCategory::Universal:
      subtype = vocab::universal_directive_unit;
      break;
    default:
      break;
  }
  store.add_kind(target, vocab::directive_unit);
  store.add_kind(target, subtype);
  return {target, subtype};
}

ConditionalUnit build_conditional(Store& store, const Gupri& if_clause,
                                  const Gupri& then_clause) {
  if (!assertional_clause(store, if_clause)) {
    raise(Err::IfClauseNotAssertional, if_clause.value);
  }
  const SemanticUnit& then_unit = store.unit(then_clause);
  if (!then_unit.owns_data_graph) {
    raise(Err::NotAStatementUnit, fmt::format("{} owns no data graph", then_clause.value));
  }
  const bool directive = then_unit.has_kind(vocab::directive_unit);
  const Gupri g = create_complex_statement_unit(
      store, "conditional", if_clause,
      {triple(if_clause, vocab::is_if_of_then, then_clause)});
  store.add_kind(g, vocab::conditional_unit);
  if (directive) store.add_kind(g, vocab::directive_conditional_unit);
  return {g, if_clause, then_clause, directive};
}

ArgumentUnit build_argument(Store& store, ArgumentKind kind, const Gupri& case_clause,
                            const Gupri& rule_clause, const Gupri& result_clause,
                            std::optional<Boldness> boldness) {
  for (const Gupri* clause : {&case_clause, &rule_clause, &result_clause}) {
    if (!store.has_unit(*clause)) raise(Err::UnknownUnit, clause->value);
  }
  if (!case_or_result_clause(store, case_clause)) {
    raise(Err::ClauseTypeViolation, fmt::format("case {}", case_clause.value));
  }
  if (!case_or_result_clause(store, result_clause)) {
    raise(Err::ClauseTypeViolation, fmt::format("result {}", result_clause.value));
  }
  const SemanticUnit& rule = store.unit(rule_clause);
  const auto rule_cat = rule.category();
  if (!rule.owns_data_graph ||
      (rule_cat != StatementCategory::Universal &&
       rule_cat != StatementCategory::Prototypical &&
       rule_cat != StatementCategory::Contingent)) {
    raise(Err::ClauseTypeViolation, fmt::format("rule {}", rule_clause.value));
  }
  if (kind == ArgumentKind::Induction && !boldness) {
    raise(Err::MissingBoldness, "induction needs a boldness level");
  }
  if (kind != ArgumentKind::Induction && boldness) {
    raise(Err::InvalidSpec, "boldness applies to induction only");
  }

  SemanticUnit u;
  u.gupri = store.mint_gupri("argument");
  u.kinds = {vocab::logical_argument_unit};
  switch (kind) {
    case ArgumentKind::Deduction: u.kinds.insert(vocab::deduction_unit); break;
    case ArgumentKind::Induction: u.kinds.insert(vocab::induction_unit); break;
    case ArgumentKind::Abduction: u.kinds.insert(vocab::abduction_unit); break;
  }
  if (boldness) {
    switch (*boldness) {
      case Boldness::Universal: u.kinds.insert(vocab::boldness_universal); break;
      case Boldness::Prototypical: u.kinds.insert(vocab::boldness_prototypical); break;
      case Boldness::Contingent: u.kinds.insert(vocab::boldness_contingent); break;
    }
  }
  const bool hypothesis = kind == ArgumentKind::Abduction;
  if (hypothesis) u.kinds.insert(vocab::hypothesis_unit);
  u.owns_data_graph = false;
  u.associations = {
      {vocab::has_case_clause, case_clause},
      {vocab::has_rule_clause, rule_clause},
      {vocab::has_result_clause, result_clause},
  };
  const Gupri g = store.register_unit(std::move(u)).gupri;
  return {g, kind, case_clause, rule_clause, result_clause, boldness, hypothesis};
}

ArgumentUnit read_argument(const Store& store, const Gupri& unit) {
  const SemanticUnit& u = store.unit(unit);
  if (!u.has_kind(vocab::logical_argument_unit)) {
    raise(Err::InvalidSpec, fmt::format("{} is not an argument unit", unit.value));
  }
  ArgumentUnit out;
  out.unit = unit;
  if (u.has_kind(vocab::induction_unit)) {
    out.kind = ArgumentKind::Induction;
  } else if (u.has_kind(vocab::abduction_unit)) {
    out.kind = ArgumentKind::Abduction;
  } else {
    out.kind = ArgumentKind::Deduction;
  }
  if (u.has_kind(vocab::boldness_universal)) out.boldness = Boldness::Universal;
  if (u.has_kind(vocab::boldness_prototypical)) out.boldness = Boldness::Prototypical;
  if (u.has_kind(vocab::boldness_contingent)) out.boldness = Boldness::Contingent;
  out.hypothesis = u.has_kind(vocab::hypothesis_unit);
  for (const Association& a : u.associations) {
    if (a.role == vocab::has_case_clause) out.case_clause = a.target;
    if (a.role == vocab::has_rule_clause) out.rule_clause = a.target;
    if (a.role == vocab::has_result_clause) out.result_clause = a.target;
  }
  return out;
}

}  // namespace semunit
