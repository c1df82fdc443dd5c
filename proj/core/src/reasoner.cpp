#include "semunit/reasoner.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <set>

#include "semunit/statement.hpp"
#include "semunit/vocab.hpp"
#include "semunit/error.hpp"

namespace semunit {

namespace {

Fact type_fact(const Iri& individual, const Iri& cls, bool strong_neg = false) {
  Fact f;
  f.predicate = "type";
  f.strong_neg = strong_neg;
  f.args = {Term{individual}, Term{cls}};
  return f;
}

Fact relation_fact(const Iri& property, const Iri& subject, const Iri& object_class,
                   bool strong_neg) {
  Fact f;
  f.predicate = property.value;
  f.strong_neg = strong_neg;
  f.args = {Term{subject}, Term{object_class}};
  return f;
}

// Kind of the object resource; named individuals stand in by their class.
std::optional<Iri> object_kind(const Store& store, const Term& filler) {
  if (!term_is_iri(filler)) return std::nullopt;
  const Iri obj = term_iri(filler);
  if (!store.has_resource(obj)) return std::nullopt;
  return store.resource(obj).target_class;
}

bool premise_present(const Store& store, const Gupri& clause) {
  return store.has_unit(clause) &&
         !store.unit(clause).has_kind(vocab::directive_unit);
}

// Class asserted by an induction case: an identification or typing of a
// named individual.
std::optional<Iri> case_class(const Store& store, const Gupri& clause) {
  const SemanticUnit& u = store.unit(clause);
  if (u.has_kind(vocab::named_individual_identification_unit) && u.subject &&
      store.has_resource(*u.subject)) {
    return store.resource(*u.subject).target_class;
  }
  if (const auto view = relation_view(store, clause)) {
    if (view->slot_kind == SlotKind::ClassReference && term_is_iri(view->filler)) {
      return term_iri(view->filler);
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<Fact> unit_fact(const Store& store, const Gupri& unit) {
  const SemanticUnit& u = store.unit(unit);
  if (!u.owns_data_graph) return std::nullopt;
  if (u.has_kind(vocab::named_individual_identification_unit) && u.subject &&
      store.has_resource(*u.subject)) {
    const TypedResource& res = store.resource(*u.subject);
    if (res.target_class) return type_fact(*u.subject, *res.target_class);
  }
  const auto view = relation_view(store, unit);
  if (!view) return std::nullopt;
  if (view->slot_kind == SlotKind::ClassReference && term_is_iri(view->filler)) {
    return type_fact(view->subject, term_iri(view->filler), u.is_negated());
  }
  if (view->slot_kind == SlotKind::Resource) {
    if (const auto kind = object_kind(store, view->filler)) {
      return relation_fact(view->property, view->subject, *kind, u.is_negated());
    }
  }
  return std::nullopt;
}

Program defaults_program(const Store& store) {
  Program prog;
  for (const auto& [g, u] : store.units()) {
    if (!u.owns_data_graph) continue;
    if (u.has_kind(vocab::directive_unit)) continue;
    const auto category = u.category();
    const bool factual = u.has_kind(vocab::named_individual_identification_unit) ||
                         category == StatementCategory::Assertional;
    if (factual) {
      if (auto f = unit_fact(store, g)) prog.facts.push_back(std::move(*f));
    }
    if (category == StatementCategory::Prototypical && !u.is_negated()) {
      const auto view = relation_view(store, g);
      if (!view || view->slot_kind != SlotKind::Resource) continue;
      if (!store.has_resource(view->subject)) continue;
      const TypedResource& subject_res = store.resource(view->subject);
      if (subject_res.category != ResourceCategory::MostInstances ||
          !subject_res.target_class) {
        continue;
      }
      const auto kind = object_kind(store, view->filler);
      if (!kind) continue;
      Rule r;
      r.id = g.value;
      r.head = rule_atom(view->property.value, {std::string("x"), Term{*kind}});
      r.body = {rule_atom("type", {std::string("x"), Term{*subject_res.target_class}})};
      r.naf = {rule_atom(view->property.value, {std::string("x"), Term{*kind}}, true)};
      prog.rules.push_back(std::move(r));
    }
  }
  return prog;
}

std::vector<InferredFact> apply_prototypical_defaults(Store& store) {
  const Program prog = defaults_program(store);
  const Model model = solve(prog);
  const std::set<Fact> given(prog.facts.begin(), prog.facts.end());
  std::vector<InferredFact> out;
  for (const Fact& f : model.facts) {
    if (given.count(f)) continue;
    InferredFact inf;
    inf.fact = f;
    inf.modality = Modality::Probable;
    inf.defeasible = true;
    inf.hypothesis = false;
    if (auto it = model.provenance.find(f); it != model.provenance.end()) {
      inf.provenance = Gupri(it->second);
    }
    out.push_back(std::move(inf));
  }
  std::sort(out.begin(), out.end());
  store.set_inference({store.content_hash(), out});
  return out;
}

MostConditionReport check_most_condition(const Store& store,
                                         const MostInstancesSemantics& semantics) {
  std::set<Iri> instances;
  for (const auto& [iri, res] : store.resources()) {
    if (res.category == ResourceCategory::NamedIndividual &&
        res.target_class == semantics.target_class) {
      instances.insert(iri);
    }
  }
  std::set<Iri> with;
  for (const auto& [g, u] : store.units()) {
    if (!u.owns_data_graph || u.is_negated()) continue;
    if (u.category() != StatementCategory::Assertional) continue;
    const auto view = relation_view(store, g);
    if (!view || view->property != semantics.distinguishing_property) continue;
    if (!instances.count(view->subject)) continue;
    if (object_kind(store, view->filler) == semantics.distinguishing_class) {
      with.insert(view->subject);
    }
  }
  MostConditionReport report;
  report.with_property = static_cast<long long>(with.size());
  report.rest = static_cast<long long>(instances.size() - with.size());
  report.holds = report.with_property > report.rest;
  report.no_evidence = instances.empty();
  return report;
}

ArgueResult argue(Store& store) {
  ArgueResult result;
  for (const auto& [g, u] : store.units()) {
    if (!u.has_kind(vocab::logical_argument_unit)) continue;
    const ArgumentUnit arg = read_argument(store, g);

    auto need = [&](std::initializer_list<const Gupri*> clauses) {
      for (const Gupri* c : clauses) {
        if (!premise_present(store, *c)) {
          result.issues.push_back(
              {g, Err::PremiseMissing,
               fmt::format("premise {} is not asserted", c->value)});
          return false;
        }
      }
      return true;
    };

    switch (arg.kind) {
      case ArgumentKind::Deduction: {
        if (!need({&arg.case_clause, &arg.rule_clause})) break;
        const auto conclusion = unit_fact(store, arg.result_clause);
        if (!conclusion) {
          result.issues.push_back({g, Err::ClauseTypeViolation,
                                   "result clause has no propositional form"});
          break;
        }
        result.inferred.push_back(
            {*conclusion, Modality::Necessary, false, false, g});
        break;
      }
      case ArgumentKind::Induction: {
        if (!need({&arg.case_clause, &arg.result_clause})) break;
        const auto subject_class = case_class(store, arg.case_clause);
        const auto view = relation_view(store, arg.result_clause);
        const auto kind = view ? object_kind(store, view->filler) : std::nullopt;
        if (!subject_class || !view || !kind) {
          result.issues.push_back({g, Err::ClauseTypeViolation,
                                   "induction needs a typed case and a relational result"});
          break;
        }
        RuleProposal proposal;
        proposal.argument = g;
        proposal.boldness = arg.boldness.value_or(Boldness::Contingent);
        proposal.subject_class = *subject_class;
        proposal.property = view->property;
        proposal.object_class = *kind;
        switch (proposal.boldness) {
          case Boldness::Contingent:
            proposal.accepted = true;
            proposal.defeasible = false;
            proposal.reason = "witnessed by the premises";
            break;
          case Boldness::Prototypical: {
            const auto report = check_most_condition(
                store, {*subject_class, view->property, *kind});
            proposal.accepted = report.holds;
            proposal.defeasible = true;
            proposal.reason =
                report.no_evidence
                    ? "no known instances"
                    : fmt::format("{} of {} known instances", report.with_property,
                                  report.with_property + report.rest);
            break;
          }
          case Boldness::Universal: {
            std::optional<Iri> counterexample;
            for (const auto& [vg, v] : store.units()) {
              if (!v.owns_data_graph || !v.is_negated()) continue;
              const auto nview = relation_view(store, vg);
              if (!nview || nview->property != view->property) continue;
              if (object_kind(store, nview->filler) != kind) continue;
              if (!store.has_resource(nview->subject)) continue;
              if (store.resource(nview->subject).target_class == subject_class) {
                counterexample = nview->subject;
                break;
              }
            }
            proposal.accepted = !counterexample;
            proposal.defeasible = true;
            proposal.reason = counterexample
                                  ? fmt::format("counterexample {}", counterexample->value)
                                  : "no counterexample known";
            break;
          }
        }
        result.proposals.push_back(std::move(proposal));
        break;
      }
      case ArgumentKind::Abduction: {
        if (!need({&arg.result_clause, &arg.rule_clause})) break;
        const auto conclusion = unit_fact(store, arg.case_clause);
        if (!conclusion) {
          result.issues.push_back({g, Err::ClauseTypeViolation,
                                   "case clause has no propositional form"});
          break;
        }
        result.inferred.push_back({*conclusion, Modality::Possible, true, true, g});
        break;
      }
    }
  }
  std::sort(result.inferred.begin(), result.inferred.end());
  store.set_inference({store.content_hash(), result.inferred});
  return result;
}

}  // namespace semunit
