#include "semunit/owl_bridge.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <set>

#include "semunit/modifier.hpp"
#include "semunit/resource.hpp"
#include "semunit/statement.hpp"
#include "semunit/vocab.hpp"
#include "semunit/error.hpp"

namespace semunit {

namespace {

using Bindings = std::map<std::string, Iri>;

void collect_vars(const PTerm& p, std::set<std::string>& out) {
  if (p.is_var()) out.insert(p.var);
}

void collect_vars(const ClassExpr& e, std::set<std::string>& out) {
  collect_vars(e.entity, out);
  collect_vars(e.property, out);
  for (const PTerm& p : e.individuals) collect_vars(p, out);
  for (const ClassExpr& c : e.children) collect_vars(c, out);
}

void collect_vars(const Axiom& ax, std::set<std::string>& out) {
  collect_vars(ax.property, out);
  collect_vars(ax.a, out);
  collect_vars(ax.b, out);
  for (const ClassExpr& c : ax.classes) collect_vars(c, out);
}

PTerm subst(const PTerm& p, const Bindings& b) {
  if (!p.is_var()) return p;
  auto it = b.find(p.var);
  if (it == b.end()) raise(Err::UnboundVariable, p.var);
  return PTerm::of(it->second);
}

ClassExpr subst(const ClassExpr& e, const Bindings& b) {
  ClassExpr out = e;
  out.entity = subst(e.entity, b);
  out.property = subst(e.property, b);
  out.individuals.clear();
  for (const PTerm& p : e.individuals) out.individuals.push_back(subst(p, b));
  out.children.clear();
  for (const ClassExpr& c : e.children) out.children.push_back(subst(c, b));
  return out;
}

Axiom subst(const Axiom& ax, const Bindings& b) {
  Axiom out = ax;
  out.property = subst(ax.property, b);
  out.a = subst(ax.a, b);
  out.b = subst(ax.b, b);
  out.classes.clear();
  for (const ClassExpr& c : ax.classes) out.classes.push_back(subst(c, b));
  return out;
}

bool match_pterm(const PTerm& pat, const Iri& value, Bindings& b) {
  if (!pat.is_var()) return pat.iri == value;
  auto [it, fresh] = b.emplace(pat.var, value);
  return fresh || it->second == value;
}

bool atom_matches(const PatternAtom& pat, const PatternAtom& fact, Bindings& b) {
  if (pat.predicate != fact.predicate || pat.args.size() != fact.args.size()) {
    return false;
  }
  for (std::size_t i = 0; i < pat.args.size(); ++i) {
    if (!match_pterm(pat.args[i], fact.args[i].iri, b)) return false;
  }
  return true;
}

void solve_positive(const std::vector<const PatternAtom*>& atoms, std::size_t i,
                    const std::vector<PatternAtom>& facts, const Bindings& bound,
                    std::vector<Bindings>& out) {
  if (i == atoms.size()) {
    out.push_back(bound);
    return;
  }
  for (const PatternAtom& fact : facts) {
    Bindings next = bound;
    if (atom_matches(*atoms[i], fact, next)) {
      solve_positive(atoms, i + 1, facts, next, out);
    }
  }
}

std::vector<Bindings> match_pattern(const TranslationPattern& pattern,
                                    const std::vector<PatternAtom>& facts) {
  std::vector<const PatternAtom*> positive;
  std::vector<const PatternAtom*> negated;
  for (const PatternAtom& a : pattern.preconditions) {
    (a.negated ? negated : positive).push_back(&a);
  }
  std::vector<Bindings> candidates;
  solve_positive(positive, 0, facts, {}, candidates);
  std::vector<Bindings> out;
  for (const Bindings& b : candidates) {
    bool blocked = false;
    for (const PatternAtom* n : negated) {
      for (const PatternAtom& fact : facts) {
        Bindings probe = b;
        if (atom_matches(*n, fact, probe)) {
          blocked = true;
          break;
        }
      }
      if (blocked) break;
    }
    if (!blocked) out.push_back(b);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

PTerm C(const Iri& iri) { return PTerm::of(iri); }
PTerm V(const char* name) { return PTerm::v(name); }

PatternAtom atom(std::string predicate, std::vector<PTerm> args, bool negated = false) {
  PatternAtom a;
  a.predicate = std::move(predicate);
  a.negated = negated;
  a.args = std::move(args);
  return a;
}

TranslationPattern identification_pattern(std::string name, const Iri& trigger) {
  TranslationPattern p;
  p.name = std::move(name);
  p.trigger_kind = trigger;
  p.preconditions = {
      atom("kind", {C(trigger)}),
      atom("subject", {V("s")}),
      atom("subject-class", {V("c")}),
  };
  p.axiom_templates = {
      Axiom::class_assertion(ClassExpr::named(V("c")), V("s")),
  };
  return p;
}

bool fallback_eligible(const Store& store, const SemanticUnit& u,
                       const std::vector<PatternAtom>& facts) {
  if (u.category() != StatementCategory::Assertional) return false;
  if (!u.metadata.schema_id || !store.has_schema(*u.metadata.schema_id)) return false;
  return std::none_of(facts.begin(), facts.end(), [](const PatternAtom& f) {
    return f.predicate == "object-cardinality-restricted";
  });
}

std::vector<Axiom> fallback_abox(const Store& store, const Gupri& g) {
  std::vector<Axiom> out;
  for (const Triple& t : store.data_graph(g)) {
    if (t.predicate == vocab::rdf_type && term_is_iri(t.object)) {
      out.push_back(Axiom::class_assertion(ClassExpr::named(C(term_iri(t.object))),
                                           C(t.subject)));
    } else if (term_is_iri(t.object)) {
      out.push_back(Axiom::object_property_assertion(C(t.predicate), C(t.subject),
                                                     C(term_iri(t.object))));
    } else {
      out.push_back(Axiom::data_property_assertion(C(t.predicate), C(t.subject),
                                                   term_literal(t.object)));
    }
  }
  return out;
}

}  // namespace

void PatternRegistry::register_pattern(TranslationPattern p) {
  std::set<std::string> bound(p.fresh_names.begin(), p.fresh_names.end());
  for (const PatternAtom& a : p.preconditions) {
    if (a.negated) continue;
    for (const PTerm& t : a.args) collect_vars(t, bound);
  }
  std::set<std::string> used;
  for (const PatternAtom& a : p.preconditions) {
    if (!a.negated) continue;
    for (const PTerm& t : a.args) collect_vars(t, used);
  }
  for (const Axiom& t : p.axiom_templates) collect_vars(t, used);
  for (const std::string& var : used) {
    if (!bound.count(var)) {
      raise(Err::UnboundVariable, fmt::format("?{} in pattern {}", var, p.name));
    }
  }
  patterns_.push_back(std::move(p));
}

PatternRegistry builtin_registry() {
  PatternRegistry r;
  r.register_pattern(identification_pattern(
      "named-individual-identification", vocab::named_individual_identification_unit));
  r.register_pattern(identification_pattern("some-instance-identification",
                                            vocab::some_instance_identification_unit));
  r.register_pattern(identification_pattern("most-instances-identification",
                                            vocab::most_instances_identification_unit));
  r.register_pattern(identification_pattern("all-instances-identification",
                                            vocab::all_instances_identification_unit));

  {
    TranslationPattern p;
    p.name = "every-instance-identification";
    p.trigger_kind = vocab::every_instance_identification_unit;
    p.preconditions = {
        atom("kind", {C(vocab::every_instance_identification_unit)}),
        atom("subject", {V("s")}),
        atom("subject-class", {V("c")}),
    };
    p.axiom_templates = {
        Axiom::class_assertion(ClassExpr::named(C(vocab::collection_class)), V("s")),
        Axiom::subclass_of(
            ClassExpr::named(V("c")),
            ClassExpr::some_values_from(C(vocab::member_of),
                                        ClassExpr::one_of({V("s")}))),
        Axiom::subclass_of(
            ClassExpr::one_of({V("s")}),
            ClassExpr::all_values_from(C(vocab::has_member), ClassExpr::named(V("c")))),
    };
    r.register_pattern(std::move(p));
  }
  {
    TranslationPattern p;
    p.name = "type-statement";
    p.trigger_kind = vocab::type_statement_unit;
    p.preconditions = {
        atom("kind", {C(vocab::type_statement_unit)}),
        atom("kind", {C(vocab::negation_unit)}, true),
        atom("subject", {V("s")}),
        atom("target", {V("c")}),
    };
    p.axiom_templates = {
        Axiom::class_assertion(ClassExpr::named(V("c")), V("s")),
    };
    r.register_pattern(std::move(p));
  }
  {
    TranslationPattern p;
    p.name = "assertional-relation";
    p.trigger_kind = vocab::assertional_statement_unit;
    p.preconditions = {
        atom("kind", {C(vocab::assertional_statement_unit)}),
        atom("kind", {C(vocab::negation_unit)}, true),
        atom("object-cardinality-restricted", {}, true),
        atom("property", {V("p")}),
        atom("subject", {V("s")}),
        atom("object", {V("o")}),
    };
    p.axiom_templates = {
        Axiom::object_property_assertion(V("p"), V("s"), V("o")),
    };
    r.register_pattern(std::move(p));
  }
  {
    TranslationPattern p;
    p.name = "universal-relation-collection";
    p.trigger_kind = vocab::universal_statement_unit;
    p.preconditions = {
        atom("kind", {C(vocab::universal_statement_unit)}),
        atom("kind", {C(vocab::negation_unit)}, true),
        atom("subject-marker", {V("m")}),
        atom("property", {V("p")}),
        atom("subject", {V("s")}),
        atom("object", {V("o")}),
    };
    p.axiom_templates = {
        Axiom::object_property_assertion(V("p"), V("s"), V("o")),
    };
    r.register_pattern(std::move(p));
  }
  {
    TranslationPattern p;
    p.name = "universal-relation-direct";
    p.trigger_kind = vocab::universal_statement_unit;
    p.preconditions = {
        atom("kind", {C(vocab::universal_statement_unit)}),
        atom("kind", {C(vocab::negation_unit)}, true),
        atom("property", {V("p")}),
        atom("subject-class", {V("c")}),
        atom("object-class", {V("d")}),
    };
    p.axiom_templates = {
        Axiom::subclass_of(
            ClassExpr::named(V("c")),
            ClassExpr::some_values_from(V("p"), ClassExpr::named(V("d")))),
    };
    r.register_pattern(std::move(p));
  }
  {
    TranslationPattern p;
    p.name = "subclass-of";
    p.trigger_kind = vocab::subclass_of_statement_unit;
    p.preconditions = {
        atom("kind", {C(vocab::subclass_of_statement_unit)}),
        atom("kind", {C(vocab::negation_unit)}, true),
        atom("subject", {V("a")}),
        atom("target", {V("b")}),
    };
    p.axiom_templates = {
        Axiom::subclass_of(ClassExpr::named(V("a")), ClassExpr::named(V("b"))),
    };
    r.register_pattern(std::move(p));
  }
  {
    TranslationPattern p;
    p.name = "equivalent-classes";
    p.trigger_kind = vocab::equivalent_class_statement_unit;
    p.preconditions = {
        atom("kind", {C(vocab::equivalent_class_statement_unit)}),
        atom("kind", {C(vocab::negation_unit)}, true),
        atom("subject", {V("a")}),
        atom("target", {V("b")}),
    };
    p.axiom_templates = {
        Axiom::equivalent_classes(ClassExpr::named(V("a")), ClassExpr::named(V("b"))),
    };
    r.register_pattern(std::move(p));
  }
  {
    TranslationPattern p;
    p.name = "disjoint-classes";
    p.trigger_kind = vocab::disjoint_class_statement_unit;
    p.preconditions = {
        atom("kind", {C(vocab::disjoint_class_statement_unit)}),
        atom("kind", {C(vocab::negation_unit)}, true),
        atom("subject", {V("a")}),
        atom("target", {V("b")}),
    };
    p.axiom_templates = {
        Axiom::disjoint_classes(ClassExpr::named(V("a")), ClassExpr::named(V("b"))),
    };
    r.register_pattern(std::move(p));
  }
  {
    TranslationPattern p;
    p.name = "same-individual";
    p.trigger_kind = vocab::same_individual_statement_unit;
    p.preconditions = {
        atom("kind", {C(vocab::same_individual_statement_unit)}),
        atom("kind", {C(vocab::negation_unit)}, true),
        atom("subject", {V("a")}),
        atom("object", {V("b")}),
    };
    p.axiom_templates = {
        Axiom::same_individual(V("a"), V("b")),
    };
    r.register_pattern(std::move(p));
  }
  return r;
}

Iri skolem_iri(const Gupri& unit, unsigned index) {
  return Iri(fmt::format("{}#sk{}", unit.value, index));
}

std::vector<PatternAtom> unit_fact_base(const Store& store, const Gupri& unit) {
  const SemanticUnit& u = store.unit(unit);
  std::vector<PatternAtom> facts;
  auto add = [&](std::string pred, std::vector<Iri> args) {
    PatternAtom a;
    a.predicate = std::move(pred);
    for (Iri& i : args) a.args.push_back(PTerm::of(std::move(i)));
    facts.push_back(std::move(a));
  };
  for (const Iri& k : u.kinds) add("kind", {k});
  if (u.subject) {
    add("subject", {*u.subject});
    if (store.has_resource(*u.subject)) {
      const TypedResource& res = store.resource(*u.subject);
      if (res.category == ResourceCategory::ClassRef) {
        add("subject-class", {res.iri});
      } else if (res.target_class) {
        add("subject-class", {*res.target_class});
      }
      if (auto marker = resource_marker(res.category)) {
        add("subject-marker", {*marker});
      }
    }
  }
  if (const auto view = relation_view(store, unit)) {
    add("property", {view->property});
    if (term_is_iri(view->filler)) {
      const Iri obj = term_iri(view->filler);
      if (view->slot_kind == SlotKind::ClassReference) {
        add("target", {obj});
      } else if (view->slot_kind == SlotKind::Resource) {
        add("object", {obj});
        if (store.has_resource(obj)) {
          const TypedResource& res = store.resource(obj);
          if (res.target_class) add("object-class", {*res.target_class});
          if (auto ident = find_identification_unit(store, obj)) {
            if (store.unit(*ident).has_kind(vocab::cardinality_restriction_unit)) {
              add("object-cardinality-restricted", {});
            }
          }
        }
      }
    }
  }
  return facts;
}

std::vector<Axiom> translate_unit(const Store& store, const PatternRegistry& registry,
                                  const Gupri& unit) {
  const SemanticUnit& u = store.unit(unit);
  if (!u.owns_data_graph) {
    raise(Err::NotAStatementUnit, fmt::format("{} owns no data graph", unit.value));
  }
  if (u.has_kind(vocab::cardinality_restriction_unit)) {
    return translate_cardinality(store, unit);
  }
  if (u.is_negated()) {
    return translate_negation(store, unit);
  }

  const std::vector<PatternAtom> facts = unit_fact_base(store, unit);
  std::vector<Axiom> out;
  for (const TranslationPattern& p : registry.patterns()) {
    if (!u.has_kind(p.trigger_kind)) continue;
    for (const Bindings& b : match_pattern(p, facts)) {
      Bindings full = b;
      for (std::size_t i = 0; i < p.fresh_names.size(); ++i) {
        full[p.fresh_names[i]] = skolem_iri(unit, static_cast<unsigned>(i));
      }
      for (const Axiom& t : p.axiom_templates) {
        Axiom ax = subst(t, full);
        if (std::find(out.begin(), out.end(), ax) == out.end()) {
          out.push_back(std::move(ax));
        }
      }
    }
  }
  if (out.empty() && fallback_eligible(store, u, facts)) {
    out = fallback_abox(store, unit);
  }
  return out;
}

std::vector<Axiom> translate_negation(const Store& store, const Gupri& unit) {
  const SemanticUnit& u = store.unit(unit);
  if (!u.is_negated()) raise(Err::NotNegated, unit.value);
  const auto view = relation_view(store, unit);
  if (!view || !store.has_resource(view->subject)) {
    raise(Err::UnsupportedNegation,
          fmt::format("{} has no single-object relational form", unit.value));
  }
  const TypedResource& sres = store.resource(view->subject);

  if (view->slot_kind == SlotKind::ClassReference) {
    if (sres.category != ResourceCategory::NamedIndividual &&
        sres.category != ResourceCategory::SomeInstance) {
      raise(Err::UnsupportedNegation,
            fmt::format("negated typing of a {} subject",
                        resource_category_name(sres.category)));
    }
    const Iri cls = term_iri(view->filler);
    return {Axiom::class_assertion(
        ClassExpr::complement_of(ClassExpr::named(C(cls))), C(view->subject))};
  }

  if (view->slot_kind != SlotKind::Resource || !term_is_iri(view->filler)) {
    raise(Err::UnsupportedNegation, "negated literal statement");
  }
  if (sres.category != ResourceCategory::NamedIndividual) {
    raise(Err::UnsupportedNegation,
          fmt::format("negated relation of a {} subject",
                      resource_category_name(sres.category)));
  }
  const Iri obj = term_iri(view->filler);
  if (!store.has_resource(obj)) {
    raise(Err::UnsupportedNegation, fmt::format("{} is not a resource", obj.value));
  }
  const TypedResource& ores = store.resource(obj);
  if (ores.category == ResourceCategory::NamedIndividual) {
    return {Axiom::negative_object_property_assertion(C(view->property),
                                                      C(view->subject), C(obj))};
  }
  if (ores.category == ResourceCategory::SomeInstance && ores.target_class) {
    return {Axiom::class_assertion(
        ClassExpr::complement_of(ClassExpr::some_values_from(
            C(view->property), ClassExpr::named(C(*ores.target_class)))),
        C(view->subject))};
  }
  raise(Err::UnsupportedNegation,
        fmt::format("negated relation to a {} object",
                    resource_category_name(ores.category)));
}

std::vector<Axiom> translate_cardinality(const Store& store, const Gupri& unit) {
  const SemanticUnit& u = store.unit(unit);
  const auto spec = read_cardinality(store, unit);
  if (!spec) {
    raise(Err::InvalidSpec, fmt::format("{} carries no cardinality", unit.value));
  }
  if (spec->form == CardinalityForm::Range) {
    raise(Err::RangeFormNotTranslatable, unit.value);
  }
  const Iri resource = *u.subject;
  const TypedResource& res = store.resource(resource);
  const Iri sk = skolem_iri(unit, 0);

  std::vector<Axiom> out;
  out.push_back(Axiom::class_assertion(
      ClassExpr::intersection_of(
          {ClassExpr::named(C(vocab::collection_class)),
           ClassExpr::exact_cardinality(C(vocab::has_member),
                                        static_cast<unsigned>(*spec->exact),
                                        ClassExpr::named(C(*res.target_class)))}),
      C(sk)));

  for (const auto& [g, v] : store.units()) {
    if (g == unit || !v.owns_data_graph || v.is_negated()) continue;
    const auto view = relation_view(store, g);
    if (!view || view->slot_kind != SlotKind::Resource) continue;
    if (!term_is_iri(view->filler) || term_iri(view->filler) != resource) continue;
    out.push_back(
        Axiom::object_property_assertion(C(view->property), C(view->subject), C(sk)));
    break;
  }
  return out;
}

TranslationResult translate_store(const Store& store, const PatternRegistry& registry,
                                  std::optional<LogicFramework> only) {
  TranslationResult result;
  for (const auto& [g, u] : store.units()) {
    if (!u.owns_data_graph) continue;
    if (only && u.metadata.logic_framework != *only) {
      result.skipped.push_back(
          {g, fmt::format("framework:{}", framework_name(u.metadata.logic_framework))});
      continue;
    }
    try {
      std::vector<Axiom> axioms = translate_unit(store, registry, g);
      if (axioms.empty()) {
        result.skipped.push_back({g, "no-pattern"});
        continue;
      }
      result.axioms.insert(result.axioms.end(), axioms.begin(), axioms.end());
    } catch (const Error& e) {
      if (e.code() == Err::UnsupportedNegation) {
        result.skipped.push_back({g, "unsupported-negation"});
      } else if (e.code() == Err::RangeFormNotTranslatable) {
        result.skipped.push_back({g, "range-form"});
      } else {
        throw;
      }
    }
  }
  sort_axioms(result.axioms, store.prefixes());
  return result;
}

std::vector<Axiom> materialize(std::vector<Axiom> axioms) {
  std::set<Axiom> theory(axioms.begin(), axioms.end());
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<Axiom> fresh;
    for (const Axiom& x : theory) {
      if (x.kind == Axiom::Kind::SubClassOf) {
        for (const Axiom& y : theory) {
          if (y.kind == Axiom::Kind::SubClassOf && x.classes[1] == y.classes[0] &&
              x.classes[0] != y.classes[1]) {
            fresh.push_back(Axiom::subclass_of(x.classes[0], y.classes[1]));
          }
        }
      } else if (x.kind == Axiom::Kind::ClassAssertion) {
        for (const Axiom& y : theory) {
          if (y.kind == Axiom::Kind::SubClassOf && y.classes[0] == x.classes[0]) {
            fresh.push_back(Axiom::class_assertion(y.classes[1], x.a));
          }
        }
      } else if (x.kind == Axiom::Kind::ObjectPropertyAssertion &&
                 x.property != C(vocab::member_of) &&
                 x.property != C(vocab::has_member)) {
        // Lift a property asserted on a collection of every instance of C to
        // a subclass axiom over the object's kind.
        if (!theory.count(Axiom::class_assertion(
                ClassExpr::named(C(vocab::collection_class)), x.a))) {
          continue;
        }
        for (const Axiom& sc : theory) {
          if (sc.kind != Axiom::Kind::SubClassOf) continue;
          const ClassExpr& super = sc.classes[1];
          if (super.kind != ClassExpr::Kind::SomeValuesFrom ||
              super.property != C(vocab::member_of)) {
            continue;
          }
          const ClassExpr& filler = super.children.front();
          if (filler.kind != ClassExpr::Kind::OneOf ||
              filler.individuals.size() != 1 || filler.individuals[0] != x.a) {
            continue;
          }
          for (const Axiom& ca : theory) {
            if (ca.kind != Axiom::Kind::ClassAssertion || ca.a != x.b) continue;
            const ClassExpr& object_kind = ca.classes[0];
            if (object_kind.kind != ClassExpr::Kind::Named ||
                object_kind.entity == C(vocab::collection_class)) {
              continue;
            }
            fresh.push_back(Axiom::subclass_of(
                sc.classes[0],
                ClassExpr::some_values_from(x.property, object_kind)));
          }
        }
      }
    }
    for (Axiom& ax : fresh) {
      if (theory.insert(std::move(ax)).second) changed = true;
    }
  }
  return {theory.begin(), theory.end()};
}

std::vector<VariableBinding> pattern_entailment(const TranslationPattern& pattern,
                                                const std::vector<Axiom>& ontology,
                                                const std::vector<Iri>& entities) {
  if (!pattern.fresh_names.empty()) {
    raise(Err::InvalidSpec, "fresh names have no entailment reading");
  }
  std::set<std::string> varset;
  for (const Axiom& t : pattern.axiom_templates) collect_vars(t, varset);
  const std::vector<std::string> vars(varset.begin(), varset.end());
  if (vars.size() > 3) {
    raise(Err::TooManyVariables, fmt::format("{} variables", vars.size()));
  }

  const std::vector<Axiom> closed = materialize(ontology);
  const std::set<Axiom> theory(closed.begin(), closed.end());

  std::vector<VariableBinding> out;
  std::vector<std::size_t> odo(vars.size(), 0);
  while (true) {
    if (!vars.empty() && entities.empty()) break;
    Bindings b;
    for (std::size_t i = 0; i < vars.size(); ++i) b[vars[i]] = entities[odo[i]];
    bool holds = true;
    for (const Axiom& t : pattern.axiom_templates) {
      if (!theory.count(subst(t, b))) {
        holds = false;
        break;
      }
    }
    if (holds) out.push_back(b);
    std::size_t i = 0;
    for (; i < odo.size(); ++i) {
      if (++odo[i] < entities.size()) break;
      odo[i] = 0;
    }
    if (i == odo.size()) break;
  }
  return out;
}

}  // namespace semunit
