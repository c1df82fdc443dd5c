#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "semunit/axiom.hpp"
#include "semunit/store.hpp"

namespace semunit {

/// Condition over the per-unit fact base. Negated atoms hold when no fact
/// matches under the current bindings.
struct PatternAtom {
  std::string predicate;
  bool negated = false;
  std::vector<PTerm> args;
};

/// Declarative unit-to-axioms rule: preconditions bind variables against the
/// unit's fact base, templates are instantiated under those bindings, and
/// fresh names receive unit-scoped skolem individuals.
struct TranslationPattern {
  std::string name;
  Iri trigger_kind;
  std::vector<PatternAtom> preconditions;
  std::vector<Axiom> axiom_templates;
  std::vector<std::string> fresh_names;
};

class PatternRegistry {
 public:
  /// Checks that template and negated-atom variables are bound by positive
  /// preconditions or fresh names. Duplicates keep registration order.
  void register_pattern(TranslationPattern p);

  const std::vector<TranslationPattern>& patterns() const { return patterns_; }

 private:
  std::vector<TranslationPattern> patterns_;
};

/// Registry preloaded with the identification, type, relation and
/// class-axiom rules.
PatternRegistry builtin_registry();

struct SkipEntry {
  Gupri unit;
  std::string reason;

  auto operator<=>(const SkipEntry&) const = default;
};

struct TranslationResult {
  std::vector<Axiom> axioms;
  std::vector<SkipEntry> skipped;
};

/// Unit-scoped skolem individual.
Iri skolem_iri(const Gupri& unit, unsigned index);

/// Ground atoms describing one unit: kinds, subject, classes, schema
/// property, single-object fillers and object modifiers.
std::vector<PatternAtom> unit_fact_base(const Store& store, const Gupri& unit);

/// Axioms for one statement unit, in rule order. Negated and
/// cardinality-restricted units take their dedicated routes; plain
/// assertional units without a matching rule fall back to a triple-by-triple
/// reading of their data graph.
std::vector<Axiom> translate_unit(const Store& store, const PatternRegistry& registry,
                                  const Gupri& unit);

std::vector<Axiom> translate_negation(const Store& store, const Gupri& unit);
std::vector<Axiom> translate_cardinality(const Store& store, const Gupri& unit);

/// Whole-store translation with an optional logic-framework filter; skipped
/// units are reported with a reason.
TranslationResult translate_store(const Store& store, const PatternRegistry& registry,
                                  std::optional<LogicFramework> only = std::nullopt);

/// Finite forward closure: subclass transitivity, class-assertion
/// propagation, and lifting of collection-level property assertions to
/// subclass axioms.
std::vector<Axiom> materialize(std::vector<Axiom> axioms);

using VariableBinding = std::map<std::string, Iri>;

/// Brute-force check which entity tuples make every template axiom hold in
/// the materialized ontology. At most three distinct variables.
std::vector<VariableBinding> pattern_entailment(const TranslationPattern& pattern,
                                                const std::vector<Axiom>& ontology,
                                                const std::vector<Iri>& entities);

}  // namespace semunit
