#pragma once

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "semunit/store.hpp"

namespace semunit {

enum class Stance { Positive, Negative, Agnostic };

// Records that an agent asserts, disputes, or is agnostic about a target
// unit. The result is a complex statement unit whose single data triple links
// the agent to the target; it is marked referential when the target is itself
// an epistemic unit.
Gupri assert_stance(Store& store, const Iri& agent, Stance stance, const Gupri& target);

// First-order stances towards a target, one agent set per stance.
// Referential epistemic units are left out.
std::map<Stance, std::set<Iri>> stance_map(const Store& store, const Gupri& target);

struct DirectiveUnit {
  Gupri target;
  Iri subtype;
};

// Directives piggyback on the statement unit that carries the requested
// content: the unit is tagged rather than copied.
DirectiveUnit build_directive(Store& store, const Gupri& target);

struct ConditionalUnit {
  Gupri unit;
  Gupri if_clause;
  Gupri then_clause;
  bool directive = false;
};

ConditionalUnit build_conditional(Store& store, const Gupri& if_clause,
                                  const Gupri& then_clause);

enum class ArgumentKind { Deduction, Induction, Abduction };
enum class Boldness { Universal, Prototypical, Contingent };

struct ArgumentUnit {
  Gupri unit;
  ArgumentKind kind = ArgumentKind::Deduction;
  Gupri case_clause;
  Gupri rule_clause;
  Gupri result_clause;
  std::optional<Boldness> boldness;
  bool hypothesis = false;
};

ArgumentUnit build_argument(Store& store, ArgumentKind kind, const Gupri& case_clause,
                            const Gupri& rule_clause, const Gupri& result_clause,
                            std::optional<Boldness> boldness = std::nullopt);

// Rebuilds the record view of an argument unit already in the store.
ArgumentUnit read_argument(const Store& store, const Gupri& unit);

}  // namespace semunit
