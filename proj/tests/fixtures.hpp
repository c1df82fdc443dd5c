#pragma once

#include <semunit/compound.hpp>
#include <semunit/discourse.hpp>
#include <semunit/modifier.hpp>
#include <semunit/resource.hpp>
#include <semunit/statement.hpp>
#include <semunit/store.hpp>

#include <string>
#include <utility>
#include <vector>

// Shared test corpus. Every builder returns a fresh store so tests can
// mutate freely.
namespace fx {

using namespace semunit;

Iri ex(const std::string& local);
Iri obo(const std::string& local);

Iri weight_schema_id();
Iri quality_schema_id();
Iri part_of_schema_id();
Iri has_part_schema_id();
Iri longer_than_schema_id();
Iri subclass_schema_id();
Iri equivalent_schema_id();
Iri disjoint_schema_id();
Iri same_as_schema_id();

// Registers the fixture schemas plus the built-in type schema and the "ex"
// prefix on a fresh store.
Store base_store();

// Three apples with weights (204.56 / 150 / 350 grams), a red quality on
// apple X, identification units, and the apple X item unit.
struct ApplesFixture {
  Store store;
  Gupri ident_x, ident_y, ident_z;
  Gupri weight_x, weight_y, weight_z;
  Gupri red_unit;
  Gupri item_x;
};
ApplesFixture apples();

// Swans Anton and Berta plus the some/most/every swan resources and one
// quality statement per statement category.
struct SwansFixture {
  Store store;
  Gupri ident_anton, ident_berta, ident_white, ident_some_white;
  Gupri ident_some_swan, ident_most_swans, ident_every_swan;
  Gupri assertional, contingent, prototypical, universal;
};
SwansFixture swans();

// Minimal default-reasoning store: two named swans, the prototypical quality
// statement, and optionally a strong-negation blocker on Berta.
struct DefaultsFixture {
  Store store;
  Gupri prototypical;
  std::vector<Iri> swan_individuals;
};
DefaultsFixture defaults_fixture(bool with_blocker);

// A negated typing, a negated relation between named individuals, and a
// negated relation onto a some-instance object.
struct NegationFixture {
  Store store;
  Gupri not_pome;
  Gupri not_part;
  Gupri not_has_antenna;
};
NegationFixture negation();

// Exact-cardinality eyes collection with its part-of companion statement,
// plus a range-restricted identification.
struct CardinalityFixture {
  Store store;
  Gupri eyes_ident;
  Gupri part_unit;
  Gupri range_ident;
};
CardinalityFixture cardinality();

// Antenna type 1 triangle: three item units joined by the shared organism
// resource, grouped into one universal item group.
struct AntennaFixture {
  Store store;
  Gupri part_antenna, longer_unit, part_eye;
  Gupri item_antenna, item_eye, item_organism;
  Gupri group;
};
AntennaFixture antenna();

// Four persons taking stances on one target statement; person D takes a
// referential stance on person A's stance.
struct EpistemicFixture {
  Store store;
  Gupri target;
  Gupri stance_a, stance_b, stance_c, stance_d;
};
EpistemicFixture epistemic();

// Swan population with `white` positive observations and `plain` swans
// without one, plus one argument unit per argument kind.
struct ArgumentFixture {
  Store store;
  Gupri case_ident;
  Gupri rule_universal, rule_prototypical;
  Gupri result_unit;
  Gupri deduction, abduction;
  Gupri induction_contingent, induction_prototypical, induction_universal;
};
ArgumentFixture arguments(int white, int plain);

// Summit wrapped with a time interval, a geo index, and a sequence position.
struct ContextFixture {
  Store store;
  Gupri core;
  ContextualUnit ctx;
};
ContextFixture g7_context();

// Swans store with every unit stamped OWL-DL except the prototypical
// statement, which is stamped as a logic-program rule.
struct MixedFixture {
  Store store;
  Gupri lp_unit;
  std::vector<Gupri> owl_units;
};
MixedFixture mixed_frameworks();

// Named corpus of every fixture store, for whole-store sweeps.
std::vector<std::pair<std::string, Store>> corpus();

}  // namespace fx
