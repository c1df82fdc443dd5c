#pragma once

#include "semunit/iri.hpp"
#include "semunit/schema.hpp"
#include "semunit/store.hpp"
#include "semunit/unit.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace semunit {

using SlotBindings = std::map<std::string, Term>;

/// Create a schema-backed statement unit: checks the fillers against the
/// schema slots, classifies the statement by its subject's resource category,
/// mints a Gupri and materializes the data graph.
Gupri create_statement_unit(Store& store, const Iri& schema_id, const Iri& subject,
                            const SlotBindings& objects, UnitMetadata meta = {},
                            std::optional<StatementCategory> expected_category = std::nullopt);

/// Statement unit whose subject or some object position names another
/// semantic unit; referenced units are recorded as associations.
Gupri create_complex_statement_unit(Store& store, const std::string& hint, const Iri& subject,
                                    const std::vector<Triple>& triples, UnitMetadata meta = {});

/// Replace the unit's metadata. Touches the units layer only.
void attach_metadata(Store& store, const Gupri& unit, UnitMetadata meta);

/// Recover the slot fillers of a schema-backed unit from its data graph.
SlotBindings extract_slots(const Store& store, const Gupri& unit);

/// Subject-property-filler reading of a unit whose schema has exactly one
/// object slot and a principal property.
struct RelationView {
  Iri property;
  Iri subject;
  std::string role;
  Term filler;
  SlotKind slot_kind = SlotKind::Resource;
};

std::optional<RelationView> relation_view(const Store& store, const Gupri& unit);

/// Statement category implied by a subject IRI (resource record or unit ref).
StatementCategory subject_category(const Store& store, const Iri& subject);

/// Plain class-membership statements: a single rdf:type triple.
SchemaTemplate type_statement_schema();

} // namespace semunit
