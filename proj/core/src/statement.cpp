#include "semunit/statement.hpp"

#include "semunit/error.hpp"
#include "semunit/vocab.hpp"

#include <fmt/format.h>

#include <algorithm>

namespace semunit {

namespace {

Iri internal_node_iri(const Gupri& unit, const std::string& name) {
  return Iri(unit.value + "#" + name);
}

void check_filler(const Store& store, const SchemaTemplate& schema, const SlotSpec& slot,
                  const Term& filler) {
  switch (slot.kind) {
  case SlotKind::Resource: {
    if (!term_is_iri(filler))
      raise(Err::SlotMismatch,
            fmt::format("slot '{}' of '{}' expects a resource", slot.role, schema.name));
    const Iri& iri = term_iri(filler);
    if (!store.has_resource(iri))
      raise(Err::SlotMismatch,
            fmt::format("slot '{}' of '{}': '{}' is not a declared resource", slot.role,
                        schema.name, iri.value));
    if (slot.expected_class) {
      const TypedResource& r = store.resource(iri);
      if (r.target_class != *slot.expected_class)
        raise(Err::SlotMismatch,
              fmt::format("slot '{}' of '{}': '{}' does not target {}", slot.role, schema.name,
                          iri.value, slot.expected_class->value));
    }
    break;
  }
  case SlotKind::ClassReference:
    if (!term_is_iri(filler))
      raise(Err::SlotMismatch,
            fmt::format("slot '{}' of '{}' expects a class IRI", slot.role, schema.name));
    break;
  case SlotKind::LiteralValue: {
    if (term_is_iri(filler))
      raise(Err::SlotMismatch,
            fmt::format("slot '{}' of '{}' expects a literal", slot.role, schema.name));
    const Literal& lit = term_literal(filler);
    if (slot.expected_datatype && lit.datatype != *slot.expected_datatype)
      raise(Err::SlotMismatch,
            fmt::format("slot '{}' of '{}': wrong datatype", slot.role, schema.name));
    break;
  }
  }
}

} // namespace

StatementCategory subject_category(const Store& store, const Iri& subject) {
  if (store.has_resource(subject))
    return classify_category(store.resource(subject).category);
  if (store.has_unit(subject))
    return StatementCategory::Assertional;
  raise(Err::UnknownResource,
        fmt::format("subject '{}' is neither a declared resource nor a unit", subject.value));
}

Gupri create_statement_unit(Store& store, const Iri& schema_id, const Iri& subject,
                            const SlotBindings& objects, UnitMetadata meta,
                            std::optional<StatementCategory> expected_category) {
  const SchemaTemplate& schema = store.schema(schema_id);
  if (!store.has_resource(subject))
    raise(Err::UnknownResource, fmt::format("subject '{}' is not declared", subject.value));
  const TypedResource& subj = store.resource(subject);
  const StatementCategory category = classify_category(subj.category);
  if (expected_category && *expected_category != category)
    raise(Err::SubjectCategoryConflict,
          fmt::format("subject '{}' yields a {} statement, {} requested", subject.value,
                      category_name(category), category_name(*expected_category)));

  for (const auto& [role, filler] : objects) {
    const SlotSpec* slot = schema.find_slot(role);
    if (!slot)
      raise(Err::UnknownRole, fmt::format("schema '{}' has no role '{}'", schema.name, role));
    check_filler(store, schema, *slot, filler);
  }
  for (const SlotSpec& slot : schema.slots) {
    if (!objects.count(slot.role))
      raise(Err::SlotMismatch,
            fmt::format("schema '{}': role '{}' left unfilled", schema.name, slot.role));
  }

  SemanticUnit u;
  u.gupri = store.mint_gupri(schema.name);
  u.kinds = {schema.relation_class, category_class(category)};
  u.subject = subject;
  u.owns_data_graph = true;
  meta.schema_id = schema.id;
  u.metadata = std::move(meta);
  const Gupri g = store.register_unit(std::move(u)).gupri;

  std::map<std::string, Term> resolved;
  resolved.emplace("subject", Term(subject));
  for (const auto& [role, filler] : objects)
    resolved.emplace(role, filler);
  for (const InternalNode& n : schema.internal_nodes) {
    Iri node = internal_node_iri(g, n.name);
    resolved.emplace(n.name, Term(node));
    if (n.type_class)
      store.add_triple(g, triple(node, vocab::rdf_type, *n.type_class));
  }
  for (const GraphEdge& e : schema.edges) {
    const Term& from = resolved.at(e.from);
    if (!term_is_iri(from))
      raise(Err::InvalidSpec,
            fmt::format("schema '{}': edge source '{}' is a literal", schema.name, e.from));
    store.add_triple(g, Triple{term_iri(from), e.property, resolved.at(e.to)});
  }
  return g;
}

Gupri create_complex_statement_unit(Store& store, const std::string& hint, const Iri& subject,
                                    const std::vector<Triple>& triples, UnitMetadata meta) {
  StatementCategory category = subject_category(store, subject);

  std::vector<Gupri> referenced;
  auto note_ref = [&](const Iri& iri) {
    if (store.has_unit(iri))
      referenced.push_back(iri);
  };
  note_ref(subject);
  for (const Triple& t : triples) {
    note_ref(t.subject);
    if (term_is_iri(t.object))
      note_ref(term_iri(t.object));
  }
  if (referenced.empty())
    raise(Err::InvalidSpec, "complex statement unit references no other unit");

  SemanticUnit u;
  u.gupri = store.mint_gupri(hint);
  u.kinds = {vocab::complex_statement_unit, category_class(category)};
  u.subject = subject;
  u.owns_data_graph = true;
  u.metadata = std::move(meta);
  const Gupri g = store.register_unit(std::move(u)).gupri;

  for (const Triple& t : triples)
    store.add_triple(g, t);
  std::sort(referenced.begin(), referenced.end());
  referenced.erase(std::unique(referenced.begin(), referenced.end()), referenced.end());
  for (const Gupri& target : referenced)
    store.add_association(g, vocab::has_associated_semantic_unit, target);
  return g;
}

void attach_metadata(Store& store, const Gupri& unit, UnitMetadata meta) {
  store.set_metadata(unit, std::move(meta));
}

SlotBindings extract_slots(const Store& store, const Gupri& unit_g) {
  const SemanticUnit& u = store.unit(unit_g);
  if (!u.metadata.schema_id)
    raise(Err::UnknownSchema, fmt::format("unit '{}' has no schema", unit_g.value));
  const SchemaTemplate& schema = store.schema(*u.metadata.schema_id);
  if (!u.subject)
    raise(Err::InvalidSpec, fmt::format("unit '{}' has no subject", unit_g.value));
  const auto& graph = store.data_graph(unit_g);

  std::map<std::string, Term> resolved;
  resolved.emplace("subject", Term(*u.subject));
  SlotBindings slots;
  for (const GraphEdge& e : schema.edges) {
    auto from = resolved.find(e.from);
    if (from == resolved.end() || !term_is_iri(from->second))
      raise(Err::SlotMismatch,
            fmt::format("unit '{}': edge source '{}' unresolved", unit_g.value, e.from));
    const Iri& s = term_iri(from->second);
    const Term* found = nullptr;
    for (const Triple& t : graph) {
      if (t.subject != s || t.predicate != e.property)
        continue;
      if (found)
        raise(Err::SlotMismatch,
              fmt::format("unit '{}': ambiguous edge {} -> {}", unit_g.value, e.from, e.to));
      found = &t.object;
    }
    if (!found)
      raise(Err::SlotMismatch,
            fmt::format("unit '{}': edge {} -> {} has no triple", unit_g.value, e.from, e.to));
    resolved.insert_or_assign(e.to, *found);
    if (schema.find_slot(e.to))
      slots.insert_or_assign(e.to, *found);
  }
  return slots;
}

std::optional<RelationView> relation_view(const Store& store, const Gupri& unit) {
  const SemanticUnit& u = store.unit(unit);
  if (!u.subject || !u.metadata.schema_id || !store.has_schema(*u.metadata.schema_id))
    return std::nullopt;
  const SchemaTemplate& schema = store.schema(*u.metadata.schema_id);
  if (schema.slots.size() != 1 || !schema.principal_property)
    return std::nullopt;
  const SlotSpec& slot = schema.slots.front();
  SlotBindings slots = extract_slots(store, unit);
  auto it = slots.find(slot.role);
  if (it == slots.end())
    return std::nullopt;
  return RelationView{*schema.principal_property, *u.subject, slot.role, it->second,
                      slot.kind};
}

SchemaTemplate type_statement_schema() {
  SchemaTemplate s;
  s.id = vocab::su("schema/type");
  s.name = "type";
  s.relation_class = vocab::type_statement_unit;
  s.principal_property = vocab::rdf_type;
  s.slots = {{"class", SlotKind::ClassReference, std::nullopt, std::nullopt}};
  s.edges = {{"subject", vocab::rdf_type, "class"}};
  s.label_template = "{subject} is{¬} a {class}";
  s.map_edges = {{"subject", "type", "class"}};
  s.question_labels = {{{}, RangeShape::Any, "Is {subject} a {class}?"}};
  return s;
}

} // namespace semunit
