#pragma once

#include "semunit/iri.hpp"

#include <optional>
#include <string>
#include <vector>

namespace semunit {

enum class SlotKind { Resource, LiteralValue, ClassReference };

struct SlotSpec {
  std::string role;
  SlotKind kind = SlotKind::Resource;
  std::optional<Iri> expected_class;       // resource slots; empty accepts any
  std::optional<Datatype> expected_datatype; // literal slots
};

/// Helper node minted inside the unit's data graph, named unit-gupri + "#" + name.
struct InternalNode {
  std::string name;
  std::optional<Iri> type_class; // emits an rdf:type triple when set
};

/// Directed edge of the data-graph layout. Endpoints name "subject", a slot
/// role, or an internal node.
struct GraphEdge {
  std::string from;
  Iri property;
  std::string to;
};

/// Edge of the human-facing mind map; endpoints are slot roles or "subject".
struct MapEdge {
  std::string from;
  std::string label;
  std::string to;
};

enum class RangeShape { Any, Open, Bounded };

/// Question phrasing, selected by which roles are underspecified.
struct QuestionLabel {
  std::vector<std::string> underspecified; // sorted role names
  RangeShape shape = RangeShape::Any;
  std::string text;
};

/// Reusable statement-unit layout: slot expectations, data-graph shape,
/// label templates and mind-map projection.
struct SchemaTemplate {
  Iri id;
  std::string name;
  Iri relation_class;
  std::optional<Iri> principal_property;
  std::vector<SlotSpec> slots; // object slots; the subject slot is implicit
  std::vector<InternalNode> internal_nodes;
  std::vector<GraphEdge> edges;
  std::string label_template; // "{role}" placeholders; "{¬}" marks the negation insert
  std::vector<MapEdge> map_edges;
  std::vector<QuestionLabel> question_labels;

  const SlotSpec* find_slot(const std::string& role) const;
  void validate() const;
};

} // namespace semunit
