#include "semunit/schema.hpp"

#include "semunit/error.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <set>

namespace semunit {

const SlotSpec* SchemaTemplate::find_slot(const std::string& role) const {
  for (const SlotSpec& s : slots)
    if (s.role == role)
      return &s;
  return nullptr;
}

void SchemaTemplate::validate() const {
  if (id.value.empty())
    raise(Err::InvalidSpec, "schema without an id");
  if (relation_class.value.empty())
    raise(Err::InvalidSpec, fmt::format("schema '{}' without a relation class", id.value));

  std::set<std::string> names{"subject"};
  for (const SlotSpec& s : slots) {
    if (s.role.empty() || s.role == "subject")
      raise(Err::InvalidSpec, fmt::format("schema '{}': bad slot role '{}'", id.value, s.role));
    if (!names.insert(s.role).second)
      raise(Err::InvalidSpec, fmt::format("schema '{}': duplicate role '{}'", id.value, s.role));
    if (s.kind == SlotKind::LiteralValue && !s.expected_datatype)
      raise(Err::InvalidSpec,
            fmt::format("schema '{}': literal slot '{}' without a datatype", id.value, s.role));
  }
  if (slots.empty())
    raise(Err::InvalidSpec, fmt::format("schema '{}' has no object slots", id.value));

  for (const InternalNode& n : internal_nodes) {
    if (n.name.empty() || !names.insert(n.name).second)
      raise(Err::InvalidSpec,
            fmt::format("schema '{}': bad internal node '{}'", id.value, n.name));
  }
  for (const GraphEdge& e : edges) {
    if (!names.count(e.from) || !names.count(e.to))
      raise(Err::InvalidSpec,
            fmt::format("schema '{}': edge {} -> {} uses an unknown name", id.value, e.from, e.to));
  }
  for (const MapEdge& e : map_edges) {
    if (!names.count(e.from) || !names.count(e.to))
      raise(Err::InvalidSpec,
            fmt::format("schema '{}': map edge {} -> {} uses an unknown name", id.value, e.from,
                        e.to));
  }
  for (const QuestionLabel& q : question_labels) {
    if (!std::is_sorted(q.underspecified.begin(), q.underspecified.end()))
      raise(Err::InvalidSpec,
            fmt::format("schema '{}': question label roles must be sorted", id.value));
    for (const std::string& role : q.underspecified)
      if (!names.count(role))
        raise(Err::InvalidSpec,
              fmt::format("schema '{}': question label names unknown role '{}'", id.value, role));
  }
}

} // namespace semunit
