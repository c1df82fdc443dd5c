#pragma once

#include "semunit/iri.hpp"

#include <optional>
#include <set>
#include <vector>

namespace semunit {

enum class LogicFramework { OwlDl, Fol, LogicProgram, None };

const char* framework_name(LogicFramework f);
std::optional<LogicFramework> framework_from_name(const std::string& name);

struct UnitMetadata {
  std::optional<Iri> schema_id;
  std::vector<Iri> authors; // kept sorted
  LogicFramework logic_framework = LogicFramework::None;
  std::optional<double> certainty; // [0, 1]
  std::optional<std::string> source;
  std::optional<std::string> extraction_method;
  std::optional<Iri> creator;
  std::optional<std::string> created_at;
  std::optional<std::string> license;
  std::optional<std::string> version;

  bool operator==(const UnitMetadata&) const = default;
};

struct Association {
  Iri role;
  Gupri target;

  auto operator<=>(const Association&) const = default;
  bool operator==(const Association&) const = default;
};

enum class StatementCategory { Assertional, Contingent, Prototypical, Universal, Lexical };

const char* category_name(StatementCategory c);

/// One semantic unit. Statement units own a named data graph under their
/// Gupri; compound units carry meaning purely through associations.
struct SemanticUnit {
  Gupri gupri;
  std::set<Iri> kinds;
  std::optional<Iri> subject;
  std::vector<Association> associations; // kept sorted
  bool owns_data_graph = true;
  std::optional<Iri> anchor; // compound units: the described entity
  UnitMetadata metadata;

  bool has_kind(const Iri& k) const { return kinds.count(k) != 0; }
  bool is_statement_unit() const { return owns_data_graph; }
  bool is_negated() const;
  std::optional<StatementCategory> category() const;

  bool operator==(const SemanticUnit&) const = default;
};

/// Category class IRI <-> enum.
Iri category_class(StatementCategory c);
std::optional<StatementCategory> category_from_class(const Iri& iri);

} // namespace semunit
