#include "semunit/validate.hpp"

#include "semunit/error.hpp"
#include "semunit/vocab.hpp"

#include <fmt/format.h>

namespace semunit {

namespace {

void check_partitionability(const Store& store, std::vector<ValidationIssue>& issues) {
  const PartitionReport report = store.verify_partition();
  for (const auto& [t, graphs] : report.duplicates) {
    std::string where;
    for (const Gupri& g : graphs)
      where += (where.empty() ? "" : ", ") + g.value;
    issues.push_back({"partitionability",
                      fmt::format("triple '{}' appears in several graphs: {}",
                                  triple_key(t), where)});
  }
  for (const auto& [g, t] : report.orphans)
    issues.push_back({"partitionability",
                      fmt::format("graph '{}' holds '{}' but is no statement unit",
                                  g.value, triple_key(t))});
}

void check_gupri_assignment(const Store& store, std::vector<ValidationIssue>& issues) {
  for (const auto& [g, u] : store.units()) {
    if (u.gupri.value.empty())
      issues.push_back({"gupri-assignment", "unit registered without a gupri"});
    else if (u.gupri != g)
      issues.push_back({"gupri-assignment",
                        fmt::format("unit filed under '{}' names itself '{}'", g.value,
                                    u.gupri.value)});
  }
}

void check_composable_referencing(const Store& store, std::vector<ValidationIssue>& issues) {
  for (const auto& [g, u] : store.units()) {
    for (const Association& a : u.associations)
      if (!store.has_unit(a.target))
        issues.push_back({"composable-referencing",
                          fmt::format("unit '{}' references unknown unit '{}'", g.value,
                                      a.target.value)});
  }
}

void check_retrievability(const Store& store, std::vector<ValidationIssue>& issues) {
  for (const auto& [g, u] : store.units()) {
    bool typed = false;
    for (const Iri& k : u.kinds)
      if (store.units_layer().count(triple(g, vocab::rdf_type, k)))
        typed = true;
    if (!typed)
      issues.push_back({"retrievability",
                        fmt::format("unit '{}' has no type record in the units layer",
                                    g.value)});
    if (u.owns_data_graph) {
      try {
        store.data_graph(g);
      } catch (const Error&) {
        issues.push_back({"retrievability",
                          fmt::format("unit '{}' owns a data graph that is missing",
                                      g.value)});
      }
    }
  }
}

void check_typed_instantiation(const Store& store, std::vector<ValidationIssue>& issues) {
  for (const auto& [g, u] : store.units()) {
    if (u.kinds.empty()) {
      issues.push_back({"typed-instantiation",
                        fmt::format("unit '{}' carries no kind", g.value)});
      continue;
    }
    if (u.owns_data_graph && !u.category() && !u.has_kind(vocab::question_unit))
      issues.push_back({"typed-instantiation",
                        fmt::format("statement unit '{}' has no statement category",
                                    g.value)});
    if (u.subject && !store.has_resource(*u.subject) && !store.has_unit(*u.subject))
      issues.push_back({"typed-instantiation",
                        fmt::format("unit '{}' has undeclared subject '{}'", g.value,
                                    u.subject->value)});
  }
}

} // namespace

ValidationReport validate_store(const Store& store) {
  ValidationReport report;
  check_partitionability(store, report.issues);
  check_gupri_assignment(store, report.issues);
  check_composable_referencing(store, report.issues);
  check_retrievability(store, report.issues);
  check_typed_instantiation(store, report.issues);
  return report;
}

} // namespace semunit
