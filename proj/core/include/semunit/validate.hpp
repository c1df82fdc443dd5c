#pragma once

#include "semunit/store.hpp"

#include <string>
#include <vector>

namespace semunit {

struct ValidationIssue {
  std::string check;
  std::string message;

  bool operator==(const ValidationIssue&) const = default;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;

  bool ok() const { return issues.empty(); }
};

/// Structural health checks over the whole store: the data layer partitions
/// cleanly, every unit has a usable gupri, associations point at registered
/// units, unit records and data graphs are retrievable, and every unit is
/// typed consistently with its shape.
ValidationReport validate_store(const Store& store);

} // namespace semunit
