#pragma once

#include "semunit/store.hpp"

#include <string>

namespace semunit {

/// Serialize the store as TriG: sorted prefix directives, the units layer in
/// the default graph, then one named graph per data-graph-owning unit, all in
/// lexicographic order. Raises PartitionViolation when the data layer is not
/// a clean partition.
std::string export_trig(const Store& store);

/// Rebuild a store from TriG produced by export_trig. Accepts the subset this
/// library emits; blank nodes are rejected (BlankNodeRejected), malformed
/// input raises ParseError, duplicated data triples raise PartitionViolation.
Store import_trig(const std::string& text, std::string gupri_base = "");

} // namespace semunit
