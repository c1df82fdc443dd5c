#pragma once

#include <optional>
#include <string>
#include <vector>

#include "semunit/store.hpp"

namespace semunit {

// Negation is a tag on an existing statement unit: the unit keeps its data
// graph and schema, and downstream consumers (labels, translation, queries)
// interpret the tag.
void negate(Store& store, const Gupri& unit);
void un_negate(Store& store, const Gupri& unit);
bool is_negated(const Store& store, const Gupri& unit);

enum class CardinalityForm { Exact, Range };

// Exact form fixes the number of instances denoted by a some-instance
// resource; range form brackets it with numeric bounds and an optional unit
// of measure for the bounds (for example percent).
struct CardinalitySpec {
  CardinalityForm form = CardinalityForm::Exact;
  std::optional<long long> exact;
  std::optional<Literal> min;
  std::optional<Literal> max;
  std::optional<Iri> value_unit;
};

void restrict_cardinality(Store& store, const Gupri& identification_unit,
                          const CardinalitySpec& spec);
std::optional<CardinalitySpec> read_cardinality(const Store& store,
                                                const Gupri& identification_unit);

enum class BoolOp { And, Or, Xor, Not, Equal };

std::string bool_op_name(BoolOp op);
Iri bool_op_class(BoolOp op);

// Boolean units are compound units over existing units; operands are kept as
// associations and the unit owns no data graph.
Gupri build_boolean_unit(Store& store, BoolOp op, const std::vector<Gupri>& operands);

BoolOp boolean_unit_op(const Store& store, const Gupri& unit);
std::vector<Gupri> boolean_unit_operands(const Store& store, const Gupri& unit);

}  // namespace semunit
