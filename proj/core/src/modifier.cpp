#include "semunit/modifier.hpp"

#include <fmt/format.h>

#include <algorithm>

#include "semunit/vocab.hpp"
#include "semunit/error.hpp"

namespace semunit {

namespace {

const SemanticUnit& statement_unit_or_throw(const Store& store, const Gupri& g) {
  const SemanticUnit& u = store.unit(g);
  if (!u.owns_data_graph) {
    raise(Err::NotAStatementUnit, fmt::format("{} owns no data graph", g.value));
  }
  return u;
}

bool numeric_literal(const Literal& lit) {
  return lit.datatype == Datatype::Decimal || lit.datatype == Datatype::Integer;
}

}  // namespace

void negate(Store& store, const Gupri& unit) {
  const SemanticUnit& u = statement_unit_or_throw(store, unit);
  if (u.has_kind(vocab::cardinality_restriction_unit)) {
    raise(Err::IncompatibleModifiers,
          fmt::format("{} carries a cardinality restriction", unit.value));
  }
  store.add_kind(unit, vocab::negation_unit);
}

void un_negate(Store& store, const Gupri& unit) {
  statement_unit_or_throw(store, unit);
  store.remove_kind(unit, vocab::negation_unit);
}

bool is_negated(const Store& store, const Gupri& unit) {
  return store.unit(unit).is_negated();
}

void restrict_cardinality(Store& store, const Gupri& identification_unit,
                          const CardinalitySpec& spec) {
  const SemanticUnit& u = store.unit(identification_unit);
  if (!u.has_kind(vocab::some_instance_identification_unit)) {
    raise(Err::NotSomeInstanceUnit,
          fmt::format("{} does not identify a some-instance resource",
                      identification_unit.value));
  }
  if (u.is_negated()) {
    raise(Err::IncompatibleModifiers,
          fmt::format("{} is negated", identification_unit.value));
  }
  if (u.has_kind(vocab::cardinality_restriction_unit)) {
    raise(Err::IncompatibleModifiers,
          fmt::format("{} is already restricted", identification_unit.value));
  }
  if (spec.form == CardinalityForm::Exact) {
    if (!spec.exact || spec.min || spec.max || spec.value_unit) {
      raise(Err::InvalidSpec, "exact cardinality takes a single count");
    }
    if (*spec.exact < 0) {
      raise(Err::InvalidSpec, "cardinality must be non-negative");
    }
  } else {
    if (spec.exact) {
      raise(Err::InvalidSpec, "range cardinality excludes an exact count");
    }
    if (!spec.min && !spec.max) {
      raise(Err::InvalidSpec, "range cardinality needs at least one bound");
    }
    for (const auto& bound : {spec.min, spec.max}) {
      if (bound && !numeric_literal(*bound)) {
        raise(Err::InvalidSpec, "cardinality bounds must be numeric");
      }
    }
    if (spec.min && spec.max && compare_numeric(*spec.min, *spec.max) > 0) {
      raise(Err::InvalidSpec, "cardinality bounds are out of order");
    }
  }

  const Iri resource = *u.subject;
  if (spec.form == CardinalityForm::Exact) {
    store.add_triple(identification_unit,
                     triple(resource, vocab::owl_qualified_cardinality,
                            integer(*spec.exact)));
  } else {
    if (spec.min) {
      store.add_triple(identification_unit,
                       triple(resource, vocab::cardinality_min, *spec.min));
    }
    if (spec.max) {
      store.add_triple(identification_unit,
                       triple(resource, vocab::cardinality_max, *spec.max));
    }
    if (spec.value_unit) {
      store.add_triple(identification_unit,
                       triple(resource, vocab::cardinality_value_unit, *spec.value_unit));
    }
  }
  store.add_kind(identification_unit, vocab::cardinality_restriction_unit);
}

std::optional<CardinalitySpec> read_cardinality(const Store& store,
                                                const Gupri& identification_unit) {
  const SemanticUnit& u = store.unit(identification_unit);
  if (!u.has_kind(vocab::cardinality_restriction_unit)) return std::nullopt;
  CardinalitySpec spec;
  spec.form = CardinalityForm::Range;
  bool have_exact = false;
  for (const Triple& t : store.data_graph(identification_unit)) {
    if (!term_is_iri(t.object) && t.predicate == vocab::owl_qualified_cardinality) {
      spec.exact = std::stoll(term_literal(t.object).lexical);
      have_exact = true;
    } else if (t.predicate == vocab::cardinality_min) {
      spec.min = term_literal(t.object);
    } else if (t.predicate == vocab::cardinality_max) {
      spec.max = term_literal(t.object);
    } else if (t.predicate == vocab::cardinality_value_unit && term_is_iri(t.object)) {
      spec.value_unit = term_iri(t.object);
    }
  }
  if (have_exact) spec.form = CardinalityForm::Exact;
  return spec;
}

std::string bool_op_name(BoolOp op) {
  switch (op) {
    case BoolOp::And: return "AND";
    case BoolOp::Or: return "OR";
    case BoolOp::Xor: return "XOR";
    case BoolOp::Not: return "NOT";
    case BoolOp::Equal: return "EQUAL";
  }
  return "AND";
}

Iri bool_op_class(BoolOp op) {
  switch (op) {
    case BoolOp::And: return vocab::boolean_and_unit;
    case BoolOp::Or: return vocab::boolean_or_unit;
    case BoolOp::Xor: return vocab::boolean_xor_unit;
    case BoolOp::Not: return vocab::boolean_not_unit;
    case BoolOp::Equal: return vocab::boolean_equal_unit;
  }
  return vocab::boolean_and_unit;
}

Gupri build_boolean_unit(Store& store, BoolOp op, const std::vector<Gupri>& operands) {
  const std::size_t n = operands.size();
  const bool arity_ok = (op == BoolOp::Not)     ? n == 1
                        : (op == BoolOp::Equal) ? n == 2
                                                : n >= 2;
  if (!arity_ok) {
    raise(Err::ArityViolation,
          fmt::format("{} over {} operand(s)", bool_op_name(op), n));
  }
  std::vector<Gupri> unique = operands;
  std::sort(unique.begin(), unique.end());
  if (std::adjacent_find(unique.begin(), unique.end()) != unique.end()) {
    raise(Err::ArityViolation, "duplicate operand");
  }
  SemanticUnit u;
  u.gupri = store.mint_gupri("boolean");
  u.kinds = {vocab::compound_unit, vocab::boolean_unit, bool_op_class(op)};
  u.owns_data_graph = false;
  for (const Gupri& operand : operands) {
    if (!store.has_unit(operand)) {
      raise(Err::UnknownUnit, operand.value);
    }
    u.associations.push_back({vocab::has_operand, operand});
  }
  return store.register_unit(std::move(u)).gupri;
}

BoolOp boolean_unit_op(const Store& store, const Gupri& unit) {
  const SemanticUnit& u = store.unit(unit);
  if (u.has_kind(vocab::boolean_and_unit)) return BoolOp::And;
  if (u.has_kind(vocab::boolean_or_unit)) return BoolOp::Or;
  if (u.has_kind(vocab::boolean_xor_unit)) return BoolOp::Xor;
  if (u.has_kind(vocab::boolean_not_unit)) return BoolOp::Not;
  if (u.has_kind(vocab::boolean_equal_unit)) return BoolOp::Equal;
  raise(Err::InvalidSpec, fmt::format("{} is not a boolean unit", unit.value));
}

std::vector<Gupri> boolean_unit_operands(const Store& store, const Gupri& unit) {
  std::vector<Gupri> out;
  for (const Association& a : store.unit(unit).associations) {
    if (a.role == vocab::has_operand) out.push_back(a.target);
  }
  return out;
}

}  // namespace semunit
