#pragma once

#include "semunit/modifier.hpp"
#include "semunit/statement.hpp"
#include "semunit/store.hpp"

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace semunit {

// A question unit is a statement unit whose slots may be underspecified.
// Slots are either pinned to a concrete term, opened to any instance of a
// class, or opened to a literal range.

struct FixedSlot {
  Term value;
  auto operator<=>(const FixedSlot&) const = default;
};

struct TypedVariableSlot {
  Iri target_class;
  auto operator<=>(const TypedVariableSlot&) const = default;
};

// Bounds compare numerically; a non-numeric filler never matches a range.
struct RangeSlot {
  Datatype datatype = Datatype::Decimal;
  std::optional<Literal> min;
  std::optional<Literal> max;
  bool min_inclusive = true;
  bool max_inclusive = true;
  auto operator<=>(const RangeSlot&) const = default;
};

using Slot = std::variant<FixedSlot, TypedVariableSlot, RangeSlot>;

struct QuestionUnit {
  Iri source_schema;
  StatementCategory category = StatementCategory::Assertional;
  std::map<std::string, Slot> slots; // includes the "subject" role
};

// Copies the source unit's slot fillers into an all-Fixed question.
QuestionUnit derive_question(const Store& store, const Gupri& source);

// Replaces one slot. Ranges only fit literal-valued slots and typed
// variables only fit resource slots; the current filler decides which.
QuestionUnit underspecify(QuestionUnit q, const std::string& role, Slot slot);

struct QueryPlan {
  Iri schema;
  StatementCategory category = StatementCategory::Assertional;
  std::map<std::string, Slot> constraints;
  std::vector<std::string> projection; // sorted roles of non-Fixed slots
  bool boolean_mode = false;           // true iff every slot is Fixed
};

QueryPlan compile(const QuestionUnit& q);

// Boolean combination tree over question units. A node is either a leaf
// carrying a question or an operator over sub-expressions.
struct QueryExpr {
  std::optional<QuestionUnit> question;
  BoolOp op = BoolOp::And;
  std::vector<QueryExpr> operands;

  static QueryExpr leaf(QuestionUnit q);
  static QueryExpr combo(BoolOp op, std::vector<QueryExpr> operands);
};

using Row = std::map<std::string, Term>;

struct QueryResult {
  bool boolean_mode = false;
  bool truth = false;
  std::vector<Row> rows; // sorted, deduplicated
};

QueryResult execute(const Store& store, const QuestionUnit& question);
QueryResult execute(const Store& store, const QueryExpr& expr);

} // namespace semunit
