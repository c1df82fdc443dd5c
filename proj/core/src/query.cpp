#include "semunit/query.hpp"

#include "semunit/error.hpp"
#include "semunit/vocab.hpp"

#include <fmt/format.h>

#include <algorithm>

namespace semunit {

namespace {

bool fixed_slot(const Slot& s) { return std::holds_alternative<FixedSlot>(s); }

bool literal_shaped(const Slot& s) {
  if (const auto* f = std::get_if<FixedSlot>(&s))
    return !term_is_iri(f->value);
  return std::holds_alternative<RangeSlot>(s);
}

struct EvalSet {
  bool boolean_mode = false;
  bool truth = false;
  std::set<Row> result;
  std::set<Row> candidates;
  std::set<std::string> roles;
};

const Term* slot_filler(const std::string& role, const Term& subject,
                        const SlotBindings& slots) {
  if (role == "subject")
    return &subject;
  auto it = slots.find(role);
  return it == slots.end() ? nullptr : &it->second;
}

bool category_admits(StatementCategory plan, StatementCategory unit) {
  if (plan == StatementCategory::Contingent)
    return unit == StatementCategory::Contingent || unit == StatementCategory::Assertional;
  return plan == unit;
}

bool frame_match(const Store& store, const SemanticUnit& u, const QueryPlan& plan,
                 const Term& subject, const SlotBindings& slots) {
  auto cat = u.category();
  if (!cat || !category_admits(plan.category, *cat))
    return false;
  if (u.is_negated() || u.has_kind(vocab::directive_unit))
    return false;
  for (const auto& [role, s] : plan.constraints) {
    const auto* tv = std::get_if<TypedVariableSlot>(&s);
    if (!tv)
      continue;
    const Term* filler = slot_filler(role, subject, slots);
    if (!filler || !term_is_iri(*filler))
      return false;
    const Iri& iri = term_iri(*filler);
    if (!store.has_resource(iri) || store.resource(iri).target_class != tv->target_class)
      return false;
  }
  return true;
}

bool within_range(const Literal& lit, const RangeSlot& r) {
  if (!is_numeric(lit.datatype))
    return false;
  if ((r.min && !is_numeric(r.min->datatype)) || (r.max && !is_numeric(r.max->datatype)))
    return false;
  if (r.min) {
    int c = compare_numeric(lit, *r.min);
    if (c < 0 || (c == 0 && !r.min_inclusive))
      return false;
  }
  if (r.max) {
    int c = compare_numeric(lit, *r.max);
    if (c > 0 || (c == 0 && !r.max_inclusive))
      return false;
  }
  return true;
}

bool constraints_match(const QueryPlan& plan, const Term& subject, const SlotBindings& slots) {
  for (const auto& [role, s] : plan.constraints) {
    const Term* filler = slot_filler(role, subject, slots);
    if (!filler)
      return false;
    if (const auto* f = std::get_if<FixedSlot>(&s)) {
      if (!(*filler == f->value))
        return false;
    } else if (const auto* r = std::get_if<RangeSlot>(&s)) {
      if (term_is_iri(*filler) || !within_range(term_literal(*filler), *r))
        return false;
    }
  }
  return true;
}

EvalSet eval_leaf(const Store& store, const QuestionUnit& q) {
  QueryPlan plan = compile(q);
  EvalSet out;
  out.boolean_mode = plan.boolean_mode;
  out.roles.insert(plan.projection.begin(), plan.projection.end());
  for (const auto& [g, u] : store.units()) {
    if (!u.is_statement_unit() || !u.subject)
      continue;
    if (!u.metadata.schema_id || *u.metadata.schema_id != plan.schema)
      continue;
    Term subject{*u.subject};
    SlotBindings slots = extract_slots(store, g);
    if (!frame_match(store, u, plan, subject, slots))
      continue;
    Row row;
    for (const std::string& role : plan.projection) {
      const Term* filler = slot_filler(role, subject, slots);
      if (filler)
        row.emplace(role, *filler);
    }
    if (row.size() != plan.projection.size())
      continue;
    out.candidates.insert(row);
    if (constraints_match(plan, subject, slots))
      out.result.insert(row);
  }
  if (out.boolean_mode)
    out.truth = !out.result.empty();
  return out;
}

std::set<Row> join_rows(const std::set<Row>& a, const std::set<Row>& b) {
  std::set<Row> out;
  for (const Row& ra : a) {
    for (const Row& rb : b) {
      Row merged = ra;
      bool ok = true;
      for (const auto& [k, v] : rb) {
        auto it = merged.find(k);
        if (it == merged.end())
          merged.emplace(k, v);
        else if (!(it->second == v)) {
          ok = false;
          break;
        }
      }
      if (ok)
        out.insert(std::move(merged));
    }
  }
  return out;
}

std::set<Row> union_rows(const std::set<Row>& a, const std::set<Row>& b) {
  std::set<Row> out = a;
  out.insert(b.begin(), b.end());
  return out;
}

void check_arity(BoolOp op, std::size_t n) {
  std::size_t want_min = 2;
  std::size_t want_max = SIZE_MAX;
  if (op == BoolOp::Not)
    want_min = want_max = 1;
  else if (op == BoolOp::Equal)
    want_max = 2;
  if (n < want_min || n > want_max)
    raise(Err::ArityViolation,
          fmt::format("{} combinator got {} operands", bool_op_name(op), n));
}

void require_same_roles(const std::vector<EvalSet>& ops, BoolOp op) {
  for (const EvalSet& e : ops)
    if (e.roles != ops.front().roles)
      raise(Err::PlanModeMismatch,
            fmt::format("{} combinator needs identical projections", bool_op_name(op)));
}

EvalSet eval_expr(const Store& store, const QueryExpr& e) {
  if (e.question) {
    if (!e.operands.empty())
      raise(Err::InvalidSpec, "query leaf cannot carry operands");
    return eval_leaf(store, *e.question);
  }
  check_arity(e.op, e.operands.size());
  std::vector<EvalSet> ops;
  ops.reserve(e.operands.size());
  for (const QueryExpr& sub : e.operands)
    ops.push_back(eval_expr(store, sub));
  for (const EvalSet& o : ops)
    if (o.boolean_mode != ops.front().boolean_mode)
      raise(Err::PlanModeMismatch, "cannot mix boolean and binding questions");

  EvalSet out;
  out.boolean_mode = ops.front().boolean_mode;
  if (out.boolean_mode) {
    switch (e.op) {
    case BoolOp::And:
      out.truth = std::all_of(ops.begin(), ops.end(), [](const EvalSet& o) { return o.truth; });
      break;
    case BoolOp::Or:
      out.truth = std::any_of(ops.begin(), ops.end(), [](const EvalSet& o) { return o.truth; });
      break;
    case BoolOp::Not:
      out.truth = !ops.front().truth;
      break;
    case BoolOp::Xor: {
      int count = 0;
      for (const EvalSet& o : ops)
        count += o.truth ? 1 : 0;
      out.truth = count % 2 == 1;
      break;
    }
    case BoolOp::Equal:
      out.truth = ops[0].truth == ops[1].truth;
      break;
    }
    return out;
  }

  switch (e.op) {
  case BoolOp::And: {
    out = ops.front();
    for (std::size_t i = 1; i < ops.size(); ++i) {
      out.result = join_rows(out.result, ops[i].result);
      out.candidates = join_rows(out.candidates, ops[i].candidates);
      out.roles.insert(ops[i].roles.begin(), ops[i].roles.end());
    }
    break;
  }
  case BoolOp::Or: {
    require_same_roles(ops, e.op);
    out.roles = ops.front().roles;
    for (const EvalSet& o : ops) {
      out.result = union_rows(out.result, o.result);
      out.candidates = union_rows(out.candidates, o.candidates);
    }
    break;
  }
  case BoolOp::Not: {
    out.roles = ops.front().roles;
    out.candidates = ops.front().candidates;
    for (const Row& r : ops.front().candidates)
      if (!ops.front().result.count(r))
        out.result.insert(r);
    break;
  }
  case BoolOp::Xor: {
    require_same_roles(ops, e.op);
    out.roles = ops.front().roles;
    std::map<Row, int> hits;
    for (const EvalSet& o : ops) {
      out.candidates = union_rows(out.candidates, o.candidates);
      for (const Row& r : o.result)
        ++hits[r];
    }
    for (const auto& [row, n] : hits)
      if (n % 2 == 1)
        out.result.insert(row);
    break;
  }
  case BoolOp::Equal: {
    require_same_roles(ops, e.op);
    out.roles = ops.front().roles;
    out.candidates = union_rows(ops[0].candidates, ops[1].candidates);
    for (const Row& r : out.candidates) {
      const bool in_a = ops[0].result.count(r) > 0;
      const bool in_b = ops[1].result.count(r) > 0;
      if (in_a == in_b)
        out.result.insert(r);
    }
    break;
  }
  }
  return out;
}

QueryResult to_result(EvalSet&& e) {
  QueryResult out;
  out.boolean_mode = e.boolean_mode;
  out.truth = e.truth;
  if (!e.boolean_mode)
    out.rows.assign(e.result.begin(), e.result.end());
  return out;
}

} // namespace

QuestionUnit derive_question(const Store& store, const Gupri& source) {
  const SemanticUnit& u = store.unit(source);
  if (!u.is_statement_unit())
    raise(Err::NotAStatementUnit,
          fmt::format("'{}' owns no data graph to question", source.value));
  if (!u.metadata.schema_id || !store.has_schema(*u.metadata.schema_id))
    raise(Err::UnknownSchema, fmt::format("'{}' has no schema", source.value));
  if (!u.subject)
    raise(Err::InvalidSpec, fmt::format("'{}' has no subject", source.value));
  auto cat = u.category();
  if (!cat)
    raise(Err::InvalidSpec, fmt::format("'{}' has no statement category", source.value));

  QuestionUnit q;
  q.source_schema = *u.metadata.schema_id;
  q.category = *cat;
  q.slots.emplace("subject", FixedSlot{Term(*u.subject)});
  for (const auto& [role, term] : extract_slots(store, source))
    q.slots.insert_or_assign(role, FixedSlot{term});
  return q;
}

QuestionUnit underspecify(QuestionUnit q, const std::string& role, Slot slot) {
  auto it = q.slots.find(role);
  if (it == q.slots.end())
    raise(Err::UnknownRole, fmt::format("question has no role '{}'", role));
  const bool want_literal = literal_shaped(it->second);
  if (std::holds_alternative<RangeSlot>(slot) && !want_literal)
    raise(Err::SlotMismatch, fmt::format("role '{}' holds a resource, not a literal", role));
  if (std::holds_alternative<TypedVariableSlot>(slot) && want_literal)
    raise(Err::SlotMismatch, fmt::format("role '{}' holds a literal, not a resource", role));
  it->second = std::move(slot);
  return q;
}

QueryPlan compile(const QuestionUnit& q) {
  if (q.slots.empty())
    raise(Err::InvalidSpec, "question unit has no slots");
  QueryPlan plan;
  plan.schema = q.source_schema;
  plan.category = q.category;
  plan.constraints = q.slots;
  for (const auto& [role, s] : q.slots) {
    if (const auto* r = std::get_if<RangeSlot>(&s); r && r->min && r->max) {
      int c = compare_numeric(*r->min, *r->max);
      if (c > 0 || (c == 0 && !(r->min_inclusive && r->max_inclusive)))
        raise(Err::UnsatisfiableRange, fmt::format("range on '{}' admits no value", role));
    }
    if (!fixed_slot(s))
      plan.projection.push_back(role);
  }
  plan.boolean_mode = plan.projection.empty();
  return plan;
}

QueryExpr QueryExpr::leaf(QuestionUnit q) {
  QueryExpr e;
  e.question = std::move(q);
  return e;
}

QueryExpr QueryExpr::combo(BoolOp op, std::vector<QueryExpr> operands) {
  QueryExpr e;
  e.op = op;
  e.operands = std::move(operands);
  return e;
}

QueryResult execute(const Store& store, const QuestionUnit& question) {
  return to_result(eval_leaf(store, question));
}

QueryResult execute(const Store& store, const QueryExpr& expr) {
  return to_result(eval_expr(store, expr));
}

} // namespace semunit
