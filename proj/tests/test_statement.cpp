#include <doctest.h>

#include <semunit/error.hpp>
#include <semunit/statement.hpp>
#include <semunit/store.hpp>
#include <semunit/vocab.hpp>

#include "fixtures.hpp"

using namespace semunit;

namespace {

template <class Fn>
std::optional<Err> code_of(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

}  // namespace

TEST_CASE("schema-backed units materialize the schema graph") {
  fx::ApplesFixture f = fx::apples();
  const SemanticUnit& u = f.store.unit(f.weight_x);
  CHECK(u.subject == fx::ex("apple-x"));
  CHECK(u.kinds.count(fx::ex("WeightStatement")));
  CHECK(u.kinds.count(vocab::assertional_statement_unit));
  CHECK(u.metadata.schema_id == fx::weight_schema_id());

  const Iri node(f.weight_x.value + "#weight");
  const Graph& d = f.store.data_graph(f.weight_x);
  CHECK(d.count(triple(node, vocab::rdf_type, fx::ex("Weight"))));
  CHECK(d.count(triple(fx::ex("apple-x"), fx::ex("has-quality"), node)));
  CHECK(d.count(triple(node, fx::ex("has-value"), decimal("204.56"))));
  CHECK(d.count(triple(node, fx::ex("has-unit"), fx::ex("gram-x"))));
  CHECK(d.size() == 4);
}

TEST_CASE("statement category follows the subject") {
  fx::SwansFixture f = fx::swans();
  CHECK(f.store.unit(f.assertional).kinds.count(vocab::assertional_statement_unit));
  CHECK(f.store.unit(f.contingent).kinds.count(vocab::contingent_statement_unit));
  CHECK(f.store.unit(f.prototypical).kinds.count(vocab::prototypical_statement_unit));
  CHECK(f.store.unit(f.universal).kinds.count(vocab::universal_statement_unit));

  CHECK(f.store.unit(f.assertional).category() == StatementCategory::Assertional);
  CHECK(f.store.unit(f.universal).category() == StatementCategory::Universal);

  CHECK(code_of([&] {
          create_statement_unit(f.store, fx::quality_schema_id(), fx::ex("swan-anton"),
                                {{"quality", Term(fx::ex("white-x"))}}, {},
                                StatementCategory::Universal);
        }) == Err::SubjectCategoryConflict);
}

TEST_CASE("slot fillers are validated against the schema") {
  fx::ApplesFixture f = fx::apples();
  Store& s = f.store;
  const Iri apple = fx::ex("apple-x");
  const SlotBindings good{{"value", decimal("10")}, {"unit", Term(fx::ex("gram-x"))}};

  CHECK(code_of([&] {
          create_statement_unit(s, fx::weight_schema_id(), fx::ex("nobody"), good);
        }) == Err::UnknownResource);
  CHECK(code_of([&] {
          create_statement_unit(s, fx::weight_schema_id(), apple,
                                {{"value", decimal("10")}, {"mass", Term(fx::ex("gram-x"))}});
        }) == Err::UnknownRole);
  CHECK(code_of([&] {
          create_statement_unit(s, fx::weight_schema_id(), apple, {{"value", decimal("10")}});
        }) == Err::SlotMismatch);
  CHECK(code_of([&] {
          create_statement_unit(s, fx::weight_schema_id(), apple,
                                {{"value", decimal("10")}, {"unit", str("gram")}});
        }) == Err::SlotMismatch);
  CHECK(code_of([&] {
          create_statement_unit(s, fx::weight_schema_id(), apple,
                                {{"value", decimal("10")}, {"unit", Term(fx::ex("red-x"))}});
        }) == Err::SlotMismatch);
  CHECK(code_of([&] {
          create_statement_unit(s, fx::weight_schema_id(), apple,
                                {{"value", integer(10)}, {"unit", Term(fx::ex("gram-x"))}});
        }) == Err::SlotMismatch);
  CHECK(code_of([&] {
          create_statement_unit(s, fx::ex("schema/none"), apple, good);
        }) == Err::UnknownSchema);
}

TEST_CASE("extract_slots inverts create_statement_unit") {
  fx::ApplesFixture f = fx::apples();
  const SlotBindings slots = extract_slots(f.store, f.weight_x);
  REQUIRE(slots.size() == 2);
  CHECK(slots.at("value") == decimal("204.56"));
  CHECK(slots.at("unit") == Term(fx::ex("gram-x")));
  CHECK(code_of([&] { extract_slots(f.store, f.ident_x); }) == Err::UnknownSchema);
}

TEST_CASE("relation view needs one object slot and a principal property") {
  fx::ApplesFixture f = fx::apples();
  CHECK(!relation_view(f.store, f.weight_x));  // two slots

  const auto rv = relation_view(f.store, f.red_unit);
  REQUIRE(rv);
  CHECK(rv->property == fx::ex("has-quality"));
  CHECK(rv->subject == fx::ex("apple-x"));
  CHECK(rv->role == "quality");
  CHECK(rv->filler == Term(fx::ex("red-x")));
  CHECK(rv->slot_kind == SlotKind::Resource);
}

TEST_CASE("type statement units are single-triple relations") {
  fx::NegationFixture f = fx::negation();
  const SemanticUnit& u = f.store.unit(f.not_pome);
  CHECK(u.kinds.count(vocab::type_statement_unit));
  CHECK(u.is_negated());
  const auto rv = relation_view(f.store, f.not_pome);
  REQUIRE(rv);
  CHECK(rv->property == vocab::rdf_type);
  CHECK(rv->slot_kind == SlotKind::ClassReference);
  CHECK(rv->filler == Term(fx::ex("PomeFruit")));
}

TEST_CASE("complex statement units record unit references") {
  fx::EpistemicFixture f = fx::epistemic();
  const SemanticUnit& d = f.store.unit(f.stance_d);
  bool found = false;
  for (const Association& a : d.associations)
    found = found || a.target == f.stance_a;
  CHECK(found);
  CHECK(d.kinds.count(vocab::assertional_statement_unit));

  Store s = fx::base_store();
  TypedResource r;
  r.iri = fx::ex("lone");
  r.category = ResourceCategory::NamedIndividual;
  r.target_class = fx::ex("Thing");
  declare_resource(s, r);
  CHECK(code_of([&] {
          create_complex_statement_unit(s, "c", r.iri,
                                        {triple(r.iri, fx::ex("p"), str("x"))});
        }) == Err::InvalidSpec);
}
