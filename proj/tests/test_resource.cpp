#include <doctest.h>

#include <semunit/error.hpp>
#include <semunit/resource.hpp>
#include <semunit/store.hpp>
#include <semunit/vocab.hpp>

#include "fixtures.hpp"

using namespace semunit;

TEST_CASE("category names round trip") {
  for (ResourceCategory c :
       {ResourceCategory::NamedIndividual, ResourceCategory::SomeInstance,
        ResourceCategory::MostInstances, ResourceCategory::EveryInstance,
        ResourceCategory::AllInstances, ResourceCategory::ClassRef,
        ResourceCategory::PropertyRef}) {
    CHECK(resource_category_from_name(resource_category_name(c)) == c);
  }
  CHECK(!resource_category_from_name("mostly-instances"));
}

TEST_CASE("statement categories follow the subject resource") {
  CHECK(classify_category(ResourceCategory::NamedIndividual) == StatementCategory::Assertional);
  CHECK(classify_category(ResourceCategory::SomeInstance) == StatementCategory::Contingent);
  CHECK(classify_category(ResourceCategory::MostInstances) == StatementCategory::Prototypical);
  CHECK(classify_category(ResourceCategory::EveryInstance) == StatementCategory::Universal);
  CHECK(classify_category(ResourceCategory::AllInstances) == StatementCategory::Universal);
  CHECK(classify_category(ResourceCategory::ClassRef) == StatementCategory::Universal);
}

TEST_CASE("instance resources require a target class") {
  Store s = fx::base_store();
  TypedResource r;
  r.iri = fx::ex("stray");
  r.category = ResourceCategory::SomeInstance;
  try {
    declare_resource(s, r);
    FAIL("expected a throw");
  } catch (const Error& e) {
    CHECK(e.code() == Err::MissingTargetClass);
  }
  r.target_class = fx::ex("Apple");
  declare_resource(s, r);
  CHECK(s.resource(r.iri).category == ResourceCategory::SomeInstance);

  TypedResource cls;
  cls.iri = fx::ex("Apple");
  cls.category = ResourceCategory::ClassRef;
  declare_resource(s, cls);  // no target class needed
}

TEST_CASE("most-instances evidence only fits most-instances resources") {
  Store s = fx::base_store();
  TypedResource r;
  r.iri = fx::ex("some-swan");
  r.category = ResourceCategory::SomeInstance;
  r.target_class = fx::ex("Cygnus");
  r.most_semantics = MostInstancesSemantics{fx::ex("Cygnus"), fx::ex("has-quality"),
                                            fx::ex("White")};
  CHECK_THROWS_AS(declare_resource(s, r), Error);
}

TEST_CASE("identification unit shape per category") {
  Store s = fx::base_store();
  TypedResource r;
  r.iri = fx::ex("swan-anton");
  r.category = ResourceCategory::NamedIndividual;
  r.target_class = fx::ex("Cygnus");
  r.label = "Swan Anton";
  declare_resource(s, r);

  const Gupri g = create_identification_unit(s, r.iri);
  const SemanticUnit& u = s.unit(g);
  CHECK(u.subject == r.iri);
  CHECK(u.kinds.count(vocab::lexical_statement_unit));
  CHECK(u.kinds.count(vocab::named_individual_identification_unit));

  const Graph& d = s.data_graph(g);
  CHECK(d.count(triple(r.iri, vocab::rdf_type, vocab::owl_named_individual)));
  CHECK(d.count(triple(r.iri, vocab::rdf_type, fx::ex("Cygnus"))));
  CHECK(d.count(triple(r.iri, vocab::rdfs_label, str("Swan Anton"))));
  CHECK(d.size() == 3);

  CHECK(find_identification_unit(s, r.iri) == g);
  CHECK_THROWS_AS(create_identification_unit(s, r.iri), Error);
}

TEST_CASE("quantified categories carry their marker class") {
  Store s = fx::base_store();
  auto declare = [&](const char* local, ResourceCategory c) {
    TypedResource r;
    r.iri = fx::ex(local);
    r.category = c;
    r.target_class = fx::ex("Cygnus");
    declare_resource(s, r);
    return create_identification_unit(s, r.iri);
  };
  const Gupri some = declare("some-swan", ResourceCategory::SomeInstance);
  const Gupri most = declare("most-swans", ResourceCategory::MostInstances);
  const Gupri every = declare("every-swan", ResourceCategory::EveryInstance);
  CHECK(s.data_graph(some).count(
      triple(fx::ex("some-swan"), vocab::rdf_type, vocab::some_instance_resource)));
  CHECK(s.data_graph(most).count(
      triple(fx::ex("most-swans"), vocab::rdf_type, vocab::most_instances_resource)));
  CHECK(s.data_graph(every).count(
      triple(fx::ex("every-swan"), vocab::rdf_type, vocab::every_instance_resource)));
  CHECK(s.unit(every).kinds.count(vocab::every_instance_identification_unit));
}

TEST_CASE("class identification units record provenance") {
  Store s = fx::base_store();
  TypedResource r;
  r.iri = fx::obo("UBERON_0000970");
  r.category = ResourceCategory::ClassRef;
  r.label = "eye";
  declare_resource(s, r);

  CHECK_THROWS_AS(create_identification_unit(s, r.iri), Error);
  const Gupri g = create_class_identification_unit(
      s, r.iri, fx::obo("uberon.owl"), std::string("2024-01-18"));
  const Graph& d = s.data_graph(g);
  CHECK(d.count(triple(r.iri, vocab::rdfs_label, str("eye"))));
  CHECK(d.count(triple(r.iri, vocab::has_identifier, str(r.iri.value))));
  CHECK(d.count(triple(r.iri, vocab::from_ontology, fx::obo("uberon.owl"))));
  CHECK(d.count(triple(r.iri, vocab::ontology_version, str("2024-01-18"))));
  CHECK(s.unit(g).kinds.count(vocab::class_identification_unit));
  CHECK_THROWS_AS(create_class_identification_unit(s, r.iri), Error);
}

TEST_CASE("each resource keeps exactly one identification unit") {
  fx::SwansFixture f = fx::swans();
  for (const auto& [iri, r] : f.store.resources()) {
    if (r.category == ResourceCategory::ClassRef || r.category == ResourceCategory::PropertyRef)
      continue;
    int count = 0;
    for (const auto& [g, u] : f.store.units()) {
      if (u.subject == iri && u.kinds.count(identification_unit_class(r.category)))
        ++count;
    }
    CHECK(count <= 1);
  }
  CHECK(find_identification_unit(f.store, fx::ex("swan-anton")) == f.ident_anton);
}
