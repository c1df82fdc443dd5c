#include "fixtures.hpp"

#include <semunit/vocab.hpp>

namespace fx {

Iri ex(const std::string& local) { return Iri("https://example.org/kg/" + local); }
Iri obo(const std::string& local) { return Iri("http://purl.obolibrary.org/obo/" + local); }

Iri weight_schema_id() { return ex("schema/weight"); }
Iri quality_schema_id() { return ex("schema/has-quality"); }
Iri part_of_schema_id() { return ex("schema/part-of"); }
Iri has_part_schema_id() { return ex("schema/has-part"); }
Iri longer_than_schema_id() { return ex("schema/longer-than"); }
Iri subclass_schema_id() { return ex("schema/subclass-of"); }
Iri equivalent_schema_id() { return ex("schema/equivalent-to"); }
Iri disjoint_schema_id() { return ex("schema/disjoint-with"); }
Iri same_as_schema_id() { return ex("schema/same-as"); }

namespace {

SchemaTemplate weight_schema() {
  SchemaTemplate s;
  s.id = weight_schema_id();
  s.name = "weight";
  s.relation_class = ex("WeightStatement");
  s.slots = {
      {"value", SlotKind::LiteralValue, std::nullopt, Datatype::Decimal},
      {"unit", SlotKind::Resource, ex("Gram"), std::nullopt},
  };
  s.internal_nodes = {{"weight", ex("Weight")}};
  s.edges = {
      {"subject", ex("has-quality"), "weight"},
      {"weight", ex("has-value"), "value"},
      {"weight", ex("has-unit"), "unit"},
  };
  s.label_template = "{subject} has{¬} a weight of {value} grams";
  s.map_edges = {
      {"subject", "has weight", "value"},
      {"value", "unit", "unit"},
  };
  s.question_labels = {
      {{}, RangeShape::Any, "Does {subject} have a weight of {value} grams?"},
      {{"value"}, RangeShape::Open, "What is the weight of {subject}?"},
      {{"subject", "value"},
       RangeShape::Bounded,
       "Which {subject:class} has a weight between {value:min} and {value:max} grams?"},
  };
  return s;
}

SchemaTemplate quality_schema() {
  SchemaTemplate s;
  s.id = quality_schema_id();
  s.name = "has-quality";
  s.relation_class = ex("QualityStatement");
  s.principal_property = ex("has-quality");
  s.slots = {{"quality", SlotKind::Resource, std::nullopt, std::nullopt}};
  s.edges = {{"subject", ex("has-quality"), "quality"}};
  s.label_template = "{subject} is{¬} {quality}";
  s.map_edges = {{"subject", "has quality", "quality"}};
  s.question_labels = {
      {{}, RangeShape::Any, "Is {subject} {quality}?"},
      {{"quality"}, RangeShape::Any, "Which quality does {subject} have?"},
      {{"subject"}, RangeShape::Any, "Which {subject:class} is {quality}?"},
  };
  return s;
}

SchemaTemplate relation_schema(const Iri& id, const std::string& name, const Iri& cls,
                               const Iri& property, const std::string& role,
                               const std::string& label, const std::string& edge_label,
                               const std::string& question) {
  SchemaTemplate s;
  s.id = id;
  s.name = name;
  s.relation_class = cls;
  s.principal_property = property;
  s.slots = {{role, SlotKind::Resource, std::nullopt, std::nullopt}};
  s.edges = {{"subject", property, role}};
  s.label_template = label;
  s.map_edges = {{"subject", edge_label, role}};
  s.question_labels = {{{}, RangeShape::Any, question}};
  return s;
}

SchemaTemplate class_axiom_schema(const Iri& id, const std::string& name, const Iri& cls,
                                  const Iri& property, const std::string& role,
                                  const std::string& label, const std::string& edge_label) {
  SchemaTemplate s;
  s.id = id;
  s.name = name;
  s.relation_class = cls;
  s.principal_property = property;
  s.slots = {{role, SlotKind::ClassReference, std::nullopt, std::nullopt}};
  s.edges = {{"subject", property, role}};
  s.label_template = label;
  s.map_edges = {{"subject", edge_label, role}};
  s.question_labels = {{{}, RangeShape::Any, label + "?"}};
  return s;
}

Iri declare_individual(Store& store, const Iri& iri, const Iri& cls,
                       const std::string& label) {
  declare_resource(store, {iri, ResourceCategory::NamedIndividual, cls, label, {}});
  return iri;
}

Iri declare_class(Store& store, const Iri& iri, const std::string& label) {
  declare_resource(store, {iri, ResourceCategory::ClassRef, std::nullopt, label, {}});
  return iri;
}

Gupri quality_unit(Store& store, const Iri& subject, const Iri& quality) {
  return create_statement_unit(store, quality_schema_id(), subject,
                               {{"quality", Term(quality)}});
}

Gupri weight_unit(Store& store, const Iri& subject, const std::string& grams) {
  return create_statement_unit(
      store, weight_schema_id(), subject,
      {{"value", Term(decimal(grams))}, {"unit", Term(ex("gram-x"))}});
}

}  // namespace

Store base_store() {
  Store store;
  store.set_prefix("ex", "https://example.org/kg/");
  store.set_prefix("obo", "http://purl.obolibrary.org/obo/");
  store.set_prefix("kg", store.gupri_base());
  store.add_schema(type_statement_schema());
  store.add_schema(weight_schema());
  store.add_schema(quality_schema());
  store.add_schema(relation_schema(part_of_schema_id(), "part-of", ex("PartOfStatement"),
                                   ex("part-of"), "whole", "{subject} is{¬} part of {whole}",
                                   "part of", "Is {subject} part of {whole}?"));
  store.add_schema(relation_schema(has_part_schema_id(), "has-part", ex("HasPartStatement"),
                                   ex("has-part"), "part",
                                   "{subject} has{¬} {part} as a part", "has part",
                                   "Does {subject} have {part} as a part?"));
  store.add_schema(relation_schema(
      longer_than_schema_id(), "longer-than", ex("LongerThanStatement"), ex("longer-than"),
      "other", "{subject} is{¬} longer than {other}", "longer than",
      "Is {subject} longer than {other}?"));
  store.add_schema(class_axiom_schema(
      subclass_schema_id(), "subclass-of", vocab::subclass_of_statement_unit,
      vocab::rdfs_subclass_of, "superclass", "{subject} is{¬} a subclass of {superclass}",
      "subclass of"));
  store.add_schema(class_axiom_schema(
      equivalent_schema_id(), "equivalent-to", vocab::equivalent_class_statement_unit,
      Iri(vocab::OWL_NS + "equivalentClass"), "other",
      "{subject} is{¬} equivalent to {other}", "equivalent to"));
  store.add_schema(class_axiom_schema(
      disjoint_schema_id(), "disjoint-with", vocab::disjoint_class_statement_unit,
      Iri(vocab::OWL_NS + "disjointWith"), "other", "{subject} is{¬} disjoint with {other}",
      "disjoint with"));
  store.add_schema(relation_schema(
      same_as_schema_id(), "same-as", vocab::same_individual_statement_unit,
      Iri(vocab::OWL_NS + "sameAs"), "other", "{subject} is{¬} the same as {other}",
      "same as", "Is {subject} the same as {other}?"));
  return store;
}

ApplesFixture apples() {
  ApplesFixture f{base_store(), {}, {}, {}, {}, {}, {}, {}, {}};
  Store& s = f.store;
  declare_class(s, ex("Apple"), "apple");
  declare_class(s, ex("Gram"), "gram");
  declare_class(s, ex("Red"), "red");
  declare_individual(s, ex("apple-x"), ex("Apple"), "apple X");
  declare_individual(s, ex("apple-y"), ex("Apple"), "apple Y");
  declare_individual(s, ex("apple-z"), ex("Apple"), "apple Z");
  declare_individual(s, ex("gram-x"), ex("Gram"), "gram X");
  declare_individual(s, ex("red-x"), ex("Red"), "red");
  f.ident_x = create_identification_unit(s, ex("apple-x"));
  f.ident_y = create_identification_unit(s, ex("apple-y"));
  f.ident_z = create_identification_unit(s, ex("apple-z"));
  f.weight_x = weight_unit(s, ex("apple-x"), "204.56");
  f.weight_y = weight_unit(s, ex("apple-y"), "150");
  f.weight_z = weight_unit(s, ex("apple-z"), "350");
  f.red_unit = quality_unit(s, ex("apple-x"), ex("red-x"));
  f.item_x = build_item_unit(s, ex("apple-x"));
  return f;
}

SwansFixture swans() {
  SwansFixture f{base_store(), {}, {}, {}, {}, {}, {}, {}, {}, {}, {}, {}};
  Store& s = f.store;
  declare_class(s, ex("Cygnus"), "swan");
  declare_class(s, ex("White"), "white");
  declare_individual(s, ex("swan-anton"), ex("Cygnus"), "Swan Anton");
  declare_individual(s, ex("swan-berta"), ex("Cygnus"), "Berta");
  declare_individual(s, ex("white-x"), ex("White"), "white");
  declare_resource(s, {ex("some-white"), ResourceCategory::SomeInstance, ex("White"),
                       "white", {}});
  declare_resource(s, {ex("some-swan"), ResourceCategory::SomeInstance, ex("Cygnus"),
                       "Some swan", {}});
  declare_resource(s, {ex("most-swans"), ResourceCategory::MostInstances, ex("Cygnus"),
                       "Most swans",
                       MostInstancesSemantics{ex("Cygnus"), ex("has-quality"), ex("White")}});
  declare_resource(s, {ex("every-swan"), ResourceCategory::EveryInstance, ex("Cygnus"),
                       "Every swan", {}});
  f.ident_anton = create_identification_unit(s, ex("swan-anton"));
  f.ident_berta = create_identification_unit(s, ex("swan-berta"));
  f.ident_white = create_identification_unit(s, ex("white-x"));
  f.ident_some_white = create_identification_unit(s, ex("some-white"));
  f.ident_some_swan = create_identification_unit(s, ex("some-swan"));
  f.ident_most_swans = create_identification_unit(s, ex("most-swans"));
  f.ident_every_swan = create_identification_unit(s, ex("every-swan"));
  f.assertional = quality_unit(s, ex("swan-anton"), ex("white-x"));
  f.contingent = quality_unit(s, ex("some-swan"), ex("some-white"));
  f.prototypical = quality_unit(s, ex("most-swans"), ex("some-white"));
  f.universal = quality_unit(s, ex("every-swan"), ex("some-white"));
  return f;
}

DefaultsFixture defaults_fixture(bool with_blocker) {
  DefaultsFixture f{base_store(), {}, {}};
  Store& s = f.store;
  declare_class(s, ex("Cygnus"), "swan");
  declare_class(s, ex("White"), "white");
  declare_individual(s, ex("swan-anton"), ex("Cygnus"), "Swan Anton");
  declare_individual(s, ex("swan-berta"), ex("Cygnus"), "Berta");
  declare_individual(s, ex("white-x"), ex("White"), "white");
  declare_resource(s, {ex("most-swans"), ResourceCategory::MostInstances, ex("Cygnus"),
                       "Most swans",
                       MostInstancesSemantics{ex("Cygnus"), ex("has-quality"), ex("White")}});
  declare_resource(s, {ex("some-white"), ResourceCategory::SomeInstance, ex("White"),
                       "white", {}});
  create_identification_unit(s, ex("swan-anton"));
  create_identification_unit(s, ex("swan-berta"));
  create_identification_unit(s, ex("most-swans"));
  f.prototypical = quality_unit(s, ex("most-swans"), ex("some-white"));
  f.swan_individuals = {ex("swan-anton"), ex("swan-berta")};
  if (with_blocker)
    negate(s, quality_unit(s, ex("swan-berta"), ex("white-x")));
  return f;
}

NegationFixture negation() {
  NegationFixture f{base_store(), {}, {}, {}};
  Store& s = f.store;
  declare_class(s, ex("Fruit"), "fruit");
  declare_class(s, ex("PomeFruit"), "pome fruit");
  declare_class(s, ex("OrangePlant"), "orange plant");
  declare_class(s, ex("Head"), "head");
  declare_class(s, obo("UBERON_0000972"), "antenna");
  declare_individual(s, ex("fruit-x"), ex("Fruit"), "this fruit");
  declare_individual(s, ex("orange-plant-y"), ex("OrangePlant"), "this orange plant");
  declare_individual(s, ex("head-n"), ex("Head"), "this head");
  declare_resource(s, {ex("some-antenna"), ResourceCategory::SomeInstance,
                       obo("UBERON_0000972"), "an antenna", {}});
  create_identification_unit(s, ex("fruit-x"));
  create_identification_unit(s, ex("orange-plant-y"));
  create_identification_unit(s, ex("head-n"));
  create_identification_unit(s, ex("some-antenna"));

  f.not_pome = create_statement_unit(s, type_statement_schema().id, ex("fruit-x"),
                                     {{"class", Term(ex("PomeFruit"))}});
  negate(s, f.not_pome);

  f.not_part = create_statement_unit(s, part_of_schema_id(), ex("fruit-x"),
                                     {{"whole", Term(ex("orange-plant-y"))}});
  negate(s, f.not_part);

  f.not_has_antenna = create_statement_unit(s, has_part_schema_id(), ex("head-n"),
                                            {{"part", Term(ex("some-antenna"))}});
  negate(s, f.not_has_antenna);
  return f;
}

CardinalityFixture cardinality() {
  CardinalityFixture f{base_store(), {}, {}, {}};
  Store& s = f.store;
  declare_class(s, ex("Head"), "head");
  declare_class(s, obo("UBERON_0000970"), "eye");
  declare_class(s, ex("Petal"), "petal");
  declare_individual(s, ex("head-x"), ex("Head"), "head X");
  declare_resource(s, {ex("some-eyes"), ResourceCategory::SomeInstance,
                       obo("UBERON_0000970"), "eyes of head X", {}});
  declare_resource(s, {ex("some-petals"), ResourceCategory::SomeInstance, ex("Petal"),
                       "some petals", {}});
  create_identification_unit(s, ex("head-x"));
  f.eyes_ident = create_identification_unit(s, ex("some-eyes"));
  CardinalitySpec exact;
  exact.form = CardinalityForm::Exact;
  exact.exact = 3;
  restrict_cardinality(s, f.eyes_ident, exact);

  f.part_unit = create_statement_unit(s, part_of_schema_id(), ex("head-x"),
                                      {{"whole", Term(ex("some-eyes"))}});

  f.range_ident = create_identification_unit(s, ex("some-petals"));
  CardinalitySpec range;
  range.form = CardinalityForm::Range;
  range.min = integer(4);
  range.max = integer(6);
  range.value_unit = ex("count");
  restrict_cardinality(s, f.range_ident, range);
  return f;
}

AntennaFixture antenna() {
  AntennaFixture f{base_store(), {}, {}, {}, {}, {}, {}, {}};
  Store& s = f.store;
  declare_class(s, ex("AntennaType1"), "antenna type 1");
  declare_class(s, obo("UBERON_0000970"), "eye");
  declare_class(s, obo("UBERON_0000468"), "multicellular organism");
  declare_resource(s, {ex("every-antenna-t1"), ResourceCategory::EveryInstance,
                       ex("AntennaType1"), "every antenna of type 1", {}});
  declare_resource(s, {ex("some-eye-8"), ResourceCategory::SomeInstance,
                       obo("UBERON_0000970"), "an eye", {}});
  declare_resource(s, {ex("some-organism"), ResourceCategory::SomeInstance,
                       obo("UBERON_0000468"), "a multicellular organism", {}});
  create_identification_unit(s, ex("every-antenna-t1"));
  create_identification_unit(s, ex("some-eye-8"));
  create_identification_unit(s, ex("some-organism"));

  f.part_antenna = create_statement_unit(s, part_of_schema_id(), ex("every-antenna-t1"),
                                         {{"whole", Term(ex("some-organism"))}});
  f.longer_unit = create_statement_unit(s, longer_than_schema_id(), ex("every-antenna-t1"),
                                        {{"other", Term(ex("some-eye-8"))}});
  f.part_eye = create_statement_unit(s, part_of_schema_id(), ex("some-eye-8"),
                                     {{"whole", Term(ex("some-organism"))}});

  f.item_antenna = build_item_unit(s, ex("every-antenna-t1"));
  f.item_eye = build_item_unit(s, ex("some-eye-8"));
  f.item_organism = build_item_unit(s, ex("some-organism"));
  f.group = build_item_group_unit(s, {f.item_antenna, f.item_eye, f.item_organism});
  return f;
}

EpistemicFixture epistemic() {
  EpistemicFixture f{base_store(), {}, {}, {}, {}, {}};
  Store& s = f.store;
  declare_class(s, ex("Person"), "person");
  declare_class(s, ex("Special"), "special");
  declare_class(s, ex("Thing"), "thing");
  declare_individual(s, ex("person-a"), ex("Person"), "Person A");
  declare_individual(s, ex("person-b"), ex("Person"), "Person B");
  declare_individual(s, ex("person-c"), ex("Person"), "Person C");
  declare_individual(s, ex("person-d"), ex("Person"), "Person D");
  declare_individual(s, ex("item-x"), ex("Thing"), "item X");
  create_identification_unit(s, ex("person-a"));
  create_identification_unit(s, ex("person-b"));
  create_identification_unit(s, ex("person-c"));
  create_identification_unit(s, ex("person-d"));
  create_identification_unit(s, ex("item-x"));
  f.target = create_statement_unit(s, type_statement_schema().id, ex("item-x"),
                                   {{"class", Term(ex("Special"))}});
  f.stance_a = assert_stance(s, ex("person-a"), Stance::Positive, f.target);
  f.stance_b = assert_stance(s, ex("person-b"), Stance::Negative, f.target);
  f.stance_c = assert_stance(s, ex("person-c"), Stance::Agnostic, f.target);
  f.stance_d = assert_stance(s, ex("person-d"), Stance::Positive, f.stance_a);
  return f;
}

ArgumentFixture arguments(int white, int plain) {
  ArgumentFixture f{base_store(), {}, {}, {}, {}, {}, {}, {}, {}, {}};
  Store& s = f.store;
  declare_class(s, ex("Cygnus"), "swan");
  declare_class(s, ex("White"), "white");
  declare_individual(s, ex("white-0"), ex("White"), "white");
  declare_resource(s, {ex("some-white"), ResourceCategory::SomeInstance, ex("White"),
                       "white", {}});
  declare_resource(s, {ex("some-swan"), ResourceCategory::SomeInstance, ex("Cygnus"),
                       "Some swan", {}});
  declare_resource(s, {ex("most-swans"), ResourceCategory::MostInstances, ex("Cygnus"),
                       "Most swans",
                       MostInstancesSemantics{ex("Cygnus"), ex("has-quality"), ex("White")}});
  declare_resource(s, {ex("every-swan"), ResourceCategory::EveryInstance, ex("Cygnus"),
                       "Every swan", {}});
  create_identification_unit(s, ex("some-white"));
  create_identification_unit(s, ex("some-swan"));
  create_identification_unit(s, ex("most-swans"));
  create_identification_unit(s, ex("every-swan"));

  declare_individual(s, ex("swan-anton"), ex("Cygnus"), "Swan Anton");
  f.case_ident = create_identification_unit(s, ex("swan-anton"));
  f.result_unit = quality_unit(s, ex("swan-anton"), ex("white-0"));
  for (int i = 2; i <= white; ++i) {
    const Iri swan = ex("swan-w" + std::to_string(i));
    declare_individual(s, swan, ex("Cygnus"), "white swan " + std::to_string(i));
    create_identification_unit(s, swan);
    quality_unit(s, swan, ex("white-0"));
  }
  for (int i = 1; i <= plain; ++i) {
    const Iri swan = ex("swan-p" + std::to_string(i));
    declare_individual(s, swan, ex("Cygnus"), "plain swan " + std::to_string(i));
    create_identification_unit(s, swan);
  }

  f.rule_universal = quality_unit(s, ex("every-swan"), ex("some-white"));
  f.rule_prototypical = quality_unit(s, ex("most-swans"), ex("some-white"));
  const Gupri rule_contingent = quality_unit(s, ex("some-swan"), ex("some-white"));

  f.deduction = build_argument(s, ArgumentKind::Deduction, f.case_ident, f.rule_universal,
                               f.result_unit)
                    .unit;
  f.abduction = build_argument(s, ArgumentKind::Abduction, f.case_ident, f.rule_universal,
                               f.result_unit)
                    .unit;
  f.induction_contingent =
      build_argument(s, ArgumentKind::Induction, f.case_ident, rule_contingent,
                     f.result_unit, Boldness::Contingent)
          .unit;
  f.induction_prototypical =
      build_argument(s, ArgumentKind::Induction, f.case_ident, f.rule_prototypical,
                     f.result_unit, Boldness::Prototypical)
          .unit;
  f.induction_universal =
      build_argument(s, ArgumentKind::Induction, f.case_ident, f.rule_universal,
                     f.result_unit, Boldness::Universal)
          .unit;
  return f;
}

ContextFixture g7_context() {
  ContextFixture f{base_store(), {}, {}};
  Store& s = f.store;
  declare_class(s, ex("Summit"), "summit");
  declare_class(s, ex("City"), "city");
  declare_class(s, ex("Person"), "person");
  declare_individual(s, ex("g7-50"), ex("Summit"), "the 50th G7 summit");
  declare_individual(s, ex("fasano"), ex("City"), "Fasano");
  declare_individual(s, ex("leader-x"), ex("Person"), "Leader X");
  create_identification_unit(s, ex("g7-50"));
  create_identification_unit(s, ex("fasano"));
  create_identification_unit(s, ex("leader-x"));
  f.core = create_statement_unit(s, has_part_schema_id(), ex("g7-50"),
                                 {{"part", Term(ex("leader-x"))}});
  TimeIndex time;
  time.start = date("2024-06-13");
  time.end = date("2024-06-15");
  GeoIndex geo;
  geo.place = ex("fasano");
  geo.latitude = decimal("40.83");
  geo.longitude = decimal("17.36");
  TimeOrder order;
  order.sequence = ex("g7-series");
  order.position = 50;
  f.ctx = build_contextual_unit(s, {f.core}, time, geo, order);
  return f;
}

MixedFixture mixed_frameworks() {
  SwansFixture base = swans();
  MixedFixture f{std::move(base.store), base.prototypical, {}};
  Store& s = f.store;
  for (const Gupri& g : s.unit_gupris()) {
    UnitMetadata meta = s.unit(g).metadata;
    meta.logic_framework =
        g == f.lp_unit ? LogicFramework::LogicProgram : LogicFramework::OwlDl;
    attach_metadata(s, g, std::move(meta));
    if (g != f.lp_unit)
      f.owl_units.push_back(g);
  }
  return f;
}

std::vector<std::pair<std::string, Store>> corpus() {
  std::vector<std::pair<std::string, Store>> out;
  out.emplace_back("apples", apples().store);
  out.emplace_back("swans", swans().store);
  out.emplace_back("defaults", defaults_fixture(true).store);
  out.emplace_back("negation", negation().store);
  out.emplace_back("cardinality", cardinality().store);
  out.emplace_back("antenna", antenna().store);
  out.emplace_back("epistemic", epistemic().store);
  out.emplace_back("arguments", arguments(3, 1).store);
  out.emplace_back("context", g7_context().store);
  out.emplace_back("mixed", mixed_frameworks().store);
  return out;
}

}  // namespace fx
