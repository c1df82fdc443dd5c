#include "semunit/resource.hpp"

#include "semunit/error.hpp"
#include "semunit/store.hpp"
#include "semunit/vocab.hpp"

#include <fmt/format.h>

namespace semunit {

const char* resource_category_name(ResourceCategory c) {
  switch (c) {
  case ResourceCategory::NamedIndividual: return "named-individual";
  case ResourceCategory::SomeInstance: return "some-instance";
  case ResourceCategory::MostInstances: return "most-instances";
  case ResourceCategory::EveryInstance: return "every-instance";
  case ResourceCategory::AllInstances: return "all-instances";
  case ResourceCategory::ClassRef: return "class";
  case ResourceCategory::PropertyRef: return "property";
  }
  return "";
}

std::optional<ResourceCategory> resource_category_from_name(const std::string& name) {
  for (ResourceCategory c :
       {ResourceCategory::NamedIndividual, ResourceCategory::SomeInstance,
        ResourceCategory::MostInstances, ResourceCategory::EveryInstance,
        ResourceCategory::AllInstances, ResourceCategory::ClassRef,
        ResourceCategory::PropertyRef}) {
    if (name == resource_category_name(c))
      return c;
  }
  return std::nullopt;
}

std::optional<Iri> resource_marker(ResourceCategory c) {
  switch (c) {
  case ResourceCategory::NamedIndividual: return vocab::owl_named_individual;
  case ResourceCategory::SomeInstance: return vocab::some_instance_resource;
  case ResourceCategory::MostInstances: return vocab::most_instances_resource;
  case ResourceCategory::EveryInstance: return vocab::every_instance_resource;
  case ResourceCategory::AllInstances: return vocab::all_instances_resource;
  case ResourceCategory::ClassRef:
  case ResourceCategory::PropertyRef:
    return std::nullopt;
  }
  return std::nullopt;
}

StatementCategory classify_category(ResourceCategory c) {
  switch (c) {
  case ResourceCategory::NamedIndividual: return StatementCategory::Assertional;
  case ResourceCategory::SomeInstance: return StatementCategory::Contingent;
  case ResourceCategory::MostInstances: return StatementCategory::Prototypical;
  case ResourceCategory::EveryInstance:
  case ResourceCategory::AllInstances:
  case ResourceCategory::ClassRef:
  case ResourceCategory::PropertyRef:
    return StatementCategory::Universal;
  }
  return StatementCategory::Universal;
}

Iri identification_unit_class(ResourceCategory c) {
  switch (c) {
  case ResourceCategory::NamedIndividual: return vocab::named_individual_identification_unit;
  case ResourceCategory::SomeInstance: return vocab::some_instance_identification_unit;
  case ResourceCategory::MostInstances: return vocab::most_instances_identification_unit;
  case ResourceCategory::EveryInstance: return vocab::every_instance_identification_unit;
  case ResourceCategory::AllInstances: return vocab::all_instances_identification_unit;
  case ResourceCategory::ClassRef: return vocab::class_identification_unit;
  case ResourceCategory::PropertyRef: return vocab::property_identification_unit;
  }
  return vocab::class_identification_unit;
}

const TypedResource& declare_resource(Store& store, TypedResource r) {
  const bool needs_class = r.category != ResourceCategory::ClassRef &&
                           r.category != ResourceCategory::PropertyRef;
  if (needs_class && !r.target_class)
    raise(Err::MissingTargetClass,
          fmt::format("instance resource '{}' declared without a target class", r.iri.value));
  if (r.most_semantics && r.category != ResourceCategory::MostInstances)
    raise(Err::InvalidSpec,
          fmt::format("'{}': most-instances evidence on a {} resource", r.iri.value,
                      resource_category_name(r.category)));
  return store.put_resource(std::move(r));
}

std::optional<Gupri> find_identification_unit(const Store& store, const Iri& resource) {
  for (const auto& [g, u] : store.units()) {
    if (u.subject != resource)
      continue;
    for (const Iri& k : u.kinds) {
      for (ResourceCategory c :
           {ResourceCategory::NamedIndividual, ResourceCategory::SomeInstance,
            ResourceCategory::MostInstances, ResourceCategory::EveryInstance,
            ResourceCategory::AllInstances, ResourceCategory::ClassRef,
            ResourceCategory::PropertyRef}) {
        if (k == identification_unit_class(c))
          return g;
      }
    }
  }
  return std::nullopt;
}

Gupri create_identification_unit(Store& store, const Iri& resource_iri) {
  const TypedResource& r = store.resource(resource_iri);
  if (r.category == ResourceCategory::ClassRef || r.category == ResourceCategory::PropertyRef)
    raise(Err::InvalidSpec,
          fmt::format("'{}' is a reference resource; use the class identification path",
                      resource_iri.value));
  if (find_identification_unit(store, resource_iri))
    raise(Err::DuplicateIdentification,
          fmt::format("resource '{}' already has an identification unit", resource_iri.value));

  SemanticUnit u;
  u.gupri = store.mint_gupri(r.label.empty() ? resource_iri.value : r.label);
  u.kinds = {vocab::lexical_statement_unit, identification_unit_class(r.category)};
  u.subject = resource_iri;
  u.owns_data_graph = true;
  const Gupri g = store.register_unit(std::move(u)).gupri;

  if (auto marker = resource_marker(r.category))
    store.add_triple(g, triple(resource_iri, vocab::rdf_type, *marker));
  store.add_triple(g, triple(resource_iri, vocab::rdf_type, *r.target_class));
  if (!r.label.empty())
    store.add_triple(g, triple(resource_iri, vocab::rdfs_label, str(r.label)));
  return g;
}

Gupri create_class_identification_unit(Store& store, const Iri& cls,
                                       std::optional<Iri> ontology,
                                       std::optional<std::string> version) {
  const TypedResource& r = store.resource(cls);
  if (r.category != ResourceCategory::ClassRef && r.category != ResourceCategory::PropertyRef)
    raise(Err::InvalidSpec,
          fmt::format("'{}' is not a class or property reference", cls.value));
  if (find_identification_unit(store, cls))
    raise(Err::DuplicateIdentification,
          fmt::format("resource '{}' already has an identification unit", cls.value));

  SemanticUnit u;
  u.gupri = store.mint_gupri(r.label.empty() ? cls.value : r.label);
  u.kinds = {vocab::lexical_statement_unit, identification_unit_class(r.category)};
  u.subject = cls;
  u.owns_data_graph = true;
  const Gupri g = store.register_unit(std::move(u)).gupri;

  if (!r.label.empty())
    store.add_triple(g, triple(cls, vocab::rdfs_label, str(r.label)));
  store.add_triple(g, triple(cls, vocab::has_identifier, str(cls.value)));
  if (ontology)
    store.add_triple(g, triple(cls, vocab::from_ontology, *ontology));
  if (version)
    store.add_triple(g, triple(cls, vocab::ontology_version, str(*version)));
  return g;
}

} // namespace semunit
