#pragma once

#include "semunit/iri.hpp"
#include "semunit/unit.hpp"

#include <optional>

namespace semunit {

class Store;

enum class ResourceCategory {
  NamedIndividual,
  SomeInstance,
  MostInstances,
  EveryInstance,
  AllInstances,
  ClassRef,
  PropertyRef,
};

const char* resource_category_name(ResourceCategory c);
std::optional<ResourceCategory> resource_category_from_name(const std::string& name);

/// Marker class asserted in the resource's identification unit.
/// ClassRef and PropertyRef have no instance marker.
std::optional<Iri> resource_marker(ResourceCategory c);

/// Closed-world evidence base for a most-instances resource: instances of
/// target_class divide into those with the distinguishing property asserted
/// and the rest.
struct MostInstancesSemantics {
  Iri target_class;
  Iri distinguishing_property;
  Iri distinguishing_class;

  bool operator==(const MostInstancesSemantics&) const = default;
};

struct TypedResource {
  Iri iri;
  ResourceCategory category = ResourceCategory::NamedIndividual;
  std::optional<Iri> target_class; // required unless ClassRef/PropertyRef
  std::string label;
  std::optional<MostInstancesSemantics> most_semantics;

  bool operator==(const TypedResource&) const = default;
};

/// Statement category implied by the subject's resource category.
StatementCategory classify_category(ResourceCategory c);

/// Identification unit class for the resource category.
Iri identification_unit_class(ResourceCategory c);

/// Record the resource. Instance categories must carry a target class.
const TypedResource& declare_resource(Store& store, TypedResource r);

/// Create the unique identification unit for an instance resource:
/// a lexical statement unit whose data graph types and labels the resource.
Gupri create_identification_unit(Store& store, const Iri& resource);

/// Identification unit for a class reference: label, identifier and optional
/// ontology provenance.
Gupri create_class_identification_unit(Store& store, const Iri& cls,
                                       std::optional<Iri> ontology = std::nullopt,
                                       std::optional<std::string> version = std::nullopt);

/// Gupri of the identification unit already recorded for the resource.
std::optional<Gupri> find_identification_unit(const Store& store, const Iri& resource);

} // namespace semunit
