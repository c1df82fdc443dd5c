#pragma once

#include <optional>
#include <string>
#include <vector>

#include "semunit/store.hpp"

namespace semunit {

// Item units bundle every statement unit that shares a subject resource.
// The subject is recorded as the unit anchor.
Gupri build_item_unit(Store& store, const Iri& subject_resource);

enum class GroupVariant { Universal, SufficientUniversal };

// Item groups bundle item units that form one connected component via shared
// instance resources; the anchor is the class of the first member's subject.
Gupri build_item_group_unit(Store& store, const std::vector<Gupri>& members,
                            GroupVariant variant = GroupVariant::Universal);

// A class profile collects the non-assertional item and group units anchored
// at a class.
Gupri build_class_profile_unit(Store& store, const Iri& target_class);

// Standard information units follow a named profile of mandatory and optional
// member kinds and are linked from their anchor resource in the units layer.
Gupri build_standard_information_unit(Store& store, const Iri& anchor,
                                      const std::vector<Gupri>& members,
                                      const std::string& profile_name);

struct TimeIndex {
  std::optional<Literal> instant;
  std::optional<Literal> start;
  std::optional<Literal> end;
};

struct GeoIndex {
  std::optional<Iri> place;
  std::optional<Literal> latitude;
  std::optional<Literal> longitude;
};

struct TimeOrder {
  Iri sequence{"https://w3id.org/semunit/sequence"};
  long long position = 1;
};

struct ContextualUnit {
  Gupri unit;
  std::vector<Gupri> index_units;
};

// Wraps core units together with freshly minted index statement units about
// the first core unit's subject.
ContextualUnit build_contextual_unit(Store& store, const std::vector<Gupri>& core_units,
                                     const std::optional<TimeIndex>& time,
                                     const std::optional<GeoIndex>& geo,
                                     const std::optional<TimeOrder>& order);

std::vector<Gupri> compound_members(const Store& store, const Gupri& unit);

}  // namespace semunit
