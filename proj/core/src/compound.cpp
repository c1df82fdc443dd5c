#include "semunit/compound.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <map>
#include <set>

#include "semunit/error.hpp"
#include "semunit/resource.hpp"
#include "semunit/vocab.hpp"

namespace semunit {

namespace {

Iri item_unit_class(ResourceCategory c) {
  switch (classify_category(c)) {
    case StatementCategory::Assertional: return vocab::assertional_item_unit;
    case StatementCategory::Contingent: return vocab::contingent_item_unit;
    case StatementCategory::Prototypical: return vocab::prototypical_item_unit;
    default: return vocab::universal_item_unit;
  }
}

// Instance resources occurring anywhere in the unit's merged data graph;
// classes and literals do not connect item units.
std::set<Iri> instance_resources(const Store& store, const Gupri& unit) {
  std::set<Iri> out;
  auto consider = [&](const Term& term) {
    if (!term_is_iri(term)) return;
    const Iri iri = term_iri(term);
    if (!store.has_resource(iri)) return;
    switch (store.resource(iri).category) {
      case ResourceCategory::ClassRef:
      case ResourceCategory::PropertyRef:
        return;
      default:
        out.insert(iri);
    }
  };
  for (const Triple& t : store.merged_data_graph({unit})) {
    consider(Term{t.subject});
    consider(t.object);
  }
  return out;
}

Gupri register_compound(Store& store, std::string hint, std::set<Iri> kinds,
                        const std::vector<Gupri>& members,
                        std::optional<Iri> anchor) {
  SemanticUnit u;
  u.gupri = store.mint_gupri(hint);
  kinds.insert(vocab::compound_unit);
  u.kinds = std::move(kinds);
  u.owns_data_graph = false;
  u.anchor = std::move(anchor);
  for (const Gupri& m : members) {
    u.associations.push_back({vocab::has_associated_semantic_unit, m});
  }
  return store.register_unit(std::move(u)).gupri;
}

}  // namespace

Gupri build_item_unit(Store& store, const Iri& subject_resource) {
  const TypedResource& res = store.resource(subject_resource);
  std::vector<Gupri> members;
  for (const auto& [g, u] : store.units()) {
    if (u.owns_data_graph && u.subject && *u.subject == subject_resource &&
        u.is_statement_unit()) {
      members.push_back(g);
    }
  }
  if (members.empty()) {
    raise(Err::NoStatements,
          fmt::format("no statement units about {}", subject_resource.value));
  }
  return register_compound(store, "item",
                           {vocab::item_unit, item_unit_class(res.category)},
                           members, subject_resource);
}

Gupri build_item_group_unit(Store& store, const std::vector<Gupri>& members,
                            GroupVariant variant) {
  if (members.size() < 2) {
    raise(Err::NotEnoughMembers, "item groups need at least two members");
  }
  for (const Gupri& m : members) {
    if (!store.unit(m).has_kind(vocab::item_unit)) {
      raise(Err::InvalidSpec, fmt::format("{} is not an item unit", m.value));
    }
  }

  // Union-find over members, joined by shared instance resources.
  std::vector<std::size_t> parent(members.size());
  for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = i;
  auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  std::map<Iri, std::size_t> seen;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (const Iri& r : instance_resources(store, members[i])) {
      auto [it, fresh] = seen.emplace(r, i);
      if (!fresh) parent[find(i)] = find(it->second);
    }
  }
  for (std::size_t i = 1; i < members.size(); ++i) {
    if (find(i) != find(0)) {
      raise(Err::Disconnected, "members do not share resources");
    }
  }

  std::optional<Iri> anchor;
  const SemanticUnit& first = store.unit(members.front());
  if (first.anchor && store.has_resource(*first.anchor)) {
    anchor = store.resource(*first.anchor).target_class;
  }
  const Iri variant_class = variant == GroupVariant::Universal
                                ? vocab::universal_item_group_unit
                                : vocab::sufficient_universal_item_group_unit;
  return register_compound(store, "item-group",
                           {vocab::item_group_unit, variant_class}, members,
                           anchor);
}

Gupri build_class_profile_unit(Store& store, const Iri& target_class) {
  std::vector<Gupri> members;
  for (const auto& [g, u] : store.units()) {
    if (!u.anchor) continue;
    bool eligible = false;
    if (u.has_kind(vocab::item_unit)) {
      eligible = u.has_kind(vocab::contingent_item_unit) ||
                 u.has_kind(vocab::prototypical_item_unit) ||
                 u.has_kind(vocab::universal_item_unit);
      if (eligible) {
        const TypedResource& res = store.resource(*u.anchor);
        eligible = res.target_class && *res.target_class == target_class;
      }
    } else if (u.has_kind(vocab::item_group_unit)) {
      eligible = *u.anchor == target_class;
    }
    if (eligible) members.push_back(g);
  }
  if (members.empty()) {
    raise(Err::NoStatements,
          fmt::format("no units describe {}", target_class.value));
  }
  return register_compound(store, "class-profile", {vocab::class_profile_unit},
                           members, target_class);
}

Gupri build_standard_information_unit(Store& store, const Iri& anchor,
                                      const std::vector<Gupri>& members,
                                      const std::string& profile_name) {
  const InfoProfile& profile = store.profile(profile_name);
  std::set<Iri> present;
  for (const Gupri& m : members) {
    const SemanticUnit& u = store.unit(m);
    present.insert(u.kinds.begin(), u.kinds.end());
  }
  for (const Iri& kind : profile.mandatory) {
    if (!present.count(kind)) {
      raise(Err::MissingMandatory, compact_iri(kind, vocab::default_prefixes()));
    }
  }
  const Gupri g = register_compound(
      store, "standard-info", {vocab::standard_information_unit}, members, anchor);
  store.add_units_layer_triple(triple(g, vocab::follows_profile, str(profile_name)));
  store.add_units_layer_triple(
      triple(anchor, vocab::has_associated_standard_information_unit, g));
  return g;
}

ContextualUnit build_contextual_unit(Store& store, const std::vector<Gupri>& core_units,
                                     const std::optional<TimeIndex>& time,
                                     const std::optional<GeoIndex>& geo,
                                     const std::optional<TimeOrder>& order) {
  if (core_units.empty()) {
    raise(Err::NoStatements, "contextual units need at least one core unit");
  }
  if (!time && !geo && !order) {
    raise(Err::InvalidSpec, "contextual units need at least one index");
  }
  const SemanticUnit& first = store.unit(core_units.front());
  if (!first.subject) {
    raise(Err::InvalidSpec,
          fmt::format("{} has no subject to index", core_units.front().value));
  }
  const Iri subject = *first.subject;

  if (time) {
    const bool instant = time->instant.has_value();
    const bool interval = time->start || time->end;
    if (instant == interval) {
      raise(Err::InvalidInterval, "time index takes an instant or an interval");
    }
    if (interval) {
      if (!time->start || !time->end) {
        raise(Err::InvalidInterval, "interval needs both endpoints");
      }
      if (time->start->datatype != time->end->datatype ||
          (time->start->datatype != Datatype::Date &&
           time->start->datatype != Datatype::DateTime)) {
        raise(Err::InvalidInterval, "interval endpoints must share a date type");
      }
      if (time->start->lexical > time->end->lexical) {
        raise(Err::InvalidInterval, "interval endpoints are out of order");
      }
    } else if (time->instant->datatype != Datatype::Date &&
               time->instant->datatype != Datatype::DateTime) {
      raise(Err::InvalidInterval, "instant must be a date or date-time");
    }
  }
  if (geo) {
    if (!geo->place && !geo->latitude) {
      raise(Err::InvalidCoordinates, "geo index needs a place or coordinates");
    }
    if (geo->latitude.has_value() != geo->longitude.has_value()) {
      raise(Err::InvalidCoordinates, "latitude and longitude come together");
    }
    if (geo->latitude) {
      if (compare_numeric(*geo->latitude, integer(-90)) < 0 ||
          compare_numeric(*geo->latitude, integer(90)) > 0) {
        raise(Err::InvalidCoordinates, "latitude out of range");
      }
      if (compare_numeric(*geo->longitude, integer(-180)) < 0 ||
          compare_numeric(*geo->longitude, integer(180)) > 0) {
        raise(Err::InvalidCoordinates, "longitude out of range");
      }
    }
  }
  if (order && order->position < 1) {
    raise(Err::InvalidPosition, "positions start at 1");
  }

  const StatementCategory category = first.category().value_or(StatementCategory::Assertional);
  auto make_index = [&](const std::string& hint, const Iri& kind,
                        const std::vector<Triple>& triples) {
    SemanticUnit u;
    u.gupri = store.mint_gupri(hint);
    u.kinds = {kind, category_class(category)};
    u.subject = subject;
    const Gupri g = store.register_unit(std::move(u)).gupri;
    for (const Triple& t : triples) store.add_triple(g, t);
    return g;
  };

  std::vector<Gupri> index_units;
  std::set<Iri> kinds;
  if (time) {
    std::vector<Triple> ts;
    if (time->instant) {
      ts.push_back(triple(subject, vocab::at_time, *time->instant));
    } else {
      ts.push_back(triple(subject, vocab::interval_start, *time->start));
      ts.push_back(triple(subject, vocab::interval_end, *time->end));
    }
    index_units.push_back(make_index("time-index", vocab::time_index_statement_unit, ts));
    kinds.insert(vocab::time_indexed_unit);
  }
  if (geo) {
    std::vector<Triple> ts;
    if (geo->place) ts.push_back(triple(subject, vocab::located_in, *geo->place));
    if (geo->latitude) {
      ts.push_back(triple(subject, vocab::latitude, *geo->latitude));
      ts.push_back(triple(subject, vocab::longitude, *geo->longitude));
    }
    index_units.push_back(make_index("geo-index", vocab::geo_index_statement_unit, ts));
    kinds.insert(vocab::geo_indexed_unit);
  }
  if (order) {
    std::vector<Triple> ts{
        triple(subject, vocab::in_sequence, order->sequence),
        triple(subject, vocab::at_position, integer(order->position)),
    };
    index_units.push_back(make_index("time-order", vocab::time_order_statement_unit, ts));
    kinds.insert(vocab::time_ordered_unit);
  }

  std::vector<Gupri> members = core_units;
  members.insert(members.end(), index_units.begin(), index_units.end());
  const Gupri g = register_compound(store, "context", std::move(kinds), members, subject);
  return {g, index_units};
}

std::vector<Gupri> compound_members(const Store& store, const Gupri& unit) {
  std::vector<Gupri> out;
  for (const Association& a : store.unit(unit).associations) {
    if (a.role == vocab::has_associated_semantic_unit) out.push_back(a.target);
  }
  return out;
}

}  // namespace semunit
