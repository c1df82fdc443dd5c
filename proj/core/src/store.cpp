#include "semunit/store.hpp"

#include "semunit/error.hpp"
#include "semunit/vocab.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cctype>

namespace semunit {

namespace {

std::string sanitize_hint(const std::string& hint) {
  std::string out;
  bool pending_dash = false;
  for (char c : hint) {
    unsigned char u = static_cast<unsigned char>(c);
    if (std::isalnum(u)) {
      if (pending_dash && !out.empty())
        out.push_back('-');
      pending_dash = false;
      out.push_back(static_cast<char>(std::tolower(u)));
    } else {
      pending_dash = true;
    }
  }
  if (out.empty())
    out = "unit";
  return out;
}

std::uint64_t fnv1a(std::uint64_t h, const std::string& s) {
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  }
  h ^= 0x1f;
  h *= 1099511628211ull;
  return h;
}

} // namespace

bool is_metadata_property(const Iri& p) {
  using namespace vocab;
  return p == meta_schema || p == meta_author || p == meta_logic_framework ||
         p == meta_certainty || p == meta_source || p == meta_extraction_method ||
         p == meta_creator || p == meta_created_at || p == meta_license ||
         p == meta_version;
}

std::string format_certainty(double v) { return fmt::format("{}", v); }

std::string triple_key(const Triple& t) {
  return t.subject.value + "\x1f" + t.predicate.value + "\x1f" + term_key(t.object);
}

Store::Store(std::string gupri_base)
    : gupri_base_(std::move(gupri_base)), prefixes_(vocab::default_prefixes()) {
  if (!gupri_base_.empty())
    prefixes_["kgu"] = gupri_base_;
}

Gupri Store::mint_gupri(const std::string& hint) {
  return mint_gupri(gupri_base_, hint);
}

Gupri Store::mint_gupri(const std::string& base, const std::string& hint) {
  const std::string slug = sanitize_hint(hint);
  const std::string key = base + "\x1f" + slug;
  unsigned& counter = counters_[key];
  for (;;) {
    ++counter;
    Gupri candidate(fmt::format("{}{}-{:04}", base, slug, counter));
    if (!units_.count(candidate))
      return candidate;
  }
}

void Store::set_prefix(const std::string& prefix, const std::string& ns) {
  prefixes_[prefix] = ns;
}

const SemanticUnit& Store::register_unit(SemanticUnit unit) {
  if (unit.gupri.value.empty())
    raise(Err::InvalidIri, "unit without a gupri");
  if (units_.count(unit.gupri))
    raise(Err::DuplicateGupri, fmt::format("unit '{}' already registered", unit.gupri.value));
  if (unit.metadata.certainty && (*unit.metadata.certainty < 0.0 || *unit.metadata.certainty > 1.0))
    raise(Err::CertaintyOutOfRange,
          fmt::format("certainty {} outside [0,1]", *unit.metadata.certainty));
  std::sort(unit.associations.begin(), unit.associations.end());
  unit.associations.erase(std::unique(unit.associations.begin(), unit.associations.end()),
                          unit.associations.end());
  std::sort(unit.metadata.authors.begin(), unit.metadata.authors.end());
  auto [it, _] = units_.emplace(unit.gupri, std::move(unit));
  if (it->second.owns_data_graph)
    data_[it->first]; // the unit's (initially empty) named graph
  write_unit_record_triples(it->second);
  return it->second;
}

bool Store::has_unit(const Gupri& g) const { return units_.count(g) != 0; }

const SemanticUnit& Store::unit(const Gupri& g) const {
  auto it = units_.find(g);
  if (it == units_.end())
    raise(Err::UnknownUnit, fmt::format("no unit '{}'", g.value));
  return it->second;
}

SemanticUnit& Store::unit_mut(const Gupri& g) {
  auto it = units_.find(g);
  if (it == units_.end())
    raise(Err::UnknownUnit, fmt::format("no unit '{}'", g.value));
  return it->second;
}

std::vector<Gupri> Store::unit_gupris() const {
  std::vector<Gupri> out;
  out.reserve(units_.size());
  for (const auto& [g, _] : units_)
    out.push_back(g);
  return out;
}

void Store::remove_unit(const Gupri& g) {
  const SemanticUnit& u = unit(g);
  for (const auto& [other, record] : units_) {
    if (other == g)
      continue;
    for (const Association& a : record.associations)
      if (a.target == g)
        raise(Err::UnitReferenced,
              fmt::format("unit '{}' is referenced by '{}'", g.value, other.value));
    if (record.anchor == g)
      raise(Err::UnitReferenced,
            fmt::format("unit '{}' anchors '{}'", g.value, other.value));
  }
  if (u.owns_data_graph) {
    for (const Triple& t : data_[g])
      owner_.erase(triple_key(t));
    data_.erase(g);
  }
  for (auto it = units_layer_.begin(); it != units_layer_.end();) {
    bool about = it->subject == g ||
                 (term_is_iri(it->object) && term_iri(it->object) == g);
    it = about ? units_layer_.erase(it) : ++it;
  }
  units_.erase(g);
}

void Store::add_kind(const Gupri& g, const Iri& kind) {
  SemanticUnit& u = unit_mut(g);
  if (u.kinds.insert(kind).second)
    units_layer_.insert(triple(g, vocab::rdf_type, kind));
}

void Store::remove_kind(const Gupri& g, const Iri& kind) {
  SemanticUnit& u = unit_mut(g);
  if (u.kinds.erase(kind))
    units_layer_.erase(triple(g, vocab::rdf_type, kind));
}

void Store::set_subject(const Gupri& g, const Iri& subject) {
  SemanticUnit& u = unit_mut(g);
  if (u.subject)
    units_layer_.erase(triple(g, vocab::has_semantic_unit_subject, *u.subject));
  u.subject = subject;
  units_layer_.insert(triple(g, vocab::has_semantic_unit_subject, subject));
}

void Store::add_association(const Gupri& g, const Iri& role, const Gupri& target) {
  SemanticUnit& u = unit_mut(g);
  Association a{role, target};
  auto pos = std::lower_bound(u.associations.begin(), u.associations.end(), a);
  if (pos != u.associations.end() && *pos == a)
    return;
  u.associations.insert(pos, a);
  units_layer_.insert(triple(g, role, target));
}

void Store::set_anchor(const Gupri& g, const Iri& anchor) {
  SemanticUnit& u = unit_mut(g);
  if (u.anchor)
    units_layer_.erase(triple(g, vocab::describes, *u.anchor));
  u.anchor = anchor;
  units_layer_.insert(triple(g, vocab::describes, anchor));
}

void Store::set_metadata(const Gupri& g, UnitMetadata meta) {
  if (meta.certainty && (*meta.certainty < 0.0 || *meta.certainty > 1.0))
    raise(Err::CertaintyOutOfRange, fmt::format("certainty {} outside [0,1]", *meta.certainty));
  SemanticUnit& u = unit_mut(g);
  std::sort(meta.authors.begin(), meta.authors.end());
  erase_metadata_triples(g);
  u.metadata = std::move(meta);
  write_metadata_triples(u);
}

void Store::erase_metadata_triples(const Gupri& g) {
  for (auto it = units_layer_.begin(); it != units_layer_.end();) {
    if (it->subject == g && is_metadata_property(it->predicate))
      it = units_layer_.erase(it);
    else
      ++it;
  }
}

void Store::write_metadata_triples(const SemanticUnit& u) {
  for (const Triple& t : record_triples(u))
    if (is_metadata_property(t.predicate))
      units_layer_.insert(t);
}

std::set<Triple> Store::record_triples(const SemanticUnit& u) const {
  std::set<Triple> out;
  const Gupri& g = u.gupri;
  for (const Iri& k : u.kinds)
    out.insert(triple(g, vocab::rdf_type, k));
  if (u.subject)
    out.insert(triple(g, vocab::has_semantic_unit_subject, *u.subject));
  for (const Association& a : u.associations)
    out.insert(triple(g, a.role, a.target));
  if (u.anchor)
    out.insert(triple(g, vocab::describes, *u.anchor));

  using namespace vocab;
  const UnitMetadata& m = u.metadata;
  if (m.schema_id)
    out.insert(triple(g, meta_schema, *m.schema_id));
  for (const Iri& a : m.authors)
    out.insert(triple(g, meta_author, a));
  out.insert(triple(g, meta_logic_framework, str(framework_name(m.logic_framework))));
  if (m.certainty)
    out.insert(triple(g, meta_certainty, decimal(format_certainty(*m.certainty))));
  if (m.source)
    out.insert(triple(g, meta_source, str(*m.source)));
  if (m.extraction_method)
    out.insert(triple(g, meta_extraction_method, str(*m.extraction_method)));
  if (m.creator)
    out.insert(triple(g, meta_creator, *m.creator));
  if (m.created_at)
    out.insert(triple(g, meta_created_at, str(*m.created_at)));
  if (m.license)
    out.insert(triple(g, meta_license, str(*m.license)));
  if (m.version)
    out.insert(triple(g, meta_version, str(*m.version)));
  return out;
}

void Store::write_unit_record_triples(const SemanticUnit& u) {
  const std::set<Triple> ts = record_triples(u);
  units_layer_.insert(ts.begin(), ts.end());
}

void Store::add_triple(const Gupri& unit_g, const Triple& t) {
  auto it = units_.find(unit_g);
  if (it == units_.end())
    raise(Err::UnknownUnit, fmt::format("no unit '{}'", unit_g.value));
  if (!it->second.owns_data_graph)
    raise(Err::UnknownUnit,
          fmt::format("unit '{}' owns no data graph", unit_g.value));
  const std::string key = triple_key(t);
  auto owned = owner_.find(key);
  if (owned != owner_.end()) {
    if (owned->second == unit_g)
      return; // idempotent within the owning graph
    raise(Err::PartitionViolation,
          fmt::format("triple already asserted by '{}'", owned->second.value));
  }
  data_[unit_g].insert(t);
  owner_.emplace(key, unit_g);
}

void Store::remove_triple(const Gupri& unit_g, const Triple& t) {
  auto it = data_.find(unit_g);
  if (it == data_.end())
    raise(Err::UnknownUnit, fmt::format("no data graph '{}'", unit_g.value));
  if (it->second.erase(t))
    owner_.erase(triple_key(t));
}

const std::set<Triple>& Store::data_graph(const Gupri& unit_g) const {
  auto it = data_.find(unit_g);
  if (it == data_.end())
    raise(Err::UnknownUnit, fmt::format("no data graph '{}'", unit_g.value));
  return it->second;
}

std::set<Triple> Store::merged_data_graph(const std::vector<Gupri>& roots) const {
  std::set<Triple> out;
  std::set<Gupri> in_stack;
  std::set<Gupri> done;

  std::function<void(const Gupri&)> visit = [&](const Gupri& g) {
    if (done.count(g))
      return;
    if (in_stack.count(g))
      raise(Err::CycleDetected, fmt::format("association cycle through '{}'", g.value));
    in_stack.insert(g);
    const SemanticUnit& u = unit(g);
    if (u.owns_data_graph) {
      const auto& graph = data_graph(g);
      out.insert(graph.begin(), graph.end());
    } else {
      for (const Association& a : u.associations)
        visit(a.target);
    }
    in_stack.erase(g);
    done.insert(g);
  };

  for (const Gupri& g : roots)
    visit(g);
  return out;
}

PartitionReport Store::verify_partition() const {
  PartitionReport report;
  std::map<std::string, std::pair<Triple, std::vector<Gupri>>> seen;
  for (const auto& [g, graph] : data_) {
    auto u = units_.find(g);
    const bool orphan_graph = u == units_.end() || !u->second.owns_data_graph;
    for (const Triple& t : graph) {
      if (orphan_graph)
        report.orphans.emplace_back(g, t);
      auto& entry = seen[triple_key(t)];
      entry.first = t;
      entry.second.push_back(g);
    }
  }
  for (auto& [_, entry] : seen) {
    if (entry.second.size() > 1)
      report.duplicates.emplace_back(entry.first, entry.second);
  }
  return report;
}

void Store::force_place(const Gupri& graph, const Triple& t) {
  data_[graph].insert(t);
  owner_.emplace(triple_key(t), graph);
}

void Store::add_units_layer_triple(const Triple& t) { units_layer_.insert(t); }

const TypedResource& Store::put_resource(TypedResource r) {
  if (r.iri.value.empty())
    raise(Err::InvalidIri, "resource without an IRI");
  auto [it, _] = resources_.insert_or_assign(r.iri, std::move(r));
  return it->second;
}

bool Store::has_resource(const Iri& iri) const { return resources_.count(iri) != 0; }

const TypedResource& Store::resource(const Iri& iri) const {
  auto it = resources_.find(iri);
  if (it == resources_.end())
    raise(Err::UnknownResource, fmt::format("no resource '{}'", iri.value));
  return it->second;
}

void Store::add_schema(SchemaTemplate schema) {
  schema.validate();
  schemas_.insert_or_assign(schema.id, std::move(schema));
}

bool Store::has_schema(const Iri& id) const { return schemas_.count(id) != 0; }

const SchemaTemplate& Store::schema(const Iri& id) const {
  auto it = schemas_.find(id);
  if (it == schemas_.end())
    raise(Err::UnknownSchema, fmt::format("no schema '{}'", id.value));
  return it->second;
}

void Store::add_profile(InfoProfile profile) {
  profiles_.insert_or_assign(profile.name, std::move(profile));
}

const InfoProfile& Store::profile(const std::string& name) const {
  auto it = profiles_.find(name);
  if (it == profiles_.end())
    raise(Err::UnknownProfile, fmt::format("no profile '{}'", name));
  return it->second;
}

std::uint64_t Store::content_hash() const {
  std::uint64_t h = 1469598103934665603ull;
  for (const auto& [g, graph] : data_) {
    h = fnv1a(h, g.value);
    for (const Triple& t : graph)
      h = fnv1a(h, triple_key(t));
  }
  for (const Triple& t : units_layer_)
    h = fnv1a(h, triple_key(t));
  for (const auto& [iri, r] : resources_) {
    h = fnv1a(h, iri.value);
    h = fnv1a(h, std::string(resource_category_name(r.category)));
    h = fnv1a(h, r.target_class ? r.target_class->value : "");
    h = fnv1a(h, r.label);
  }
  return h;
}

} // namespace semunit
