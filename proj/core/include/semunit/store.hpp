#pragma once

#include "semunit/fact.hpp"
#include "semunit/iri.hpp"
#include "semunit/resource.hpp"
#include "semunit/schema.hpp"
#include "semunit/unit.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <shared_mutex>
#include <string>
#include <vector>

namespace semunit {

struct PartitionReport {
  // triple key -> graphs containing it (only entries with >1 graph)
  std::vector<std::pair<Triple, std::vector<Gupri>>> duplicates;
  // triples filed under a graph name that is no registered statement unit
  std::vector<std::pair<Gupri, Triple>> orphans;

  bool clean() const { return duplicates.empty() && orphans.empty(); }
};

/// Standard-information profile: which statement-unit kinds a conforming
/// description must and may contain.
struct InfoProfile {
  std::string name;
  std::vector<Iri> mandatory;
  std::vector<Iri> optional;
};

/// Regenerable layer of reasoner output, keyed to the store content it was
/// computed from.
struct InferenceLayer {
  std::uint64_t input_hash = 0;
  std::vector<InferredFact> facts;
};

/// Two-layer knowledge graph. The data layer is a partition: every domain
/// triple lives in exactly one named graph, the graph of the statement unit
/// that asserts it. The units layer holds the unit records as triples.
class Store {
public:
  explicit Store(std::string gupri_base = "https://kg.example/su/");

  // --- identifiers ----------------------------------------------------
  const std::string& gupri_base() const { return gupri_base_; }
  /// Deterministic mint: base + sanitized hint + "-" + zero-padded counter.
  Gupri mint_gupri(const std::string& hint);
  Gupri mint_gupri(const std::string& base, const std::string& hint);

  // --- prefixes -------------------------------------------------------
  const PrefixMap& prefixes() const { return prefixes_; }
  void set_prefix(const std::string& prefix, const std::string& ns);

  // --- units ----------------------------------------------------------
  /// Register a new unit record; statement units get an empty data graph.
  const SemanticUnit& register_unit(SemanticUnit unit);
  bool has_unit(const Gupri& g) const;
  const SemanticUnit& unit(const Gupri& g) const;
  std::vector<Gupri> unit_gupris() const; // sorted
  const std::map<Gupri, SemanticUnit>& units() const { return units_; }

  /// Remove an unreferenced unit together with its data graph and record.
  void remove_unit(const Gupri& g);

  // record mutators; each keeps the units layer in sync
  void add_kind(const Gupri& g, const Iri& kind);
  void remove_kind(const Gupri& g, const Iri& kind);
  void set_subject(const Gupri& g, const Iri& subject);
  void add_association(const Gupri& g, const Iri& role, const Gupri& target);
  void set_anchor(const Gupri& g, const Iri& anchor);
  void set_metadata(const Gupri& g, UnitMetadata meta);

  // --- data layer -----------------------------------------------------
  /// Insert into the unit's data graph. Rejects triples already owned by
  /// any graph and graphs of unregistered units.
  void add_triple(const Gupri& unit, const Triple& t);
  void remove_triple(const Gupri& unit, const Triple& t);
  const std::set<Triple>& data_graph(const Gupri& unit) const;
  /// Union of the units' data graphs, following compound-unit associations
  /// recursively. Shared resources merge by IRI identity.
  std::set<Triple> merged_data_graph(const std::vector<Gupri>& units) const;
  PartitionReport verify_partition() const;
  /// Test hook: place a triple bypassing ownership checks.
  void force_place(const Gupri& graph, const Triple& t);

  const std::map<Gupri, std::set<Triple>>& data_layer() const { return data_; }

  // --- units layer ----------------------------------------------------
  const std::set<Triple>& units_layer() const { return units_layer_; }
  void add_units_layer_triple(const Triple& t);
  /// Units-layer triples derived from a unit record (kinds, subject,
  /// associations, anchor, metadata). The rest of the layer is free-form.
  std::set<Triple> record_triples(const SemanticUnit& u) const;

  // --- resources ------------------------------------------------------
  const TypedResource& put_resource(TypedResource r);
  bool has_resource(const Iri& iri) const;
  const TypedResource& resource(const Iri& iri) const;
  const std::map<Iri, TypedResource>& resources() const { return resources_; }

  // --- schemas and profiles --------------------------------------------
  void add_schema(SchemaTemplate schema);
  bool has_schema(const Iri& id) const;
  const SchemaTemplate& schema(const Iri& id) const;
  const std::map<Iri, SchemaTemplate>& schemas() const { return schemas_; }

  void add_profile(InfoProfile profile);
  const InfoProfile& profile(const std::string& name) const;
  const std::map<std::string, InfoProfile>& profiles() const { return profiles_; }

  // --- inference layer --------------------------------------------------
  const InferenceLayer& inference() const { return inference_; }
  void set_inference(InferenceLayer layer) { inference_ = std::move(layer); }

  /// Content hash over both layers and all records; keys the inference layer.
  std::uint64_t content_hash() const;

private:
  SemanticUnit& unit_mut(const Gupri& g);
  void write_unit_record_triples(const SemanticUnit& u);
  void erase_metadata_triples(const Gupri& g);
  void write_metadata_triples(const SemanticUnit& u);

  std::string gupri_base_;
  PrefixMap prefixes_;
  std::map<std::string, unsigned> counters_; // mint key -> last issued
  std::map<Gupri, SemanticUnit> units_;
  std::map<Gupri, std::set<Triple>> data_;
  std::map<std::string, Gupri> owner_; // triple key -> owning graph
  std::set<Triple> units_layer_;
  std::map<Iri, TypedResource> resources_;
  std::map<Iri, SchemaTemplate> schemas_;
  std::map<std::string, InfoProfile> profiles_;
  InferenceLayer inference_;
};

std::string triple_key(const Triple& t);

/// True for the unit-record metadata properties written to the units layer.
bool is_metadata_property(const Iri& p);

/// Canonical lexical form used for certainty literals.
std::string format_certainty(double v);

/// Single-writer, multi-reader shell around a Store value. Readers take
/// consistent snapshots; writers run serialized.
class SharedStore {
public:
  explicit SharedStore(Store initial) : store_(std::move(initial)) {}

  Store snapshot() const {
    std::shared_lock lock(mutex_);
    return store_;
  }

  template <typename Fn>
  auto update(Fn&& fn) {
    std::unique_lock lock(mutex_);
    return fn(store_);
  }

  template <typename Fn>
  auto read(Fn&& fn) const {
    std::shared_lock lock(mutex_);
    return fn(static_cast<const Store&>(store_));
  }

private:
  mutable std::shared_mutex mutex_;
  Store store_;
};

} // namespace semunit
