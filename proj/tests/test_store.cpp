#include <doctest.h>

#include <semunit/error.hpp>
#include <semunit/store.hpp>
#include <semunit/vocab.hpp>

#include <thread>

#include "fixtures.hpp"

using namespace semunit;

namespace {

SemanticUnit make_unit(const std::string& iri, bool owns = true) {
  SemanticUnit u;
  u.gupri = Gupri(iri);
  u.kinds = {vocab::statement_unit};
  u.owns_data_graph = owns;
  return u;
}

}  // namespace

TEST_CASE("minting is deterministic and collision free") {
  Store a;
  Store b;
  CHECK(a.mint_gupri("weight") == b.mint_gupri("weight"));
  CHECK(a.mint_gupri("weight").value == "https://kg.example/su/weight-0002");
  CHECK(a.mint_gupri("Weight  unit!").value == "https://kg.example/su/weight-unit-0001");
  CHECK(a.mint_gupri("").value == "https://kg.example/su/unit-0001");

  Store c;
  c.register_unit(make_unit("https://kg.example/su/note-0001"));
  CHECK(c.mint_gupri("note").value == "https://kg.example/su/note-0002");
}

TEST_CASE("unit registration and retrieval") {
  Store s;
  const Gupri g = s.register_unit(make_unit("https://kg.example/su/u-0001")).gupri;
  CHECK(s.has_unit(g));
  CHECK(s.unit(g).gupri == g);
  CHECK(s.data_graph(g).empty());
  CHECK_THROWS_AS(s.register_unit(make_unit(g.value)), Error);
  CHECK_THROWS_AS(s.unit(Gupri("https://kg.example/su/missing")), Error);

  SemanticUnit bad = make_unit("https://kg.example/su/u-0002");
  bad.metadata.certainty = 1.5;
  CHECK_THROWS_AS(s.register_unit(std::move(bad)), Error);
}

TEST_CASE("compound units own no data graph") {
  Store s;
  const Gupri g = s.register_unit(make_unit("https://kg.example/su/c-0001", false)).gupri;
  CHECK_THROWS_AS(s.data_graph(g), Error);
  CHECK_THROWS_AS(
      s.add_triple(g, triple(fx::ex("a"), fx::ex("p"), fx::ex("b"))), Error);
}

TEST_CASE("data layer is a partition") {
  Store s;
  const Gupri g1 = s.register_unit(make_unit("https://kg.example/su/u-0001")).gupri;
  const Gupri g2 = s.register_unit(make_unit("https://kg.example/su/u-0002")).gupri;
  const Triple t = triple(fx::ex("a"), fx::ex("p"), fx::ex("b"));
  s.add_triple(g1, t);
  s.add_triple(g1, t);  // idempotent within the owner
  CHECK(s.data_graph(g1).size() == 1);

  try {
    s.add_triple(g2, t);
    FAIL("expected a throw");
  } catch (const Error& e) {
    CHECK(e.code() == Err::PartitionViolation);
  }
  CHECK(s.verify_partition().clean());

  s.force_place(g2, t);
  const PartitionReport report = s.verify_partition();
  REQUIRE(report.duplicates.size() == 1);
  CHECK(report.duplicates[0].first == t);
  CHECK(report.duplicates[0].second == std::vector<Gupri>{g1, g2});

  s.remove_triple(g2, t);
  CHECK(s.verify_partition().clean());
}

TEST_CASE("removing a triple frees it for a new owner") {
  Store s;
  const Gupri g1 = s.register_unit(make_unit("https://kg.example/su/u-0001")).gupri;
  const Gupri g2 = s.register_unit(make_unit("https://kg.example/su/u-0002")).gupri;
  const Triple t = triple(fx::ex("a"), fx::ex("p"), fx::ex("b"));
  s.add_triple(g1, t);
  s.remove_triple(g1, t);
  s.add_triple(g2, t);
  CHECK(s.data_graph(g2).count(t) == 1);
}

TEST_CASE("unit records appear as units layer triples") {
  Store s;
  SemanticUnit u = make_unit("https://kg.example/su/u-0001");
  u.subject = fx::ex("apple-x");
  u.metadata.source = "notebook";
  u.metadata.certainty = 0.9;
  const Gupri g = s.register_unit(std::move(u)).gupri;
  const auto& layer = s.units_layer();
  CHECK(layer.count(triple(g, vocab::rdf_type, vocab::statement_unit)));
  CHECK(layer.count(triple(g, vocab::has_semantic_unit_subject, fx::ex("apple-x"))));
  CHECK(layer.count(triple(g, vocab::meta_source, str("notebook"))));

  s.add_kind(g, vocab::assertional_statement_unit);
  CHECK(layer.count(triple(g, vocab::rdf_type, vocab::assertional_statement_unit)));
  s.remove_kind(g, vocab::assertional_statement_unit);
  CHECK(!layer.count(triple(g, vocab::rdf_type, vocab::assertional_statement_unit)));

  UnitMetadata meta;
  meta.source = "revised";
  s.set_metadata(g, std::move(meta));
  CHECK(!layer.count(triple(g, vocab::meta_source, str("notebook"))));
  CHECK(layer.count(triple(g, vocab::meta_source, str("revised"))));
}

TEST_CASE("associations stay sorted and deduplicated") {
  Store s;
  const Gupri a = s.register_unit(make_unit("https://kg.example/su/a-0001")).gupri;
  const Gupri b = s.register_unit(make_unit("https://kg.example/su/b-0001")).gupri;
  const Gupri c = s.register_unit(make_unit("https://kg.example/su/c-0001", false)).gupri;
  s.add_association(c, vocab::has_associated_semantic_unit, b);
  s.add_association(c, vocab::has_associated_semantic_unit, a);
  s.add_association(c, vocab::has_associated_semantic_unit, b);
  const auto& assoc = s.unit(c).associations;
  REQUIRE(assoc.size() == 2);
  CHECK(assoc[0].target == a);
  CHECK(assoc[1].target == b);
}

TEST_CASE("removing a referenced unit is refused") {
  Store s;
  const Gupri a = s.register_unit(make_unit("https://kg.example/su/a-0001")).gupri;
  const Gupri c = s.register_unit(make_unit("https://kg.example/su/c-0001", false)).gupri;
  s.add_association(c, vocab::has_associated_semantic_unit, a);
  try {
    s.remove_unit(a);
    FAIL("expected a throw");
  } catch (const Error& e) {
    CHECK(e.code() == Err::UnitReferenced);
  }
  s.remove_unit(c);
  s.add_triple(a, triple(fx::ex("x"), fx::ex("p"), fx::ex("y")));
  s.remove_unit(a);
  CHECK(!s.has_unit(a));
  // the freed triple can be claimed again
  const Gupri b = s.register_unit(make_unit("https://kg.example/su/b-0001")).gupri;
  s.add_triple(b, triple(fx::ex("x"), fx::ex("p"), fx::ex("y")));
}

TEST_CASE("merged data graph follows compound associations") {
  fx::AntennaFixture f = fx::antenna();
  const auto merged = f.store.merged_data_graph({f.group});
  const auto direct = f.store.merged_data_graph(
      {f.item_antenna, f.item_eye, f.item_organism});
  CHECK(merged == direct);
  CHECK(merged.count(*f.store.data_graph(f.part_eye).begin()));
}

TEST_CASE("merged data graph detects association cycles") {
  Store s;
  const Gupri a = s.register_unit(make_unit("https://kg.example/su/a-0001", false)).gupri;
  const Gupri b = s.register_unit(make_unit("https://kg.example/su/b-0001", false)).gupri;
  s.add_association(a, vocab::has_associated_semantic_unit, b);
  s.add_association(b, vocab::has_associated_semantic_unit, a);
  try {
    s.merged_data_graph({a});
    FAIL("expected a throw");
  } catch (const Error& e) {
    CHECK(e.code() == Err::CycleDetected);
  }
}

TEST_CASE("content hash tracks both layers") {
  Store s;
  const std::uint64_t h0 = s.content_hash();
  const Gupri g = s.register_unit(make_unit("https://kg.example/su/u-0001")).gupri;
  const std::uint64_t h1 = s.content_hash();
  CHECK(h0 != h1);
  s.add_triple(g, triple(fx::ex("a"), fx::ex("p"), fx::ex("b")));
  const std::uint64_t h2 = s.content_hash();
  CHECK(h1 != h2);

  fx::SwansFixture f1 = fx::swans();
  fx::SwansFixture f2 = fx::swans();
  CHECK(f1.store.content_hash() == f2.store.content_hash());
}

TEST_CASE("shared store serializes writers against readers") {
  SharedStore shared{fx::base_store()};
  std::vector<std::thread> workers;
  for (int w = 0; w < 4; ++w) {
    workers.emplace_back([&shared, w] {
      for (int i = 0; i < 25; ++i) {
        shared.update([&](Store& s) {
          const Gupri g = s.mint_gupri("t" + std::to_string(w));
          SemanticUnit u;
          u.gupri = g;
          u.kinds = {vocab::statement_unit, vocab::assertional_statement_unit};
          s.register_unit(std::move(u));
          s.add_triple(g, triple(fx::ex("s" + std::to_string(w)),
                                 fx::ex("p" + std::to_string(i)), integer(i)));
          return 0;
        });
        Store snap = shared.snapshot();
        CHECK(snap.verify_partition().clean());
      }
    });
  }
  for (auto& t : workers)
    t.join();
  CHECK(shared.read([](const Store& s) { return s.units().size(); }) == 100);
  CHECK(shared.read([](const Store& s) { return s.verify_partition().clean(); }));
}
