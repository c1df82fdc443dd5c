#include <doctest.h>

#include <semunit/error.hpp>
#include <semunit/iri.hpp>
#include <semunit/vocab.hpp>

using namespace semunit;

TEST_CASE("iri validation") {
  CHECK(Iri("https://example.org/a").value == "https://example.org/a");
  CHECK(Iri("urn:uuid:1234").value == "urn:uuid:1234");
  CHECK_THROWS_AS(Iri(""), Error);
  CHECK_THROWS_AS(Iri("no-scheme-here"), Error);
  CHECK_THROWS_AS(Iri("https://example.org/a b"), Error);
  CHECK_THROWS_AS(Iri("https://example.org/<x>"), Error);

  try {
    Iri("not an iri");
    FAIL("expected a throw");
  } catch (const Error& e) {
    CHECK(e.code() == Err::InvalidIri);
  }
}

TEST_CASE("decimal canonicalization") {
  CHECK(decimal("204.56").lexical == "204.56");
  CHECK(decimal("204.560").lexical == "204.56");
  CHECK(decimal("0150").lexical == "150");
  CHECK(decimal("150.000").lexical == "150");
  CHECK(decimal(".5").lexical == "0.5");
  CHECK(decimal("-0").lexical == "0");
  CHECK(decimal("-0.0").lexical == "0");
  CHECK(decimal("+3.25").lexical == "3.25");
  CHECK(decimal("-12.300").lexical == "-12.3");
  CHECK(decimal("0.001").lexical == "0.001");
  CHECK_THROWS_AS(decimal(""), Error);
  CHECK_THROWS_AS(decimal("1.2.3"), Error);
  CHECK_THROWS_AS(decimal("abc"), Error);

  CHECK(decimal("204.56") == decimal("204.560"));
}

TEST_CASE("integer and boolean canonicalization") {
  CHECK(integer(7).lexical == "7");
  CHECK(integer("007").lexical == "7");
  CHECK(integer("-042").lexical == "-42");
  CHECK_THROWS_AS(integer("3.5"), Error);
  CHECK(boolean(true).lexical == "true");
  CHECK(Literal("1", Datatype::Boolean).lexical == "true");
  CHECK(Literal("0", Datatype::Boolean).lexical == "false");
  CHECK_THROWS_AS(Literal("yes", Datatype::Boolean), Error);
}

TEST_CASE("date validation") {
  CHECK(date("2024-06-13").lexical == "2024-06-13");
  CHECK_THROWS_AS(date("2024-6-13"), Error);
  CHECK_THROWS_AS(date("20240613"), Error);
  CHECK(date_time("2024-06-13T09:30:00").lexical == "2024-06-13T09:30:00");
  CHECK_THROWS_AS(date_time("2024-06-13 09:30:00"), Error);
}

TEST_CASE("language tags only on strings") {
  CHECK(str("Schwan", "de").language == "de");
  CHECK_THROWS_AS(Literal("1.5", Datatype::Decimal, "de"), Error);
}

TEST_CASE("numeric comparison crosses datatypes") {
  CHECK(compare_numeric(decimal("204.56"), integer(204)) > 0);
  CHECK(compare_numeric(decimal("204.56"), integer(205)) < 0);
  CHECK(compare_numeric(decimal("150"), integer(150)) == 0);
  CHECK(compare_numeric(decimal("-2.5"), decimal("-2.4")) < 0);
  CHECK(compare_numeric(decimal("0"), decimal("-0")) == 0);
  CHECK(compare_numeric(decimal("10"), decimal("9.999")) > 0);
  CHECK_THROWS_AS(compare_numeric(str("a"), integer(1)), Error);
}

TEST_CASE("term keys separate value spaces") {
  CHECK(term_key(Term(Iri("https://example.org/a"))) !=
        term_key(Term(str("https://example.org/a"))));
  CHECK(term_key(Term(str("7"))) != term_key(Term(integer(7))));
  CHECK(term_key(Term(str("hi", "en"))) != term_key(Term(str("hi"))));
}

TEST_CASE("prefix compaction") {
  PrefixMap p{{"ex", "https://example.org/kg/"}, {"rdf", vocab::RDF_NS}};
  CHECK(compact_iri(Iri("https://example.org/kg/apple-x"), p) == "ex:apple-x");
  CHECK(compact_iri(Iri("https://other.org/x"), p) == "<https://other.org/x>");
  // locals with separators stay fully spelled
  CHECK(compact_iri(Iri("https://example.org/kg/schema/weight"), p) ==
        "<https://example.org/kg/schema/weight>");
  CHECK(expand_iri("ex:apple-x", p) == Iri("https://example.org/kg/apple-x"));
  CHECK(expand_iri("<https://other.org/x>", p) == Iri("https://other.org/x"));
  CHECK(!expand_iri("nope:x", p).has_value());
  CHECK(!expand_iri("bare", p).has_value());
}

TEST_CASE("longest namespace wins compaction") {
  PrefixMap p{{"a", "https://example.org/"}, {"b", "https://example.org/kg/"}};
  CHECK(compact_iri(Iri("https://example.org/kg/x"), p) == "b:x");
}

TEST_CASE("triples order lexicographically") {
  Triple a = triple(Iri("https://e.org/a"), Iri("https://e.org/p"), Iri("https://e.org/x"));
  Triple b = triple(Iri("https://e.org/a"), Iri("https://e.org/p"), Iri("https://e.org/y"));
  CHECK(a < b);
  CHECK(a == a);
  CHECK(triple(Iri("https://e.org/a"), Iri("https://e.org/p"), integer(1)) !=
        triple(Iri("https://e.org/a"), Iri("https://e.org/p"), integer(2)));
}
