#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace semunit {

/// Absolute IRI. Must be non-empty and carry a scheme separator.
struct Iri {
  std::string value;

  Iri() = default;
  explicit Iri(std::string v);

  auto operator<=>(const Iri&) const = default;
  bool operator==(const Iri&) const = default;
};

/// Globally unique persistent resolvable identifier: an IRI that names a
/// semantic unit and, for statement units, doubles as its data graph name.
using Gupri = Iri;

enum class Datatype {
  String,
  Decimal,
  Integer,
  Boolean,
  Date,
  DateTime,
};

const char* datatype_iri(Datatype dt);
const char* datatype_name(Datatype dt); // xsd local name
std::optional<Datatype> datatype_from_iri(const std::string& iri);

/// RDF literal. Numeric lexical forms are canonicalized on construction so
/// value-space equality coincides with representation equality.
struct Literal {
  std::string lexical;
  Datatype datatype = Datatype::String;
  std::string language; // only meaningful for String

  Literal() = default;
  Literal(std::string lex, Datatype dt, std::string lang = "");

  auto operator<=>(const Literal&) const = default;
  bool operator==(const Literal&) const = default;
};

Literal str(std::string s, std::string lang = "");
Literal decimal(std::string lex);
Literal integer(long long v);
Literal integer(std::string lex);
Literal boolean(bool v);
Literal date(std::string iso);
Literal date_time(std::string iso);

/// -1, 0, +1 over the numeric value space. Both literals must be numeric.
int compare_numeric(const Literal& a, const Literal& b);
bool is_numeric(Datatype dt);

using Term = std::variant<Iri, Literal>;

bool term_is_iri(const Term& t);
const Iri& term_iri(const Term& t);
const Literal& term_literal(const Term& t);
std::string term_key(const Term& t);

struct Triple {
  Iri subject;
  Iri predicate;
  Term object;

  auto operator<=>(const Triple&) const = default;
  bool operator==(const Triple&) const = default;
};

Triple triple(Iri s, Iri p, Iri o);
Triple triple(Iri s, Iri p, Literal o);

/// prefix -> namespace IRI text
using PrefixMap = std::map<std::string, std::string>;

/// Compact an IRI to prefix:local if some namespace is a prefix of it.
std::string compact_iri(const Iri& iri, const PrefixMap& prefixes);
std::optional<Iri> expand_iri(const std::string& name, const PrefixMap& prefixes);

} // namespace semunit
