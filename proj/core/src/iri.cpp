#include "semunit/iri.hpp"

#include "semunit/error.hpp"
#include "semunit/vocab.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cctype>

namespace semunit {

Iri::Iri(std::string v) : value(std::move(v)) {
  if (value.empty())
    raise(Err::InvalidIri, "empty IRI");
  if (value.find(':') == std::string::npos)
    raise(Err::InvalidIri, fmt::format("'{}' has no scheme separator", value));
  if (value.find_first_of(" \t\n\r<>\"{}|^`") != std::string::npos)
    raise(Err::InvalidIri, fmt::format("'{}' contains a forbidden character", value));
}

const char* datatype_iri(Datatype dt) {
  switch (dt) {
  case Datatype::String: return "http://www.w3.org/2001/XMLSchema#string";
  case Datatype::Decimal: return "http://www.w3.org/2001/XMLSchema#decimal";
  case Datatype::Integer: return "http://www.w3.org/2001/XMLSchema#integer";
  case Datatype::Boolean: return "http://www.w3.org/2001/XMLSchema#boolean";
  case Datatype::Date: return "http://www.w3.org/2001/XMLSchema#date";
  case Datatype::DateTime: return "http://www.w3.org/2001/XMLSchema#dateTime";
  }
  return "";
}

const char* datatype_name(Datatype dt) {
  switch (dt) {
  case Datatype::String: return "string";
  case Datatype::Decimal: return "decimal";
  case Datatype::Integer: return "integer";
  case Datatype::Boolean: return "boolean";
  case Datatype::Date: return "date";
  case Datatype::DateTime: return "dateTime";
  }
  return "";
}

std::optional<Datatype> datatype_from_iri(const std::string& iri) {
  for (Datatype dt : {Datatype::String, Datatype::Decimal, Datatype::Integer,
                      Datatype::Boolean, Datatype::Date, Datatype::DateTime}) {
    if (iri == datatype_iri(dt))
      return dt;
  }
  return std::nullopt;
}

bool is_numeric(Datatype dt) {
  return dt == Datatype::Decimal || dt == Datatype::Integer;
}

namespace {

struct Decimal {
  bool negative = false;
  std::string digits; // integer digits, no leading zeros (empty means 0)
  int scale = 0;      // digits after the decimal point represented in `digits`
};

Decimal parse_decimal(const std::string& lex, bool allow_fraction) {
  if (lex.empty())
    raise(Err::InvalidLiteral, "empty numeric literal");
  size_t i = 0;
  Decimal d;
  if (lex[i] == '+' || lex[i] == '-') {
    d.negative = lex[i] == '-';
    ++i;
  }
  bool any_digit = false;
  bool seen_point = false;
  for (; i < lex.size(); ++i) {
    char c = lex[i];
    if (c == '.') {
      if (seen_point || !allow_fraction)
        raise(Err::InvalidLiteral, fmt::format("bad numeric literal '{}'", lex));
      seen_point = true;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(c)))
      raise(Err::InvalidLiteral, fmt::format("bad numeric literal '{}'", lex));
    any_digit = true;
    d.digits.push_back(c);
    if (seen_point)
      ++d.scale;
  }
  if (!any_digit)
    raise(Err::InvalidLiteral, fmt::format("bad numeric literal '{}'", lex));
  // normalize: strip trailing fractional zeros, then leading zeros
  while (d.scale > 0 && !d.digits.empty() && d.digits.back() == '0') {
    d.digits.pop_back();
    --d.scale;
  }
  size_t keep = 0;
  while (keep < d.digits.size() && d.digits[keep] == '0' &&
         d.digits.size() - keep > static_cast<size_t>(d.scale))
    ++keep;
  d.digits.erase(0, keep);
  if (d.digits.empty() || std::all_of(d.digits.begin(), d.digits.end(),
                                      [](char c) { return c == '0'; })) {
    d.digits.clear();
    d.scale = 0;
    d.negative = false;
  }
  return d;
}

std::string render_decimal(const Decimal& d) {
  if (d.digits.empty())
    return "0";
  std::string out;
  if (d.negative)
    out.push_back('-');
  int int_len = static_cast<int>(d.digits.size()) - d.scale;
  if (int_len <= 0) {
    out += "0.";
    out.append(-int_len, '0');
    out += d.digits;
  } else {
    out += d.digits.substr(0, int_len);
    if (d.scale > 0) {
      out.push_back('.');
      out += d.digits.substr(int_len);
    }
  }
  return out;
}

int compare_decimal(const Decimal& a, const Decimal& b) {
  auto magnitude = [](const Decimal& d) {
    return static_cast<int>(d.digits.size()) - d.scale;
  };
  if (a.digits.empty() && b.digits.empty())
    return 0;
  if (a.negative != b.negative)
    return a.negative ? -1 : 1;
  int sign = a.negative ? -1 : 1;
  if (a.digits.empty())
    return -sign;
  if (b.digits.empty())
    return sign;
  if (magnitude(a) != magnitude(b))
    return magnitude(a) < magnitude(b) ? -sign : sign;
  // align fractional digits and compare lexically
  std::string da = a.digits, db = b.digits;
  size_t width = std::max(da.size(), db.size());
  da.append(width - da.size(), '0');
  db.append(width - db.size(), '0');
  int c = da.compare(db);
  if (c == 0)
    return 0;
  return c < 0 ? -sign : sign;
}

bool valid_date(const std::string& s) {
  if (s.size() != 10 || s[4] != '-' || s[7] != '-')
    return false;
  for (size_t i : {0u, 1u, 2u, 3u, 5u, 6u, 8u, 9u})
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      return false;
  return true;
}

bool valid_date_time(const std::string& s) {
  if (s.size() < 19 || s[10] != 'T')
    return false;
  if (!valid_date(s.substr(0, 10)))
    return false;
  const std::string t = s.substr(11);
  if (t.size() < 8 || t[2] != ':' || t[5] != ':')
    return false;
  for (size_t i : {0u, 1u, 3u, 4u, 6u, 7u})
    if (!std::isdigit(static_cast<unsigned char>(t[i])))
      return false;
  return true;
}

} // namespace

Literal::Literal(std::string lex, Datatype dt, std::string lang)
    : lexical(std::move(lex)), datatype(dt), language(std::move(lang)) {
  if (!language.empty() && datatype != Datatype::String)
    raise(Err::InvalidLiteral, "language tag on a non-string literal");
  switch (datatype) {
  case Datatype::Decimal:
    lexical = render_decimal(parse_decimal(lexical, true));
    break;
  case Datatype::Integer:
    lexical = render_decimal(parse_decimal(lexical, false));
    break;
  case Datatype::Boolean:
    if (lexical == "1")
      lexical = "true";
    else if (lexical == "0")
      lexical = "false";
    if (lexical != "true" && lexical != "false")
      raise(Err::InvalidLiteral, fmt::format("bad boolean literal '{}'", lexical));
    break;
  case Datatype::Date:
    if (!valid_date(lexical))
      raise(Err::InvalidLiteral, fmt::format("bad date literal '{}'", lexical));
    break;
  case Datatype::DateTime:
    if (!valid_date_time(lexical))
      raise(Err::InvalidLiteral, fmt::format("bad dateTime literal '{}'", lexical));
    break;
  case Datatype::String:
    break;
  }
}

Literal str(std::string s, std::string lang) {
  return Literal(std::move(s), Datatype::String, std::move(lang));
}

Literal decimal(std::string lex) { return Literal(std::move(lex), Datatype::Decimal); }

Literal integer(long long v) { return Literal(std::to_string(v), Datatype::Integer); }

Literal integer(std::string lex) { return Literal(std::move(lex), Datatype::Integer); }

Literal boolean(bool v) { return Literal(v ? "true" : "false", Datatype::Boolean); }

Literal date(std::string iso) { return Literal(std::move(iso), Datatype::Date); }

Literal date_time(std::string iso) { return Literal(std::move(iso), Datatype::DateTime); }

int compare_numeric(const Literal& a, const Literal& b) {
  if (!is_numeric(a.datatype) || !is_numeric(b.datatype))
    raise(Err::InvalidLiteral, "numeric comparison of non-numeric literals");
  return compare_decimal(parse_decimal(a.lexical, true), parse_decimal(b.lexical, true));
}

bool term_is_iri(const Term& t) { return std::holds_alternative<Iri>(t); }

const Iri& term_iri(const Term& t) { return std::get<Iri>(t); }

const Literal& term_literal(const Term& t) { return std::get<Literal>(t); }

std::string term_key(const Term& t) {
  if (term_is_iri(t))
    return "i:" + term_iri(t).value;
  const Literal& l = term_literal(t);
  return fmt::format("l:{}^^{}@{}", l.lexical, datatype_iri(l.datatype), l.language);
}

Triple triple(Iri s, Iri p, Iri o) {
  return Triple{std::move(s), std::move(p), Term(std::move(o))};
}

Triple triple(Iri s, Iri p, Literal o) {
  return Triple{std::move(s), std::move(p), Term(std::move(o))};
}

std::string compact_iri(const Iri& iri, const PrefixMap& prefixes) {
  // longest matching namespace wins; ties broken by prefix name
  const std::string* best_ns = nullptr;
  const std::string* best_prefix = nullptr;
  for (const auto& [prefix, ns] : prefixes) {
    if (ns.empty() || iri.value.size() <= ns.size())
      continue;
    if (iri.value.compare(0, ns.size(), ns) != 0)
      continue;
    std::string local = iri.value.substr(ns.size());
    if (local.find_first_of("/#:") != std::string::npos)
      continue;
    if (!best_ns || ns.size() > best_ns->size()) {
      best_ns = &ns;
      best_prefix = &prefix;
    }
  }
  if (!best_prefix)
    return "<" + iri.value + ">";
  return *best_prefix + ":" + iri.value.substr(best_ns->size());
}

std::optional<Iri> expand_iri(const std::string& name, const PrefixMap& prefixes) {
  if (name.size() >= 2 && name.front() == '<' && name.back() == '>')
    return Iri(name.substr(1, name.size() - 2));
  auto colon = name.find(':');
  if (colon == std::string::npos)
    return std::nullopt;
  auto it = prefixes.find(name.substr(0, colon));
  if (it == prefixes.end())
    return std::nullopt;
  return Iri(it->second + name.substr(colon + 1));
}

} // namespace semunit
