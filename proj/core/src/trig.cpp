#include "semunit/trig.hpp"

#include "semunit/error.hpp"
#include "semunit/resource.hpp"
#include "semunit/unit.hpp"
#include "semunit/vocab.hpp"

#include <fmt/format.h>

#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <vector>

namespace semunit {

namespace {

// --- export ---------------------------------------------------------------

std::string escape_literal(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (char c : s) {
    switch (c) {
    case '\\': out += "\\\\"; break;
    case '"': out += "\\\""; break;
    case '\n': out += "\\n"; break;
    case '\r': out += "\\r"; break;
    case '\t': out += "\\t"; break;
    default: out += c;
    }
  }
  return out;
}

std::string term_text(const Term& t, const PrefixMap& prefixes) {
  if (term_is_iri(t))
    return compact_iri(term_iri(t), prefixes);
  const Literal& lit = term_literal(t);
  std::string out = "\"" + escape_literal(lit.lexical) + "\"";
  if (!lit.language.empty())
    return out + "@" + lit.language;
  if (lit.datatype != Datatype::String)
    return out + "^^" + compact_iri(Iri(datatype_iri(lit.datatype)), prefixes);
  return out;
}

std::string triple_text(const Triple& t, const PrefixMap& prefixes) {
  return fmt::format("{} {} {} .", compact_iri(t.subject, prefixes),
                     compact_iri(t.predicate, prefixes), term_text(t.object, prefixes));
}

// --- tokenizer --------------------------------------------------------------

enum class Tok { Iri, Pname, Literal, Punct, Directive, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;              // IRI value, pname, directive name or punct char
  Literal literal;               // Tok::Literal
  int line = 1;
  int col = 1;
};

class Lexer {
public:
  explicit Lexer(const std::string& text) : text_(text) {}

  Token next() {
    skip_trivia();
    Token t;
    t.line = line_;
    t.col = col_;
    if (eof()) {
      t.kind = Tok::End;
      return t;
    }
    const char c = peek();
    if (c == '_')
      fail_here("blank nodes are not supported", Err::BlankNodeRejected);
    if (c == '[' || c == ']')
      fail_here("blank nodes are not supported", Err::BlankNodeRejected);
    if (c == '{' || c == '}' || c == '.') {
      t.kind = Tok::Punct;
      t.text = c;
      advance();
      return t;
    }
    if (c == '<') {
      t.kind = Tok::Iri;
      t.text = read_iriref();
      return t;
    }
    if (c == '"') {
      t.kind = Tok::Literal;
      t.literal = read_literal();
      return t;
    }
    if (c == '@') {
      advance();
      t.kind = Tok::Directive;
      t.text = read_word();
      return t;
    }
    if (is_name_char(c)) {
      t.kind = Tok::Pname;
      t.text = read_pname();
      return t;
    }
    fail_here(fmt::format("unexpected character '{}'", c));
  }

  [[noreturn]] void fail(const Token& at, const std::string& msg,
                         Err code = Err::ParseError) const {
    raise(code, fmt::format("{} at line {}, column {}", msg, at.line, at.col));
  }

private:
  bool eof() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip_trivia() {
    while (!eof()) {
      const char c = peek();
      if (c == '#') {
        while (!eof() && peek() != '\n')
          advance();
      } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        advance();
      } else {
        return;
      }
    }
  }

  [[noreturn]] void fail_here(const std::string& msg, Err code = Err::ParseError) const {
    raise(code, fmt::format("{} at line {}, column {}", msg, line_, col_));
  }

  static bool is_name_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_' || c == ':' ||
           c == '.' || c == '%';
  }

  std::string read_iriref() {
    advance(); // '<'
    std::string out;
    while (!eof() && peek() != '>') {
      if (peek() == '\n')
        fail_here("newline inside IRI");
      out += peek();
      advance();
    }
    if (eof())
      fail_here("unterminated IRI");
    advance(); // '>'
    return out;
  }

  std::string read_word() {
    std::string out;
    while (!eof() && std::isalpha(static_cast<unsigned char>(peek()))) {
      out += peek();
      advance();
    }
    return out;
  }

  std::string read_pname() {
    std::string out;
    while (!eof() && is_name_char(peek())) {
      out += peek();
      advance();
    }
    while (!out.empty() && out.back() == '.') {
      out.pop_back();
      --pos_;
      --col_;
    }
    return out;
  }

  std::string read_quoted() {
    advance(); // '"'
    std::string out;
    for (;;) {
      if (eof())
        fail_here("unterminated literal");
      const char c = peek();
      if (c == '"') {
        advance();
        return out;
      }
      if (c == '\\') {
        advance();
        if (eof())
          fail_here("unterminated escape");
        switch (peek()) {
        case '\\': out += '\\'; break;
        case '"': out += '"'; break;
        case 'n': out += '\n'; break;
        case 'r': out += '\r'; break;
        case 't': out += '\t'; break;
        default: fail_here(fmt::format("unsupported escape '\\{}'", peek()));
        }
        advance();
      } else {
        out += c;
        advance();
      }
    }
  }

  Literal read_literal() {
    const std::string lex = read_quoted();
    if (!eof() && peek() == '@') {
      advance();
      std::string lang;
      while (!eof() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '-')) {
        lang += peek();
        advance();
      }
      if (lang.empty())
        fail_here("empty language tag");
      return Literal(lex, Datatype::String, lang);
    }
    if (pos_ + 1 < text_.size() && text_[pos_] == '^' && text_[pos_ + 1] == '^') {
      advance();
      advance();
      pending_datatype_ = true;
      return Literal(lex, Datatype::String);
    }
    return Literal(lex, Datatype::String);
  }

public:
  bool take_pending_datatype() {
    const bool p = pending_datatype_;
    pending_datatype_ = false;
    return p;
  }

private:
  const std::string& text_;
  size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
  bool pending_datatype_ = false;
};

// --- parser ---------------------------------------------------------------

struct Document {
  PrefixMap prefixes;
  std::vector<Triple> default_graph;
  std::vector<std::pair<Gupri, Triple>> named; // graph -> triple, document order
};

class Parser {
public:
  explicit Parser(const std::string& text) : lex_(text) {}

  Document run() {
    Token t = lex_.next();
    while (t.kind != Tok::End) {
      if (t.kind == Tok::Directive) {
        parse_prefix(t);
      } else if (t.kind == Tok::Iri || t.kind == Tok::Pname) {
        parse_block_or_triple(t);
      } else {
        lex_.fail(t, fmt::format("unexpected token '{}'", t.text));
      }
      t = lex_.next();
    }
    return std::move(doc_);
  }

private:
  Iri resolve(const Token& t) {
    if (t.kind == Tok::Iri)
      return Iri(t.text);
    auto iri = expand_iri(t.text, doc_.prefixes);
    if (!iri)
      lex_.fail(t, fmt::format("unresolvable name '{}'", t.text));
    return *iri;
  }

  Iri expect_iri(const char* what) {
    Token t = lex_.next();
    if (t.kind != Tok::Iri && t.kind != Tok::Pname)
      lex_.fail(t, fmt::format("expected {}", what));
    return resolve(t);
  }

  void expect_punct(char c) {
    Token t = lex_.next();
    if (t.kind != Tok::Punct || t.text[0] != c)
      lex_.fail(t, fmt::format("expected '{}'", c));
  }

  void parse_prefix(const Token& directive) {
    if (directive.text != "prefix")
      lex_.fail(directive, fmt::format("unsupported directive '@{}'", directive.text));
    Token name = lex_.next();
    if (name.kind != Tok::Pname || name.text.empty() || name.text.back() != ':')
      lex_.fail(name, "expected a prefix name ending in ':'");
    Token iri = lex_.next();
    if (iri.kind != Tok::Iri)
      lex_.fail(iri, "expected a namespace IRI");
    expect_punct('.');
    doc_.prefixes[name.text.substr(0, name.text.size() - 1)] = iri.text;
  }

  Term parse_object() {
    Token t = lex_.next();
    if (t.kind == Tok::Iri || t.kind == Tok::Pname)
      return Term(resolve(t));
    if (t.kind == Tok::Literal) {
      Literal lit = t.literal;
      if (lex_.take_pending_datatype()) {
        Token dt = lex_.next();
        if (dt.kind != Tok::Iri && dt.kind != Tok::Pname)
          lex_.fail(dt, "expected a datatype after '^^'");
        auto known = datatype_from_iri(resolve(dt).value);
        if (!known)
          lex_.fail(dt, fmt::format("unsupported datatype '{}'", dt.text));
        lit = Literal(lit.lexical, *known);
      }
      return Term(std::move(lit));
    }
    lex_.fail(t, "expected an object term");
  }

  void parse_graph_block(const Gupri& graph) {
    for (;;) {
      Token t = lex_.next();
      if (t.kind == Tok::Punct && t.text[0] == '}')
        return;
      if (t.kind == Tok::End)
        lex_.fail(t, "unterminated graph block");
      if (t.kind != Tok::Iri && t.kind != Tok::Pname)
        lex_.fail(t, "expected a subject");
      const Iri subject = resolve(t);
      const Iri predicate = expect_iri("a predicate");
      const Term object = parse_object();
      expect_punct('.');
      doc_.named.emplace_back(graph, Triple{subject, predicate, object});
    }
  }

  void parse_block_or_triple(const Token& head) {
    const Iri name = resolve(head);
    Token t = lex_.next();
    if (t.kind == Tok::Punct && t.text[0] == '{') {
      parse_graph_block(name);
      return;
    }
    if (t.kind != Tok::Iri && t.kind != Tok::Pname)
      lex_.fail(t, "expected a predicate");
    const Iri predicate = resolve(t);
    const Term object = parse_object();
    expect_punct('.');
    doc_.default_graph.push_back(Triple{name, predicate, object});
  }

  Lexer lex_;
  Document doc_;
};

// --- rebuild ----------------------------------------------------------------

UnitMetadata rebuild_metadata(const std::vector<Triple>& triples) {
  using namespace vocab;
  UnitMetadata m;
  for (const Triple& t : triples) {
    if (t.predicate == meta_schema && term_is_iri(t.object))
      m.schema_id = term_iri(t.object);
    else if (t.predicate == meta_author && term_is_iri(t.object))
      m.authors.push_back(term_iri(t.object));
    else if (t.predicate == meta_logic_framework && !term_is_iri(t.object)) {
      auto f = framework_from_name(term_literal(t.object).lexical);
      if (!f)
        raise(Err::ParseError,
              fmt::format("unknown logic framework '{}'", term_literal(t.object).lexical));
      m.logic_framework = *f;
    } else if (t.predicate == meta_certainty && !term_is_iri(t.object)) {
      try {
        m.certainty = std::stod(term_literal(t.object).lexical);
      } catch (const std::exception&) {
        raise(Err::ParseError,
              fmt::format("bad certainty '{}'", term_literal(t.object).lexical));
      }
    } else if (t.predicate == meta_source && !term_is_iri(t.object))
      m.source = term_literal(t.object).lexical;
    else if (t.predicate == meta_extraction_method && !term_is_iri(t.object))
      m.extraction_method = term_literal(t.object).lexical;
    else if (t.predicate == meta_creator && term_is_iri(t.object))
      m.creator = term_iri(t.object);
    else if (t.predicate == meta_created_at && !term_is_iri(t.object))
      m.created_at = term_literal(t.object).lexical;
    else if (t.predicate == meta_license && !term_is_iri(t.object))
      m.license = term_literal(t.object).lexical;
    else if (t.predicate == meta_version && !term_is_iri(t.object))
      m.version = term_literal(t.object).lexical;
  }
  return m;
}

std::optional<ResourceCategory> category_for_marker(const Iri& marker) {
  using namespace vocab;
  if (marker == owl_named_individual)
    return ResourceCategory::NamedIndividual;
  if (marker == some_instance_resource)
    return ResourceCategory::SomeInstance;
  if (marker == most_instances_resource)
    return ResourceCategory::MostInstances;
  if (marker == every_instance_resource)
    return ResourceCategory::EveryInstance;
  if (marker == all_instances_resource)
    return ResourceCategory::AllInstances;
  return std::nullopt;
}

/// Best-effort resource records recovered from identification-unit graphs.
void rebuild_resources(Store& store) {
  for (const auto& [g, u] : store.units()) {
    if (!u.owns_data_graph || !u.subject)
      continue;
    const Iri& res = *u.subject;
    if (store.has_resource(res))
      continue;

    const bool class_ident = u.has_kind(vocab::class_identification_unit);
    const bool prop_ident = u.has_kind(vocab::property_identification_unit);
    bool instance_ident = false;
    for (ResourceCategory c :
         {ResourceCategory::NamedIndividual, ResourceCategory::SomeInstance,
          ResourceCategory::MostInstances, ResourceCategory::EveryInstance,
          ResourceCategory::AllInstances})
      if (u.has_kind(identification_unit_class(c)))
        instance_ident = true;
    if (!class_ident && !prop_ident && !instance_ident)
      continue;

    TypedResource r;
    r.iri = res;
    if (class_ident || prop_ident) {
      r.category = class_ident ? ResourceCategory::ClassRef : ResourceCategory::PropertyRef;
    } else {
      std::optional<ResourceCategory> cat;
      std::optional<Iri> target;
      for (const Triple& t : store.data_graph(g)) {
        if (t.subject != res)
          continue;
        if (t.predicate == vocab::rdf_type && term_is_iri(t.object)) {
          if (auto c = category_for_marker(term_iri(t.object)))
            cat = c;
          else
            target = term_iri(t.object);
        }
      }
      if (!cat || !target)
        continue;
      r.category = *cat;
      r.target_class = target;
    }
    for (const Triple& t : store.data_graph(g))
      if (t.subject == res && t.predicate == vocab::rdfs_label && !term_is_iri(t.object))
        r.label = term_literal(t.object).lexical;
    declare_resource(store, std::move(r));
  }
}

} // namespace

std::string export_trig(const Store& store) {
  const PartitionReport report = store.verify_partition();
  if (!report.clean())
    raise(Err::PartitionViolation,
          fmt::format("data layer is not a partition: {} duplicate keys, {} orphans",
                      report.duplicates.size(), report.orphans.size()));

  const PrefixMap& prefixes = store.prefixes();
  std::ostringstream out;
  for (const auto& [name, ns] : prefixes)
    out << fmt::format("@prefix {}: <{}> .\n", name, ns);
  out << "\n";

  for (const Triple& t : store.units_layer())
    out << triple_text(t, prefixes) << "\n";

  for (const auto& [g, u] : store.units()) {
    if (!u.owns_data_graph)
      continue;
    const std::set<Triple>& graph = store.data_graph(g);
    if (graph.empty())
      continue;
    out << "\n" << compact_iri(g, prefixes) << " {\n";
    for (const Triple& t : graph)
      out << "  " << triple_text(t, prefixes) << "\n";
    out << "}\n";
  }
  return out.str();
}

Store import_trig(const std::string& text, std::string gupri_base) {
  Document doc = Parser(text).run();

  if (gupri_base.empty()) {
    auto kgu = doc.prefixes.find("kgu");
    gupri_base = kgu != doc.prefixes.end() ? kgu->second : std::string("https://kg.example/su/");
  }
  Store store(gupri_base);
  for (const auto& [name, ns] : doc.prefixes)
    store.set_prefix(name, ns);

  std::map<Iri, std::vector<Triple>> by_subject;
  for (const Triple& t : doc.default_graph)
    by_subject[t.subject].push_back(t);

  for (const auto& [subj, triples] : by_subject) {
    SemanticUnit u;
    u.gupri = subj;
    for (const Triple& t : triples)
      if (t.predicate == vocab::rdf_type && term_is_iri(t.object))
        u.kinds.insert(term_iri(t.object));
    if (u.kinds.empty())
      continue; // not a unit record; kept via the leftover pass below
    u.owns_data_graph = !u.has_kind(vocab::compound_unit);
    u.metadata = rebuild_metadata(triples);
    for (const Triple& t : triples) {
      if (t.predicate == vocab::rdf_type || is_metadata_property(t.predicate))
        continue;
      if (t.predicate == vocab::has_semantic_unit_subject && term_is_iri(t.object))
        u.subject = term_iri(t.object);
      else if (t.predicate == vocab::describes && term_is_iri(t.object))
        u.anchor = term_iri(t.object);
      else if (t.predicate == vocab::follows_profile ||
               t.predicate == vocab::has_associated_standard_information_unit)
        continue; // units-layer extra, restored below
      else if (term_is_iri(t.object))
        u.associations.push_back(Association{t.predicate, term_iri(t.object)});
    }
    store.register_unit(std::move(u));
  }

  std::set<Triple> rebuilt;
  for (const auto& [g, u] : store.units()) {
    const std::set<Triple> rec = store.record_triples(u);
    rebuilt.insert(rec.begin(), rec.end());
  }
  for (const Triple& t : doc.default_graph)
    if (!rebuilt.count(t))
      store.add_units_layer_triple(t);

  for (const auto& [graph, t] : doc.named)
    store.add_triple(graph, t);

  rebuild_resources(store);
  return store;
}

} // namespace semunit
