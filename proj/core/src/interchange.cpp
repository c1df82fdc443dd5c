#include "semunit/interchange.hpp"

#include "semunit/error.hpp"
#include "semunit/modifier.hpp"
#include "semunit/resource.hpp"
#include "semunit/vocab.hpp"

#include <fmt/format.h>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace semunit {

namespace {

using Json = nlohmann::ordered_json;

// --- primitives -------------------------------------------------------

Datatype parse_datatype(const std::string& name) {
  for (Datatype dt : {Datatype::String, Datatype::Decimal, Datatype::Integer, Datatype::Boolean,
                      Datatype::Date, Datatype::DateTime}) {
    if (name == datatype_name(dt))
      return dt;
  }
  raise(Err::ParseError, fmt::format("unknown datatype '{}'", name));
}

Json term_to_json(const Term& t) {
  Json j;
  if (term_is_iri(t)) {
    j["iri"] = term_iri(t).value;
    return j;
  }
  const Literal& lit = term_literal(t);
  j["value"] = lit.lexical;
  j["datatype"] = datatype_name(lit.datatype);
  if (!lit.language.empty())
    j["lang"] = lit.language;
  return j;
}

Term term_from_json(const Json& j) {
  if (j.is_string())
    return Term(Iri(j.get<std::string>()));
  if (!j.is_object())
    raise(Err::ParseError, "term must be a string or an object");
  if (j.contains("iri"))
    return Term(Iri(j.at("iri").get<std::string>()));
  Literal lit;
  lit.lexical = j.at("value").get<std::string>();
  lit.datatype = parse_datatype(j.value("datatype", "string"));
  lit.language = j.value("lang", "");
  return Term(std::move(lit));
}

Json triple_to_json(const Triple& t) {
  return Json::array({t.subject.value, t.predicate.value, term_to_json(t.object)});
}

Triple triple_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 3)
    raise(Err::ParseError, "triple must be a [subject, predicate, object] array");
  return Triple{Iri(j.at(0).get<std::string>()), Iri(j.at(1).get<std::string>()),
                term_from_json(j.at(2))};
}

StatementCategory parse_category(const std::string& name) {
  for (StatementCategory c :
       {StatementCategory::Assertional, StatementCategory::Contingent,
        StatementCategory::Prototypical, StatementCategory::Universal,
        StatementCategory::Lexical}) {
    if (name == category_name(c))
      return c;
  }
  raise(Err::ParseError, fmt::format("unknown statement category '{}'", name));
}

// --- metadata ----------------------------------------------------------

Json metadata_to_json(const UnitMetadata& m) {
  Json j = Json::object();
  if (m.schema_id)
    j["schema"] = m.schema_id->value;
  if (!m.authors.empty()) {
    Json a = Json::array();
    for (const Iri& x : m.authors)
      a.push_back(x.value);
    j["authors"] = a;
  }
  if (m.logic_framework != LogicFramework::None)
    j["framework"] = framework_name(m.logic_framework);
  if (m.certainty)
    j["certainty"] = *m.certainty;
  if (m.source)
    j["source"] = *m.source;
  if (m.extraction_method)
    j["extraction_method"] = *m.extraction_method;
  if (m.creator)
    j["creator"] = m.creator->value;
  if (m.created_at)
    j["created_at"] = *m.created_at;
  if (m.license)
    j["license"] = *m.license;
  if (m.version)
    j["version"] = *m.version;
  return j;
}

UnitMetadata metadata_from_json(const Json& j) {
  UnitMetadata m;
  if (j.contains("schema"))
    m.schema_id = Iri(j.at("schema").get<std::string>());
  if (j.contains("authors"))
    for (const Json& a : j.at("authors"))
      m.authors.emplace_back(a.get<std::string>());
  if (j.contains("framework")) {
    auto f = framework_from_name(j.at("framework").get<std::string>());
    if (!f)
      raise(Err::ParseError,
            fmt::format("unknown logic framework '{}'", j.at("framework").get<std::string>()));
    m.logic_framework = *f;
  }
  if (j.contains("certainty"))
    m.certainty = j.at("certainty").get<double>();
  if (j.contains("source"))
    m.source = j.at("source").get<std::string>();
  if (j.contains("extraction_method"))
    m.extraction_method = j.at("extraction_method").get<std::string>();
  if (j.contains("creator"))
    m.creator = Iri(j.at("creator").get<std::string>());
  if (j.contains("created_at"))
    m.created_at = j.at("created_at").get<std::string>();
  if (j.contains("license"))
    m.license = j.at("license").get<std::string>();
  if (j.contains("version"))
    m.version = j.at("version").get<std::string>();
  return m;
}

// --- resources -----------------------------------------------------------

Json resource_to_json(const TypedResource& r) {
  Json j;
  j["iri"] = r.iri.value;
  j["category"] = resource_category_name(r.category);
  if (r.target_class)
    j["class"] = r.target_class->value;
  if (!r.label.empty())
    j["label"] = r.label;
  if (r.most_semantics) {
    Json m;
    m["target_class"] = r.most_semantics->target_class.value;
    m["property"] = r.most_semantics->distinguishing_property.value;
    m["object_class"] = r.most_semantics->distinguishing_class.value;
    j["most"] = m;
  }
  return j;
}

TypedResource resource_from_json(const Json& j) {
  TypedResource r;
  r.iri = Iri(j.at("iri").get<std::string>());
  auto cat = resource_category_from_name(j.at("category").get<std::string>());
  if (!cat)
    raise(Err::ParseError,
          fmt::format("unknown resource category '{}'", j.at("category").get<std::string>()));
  r.category = *cat;
  if (j.contains("class"))
    r.target_class = Iri(j.at("class").get<std::string>());
  r.label = j.value("label", "");
  if (j.contains("most")) {
    const Json& m = j.at("most");
    r.most_semantics = MostInstancesSemantics{
        Iri(m.at("target_class").get<std::string>()),
        Iri(m.at("property").get<std::string>()),
        Iri(m.at("object_class").get<std::string>())};
  }
  return r;
}

// --- schemas ---------------------------------------------------------------

const char* slot_kind_name(SlotKind k) {
  switch (k) {
  case SlotKind::Resource: return "resource";
  case SlotKind::LiteralValue: return "literal";
  case SlotKind::ClassReference: return "class";
  }
  return "resource";
}

SlotKind slot_kind_from_name(const std::string& name) {
  for (SlotKind k : {SlotKind::Resource, SlotKind::LiteralValue, SlotKind::ClassReference})
    if (name == slot_kind_name(k))
      return k;
  raise(Err::ParseError, fmt::format("unknown slot kind '{}'", name));
}

const char* shape_name(RangeShape s) {
  switch (s) {
  case RangeShape::Any: return "any";
  case RangeShape::Open: return "open";
  case RangeShape::Bounded: return "bounded";
  }
  return "any";
}

RangeShape shape_from_name(const std::string& name) {
  for (RangeShape s : {RangeShape::Any, RangeShape::Open, RangeShape::Bounded})
    if (name == shape_name(s))
      return s;
  raise(Err::ParseError, fmt::format("unknown range shape '{}'", name));
}

Json schema_to_json(const SchemaTemplate& s) {
  Json j;
  j["id"] = s.id.value;
  j["name"] = s.name;
  j["relation_class"] = s.relation_class.value;
  if (s.principal_property)
    j["principal_property"] = s.principal_property->value;
  Json slots = Json::array();
  for (const SlotSpec& slot : s.slots) {
    Json sj;
    sj["role"] = slot.role;
    sj["kind"] = slot_kind_name(slot.kind);
    if (slot.expected_class)
      sj["class"] = slot.expected_class->value;
    if (slot.expected_datatype)
      sj["datatype"] = datatype_name(*slot.expected_datatype);
    slots.push_back(sj);
  }
  j["slots"] = slots;
  if (!s.internal_nodes.empty()) {
    Json nodes = Json::array();
    for (const InternalNode& n : s.internal_nodes) {
      Json nj;
      nj["name"] = n.name;
      if (n.type_class)
        nj["class"] = n.type_class->value;
      nodes.push_back(nj);
    }
    j["internal_nodes"] = nodes;
  }
  Json edges = Json::array();
  for (const GraphEdge& e : s.edges)
    edges.push_back(Json::array({e.from, e.property.value, e.to}));
  j["edges"] = edges;
  if (!s.label_template.empty())
    j["label"] = s.label_template;
  if (!s.map_edges.empty()) {
    Json map = Json::array();
    for (const MapEdge& e : s.map_edges)
      map.push_back(Json::array({e.from, e.label, e.to}));
    j["map_edges"] = map;
  }
  if (!s.question_labels.empty()) {
    Json qs = Json::array();
    for (const QuestionLabel& q : s.question_labels) {
      Json qj;
      qj["underspecified"] = q.underspecified;
      qj["shape"] = shape_name(q.shape);
      qj["text"] = q.text;
      qs.push_back(qj);
    }
    j["question_labels"] = qs;
  }
  return j;
}

SchemaTemplate schema_from_json(const Json& j) {
  SchemaTemplate s;
  s.id = Iri(j.at("id").get<std::string>());
  s.name = j.at("name").get<std::string>();
  s.relation_class = Iri(j.at("relation_class").get<std::string>());
  if (j.contains("principal_property"))
    s.principal_property = Iri(j.at("principal_property").get<std::string>());
  for (const Json& sj : j.value("slots", Json::array())) {
    SlotSpec slot;
    slot.role = sj.at("role").get<std::string>();
    slot.kind = slot_kind_from_name(sj.at("kind").get<std::string>());
    if (sj.contains("class"))
      slot.expected_class = Iri(sj.at("class").get<std::string>());
    if (sj.contains("datatype"))
      slot.expected_datatype = parse_datatype(sj.at("datatype").get<std::string>());
    s.slots.push_back(std::move(slot));
  }
  for (const Json& nj : j.value("internal_nodes", Json::array())) {
    InternalNode n;
    n.name = nj.at("name").get<std::string>();
    if (nj.contains("class"))
      n.type_class = Iri(nj.at("class").get<std::string>());
    s.internal_nodes.push_back(std::move(n));
  }
  for (const Json& ej : j.value("edges", Json::array()))
    s.edges.push_back(GraphEdge{ej.at(0).get<std::string>(),
                                Iri(ej.at(1).get<std::string>()),
                                ej.at(2).get<std::string>()});
  s.label_template = j.value("label", "");
  for (const Json& ej : j.value("map_edges", Json::array()))
    s.map_edges.push_back(MapEdge{ej.at(0).get<std::string>(), ej.at(1).get<std::string>(),
                                  ej.at(2).get<std::string>()});
  for (const Json& qj : j.value("question_labels", Json::array())) {
    QuestionLabel q;
    q.underspecified = qj.at("underspecified").get<std::vector<std::string>>();
    q.shape = shape_from_name(qj.at("shape").get<std::string>());
    q.text = qj.at("text").get<std::string>();
    s.question_labels.push_back(std::move(q));
  }
  return s;
}

// --- units -------------------------------------------------------------

Json unit_to_json(const Store& store, const SemanticUnit& u) {
  Json j;
  j["gupri"] = u.gupri.value;
  Json kinds = Json::array();
  for (const Iri& k : u.kinds)
    kinds.push_back(k.value);
  j["kinds"] = kinds;
  j["owns_data_graph"] = u.owns_data_graph;
  if (u.subject)
    j["subject"] = u.subject->value;
  if (u.anchor)
    j["anchor"] = u.anchor->value;
  if (!u.associations.empty()) {
    Json as = Json::array();
    for (const Association& a : u.associations)
      as.push_back(Json::array({a.role.value, a.target.value}));
    j["associations"] = as;
  }
  Json meta = metadata_to_json(u.metadata);
  if (!meta.empty())
    j["metadata"] = meta;
  if (u.owns_data_graph) {
    Json ts = Json::array();
    for (const Triple& t : store.data_graph(u.gupri))
      ts.push_back(triple_to_json(t));
    j["triples"] = ts;
  }
  return j;
}

void load_explicit_unit(Store& store, const Json& j) {
  SemanticUnit u;
  u.gupri = Iri(j.at("gupri").get<std::string>());
  for (const Json& k : j.value("kinds", Json::array()))
    u.kinds.insert(Iri(k.get<std::string>()));
  u.owns_data_graph = j.value("owns_data_graph", true);
  if (j.contains("subject"))
    u.subject = Iri(j.at("subject").get<std::string>());
  if (j.contains("anchor"))
    u.anchor = Iri(j.at("anchor").get<std::string>());
  for (const Json& a : j.value("associations", Json::array()))
    u.associations.push_back(
        Association{Iri(a.at(0).get<std::string>()), Iri(a.at(1).get<std::string>())});
  if (j.contains("metadata"))
    u.metadata = metadata_from_json(j.at("metadata"));
  const Gupri g = store.register_unit(std::move(u)).gupri;
  for (const Json& t : j.value("triples", Json::array()))
    store.add_triple(g, triple_from_json(t));
}

void load_authored_unit(Store& store, const Json& j) {
  UnitMetadata meta;
  if (j.contains("metadata"))
    meta = metadata_from_json(j.at("metadata"));
  SlotBindings slots;
  for (const auto& [role, tj] : j.value("slots", Json::object()).items())
    slots.emplace(role, term_from_json(tj));
  const Gupri g =
      create_statement_unit(store, Iri(j.at("schema").get<std::string>()),
                            Iri(j.at("subject").get<std::string>()), slots, std::move(meta));
  if (j.value("negated", false))
    negate(store, g);
}

// --- inference -----------------------------------------------------------

Json fact_to_json(const Fact& f) {
  Json j;
  j["predicate"] = f.predicate;
  Json args = Json::array();
  for (const Term& t : f.args)
    args.push_back(term_to_json(t));
  j["args"] = args;
  if (f.strong_neg)
    j["strong_neg"] = true;
  return j;
}

Fact fact_from_json(const Json& j) {
  Fact f;
  f.predicate = j.at("predicate").get<std::string>();
  for (const Json& t : j.value("args", Json::array()))
    f.args.push_back(term_from_json(t));
  f.strong_neg = j.value("strong_neg", false);
  return f;
}

Modality parse_modality(const std::string& name) {
  for (Modality m : {Modality::Necessary, Modality::Probable, Modality::Possible})
    if (name == modality_name(m))
      return m;
  raise(Err::ParseError, fmt::format("unknown modality '{}'", name));
}

// --- questions ------------------------------------------------------------

Json slot_to_json(const Slot& s) {
  Json j;
  if (const auto* f = std::get_if<FixedSlot>(&s)) {
    j["fixed"] = term_to_json(f->value);
  } else if (const auto* v = std::get_if<TypedVariableSlot>(&s)) {
    j["variable"] = Json{{"class", v->target_class.value}};
  } else {
    const auto& r = std::get<RangeSlot>(s);
    Json rj;
    rj["datatype"] = datatype_name(r.datatype);
    if (r.min)
      rj["min"] = r.min->lexical;
    if (r.max)
      rj["max"] = r.max->lexical;
    if (!r.min_inclusive)
      rj["min_inclusive"] = false;
    if (!r.max_inclusive)
      rj["max_inclusive"] = false;
    j["range"] = rj;
  }
  return j;
}

Slot slot_from_json(const Json& j) {
  if (j.contains("fixed"))
    return FixedSlot{term_from_json(j.at("fixed"))};
  if (j.contains("variable"))
    return TypedVariableSlot{Iri(j.at("variable").at("class").get<std::string>())};
  if (j.contains("range")) {
    const Json& rj = j.at("range");
    RangeSlot r;
    r.datatype = parse_datatype(rj.value("datatype", "decimal"));
    if (rj.contains("min"))
      r.min = Literal(rj.at("min").get<std::string>(), r.datatype);
    if (rj.contains("max"))
      r.max = Literal(rj.at("max").get<std::string>(), r.datatype);
    r.min_inclusive = rj.value("min_inclusive", true);
    r.max_inclusive = rj.value("max_inclusive", true);
    return r;
  }
  raise(Err::ParseError, "slot needs one of 'fixed', 'variable', 'range'");
}

Json question_to_json(const QuestionUnit& q) {
  Json j;
  j["schema"] = q.source_schema.value;
  j["category"] = category_name(q.category);
  Json slots = Json::object();
  for (const auto& [role, s] : q.slots)
    slots[role] = slot_to_json(s);
  j["slots"] = slots;
  return j;
}

QuestionUnit question_from_json(const Json& j) {
  QuestionUnit q;
  q.source_schema = Iri(j.at("schema").get<std::string>());
  q.category = parse_category(j.value("category", "assertional"));
  for (const auto& [role, sj] : j.at("slots").items())
    q.slots.emplace(role, slot_from_json(sj));
  return q;
}

BoolOp parse_bool_op(const std::string& name) {
  for (BoolOp op : {BoolOp::And, BoolOp::Or, BoolOp::Xor, BoolOp::Not, BoolOp::Equal})
    if (name == bool_op_name(op))
      return op;
  raise(Err::ParseError, fmt::format("unknown boolean operator '{}'", name));
}

Json expr_to_json(const QueryExpr& e) {
  if (e.question) {
    Json j;
    j["question"] = question_to_json(*e.question);
    return j;
  }
  Json j;
  j["op"] = bool_op_name(e.op);
  Json ops = Json::array();
  for (const QueryExpr& sub : e.operands)
    ops.push_back(expr_to_json(sub));
  j["operands"] = ops;
  return j;
}

QueryExpr expr_from_json(const Json& j) {
  if (j.contains("question"))
    return QueryExpr::leaf(question_from_json(j.at("question")));
  if (j.contains("op")) {
    std::vector<QueryExpr> operands;
    for (const Json& sub : j.value("operands", Json::array()))
      operands.push_back(expr_from_json(sub));
    return QueryExpr::combo(parse_bool_op(j.at("op").get<std::string>()), std::move(operands));
  }
  // a bare question object is accepted as a leaf
  if (j.contains("schema"))
    return QueryExpr::leaf(question_from_json(j));
  raise(Err::ParseError, "question document needs 'question' or 'op'");
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    raise(Err::ParseError, e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    raise(Err::IoError, fmt::format("cannot open '{}'", path));
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void write_file_atomic(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out)
      raise(Err::IoError, fmt::format("cannot write '{}'", tmp));
    out << content;
    if (!out.flush())
      raise(Err::IoError, fmt::format("write to '{}' failed", tmp));
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec)
    raise(Err::IoError, fmt::format("cannot move '{}' into place: {}", tmp, ec.message()));
}

} // namespace

std::string save_store(const Store& store) {
  Json doc;
  doc["format"] = "semunit-store";
  doc["version"] = 1;
  doc["gupri_base"] = store.gupri_base();

  Json prefixes = Json::object();
  for (const auto& [name, ns] : store.prefixes())
    prefixes[name] = ns;
  doc["prefixes"] = prefixes;

  Json resources = Json::array();
  for (const auto& [iri, r] : store.resources())
    resources.push_back(resource_to_json(r));
  doc["resources"] = resources;

  Json schemas = Json::array();
  for (const auto& [id, s] : store.schemas())
    schemas.push_back(schema_to_json(s));
  doc["schemas"] = schemas;

  Json profiles = Json::array();
  for (const auto& [name, p] : store.profiles()) {
    Json pj;
    pj["name"] = p.name;
    Json mand = Json::array();
    for (const Iri& k : p.mandatory)
      mand.push_back(k.value);
    pj["mandatory"] = mand;
    Json opt = Json::array();
    for (const Iri& k : p.optional)
      opt.push_back(k.value);
    if (!opt.empty())
      pj["optional"] = opt;
    profiles.push_back(pj);
  }
  doc["profiles"] = profiles;

  Json units = Json::array();
  std::set<Triple> derived;
  for (const auto& [g, u] : store.units()) {
    units.push_back(unit_to_json(store, u));
    const std::set<Triple> rec = store.record_triples(u);
    derived.insert(rec.begin(), rec.end());
  }
  doc["units"] = units;

  Json extras = Json::array();
  for (const Triple& t : store.units_layer())
    if (!derived.count(t))
      extras.push_back(triple_to_json(t));
  if (!extras.empty())
    doc["units_layer_extras"] = extras;

  const InferenceLayer& inf = store.inference();
  if (!inf.facts.empty()) {
    Json ij;
    ij["input_hash"] = fmt::format("{}", inf.input_hash);
    Json facts = Json::array();
    for (const InferredFact& f : inf.facts) {
      Json fj = fact_to_json(f.fact);
      fj["modality"] = modality_name(f.modality);
      if (f.defeasible)
        fj["defeasible"] = true;
      if (f.hypothesis)
        fj["hypothesis"] = true;
      if (!f.provenance.value.empty())
        fj["provenance"] = f.provenance.value;
      facts.push_back(fj);
    }
    ij["facts"] = facts;
    doc["inference"] = ij;
  }

  return doc.dump(2) + "\n";
}

Store load_store(const std::string& json_text) {
  const Json doc = parse_json(json_text);
  try {
    Store store(doc.value("gupri_base", std::string("https://kg.example/su/")));
    for (const auto& [name, ns] : doc.value("prefixes", Json::object()).items())
      store.set_prefix(name, ns.get<std::string>());

    std::vector<Iri> to_identify;
    std::map<Iri, std::pair<std::optional<Iri>, std::optional<std::string>>> class_extras;
    for (const Json& rj : doc.value("resources", Json::array())) {
      const TypedResource& r = declare_resource(store, resource_from_json(rj));
      if (rj.value("identify", false)) {
        to_identify.push_back(r.iri);
        if (rj.contains("ontology") || rj.contains("ontology_version")) {
          std::optional<Iri> onto;
          if (rj.contains("ontology"))
            onto = Iri(rj.at("ontology").get<std::string>());
          std::optional<std::string> ver;
          if (rj.contains("ontology_version"))
            ver = rj.at("ontology_version").get<std::string>();
          class_extras[r.iri] = {onto, ver};
        }
      }
    }

    for (const Json& sj : doc.value("schemas", Json::array()))
      store.add_schema(schema_from_json(sj));

    for (const Json& pj : doc.value("profiles", Json::array())) {
      InfoProfile p;
      p.name = pj.at("name").get<std::string>();
      for (const Json& k : pj.value("mandatory", Json::array()))
        p.mandatory.emplace_back(k.get<std::string>());
      for (const Json& k : pj.value("optional", Json::array()))
        p.optional.emplace_back(k.get<std::string>());
      store.add_profile(std::move(p));
    }

    for (const Iri& iri : to_identify) {
      const TypedResource& r = store.resource(iri);
      if (r.category == ResourceCategory::ClassRef ||
          r.category == ResourceCategory::PropertyRef) {
        auto extra = class_extras.find(iri);
        if (extra != class_extras.end())
          create_class_identification_unit(store, iri, extra->second.first,
                                           extra->second.second);
        else
          create_class_identification_unit(store, iri);
      } else {
        create_identification_unit(store, iri);
      }
    }

    for (const Json& uj : doc.value("units", Json::array())) {
      if (uj.contains("gupri"))
        load_explicit_unit(store, uj);
      else
        load_authored_unit(store, uj);
    }

    for (const Json& tj : doc.value("units_layer_extras", Json::array()))
      store.add_units_layer_triple(triple_from_json(tj));

    if (doc.contains("inference")) {
      const Json& ij = doc.at("inference");
      InferenceLayer layer;
      layer.input_hash = std::stoull(ij.value("input_hash", std::string("0")));
      for (const Json& fj : ij.value("facts", Json::array())) {
        InferredFact f;
        f.fact = fact_from_json(fj);
        f.modality = parse_modality(fj.value("modality", "necessary"));
        f.defeasible = fj.value("defeasible", false);
        f.hypothesis = fj.value("hypothesis", false);
        if (fj.contains("provenance"))
          f.provenance = Iri(fj.at("provenance").get<std::string>());
        layer.facts.push_back(std::move(f));
      }
      store.set_inference(std::move(layer));
    }
    return store;
  } catch (const nlohmann::json::exception& e) {
    raise(Err::ParseError, e.what());
  }
}

void load_templates(Store& store, const std::string& json_text) {
  const Json doc = parse_json(json_text);
  try {
    for (const Json& sj : doc.value("schemas", Json::array()))
      store.add_schema(schema_from_json(sj));
    for (const Json& pj : doc.value("profiles", Json::array())) {
      InfoProfile p;
      p.name = pj.at("name").get<std::string>();
      for (const Json& k : pj.value("mandatory", Json::array()))
        p.mandatory.emplace_back(k.get<std::string>());
      for (const Json& k : pj.value("optional", Json::array()))
        p.optional.emplace_back(k.get<std::string>());
      store.add_profile(std::move(p));
    }
  } catch (const nlohmann::json::exception& e) {
    raise(Err::ParseError, e.what());
  }
}

void load_templates_file(Store& store, const std::string& path) {
  load_templates(store, read_file(path));
}

void save_store_file(const Store& store, const std::string& path) {
  write_file_atomic(path, save_store(store));
}

Store load_store_file(const std::string& path) { return load_store(read_file(path)); }

QueryExpr read_question(const std::string& json_text) {
  const Json doc = parse_json(json_text);
  try {
    return expr_from_json(doc);
  } catch (const nlohmann::json::exception& e) {
    raise(Err::ParseError, e.what());
  }
}

std::string write_question(const QueryExpr& expr) { return expr_to_json(expr).dump(2) + "\n"; }

QueryExpr read_question_file(const std::string& path) {
  return read_question(read_file(path));
}

} // namespace semunit
