#include "semunit/render.hpp"

#include "semunit/discourse.hpp"
#include "semunit/error.hpp"
#include "semunit/modifier.hpp"
#include "semunit/resource.hpp"
#include "semunit/vocab.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <set>
#include <tuple>
#include <vector>

namespace semunit {

namespace {

std::string iri_label(const Store& store, const Iri& iri) {
  if (store.has_resource(iri)) {
    const TypedResource& r = store.resource(iri);
    if (!r.label.empty())
      return r.label;
  }
  if (store.has_unit(iri))
    return dynamic_label(store, iri);
  return compact_iri(iri, store.prefixes());
}

// Placeholder fill shared by unit labels and question labels. The resolver
// returns the display text for a placeholder body or nullopt when unknown.
template <typename Resolver>
std::string fill_template(const std::string& tmpl, bool negated, Resolver resolve) {
  std::string out;
  bool saw_negation_mark = false;
  std::size_t i = 0;
  while (i < tmpl.size()) {
    if (tmpl[i] != '{') {
      out += tmpl[i++];
      continue;
    }
    std::size_t close = tmpl.find('}', i);
    if (close == std::string::npos) {
      out += tmpl.substr(i);
      break;
    }
    std::string body = tmpl.substr(i + 1, close - i - 1);
    if (body == "¬") {
      saw_negation_mark = true;
      if (negated)
        out += " not";
    } else {
      std::optional<std::string> text = resolve(body);
      if (!text)
        raise(Err::MissingTemplate, fmt::format("no value for placeholder '{{{}}}'", body));
      out += *text;
    }
    i = close + 1;
  }
  if (negated && !saw_negation_mark)
    out = "not: " + out;
  return out;
}

std::map<std::string, Term> resolve_nodes(const Store& store, const SemanticUnit& u,
                                          const SchemaTemplate& schema) {
  std::map<std::string, Term> resolved;
  if (u.subject)
    resolved.emplace("subject", Term(*u.subject));
  const auto& graph = store.data_graph(u.gupri);
  for (const GraphEdge& e : schema.edges) {
    auto from = resolved.find(e.from);
    if (from == resolved.end() || !term_is_iri(from->second))
      continue;
    const Iri& s = term_iri(from->second);
    for (const Triple& t : graph) {
      if (t.subject == s && t.predicate == e.property) {
        resolved.emplace(e.to, t.object);
        break;
      }
    }
  }
  return resolved;
}

std::optional<const Triple*> find_by_predicate(const std::set<Triple>& graph, const Iri& p) {
  for (const Triple& t : graph)
    if (t.predicate == p)
      return &t;
  return std::nullopt;
}

std::string literal_display(const Literal& lit) { return lit.lexical; }

std::string term_display(const Store& store, const Term& t) {
  if (term_is_iri(t))
    return iri_label(store, term_iri(t));
  return literal_display(term_literal(t));
}

std::string cardinality_suffix(const Store& store, const Gupri& g) {
  auto spec = read_cardinality(store, g);
  if (!spec)
    return "";
  if (spec->form == CardinalityForm::Exact && spec->exact)
    return fmt::format(" (exactly {})", *spec->exact);
  std::string unit_text;
  if (spec->value_unit)
    unit_text = " " + iri_label(store, *spec->value_unit);
  if (spec->min && spec->max)
    return fmt::format(" (between {} and {}{})", spec->min->lexical, spec->max->lexical,
                       unit_text);
  if (spec->min)
    return fmt::format(" (at least {}{})", spec->min->lexical, unit_text);
  if (spec->max)
    return fmt::format(" (at most {}{})", spec->max->lexical, unit_text);
  return "";
}

bool is_identification(const SemanticUnit& u) {
  for (ResourceCategory c :
       {ResourceCategory::NamedIndividual, ResourceCategory::SomeInstance,
        ResourceCategory::MostInstances, ResourceCategory::EveryInstance,
        ResourceCategory::AllInstances, ResourceCategory::ClassRef,
        ResourceCategory::PropertyRef}) {
    if (u.has_kind(identification_unit_class(c)))
      return true;
  }
  return false;
}

std::string identification_label(const Store& store, const SemanticUnit& u) {
  const Iri& subject = *u.subject;
  std::string name = iri_label(store, subject);
  if (u.has_kind(vocab::property_identification_unit))
    return fmt::format("{} is a property", name);
  if (u.has_kind(vocab::class_identification_unit))
    return fmt::format("{} is a class", name);
  std::string cls = "?";
  if (store.has_resource(subject)) {
    const TypedResource& r = store.resource(subject);
    if (r.target_class)
      cls = iri_label(store, *r.target_class);
  }
  std::string text = fill_template("{subject} is{¬} a {class}", u.is_negated(),
                                   [&](const std::string& body) -> std::optional<std::string> {
                                     if (body == "subject")
                                       return name;
                                     if (body == "class")
                                       return cls;
                                     return std::nullopt;
                                   });
  return text + cardinality_suffix(store, u.gupri);
}

std::string index_label(const Store& store, const SemanticUnit& u) {
  const auto& graph = store.data_graph(u.gupri);
  std::string subject = iri_label(store, *u.subject);
  if (u.has_kind(vocab::time_index_statement_unit)) {
    if (auto t = find_by_predicate(graph, vocab::at_time))
      return fmt::format("{} at {}", subject, term_display(store, (*t)->object));
    auto s = find_by_predicate(graph, vocab::interval_start);
    auto e = find_by_predicate(graph, vocab::interval_end);
    if (s && e)
      return fmt::format("{} from {} to {}", subject, term_display(store, (*s)->object),
                         term_display(store, (*e)->object));
  }
  if (u.has_kind(vocab::geo_index_statement_unit)) {
    std::string text = subject;
    if (auto p = find_by_predicate(graph, vocab::located_in))
      text += fmt::format(" located in {}", term_display(store, (*p)->object));
    auto lat = find_by_predicate(graph, vocab::latitude);
    auto lon = find_by_predicate(graph, vocab::longitude);
    if (lat && lon)
      text += fmt::format(" at ({}, {})", term_display(store, (*lat)->object),
                          term_display(store, (*lon)->object));
    return text;
  }
  if (u.has_kind(vocab::time_order_statement_unit)) {
    auto seq = find_by_predicate(graph, vocab::in_sequence);
    auto pos = find_by_predicate(graph, vocab::at_position);
    if (seq && pos)
      return fmt::format("{} at position {} in {}", subject,
                         term_display(store, (*pos)->object),
                         term_display(store, (*seq)->object));
  }
  return "";
}

std::string compound_label(const Store& store, const SemanticUnit& u) {
  std::string anchor = u.anchor ? iri_label(store, *u.anchor)
                       : u.subject ? iri_label(store, *u.subject)
                                   : compact_iri(u.gupri, store.prefixes());
  if (u.has_kind(vocab::boolean_unit)) {
    BoolOp op = boolean_unit_op(store, u.gupri);
    std::vector<Gupri> operands = boolean_unit_operands(store, u.gupri);
    std::vector<std::string> parts;
    parts.reserve(operands.size());
    for (const Gupri& o : operands)
      parts.push_back(dynamic_label(store, o));
    if (op == BoolOp::Not)
      return fmt::format("NOT ({})", parts.front());
    return fmt::format("({})", fmt::join(parts, fmt::format(" {} ", bool_op_name(op))));
  }
  if (u.has_kind(vocab::item_unit))
    return fmt::format("item unit about {}", anchor);
  if (u.has_kind(vocab::item_group_unit))
    return fmt::format("item group of {}", anchor);
  if (u.has_kind(vocab::class_profile_unit))
    return fmt::format("class profile of {}", anchor);
  if (u.has_kind(vocab::standard_information_unit))
    return fmt::format("standard information for {}", anchor);
  if (u.has_kind(vocab::time_indexed_unit) || u.has_kind(vocab::geo_indexed_unit) ||
      u.has_kind(vocab::time_ordered_unit))
    return fmt::format("context of {}", anchor);
  return fmt::format("compound unit {}", compact_iri(u.gupri, store.prefixes()));
}

std::string base_label(const Store& store, const SemanticUnit& u) {
  if (u.metadata.schema_id && store.has_schema(*u.metadata.schema_id)) {
    const SchemaTemplate& schema = store.schema(*u.metadata.schema_id);
    if (schema.label_template.empty())
      raise(Err::MissingTemplate,
            fmt::format("schema '{}' has no label template", schema.name));
    auto resolved = resolve_nodes(store, u, schema);
    return fill_template(schema.label_template, u.is_negated(),
                         [&](const std::string& body) -> std::optional<std::string> {
                           auto it = resolved.find(body);
                           if (it == resolved.end())
                             return std::nullopt;
                           return term_display(store, it->second);
                         });
  }

  if (!u.is_statement_unit())
    return compound_label(store, u);

  if (u.has_kind(vocab::conditional_unit)) {
    if (auto t = find_by_predicate(store.data_graph(u.gupri), vocab::is_if_of_then))
      return fmt::format("If {} then {}", iri_label(store, (*t)->subject),
                         term_display(store, (*t)->object));
  }
  if (u.has_kind(vocab::epistemic_unit)) {
    const auto& graph = store.data_graph(u.gupri);
    for (const auto& [prop, verb] :
         {std::pair{vocab::asserts, "asserts"}, {vocab::negates, "rejects"},
          {vocab::agnostic_about, "is agnostic about"}}) {
      if (auto t = find_by_predicate(graph, prop))
        return fmt::format("{} {}: \"{}\"", iri_label(store, (*t)->subject), verb,
                           term_display(store, (*t)->object));
    }
  }
  if (u.has_kind(vocab::logical_argument_unit)) {
    ArgumentUnit arg = read_argument(store, u.gupri);
    std::string c = dynamic_label(store, arg.case_clause);
    std::string r = dynamic_label(store, arg.rule_clause);
    std::string s = dynamic_label(store, arg.result_clause);
    switch (arg.kind) {
    case ArgumentKind::Deduction:
      return fmt::format("given \"{}\" and \"{}\", conclude: \"{}\"", c, r, s);
    case ArgumentKind::Induction:
      return fmt::format("given \"{}\" and \"{}\", conclude: \"{}\"", c, s, r);
    case ArgumentKind::Abduction:
      return fmt::format("given \"{}\" and \"{}\", hypothesize: \"{}\"", r, s, c);
    }
  }
  if (u.subject && is_identification(u))
    return identification_label(store, u);
  if (u.subject) {
    std::string text = index_label(store, u);
    if (!text.empty())
      return text;
  }

  // Last resort for schema-less complex units: spell the data graph out.
  const auto& graph = store.data_graph(u.gupri);
  if (!graph.empty()) {
    std::vector<std::string> parts;
    for (const Triple& t : graph)
      parts.push_back(fmt::format("{} {} {}", iri_label(store, t.subject),
                                  iri_label(store, t.predicate),
                                  term_display(store, t.object)));
    std::string text = fmt::format("{}", fmt::join(parts, "; "));
    if (u.is_negated())
      text = "not: " + text;
    return text;
  }
  raise(Err::MissingTemplate,
        fmt::format("no label template applies to '{}'", u.gupri.value));
}

std::string dot_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    if (c == '"' || c == '\\')
      out += '\\';
    out += c;
  }
  return out;
}

struct MapSink {
  std::vector<std::pair<std::string, std::string>> nodes;
  std::set<std::string> seen;
  std::vector<std::tuple<std::string, std::string, std::string>> edges;

  void node(const std::string& id, const std::string& label) {
    if (seen.insert(id).second)
      nodes.emplace_back(id, label);
  }
  void edge(const std::string& from, const std::string& label, const std::string& to) {
    edges.emplace_back(from, label, to);
  }
};

std::string property_display(const Store& store, const Iri& p) {
  if (store.has_resource(p)) {
    const TypedResource& r = store.resource(p);
    if (!r.label.empty())
      return r.label;
  }
  return compact_iri(p, store.prefixes());
}

void emit_statement_map(const Store& store, const SemanticUnit& u, MapSink& sink) {
  const std::string unit_tag = compact_iri(u.gupri, store.prefixes());

  auto term_node = [&](const Term& t, const std::string& scope) -> std::string {
    if (term_is_iri(t)) {
      const Iri& iri = term_iri(t);
      std::string id = compact_iri(iri, store.prefixes());
      sink.node(id, iri_label(store, iri));
      return id;
    }
    std::string id = unit_tag + "/" + scope;
    sink.node(id, literal_display(term_literal(t)));
    return id;
  };

  if (u.metadata.schema_id && store.has_schema(*u.metadata.schema_id)) {
    const SchemaTemplate& schema = store.schema(*u.metadata.schema_id);
    if (schema.map_edges.empty())
      raise(Err::MissingTemplate,
            fmt::format("schema '{}' has no mind-map template", schema.name));
    auto resolved = resolve_nodes(store, u, schema);
    for (const MapEdge& e : schema.map_edges) {
      auto from = resolved.find(e.from);
      auto to = resolved.find(e.to);
      if (from == resolved.end() || to == resolved.end())
        continue;
      sink.edge(term_node(from->second, e.from), e.label, term_node(to->second, e.to));
    }
    return;
  }

  if (u.subject && is_identification(u) && store.has_resource(*u.subject)) {
    const TypedResource& r = store.resource(*u.subject);
    std::string s = term_node(Term(*u.subject), "subject");
    if (r.target_class)
      sink.edge(s, u.is_negated() ? "not type" : "type",
                term_node(Term(*r.target_class), "class"));
    return;
  }

  int lit = 0;
  for (const Triple& t : store.data_graph(u.gupri)) {
    std::string s = term_node(Term(t.subject), "subject");
    std::string o = term_node(t.object, fmt::format("lit{}", lit++));
    sink.edge(s, property_display(store, t.predicate), o);
  }
}

void flatten_units(const Store& store, const Gupri& g, std::vector<Gupri>& out,
                   std::set<Gupri>& seen) {
  const SemanticUnit& u = store.unit(g);
  if (u.is_statement_unit()) {
    if (seen.insert(g).second)
      out.push_back(g);
    return;
  }
  for (const Association& a : u.associations) {
    if (store.has_unit(a.target))
      flatten_units(store, a.target, out, seen);
  }
}

void render_nodes(std::string& out, const std::string& indent,
                  const std::vector<std::pair<std::string, std::string>>& nodes) {
  for (const auto& [id, label] : nodes)
    out += fmt::format("{}\"{}\" [label=\"{}\"];\n", indent, dot_escape(id),
                       dot_escape(label));
}

} // namespace

std::string display_label(const Store& store, const Term& t) {
  return term_display(store, t);
}

std::string dynamic_label(const Store& store, const Gupri& unit) {
  const SemanticUnit& u = store.unit(unit);
  std::string text = base_label(store, u);
  if (u.has_kind(vocab::directive_unit))
    text = fmt::format("Make: {}!", text);
  return text;
}

std::string dynamic_label(const Store& store, const QuestionUnit& question) {
  const SchemaTemplate& schema = store.schema(question.source_schema);

  std::vector<std::string> underspecified;
  RangeShape shape = RangeShape::Any;
  for (const auto& [role, slot] : question.slots) {
    if (std::holds_alternative<FixedSlot>(slot))
      continue;
    underspecified.push_back(role);
    if (const auto* r = std::get_if<RangeSlot>(&slot))
      shape = (r->min && r->max) ? RangeShape::Bounded : RangeShape::Open;
  }

  const QuestionLabel* chosen = nullptr;
  for (const QuestionLabel& q : schema.question_labels) {
    if (q.underspecified == underspecified && q.shape == shape) {
      chosen = &q;
      break;
    }
  }
  if (!chosen)
    raise(Err::MissingTemplate,
          fmt::format("schema '{}' has no question template for this shape", schema.name));

  return fill_template(
      chosen->text, false, [&](const std::string& body) -> std::optional<std::string> {
        std::string role = body;
        std::string facet;
        if (auto colon = body.find(':'); colon != std::string::npos) {
          role = body.substr(0, colon);
          facet = body.substr(colon + 1);
        }
        auto it = question.slots.find(role);
        if (it == question.slots.end())
          return std::nullopt;
        if (facet.empty()) {
          if (const auto* f = std::get_if<FixedSlot>(&it->second))
            return term_display(store, f->value);
          return std::nullopt;
        }
        if (facet == "class") {
          if (const auto* tv = std::get_if<TypedVariableSlot>(&it->second))
            return iri_label(store, tv->target_class);
          return std::nullopt;
        }
        const auto* r = std::get_if<RangeSlot>(&it->second);
        if (!r)
          return std::nullopt;
        if (facet == "min" && r->min)
          return r->min->lexical;
        if (facet == "max" && r->max)
          return r->max->lexical;
        return std::nullopt;
      });
}

std::string dynamic_mind_map(const Store& store, const Gupri& unit) {
  const SemanticUnit& u = store.unit(unit);
  std::string out = "digraph semunit {\n  rankdir=LR;\n  node [shape=box];\n";

  if (u.is_statement_unit()) {
    MapSink sink;
    emit_statement_map(store, u, sink);
    render_nodes(out, "  ", sink.nodes);
    for (const auto& [from, label, to] : sink.edges)
      out += fmt::format("  \"{}\" -> \"{}\" [label=\"{}\"];\n", dot_escape(from),
                         dot_escape(to), dot_escape(label));
    out += "}\n";
    return out;
  }

  std::vector<Gupri> leaves;
  std::set<Gupri> seen;
  flatten_units(store, unit, leaves, seen);

  std::vector<MapSink> sinks(leaves.size());
  std::map<std::string, int> owners;
  for (std::size_t i = 0; i < leaves.size(); ++i) {
    emit_statement_map(store, store.unit(leaves[i]), sinks[i]);
    for (const auto& [id, label] : sinks[i].nodes)
      ++owners[id];
  }

  std::vector<std::pair<std::string, std::string>> shared;
  std::set<std::string> shared_seen;
  for (const MapSink& sink : sinks) {
    for (const auto& [id, label] : sink.nodes)
      if (owners[id] > 1 && shared_seen.insert(id).second)
        shared.emplace_back(id, label);
  }
  render_nodes(out, "  ", shared);

  std::set<std::tuple<std::string, std::string, std::string>> edge_seen;
  std::vector<std::tuple<std::string, std::string, std::string>> edges;
  for (std::size_t i = 0; i < sinks.size(); ++i) {
    out += fmt::format("  subgraph cluster_{} {{\n    label=\"{}\";\n", i,
                       dot_escape(compact_iri(leaves[i], store.prefixes())));
    std::vector<std::pair<std::string, std::string>> own;
    for (const auto& [id, label] : sinks[i].nodes)
      if (owners[id] == 1)
        own.emplace_back(id, label);
    render_nodes(out, "    ", own);
    out += "  }\n";
    for (const auto& e : sinks[i].edges)
      if (edge_seen.insert(e).second)
        edges.push_back(e);
  }
  for (const auto& [from, label, to] : edges)
    out += fmt::format("  \"{}\" -> \"{}\" [label=\"{}\"];\n", dot_escape(from),
                       dot_escape(to), dot_escape(label));
  out += "}\n";
  return out;
}

} // namespace semunit
