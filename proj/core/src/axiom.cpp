#include "semunit/axiom.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <set>

namespace semunit {

std::strong_ordering ClassExpr::operator<=>(const ClassExpr& o) const {
  if (auto c = kind <=> o.kind; c != 0) return c;
  if (auto c = entity <=> o.entity; c != 0) return c;
  if (auto c = property <=> o.property; c != 0) return c;
  if (auto c = cardinality <=> o.cardinality; c != 0) return c;
  if (auto c = std::lexicographical_compare_three_way(
          children.begin(), children.end(), o.children.begin(), o.children.end());
      c != 0)
    return c;
  return std::lexicographical_compare_three_way(individuals.begin(), individuals.end(),
                                                o.individuals.begin(), o.individuals.end());
}

bool ClassExpr::operator==(const ClassExpr& o) const { return (*this <=> o) == 0; }

std::strong_ordering Axiom::operator<=>(const Axiom& o) const {
  if (auto c = kind <=> o.kind; c != 0) return c;
  if (auto c = std::lexicographical_compare_three_way(classes.begin(), classes.end(),
                                                      o.classes.begin(), o.classes.end());
      c != 0)
    return c;
  if (auto c = property <=> o.property; c != 0) return c;
  if (auto c = a <=> o.a; c != 0) return c;
  if (auto c = b <=> o.b; c != 0) return c;
  return value <=> o.value;
}

bool Axiom::operator==(const Axiom& o) const { return (*this <=> o) == 0; }

ClassExpr ClassExpr::named(PTerm cls) {
  ClassExpr e;
  e.kind = Kind::Named;
  e.entity = std::move(cls);
  return e;
}

ClassExpr ClassExpr::complement_of(ClassExpr inner) {
  ClassExpr e;
  e.kind = Kind::ComplementOf;
  e.children.push_back(std::move(inner));
  return e;
}

ClassExpr ClassExpr::some_values_from(PTerm property, ClassExpr filler) {
  ClassExpr e;
  e.kind = Kind::SomeValuesFrom;
  e.property = std::move(property);
  e.children.push_back(std::move(filler));
  return e;
}

ClassExpr ClassExpr::all_values_from(PTerm property, ClassExpr filler) {
  ClassExpr e;
  e.kind = Kind::AllValuesFrom;
  e.property = std::move(property);
  e.children.push_back(std::move(filler));
  return e;
}

ClassExpr ClassExpr::exact_cardinality(PTerm property, unsigned n, ClassExpr filler) {
  ClassExpr e;
  e.kind = Kind::ExactCardinality;
  e.property = std::move(property);
  e.cardinality = n;
  e.children.push_back(std::move(filler));
  return e;
}

ClassExpr ClassExpr::one_of(std::vector<PTerm> individuals) {
  ClassExpr e;
  e.kind = Kind::OneOf;
  e.individuals = std::move(individuals);
  return e;
}

ClassExpr ClassExpr::intersection_of(std::vector<ClassExpr> parts) {
  ClassExpr e;
  e.kind = Kind::IntersectionOf;
  e.children = std::move(parts);
  return e;
}

Axiom Axiom::class_assertion(ClassExpr cls, PTerm individual) {
  Axiom ax;
  ax.kind = Kind::ClassAssertion;
  ax.classes.push_back(std::move(cls));
  ax.a = std::move(individual);
  return ax;
}

Axiom Axiom::object_property_assertion(PTerm property, PTerm subject, PTerm object) {
  Axiom ax;
  ax.kind = Kind::ObjectPropertyAssertion;
  ax.property = std::move(property);
  ax.a = std::move(subject);
  ax.b = std::move(object);
  return ax;
}

Axiom Axiom::negative_object_property_assertion(PTerm property, PTerm subject,
                                                PTerm object) {
  Axiom ax = object_property_assertion(std::move(property), std::move(subject),
                                       std::move(object));
  ax.kind = Kind::NegativeObjectPropertyAssertion;
  return ax;
}

Axiom Axiom::data_property_assertion(PTerm property, PTerm subject, Literal value) {
  Axiom ax;
  ax.kind = Kind::DataPropertyAssertion;
  ax.property = std::move(property);
  ax.a = std::move(subject);
  ax.value = std::move(value);
  return ax;
}

Axiom Axiom::subclass_of(ClassExpr sub, ClassExpr super) {
  Axiom ax;
  ax.kind = Kind::SubClassOf;
  ax.classes.push_back(std::move(sub));
  ax.classes.push_back(std::move(super));
  return ax;
}

Axiom Axiom::equivalent_classes(ClassExpr x, ClassExpr y) {
  Axiom ax = subclass_of(std::move(x), std::move(y));
  ax.kind = Kind::EquivalentClasses;
  return ax;
}

Axiom Axiom::disjoint_classes(ClassExpr x, ClassExpr y) {
  Axiom ax = subclass_of(std::move(x), std::move(y));
  ax.kind = Kind::DisjointClasses;
  return ax;
}

Axiom Axiom::same_individual(PTerm x, PTerm y) {
  Axiom ax;
  ax.kind = Kind::SameIndividual;
  ax.a = std::move(x);
  ax.b = std::move(y);
  return ax;
}

namespace {

bool expr_ground(const ClassExpr& e) {
  if (e.entity.is_var() || e.property.is_var()) return false;
  for (const PTerm& p : e.individuals) {
    if (p.is_var()) return false;
  }
  return std::all_of(e.children.begin(), e.children.end(), expr_ground);
}

std::string pterm_text(const PTerm& p, const PrefixMap& prefixes) {
  if (p.is_var()) return "?" + p.var;
  return compact_iri(p.iri, prefixes);
}

std::string literal_text(const Literal& lit) {
  std::string escaped;
  for (char c : lit.lexical) {
    switch (c) {
      case '\\': escaped += "\\\\"; break;
      case '"': escaped += "\\\""; break;
      case '\n': escaped += "\\n"; break;
      case '\r': escaped += "\\r"; break;
      case '\t': escaped += "\\t"; break;
      default: escaped += c;
    }
  }
  if (!lit.language.empty()) {
    return fmt::format("\"{}\"@{}", escaped, lit.language);
  }
  if (lit.datatype == Datatype::String) {
    return fmt::format("\"{}\"", escaped);
  }
  return fmt::format("\"{}\"^^xsd:{}", escaped, datatype_name(lit.datatype));
}

int kind_rank(Axiom::Kind k) { return static_cast<int>(k); }

}  // namespace

bool Axiom::ground() const {
  if (property.is_var() || a.is_var() || b.is_var()) return false;
  return std::all_of(classes.begin(), classes.end(), expr_ground);
}

std::string to_functional(const ClassExpr& expr, const PrefixMap& prefixes) {
  switch (expr.kind) {
    case ClassExpr::Kind::Named:
      return pterm_text(expr.entity, prefixes);
    case ClassExpr::Kind::ComplementOf:
      return fmt::format("ObjectComplementOf({})",
                         to_functional(expr.children.front(), prefixes));
    case ClassExpr::Kind::SomeValuesFrom:
      return fmt::format("ObjectSomeValuesFrom({} {})",
                         pterm_text(expr.property, prefixes),
                         to_functional(expr.children.front(), prefixes));
    case ClassExpr::Kind::AllValuesFrom:
      return fmt::format("ObjectAllValuesFrom({} {})",
                         pterm_text(expr.property, prefixes),
                         to_functional(expr.children.front(), prefixes));
    case ClassExpr::Kind::ExactCardinality:
      return fmt::format("ObjectExactCardinality({} {} {})", expr.cardinality,
                         pterm_text(expr.property, prefixes),
                         to_functional(expr.children.front(), prefixes));
    case ClassExpr::Kind::OneOf: {
      std::string parts;
      for (const PTerm& p : expr.individuals) {
        if (!parts.empty()) parts += ' ';
        parts += pterm_text(p, prefixes);
      }
      return fmt::format("ObjectOneOf({})", parts);
    }
    case ClassExpr::Kind::IntersectionOf: {
      std::string parts;
      for (const ClassExpr& c : expr.children) {
        if (!parts.empty()) parts += ' ';
        parts += to_functional(c, prefixes);
      }
      return fmt::format("ObjectIntersectionOf({})", parts);
    }
  }
  return {};
}

std::string to_functional(const Axiom& axiom, const PrefixMap& prefixes) {
  switch (axiom.kind) {
    case Axiom::Kind::ClassAssertion:
      return fmt::format("ClassAssertion({} {})",
                         to_functional(axiom.classes.front(), prefixes),
                         pterm_text(axiom.a, prefixes));
    case Axiom::Kind::ObjectPropertyAssertion:
      return fmt::format("ObjectPropertyAssertion({} {} {})",
                         pterm_text(axiom.property, prefixes),
                         pterm_text(axiom.a, prefixes),
                         pterm_text(axiom.b, prefixes));
    case Axiom::Kind::NegativeObjectPropertyAssertion:
      return fmt::format("NegativeObjectPropertyAssertion({} {} {})",
                         pterm_text(axiom.property, prefixes),
                         pterm_text(axiom.a, prefixes),
                         pterm_text(axiom.b, prefixes));
    case Axiom::Kind::DataPropertyAssertion:
      return fmt::format("DataPropertyAssertion({} {} {})",
                         pterm_text(axiom.property, prefixes),
                         pterm_text(axiom.a, prefixes), literal_text(*axiom.value));
    case Axiom::Kind::SubClassOf:
      return fmt::format("SubClassOf({} {})",
                         to_functional(axiom.classes[0], prefixes),
                         to_functional(axiom.classes[1], prefixes));
    case Axiom::Kind::EquivalentClasses:
      return fmt::format("EquivalentClasses({} {})",
                         to_functional(axiom.classes[0], prefixes),
                         to_functional(axiom.classes[1], prefixes));
    case Axiom::Kind::DisjointClasses:
      return fmt::format("DisjointClasses({} {})",
                         to_functional(axiom.classes[0], prefixes),
                         to_functional(axiom.classes[1], prefixes));
    case Axiom::Kind::SameIndividual:
      return fmt::format("SameIndividual({} {})", pterm_text(axiom.a, prefixes),
                         pterm_text(axiom.b, prefixes));
  }
  return {};
}

void sort_axioms(std::vector<Axiom>& axioms, const PrefixMap& prefixes) {
  std::stable_sort(axioms.begin(), axioms.end(),
                   [&](const Axiom& x, const Axiom& y) {
                     const int rx = kind_rank(x.kind);
                     const int ry = kind_rank(y.kind);
                     if (rx != ry) return rx < ry;
                     return to_functional(x, prefixes) < to_functional(y, prefixes);
                   });
  axioms.erase(std::unique(axioms.begin(), axioms.end()), axioms.end());
}

std::string render_ontology(std::vector<Axiom> axioms, const PrefixMap& prefixes) {
  sort_axioms(axioms, prefixes);
  std::string out;
  for (const Axiom& ax : axioms) {
    out += to_functional(ax, prefixes);
    out += '\n';
  }
  return out;
}

}  // namespace semunit
