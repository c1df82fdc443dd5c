#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "semunit/iri.hpp"

namespace semunit {

/// Entity position inside an axiom: a concrete IRI or a pattern variable.
struct PTerm {
  Iri iri;
  std::string var;

  static PTerm of(Iri i) { return {std::move(i), {}}; }
  static PTerm v(std::string name) { return {{}, std::move(name)}; }
  bool is_var() const { return !var.empty(); }

  auto operator<=>(const PTerm&) const = default;
  bool operator==(const PTerm&) const = default;
};

struct ClassExpr {
  enum class Kind {
    Named,
    ComplementOf,
    SomeValuesFrom,
    AllValuesFrom,
    ExactCardinality,
    OneOf,
    IntersectionOf,
  };

  Kind kind = Kind::Named;
  PTerm entity;                    // Named class
  PTerm property;                  // restrictions
  unsigned cardinality = 0;        // ExactCardinality
  std::vector<ClassExpr> children; // restriction filler / intersection parts
  std::vector<PTerm> individuals;  // OneOf

  static ClassExpr named(PTerm cls);
  static ClassExpr complement_of(ClassExpr inner);
  static ClassExpr some_values_from(PTerm property, ClassExpr filler);
  static ClassExpr all_values_from(PTerm property, ClassExpr filler);
  static ClassExpr exact_cardinality(PTerm property, unsigned n, ClassExpr filler);
  static ClassExpr one_of(std::vector<PTerm> individuals);
  static ClassExpr intersection_of(std::vector<ClassExpr> parts);

  std::strong_ordering operator<=>(const ClassExpr&) const;
  bool operator==(const ClassExpr&) const;
};

struct Axiom {
  enum class Kind {
    ClassAssertion,
    ObjectPropertyAssertion,
    NegativeObjectPropertyAssertion,
    DataPropertyAssertion,
    SubClassOf,
    EquivalentClasses,
    DisjointClasses,
    SameIndividual,
  };

  Kind kind = Kind::ClassAssertion;
  std::vector<ClassExpr> classes;
  PTerm property;
  PTerm a;
  PTerm b;
  std::optional<Literal> value;

  static Axiom class_assertion(ClassExpr cls, PTerm individual);
  static Axiom object_property_assertion(PTerm property, PTerm subject, PTerm object);
  static Axiom negative_object_property_assertion(PTerm property, PTerm subject,
                                                  PTerm object);
  static Axiom data_property_assertion(PTerm property, PTerm subject, Literal value);
  static Axiom subclass_of(ClassExpr sub, ClassExpr super);
  static Axiom equivalent_classes(ClassExpr x, ClassExpr y);
  static Axiom disjoint_classes(ClassExpr x, ClassExpr y);
  static Axiom same_individual(PTerm x, PTerm y);

  bool ground() const;

  std::strong_ordering operator<=>(const Axiom&) const;
  bool operator==(const Axiom&) const;
};

std::string to_functional(const ClassExpr& expr, const PrefixMap& prefixes);
std::string to_functional(const Axiom& axiom, const PrefixMap& prefixes);

/// One axiom per line, deduplicated, ordered by constructor then rendered
/// text.
std::string render_ontology(std::vector<Axiom> axioms, const PrefixMap& prefixes);

void sort_axioms(std::vector<Axiom>& axioms, const PrefixMap& prefixes);

}  // namespace semunit
