#pragma once

#include "semunit/iri.hpp"

#include <string>
#include <vector>

namespace semunit {

/// Ground atom of the rule layer. strong_neg marks classical negation;
/// "p" and "-p" are distinct predicates paired only by the consistency check.
struct Fact {
  std::string predicate;
  std::vector<Term> args;
  bool strong_neg = false;

  auto operator<=>(const Fact&) const = default;
  bool operator==(const Fact&) const = default;
};

enum class Modality { Necessary, Probable, Possible };

const char* modality_name(Modality m);

/// Reasoner output, kept apart from asserted content.
struct InferredFact {
  Fact fact;
  Modality modality = Modality::Necessary;
  bool defeasible = false;
  bool hypothesis = false;
  Gupri provenance; // unit that licensed the inference

  auto operator<=>(const InferredFact&) const = default;
  bool operator==(const InferredFact&) const = default;
};

} // namespace semunit
