#pragma once

#include <optional>
#include <string>
#include <vector>

#include "semunit/discourse.hpp"
#include "semunit/error.hpp"
#include "semunit/logic.hpp"
#include "semunit/resource.hpp"
#include "semunit/store.hpp"

namespace semunit {

/// Propositional reading of one statement unit: identification and typing
/// feed binary "type" facts, single-object relations feed property facts with
/// the object standing in by its kind. Units without such a reading yield
/// nothing.
std::optional<Fact> unit_fact(const Store& store, const Gupri& unit);

/// Facts plus one default rule per prototypical relation unit, blocked by the
/// strong negation of its conclusion.
Program defaults_program(const Store& store);

/// Solves the defaults program and stores the derived facts in the inference
/// layer, keyed by the current content hash.
std::vector<InferredFact> apply_prototypical_defaults(Store& store);

struct MostConditionReport {
  long long with_property = 0;
  long long rest = 0;
  bool holds = false;
  bool no_evidence = false;
};

/// Closed-world majority check: known instances carrying the distinguishing
/// property must outnumber the known instances that do not.
MostConditionReport check_most_condition(const Store& store,
                                         const MostInstancesSemantics& semantics);

struct RuleProposal {
  Gupri argument;
  Boldness boldness = Boldness::Contingent;
  bool accepted = false;
  bool defeasible = false;
  std::string reason;
  Iri subject_class;
  Iri property;
  Iri object_class;
};

struct ArgueIssue {
  Gupri argument;
  Err code = Err::InvalidSpec;
  std::string message;
};

struct ArgueResult {
  std::vector<InferredFact> inferred;
  std::vector<RuleProposal> proposals;
  std::vector<ArgueIssue> issues;
};

/// Evaluates every argument unit: deductions conclude necessarily, inductions
/// propose rules vetted by their boldness, abductions conclude possibly and
/// are flagged as hypotheses. Problems are reported per argument, not thrown.
ArgueResult argue(Store& store);

}  // namespace semunit
