#include "semunit/error.hpp"

namespace semunit {

const char* err_name(Err code) {
  switch (code) {
  case Err::InvalidIri: return "InvalidIri";
  case Err::InvalidLiteral: return "InvalidLiteral";
  case Err::DuplicateGupri: return "DuplicateGupri";
  case Err::UnknownUnit: return "UnknownUnit";
  case Err::UnknownResource: return "UnknownResource";
  case Err::UnknownSchema: return "UnknownSchema";
  case Err::UnknownProfile: return "UnknownProfile";
  case Err::PartitionViolation: return "PartitionViolation";
  case Err::CycleDetected: return "CycleDetected";
  case Err::UnitReferenced: return "UnitReferenced";
  case Err::MissingTargetClass: return "MissingTargetClass";
  case Err::DuplicateIdentification: return "DuplicateIdentification";
  case Err::SlotMismatch: return "SlotMismatch";
  case Err::SubjectCategoryConflict: return "SubjectCategoryConflict";
  case Err::CertaintyOutOfRange: return "CertaintyOutOfRange";
  case Err::NoStatements: return "NoStatements";
  case Err::NotEnoughMembers: return "NotEnoughMembers";
  case Err::Disconnected: return "Disconnected";
  case Err::MissingMandatory: return "MissingMandatory";
  case Err::InvalidInterval: return "InvalidInterval";
  case Err::InvalidCoordinates: return "InvalidCoordinates";
  case Err::InvalidPosition: return "InvalidPosition";
  case Err::NotAStatementUnit: return "NotAStatementUnit";
  case Err::NotSomeInstanceUnit: return "NotSomeInstanceUnit";
  case Err::InvalidSpec: return "InvalidSpec";
  case Err::IncompatibleModifiers: return "IncompatibleModifiers";
  case Err::ArityViolation: return "ArityViolation";
  case Err::IfClauseNotAssertional: return "IfClauseNotAssertional";
  case Err::ClauseTypeViolation: return "ClauseTypeViolation";
  case Err::MissingBoldness: return "MissingBoldness";
  case Err::UnknownRole: return "UnknownRole";
  case Err::UnsatisfiableRange: return "UnsatisfiableRange";
  case Err::PlanModeMismatch: return "PlanModeMismatch";
  case Err::UnboundVariable: return "UnboundVariable";
  case Err::NotNegated: return "NotNegated";
  case Err::UnsupportedNegation: return "UnsupportedNegation";
  case Err::RangeFormNotTranslatable: return "RangeFormNotTranslatable";
  case Err::TooManyVariables: return "TooManyVariables";
  case Err::NotStratifiable: return "NotStratifiable";
  case Err::Inconsistent: return "Inconsistent";
  case Err::PremiseMissing: return "PremiseMissing";
  case Err::ParseError: return "ParseError";
  case Err::BlankNodeRejected: return "BlankNodeRejected";
  case Err::MissingTemplate: return "MissingTemplate";
  case Err::ConfigError: return "ConfigError";
  case Err::IoError: return "IoError";
  }
  return "Unknown";
}

} // namespace semunit
