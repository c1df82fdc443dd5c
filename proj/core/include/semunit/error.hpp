#pragma once

#include <stdexcept>
#include <string>

namespace semunit {

enum class Err {
  InvalidIri,
  InvalidLiteral,
  DuplicateGupri,
  UnknownUnit,
  UnknownResource,
  UnknownSchema,
  UnknownProfile,
  PartitionViolation,
  CycleDetected,
  UnitReferenced,
  MissingTargetClass,
  DuplicateIdentification,
  SlotMismatch,
  SubjectCategoryConflict,
  CertaintyOutOfRange,
  NoStatements,
  NotEnoughMembers,
  Disconnected,
  MissingMandatory,
  InvalidInterval,
  InvalidCoordinates,
  InvalidPosition,
  NotAStatementUnit,
  NotSomeInstanceUnit,
  InvalidSpec,
  IncompatibleModifiers,
  ArityViolation,
  IfClauseNotAssertional,
  ClauseTypeViolation,
  MissingBoldness,
  UnknownRole,
  UnsatisfiableRange,
  PlanModeMismatch,
  UnboundVariable,
  NotNegated,
  UnsupportedNegation,
  RangeFormNotTranslatable,
  TooManyVariables,
  NotStratifiable,
  Inconsistent,
  PremiseMissing,
  ParseError,
  BlankNodeRejected,
  MissingTemplate,
  ConfigError,
  IoError,
};

const char* err_name(Err code);

/// All recoverable failures surface as Error; code() carries the machine-readable kind.
class Error : public std::runtime_error {
public:
  Error(Err code, std::string message)
      : std::runtime_error(std::move(message)), code_(code) {}

  Err code() const noexcept { return code_; }

private:
  Err code_;
};

[[noreturn]] inline void raise(Err code, std::string message) {
  throw Error(code, std::move(message));
}

} // namespace semunit
