#include "semunit/unit.hpp"

#include "semunit/fact.hpp"
#include "semunit/vocab.hpp"

namespace semunit {

const char* modality_name(Modality m) {
  switch (m) {
  case Modality::Necessary: return "necessary";
  case Modality::Probable: return "probable";
  case Modality::Possible: return "possible";
  }
  return "necessary";
}

const char* framework_name(LogicFramework f) {
  switch (f) {
  case LogicFramework::OwlDl: return "OWL-DL";
  case LogicFramework::Fol: return "FOL";
  case LogicFramework::LogicProgram: return "LogicProgram";
  case LogicFramework::None: return "None";
  }
  return "None";
}

std::optional<LogicFramework> framework_from_name(const std::string& name) {
  for (LogicFramework f : {LogicFramework::OwlDl, LogicFramework::Fol,
                           LogicFramework::LogicProgram, LogicFramework::None}) {
    if (name == framework_name(f))
      return f;
  }
  return std::nullopt;
}

const char* category_name(StatementCategory c) {
  switch (c) {
  case StatementCategory::Assertional: return "assertional";
  case StatementCategory::Contingent: return "contingent";
  case StatementCategory::Prototypical: return "prototypical";
  case StatementCategory::Universal: return "universal";
  case StatementCategory::Lexical: return "lexical";
  }
  return "";
}

Iri category_class(StatementCategory c) {
  switch (c) {
  case StatementCategory::Assertional: return vocab::assertional_statement_unit;
  case StatementCategory::Contingent: return vocab::contingent_statement_unit;
  case StatementCategory::Prototypical: return vocab::prototypical_statement_unit;
  case StatementCategory::Universal: return vocab::universal_statement_unit;
  case StatementCategory::Lexical: return vocab::lexical_statement_unit;
  }
  return vocab::statement_unit;
}

std::optional<StatementCategory> category_from_class(const Iri& iri) {
  for (StatementCategory c :
       {StatementCategory::Assertional, StatementCategory::Contingent,
        StatementCategory::Prototypical, StatementCategory::Universal,
        StatementCategory::Lexical}) {
    if (category_class(c) == iri)
      return c;
  }
  return std::nullopt;
}

bool SemanticUnit::is_negated() const { return has_kind(vocab::negation_unit); }

std::optional<StatementCategory> SemanticUnit::category() const {
  for (const Iri& k : kinds) {
    if (auto c = category_from_class(k))
      return c;
  }
  return std::nullopt;
}

} // namespace semunit
