#include "semunit/vocab.hpp"

#include <set>

namespace semunit::vocab {

PrefixMap default_prefixes() {
  return {
      {"rdf", RDF_NS},
      {"rdfs", RDFS_NS},
      {"owl", OWL_NS},
      {"xsd", XSD_NS},
      {"semunit", SEMUNIT_NS},
  };
}

bool is_unit_class(const Iri& iri) {
  static const std::set<Iri> classes = {
      statement_unit,
      assertional_statement_unit,
      contingent_statement_unit,
      prototypical_statement_unit,
      universal_statement_unit,
      lexical_statement_unit,
      complex_statement_unit,
      named_individual_identification_unit,
      some_instance_identification_unit,
      most_instances_identification_unit,
      every_instance_identification_unit,
      all_instances_identification_unit,
      class_identification_unit,
      property_identification_unit,
      negation_unit,
      cardinality_restriction_unit,
      boolean_unit,
      boolean_and_unit,
      boolean_or_unit,
      boolean_xor_unit,
      boolean_not_unit,
      boolean_equal_unit,
      question_unit,
      directive_unit,
      assertional_directive_unit,
      contingent_directive_unit,
      prototypical_directive_unit,
      universal_directive_unit,
      epistemic_unit,
      positive_epistemic_unit,
      negative_epistemic_unit,
      agnostic_epistemic_unit,
      referential_epistemic_unit,
      conditional_unit,
      directive_conditional_unit,
      logical_argument_unit,
      deduction_unit,
      induction_unit,
      abduction_unit,
      boldness_universal,
      boldness_prototypical,
      boldness_contingent,
      hypothesis_unit,
      compound_unit,
      item_unit,
      assertional_item_unit,
      contingent_item_unit,
      prototypical_item_unit,
      universal_item_unit,
      item_group_unit,
      universal_item_group_unit,
      sufficient_universal_item_group_unit,
      class_profile_unit,
      standard_information_unit,
      time_indexed_unit,
      geo_indexed_unit,
      time_ordered_unit,
      time_index_statement_unit,
      geo_index_statement_unit,
      time_order_statement_unit,
      type_statement_unit,
      subclass_of_statement_unit,
      equivalent_class_statement_unit,
      disjoint_class_statement_unit,
      same_individual_statement_unit,
  };
  return classes.count(iri) != 0;
}

bool is_association_role(const Iri& iri) {
  static const std::set<Iri> roles = {
      has_associated_semantic_unit,
      has_operand,
      has_case_clause,
      has_rule_clause,
      has_result_clause,
  };
  return roles.count(iri) != 0;
}

} // namespace semunit::vocab
