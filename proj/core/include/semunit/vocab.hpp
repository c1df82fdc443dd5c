#pragma once

#include "semunit/iri.hpp"

// Fixed vocabulary. The semunit namespace holds the unit-model classes and
// properties; the rest are the usual RDF/RDFS/OWL terms.
namespace semunit::vocab {

inline const std::string SEMUNIT_NS = "https://w3id.org/semunit/";
inline const std::string RDF_NS = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
inline const std::string RDFS_NS = "http://www.w3.org/2000/01/rdf-schema#";
inline const std::string OWL_NS = "http://www.w3.org/2002/07/owl#";
inline const std::string XSD_NS = "http://www.w3.org/2001/XMLSchema#";

inline Iri su(const std::string& local) { return Iri(SEMUNIT_NS + local); }

inline const Iri rdf_type{RDF_NS + "type"};
inline const Iri rdfs_label{RDFS_NS + "label"};
inline const Iri rdfs_subclass_of{RDFS_NS + "subClassOf"};
inline const Iri owl_named_individual{OWL_NS + "NamedIndividual"};
inline const Iri owl_qualified_cardinality{OWL_NS + "qualifiedCardinality"};

// resource markers
inline const Iri some_instance_resource = su("some-instance-resource");
inline const Iri most_instances_resource = su("most-instances-resource");
inline const Iri every_instance_resource = su("every-instance-resource");
inline const Iri all_instances_resource = su("all-instances-resource");
inline const Iri collection_class = su("collection");

// statement unit classes
inline const Iri statement_unit = su("statement-unit");
inline const Iri assertional_statement_unit = su("assertional-statement-unit");
inline const Iri contingent_statement_unit = su("contingent-statement-unit");
inline const Iri prototypical_statement_unit = su("prototypical-statement-unit");
inline const Iri universal_statement_unit = su("universal-statement-unit");
inline const Iri lexical_statement_unit = su("lexical-statement-unit");
inline const Iri complex_statement_unit = su("complex-statement-unit");

// identification unit classes
inline const Iri named_individual_identification_unit = su("named-individual-identification-unit");
inline const Iri some_instance_identification_unit = su("some-instance-identification-unit");
inline const Iri most_instances_identification_unit = su("most-instances-identification-unit");
inline const Iri every_instance_identification_unit = su("every-instance-identification-unit");
inline const Iri all_instances_identification_unit = su("all-instances-identification-unit");
inline const Iri class_identification_unit = su("class-identification-unit");
inline const Iri property_identification_unit = su("property-identification-unit");

// modifier unit classes
inline const Iri negation_unit = su("negation-unit");
inline const Iri cardinality_restriction_unit = su("cardinality-restriction-unit");
inline const Iri boolean_unit = su("boolean-unit");
inline const Iri boolean_and_unit = su("boolean-and-unit");
inline const Iri boolean_or_unit = su("boolean-or-unit");
inline const Iri boolean_xor_unit = su("boolean-xor-unit");
inline const Iri boolean_not_unit = su("boolean-not-unit");
inline const Iri boolean_equal_unit = su("boolean-equal-unit");

// question and directive unit classes
inline const Iri question_unit = su("question-unit");
inline const Iri directive_unit = su("directive-unit");
inline const Iri assertional_directive_unit = su("assertional-directive-unit");
inline const Iri contingent_directive_unit = su("contingent-directive-unit");
inline const Iri prototypical_directive_unit = su("prototypical-directive-unit");
inline const Iri universal_directive_unit = su("universal-directive-unit");

// discourse unit classes
inline const Iri epistemic_unit = su("epistemic-unit");
inline const Iri positive_epistemic_unit = su("positive-epistemic-unit");
inline const Iri negative_epistemic_unit = su("negative-epistemic-unit");
inline const Iri agnostic_epistemic_unit = su("agnostic-epistemic-unit");
inline const Iri referential_epistemic_unit = su("referential-epistemic-unit");
inline const Iri conditional_unit = su("conditional-unit");
inline const Iri directive_conditional_unit = su("directive-conditional-unit");
inline const Iri logical_argument_unit = su("logical-argument-unit");
inline const Iri deduction_unit = su("deduction-unit");
inline const Iri induction_unit = su("induction-unit");
inline const Iri abduction_unit = su("abduction-unit");
inline const Iri boldness_universal = su("boldness-universal");
inline const Iri boldness_prototypical = su("boldness-prototypical");
inline const Iri boldness_contingent = su("boldness-contingent");
inline const Iri hypothesis_unit = su("hypothesis-unit");

// compound unit classes
inline const Iri compound_unit = su("compound-unit");
inline const Iri item_unit = su("item-unit");
inline const Iri assertional_item_unit = su("assertional-item-unit");
inline const Iri contingent_item_unit = su("contingent-item-unit");
inline const Iri prototypical_item_unit = su("prototypical-item-unit");
inline const Iri universal_item_unit = su("universal-item-unit");
inline const Iri item_group_unit = su("item-group-unit");
inline const Iri universal_item_group_unit = su("universal-item-group-unit");
inline const Iri sufficient_universal_item_group_unit = su("sufficient-universal-item-group-unit");
inline const Iri class_profile_unit = su("class-profile-unit");
inline const Iri standard_information_unit = su("standard-information-unit");
inline const Iri time_indexed_unit = su("time-indexed-unit");
inline const Iri geo_indexed_unit = su("geo-indexed-unit");
inline const Iri time_ordered_unit = su("time-ordered-unit");
inline const Iri time_index_statement_unit = su("time-index-statement-unit");
inline const Iri geo_index_statement_unit = su("geo-index-statement-unit");
inline const Iri time_order_statement_unit = su("time-order-statement-unit");
inline const Iri type_statement_unit = su("type-statement-unit");
inline const Iri subclass_of_statement_unit = su("subclass-of-statement-unit");
inline const Iri equivalent_class_statement_unit = su("equivalent-class-statement-unit");
inline const Iri disjoint_class_statement_unit = su("disjoint-class-statement-unit");
inline const Iri same_individual_statement_unit = su("same-individual-statement-unit");

// unit-layer properties
inline const Iri has_semantic_unit_subject = su("has-semantic-unit-subject");
inline const Iri has_associated_semantic_unit = su("has-associated-semantic-unit");
inline const Iri has_associated_standard_information_unit = su("has-associated-standard-information-unit");
inline const Iri follows_profile = su("follows-profile");
inline const Iri has_operand = su("has-operand");
inline const Iri has_case_clause = su("has-case-clause");
inline const Iri has_rule_clause = su("has-rule-clause");
inline const Iri has_result_clause = su("has-result-clause");
inline const Iri describes = su("describes");

// metadata properties
inline const Iri meta_schema = su("has-schema");
inline const Iri meta_author = su("has-author");
inline const Iri meta_logic_framework = su("has-logic-framework");
inline const Iri meta_certainty = su("has-certainty");
inline const Iri meta_source = su("has-source");
inline const Iri meta_extraction_method = su("has-extraction-method");
inline const Iri meta_creator = su("has-creator");
inline const Iri meta_created_at = su("created-at");
inline const Iri meta_license = su("has-license");
inline const Iri meta_version = su("has-version");

// data-layer properties owned by the unit model
inline const Iri member_of = su("member-of");
inline const Iri has_member = su("has-member");
inline const Iri is_if_of_then = su("is-if-of-then");
inline const Iri asserts = su("asserts");
inline const Iri negates = su("negates");
inline const Iri agnostic_about = su("agnostic-about");
inline const Iri cardinality_min = su("cardinality-min");
inline const Iri cardinality_max = su("cardinality-max");
inline const Iri cardinality_value_unit = su("cardinality-value-unit");
inline const Iri at_time = su("at-time");
inline const Iri interval_start = su("interval-start");
inline const Iri interval_end = su("interval-end");
inline const Iri located_in = su("located-in");
inline const Iri latitude = su("latitude");
inline const Iri longitude = su("longitude");
inline const Iri in_sequence = su("in-sequence");
inline const Iri at_position = su("at-position");
inline const Iri from_ontology = su("from-ontology");
inline const Iri ontology_version = su("ontology-version");
inline const Iri has_identifier = su("has-identifier");

/// Default prefix map shipped with every fresh store.
PrefixMap default_prefixes();

/// True when the IRI is one of the unit classes above.
bool is_unit_class(const Iri& iri);

/// True for association role properties written to the units layer.
bool is_association_role(const Iri& iri);

} // namespace semunit::vocab
