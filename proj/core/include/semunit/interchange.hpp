#pragma once

#include "semunit/query.hpp"
#include "semunit/store.hpp"

#include <string>

namespace semunit {

// Canonical JSON serialization of a complete store: prefixes, resources,
// schemas, profiles, unit records with their data graphs, free units-layer
// triples, and the inference layer. Saving is deterministic; saving a loaded
// document reproduces it byte for byte.
std::string save_store(const Store& store);

// Accepts the canonical form and an authoring form: resources may carry
// "identify": true to mint their identification units, and units may give
// "schema" + "subject" + "slots" instead of explicit triples.
Store load_store(const std::string& json_text);

// Atomic file variants (write goes through a temp file and rename).
void save_store_file(const Store& store, const std::string& path);
Store load_store_file(const std::string& path);

// Merge the "schemas" and "profiles" arrays of a template document into an
// existing store. Used for template files listed in the CLI config.
void load_templates(Store& store, const std::string& json_text);
void load_templates_file(Store& store, const std::string& path);

// Question documents: {"question": {...}} for a single question unit or
// {"op": "AND", "operands": [...]} for a boolean tree.
QueryExpr read_question(const std::string& json_text);
std::string write_question(const QueryExpr& expr);
QueryExpr read_question_file(const std::string& path);

} // namespace semunit
