#pragma once

#include "semunit/query.hpp"
#include "semunit/store.hpp"

#include <string>

namespace semunit {

// Human-readable display text for a term: resource label, unit label, or
// literal lexical form.
std::string display_label(const Store& store, const Term& t);

// Fills the unit's label template (or a built-in one keyed on the unit's
// kinds). `{role}` placeholders take slot labels; `{¬}` becomes " not" on
// negated units. Directive units are framed as "Make: ...!".
std::string dynamic_label(const Store& store, const Gupri& unit);

// Question text from the schema's question templates, selected by the set of
// underspecified roles and the range shape. Supports `{role}`, `{role:class}`,
// `{role:min}` and `{role:max}` placeholders.
std::string dynamic_label(const Store& store, const QuestionUnit& question);

// Deterministic DOT digraph. Statement units draw their schema's map edges
// (falling back to raw data-graph triples); compound units draw one cluster
// per member with shared resources hoisted to the top level.
std::string dynamic_mind_map(const Store& store, const Gupri& unit);

} // namespace semunit
