#pragma once

#include <string_view>

// The fixed operator/operand classification table. Every counting rule in
// this module keys off these predicates; changing them invalidates the
// hand-computed oracle fixtures in the test suite.

namespace cjlab::jsmetrics {

// Reserved words counted as operators:
// var let const if else for while do switch case return function new typeof
// delete in of instanceof try catch finally throw break continue
bool is_reserved_operator(std::string_view word);

// Keyword-like words counted as operands: true false null undefined this
bool is_operand_keyword(std::string_view word);

// Decision points for cyclomatic counting:
// if case for while do catch ? && ||
bool is_decision_token(std::string_view text);

// Longest punctuator match at the head of `rest`; empty view if none.
std::string_view match_punctuator(std::string_view rest);

// `)` `]` `}` — the closing half of a grouping pair, counted once per pair.
bool is_closing_punctuator(std::string_view text);

}  // namespace cjlab::jsmetrics
