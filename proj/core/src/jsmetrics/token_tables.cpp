#include "cjlab/jsmetrics/token_tables.hpp"

#include <algorithm>
#include <array>

namespace cjlab::jsmetrics {

namespace {

constexpr std::array<std::string_view, 24> kReservedOperators = {
    "break",  "case",    "catch",  "const",    "continue", "delete",
    "do",     "else",    "finally", "for",     "function", "if",
    "in",     "instanceof", "let", "new",      "of",       "return",
    "switch", "throw",   "try",    "typeof",   "var",      "while"};

constexpr std::array<std::string_view, 5> kOperandKeywords = {
    "true", "false", "null", "undefined", "this"};

constexpr std::array<std::string_view, 9> kDecisionTokens = {
    "if", "case", "for", "while", "do", "catch", "?", "&&", "||"};

// Longest first within each length class; scanned in order.
constexpr std::array<std::string_view, 47> kPunctuators = {
    ">>>=",                                                          // 4
    "===", "!==", "**=", "<<=", ">>=", "&&=", "||=", "?\?=", "...",
    ">>>",                                                           // 3
    "=>", "==", "!=", "<=", ">=", "&&", "||", "??", "?.", "++",
    "--", "+=", "-=", "*=", "/=", "%=", "&=", "|=", "^=", "<<",
    ">>", "**",                                                      // 2
    "+", "-", "*", "/", "%", "=", "<", ">", "!", "?", ":", ";",
    ",", "."};                                                       // 1

// Grouping punctuators are handled by the tokenizer directly: ( [ { open a
// pair (operator), ) ] } close it (noise).

}  // namespace

bool is_reserved_operator(std::string_view word) {
  return std::find(kReservedOperators.begin(), kReservedOperators.end(),
                   word) != kReservedOperators.end();
}

bool is_operand_keyword(std::string_view word) {
  return std::find(kOperandKeywords.begin(), kOperandKeywords.end(), word) !=
         kOperandKeywords.end();
}

bool is_decision_token(std::string_view text) {
  return std::find(kDecisionTokens.begin(), kDecisionTokens.end(), text) !=
         kDecisionTokens.end();
}

std::string_view match_punctuator(std::string_view rest) {
  for (std::string_view p : kPunctuators) {
    if (rest.substr(0, p.size()) == p) {
      return p;
    }
  }
  if (!rest.empty()) {
    switch (rest.front()) {
      case '(': case ')': case '[': case ']': case '{': case '}':
      case '&': case '|': case '^': case '~':
        return rest.substr(0, 1);
      default:
        break;
    }
  }
  return {};
}

bool is_closing_punctuator(std::string_view text) {
  return text == ")" || text == "]" || text == "}";
}

}  // namespace cjlab::jsmetrics
