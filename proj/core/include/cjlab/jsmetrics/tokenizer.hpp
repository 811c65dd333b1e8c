#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cjlab::jsmetrics {

enum class TokenKind {
  Operator,          // punctuators with semantic effect + reserved words
  Operand,           // identifiers, property names, true/false/null/undefined/this
  Comment,           // `//` and `/* */`, each a single token
  StringLiteral,     // quotes included
  NumericLiteral,
  TemplateLiteral,   // backticks and any `${}` interpolation text included
  RegexLiteral,      // delimiters and flags included
  PunctuationNoise,  // closing `)` `]` `}` and unclassifiable bytes
};

struct Token {
  TokenKind kind;
  std::string text;
  int line = 1;  // 1-based line of the token's first character
};

struct LexDiagnostic {
  int line = 1;
  std::string message;
};

/// Lexed form of one source file. `gaps[i]` is the whitespace skipped before
/// `tokens[i]` and `trailing` is whatever whitespace follows the last token,
/// so gaps and token texts interleaved reconstruct the input byte for byte.
struct TokenStream {
  std::vector<Token> tokens;
  std::vector<std::string> gaps;
  std::string trailing;
  std::vector<LexDiagnostic> diagnostics;

  std::string reconstruct() const;
  bool clean() const { return diagnostics.empty(); }
};

class TokenizeError : public std::runtime_error {
 public:
  TokenizeError(int line, const std::string& message);
  int line() const { return line_; }

 private:
  int line_;
};

/// Best-effort ECMAScript-level tokenizer.
///
/// Strings, template literals, regular-expression literals and both comment
/// styles each come out as a single token; identifiers, reserved words and
/// punctuators are split at the granularity the operator/operand counters
/// need. Unterminated constructs are kept in full (never truncated) and
/// reported through `diagnostics` with the offending line, so obfuscated or
/// partial scripts still produce usable counts.
TokenStream tokenize(std::string_view source);

/// As tokenize(), but the first diagnostic becomes a TokenizeError.
TokenStream tokenize_strict(std::string_view source);

}  // namespace cjlab::jsmetrics
