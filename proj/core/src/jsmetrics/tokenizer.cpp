#include "cjlab/jsmetrics/tokenizer.hpp"

#include <cctype>

#include "cjlab/jsmetrics/token_tables.hpp"

namespace cjlab::jsmetrics {

namespace {

bool is_ws(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' ||
         c == '\f';
}

bool is_ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '$' ||
         c == '#' || static_cast<unsigned char>(c) >= 0x80;
}

bool is_ident_part(char c) {
  return is_ident_start(c) || std::isdigit(static_cast<unsigned char>(c));
}

bool is_digit(char c) { return c >= '0' && c <= '9'; }

bool is_hex_digit(char c) {
  return is_digit(c) || (c >= 'a' && c <= 'f') || (c >= 'A' && c <= 'F');
}

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  TokenStream run() {
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (is_ws(c)) {
        gap_.push_back(c);
        if (c == '\n') ++line_;
        ++pos_;
        continue;
      }
      scan_token();
    }
    out_.trailing = std::move(gap_);
    return std::move(out_);
  }

 private:
  char at(std::size_t i) const { return i < src_.size() ? src_[i] : '\0'; }

  void emit(TokenKind kind, std::size_t begin, std::size_t end, int line) {
    out_.gaps.push_back(std::move(gap_));
    gap_.clear();
    out_.tokens.push_back(
        Token{kind, std::string(src_.substr(begin, end - begin)), line});
  }

  void diagnose(int line, std::string message) {
    out_.diagnostics.push_back(LexDiagnostic{line, std::move(message)});
  }

  // Regex literals are only legal where an expression may start. The last
  // significant token decides: operators (except postfix ++/--) open that
  // position, operands/literals/closing pairs do not.
  bool regex_allowed() const {
    for (auto it = out_.tokens.rbegin(); it != out_.tokens.rend(); ++it) {
      if (it->kind == TokenKind::Comment) continue;
      if (it->kind != TokenKind::Operator) return false;
      return it->text != "++" && it->text != "--";
    }
    return true;  // start of input
  }

  void scan_token() {
    const std::size_t start = pos_;
    const int line = line_;
    const char c = src_[pos_];

    if (c == '/' && at(pos_ + 1) == '/') {
      while (pos_ < src_.size() && src_[pos_] != '\n') ++pos_;
      emit(TokenKind::Comment, start, pos_, line);
      return;
    }
    if (c == '/' && at(pos_ + 1) == '*') {
      pos_ += 2;
      bool closed = false;
      while (pos_ < src_.size()) {
        if (src_[pos_] == '*' && at(pos_ + 1) == '/') {
          pos_ += 2;
          closed = true;
          break;
        }
        if (src_[pos_] == '\n') ++line_;
        ++pos_;
      }
      if (!closed) diagnose(line, "unterminated block comment");
      emit(TokenKind::Comment, start, pos_, line);
      return;
    }
    if (c == '"' || c == '\'') {
      scan_string(c, start, line);
      return;
    }
    if (c == '`') {
      scan_template(start, line);
      return;
    }
    if (is_digit(c) || (c == '.' && is_digit(at(pos_ + 1)))) {
      scan_number(start, line);
      return;
    }
    if (is_ident_start(c)) {
      ++pos_;
      while (pos_ < src_.size() && is_ident_part(src_[pos_])) ++pos_;
      std::string_view word = src_.substr(start, pos_ - start);
      TokenKind kind = is_reserved_operator(word) ? TokenKind::Operator
                                                  : TokenKind::Operand;
      emit(kind, start, pos_, line);
      return;
    }
    if (c == '/' && regex_allowed()) {
      scan_regex(start, line);
      return;
    }

    std::string_view p = match_punctuator(src_.substr(pos_));
    if (!p.empty()) {
      pos_ += p.size();
      TokenKind kind = is_closing_punctuator(p) ? TokenKind::PunctuationNoise
                                                : TokenKind::Operator;
      emit(kind, start, pos_, line);
      return;
    }

    // Anything else (stray control bytes, @, \) keeps the round-trip whole.
    ++pos_;
    emit(TokenKind::PunctuationNoise, start, pos_, line);
  }

  void scan_string(char quote, std::size_t start, int line) {
    ++pos_;
    bool closed = false;
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (c == '\\' && pos_ + 1 < src_.size()) {
        if (src_[pos_ + 1] == '\n') ++line_;  // line continuation
        pos_ += 2;
        continue;
      }
      if (c == quote) {
        ++pos_;
        closed = true;
        break;
      }
      if (c == '\n') break;  // strings do not span raw newlines
      ++pos_;
    }
    if (!closed) diagnose(line, "unterminated string literal");
    emit(TokenKind::StringLiteral, start, pos_, line);
  }

  void scan_template(std::size_t start, int line) {
    ++pos_;
    int interp_depth = 0;
    bool closed = false;
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (c == '\\' && pos_ + 1 < src_.size()) {
        if (src_[pos_ + 1] == '\n') ++line_;
        pos_ += 2;
        continue;
      }
      if (c == '\n') ++line_;
      if (c == '$' && at(pos_ + 1) == '{') {
        ++interp_depth;
        pos_ += 2;
        continue;
      }
      if (c == '}' && interp_depth > 0) {
        --interp_depth;
        ++pos_;
        continue;
      }
      if (c == '`' && interp_depth == 0) {
        ++pos_;
        closed = true;
        break;
      }
      ++pos_;
    }
    if (!closed) diagnose(line, "unterminated template literal");
    emit(TokenKind::TemplateLiteral, start, pos_, line);
  }

  void scan_number(std::size_t start, int line) {
    if (src_[pos_] == '0' &&
        (at(pos_ + 1) == 'x' || at(pos_ + 1) == 'X' || at(pos_ + 1) == 'b' ||
         at(pos_ + 1) == 'B' || at(pos_ + 1) == 'o' || at(pos_ + 1) == 'O')) {
      pos_ += 2;
      while (pos_ < src_.size() &&
             (is_hex_digit(src_[pos_]) || src_[pos_] == '_')) {
        ++pos_;
      }
    } else {
      while (pos_ < src_.size() && (is_digit(src_[pos_]) || src_[pos_] == '_')) {
        ++pos_;
      }
      if (at(pos_) == '.' ) {
        ++pos_;
        while (pos_ < src_.size() &&
               (is_digit(src_[pos_]) || src_[pos_] == '_')) {
          ++pos_;
        }
      }
      if (at(pos_) == 'e' || at(pos_) == 'E') {
        std::size_t mark = pos_ + 1;
        if (at(mark) == '+' || at(mark) == '-') ++mark;
        if (is_digit(at(mark))) {
          pos_ = mark;
          while (pos_ < src_.size() && is_digit(src_[pos_])) ++pos_;
        }
      }
    }
    if (at(pos_) == 'n') ++pos_;  // BigInt suffix
    emit(TokenKind::NumericLiteral, start, pos_, line);
  }

  void scan_regex(std::size_t start, int line) {
    ++pos_;
    bool in_class = false;
    bool closed = false;
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (c == '\\' && pos_ + 1 < src_.size()) {
        pos_ += 2;
        continue;
      }
      if (c == '\n') break;
      if (c == '[') in_class = true;
      else if (c == ']') in_class = false;
      else if (c == '/' && !in_class) {
        ++pos_;
        closed = true;
        break;
      }
      ++pos_;
    }
    if (!closed) {
      diagnose(line, "unterminated regular expression literal");
    } else {
      while (pos_ < src_.size() &&
             std::isalpha(static_cast<unsigned char>(src_[pos_]))) {
        ++pos_;  // flags
      }
    }
    emit(TokenKind::RegexLiteral, start, pos_, line);
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  std::string gap_;
  TokenStream out_;
};

}  // namespace

std::string TokenStream::reconstruct() const {
  std::string s;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    s += gaps[i];
    s += tokens[i].text;
  }
  s += trailing;
  return s;
}

TokenizeError::TokenizeError(int line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message),
      line_(line) {}

TokenStream tokenize(std::string_view source) { return Lexer(source).run(); }

TokenStream tokenize_strict(std::string_view source) {
  TokenStream stream = tokenize(source);
  if (!stream.diagnostics.empty()) {
    throw TokenizeError(stream.diagnostics.front().line,
                        stream.diagnostics.front().message);
  }
  return stream;
}

}  // namespace cjlab::jsmetrics
