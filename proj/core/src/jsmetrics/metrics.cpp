#include "cjlab/jsmetrics/metrics.hpp"

#include <cmath>
#include <stdexcept>
#include <unordered_set>

#include "cjlab/jsmetrics/token_tables.hpp"

namespace cjlab::jsmetrics {

namespace {

bool counts_as_operand(TokenKind kind) {
  switch (kind) {
    case TokenKind::Operand:
    case TokenKind::StringLiteral:
    case TokenKind::NumericLiteral:
    case TokenKind::TemplateLiteral:
    case TokenKind::RegexLiteral:
      return true;
    default:
      return false;
  }
}

double xlog2(double x) { return x > 0.0 ? x * std::log2(x) : 0.0; }

// Index of the previous non-comment token, or npos.
std::size_t prev_significant(std::span<const Token> tokens, std::size_t i) {
  while (i-- > 0) {
    if (tokens[i].kind != TokenKind::Comment) return i;
  }
  return std::size_t(-1);
}

bool opens_block_header(std::span<const Token> tokens, std::size_t brace_idx) {
  std::size_t p = prev_significant(tokens, brace_idx);
  if (p == std::size_t(-1)) return false;
  const std::string& t = tokens[p].text;
  return t == ")" || t == "else" || t == "try" || t == "finally" ||
         t == "do" || t == "=>";
}

// Parameters in one already-located `( ... )` group: 1 + top-level commas,
// or 0 for an empty group. Nested (), [], {} shield their commas.
std::uint64_t count_param_group(std::span<const Token> tokens,
                                std::size_t open_idx) {
  int depth = 0;
  std::uint64_t commas = 0;
  bool any = false;
  for (std::size_t i = open_idx; i < tokens.size(); ++i) {
    const Token& tok = tokens[i];
    if (tok.kind == TokenKind::Comment) continue;
    const std::string& t = tok.text;
    if (t == "(" || t == "[" || t == "{") {
      ++depth;
    } else if (t == ")" || t == "]" || t == "}") {
      --depth;
      if (depth == 0) break;
    } else if (depth == 1) {
      any = true;
      if (t == ",") ++commas;
    }
  }
  return any ? commas + 1 : 0;
}

// Backwards from a `)` to its matching `(`.
std::size_t matching_open(std::span<const Token> tokens,
                          std::size_t close_idx) {
  int depth = 0;
  for (std::size_t i = close_idx + 1; i-- > 0;) {
    const std::string& t = tokens[i].text;
    if (tokens[i].kind == TokenKind::Comment) continue;
    if (t == ")") ++depth;
    if (t == "(") {
      --depth;
      if (depth == 0) return i;
    }
  }
  return std::size_t(-1);
}

std::uint64_t count_params(std::span<const Token> tokens) {
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const Token& tok = tokens[i];
    if (tok.kind != TokenKind::Operator) continue;
    if (tok.text == "function") {
      std::size_t j = i + 1;
      while (j < tokens.size() && tokens[j].kind == TokenKind::Comment) ++j;
      if (j < tokens.size() && tokens[j].text == "*") ++j;  // generator
      while (j < tokens.size() && tokens[j].kind == TokenKind::Comment) ++j;
      if (j < tokens.size() && tokens[j].kind == TokenKind::Operand) ++j;
      while (j < tokens.size() && tokens[j].kind == TokenKind::Comment) ++j;
      if (j < tokens.size() && tokens[j].text == "(") {
        total += count_param_group(tokens, j);
      }
    } else if (tok.text == "=>") {
      std::size_t p = prev_significant(tokens, i);
      if (p == std::size_t(-1)) continue;
      if (tokens[p].text == ")") {
        std::size_t open = matching_open(tokens, p);
        if (open != std::size_t(-1)) total += count_param_group(tokens, open);
      } else if (tokens[p].kind == TokenKind::Operand) {
        total += 1;  // bare single-parameter arrow
      }
    }
  }
  return total;
}

}  // namespace

std::array<double, 17> FeatureVector::as_array() const {
  return {static_cast<double>(cyclomatic),
          cyclomatic_density,
          bugs,
          difficulty,
          effort,
          static_cast<double>(logical_lines),
          time_s,
          static_cast<double>(vocabulary),
          volume,
          static_cast<double>(eta1),
          static_cast<double>(n1),
          static_cast<double>(eta2),
          static_cast<double>(n2),
          static_cast<double>(params),
          static_cast<double>(sloc),
          static_cast<double>(physical_lines),
          maintainability_score};
}

HalsteadCounts count_halstead(std::span<const Token> tokens) {
  HalsteadCounts counts;
  std::unordered_set<std::string_view> operators;
  std::unordered_set<std::string_view> operands;
  for (const Token& tok : tokens) {
    if (tok.kind == TokenKind::Operator) {
      ++counts.n1;
      operators.insert(tok.text);
    } else if (counts_as_operand(tok.kind)) {
      ++counts.n2;
      operands.insert(tok.text);
    }
  }
  counts.eta1 = operators.size();
  counts.eta2 = operands.size();
  return counts;
}

HalsteadSuite halstead_suite(const HalsteadCounts& counts) {
  HalsteadSuite s;
  s.eta = counts.eta1 + counts.eta2;
  s.n = counts.n1 + counts.n2;
  if (s.eta == 0) return s;
  s.n_c = xlog2(static_cast<double>(counts.eta1)) +
          xlog2(static_cast<double>(counts.eta2));
  s.volume = static_cast<double>(s.n) * std::log2(static_cast<double>(s.eta));
  if (counts.eta2 > 0) {
    s.difficulty = (static_cast<double>(counts.eta1) / 2.0) *
                   (static_cast<double>(counts.n2) /
                    static_cast<double>(counts.eta2));
  }
  s.effort = s.difficulty * s.volume;
  s.time_s = s.effort / 18.0;
  s.bugs = std::pow(s.effort, 2.0 / 3.0) / 3000.0;
  return s;
}

std::uint64_t cyclomatic(std::span<const Token> tokens) {
  std::uint64_t m = 1;
  for (const Token& tok : tokens) {
    if (tok.kind != TokenKind::Operator) continue;
    if (tok.text == "function" || tok.text == "=>" ||
        is_decision_token(tok.text)) {
      ++m;
    }
  }
  return m;
}

LineCounts line_counts(std::string_view source) {
  return line_counts(source, tokenize(source));
}

LineCounts line_counts(std::string_view source, const TokenStream& stream) {
  LineCounts lc;

  if (!source.empty()) {
    lc.physical = 1;
    for (char c : source) {
      if (c == '\n') ++lc.physical;
    }
    if (source.back() == '\n') --lc.physical;
  }

  std::unordered_set<int> code_lines;
  std::span<const Token> tokens(stream.tokens);
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const Token& tok = tokens[i];
    if (tok.kind != TokenKind::Comment) {
      int span = 0;
      for (char c : tok.text) {
        if (c == '\n') ++span;
      }
      for (int l = tok.line; l <= tok.line + span; ++l) code_lines.insert(l);
    }
    if (tok.text == ";" && tok.kind == TokenKind::Operator) {
      ++lc.logical;
    } else if (tok.text == "{" && tok.kind == TokenKind::Operator &&
               opens_block_header(tokens, i)) {
      ++lc.logical;
    }
  }
  lc.sloc = code_lines.size();
  lc.params = count_params(tokens);
  return lc;
}

Maintainability maintainability(double volume, double m,
                                double logical_lines) {
  if (!(volume > 0.0)) throw std::domain_error("maintainability: V must be > 0");
  if (!(logical_lines > 0.0)) {
    throw std::domain_error("maintainability: c_l must be > 0");
  }
  if (!(m >= 1.0)) throw std::domain_error("maintainability: M must be >= 1");
  Maintainability out;
  out.score = 171.0 - 5.2 * std::log(volume) - 0.23 * m -
              16.2 * std::log(logical_lines);
  out.index = std::max(0.0, out.score / 171.0);
  return out;
}

namespace {

FeatureVector features_from_stream(std::string_view source,
                                   const TokenStream& stream) {
  FeatureVector fv;
  HalsteadCounts counts = count_halstead(stream.tokens);
  HalsteadSuite suite = halstead_suite(counts);
  LineCounts lines = line_counts(source, stream);

  fv.cyclomatic = cyclomatic(stream.tokens);
  fv.logical_lines = lines.logical;
  fv.cyclomatic_density =
      lines.logical > 0 ? static_cast<double>(fv.cyclomatic) /
                              static_cast<double>(lines.logical)
                        : 0.0;
  fv.bugs = suite.bugs;
  fv.difficulty = suite.difficulty;
  fv.effort = suite.effort;
  fv.time_s = suite.time_s;
  fv.vocabulary = suite.eta;
  fv.volume = suite.volume;
  fv.eta1 = counts.eta1;
  fv.n1 = counts.n1;
  fv.eta2 = counts.eta2;
  fv.n2 = counts.n2;
  fv.params = lines.params;
  fv.sloc = lines.sloc;
  fv.physical_lines = lines.physical;
  if (suite.volume > 0.0 && lines.logical > 0) {
    fv.maintainability_score =
        maintainability(suite.volume, static_cast<double>(fv.cyclomatic),
                        static_cast<double>(lines.logical))
            .score;
  }
  return fv;
}

}  // namespace

FeatureVector extract_features(std::string_view source) {
  if (source.empty()) {
    throw std::invalid_argument("extract_features: empty program");
  }
  return features_from_stream(source, tokenize_strict(source));
}

FeatureVector extract_features(std::string_view source,
                               std::vector<LexDiagnostic>& diagnostics) {
  if (source.empty()) {
    throw std::invalid_argument("extract_features: empty program");
  }
  TokenStream stream = tokenize(source);
  diagnostics.insert(diagnostics.end(), stream.diagnostics.begin(),
                     stream.diagnostics.end());
  return features_from_stream(source, stream);
}

}  // namespace cjlab::jsmetrics
