#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "cjlab/jsmetrics/tokenizer.hpp"

namespace cjlab::jsmetrics {

struct HalsteadCounts {
  std::uint64_t eta1 = 0;  // distinct operators
  std::uint64_t eta2 = 0;  // distinct operands
  std::uint64_t n1 = 0;    // total operators
  std::uint64_t n2 = 0;    // total operands

  bool operator==(const HalsteadCounts&) const = default;
};

struct HalsteadSuite {
  std::uint64_t eta = 0;  // vocabulary, eta1 + eta2
  std::uint64_t n = 0;    // length, n1 + n2
  double n_c = 0.0;       // calculated length
  double volume = 0.0;    // V = n * log2(eta)
  double difficulty = 0.0;
  double effort = 0.0;
  double time_s = 0.0;    // T = E / 18
  double bugs = 0.0;      // B = E^(2/3) / 3000
};

struct LineCounts {
  std::uint64_t physical = 0;  // newline-delimited lines
  std::uint64_t sloc = 0;      // lines carrying at least one non-comment token
  std::uint64_t logical = 0;   // `;` terminators + control/function block headers
  std::uint64_t params = 0;    // formal parameters over all function definitions
};

struct Maintainability {
  double score = 0.0;  // 171 - 5.2 ln V - 0.23 M - 16.2 ln c_l
  double index = 0.0;  // max(0, score / 171)
};

/// The 17 static features of one sample, in the CSV column order
/// M,M_d,B,D,E,c_l,T,eta,V,eta1,n1,eta2,n2,params,sloc,physical,M_s.
struct FeatureVector {
  std::uint64_t cyclomatic = 0;        // M
  double cyclomatic_density = 0.0;     // M_d = M / c_l (0 when c_l = 0)
  double bugs = 0.0;                   // B
  double difficulty = 0.0;             // D
  double effort = 0.0;                 // E
  std::uint64_t logical_lines = 0;     // c_l
  double time_s = 0.0;                 // T
  std::uint64_t vocabulary = 0;        // eta
  double volume = 0.0;                 // V
  std::uint64_t eta1 = 0;
  std::uint64_t n1 = 0;
  std::uint64_t eta2 = 0;
  std::uint64_t n2 = 0;
  std::uint64_t params = 0;
  std::uint64_t sloc = 0;
  std::uint64_t physical_lines = 0;    // physical
  double maintainability_score = 0.0;  // M_s (0 when V or c_l is 0)

  std::array<double, 17> as_array() const;
};

inline constexpr std::array<std::string_view, 17> kFeatureNames = {
    "M",  "M_d",  "B",    "D",  "E",      "c_l",      "T",  "eta", "V",
    "eta1", "n1", "eta2", "n2", "params", "sloc", "physical", "M_s"};

/// Operator/operand totals per the fixed classification table. Comments,
/// whitespace and closing-pair punctuation contribute nothing.
HalsteadCounts count_halstead(std::span<const Token> tokens);

/// All derived Halstead measures. eta = 0 yields all zeros; the 0*log2(0)
/// terms of the calculated length are taken as 0.
HalsteadSuite halstead_suite(const HalsteadCounts& counts);

/// Decision-point cyclomatic complexity: 1 for the top level, +1 per function
/// definition (`function` or `=>`), +1 per if/case/for/while/do/catch/?/&&/||.
std::uint64_t cyclomatic(std::span<const Token> tokens);

LineCounts line_counts(std::string_view source);
LineCounts line_counts(std::string_view source, const TokenStream& stream);

/// Maintainability score with natural logarithms. Throws std::domain_error
/// unless volume > 0, logical_lines > 0 and m >= 1.
Maintainability maintainability(double volume, double m, double logical_lines);

/// Composes the full 17-field vector. Throws std::invalid_argument on empty
/// input and TokenizeError on lexical damage; the two-argument overload
/// collects diagnostics instead of throwing, for corpus runs over scripts
/// that are only partially lexable.
FeatureVector extract_features(std::string_view source);
FeatureVector extract_features(std::string_view source,
                               std::vector<LexDiagnostic>& diagnostics);

}  // namespace cjlab::jsmetrics
