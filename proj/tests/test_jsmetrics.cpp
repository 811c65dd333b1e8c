#include <doctest.h>

#include <cmath>
#include <random>

#include "cjlab/jsmetrics/metrics.hpp"
#include "cjlab/jsmetrics/tokenizer.hpp"
#include "support/jsmetrics_oracle.hpp"
#include "support/synth.hpp"

using namespace cjlab::jsmetrics;
using cjlab::testsupport::kMetricsOracle;

TEST_CASE("tokenize: basic classification") {
  TokenStream ts = tokenize("a + b");
  REQUIRE(ts.tokens.size() == 3);
  CHECK(ts.tokens[0].kind == TokenKind::Operand);
  CHECK(ts.tokens[0].text == "a");
  CHECK(ts.tokens[1].kind == TokenKind::Operator);
  CHECK(ts.tokens[1].text == "+");
  CHECK(ts.tokens[2].kind == TokenKind::Operand);

  ts = tokenize("// x\nvar y;");
  REQUIRE(ts.tokens.size() == 4);
  CHECK(ts.tokens[0].kind == TokenKind::Comment);
  CHECK(ts.tokens[0].text == "// x");
  CHECK(ts.tokens[1].kind == TokenKind::Operator);
  CHECK(ts.tokens[1].text == "var");
  CHECK(ts.tokens[2].kind == TokenKind::Operand);
  CHECK(ts.tokens[3].text == ";");
  CHECK(ts.tokens[1].line == 2);

  CHECK(tokenize("").tokens.empty());
  CHECK(tokenize("").reconstruct().empty());
}

TEST_CASE("tokenize: unterminated constructs are diagnosed, never truncated") {
  TokenStream ts = tokenize("var s = \"abc");
  REQUIRE(!ts.diagnostics.empty());
  CHECK(ts.diagnostics[0].line == 1);
  CHECK(ts.reconstruct() == "var s = \"abc");

  ts = tokenize("x;\n/* open\nmore");
  REQUIRE(!ts.diagnostics.empty());
  CHECK(ts.diagnostics[0].line == 2);
  CHECK(ts.reconstruct() == "x;\n/* open\nmore");

  CHECK_THROWS_AS(tokenize_strict("`open"), TokenizeError);
  try {
    tokenize_strict("a;\nb = \"oops");
  } catch (const TokenizeError& e) {
    CHECK(e.line() == 2);
  }
}

TEST_CASE("tokenize: regex vs division context") {
  TokenStream ts = tokenize("x = a / b / c;");
  std::size_t regexes = 0;
  for (const auto& tok : ts.tokens) {
    if (tok.kind == TokenKind::RegexLiteral) ++regexes;
  }
  CHECK(regexes == 0);

  ts = tokenize("x = /ab/g;");
  REQUIRE(ts.tokens.size() == 4);
  CHECK(ts.tokens[2].kind == TokenKind::RegexLiteral);
  CHECK(ts.tokens[2].text == "/ab/g");
}

TEST_CASE("oracle suite: hand-computed counts match exactly") {
  for (const auto& oc : kMetricsOracle) {
    CAPTURE(oc.name);
    TokenStream ts = tokenize(oc.source);
    CHECK(ts.diagnostics.empty());
    CHECK(count_halstead(ts.tokens) == oc.counts);
    CHECK(cyclomatic(ts.tokens) == oc.m);
    LineCounts lc = line_counts(oc.source, ts);
    CHECK(lc.physical == oc.physical);
    CHECK(lc.sloc == oc.sloc);
    CHECK(lc.logical == oc.logical);
    CHECK(lc.params == oc.params);
    CHECK(ts.reconstruct() == oc.source);
  }
}

TEST_CASE("count_halstead: spec examples") {
  auto counts = count_halstead(tokenize("a + b").tokens);
  CHECK(counts == HalsteadCounts{1, 2, 1, 2});
  counts = count_halstead(tokenize("a + a").tokens);
  CHECK(counts == HalsteadCounts{1, 1, 1, 2});
  counts = count_halstead(tokenize("").tokens);
  CHECK(counts == HalsteadCounts{0, 0, 0, 0});
}

TEST_CASE("halstead_suite: derived formulas") {
  HalsteadSuite s = halstead_suite({1, 2, 1, 2});
  CHECK(s.eta == 3);
  CHECK(s.n == 3);
  const double v = 3.0 * std::log2(3.0);
  CHECK(s.volume == doctest::Approx(v).epsilon(1e-12));
  CHECK(s.difficulty == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(s.effort == doctest::Approx(0.5 * v).epsilon(1e-12));
  CHECK(s.time_s == doctest::Approx(0.5 * v / 18.0).epsilon(1e-12));
  CHECK(s.bugs ==
        doctest::Approx(std::pow(0.5 * v, 2.0 / 3.0) / 3000.0).epsilon(1e-12));
  CHECK(s.volume == doctest::Approx(4.755).epsilon(1e-3));
  CHECK(s.bugs == doctest::Approx(5.93e-4).epsilon(1e-2));

  s = halstead_suite({0, 0, 0, 0});
  CHECK(s.eta == 0);
  CHECK(s.volume == 0.0);
  CHECK(s.effort == 0.0);

  // vocabulary/length identities on a published sample row
  s = halstead_suite({37, 331, 1697, 1529});
  CHECK(s.eta == 368);
  CHECK(s.n == 3226);
}

TEST_CASE("cyclomatic: spec examples") {
  CHECK(cyclomatic(tokenize("var a = 1;").tokens) == 1);
  CHECK(cyclomatic(
            tokenize("function f(x){ if(x){return 1;} return 2; }").tokens) ==
        3);
  CHECK(cyclomatic(tokenize("if(a && b){} ").tokens) == 3);
}

TEST_CASE("line_counts: spec examples") {
  LineCounts lc = line_counts("var a = 1;\n\n// c\nvar b = 2;");
  CHECK(lc.physical == 4);
  CHECK(lc.sloc == 2);
  CHECK(lc.logical == 2);
  CHECK(lc.params == 0);

  CHECK(line_counts("function f(a,b){}").params == 2);

  lc = line_counts("");
  CHECK(lc.physical == 0);
  CHECK(lc.sloc == 0);
  CHECK(lc.logical == 0);
  CHECK(lc.params == 0);
}

TEST_CASE("maintainability: formula and domain") {
  Maintainability m = maintainability(1.0, 1.0, 1.0);
  CHECK(m.score == doctest::Approx(170.77).epsilon(1e-12));
  CHECK(m.index == doctest::Approx(170.77 / 171.0).epsilon(1e-12));

  // all-logs path, cross-checked against a direct evaluation
  const double expected = 171.0 - 5.2 * std::log(274970.0) - 0.23 * 131.0 -
                          16.2 * std::log(476.0);
  m = maintainability(274970.0, 131.0, 476.0);
  CHECK(m.score == doctest::Approx(expected).epsilon(1e-12));
  CHECK(m.index == std::max(0.0, expected / 171.0));

  CHECK_THROWS_AS(maintainability(0.0, 1.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(maintainability(2.718281828, 0.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(maintainability(1.0, 1.0, 0.0), std::domain_error);
}

TEST_CASE("extract_features: composition and determinism") {
  CHECK_THROWS_AS(extract_features(""), std::invalid_argument);

  FeatureVector fv = extract_features("a + b");
  CHECK(fv.eta1 == 1);
  CHECK(fv.eta2 == 2);
  CHECK(fv.n1 == 1);
  CHECK(fv.n2 == 2);
  CHECK(fv.cyclomatic == 1);
  CHECK(fv.vocabulary == 3);
  CHECK(fv.volume == doctest::Approx(3.0 * std::log2(3.0)).epsilon(1e-12));
  CHECK(fv.logical_lines == 0);
  CHECK(fv.cyclomatic_density == 0.0);        // c_l = 0
  CHECK(fv.maintainability_score == 0.0);     // undefined without c_l
  CHECK(fv.sloc == 1);
  CHECK(fv.physical_lines == 1);

  FeatureVector again = extract_features("a + b");
  CHECK(fv.as_array() == again.as_array());

  // lenient path keeps counting and reports the damage
  std::vector<LexDiagnostic> diags;
  FeatureVector partial = extract_features("var x = \"unterminated", diags);
  CHECK(!diags.empty());
  CHECK(partial.n1 >= 2);
  CHECK_THROWS_AS(extract_features("var x = \"unterminated"), TokenizeError);
}

TEST_CASE("properties: identities over generated sources") {
  std::mt19937_64 rng(20260810);
  for (int round = 0; round < 300; ++round) {
    const std::string source = cjlab::testsupport::random_js_source(rng);
    CAPTURE(source);
    TokenStream ts = tokenize(source);
    REQUIRE(ts.diagnostics.empty());

    // byte-exact round trip
    REQUIRE(ts.reconstruct() == source);

    HalsteadCounts counts = count_halstead(ts.tokens);
    CHECK(counts.eta1 <= counts.n1);
    CHECK(counts.eta2 <= counts.n2);

    HalsteadSuite suite = halstead_suite(counts);
    CHECK(suite.eta == counts.eta1 + counts.eta2);
    CHECK(suite.n == counts.n1 + counts.n2);
    CHECK(suite.effort ==
          doctest::Approx(suite.difficulty * suite.volume).epsilon(1e-9));
    CHECK(suite.time_s == doctest::Approx(suite.effort / 18.0).epsilon(1e-9));

    FeatureVector fv = extract_features(source);
    REQUIRE(fv.logical_lines > 0);
    CHECK(fv.cyclomatic_density * static_cast<double>(fv.logical_lines) ==
          doctest::Approx(static_cast<double>(fv.cyclomatic)).epsilon(1e-9));
    CHECK(fv.sloc <= fv.physical_lines);

    // a comment-only line moves physical lines and nothing else
    const std::string annotated =
        source + (source.back() == '\n' ? "// trailing note"
                                        : "\n// trailing note");
    FeatureVector commented = extract_features(annotated);
    CHECK(commented.physical_lines == fv.physical_lines + 1);
    CHECK(commented.eta1 == fv.eta1);
    CHECK(commented.eta2 == fv.eta2);
    CHECK(commented.n1 == fv.n1);
    CHECK(commented.n2 == fv.n2);
    CHECK(commented.cyclomatic == fv.cyclomatic);
    CHECK(commented.logical_lines == fv.logical_lines);
    CHECK(commented.sloc == fv.sloc);

    // duplicating the body doubles totals, keeps the vocabulary, and
    // adds M-1 (the second copy of every decision point and function)
    FeatureVector doubled = extract_features(source + "\n" + source);
    CHECK(doubled.n1 == 2 * fv.n1);
    CHECK(doubled.n2 == 2 * fv.n2);
    CHECK(doubled.logical_lines == 2 * fv.logical_lines);
    CHECK(doubled.eta1 == fv.eta1);
    CHECK(doubled.eta2 == fv.eta2);
    CHECK(doubled.cyclomatic == 2 * fv.cyclomatic - 1);
  }
}
