#pragma once

// Hand-tokenized snippets: expected operator/operand totals, cyclomatic
// number and line counts, all worked out by hand against the fixed
// classification table. These fixtures are the ground truth for the
// jsmetrics module; do not regenerate them from the implementation.

#include <cstdint>

#include "cjlab/jsmetrics/metrics.hpp"

namespace cjlab::testsupport {

struct MetricsOracleCase {
  const char* name;
  const char* source;
  jsmetrics::HalsteadCounts counts;  // eta1, eta2, n1, n2
  std::uint64_t m;
  std::uint64_t physical;
  std::uint64_t sloc;
  std::uint64_t logical;
  std::uint64_t params;
};

inline constexpr MetricsOracleCase kMetricsOracle[] = {
    {"plus", "a + b", {1, 2, 1, 2}, 1, 1, 1, 0, 0},
    {"repeat-operand", "a + a", {1, 1, 1, 2}, 1, 1, 1, 0, 0},
    {"var-decl", "var x = 1;", {3, 2, 3, 2}, 1, 1, 1, 1, 0},
    {"comment-then-decl", "// x\nvar y;", {2, 1, 2, 1}, 1, 2, 1, 1, 0},
    {"function-if",
     "function f(x){ if(x){return 1;} return 2; }",
     {6, 4, 10, 5}, 3, 1, 1, 4, 1},
    {"short-circuit", "if(a && b){}", {4, 2, 4, 2}, 3, 1, 1, 1, 0},
    {"two-decls-comment",
     "var a = 1;\n\n// c\nvar b = 2;",
     {3, 4, 6, 4}, 1, 4, 2, 2, 0},
    {"two-params", "function f(a,b){}", {4, 3, 4, 3}, 2, 1, 1, 1, 2},
    {"for-loop",
     "for (var i = 0; i < 10; i++) { s += i; }",
     {9, 4, 11, 7}, 2, 1, 1, 4, 0},
    {"ternary", "x ? y : z;", {3, 3, 3, 3}, 2, 1, 1, 1, 0},
    {"do-while", "do { a--; } while (a > 0);", {7, 2, 8, 3}, 3, 1, 1, 3, 0},
    {"try-catch",
     "try { f(); } catch (e) { g(e); }",
     {5, 3, 9, 4}, 2, 1, 1, 4, 0},
    {"arrow", "const f = (a, b) => a + b;", {7, 3, 7, 5}, 2, 1, 1, 1, 2},
    {"literals",
     "var r = /ab+/g;\nvar s = \"q\\\"t\";\nvar t = `a${b}c`;\n/* z */",
     {3, 6, 9, 6}, 1, 4, 3, 3, 0},
};

}  // namespace cjlab::testsupport
