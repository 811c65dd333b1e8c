#include <doctest.h>

#include <json.hpp>

#include <sys/wait.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cjlab/featurecsv.hpp"
#include "support/synth.hpp"

namespace fs = std::filesystem;

namespace {

// The built binary, injected by ctest; without it these cases self-skip so
// the suite still runs standalone.
const char* cli_binary() { return std::getenv("CJLAB_BIN"); }

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

RunResult run_cli(const fs::path& dir, const std::string& args) {
  const std::string cmd = std::string(cli_binary()) + " " + args + " > " +
                          (dir / "stdout.txt").string() + " 2> " +
                          (dir / "stderr.txt").string();
  const int status = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(dir / "stdout.txt");
  r.err = slurp(dir / "stderr.txt");
  return r;
}

fs::path fresh_dir(const char* tag) {
  const fs::path dir =
      fs::temp_directory_path() / (std::string("cjlab_cli_") + tag);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

void write_file(const fs::path& p, const std::string& text) {
  fs::create_directories(p.parent_path());
  std::ofstream out(p, std::ios::binary);
  out << text;
}

void make_corpus(const fs::path& root) {
  write_file(root / "cryptojacking" / "m1.js",
             "var k = \"key\";\nfunction mine(n) { if (n > 0) { return n - 1; } return 0; }\n");
  write_file(root / "cryptojacking" / "m2.js",
             "var ws = null;\nfor (var i = 0; i < 4; i++) { ws = i && ws; }\n");
  write_file(root / "malicious" / "x1.js",
             "function p(u) { return u + \"?q=1\"; }\np(\"a\");\n");
  write_file(root / "malicious" / "x2.js",
             "var z = 1;\nwhile (z < 9) { z = z * 2; }\n");
  write_file(root / "benign" / "b1.js",
             "function add(a, b) { return a + b; }\n");
  write_file(root / "benign" / "b2.js", "var t = `hi${name}`;\nt = t + t;\n");
}

#define REQUIRE_CLI()                              \
  do {                                             \
    if (!cli_binary()) {                           \
      MESSAGE("CJLAB_BIN not set; skipping");      \
      return;                                      \
    }                                              \
  } while (0)

}  // namespace

TEST_CASE("cli analyze: deterministic, warning-counting, exit 0") {
  REQUIRE_CLI();
  const fs::path dir = fresh_dir("analyze");
  make_corpus(dir / "corpus");
  write_file(dir / "corpus" / "benign" / "empty.js", "");  // warns, skipped

  const std::string features = (dir / "features.csv").string();
  RunResult first = run_cli(
      dir, "analyze --corpus " + (dir / "corpus").string() + " --out " +
               features);
  CHECK(first.exit_code == 0);
  CHECK(first.out.find("analyze:") == 0);

  const std::string csv = slurp(features);
  CHECK(csv.rfind("path,label,M,M_d,B,D,E,c_l,T,eta,V,eta1,n1,eta2,n2,"
                  "params,sloc,physical,M_s\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 7);  // header + 6 rows

  // summary sidecar counts the skipped file as a warning, not an error
  auto summary = nlohmann::json::parse(slurp(features + ".summary.json"));
  CHECK(summary["rows"] == 6);
  CHECK(summary["warnings"].get<int>() >= 1);
  CHECK(summary["errors"] == 0);

  RunResult second = run_cli(
      dir, "analyze --corpus " + (dir / "corpus").string() + " --out " +
               (dir / "features2.csv").string());
  CHECK(second.exit_code == 0);
  CHECK(slurp(dir / "features2.csv") == csv);  // byte-identical re-run

  // empty corpus: header-only table, warnings only
  const fs::path empty = dir / "emptycorpus";
  fs::create_directories(empty / "cryptojacking");
  fs::create_directories(empty / "malicious");
  fs::create_directories(empty / "benign");
  RunResult hollow = run_cli(
      dir, "analyze --corpus " + empty.string() + " --out " +
               (dir / "hollow.csv").string());
  CHECK(hollow.exit_code == 0);
  CHECK(std::count(hollow.out.begin(), hollow.out.end(), '\n') == 1);
  const std::string hollow_csv = slurp(dir / "hollow.csv");
  CHECK(std::count(hollow_csv.begin(), hollow_csv.end(), '\n') == 1);
}

TEST_CASE("cli correlate: matrices and selection report") {
  REQUIRE_CLI();
  const fs::path dir = fresh_dir("correlate");

  // a feature table straight from the synthetic generator
  cjlab::FeatureTable table;
  auto data = cjlab::testsupport::synthetic_class_dataset(5, 1);
  for (std::size_t i = 0; i < data.samples.size(); ++i) {
    cjlab::FeatureRow row;
    row.path = "s" + std::to_string(i) + ".js";
    row.label = data.class_names[data.labels[i]];
    std::copy(data.samples[i].begin(), data.samples[i].end(),
              row.values.begin());
    table.rows.push_back(row);
  }
  std::ostringstream os;
  cjlab::write_feature_csv(os, table);
  write_file(dir / "features.csv", os.str());

  RunResult r = run_cli(dir, "correlate --in " +
                                 (dir / "features.csv").string() +
                                 " --out-dir " + (dir / "corr").string());
  CHECK(r.exit_code == 0);
  CHECK(fs::exists(dir / "corr" / "correlation_cryptojacking.csv"));
  CHECK(fs::exists(dir / "corr" / "correlation_malicious.csv"));
  CHECK(fs::exists(dir / "corr" / "correlation_benign.csv"));
  const std::string selected = slurp(dir / "corr" / "selected_features.txt");
  CHECK(selected.rfind("selected_features:", 0) == 0);

  const std::string matrix =
      slurp(dir / "corr" / "correlation_benign.csv");
  CHECK(matrix.rfind("feature,M,M_d,", 0) == 0);
  CHECK(std::count(matrix.begin(), matrix.end(), '\n') == 18);  // header + 17
}

TEST_CASE("cli classify: deterministic report, clear errors") {
  REQUIRE_CLI();
  const fs::path dir = fresh_dir("classify");

  cjlab::FeatureTable table;
  auto data = cjlab::testsupport::synthetic_class_dataset(12, 6);
  for (std::size_t i = 0; i < data.samples.size(); ++i) {
    cjlab::FeatureRow row;
    row.path = "s" + std::to_string(i) + ".js";
    row.label = data.class_names[data.labels[i]];
    std::copy(data.samples[i].begin(), data.samples[i].end(),
              row.values.begin());
    table.rows.push_back(row);
  }
  std::ostringstream os;
  cjlab::write_feature_csv(os, table);
  write_file(dir / "features.csv", os.str());

  const std::string args = "classify --in " + (dir / "features.csv").string() +
                           " --models lr,knn --reps 1 --seed 5 --out ";
  RunResult a = run_cli(dir, args + (dir / "r1.csv").string());
  RunResult b = run_cli(dir, args + (dir / "r2.csv").string());
  CHECK(a.exit_code == 0);
  CHECK(slurp(dir / "r1.csv") == slurp(dir / "r2.csv"));
  CHECK(slurp(dir / "r1.csv").find("model,F1,precision,recall") !=
        std::string::npos);

  RunResult bad_model = run_cli(dir, "classify --in " +
                                         (dir / "features.csv").string() +
                                         " --models lr,dnn --out " +
                                         (dir / "x.csv").string());
  CHECK(bad_model.exit_code == 2);
  CHECK(bad_model.err.find("unknown model") != std::string::npos);

  // a table without the label column is rejected up front
  write_file(dir / "broken.csv", "path,M,M_d\nx.js,1,1\n");
  RunResult broken = run_cli(dir, "classify --in " +
                                      (dir / "broken.csv").string() +
                                      " --out " + (dir / "y.csv").string());
  CHECK(broken.exit_code == 2);
  CHECK(broken.err.find("header") != std::string::npos);
}

TEST_CASE("cli simulate: scenario report and usage errors") {
  REQUIRE_CLI();
  const fs::path dir = fresh_dir("simulate");

  RunResult r = run_cli(
      dir, "simulate --scenario keyless --alpha 0.1 --hmax 200 --duration 3 "
           "--seed 7 --out " + (dir / "report.json").string());
  CHECK(r.exit_code == 0);
  auto report = nlohmann::json::parse(slurp(dir / "report.json"));
  CHECK(report["scenario"] == "keyless");
  CHECK(report["total_accepted_hashes"] == 0);
  CHECK(fs::exists(dir / "report.json.frames.jsonl"));

  RunResult unknown = run_cli(dir, "simulate --scenario warpdrive --out " +
                                       (dir / "x.json").string());
  CHECK(unknown.exit_code == 2);
  CHECK(unknown.err.find("unknown scenario") != std::string::npos);
}

TEST_CASE("cli economics: tables on disk") {
  REQUIRE_CLI();
  const fs::path dir = fresh_dir("economics");

  RunResult r = run_cli(dir, "economics device-table --out " +
                                 (dir / "t6.csv").string());
  CHECK(r.exit_code == 0);
  const std::string table = slurp(dir / "t6.csv");
  CHECK(std::count(table.begin(), table.end(), '\n') == 10);  // header + 9
  CHECK(table.find("windows,0.1,21,") != std::string::npos);

  RunResult w = run_cli(
      dir, "economics website --visits 87.24 --duration 04:32 --out " +
               (dir / "site.csv").string());
  CHECK(w.exit_code == 0);
  CHECK(w.out.find("2746.9") != std::string::npos);

  RunResult t = run_cli(dir, "economics website-table --dataset top --out " +
                                 (dir / "t7.csv").string());
  CHECK(t.exit_code == 0);
  CHECK(slurp(dir / "t7.csv").find("google.com,1,") != std::string::npos);
}
