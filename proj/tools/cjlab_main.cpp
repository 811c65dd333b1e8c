// cjlab: one binary, five subcommands (analyze, correlate, classify,
// simulate, economics). Every subcommand writes its outputs to files, prints
// a one-line summary to stdout and drops a machine-readable JSON summary
// next to the main output. Exit code 0 means no errors; warnings are
// counted in the summary without affecting the exit code.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <thread>

#include "cjlab/classifier/evaluate.hpp"
#include "cjlab/economics/tables.hpp"
#include "cjlab/featanalysis/correlation.hpp"
#include "cjlab/featurecsv.hpp"
#include "cjlab/jsmetrics/metrics.hpp"
#include "cjlab/simnet/scenario.hpp"

namespace fs = std::filesystem;
using nlohmann::ordered_json;

namespace {

struct RunStatus {
  std::string command;
  std::uint64_t seed = 0;
  std::uint64_t rows = 0;
  std::uint64_t warnings = 0;
  std::uint64_t errors = 0;
  std::vector<std::string> outputs;
};

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

void write_summary(const RunStatus& status, const std::string& anchor) {
  ordered_json j;
  j["command"] = status.command;
  j["seed"] = status.seed;
  j["rows"] = status.rows;
  j["warnings"] = status.warnings;
  j["errors"] = status.errors;
  j["outputs"] = status.outputs;
  write_text(anchor + ".summary.json", j.dump(2) + "\n");
}

void print_summary_line(const RunStatus& status, const std::string& detail) {
  std::cout << status.command << ": " << detail << ", " << status.warnings
            << " warning(s) (seed " << status.seed << ")\n";
}

// ---------------------------------------------------------------------------
// analyze

struct CorpusFile {
  std::string relative;
  fs::path full;
  std::string label;
  std::string site;  // website-level grouping key, empty for script level
};

std::vector<CorpusFile> collect_scripts(const fs::path& root,
                                        RunStatus& status) {
  static const char* kClasses[] = {"cryptojacking", "malicious", "benign"};
  std::vector<CorpusFile> files;
  for (const char* label : kClasses) {
    const fs::path dir = root / label;
    if (!fs::exists(dir)) {
      std::cerr << "warning: corpus has no '" << label << "/' directory\n";
      ++status.warnings;
      continue;
    }
    bool any = false;
    for (const auto& entry : fs::recursive_directory_iterator(dir)) {
      if (!entry.is_regular_file() || entry.path().extension() != ".js") {
        continue;
      }
      any = true;
      files.push_back(CorpusFile{
          fs::relative(entry.path(), root).generic_string(), entry.path(),
          label, ""});
    }
    if (!any) {
      std::cerr << "warning: class '" << label << "' is empty\n";
      ++status.warnings;
    }
  }
  std::sort(files.begin(), files.end(),
            [](const CorpusFile& a, const CorpusFile& b) {
              return a.relative < b.relative;
            });
  return files;
}

std::vector<CorpusFile> collect_website_scripts(const fs::path& root,
                                                RunStatus& status) {
  std::vector<CorpusFile> files;
  const fs::path base = root / "websites";
  if (!fs::exists(base)) {
    std::cerr << "warning: corpus has no websites/ tree\n";
    ++status.warnings;
    return files;
  }
  for (const auto& label_dir : fs::directory_iterator(base)) {
    if (!label_dir.is_directory()) continue;
    for (const auto& site_dir : fs::directory_iterator(label_dir.path())) {
      if (!site_dir.is_directory()) continue;
      for (const auto& entry :
           fs::recursive_directory_iterator(site_dir.path())) {
        if (!entry.is_regular_file() || entry.path().extension() != ".js") {
          continue;
        }
        files.push_back(CorpusFile{
            fs::relative(entry.path(), root).generic_string(), entry.path(),
            label_dir.path().filename().string(),
            fs::relative(site_dir.path(), root).generic_string()});
      }
    }
  }
  std::sort(files.begin(), files.end(),
            [](const CorpusFile& a, const CorpusFile& b) {
              return a.relative < b.relative;
            });
  return files;
}

struct ExtractOutcome {
  bool ok = false;
  cjlab::FeatureRow row;
  std::uint64_t warnings = 0;
  std::string error;
};

ExtractOutcome extract_one(const CorpusFile& file) {
  ExtractOutcome out;
  std::ifstream in(file.full, std::ios::binary);
  if (!in) {
    out.error = "unreadable file";
    return out;
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  const std::string source = buffer.str();
  if (source.empty()) {
    out.error = "empty file";
    return out;
  }
  std::vector<cjlab::jsmetrics::LexDiagnostic> diagnostics;
  try {
    const auto fv = cjlab::jsmetrics::extract_features(source, diagnostics);
    out.row.path = file.relative;
    out.row.label = file.label;
    out.row.values = fv.as_array();
    out.ok = true;
  } catch (const std::exception& e) {
    out.error = e.what();
    return out;
  }
  out.warnings = diagnostics.size();
  for (const auto& d : diagnostics) {
    std::cerr << "warning: " << file.relative << ":" << d.line << ": "
              << d.message << "\n";
  }
  return out;
}

std::string feature_table_json(const cjlab::FeatureTable& table,
                               std::uint64_t seed) {
  ordered_json j;
  j["seed"] = seed;
  ordered_json rows = ordered_json::array();
  for (const auto& row : table.rows) {
    ordered_json r;
    r["path"] = row.path;
    r["label"] = row.label;
    ordered_json features;
    for (std::size_t i = 0; i < row.values.size(); ++i) {
      features[std::string(cjlab::jsmetrics::kFeatureNames[i])] =
          row.values[i];
    }
    r["features"] = std::move(features);
    rows.push_back(std::move(r));
  }
  j["rows"] = std::move(rows);
  return j.dump(2) + "\n";
}

int cmd_analyze(const std::string& corpus, const std::string& out,
                const std::string& format, std::uint64_t seed, int jobs,
                const std::string& level) {
  RunStatus status;
  status.command = "analyze";
  status.seed = seed;

  const fs::path root(corpus);
  if (!fs::exists(root)) {
    std::cerr << "error: corpus directory not found: " << corpus << "\n";
    return 2;
  }
  const bool website_level = level == "website";
  std::vector<CorpusFile> files = website_level
                                      ? collect_website_scripts(root, status)
                                      : collect_scripts(root, status);

  std::vector<ExtractOutcome> outcomes(files.size());
  const int workers = std::max(1, jobs);
  if (workers == 1 || files.size() < 2) {
    for (std::size_t i = 0; i < files.size(); ++i) {
      outcomes[i] = extract_one(files[i]);
    }
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next.fetch_add(1); i < files.size();
             i = next.fetch_add(1)) {
          outcomes[i] = extract_one(files[i]);
        }
      });
    }
    for (auto& t : pool) t.join();
  }

  cjlab::FeatureTable table;
  if (website_level) {
    // one row per site: element-wise mean over that site's script vectors
    std::map<std::string, std::pair<cjlab::FeatureRow, std::size_t>> sites;
    for (std::size_t i = 0; i < files.size(); ++i) {
      if (!outcomes[i].ok) {
        std::cerr << "warning: skipping " << files[i].relative << ": "
                  << outcomes[i].error << "\n";
        ++status.warnings;
        continue;
      }
      status.warnings += outcomes[i].warnings;
      auto& [row, count] = sites[files[i].site];
      if (count == 0) {
        row.path = files[i].site;
        row.label = files[i].label;
        row.values.fill(0.0);
      }
      for (std::size_t k = 0; k < row.values.size(); ++k) {
        row.values[k] += outcomes[i].row.values[k];
      }
      ++count;
    }
    for (auto& [site, entry] : sites) {
      for (double& v : entry.first.values) {
        v /= static_cast<double>(entry.second);
      }
      table.rows.push_back(entry.first);
    }
  } else {
    for (std::size_t i = 0; i < files.size(); ++i) {
      if (!outcomes[i].ok) {
        std::cerr << "warning: skipping " << files[i].relative << ": "
                  << outcomes[i].error << "\n";
        ++status.warnings;
        continue;
      }
      status.warnings += outcomes[i].warnings;
      table.rows.push_back(outcomes[i].row);
    }
  }

  if (format == "json") {
    write_text(out, feature_table_json(table, seed));
  } else {
    std::ostringstream os;
    cjlab::write_feature_csv(os, table);
    write_text(out, os.str());
  }
  status.rows = table.rows.size();
  status.outputs = {out};
  write_summary(status, out);
  print_summary_line(status, std::to_string(files.size()) + " file(s) -> " +
                                 std::to_string(status.rows) + " row(s) -> " +
                                 out);
  return 0;
}

// ---------------------------------------------------------------------------
// correlate

std::string matrix_csv(const cjlab::featanalysis::CorrelationMatrix& m) {
  std::ostringstream os;
  os << "feature";
  for (const auto& name : m.feature_names) os << ',' << name;
  os << '\n';
  for (std::size_t i = 0; i < m.size(); ++i) {
    os << m.feature_names[i];
    for (std::size_t j = 0; j < m.size(); ++j) {
      os << ',';
      if (m.cells[i][j]) {
        os << cjlab::format_number(*m.cells[i][j]);
      } else {
        os << "undefined";
      }
    }
    os << '\n';
  }
  return os.str();
}

int cmd_correlate(const std::string& in, const std::string& out_dir,
                  std::uint64_t seed) {
  RunStatus status;
  status.command = "correlate";
  status.seed = seed;

  std::ifstream input(in);
  if (!input) {
    std::cerr << "error: cannot read " << in << "\n";
    return 2;
  }
  cjlab::FeatureTable table;
  try {
    table = cjlab::read_feature_csv(input);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  fs::create_directories(out_dir);
  std::vector<std::string> names;
  for (auto n : cjlab::jsmetrics::kFeatureNames) names.emplace_back(n);

  std::map<std::string, cjlab::featanalysis::CorrelationMatrix> matrices;
  for (const std::string& label : table.labels_in_order()) {
    std::vector<std::vector<double>> rows;
    for (const auto& row : table.rows) {
      if (row.label == label) {
        rows.emplace_back(row.values.begin(), row.values.end());
      }
    }
    if (rows.size() < 2) {
      std::cerr << "warning: class '" << label
                << "' has fewer than two rows; no matrix\n";
      ++status.warnings;
      continue;
    }
    auto matrix = cjlab::featanalysis::correlation_matrix(rows, names);
    const std::string path =
        (fs::path(out_dir) / ("correlation_" + label + ".csv")).string();
    write_text(path, matrix_csv(matrix));
    status.outputs.push_back(path);
    matrices.emplace(label, std::move(matrix));
    ++status.rows;
  }

  std::string selected_line = "selected_features:";
  if (matrices.count("cryptojacking") && matrices.count("malicious") &&
      matrices.count("benign")) {
    const auto selected = cjlab::featanalysis::significant_features(
        matrices.at("cryptojacking"), matrices.at("malicious"),
        matrices.at("benign"));
    for (const auto& name : selected) selected_line += " " + name;
  } else {
    std::cerr << "warning: need cryptojacking/malicious/benign matrices for "
                 "the selection report\n";
    ++status.warnings;
    selected_line += " (unavailable)";
  }
  const std::string report =
      (fs::path(out_dir) / "selected_features.txt").string();
  write_text(report, selected_line + "\n");
  status.outputs.push_back(report);

  write_summary(status, (fs::path(out_dir) / "correlate").string());
  print_summary_line(status, std::to_string(status.rows) + " matrice(s) -> " +
                                 out_dir);
  return 0;
}

// ---------------------------------------------------------------------------
// classify

int cmd_classify(const std::string& in, const std::string& out,
                 const std::string& models_flag, double split, int reps,
                 std::uint64_t seed, const std::string& knn_metric,
                 int max_depth, int jobs, const std::string& format) {
  RunStatus status;
  status.command = "classify";
  status.seed = seed;

  std::ifstream input(in);
  if (!input) {
    std::cerr << "error: cannot read " << in << "\n";
    return 2;
  }
  cjlab::FeatureTable table;
  try {
    table = cjlab::read_feature_csv(input);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  cjlab::classifier::Dataset data;
  std::vector<std::string> labels = table.labels_in_order();
  std::sort(labels.begin(), labels.end());
  data.class_names = labels;
  for (const auto& row : table.rows) {
    data.samples.emplace_back(row.values.begin(), row.values.end());
    data.labels.push_back(static_cast<int>(
        std::find(labels.begin(), labels.end(), row.label) - labels.begin()));
  }

  std::vector<cjlab::classifier::ModelKind> kinds;
  std::stringstream list(models_flag);
  std::string item;
  while (std::getline(list, item, ',')) {
    auto kind = cjlab::classifier::parse_model_name(item);
    if (!kind) {
      std::cerr << "error: unknown model '" << item
                << "' (expected lr,lda,knn,svm,rf)\n";
      return 2;
    }
    kinds.push_back(*kind);
  }

  cjlab::classifier::Hyperparams params;
  params.seed = seed;
  params.rf_max_depth = max_depth;
  params.knn_metric = knn_metric == "manhattan"
                          ? cjlab::classifier::DistanceMetric::Manhattan
                          : cjlab::classifier::DistanceMetric::Euclidean;
  cjlab::classifier::EvalProtocol protocol;
  protocol.train_fraction = split;
  protocol.repetitions = reps;
  protocol.seed = seed;
  protocol.jobs = jobs;

  cjlab::classifier::EvaluationReport report;
  try {
    report = cjlab::classifier::evaluate(data, kinds, params, protocol);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  if (format == "json") {
    ordered_json j;
    j["seed"] = seed;
    j["split"] = split;
    j["repetitions"] = reps;
    ordered_json scores = ordered_json::array();
    for (const auto& s : report.scores) {
      scores.push_back({{"model", cjlab::classifier::model_name(s.kind)},
                        {"f1", s.f1},
                        {"precision", s.precision},
                        {"recall", s.recall}});
    }
    j["scores"] = std::move(scores);
    write_text(out, j.dump(2) + "\n");
  } else {
    std::ostringstream os;
    os << "# seed=" << seed << " split=" << split << " reps=" << reps << "\n";
    os << "model,F1,precision,recall\n";
    for (const auto& s : report.scores) {
      os << cjlab::classifier::model_name(s.kind) << ','
         << cjlab::format_number(s.f1) << ','
         << cjlab::format_number(s.precision) << ','
         << cjlab::format_number(s.recall) << '\n';
    }
    write_text(out, os.str());
  }
  status.rows = report.scores.size();
  status.outputs = {out};
  write_summary(status, out);
  print_summary_line(status,
                     std::to_string(kinds.size()) + " model(s) -> " + out);
  return 0;
}

// ---------------------------------------------------------------------------
// simulate

int cmd_simulate(const std::string& scenario_flag, double alpha,
                 std::uint64_t hmax, std::uint64_t duration,
                 std::uint64_t seed, const std::string& out,
                 std::string frames_path, const std::string& blacklist_path,
                 const std::string& target, const std::string& transport) {
  RunStatus status;
  status.command = "simulate";
  status.seed = seed;

  const auto kind = cjlab::simnet::parse_scenario_name(scenario_flag);
  if (!kind) {
    std::cerr << "error: unknown scenario '" << scenario_flag
              << "' (expected direct|relay|keyless|benign-socket)\n";
    return 2;
  }

  cjlab::simnet::ScenarioParams params;
  params.alpha = alpha;
  params.h_max = hmax;
  params.duration_s = duration;
  params.seed = seed;
  params.target = target;
  params.transport = transport == "tcp"
                         ? cjlab::simnet::TransportKind::Tcp
                         : cjlab::simnet::TransportKind::InProcess;
  if (!blacklist_path.empty()) {
    std::ifstream bl(blacklist_path);
    if (!bl) {
      std::cerr << "error: cannot read blacklist " << blacklist_path << "\n";
      return 2;
    }
    params.blacklist = cjlab::simnet::load_blacklist(bl);
  }

  cjlab::simnet::ScenarioReport report;
  try {
    report = cjlab::simnet::run_scenario(*kind, params);
  } catch (const std::exception& e) {
    std::cerr << "error: scenario aborted: " << e.what() << "\n";
    return 2;
  }

  if (frames_path.empty()) frames_path = out + ".frames.jsonl";
  std::ostringstream frames;
  report.frame_log.write(frames);
  write_text(frames_path, frames.str());
  write_text(out, cjlab::simnet::report_to_json(report, frames_path) + "\n");

  status.rows = report.frame_log.records.size();
  status.outputs = {out, frames_path};
  write_summary(status, out);

  std::ostringstream line;
  line << report.scenario << ": " << report.total_accepted_hashes
       << " hashes credited";
  for (const auto& v : report.verdicts) {
    line << ", " << cjlab::simnet::detector_name(v.detector) << "="
         << (v.flagged ? "flagged" : "clear");
  }
  line << " -> " << out;
  print_summary_line(status, line.str());
  return 0;
}

// ---------------------------------------------------------------------------
// economics

int cmd_econ_device_table(const std::string& profiles_path,
                          const std::vector<double>& alphas,
                          const std::string& out, const std::string& format,
                          std::uint64_t seed) {
  RunStatus status;
  status.command = "economics";
  status.seed = seed;

  std::vector<cjlab::economics::DeviceProfile> profiles;
  try {
    if (profiles_path.empty()) {
      profiles = cjlab::economics::builtin_device_profiles();
    } else {
      std::ifstream in(profiles_path);
      if (!in) {
        std::cerr << "error: cannot read " << profiles_path << "\n";
        return 2;
      }
      profiles = cjlab::economics::load_device_profiles(in);
    }
    const auto rows = cjlab::economics::device_table(profiles, alphas);
    if (format == "json") {
      ordered_json j;
      j["seed"] = seed;
      ordered_json arr = ordered_json::array();
      for (const auto& r : rows) {
        arr.push_back({{"device", r.device},
                       {"alpha", r.alpha},
                       {"h", r.hash_rate},
                       {"P_xmr", r.profit_xmr},
                       {"P_usd", r.profit_usd},
                       {"L_usd", r.loss_usd},
                       {"gap_usd", r.gap_usd},
                       {"T_years", r.years_to_one_xmr}});
      }
      j["rows"] = std::move(arr);
      write_text(out, j.dump(2) + "\n");
    } else {
      write_text(out, cjlab::economics::device_table_csv(rows));
    }
    status.rows = rows.size();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  status.outputs = {out};
  write_summary(status, out);
  print_summary_line(status, std::to_string(status.rows) + " row(s) -> " + out);
  return 0;
}

int cmd_econ_website(double visits_millions, const std::string& duration,
                     double hashrate, const std::string& out,
                     std::uint64_t seed) {
  RunStatus status;
  status.command = "economics";
  status.seed = seed;
  try {
    cjlab::economics::WebsiteProfile profile;
    profile.name = "website";
    profile.monthly_visits = visits_millions * 1e6;
    profile.avg_visit_seconds = cjlab::economics::parse_duration_mmss(duration);
    profile.visitor_hash_rate = hashrate;
    const double usd = cjlab::economics::website_profit_usd(profile);
    std::ostringstream os;
    os << "monthly_visits,avg_visit_seconds,hash_rate,P_cj_usd\n"
       << cjlab::format_number(profile.monthly_visits) << ','
       << cjlab::format_number(profile.avg_visit_seconds) << ','
       << cjlab::format_number(profile.visitor_hash_rate) << ','
       << cjlab::format_number(usd) << '\n';
    if (!out.empty()) {
      write_text(out, os.str());
      status.outputs = {out};
      write_summary(status, out);
    }
    status.rows = 1;
    print_summary_line(status, "monthly cryptojacking revenue $" +
                                   cjlab::format_number(usd));
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

int cmd_econ_website_table(const std::string& dataset, const std::string& out,
                           std::uint64_t seed) {
  RunStatus status;
  status.command = "economics";
  status.seed = seed;
  const auto rows = dataset == "mining"
                        ? cjlab::economics::builtin_mining_websites()
                        : cjlab::economics::builtin_top_websites();
  write_text(out, cjlab::economics::website_table_csv(rows));
  status.rows = rows.size();
  status.outputs = {out};
  write_summary(status, out);
  print_summary_line(status, std::to_string(status.rows) + " row(s) -> " + out);
  return 0;
}

int cmd_econ_block_stats(const std::string& target, double hashrate,
                         std::uint64_t seed) {
  RunStatus status;
  status.command = "economics";
  status.seed = seed;
  try {
    const auto stats = cjlab::economics::block_stats(target, hashrate);
    std::cout << "block-stats: Pr=" << cjlab::format_number(stats.probability)
              << " H=" << cjlab::format_number(stats.expected_hashes)
              << " T_B=" << cjlab::format_number(stats.expected_seconds)
              << "s (seed " << seed << ")\n";
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"desk-scale cryptojacking laboratory"};
  app.require_subcommand(1);

  std::uint64_t seed = 0;
  std::string format = "csv";

  // analyze
  auto* analyze = app.add_subcommand(
      "analyze", "extract the 17 static features from a script corpus");
  std::string corpus, analyze_out = "features.csv", level = "script";
  int jobs = 1;
  analyze->add_option("--corpus", corpus, "corpus root directory")
      ->required();
  analyze->add_option("--out", analyze_out, "output table path");
  analyze->add_option("--format", format, "csv|json");
  analyze->add_option("--seed", seed, "run seed (recorded in the summary)");
  analyze->add_option("--jobs", jobs, "parallel file workers");
  analyze->add_option("--level", level, "script|website aggregation")
      ->check(CLI::IsMember({"script", "website"}));

  // correlate
  auto* correlate = app.add_subcommand(
      "correlate", "per-class correlation matrices + significant features");
  std::string correlate_in, correlate_out_dir = "correlation";
  correlate->add_option("--in", correlate_in, "feature csv")->required();
  correlate->add_option("--out-dir", correlate_out_dir, "output directory");
  correlate->add_option("--format", format, "csv (matrices are csv)");
  correlate->add_option("--seed", seed, "run seed");

  // classify
  auto* classify = app.add_subcommand(
      "classify", "repeated-holdout evaluation of the model bench");
  std::string classify_in, classify_out = "classify_report.csv";
  std::string models = "lr,lda,knn,svm,rf";
  std::string knn_metric = "euclidean";
  double split = 0.75;
  int reps = 20;
  classify->add_option("--in", classify_in, "feature csv")->required();
  classify->add_option("--out", classify_out, "report path");
  classify->add_option("--models", models, "comma list of lr,lda,knn,svm,rf");
  classify->add_option("--split", split, "train fraction");
  classify->add_option("--reps", reps, "repetitions");
  classify->add_option("--seed", seed, "protocol seed");
  classify->add_option("--knn-metric", knn_metric, "euclidean|manhattan")
      ->check(CLI::IsMember({"euclidean", "manhattan"}));
  int max_depth = 0;
  classify->add_option("--max-depth", max_depth,
                       "random-forest depth cap (0 = unlimited)");
  classify->add_option("--jobs", jobs, "parallel repetitions");
  classify->add_option("--format", format, "csv|json");

  // simulate
  auto* simulate = app.add_subcommand(
      "simulate", "run a dropzone/miner/relay/detector scenario");
  std::string scenario, simulate_out = "scenario.json", frames, blacklist;
  std::string target = "ffffff00", transport = "inproc";
  double alpha = 0.1;
  std::uint64_t hmax = 1000, duration = 30;
  simulate->add_option("--scenario", scenario,
                       "direct|relay|keyless|benign-socket")
      ->required();
  simulate->add_option("--alpha", alpha, "throttle in [0,1)");
  simulate->add_option("--hmax", hmax, "device peak hash rate, hashes/s");
  simulate->add_option("--duration", duration, "seconds of mining");
  simulate->add_option("--seed", seed, "scenario seed");
  simulate->add_option("--out", simulate_out, "report json path");
  simulate->add_option("--frames", frames, "frame log path (json-lines)");
  simulate->add_option("--blacklist", blacklist, "blacklist file");
  simulate->add_option("--target", target, "8-hex share target");
  simulate->add_option("--transport", transport, "inproc|tcp")
      ->check(CLI::IsMember({"inproc", "tcp"}));
  simulate->add_option("--format", format, "json");

  // economics
  auto* economics = app.add_subcommand(
      "economics", "profit/loss model tables and block statistics");
  economics->require_subcommand(1);

  auto* device_table = economics->add_subcommand(
      "device-table", "per-device per-throttle profit and loss");
  std::string profiles_path, econ_out = "device_table.csv";
  std::vector<double> alphas{0.1, 0.5, 0.9};
  device_table->add_option("--profiles", profiles_path,
                           "device profile json (default: built-ins)");
  device_table->add_option("--alphas", alphas, "throttle settings");
  device_table->add_option("--out", econ_out, "output path");
  device_table->add_option("--format", format, "csv|json");
  device_table->add_option("--seed", seed, "run seed");

  auto* website = economics->add_subcommand(
      "website", "monthly revenue if one website mined on its visitors");
  double visits = 0.0, hashrate = 20.0;
  std::string duration_mmss, website_out;
  website->add_option("--visits", visits, "monthly visits, in millions")
      ->required();
  website->add_option("--duration", duration_mmss, "average visit, mm:ss")
      ->required();
  website->add_option("--hashrate", hashrate, "visitor hash rate");
  website->add_option("--out", website_out, "optional csv path");
  website->add_option("--seed", seed, "run seed");

  auto* website_table = economics->add_subcommand(
      "website-table", "revenue table over the shipped traffic datasets");
  std::string dataset = "top";
  std::string table_out = "website_table.csv";
  website_table->add_option("--dataset", dataset, "top|mining")
      ->check(CLI::IsMember({"top", "mining"}));
  website_table->add_option("--out", table_out, "output path");
  website_table->add_option("--seed", seed, "run seed");

  auto* block_stats = economics->add_subcommand(
      "block-stats", "block probability / expected hashes / expected time");
  std::string bs_target;
  double network_rate = 1e6;
  block_stats->add_option("--target", bs_target, "hex target, up to 64 chars")
      ->required();
  block_stats->add_option("--hashrate", network_rate, "network hashes/s");
  block_stats->add_option("--seed", seed, "run seed");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*analyze) {
      return cmd_analyze(corpus, analyze_out, format, seed, jobs, level);
    }
    if (*correlate) {
      return cmd_correlate(correlate_in, correlate_out_dir, seed);
    }
    if (*classify) {
      return cmd_classify(classify_in, classify_out, models, split, reps,
                          seed, knn_metric, max_depth, jobs, format);
    }
    if (*simulate) {
      return cmd_simulate(scenario, alpha, hmax, duration, seed, simulate_out,
                          frames, blacklist, target, transport);
    }
    if (*device_table) {
      return cmd_econ_device_table(profiles_path, alphas, econ_out, format,
                                   seed);
    }
    if (*website) {
      return cmd_econ_website(visits, duration_mmss, hashrate, website_out,
                              seed);
    }
    if (*website_table) {
      return cmd_econ_website_table(dataset, table_out, seed);
    }
    if (*block_stats) {
      return cmd_econ_block_stats(bs_target, network_rate, seed);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
