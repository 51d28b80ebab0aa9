#include "ewm/cli.hpp"

#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "ewm/core_model.hpp"
#include "ewm/ingest.hpp"
#include "ewm/report.hpp"
#include "ewm/scoring.hpp"

namespace ewm {
namespace {

namespace fs = std::filesystem;

struct RunConfig {
  std::string input;
  std::string schema = "default";
  std::string method = "continuous";
  std::string weight_rule = "paper";
  std::string bandwidth = "silverman";
  bool no_boundary_correction = false;
  std::size_t quadrature_points = QuadratureConfig::kDefaultPoints;
  double scale = 100.0;
  std::string out_dir;
  std::string dump_normalized;
  std::string dump_cdf;
  std::size_t cdf_points = 101;
  std::size_t threads = 0;
  std::string format = "text";
};

std::optional<double> parse_bandwidth(const std::string& text) {
  if (text == "silverman") return std::nullopt;
  double h = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), h);
  if (ec != std::errc{} || ptr != text.data() + text.size() || !(h > 0.0) || !std::isfinite(h)) {
    throw CLI::ValidationError("--bandwidth", "expected 'silverman' or a positive number, got '" +
                                                  text + "'");
  }
  return h;
}

void write_file(const fs::path& path, const std::string& content) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw Error(ErrorCode::IoError, fmt::format("cannot write '{}'", path.string()));
  file << content;
  if (!file) throw Error(ErrorCode::IoError, fmt::format("failed writing '{}'", path.string()));
}

EvaluateOptions to_options(const RunConfig& cfg) {
  EvaluateOptions opts;
  opts.method = cfg.method == "discrete" ? EntropyMethod::Discrete : EntropyMethod::Continuous;
  opts.weight_rule = cfg.weight_rule == "classic" ? WeightRule::Classic : WeightRule::Paper;
  opts.bandwidth = parse_bandwidth(cfg.bandwidth);
  opts.boundary_correction = !cfg.no_boundary_correction;
  opts.quadrature = QuadratureConfig(cfg.quadrature_points);
  opts.scale = cfg.scale;
  opts.threads = cfg.threads;
  return opts;
}

Schema load_schema(const RunConfig& cfg) {
  return cfg.schema == "default" ? default_schema() : load_schema_file(cfg.schema);
}

void note_dropped(const IngestReport& report, std::ostream& err) {
  if (report.rows_dropped == 0) return;
  err << fmt::format("note: dropped {} of {} row(s) with missing or unparseable values:",
                     report.rows_dropped, report.rows_read);
  for (const auto& id : report.dropped_ids) err << ' ' << (id.empty() ? "<no id>" : id);
  err << '\n';
}

void write_dumps(const RunConfig& cfg, const RawDataset& dataset, const Evaluation& evaluation) {
  if (!cfg.dump_normalized.empty()) {
    write_file(cfg.dump_normalized, normalized_csv(dataset.entity_ids(), evaluation.normalized));
  }
  if (!cfg.dump_cdf.empty()) {
    const auto& schema = evaluation.normalized.schema();
    for (std::size_t j = 0; j < evaluation.cdfs.size(); ++j) {
      write_file(fs::path(cfg.dump_cdf) / fmt::format("cdf_{}.csv", schema[j].name),
                 cdf_csv(evaluation.cdfs[j], cfg.cdf_points));
    }
  }
}

int cmd_evaluate(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto options = to_options(cfg);
  const auto ingest = load_csv_file(cfg.input, load_schema(cfg));
  note_dropped(ingest.report, err);
  const auto& dataset = ingest.dataset;
  const auto evaluation = run_pipeline(dataset, options);
  const auto& report = evaluation.report;
  const auto& schema = dataset.schema();

  out << "Ranking\n\n" << ranking_table(dataset.entity_ids(), report) << '\n';
  out << "Entropy and weight of indicators\n\n"
      << weights_table(schema, report.entropies(), report.weights()) << '\n';
  out << "Descriptive statistics of score\n\n" << stats_block(report.stats());

  if (!cfg.out_dir.empty()) {
    const fs::path dir(cfg.out_dir);
    write_file(dir / "scores.csv", scores_csv(dataset.entity_ids(), report));
    write_file(dir / "weights.csv", weights_csv(schema, report.entropies(), report.weights()));
    write_file(dir / "stats.csv", stats_csv(report.stats()));
  }
  write_dumps(cfg, dataset, evaluation);
  return kExitOk;
}

int cmd_weights(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto options = to_options(cfg);
  const auto ingest = load_csv_file(cfg.input, load_schema(cfg));
  note_dropped(ingest.report, err);
  const auto evaluation = run_pipeline(ingest.dataset, options);
  const auto& report = evaluation.report;
  const auto& schema = ingest.dataset.schema();

  if (cfg.format == "csv") {
    out << weights_csv(schema, report.entropies(), report.weights());
  } else {
    out << weights_table(schema, report.entropies(), report.weights());
  }
  if (!cfg.out_dir.empty()) {
    write_file(fs::path(cfg.out_dir) / "weights.csv",
               weights_csv(schema, report.entropies(), report.weights()));
  }
  write_dumps(cfg, ingest.dataset, evaluation);
  return kExitOk;
}

int cmd_validate(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto ingest = load_csv_file(cfg.input, load_schema(cfg));
  note_dropped(ingest.report, err);
  const auto findings = validate(ingest.dataset);
  for (const auto& f : findings) {
    err << fmt::format("{}: indicator '{}'{}: {}\n", to_string(f.kind), f.indicator,
                       f.entity_id ? fmt::format(", entity '{}'", *f.entity_id) : std::string(),
                       f.message);
  }
  if (!findings.empty()) return kExitDataError;
  out << fmt::format("ok: {} row(s) read, {} dropped, {} row(s) x {} indicator(s) evaluable\n",
                     ingest.report.rows_read, ingest.report.rows_dropped, ingest.dataset.rows(),
                     ingest.dataset.cols());
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Entropy-weighted composite scoring of multi-indicator data", "ewm"};
  app.set_version_flag("--version",
                       fmt::format("ewm {} (schema format {})", kToolVersion, kSchemaFormatVersion));
  app.set_config("--config", "", "TOML/INI file with option defaults; command-line flags win");
  app.require_subcommand(1);

  RunConfig cfg;
  app.add_option("--input", cfg.input, "Input CSV; first column 'entity_id'");
  app.add_option("--schema", cfg.schema, "Schema JSON file, or 'default'")->capture_default_str();
  app.add_option("--method", cfg.method, "Entropy method")
      ->check(CLI::IsMember({"continuous", "discrete"}))
      ->capture_default_str();
  app.add_option("--weight-rule", cfg.weight_rule, "paper: w ~ H, classic: w ~ 1 - H")
      ->check(CLI::IsMember({"paper", "classic"}))
      ->capture_default_str();
  app.add_option("--bandwidth", cfg.bandwidth, "Kernel bandwidth: 'silverman' or a positive number")
      ->check(CLI::Validator(
          [](std::string& s) {
            try {
              parse_bandwidth(s);
            } catch (const CLI::ValidationError& e) {
              return std::string("expected 'silverman' or a positive number");
            }
            return std::string();
          },
          "silverman|H"))
      ->capture_default_str();
  app.add_flag("--no-boundary-correction", cfg.no_boundary_correction,
               "Use the raw kernel CDF clamped to [0,1]");
  app.add_option("--quadrature-points", cfg.quadrature_points, "Simpson grid size (odd, >= 3)")
      ->check(CLI::Validator(
          [](std::string& s) {
            std::size_t v = 0;
            auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
            if (ec != std::errc{} || ptr != s.data() + s.size() || v < 3 || v % 2 == 0) {
              return std::string("quadrature points must be an odd integer >= 3");
            }
            return std::string();
          },
          "ODD"))
      ->capture_default_str();
  app.add_option("--scale", cfg.scale, "Score multiplier")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--out-dir", cfg.out_dir, "Directory for scores.csv, weights.csv, stats.csv");
  app.add_option("--dump-normalized", cfg.dump_normalized, "Write the normalized matrix as CSV");
  app.add_option("--dump-cdf", cfg.dump_cdf, "Directory for per-indicator cdf_<name>.csv files");
  app.add_option("--cdf-points", cfg.cdf_points, "Grid points per CDF dump")
      ->check(CLI::Range(std::size_t{2}, std::size_t{1'000'001}))
      ->capture_default_str();
  app.add_option("--threads", cfg.threads, "Worker threads; 0 uses every processor")
      ->capture_default_str();
  app.add_option("--format", cfg.format, "Output format of the weights subcommand")
      ->check(CLI::IsMember({"text", "csv"}))
      ->capture_default_str();

  auto* evaluate_cmd = app.add_subcommand("evaluate", "Score and rank every entity");
  auto* weights_cmd = app.add_subcommand("weights", "Print indicator entropies and weights");
  auto* validate_cmd = app.add_subcommand("validate", "Check the input without writing files");
  for (auto* sub : {evaluate_cmd, weights_cmd, validate_cmd}) sub->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  if (cfg.input.empty()) {
    err << "error: --input is required\n";
    return kExitUsage;
  }

  try {
    if (evaluate_cmd->parsed()) return cmd_evaluate(cfg, out, err);
    if (weights_cmd->parsed()) return cmd_weights(cfg, out, err);
    return cmd_validate(cfg, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitDataError;
  } catch (const fs::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitDataError;
  }
}

}  // namespace ewm
