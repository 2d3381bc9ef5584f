// scitrade: command-line pipeline over field-to-field citation flow
// matrices. Subcommands: build, metrics, dynamics, classify, stats, rank,
// synth. Exit codes: 0 success, 2 input/validation error, 3 internal error.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "scitrade/archive.hpp"
#include "scitrade/csv.hpp"
#include "scitrade/error.hpp"
#include "scitrade/ingest.hpp"
#include "scitrade/manifest.hpp"
#include "scitrade/report.hpp"
#include "scitrade/stats.hpp"
#include "scitrade/synth.hpp"
#include "scitrade/taxonomy.hpp"
#include "scitrade/trade_metrics.hpp"
#include "scitrade/version.hpp"

namespace {

namespace fs = std::filesystem;
using namespace scitrade;

std::string resolve_out_dir(const std::string& flag_value) {
  if (!flag_value.empty()) return flag_value;
  if (const char* env = std::getenv("SCITRADE_OUT_DIR"); env && *env) return env;
  return ".";
}

std::string ensure_out_dir(const std::string& flag_value) {
  std::string dir = resolve_out_dir(flag_value);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw ValidationError("cannot create output directory " + dir + ": " + ec.message());
  return dir;
}

void emit(const std::string& path, std::string_view content) {
  write_file(path, content);
  std::cout << "wrote " << path << "\n";
}

/// Reads and digests an input in one pass, recording it in the manifest.
struct InputFile {
  std::string path;
  std::string content;
};

InputFile load_input(RunManifest& manifest, const std::string& role, const std::string& path) {
  InputFile file{path, read_file(path)};
  manifest.inputs.push_back({role, path, sha256_hex(file.content)});
  return file;
}

RunManifest new_manifest() {
  RunManifest manifest;
  manifest.version = kVersion;
  return manifest;
}

template <typename Fn>
auto with_context(const std::string& path, Fn&& fn) {
  try {
    return fn();
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  } catch (const ValidationError& e) {
    throw ValidationError(path + ": " + e.what());
  }
}

// ---------------------------------------------------------------------------
// build

struct BuildOptions {
  std::string edges_path;
  std::string map_path;
  std::string universe_path;
  std::optional<int> year;
  bool lenient = false;
  std::string out_dir;
};

void cmd_build(const BuildOptions& opt) {
  RunManifest manifest = new_manifest();
  manifest.journal_policy = opt.lenient ? "lenient" : "strict";

  InputFile edges_file = load_input(manifest, "edges", opt.edges_path);
  InputFile map_file = load_input(manifest, "category_map", opt.map_path);
  std::optional<InputFile> universe_file;
  if (!opt.universe_path.empty()) {
    universe_file = load_input(manifest, "category_universe", opt.universe_path);
  }

  std::istringstream edges_in(edges_file.content);
  const std::vector<CitationEdge> edges =
      with_context(opt.edges_path, [&] { return parse_edges(edges_in); });

  std::istringstream map_in(map_file.content);
  std::optional<std::istringstream> universe_in;
  if (universe_file) universe_in.emplace(universe_file->content);
  const CategoryMap map = with_context(opt.map_path, [&] {
    return parse_category_map(map_in, universe_in ? &*universe_in : nullptr);
  });

  int year = 0;
  if (opt.year) {
    year = *opt.year;
  } else {
    const std::vector<int> years = edge_years(edges);
    if (years.size() != 1) {
      std::string list;
      for (int y : years) list += (list.empty() ? "" : ", ") + std::to_string(y);
      throw ValidationError(opt.edges_path + ": edge file spans years {" + list +
                            "}; select one with --year");
    }
    year = years.front();
  }
  manifest.years = {year};

  const JournalPolicy policy = opt.lenient ? JournalPolicy::Lenient : JournalPolicy::Strict;
  std::vector<SkippedEdge> skipped;
  const FieldFlowMatrix matrix = build_flow_matrix(edges, map, year, policy, &skipped);

  const std::string dir = ensure_out_dir(opt.out_dir);
  const std::string stem = dir + "/matrix_" + std::to_string(year);
  write_matrix_archive(matrix, manifest, stem + ".csv");
  std::cout << "wrote " << stem << ".csv\n";
  std::cout << "wrote " << stem << ".json\n";
  if (opt.lenient) {
    emit(dir + "/skipped_" + std::to_string(year) + ".csv", report::skipped_edges_csv(skipped));
  }
  std::cout << "fields " << matrix.size() << ", cell sum " << matrix.cell_sum()
            << ", journal-level total " << grand_total_citations(edges, year) << "\n";
}

// ---------------------------------------------------------------------------
// metrics

struct MetricsOptions {
  std::string matrix_path;
  std::string pubs_path;
  std::string out_dir;
  std::string format = "csv";
};

PublicationCounts load_publications(RunManifest& manifest, const std::string& path) {
  InputFile file = load_input(manifest, "publications", path);
  std::istringstream in(file.content);
  return with_context(path, [&] { return parse_publications(in); });
}

void cmd_metrics(const MetricsOptions& opt) {
  RunManifest manifest = new_manifest();
  load_input(manifest, "matrix", opt.matrix_path);
  const MatrixArchive archive = read_matrix_archive(opt.matrix_path);
  manifest.years = {archive.matrix.year()};
  manifest.journal_policy = archive.manifest.journal_policy;

  PublicationCounts publications;
  if (!opt.pubs_path.empty()) publications = load_publications(manifest, opt.pubs_path);

  const std::vector<FieldIndicators> indicators =
      all_indicators(archive.matrix, opt.pubs_path.empty() ? nullptr : &publications);

  const std::string dir = ensure_out_dir(opt.out_dir);
  const std::string stem = dir + "/indicators_" + std::to_string(archive.matrix.year());
  if (opt.format == "json") {
    emit(stem + ".json", report::indicators_json(indicators, manifest));
  } else {
    emit(stem + ".csv", report::indicators_csv(indicators));
  }
}

// ---------------------------------------------------------------------------
// dynamics

struct DynamicsOptions {
  std::string from_path;
  std::string to_path;
  std::string pubs_path;
  std::optional<Count> total_from;
  std::optional<Count> total_to;
  std::string out_dir;
  std::string format = "csv";
};

void cmd_dynamics(const DynamicsOptions& opt) {
  RunManifest manifest = new_manifest();
  load_input(manifest, "matrix_from", opt.from_path);
  load_input(manifest, "matrix_to", opt.to_path);
  const MatrixArchive from = read_matrix_archive(opt.from_path);
  const MatrixArchive to = read_matrix_archive(opt.to_path);
  manifest.years = {from.matrix.year(), to.matrix.year()};

  PublicationCounts publications;
  if (!opt.pubs_path.empty()) publications = load_publications(manifest, opt.pubs_path);

  std::vector<DynamicsRecord> records =
      all_dynamics(from.matrix, to.matrix, opt.pubs_path.empty() ? nullptr : &publications);

  if (opt.total_from.has_value() != opt.total_to.has_value()) {
    throw ValidationError("--total-from and --total-to must be given together");
  }
  if (opt.total_from) {
    const double increment = overall_increment(*opt.total_from, *opt.total_to);
    for (DynamicsRecord& rec : records) {
      rec.overall_increment = increment;
      if (rec.export_growth) rec.above_overall = *rec.export_growth > increment;
    }
  }

  const std::string dir = ensure_out_dir(opt.out_dir);
  const std::string stem = dir + "/dynamics_" + std::to_string(from.matrix.year()) + "_" +
                           std::to_string(to.matrix.year());
  if (opt.format == "json") {
    emit(stem + ".json", report::dynamics_json(records, manifest));
  } else {
    emit(stem + ".csv", report::dynamics_csv(records));
  }
}

// ---------------------------------------------------------------------------
// classify

struct ClassifyOptions {
  std::string matrix_path;
  std::vector<std::string> dynamics_paths;
  std::string config_path;
  std::string out_dir;
};

void cmd_classify(const ClassifyOptions& opt) {
  RunManifest manifest = new_manifest();
  load_input(manifest, "matrix", opt.matrix_path);
  const MatrixArchive archive = read_matrix_archive(opt.matrix_path);
  manifest.years = {archive.matrix.year()};

  taxonomy::ClassificationConfig config;
  if (!opt.config_path.empty()) {
    InputFile file = load_input(manifest, "config", opt.config_path);
    config = taxonomy::config_from_json(file.content);
    manifest.config_json = file.content;
  }

  std::vector<std::vector<DynamicsRecord>> periods;
  std::vector<double> increments;
  for (const std::string& path : opt.dynamics_paths) {
    InputFile file = load_input(manifest, "dynamics", path);
    std::istringstream in(file.content);
    std::vector<DynamicsRecord> records =
        with_context(path, [&] { return report::parse_dynamics_csv(in); });
    std::optional<double> increment;
    for (const DynamicsRecord& rec : records) {
      if (rec.overall_increment) {
        increment = *rec.overall_increment;
        break;
      }
    }
    if (!increment) {
      throw ValidationError(path +
                            ": no overall_increment column values; rerun dynamics with "
                            "--total-from/--total-to");
    }
    periods.push_back(std::move(records));
    increments.push_back(*increment);
  }

  const std::vector<FieldIndicators> indicators = all_indicators(archive.matrix);
  const taxonomy::ClassificationReport report_data =
      taxonomy::classify(indicators, periods, increments, config);

  const std::string dir = ensure_out_dir(opt.out_dir);
  const std::string stem = dir + "/classification_" + std::to_string(archive.matrix.year());
  emit(stem + ".csv", report::classification_csv(report_data));
  emit(stem + ".json", report::classification_json(report_data, manifest));
}

// ---------------------------------------------------------------------------
// stats

struct StatsOptions {
  std::string input_path;
  std::string column;
  std::string corr_with;
  int bins = 10;
  std::string out_dir;
  std::string format = "csv";
};

void cmd_stats(const StatsOptions& opt) {
  RunManifest manifest = new_manifest();
  InputFile file = load_input(manifest, "table", opt.input_path);
  std::istringstream in(file.content);
  const report::Table table = with_context(opt.input_path, [&] { return report::read_table(in); });

  const std::size_t column = table.require_column(opt.column);
  const std::vector<double> xs = report::numeric_column(table, column);

  const stats::DistributionSummary summary = stats::summarize(xs);
  const stats::PlotData plots = stats::plot_data(xs, opt.bins);

  const std::string dir = ensure_out_dir(opt.out_dir);
  if (opt.format == "json") {
    emit(dir + "/stats_" + opt.column + ".json", report::summary_json(summary, opt.column, manifest));
  } else {
    emit(dir + "/stats_" + opt.column + ".csv", report::summary_csv(summary, opt.column));
  }
  emit(dir + "/histogram_" + opt.column + ".csv", report::histogram_csv(plots.histogram));
  emit(dir + "/qq_" + opt.column + ".csv", report::qq_csv(plots.qq));

  if (!opt.corr_with.empty()) {
    const std::size_t other = table.require_column(opt.corr_with);
    std::vector<double> xs_paired, ys_paired;
    for (const auto& row : table.rows) {
      if (row[column].empty() || row[other].empty()) continue;
      xs_paired.push_back(std::strtod(row[column].c_str(), nullptr));
      ys_paired.push_back(std::strtod(row[other].c_str(), nullptr));
    }
    const auto rho = stats::spearman(xs_paired, ys_paired);
    std::string body = "column_x,column_y,n,rho,rho_squared\n";
    body += csv::join({opt.column, opt.corr_with, std::to_string(xs_paired.size()),
                       rho ? csv::format_double(rho->rho) : std::string(),
                       rho ? csv::format_double(rho->rho_squared) : std::string()});
    body.push_back('\n');
    emit(dir + "/correlation_" + opt.column + "_" + opt.corr_with + ".csv", body);
  }
}

// ---------------------------------------------------------------------------
// rank

struct RankOptions {
  std::string input_path;
  std::string column;
  std::size_t top_k = 10;
  std::string direction = "desc";
  std::string out_dir;
};

void cmd_rank(const RankOptions& opt) {
  RunManifest manifest = new_manifest();
  InputFile file = load_input(manifest, "table", opt.input_path);
  std::istringstream in(file.content);
  const report::Table table = with_context(opt.input_path, [&] { return report::read_table(in); });

  const std::string body = report::rank_csv(table, opt.column, opt.top_k, opt.direction == "desc");
  const std::string dir = ensure_out_dir(opt.out_dir);
  emit(dir + "/rank_" + opt.column + ".csv", body);
}

// ---------------------------------------------------------------------------
// synth

struct SynthOptions {
  std::string config_path;
  std::string out_dir;
};

void cmd_synth(const SynthOptions& opt) {
  RunManifest manifest = new_manifest();
  InputFile file = load_input(manifest, "synth_spec", opt.config_path);
  const synth::SynthSpec spec = synth::spec_from_json(file.content);
  manifest.config_json = file.content;
  manifest.years = spec.years;

  const synth::SynthOutput data = synth::generate(spec);
  const std::string dir = ensure_out_dir(opt.out_dir);
  for (const std::string& name : synth::write_dataset(data, spec, dir)) {
    std::cout << "wrote " << dir << "/" << name << "\n";
  }
  emit(dir + "/manifest.json", manifest_to_json(manifest) + "\n");
}

int run(int argc, char** argv) {
  CLI::App app{"scientific-trading indicators over journal citation flows"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  BuildOptions build_opt;
  CLI::App* build = app.add_subcommand("build", "aggregate journal edges into a field flow matrix");
  build->add_option("--edges", build_opt.edges_path, "edges CSV")->required();
  build->add_option("--map", build_opt.map_path, "journal,category CSV")->required();
  build->add_option("--universe", build_opt.universe_path, "category,display_name CSV");
  int build_year = 0;
  CLI::Option* year_opt = build->add_option("--year", build_year, "year to aggregate");
  CLI::Option* strict = build->add_flag("--strict", "fail on unmapped journals (default)");
  build->add_flag("--lenient", build_opt.lenient, "drop unmapped edges into a skipped report")
      ->excludes(strict);
  build->add_option("--out", build_opt.out_dir, "output directory");

  MetricsOptions metrics_opt;
  CLI::App* metrics = app.add_subcommand("metrics", "per-field indicator table from a matrix");
  metrics->add_option("--matrix", metrics_opt.matrix_path, "matrix archive CSV")->required();
  metrics->add_option("--pubs", metrics_opt.pubs_path, "publications CSV");
  metrics->add_option("--out", metrics_opt.out_dir, "output directory");
  metrics->add_option("--format", metrics_opt.format, "csv|json")
      ->check(CLI::IsMember({"csv", "json"}));

  DynamicsOptions dynamics_opt;
  CLI::App* dynamics = app.add_subcommand("dynamics", "export growth between two matrices");
  dynamics->add_option("--from", dynamics_opt.from_path, "base-year matrix CSV")->required();
  dynamics->add_option("--to", dynamics_opt.to_path, "later-year matrix CSV")->required();
  dynamics->add_option("--pubs", dynamics_opt.pubs_path, "publications CSV");
  Count total_from = 0, total_to = 0;
  CLI::Option* tf = dynamics->add_option("--total-from", total_from,
                                         "journal-level grand total of the base year");
  CLI::Option* tt = dynamics->add_option("--total-to", total_to,
                                         "journal-level grand total of the later year");
  dynamics->add_option("--out", dynamics_opt.out_dir, "output directory");
  dynamics->add_option("--format", dynamics_opt.format, "csv|json")
      ->check(CLI::IsMember({"csv", "json"}));

  ClassifyOptions classify_opt;
  CLI::App* classify = app.add_subcommand("classify", "assign fields to characteristic types A-J");
  classify->add_option("--matrix", classify_opt.matrix_path, "matrix archive CSV")->required();
  classify->add_option("--dynamics", classify_opt.dynamics_paths,
                       "dynamics CSV per period (repeatable)");
  classify->add_option("--config", classify_opt.config_path, "classification config JSON");
  classify->add_option("--out", classify_opt.out_dir, "output directory");

  StatsOptions stats_opt;
  CLI::App* stats_cmd = app.add_subcommand("stats", "distribution summary and plot data");
  stats_cmd->add_option("--input", stats_opt.input_path, "indicator CSV")->required();
  stats_cmd->add_option("--column", stats_opt.column, "column to analyze")->required();
  stats_cmd->add_option("--bins", stats_opt.bins, "histogram bin count");
  stats_cmd->add_option("--corr-with", stats_opt.corr_with,
                        "second column for a Spearman correlation");
  stats_cmd->add_option("--out", stats_opt.out_dir, "output directory");
  stats_cmd->add_option("--format", stats_opt.format, "csv|json")
      ->check(CLI::IsMember({"csv", "json"}));

  RankOptions rank_opt;
  CLI::App* rank = app.add_subcommand("rank", "top-k table by a numeric column");
  rank->add_option("--input", rank_opt.input_path, "indicator CSV")->required();
  rank->add_option("--column", rank_opt.column, "column to rank by")->required();
  rank->add_option("--top", rank_opt.top_k, "rows to keep");
  rank->add_option("--direction", rank_opt.direction, "asc|desc")
      ->check(CLI::IsMember({"asc", "desc"}));
  rank->add_option("--out", rank_opt.out_dir, "output directory");

  SynthOptions synth_opt;
  CLI::App* synth_cmd = app.add_subcommand("synth", "generate a synthetic journal dataset");
  synth_cmd->add_option("--config", synth_opt.config_path, "synth spec JSON")->required();
  synth_cmd->add_option("--out", synth_opt.out_dir, "output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (year_opt->count()) build_opt.year = build_year;
  if (tf->count()) dynamics_opt.total_from = total_from;
  if (tt->count()) dynamics_opt.total_to = total_to;

  if (build->parsed()) cmd_build(build_opt);
  if (metrics->parsed()) cmd_metrics(metrics_opt);
  if (dynamics->parsed()) cmd_dynamics(dynamics_opt);
  if (classify->parsed()) cmd_classify(classify_opt);
  if (stats_cmd->parsed()) cmd_stats(stats_opt);
  if (rank->parsed()) cmd_rank(rank_opt);
  if (synth_cmd->parsed()) cmd_synth(synth_opt);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}
