#include "scitrade/report.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <istream>

#include <nlohmann/json.hpp>

#include "scitrade/csv.hpp"

namespace scitrade::report {

namespace {

using nlohmann::json;

std::string opt_cell(const std::optional<double>& value) {
  return value ? csv::format_double(*value) : std::string();
}

std::string opt_cell(const std::optional<Count>& value) {
  return value ? std::to_string(*value) : std::string();
}

json opt_json(const std::optional<double>& value) {
  return value ? json(csv::round_sig6(*value)) : json(nullptr);
}

json opt_json(const std::optional<Count>& value) { return value ? json(*value) : json(nullptr); }

json manifest_json(const RunManifest& manifest) { return json::parse(manifest_to_json(manifest)); }

double parse_double(const std::string& cell, std::size_t line) {
  char* end = nullptr;
  double value = std::strtod(cell.c_str(), &end);
  if (end != cell.c_str() + cell.size() || cell.empty()) {
    throw ParseError("expected number, got \"" + cell + "\"", line);
  }
  return value;
}

}  // namespace

std::optional<std::size_t> Table::column(std::string_view name) const {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] == name) return i;
  }
  return std::nullopt;
}

std::size_t Table::require_column(std::string_view name) const {
  if (auto index = column(name)) return *index;
  std::string valid;
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (i) valid += ", ";
    valid += header[i];
  }
  throw LookupError("unknown column \"" + std::string(name) + "\" (valid columns: " + valid + ")");
}

Table read_table(std::istream& in) {
  csv::Reader reader(in);
  Table table;
  if (!reader.next(table.header)) throw ParseError("empty table: missing header");
  std::vector<std::string> fields;
  while (reader.next(fields)) {
    if (fields.size() != table.header.size()) {
      throw ParseError("expected " + std::to_string(table.header.size()) + " fields, got " +
                           std::to_string(fields.size()),
                       reader.line_number());
    }
    table.rows.push_back(fields);
  }
  return table;
}

std::vector<double> numeric_column(const Table& table, std::size_t column) {
  std::vector<double> out;
  out.reserve(table.rows.size());
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    const std::string& cell = table.rows[r][column];
    if (cell.empty()) continue;
    out.push_back(parse_double(cell, r + 2));  // +2: header is line 1
  }
  return out;
}

std::string indicators_csv(std::span<const FieldIndicators> indicators) {
  std::string out =
      "field,year,exports,imports,self_citations,ratio,self_dependence,net_balance,"
      "positive_surplus,hub_size,export_partner_count,publications\n";
  for (const FieldIndicators& ind : indicators) {
    out += csv::join({ind.field, std::to_string(ind.year), std::to_string(ind.exports),
                      std::to_string(ind.imports), std::to_string(ind.self_citations),
                      opt_cell(ind.export_import_ratio), opt_cell(ind.self_dependence),
                      std::to_string(ind.net_balance), std::to_string(ind.positive_surplus),
                      std::to_string(ind.hub_size), std::to_string(ind.export_partner_count),
                      opt_cell(ind.publications)});
    out.push_back('\n');
  }
  return out;
}

std::string indicators_json(std::span<const FieldIndicators> indicators,
                            const RunManifest& manifest) {
  json rows = json::array();
  for (const FieldIndicators& ind : indicators) {
    rows.push_back({{"field", ind.field},
                    {"year", ind.year},
                    {"exports", ind.exports},
                    {"imports", ind.imports},
                    {"self_citations", ind.self_citations},
                    {"ratio", opt_json(ind.export_import_ratio)},
                    {"self_dependence", opt_json(ind.self_dependence)},
                    {"net_balance", ind.net_balance},
                    {"positive_surplus", ind.positive_surplus},
                    {"hub_size", ind.hub_size},
                    {"export_partner_count", ind.export_partner_count},
                    {"publications", opt_json(ind.publications)}});
  }
  return json{{"manifest", manifest_json(manifest)}, {"indicators", rows}}.dump(2) + "\n";
}

std::string dynamics_csv(std::span<const DynamicsRecord> records) {
  std::string out =
      "field,year_from,year_to,exports_from,exports_to,export_growth,publications_from,"
      "publications_to,publication_growth,overall_increment,above_overall,note\n";
  for (const DynamicsRecord& rec : records) {
    std::string above;
    if (rec.above_overall) above = *rec.above_overall ? "true" : "false";
    out += csv::join({rec.field, std::to_string(rec.year_from), std::to_string(rec.year_to),
                      std::to_string(rec.exports_from), std::to_string(rec.exports_to),
                      opt_cell(rec.export_growth), opt_cell(rec.publications_from),
                      opt_cell(rec.publications_to), opt_cell(rec.publication_growth),
                      opt_cell(rec.overall_increment), above, rec.note});
    out.push_back('\n');
  }
  return out;
}

std::string dynamics_json(std::span<const DynamicsRecord> records, const RunManifest& manifest) {
  json rows = json::array();
  for (const DynamicsRecord& rec : records) {
    json row{{"field", rec.field},
             {"year_from", rec.year_from},
             {"year_to", rec.year_to},
             {"exports_from", rec.exports_from},
             {"exports_to", rec.exports_to},
             {"export_growth", opt_json(rec.export_growth)},
             {"publications_from", opt_json(rec.publications_from)},
             {"publications_to", opt_json(rec.publications_to)},
             {"publication_growth", opt_json(rec.publication_growth)},
             {"overall_increment", opt_json(rec.overall_increment)},
             {"above_overall", rec.above_overall ? json(*rec.above_overall) : json(nullptr)}};
    if (!rec.note.empty()) row["note"] = rec.note;
    rows.push_back(std::move(row));
  }
  return json{{"manifest", manifest_json(manifest)}, {"dynamics", rows}}.dump(2) + "\n";
}

namespace {

std::string types_string(const std::vector<taxonomy::TradeType>& types) {
  std::string out;
  for (taxonomy::TradeType t : types) out.push_back(taxonomy::to_char(t));
  return out;
}

json resolved_config_json(const taxonomy::ResolvedConfig& config) {
  return json{{"importer_ratio_max", csv::round_sig6(config.importer_ratio_max)},
              {"exporter_ratio_min", csv::round_sig6(config.exporter_ratio_min)},
              {"dependence_split", csv::round_sig6(config.dependence_split)},
              {"dependence_split_is_median", config.dependence_split_is_median},
              {"impact_split", csv::round_sig6(config.impact_split)},
              {"impact_split_is_median", config.impact_split_is_median},
              {"exclude", config.exclude}};
}

}  // namespace

std::string classification_csv(const taxonomy::ClassificationReport& report) {
  std::string out = "field,dependence,role,impact,dynamics,types\n";
  for (const taxonomy::TradeClassification& c : report.classifications) {
    out += csv::join({c.field, std::string(taxonomy::to_string(c.dependence)),
                      std::string(taxonomy::to_string(c.role)),
                      std::string(taxonomy::to_string(c.impact)),
                      std::string(taxonomy::to_string(c.dynamics)), types_string(c.types)});
    out.push_back('\n');
  }
  return out;
}

std::string classification_json(const taxonomy::ClassificationReport& report,
                                const RunManifest& manifest) {
  json rows = json::array();
  for (const taxonomy::TradeClassification& c : report.classifications) {
    rows.push_back({{"field", c.field},
                    {"dependence", taxonomy::to_string(c.dependence)},
                    {"role", taxonomy::to_string(c.role)},
                    {"impact", taxonomy::to_string(c.impact)},
                    {"dynamics", taxonomy::to_string(c.dynamics)},
                    {"types", types_string(c.types)}});
  }

  const taxonomy::BandCounts counts = taxonomy::band_counts(report.classifications);
  json cells = json::array();
  for (const auto& [cell, count] : counts.cells) {
    cells.push_back({{"dependence", taxonomy::to_string(std::get<0>(cell))},
                     {"role", taxonomy::to_string(std::get<1>(cell))},
                     {"impact", taxonomy::to_string(std::get<2>(cell))},
                     {"count", count}});
  }
  json per_type;
  for (std::size_t t = 0; t < counts.per_type.size(); ++t) {
    per_type[std::string(1, static_cast<char>('A' + t))] = counts.per_type[t];
  }

  return json{{"manifest", manifest_json(manifest)},
              {"year", report.year},
              {"config", resolved_config_json(report.config)},
              {"classifications", rows},
              {"band_counts", json{{"cells", cells}, {"per_type", per_type}}}}
             .dump(2) +
         "\n";
}

std::string summary_csv(const stats::DistributionSummary& summary, std::string_view column) {
  std::string out =
      "column,n,mean,sd,skewness,se_skewness,kurtosis,se_kurtosis,ks_statistic,ks_p_value,note\n";
  out += csv::join({std::string(column), std::to_string(summary.n), csv::format_double(summary.mean),
                    csv::format_double(summary.sd), opt_cell(summary.skewness),
                    csv::format_double(summary.se_skewness), opt_cell(summary.kurtosis),
                    csv::format_double(summary.se_kurtosis), opt_cell(summary.ks_statistic),
                    opt_cell(summary.ks_p_value), summary.note});
  out.push_back('\n');
  return out;
}

std::string summary_json(const stats::DistributionSummary& summary, std::string_view column,
                         const RunManifest& manifest) {
  json j{{"manifest", manifest_json(manifest)},
         {"column", std::string(column)},
         {"n", summary.n},
         {"mean", csv::round_sig6(summary.mean)},
         {"sd", csv::round_sig6(summary.sd)},
         {"skewness", opt_json(summary.skewness)},
         {"se_skewness", csv::round_sig6(summary.se_skewness)},
         {"kurtosis", opt_json(summary.kurtosis)},
         {"se_kurtosis", csv::round_sig6(summary.se_kurtosis)},
         {"ks_statistic", opt_json(summary.ks_statistic)},
         {"ks_p_value", opt_json(summary.ks_p_value)}};
  if (!summary.note.empty()) j["note"] = summary.note;
  return j.dump(2) + "\n";
}

std::string histogram_csv(std::span<const stats::HistogramBin> bins) {
  std::string out = "bin_low,bin_high,count\n";
  for (const stats::HistogramBin& bin : bins) {
    out += csv::join({csv::format_double(bin.low), csv::format_double(bin.high),
                      std::to_string(bin.count)});
    out.push_back('\n');
  }
  return out;
}

std::string qq_csv(std::span<const stats::QqPoint> points) {
  std::string out = "theoretical_quantile,sample_quantile\n";
  for (const stats::QqPoint& point : points) {
    out += csv::join({csv::format_double(point.theoretical), csv::format_double(point.sample)});
    out.push_back('\n');
  }
  return out;
}

std::string skipped_edges_csv(std::span<const SkippedEdge> skipped) {
  std::string out = "citing_journal,cited_journal,year,count,reason\n";
  for (const SkippedEdge& entry : skipped) {
    out += csv::join({entry.edge.citing_journal, entry.edge.cited_journal,
                      std::to_string(entry.edge.year), std::to_string(entry.edge.count),
                      entry.reason});
    out.push_back('\n');
  }
  return out;
}

std::string rank_csv(const Table& table, std::string_view column, std::size_t top_k,
                     bool descending) {
  const std::size_t col = table.require_column(column);

  std::vector<std::pair<double, const std::vector<std::string>*>> keyed;
  keyed.reserve(table.rows.size());
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    const std::string& cell = table.rows[r][col];
    if (cell.empty()) continue;
    keyed.emplace_back(parse_double(cell, r + 2), &table.rows[r]);
  }

  std::stable_sort(keyed.begin(), keyed.end(), [&](const auto& a, const auto& b) {
    if (a.first != b.first) return descending ? a.first > b.first : a.first < b.first;
    return a.second->front() < b.second->front();
  });

  std::string out = "rank," + csv::join(table.header) + "\n";
  const std::size_t limit = std::min(top_k, keyed.size());
  for (std::size_t i = 0; i < limit; ++i) {
    std::vector<std::string> row{std::to_string(i + 1)};
    row.insert(row.end(), keyed[i].second->begin(), keyed[i].second->end());
    out += csv::join(row);
    out.push_back('\n');
  }
  return out;
}

std::vector<DynamicsRecord> parse_dynamics_csv(std::istream& in) {
  Table table = read_table(in);
  const std::vector<std::string> expected{
      "field",          "year_from",         "year_to",
      "exports_from",   "exports_to",        "export_growth",
      "publications_from", "publications_to", "publication_growth",
      "overall_increment", "above_overall",  "note"};
  if (table.header != expected) {
    throw ParseError("unexpected dynamics header: " + csv::join(table.header));
  }

  std::vector<DynamicsRecord> records;
  records.reserve(table.rows.size());
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    const auto& row = table.rows[r];
    const std::size_t line = r + 2;
    DynamicsRecord rec;
    rec.field = row[0];
    rec.year_from = static_cast<int>(parse_double(row[1], line));
    rec.year_to = static_cast<int>(parse_double(row[2], line));
    rec.exports_from = static_cast<Count>(parse_double(row[3], line));
    rec.exports_to = static_cast<Count>(parse_double(row[4], line));
    if (!row[5].empty()) rec.export_growth = parse_double(row[5], line);
    if (!row[6].empty()) rec.publications_from = static_cast<Count>(parse_double(row[6], line));
    if (!row[7].empty()) rec.publications_to = static_cast<Count>(parse_double(row[7], line));
    if (!row[8].empty()) rec.publication_growth = parse_double(row[8], line);
    if (!row[9].empty()) rec.overall_increment = parse_double(row[9], line);
    if (!row[10].empty()) rec.above_overall = row[10] == "true";
    rec.note = row[11];
    records.push_back(std::move(rec));
  }
  return records;
}

}  // namespace scitrade::report
