#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "scitrade/ingest.hpp"
#include "scitrade/manifest.hpp"
#include "scitrade/stats.hpp"
#include "scitrade/taxonomy.hpp"
#include "scitrade/trade_metrics.hpp"

namespace scitrade::report {

/// A parsed CSV table: header plus rows of equal width.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  std::optional<std::size_t> column(std::string_view name) const;
  /// Throws LookupError listing the valid columns.
  std::size_t require_column(std::string_view name) const;
};

Table read_table(std::istream& in);

/// Numeric values of one column; empty cells are skipped. Throws
/// ParseError when a non-empty cell fails to parse.
std::vector<double> numeric_column(const Table& table, std::size_t column);

/// Floats render with 6 significant digits; absent optionals render as
/// empty cells (CSV) or null (JSON). Report bodies carry no timestamps, so
/// reruns are byte-identical.
std::string indicators_csv(std::span<const FieldIndicators> indicators);
std::string indicators_json(std::span<const FieldIndicators> indicators,
                            const RunManifest& manifest);

std::string dynamics_csv(std::span<const DynamicsRecord> records);
std::string dynamics_json(std::span<const DynamicsRecord> records, const RunManifest& manifest);

std::string classification_csv(const taxonomy::ClassificationReport& report);
std::string classification_json(const taxonomy::ClassificationReport& report,
                                const RunManifest& manifest);

std::string summary_csv(const stats::DistributionSummary& summary, std::string_view column);
std::string summary_json(const stats::DistributionSummary& summary, std::string_view column,
                         const RunManifest& manifest);

std::string histogram_csv(std::span<const stats::HistogramBin> bins);
std::string qq_csv(std::span<const stats::QqPoint> points);

std::string skipped_edges_csv(std::span<const SkippedEdge> skipped);

/// Top-k rows by the given column (descending by default), prefixed with a
/// rank column. Rows with an empty cell in the column are left out; ties
/// break by the first column, ascending.
std::string rank_csv(const Table& table, std::string_view column, std::size_t top_k,
                     bool descending = true);

/// Round-trips a DynamicsRecord table written by dynamics_csv.
std::vector<DynamicsRecord> parse_dynamics_csv(std::istream& in);

}  // namespace scitrade::report
