#pragma once

#include <array>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "scitrade/trade_metrics.hpp"

namespace scitrade::taxonomy {

enum class Dependence { Independent, Dependent };
enum class Role { Exporter, Importer, Balanced };
enum class Impact { Higher, Lower };
enum class Dynamics { Increasing, Decreasing, Mixed, Unknown };
enum class TradeType { A, B, C, D, E, F, G, H, I, J };

std::string_view to_string(Dependence);
std::string_view to_string(Role);
std::string_view to_string(Impact);
std::string_view to_string(Dynamics);
char to_char(TradeType);

/// Thresholds for the three classification axes.
///
/// The ratio band splits roles: importers below importer_ratio_max,
/// exporters at or above exporter_ratio_min, balanced in between. The
/// dependence and impact splits default to the dataset median; boundary
/// values take the upper class everywhere (>=).
struct ClassificationConfig {
  double importer_ratio_max = 0.77;
  double exporter_ratio_min = 1.13;
  std::optional<double> dependence_split;  // absent = median of self-dependence values
  std::optional<double> impact_split;      // absent = median of export counts
  std::vector<std::string> exclude;        // left out of the dynamics partition

  /// Throws ConfigError when the thresholds are inconsistent.
  void validate() const;
};

/// The numeric thresholds actually applied, echoed into reports.
struct ResolvedConfig {
  double importer_ratio_max = 0;
  double exporter_ratio_min = 0;
  double dependence_split = 0;
  bool dependence_split_is_median = false;
  double impact_split = 0;
  bool impact_split_is_median = false;
  std::vector<std::string> exclude;
};

struct TradeClassification {
  std::string field;
  Dependence dependence = Dependence::Dependent;
  Role role = Role::Balanced;
  Impact impact = Impact::Lower;
  Dynamics dynamics = Dynamics::Unknown;
  std::vector<TradeType> types;  // at most one of A-H, plus I or J
};

struct ClassificationReport {
  int year = 0;
  ResolvedConfig config;
  std::vector<TradeClassification> classifications;
};

struct BandCounts {
  // (dependence, role, impact) -> count; only occupied cells are present.
  std::map<std::tuple<Dependence, Role, Impact>, std::size_t> cells;
  std::array<std::size_t, 10> per_type{};  // indexed by TradeType
};

/// The named cell of the (dependence, role, impact) grid, when one exists.
/// Four of the twelve cells carry no letter.
std::optional<TradeType> grid_type(Dependence, Role, Impact);

/// Classifies every field of one year.
///
/// dependence: Independent iff self-dependence >= split (fields exporting
/// nothing count as fully dependent). role: from the ratio band; a field
/// with imports = 0 is an Exporter when it exports anything, else
/// Balanced. impact: Higher iff exports >= split. dynamics: from the
/// acceleration partition of the supplied periods (above -> Increasing,
/// below -> Decreasing, otherwise Mixed; Unknown without periods or for
/// excluded fields). Type I/J is appended for Increasing/Decreasing.
ClassificationReport classify(std::span<const FieldIndicators> indicators,
                              std::span<const std::vector<DynamicsRecord>> periods,
                              std::span<const double> increments,
                              const ClassificationConfig& config = {});

BandCounts band_counts(std::span<const TradeClassification> classifications);

/// Parses a classification config from its JSON form, e.g.
///   {"importer_ratio_max": 0.77, "exporter_ratio_min": 1.13,
///    "dependence_split": "median", "impact_split": 250,
///    "exclude": ["MULTIDISCIPLINARY SCIENCES"]}
/// The splits accept "median" or a number. Throws ConfigError.
ClassificationConfig config_from_json(const std::string& text);

}  // namespace scitrade::taxonomy
