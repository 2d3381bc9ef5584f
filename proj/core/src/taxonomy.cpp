#include "scitrade/taxonomy.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include <nlohmann/json.hpp>

#include "scitrade/error.hpp"

namespace scitrade::taxonomy {

std::string_view to_string(Dependence d) {
  return d == Dependence::Independent ? "independent" : "dependent";
}

std::string_view to_string(Role r) {
  switch (r) {
    case Role::Exporter: return "exporter";
    case Role::Importer: return "importer";
    default: return "balanced";
  }
}

std::string_view to_string(Impact i) { return i == Impact::Higher ? "higher" : "lower"; }

std::string_view to_string(Dynamics d) {
  switch (d) {
    case Dynamics::Increasing: return "increasing";
    case Dynamics::Decreasing: return "decreasing";
    case Dynamics::Mixed: return "mixed";
    default: return "unknown";
  }
}

char to_char(TradeType t) { return static_cast<char>('A' + static_cast<int>(t)); }

void ClassificationConfig::validate() const {
  if (!(importer_ratio_max > 0) || !(exporter_ratio_min > 0)) {
    throw ConfigError("ratio band thresholds must be positive");
  }
  if (!(importer_ratio_max < exporter_ratio_min)) {
    throw ConfigError("importer_ratio_max must be below exporter_ratio_min");
  }
  if (dependence_split && !(*dependence_split > 0.0 && *dependence_split < 1.0)) {
    throw ConfigError("dependence_split must lie in (0, 1)");
  }
  if (impact_split && *impact_split < 0.0) {
    throw ConfigError("impact_split must be non-negative");
  }
}

std::optional<TradeType> grid_type(Dependence dep, Role role, Impact impact) {
  const bool ind = dep == Dependence::Independent;
  const bool hi = impact == Impact::Higher;
  switch (role) {
    case Role::Exporter:
      if (!ind && hi) return TradeType::A;
      if (ind && !hi) return TradeType::D;
      if (ind && hi) return TradeType::G;
      return TradeType::H;  // dependent, lower
    case Role::Importer:
      if (ind && !hi) return TradeType::B;
      if (!ind && !hi) return TradeType::F;
      return std::nullopt;  // higher-impact importers carry no letter
    case Role::Balanced:
      if (!ind && hi) return TradeType::C;
      if (ind && hi) return TradeType::E;
      return std::nullopt;  // lower-impact balanced cells carry no letter
  }
  return std::nullopt;
}

namespace {

double median(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  const std::size_t n = values.size();
  if (n == 0) return 0.0;
  if (n % 2 == 1) return values[n / 2];
  return (values[n / 2 - 1] + values[n / 2]) / 2.0;
}

}  // namespace

ClassificationReport classify(std::span<const FieldIndicators> indicators,
                              std::span<const std::vector<DynamicsRecord>> periods,
                              std::span<const double> increments,
                              const ClassificationConfig& config) {
  config.validate();
  if (indicators.empty()) throw ValidationError("classification needs at least one field");

  ClassificationReport report;
  report.year = indicators.front().year;
  report.config.importer_ratio_max = config.importer_ratio_max;
  report.config.exporter_ratio_min = config.exporter_ratio_min;
  report.config.exclude = config.exclude;

  if (config.dependence_split) {
    report.config.dependence_split = *config.dependence_split;
  } else {
    std::vector<double> values;
    for (const auto& ind : indicators) {
      if (ind.self_dependence) values.push_back(*ind.self_dependence);
    }
    report.config.dependence_split = median(std::move(values));
    report.config.dependence_split_is_median = true;
  }

  if (config.impact_split) {
    report.config.impact_split = *config.impact_split;
  } else {
    std::vector<double> values;
    values.reserve(indicators.size());
    for (const auto& ind : indicators) values.push_back(static_cast<double>(ind.exports));
    report.config.impact_split = median(std::move(values));
    report.config.impact_split_is_median = true;
  }

  std::unordered_map<std::string, Dynamics> dynamics_of;
  if (!periods.empty()) {
    AccelerationPartition partition = acceleration_partition(periods, increments, config.exclude);
    for (const auto& f : partition.above) dynamics_of[f] = Dynamics::Increasing;
    for (const auto& f : partition.below) dynamics_of[f] = Dynamics::Decreasing;
    for (const auto& f : partition.mixed) dynamics_of[f] = Dynamics::Mixed;
  }

  report.classifications.reserve(indicators.size());
  for (const FieldIndicators& ind : indicators) {
    TradeClassification c;
    c.field = ind.field;

    const double self_dependence = ind.self_dependence.value_or(0.0);
    c.dependence = self_dependence >= report.config.dependence_split ? Dependence::Independent
                                                                     : Dependence::Dependent;

    if (ind.export_import_ratio) {
      const double ratio = *ind.export_import_ratio;
      if (ratio >= config.exporter_ratio_min) {
        c.role = Role::Exporter;
      } else if (ratio < config.importer_ratio_max) {
        c.role = Role::Importer;
      } else {
        c.role = Role::Balanced;
      }
    } else {
      // imports = 0: anything exported makes the field a pure exporter.
      c.role = ind.exports > 0 ? Role::Exporter : Role::Balanced;
    }

    c.impact = static_cast<double>(ind.exports) >= report.config.impact_split ? Impact::Higher
                                                                              : Impact::Lower;

    auto it = dynamics_of.find(ind.field);
    c.dynamics = it != dynamics_of.end() ? it->second : Dynamics::Unknown;

    if (auto cell = grid_type(c.dependence, c.role, c.impact)) c.types.push_back(*cell);
    if (c.dynamics == Dynamics::Increasing) c.types.push_back(TradeType::I);
    if (c.dynamics == Dynamics::Decreasing) c.types.push_back(TradeType::J);

    report.classifications.push_back(std::move(c));
  }
  return report;
}

ClassificationConfig config_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("malformed classification config: ") + e.what());
  }

  ClassificationConfig config;
  try {
    if (j.contains("importer_ratio_max")) config.importer_ratio_max = j["importer_ratio_max"];
    if (j.contains("exporter_ratio_min")) config.exporter_ratio_min = j["exporter_ratio_min"];
    auto split = [&](const char* key) -> std::optional<double> {
      if (!j.contains(key) || j[key] == "median") return std::nullopt;
      if (!j[key].is_number()) throw ConfigError(std::string(key) + " must be \"median\" or a number");
      return j[key].get<double>();
    };
    config.dependence_split = split("dependence_split");
    config.impact_split = split("impact_split");
    if (j.contains("exclude")) config.exclude = j["exclude"].get<std::vector<std::string>>();
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("malformed classification config: ") + e.what());
  }
  config.validate();
  return config;
}

BandCounts band_counts(std::span<const TradeClassification> classifications) {
  BandCounts out;
  for (const TradeClassification& c : classifications) {
    ++out.cells[{c.dependence, c.role, c.impact}];
    for (TradeType t : c.types) ++out.per_type[static_cast<std::size_t>(t)];
  }
  return out;
}

}  // namespace scitrade::taxonomy
