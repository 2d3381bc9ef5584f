#include "scitrade/trade_metrics.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <unordered_set>

namespace scitrade {

std::optional<double> export_import_ratio(Count exports, Count imports) {
  if (imports == 0) return std::nullopt;
  return static_cast<double>(exports) / static_cast<double>(imports);
}

FieldIndicators field_indicators(const FieldFlowMatrix& m, std::size_t field,
                                 const PublicationCounts* publications) {
  FieldIndicators ind;
  ind.field = m.field(field);
  ind.year = m.year();
  ind.exports = m.col_sum(field);
  ind.imports = m.row_sum(field);
  ind.self_citations = m.at(field, field);
  ind.export_import_ratio = export_import_ratio(ind.exports, ind.imports);
  if (ind.exports > 0) {
    ind.self_dependence = static_cast<double>(ind.self_citations) / static_cast<double>(ind.exports);
  }
  ind.net_balance = ind.exports - ind.imports;
  ind.positive_surplus = knowledge_surplus(m, field, SurplusMode::PositiveOnly);
  ind.hub_size = ind.exports + ind.imports;
  ind.export_partner_count = export_partner_count(m, field);
  if (publications) {
    ind.publications = publications->get(ind.field, ind.year);
    if (ind.publications && *ind.publications > 0) {
      ind.per_publication_exports =
          static_cast<double>(ind.exports) / static_cast<double>(*ind.publications);
    }
  }
  return ind;
}

FieldIndicators field_indicators(const FieldFlowMatrix& m, std::string_view field,
                                 const PublicationCounts* publications) {
  return field_indicators(m, m.require_index(field), publications);
}

std::vector<FieldIndicators> all_indicators(const FieldFlowMatrix& m,
                                            const PublicationCounts* publications) {
  std::vector<FieldIndicators> out;
  out.reserve(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) out.push_back(field_indicators(m, i, publications));
  return out;
}

std::optional<double> self_dependence_ratio(const FieldFlowMatrix& m, std::size_t field) {
  Count exports = m.col_sum(field);
  if (exports == 0) return std::nullopt;
  return static_cast<double>(m.at(field, field)) / static_cast<double>(exports);
}

std::optional<PrimaryDependence> primary_dependence(const FieldFlowMatrix& m, std::size_t field,
                                                    DependenceRule rule) {
  Count imports = m.row_sum(field);
  if (imports == 0) return std::nullopt;
  const Count self = m.at(field, field);

  if (rule == DependenceRule::MajorityShare) {
    if (2 * self > imports) return PrimaryDependence{true, {}};
  } else {
    bool self_max = true;
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (j != field && m.at(field, j) > self) {
        self_max = false;
        break;
      }
    }
    if (self_max) return PrimaryDependence{true, {}};
  }

  // Dominant external source; first-in-universe-order wins ties.
  std::size_t best = m.size();
  Count best_count = -1;
  for (std::size_t j = 0; j < m.size(); ++j) {
    if (j == field) continue;
    if (m.at(field, j) > best_count) {
      best_count = m.at(field, j);
      best = j;
    }
  }
  return PrimaryDependence{false, m.field(best)};
}

Count net_flow(const FieldFlowMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) throw std::invalid_argument("net_flow requires two distinct fields");
  return m.at(b, a) - m.at(a, b);
}

Count knowledge_surplus(const FieldFlowMatrix& m, std::size_t field, SurplusMode mode) {
  if (mode == SurplusMode::NetBalance) return m.col_sum(field) - m.row_sum(field);
  Count surplus = 0;
  for (std::size_t b = 0; b < m.size(); ++b) {
    if (b == field) continue;
    Count flow = m.at(b, field) - m.at(field, b);
    if (flow > 0) surplus += flow;
  }
  return surplus;
}

int export_partner_count(const FieldFlowMatrix& m, std::size_t field) {
  int partners = 0;
  for (std::size_t b = 0; b < m.size(); ++b) {
    if (b == field) continue;
    if (m.at(b, field) - m.at(field, b) > 0) ++partners;
  }
  return partners;
}

RolePartition role_partition(const FieldFlowMatrix& m) {
  RolePartition out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    Count exports = m.col_sum(i);
    Count imports = m.row_sum(i);
    if (exports > imports) {
      out.exporters.push_back(m.field(i));
    } else if (imports > exports) {
      out.importers.push_back(m.field(i));
    } else {
      out.balanced.push_back(m.field(i));
    }
  }
  return out;
}

DynamicsRecord trading_dynamics(const FieldFlowMatrix& from, const FieldFlowMatrix& to,
                                std::string_view field, const PublicationCounts* publications) {
  DynamicsRecord rec;
  rec.field = std::string(field);
  rec.year_from = from.year();
  rec.year_to = to.year();
  rec.exports_from = from.col_sum(from.require_index(field));
  rec.exports_to = to.col_sum(to.require_index(field));
  if (rec.exports_from > 0) {
    rec.export_growth = static_cast<double>(rec.exports_to - rec.exports_from) /
                        static_cast<double>(rec.exports_from);
  } else {
    rec.note = "zero base exports";
  }
  if (publications) {
    rec.publications_from = publications->get(rec.field, rec.year_from);
    rec.publications_to = publications->get(rec.field, rec.year_to);
    if (rec.publications_from && rec.publications_to && *rec.publications_from > 0) {
      rec.publication_growth =
          static_cast<double>(*rec.publications_to - *rec.publications_from) /
          static_cast<double>(*rec.publications_from);
    }
  }
  return rec;
}

std::vector<DynamicsRecord> all_dynamics(const FieldFlowMatrix& from, const FieldFlowMatrix& to,
                                         const PublicationCounts* publications) {
  std::vector<DynamicsRecord> out;
  out.reserve(from.size());
  for (const std::string& field : from.fields()) {
    out.push_back(trading_dynamics(from, to, field, publications));
  }
  return out;
}

double overall_increment(Count total_from, Count total_to) {
  if (total_from <= 0) throw ValidationError("overall increment needs a positive base total");
  return static_cast<double>(total_to - total_from) / static_cast<double>(total_from);
}

AccelerationPartition acceleration_partition(std::span<const std::vector<DynamicsRecord>> periods,
                                             std::span<const double> increments,
                                             std::span<const std::string> exclude) {
  if (periods.size() != increments.size()) {
    throw ValidationError("one increment per period required");
  }
  if (periods.empty()) return {};

  const std::unordered_set<std::string> excluded(exclude.begin(), exclude.end());

  // Field universe from the first period, in record order.
  std::vector<std::string> fields;
  for (const DynamicsRecord& rec : periods[0]) {
    if (!excluded.count(rec.field)) fields.push_back(rec.field);
  }

  std::vector<std::unordered_map<std::string, const DynamicsRecord*>> by_field(periods.size());
  for (std::size_t p = 0; p < periods.size(); ++p) {
    for (const DynamicsRecord& rec : periods[p]) by_field[p].emplace(rec.field, &rec);
  }

  AccelerationPartition out;
  for (const std::string& field : fields) {
    bool above_all = true;
    bool below_all = true;
    for (std::size_t p = 0; p < periods.size(); ++p) {
      auto it = by_field[p].find(field);
      if (it == by_field[p].end()) {
        throw ValidationError("field \"" + field + "\" has no dynamics record for period " +
                              std::to_string(p + 1));
      }
      const auto& growth = it->second->export_growth;
      if (!growth) {
        above_all = false;
        below_all = false;
      } else {
        if (!(*growth > increments[p])) above_all = false;
        if (!(*growth < increments[p])) below_all = false;
      }
    }
    if (above_all) {
      out.above.push_back(field);
    } else if (below_all) {
      out.below.push_back(field);
    } else {
      out.mixed.push_back(field);
    }
  }
  return out;
}

namespace {

Count subgroup_exports(const FieldFlowMatrix& m, std::span<const std::string> subgroup) {
  std::set<std::size_t> indices;
  for (const std::string& field : subgroup) indices.insert(m.require_index(field));
  Count total = 0;
  for (std::size_t j : indices) total += m.col_sum(j);
  return total;
}

}  // namespace

double subgroup_share(const FieldFlowMatrix& m, std::span<const std::string> subgroup) {
  if (subgroup.empty()) throw ValidationError("subgroup share of an empty subgroup");
  Count all = 0;
  for (std::size_t j = 0; j < m.size(); ++j) all += m.col_sum(j);
  if (all == 0) throw ValidationError("subgroup share of an all-zero matrix");
  return static_cast<double>(subgroup_exports(m, subgroup)) / static_cast<double>(all);
}

double subgroup_increment(const FieldFlowMatrix& from, const FieldFlowMatrix& to,
                          std::span<const std::string> subgroup) {
  if (subgroup.empty()) throw ValidationError("subgroup increment of an empty subgroup");
  Count base = subgroup_exports(from, subgroup);
  if (base == 0) throw ValidationError("subgroup increment needs a positive base export sum");
  return static_cast<double>(subgroup_exports(to, subgroup) - base) / static_cast<double>(base);
}

}  // namespace scitrade
