#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "scitrade/types.hpp"

namespace scitrade {

/// Per-field, per-year indicator bundle.
///
/// Exports are incoming citations (column sum): knowledge the field sends
/// out. Imports are outgoing citations (row sum): knowledge it takes in.
/// The diagonal (self-citations) is included in both totals; it cancels in
/// net_balance.
struct FieldIndicators {
  std::string field;
  int year = 0;
  Count exports = 0;
  Count imports = 0;
  Count self_citations = 0;
  std::optional<double> export_import_ratio;  // absent when imports == 0
  std::optional<double> self_dependence;      // self/exports; absent when exports == 0
  Count net_balance = 0;                      // exports - imports
  Count positive_surplus = 0;                 // sum of positive pairwise net flows
  Count hub_size = 0;                         // exports + imports
  int export_partner_count = 0;               // partners with positive net flow
  std::optional<Count> publications;
  std::optional<double> per_publication_exports;
};

/// Export growth of one field between two years.
struct DynamicsRecord {
  std::string field;
  int year_from = 0;
  int year_to = 0;
  Count exports_from = 0;
  Count exports_to = 0;
  std::optional<double> export_growth;  // absent when exports_from == 0
  std::optional<Count> publications_from;
  std::optional<Count> publications_to;
  std::optional<double> publication_growth;
  std::optional<double> overall_increment;  // system-wide benchmark, when known
  std::optional<bool> above_overall;        // growth strictly above the benchmark
  std::string note;                         // reason when growth is absent
};

enum class SurplusMode {
  NetBalance,    // exports - imports
  PositiveOnly,  // sum of max(0, net_flow(field, other)) over partners
};

/// argmax over the field's outgoing citations (ties break toward Self,
/// then by category order), or the share rule: Self only when the
/// diagonal holds a strict majority of the field's imports.
enum class DependenceRule { ArgMax, MajorityShare };

struct PrimaryDependence {
  bool self = false;
  std::string field;  // the dominant source when self is false
};

struct RolePartition {
  std::vector<std::string> exporters;  // exports > imports
  std::vector<std::string> importers;  // imports > exports
  std::vector<std::string> balanced;   // exact ties
};

struct AccelerationPartition {
  std::vector<std::string> above;  // growth above the increment in every period
  std::vector<std::string> below;  // growth below the increment in every period
  std::vector<std::string> mixed;  // everything else, including absent growth
};

/// Export/import ratio as reported in ranked tables; absent when imports = 0.
std::optional<double> export_import_ratio(Count exports, Count imports);

/// All indicators of one field. Publications (and exports per publication)
/// are filled when counts are supplied.
FieldIndicators field_indicators(const FieldFlowMatrix& m, std::size_t field,
                                 const PublicationCounts* publications = nullptr);
FieldIndicators field_indicators(const FieldFlowMatrix& m, std::string_view field,
                                 const PublicationCounts* publications = nullptr);

/// Indicator bundles for every field, in universe order.
std::vector<FieldIndicators> all_indicators(const FieldFlowMatrix& m,
                                            const PublicationCounts* publications = nullptr);

/// Self-citations over exports, in [0, 1]; absent when the field exports nothing.
std::optional<double> self_dependence_ratio(const FieldFlowMatrix& m, std::size_t field);

/// The field this field's imports lean on most. Absent when it imports nothing.
std::optional<PrimaryDependence> primary_dependence(const FieldFlowMatrix& m, std::size_t field,
                                                    DependenceRule rule = DependenceRule::ArgMax);

/// Net knowledge flow from a to b: cells(b, a) - cells(a, b).
/// Positive means knowledge moves a -> b. Throws for a == b.
Count net_flow(const FieldFlowMatrix& m, std::size_t a, std::size_t b);

Count knowledge_surplus(const FieldFlowMatrix& m, std::size_t field,
                        SurplusMode mode = SurplusMode::PositiveOnly);

/// Number of partners b with net_flow(field, b) > 0.
int export_partner_count(const FieldFlowMatrix& m, std::size_t field);

RolePartition role_partition(const FieldFlowMatrix& m);

/// Export growth of `field` between the two matrices.
/// Precondition: the field exists in both. Zero base exports produce an
/// absent growth with a note instead of an infinity.
DynamicsRecord trading_dynamics(const FieldFlowMatrix& from, const FieldFlowMatrix& to,
                                std::string_view field,
                                const PublicationCounts* publications = nullptr);

std::vector<DynamicsRecord> all_dynamics(const FieldFlowMatrix& from, const FieldFlowMatrix& to,
                                         const PublicationCounts* publications = nullptr);

/// System-wide growth of citable knowledge between two grand totals.
/// Throws ValidationError when the base total is zero.
double overall_increment(Count total_from, Count total_to);

/// Splits fields by whether their export growth beat the system increment
/// in every period, fell short in every period, or neither (strict
/// inequalities on both sides; equality lands in mixed). Excluded fields
/// are removed before partitioning. Every remaining field must have a
/// record in every period; a missing one raises ValidationError naming the
/// field and period.
AccelerationPartition acceleration_partition(
    std::span<const std::vector<DynamicsRecord>> periods, std::span<const double> increments,
    std::span<const std::string> exclude = {});

/// Share of total exports held by a subgroup of fields (multiple-counted
/// totals on both sides). Throws for an empty subgroup.
double subgroup_share(const FieldFlowMatrix& m, std::span<const std::string> subgroup);

/// Growth of the subgroup's export sum between two years.
double subgroup_increment(const FieldFlowMatrix& from, const FieldFlowMatrix& to,
                          std::span<const std::string> subgroup);

}  // namespace scitrade
