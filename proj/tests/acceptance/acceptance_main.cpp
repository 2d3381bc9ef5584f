// Acceptance suite: one line per criterion, nonzero exit if any fail.
// Usage: scitrade_acceptance <path-to-scitrade>
//
// Criteria 1-3 recompute the derived columns of published indicator tables
// from their raw columns. Criteria 5-8 check the implementations against
// brute-force references on random inputs. Criterion 9 classifies planted
// profiles; criterion 10 reruns the CLI pipeline and compares bytes.

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "scitrade/ingest.hpp"
#include "scitrade/stats.hpp"
#include "scitrade/synth.hpp"
#include "scitrade/taxonomy.hpp"
#include "scitrade/trade_metrics.hpp"
#include "support/oracles.hpp"

namespace fs = std::filesystem;
using namespace scitrade;

namespace {

struct Failure {
  std::string detail;
};

std::vector<std::string> g_notes;

void fail(const std::string& detail) { throw Failure{detail}; }

void check(bool ok, const std::string& detail) {
  if (!ok) fail(detail);
}

// ---------------------------------------------------------------------------
// Criterion 1: printed export/import and self-dependence ratios re-derive
// from their raw columns within +-0.005.

struct RatioRow {
  const char* field;
  long long denominator;  // imports (exporter/importer tables) or exports
  long long numerator;    // exports or self-citations
  double printed;
};

// Top-10 exporters, 2009 (imports, exports, ratio).
const RatioRow kExporters[] = {
    {"MEDICINE, GENERAL & INTERNAL", 635835, 1100441, 1.73},
    {"STATISTICS & PROBABILITY", 171231, 262307, 1.53},
    {"SOCIAL SCIENCES, MATHEMATICAL METHODS", 14974, 21421, 1.43},
    {"COMPUTER SCIENCE, HARDWARE & ARCHITECTURE", 58952, 83897, 1.42},
    {"PSYCHOLOGY, MATHEMATICAL", 11596, 16156, 1.39},
    {"HEMATOLOGY", 564113, 785838, 1.39},
    {"PSYCHOLOGY, SOCIAL", 111371, 155045, 1.39},
    {"PHYSICS, MULTIDISCIPLINARY", 714276, 978353, 1.37},
    {"CELL BIOLOGY", 1407519, 1918916, 1.36},
    {"PERIPHERAL VASCULAR DISEASE", 478743, 651799, 1.36},
};

// Top-10 importers, 2009.
const RatioRow kImporters[] = {
    {"ETHICS", 25144, 12833, 0.51},
    {"BIOLOGY", 666711, 354614, 0.53},
    {"HEALTH POLICY & SERVICES", 34627, 19331, 0.56},
    {"NURSING", 102797, 58721, 0.57},
    {"PARASITOLOGY", 186396, 110826, 0.59},
    {"MATERIALS SCIENCE, CHARACTERIZATION & TESTING", 34469, 20960, 0.61},
    {"MEDICAL ETHICS", 11295, 7028, 0.62},
    {"INFORMATION SCIENCE & LIBRARY SCIENCE", 19987, 12728, 0.64},
    {"INTEGRATIVE & COMPLEMENTARY MEDICINE", 51941, 33208, 0.64},
    {"VETERINARY SCIENCES", 395908, 256961, 0.65},
};

// Top-10 independent disciplines, 2009 (exports, self-citations, ratio).
const RatioRow kIndependent[] = {
    {"LAW", 61809, 42025, 0.68},
    {"ASTRONOMY & ASTROPHYSICS", 686519, 448998, 0.65},
    {"OPHTHALMOLOGY", 232581, 134928, 0.58},
    {"DENTISTRY, ORAL SURGERY & MEDICINE", 206287, 115870, 0.56},
    {"MATHEMATICS", 307136, 164870, 0.54},
    {"PSYCHOLOGY, PSYCHOANALYSIS", 6755, 3599, 0.53},
    {"VETERINARY SCIENCES", 256961, 114065, 0.44},
    {"LINGUISTICS", 37672, 16654, 0.44},
    {"NURSING", 58721, 25714, 0.44},
    {"EDUCATION & EDUCATIONAL RESEARCH", 65164, 27790, 0.43},
};

// Top-10 dependent disciplines, 2009.
const RatioRow kDependent[] = {
    {"PSYCHOLOGY, BIOLOGICAL", 1369, 66, 0.05},
    {"SOCIAL SCIENCES, MATHEMATICAL METHODS", 21421, 1419, 0.07},
    {"MEDICINE, RESEARCH & EXPERIMENTAL", 615899, 43815, 0.07},
    {"BIOLOGY", 354614, 28967, 0.08},
    {"ANATOMY & MORPHOLOGY", 50740, 4195, 0.08},
    {"MICROSCOPY", 29219, 2436, 0.08},
    {"PSYCHOLOGY, MATHEMATICAL", 16156, 1348, 0.08},
    {"BIOPHYSICS", 672529, 56720, 0.08},
    {"LIMNOLOGY", 107229, 9327, 0.09},
    {"ANDROLOGY", 11723, 1041, 0.09},
};

void criterion_ratios() {
  auto check_rows = [](const RatioRow* rows, std::size_t n, bool export_import) {
    for (std::size_t i = 0; i < n; ++i) {
      double computed;
      if (export_import) {
        computed = *export_import_ratio(rows[i].numerator, rows[i].denominator);
      } else {
        // Self-dependence rows store (exports, self-citations).
        FieldFlowMatrix m(2009, {"X", "REST"});
        m.set(0, 0, rows[i].numerator);                        // self-citations
        m.set(1, 0, rows[i].denominator - rows[i].numerator);  // rest of exports
        computed = *self_dependence_ratio(m, 0);
      }
      check(std::abs(computed - rows[i].printed) <= 0.005 + 1e-12,
            std::string(rows[i].field) + ": recomputed " + std::to_string(computed) +
                " vs printed " + std::to_string(rows[i].printed));
    }
  };
  check_rows(kExporters, std::size(kExporters), true);
  check_rows(kImporters, std::size(kImporters), true);
  check_rows(kIndependent, std::size(kIndependent), false);
  check_rows(kDependent, std::size(kDependent), false);
  g_notes.push_back("40 table rows at +-0.005");
}

// ---------------------------------------------------------------------------
// Criterion 2: printed percentage changes of exports (C) and publications
// (P) re-derive from their raw columns within +-0.01 pp.

struct GrowthRow {
  const char* field;
  char series;  // 'C' or 'P'
  long long from;
  long long to;
  double printed_percent;
};

const GrowthRow kGrowthRows[] = {
    // Top-10 export increases, 2007-2009.
    {"NANOSCIENCE & NANOTECHNOLOGY", 'C', 241198, 646645, 168.10},
    {"NANOSCIENCE & NANOTECHNOLOGY", 'P', 10000, 17747, 77.47},
    {"MATERIALS SCIENCE, BIOMATERIALS", 'C', 92103, 184584, 100.41},
    {"MATERIALS SCIENCE, BIOMATERIALS", 'P', 2665, 4159, 56.06},
    {"TRANSPORTATION SCIENCE & TECHNOLOGY", 'C', 19330, 37110, 91.98},
    {"TRANSPORTATION SCIENCE & TECHNOLOGY", 'P', 1321, 2394, 81.23},
    {"HEALTH POLICY & SERVICES", 'C', 10101, 19331, 91.38},
    {"HEALTH POLICY & SERVICES", 'P', 2499, 3330, 33.25},
    {"PSYCHOLOGY, MATHEMATICAL", 'C', 8584, 16156, 88.21},
    {"PSYCHOLOGY, MATHEMATICAL", 'P', 506, 596, 17.79},
    {"AGRICULTURAL ENGINEERING", 'C', 37841, 70511, 86.33},
    {"AGRICULTURAL ENGINEERING", 'P', 1351, 2103, 55.66},
    {"SOCIAL SCIENCES, BIOMEDICAL", 'C', 25874, 47574, 83.87},
    {"SOCIAL SCIENCES, BIOMEDICAL", 'P', 1793, 1989, 10.93},
    {"TRANSPORTATION", 'C', 7963, 14493, 82.00},
    {"TRANSPORTATION", 'P', 757, 873, 15.32},
    {"MATERIALS SCIENCE, MULTIDISCIPLINARY", 'C', 1080221, 1890081, 74.97},
    {"MATERIALS SCIENCE, MULTIDISCIPLINARY", 'P', 40905, 51853, 26.76},
    {"ETHICS", 'C', 7415, 12833, 73.07},
    {"ETHICS", 'P', 1049, 1501, 43.09},
    // Top-10 reduced exports, 2007-2009.
    {"PSYCHOLOGY, BIOLOGICAL", 'C', 2699, 1369, -49.28},
    {"PSYCHOLOGY, BIOLOGICAL", 'P', 1014, 1149, 13.31},
    {"MEDICAL ETHICS", 'C', 8014, 7028, -12.30},
    {"MEDICAL ETHICS", 'P', 416, 592, 42.31},
    {"HISTORY & PHILOSOPHY OF SCIENCE", 'C', 14033, 12418, -11.51},
    {"HISTORY & PHILOSOPHY OF SCIENCE", 'P', 1007, 1162, 15.39},
    {"PSYCHOLOGY", 'C', 335943, 310887, -7.46},
    {"PSYCHOLOGY", 'P', 3984, 4923, 23.57},
    {"PSYCHOLOGY, PSYCHOANALYSIS", 'C', 7153, 6755, -5.56},
    {"PSYCHOLOGY, PSYCHOANALYSIS", 'P', 467, 438, -6.21},
    {"MEDICAL LABORATORY TECHNOLOGY", 'C', 86805, 82734, -4.69},
    {"MEDICAL LABORATORY TECHNOLOGY", 'P', 2559, 2707, 5.78},
    {"STATISTICS & PROBABILITY", 'C', 269364, 262307, -2.62},
    {"STATISTICS & PROBABILITY", 'P', 6512, 6844, 5.10},
    {"ORNITHOLOGY", 'C', 33466, 32680, -2.35},
    {"ORNITHOLOGY", 'P', 1135, 956, -15.77},
    {"AGRICULTURAL ECONOMICS & POLICY", 'C', 9130, 9317, 2.05},
    {"AGRICULTURAL ECONOMICS & POLICY", 'P', 424, 549, 29.48},
    {"PSYCHIATRY", 'C', 692904, 790573, 2.19},
    {"PSYCHIATRY", 'P', 10258, 11829, 15.31},
};

void criterion_dynamics() {
  std::size_t consistent = 0;
  std::vector<std::string> mismatches;
  for (const GrowthRow& row : kGrowthRows) {
    // Exports change through trading_dynamics; publications through the
    // same record when counts are supplied.
    FieldFlowMatrix from(2007, {"X", "REST"});
    FieldFlowMatrix to(2009, {"X", "REST"});
    PublicationCounts pubs;
    double computed;
    if (row.series == 'C') {
      from.set(1, 0, row.from);
      to.set(1, 0, row.to);
      computed = *trading_dynamics(from, to, "X").export_growth * 100.0;
    } else {
      from.set(1, 0, 1);
      to.set(1, 0, 1);
      pubs.set("X", 2007, row.from);
      pubs.set("X", 2009, row.to);
      computed = *trading_dynamics(from, to, "X", &pubs).publication_growth * 100.0;
    }
    if (std::abs(computed - row.printed_percent) <= 0.01 + 1e-9) {
      ++consistent;
    } else {
      std::ostringstream detail;
      detail << row.field << " (" << row.series << "): recomputed " << computed
             << "% vs printed " << row.printed_percent << "%";
      mismatches.push_back(detail.str());
    }
  }
  if (!mismatches.empty()) {
    std::ostringstream detail;
    detail << consistent << "/" << std::size(kGrowthRows) << " rows consistent; mismatches:";
    for (const std::string& m : mismatches) detail << "\n         " << m;
    detail << "\n         (the PSYCHIATRY C row is internally inconsistent in the published"
              "\n         table: 692,904 -> 790,573 is +14.10%, not the printed 2.19%;"
              "\n         no recomputation from the raw columns can reproduce it)";
    fail(detail.str());
  }
  g_notes.push_back("40 growth rows at +-0.01 pp");
}

// ---------------------------------------------------------------------------
// Criterion 3: system-total increments.

void criterion_increments() {
  const struct {
    Count from, to;
    double printed;
  } rows[] = {
      {24979391, 26809415, 7.33},
      {26809415, 30150625, 12.46},
      {24979391, 30150625, 20.70},
  };
  for (const auto& row : rows) {
    const double computed = overall_increment(row.from, row.to) * 100.0;
    check(std::abs(computed - row.printed) <= 0.01 + 1e-9,
          "increment " + std::to_string(computed) + " vs " + std::to_string(row.printed));
  }
  g_notes.push_back("7.33% / 12.46% / 20.70% at +-0.01 pp");
}

// ---------------------------------------------------------------------------
// Criterion 4: standard-error formulas at n = 221.

void criterion_standard_errors() {
  std::vector<double> xs(221);
  for (std::size_t i = 0; i < xs.size(); ++i) xs[i] = static_cast<double>(i % 17);
  stats::DistributionSummary s = stats::summarize(xs);
  const double se_skew = std::round(s.se_skewness * 100.0) / 100.0;
  const double se_kurt = std::round(s.se_kurtosis * 100.0) / 100.0;
  check(se_skew == 0.16, "se_skewness(221) rounds to " + std::to_string(se_skew));
  check(se_kurt == 0.33, "se_kurtosis(221) rounds to " + std::to_string(se_kurt));
  g_notes.push_back("sqrt(6/221) -> 0.16, sqrt(24/221) -> 0.33");
}

// ---------------------------------------------------------------------------
// Criteria 5 and 6: brute-force equivalence and conservation laws on 1,000
// random matrices (dimension <= 8, cells <= 50).

void check_matrix_against_oracle(const FieldFlowMatrix& m) {
  const std::size_t n = m.size();
  Count net_total = 0, exports_total = 0, imports_total = 0;

  std::vector<std::string> ref_exporters, ref_importers, ref_balanced;
  for (std::size_t f = 0; f < n; ++f) {
    const Count exports = oracle::exports_of(m, f);
    const Count imports = oracle::imports_of(m, f);
    FieldIndicators ind = field_indicators(m, f);

    check(ind.exports == exports, "exports mismatch");
    check(ind.imports == imports, "imports mismatch");
    check(ind.self_citations == m.at(f, f), "self-citations mismatch");
    check(ind.net_balance == exports - imports, "net balance mismatch");
    check(ind.hub_size == exports + imports, "hub size mismatch");
    check(ind.positive_surplus == oracle::positive_surplus(m, f), "surplus mismatch");
    check(ind.export_partner_count == oracle::partner_count(m, f), "partner count mismatch");
    check(knowledge_surplus(m, f, SurplusMode::NetBalance) == exports - imports,
          "net-balance surplus mismatch");
    check(knowledge_surplus(m, f, SurplusMode::PositiveOnly) == oracle::positive_surplus(m, f),
          "positive surplus mismatch");
    check(export_partner_count(m, f) == oracle::partner_count(m, f), "partner op mismatch");

    if (imports == 0) {
      check(!ind.export_import_ratio.has_value(), "ratio should be absent");
      check(!primary_dependence(m, f).has_value(), "dependence should be absent");
    } else {
      const double ref_ratio = static_cast<double>(exports) / static_cast<double>(imports);
      check(std::abs(*ind.export_import_ratio - ref_ratio) <=
                1e-12 * std::max(1.0, std::abs(ref_ratio)),
            "ratio mismatch");
      std::size_t dominant = 0;
      const bool self = oracle::primarily_self(m, f, &dominant);
      auto dep = primary_dependence(m, f);
      check(dep->self == self, "primary dependence self mismatch");
      if (!self) check(dep->field == m.field(dominant), "primary dependence field mismatch");
    }
    if (exports == 0) {
      check(!ind.self_dependence.has_value(), "self-dependence should be absent");
    } else {
      const double ref_sd = static_cast<double>(m.at(f, f)) / static_cast<double>(exports);
      check(std::abs(*ind.self_dependence - ref_sd) <= 1e-12, "self-dependence mismatch");
      check(std::abs(*self_dependence_ratio(m, f) - ref_sd) <= 1e-12, "self-dependence op");
    }

    if (exports > imports) {
      ref_exporters.push_back(m.field(f));
    } else if (imports > exports) {
      ref_importers.push_back(m.field(f));
    } else {
      ref_balanced.push_back(m.field(f));
    }

    net_total += exports - imports;
    exports_total += exports;
    imports_total += imports;
  }

  RolePartition roles = role_partition(m);
  check(roles.exporters == ref_exporters && roles.importers == ref_importers &&
            roles.balanced == ref_balanced,
        "role partition mismatch");

  // Conservation laws.
  check(net_total == 0, "sum of net balances is nonzero");
  check(exports_total == m.cell_sum(), "exports do not sum to the cell total");
  check(imports_total == m.cell_sum(), "imports do not sum to the cell total");
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      check(net_flow(m, a, b) == oracle::net_flow(m, a, b), "net flow mismatch");
      check(net_flow(m, a, b) + net_flow(m, b, a) == 0, "net flow antisymmetry");
    }
  }
}

void criterion_oracle_equivalence() {
  std::mt19937_64 rng(0x5c17ade);
  for (int iter = 0; iter < 1000; ++iter) {
    check_matrix_against_oracle(oracle::random_matrix(rng, 8, 50));
  }

  // Dynamics against a direct evaluation on same-universe pairs.
  for (int iter = 0; iter < 200; ++iter) {
    FieldFlowMatrix from = oracle::random_matrix(rng, 6, 50, 2007);
    FieldFlowMatrix to(2009, from.fields());
    std::uniform_int_distribution<Count> cell(0, 50);
    for (std::size_t i = 0; i < to.size(); ++i) {
      for (std::size_t j = 0; j < to.size(); ++j) to.set(i, j, cell(rng));
    }
    for (std::size_t f = 0; f < from.size(); ++f) {
      DynamicsRecord rec = trading_dynamics(from, to, from.field(f));
      const Count base = oracle::exports_of(from, f);
      if (base == 0) {
        check(!rec.export_growth.has_value(), "growth should be absent on zero base");
      } else {
        const double ref = static_cast<double>(oracle::exports_of(to, f) - base) /
                           static_cast<double>(base);
        check(std::abs(*rec.export_growth - ref) <= 1e-12 * std::max(1.0, std::abs(ref)),
              "growth mismatch");
      }
    }
  }
  g_notes.push_back("1,000 matrices, every operation vs triple-loop reference");
}

void criterion_conservation() {
  // The laws are asserted inside check_matrix_against_oracle; run a fresh
  // independent stream so this criterion stands on its own.
  std::mt19937_64 rng(0xc0ffee);
  for (int iter = 0; iter < 1000; ++iter) {
    const FieldFlowMatrix m = oracle::random_matrix(rng, 8, 50);
    Count net = 0, exports = 0, imports = 0;
    for (std::size_t f = 0; f < m.size(); ++f) {
      net += oracle::exports_of(m, f) - oracle::imports_of(m, f);
      exports += oracle::exports_of(m, f);
      imports += oracle::imports_of(m, f);
    }
    check(net == 0, "net balance total");
    check(exports == m.cell_sum() && imports == m.cell_sum(), "export/import totals");
    for (std::size_t a = 0; a < m.size(); ++a) {
      for (std::size_t b = a + 1; b < m.size(); ++b) {
        check(net_flow(m, a, b) + net_flow(m, b, a) == 0, "antisymmetry");
      }
    }
  }
  g_notes.push_back("net balances cancel; totals and antisymmetry hold");
}

// ---------------------------------------------------------------------------
// Criterion 7: multiple counting.

void criterion_multiple_counting() {
  // Single-category synthetic data: multiple and single counting coincide.
  synth::SynthSpec spec;
  spec.n_categories = 5;
  spec.journals_per_category = 8;
  spec.multi_assign_fraction = 0.0;
  spec.seed = 7;
  spec.total_edges = 20000;
  synth::SynthOutput data = synth::generate(spec);
  FieldFlowMatrix m = build_flow_matrix(data.edges, data.categories, 2009);
  check(m.cell_sum() == grand_total_citations(data.edges, 2009),
        "single-category cell sum differs from the journal-level total");

  // The dual-assignment fixture expands over S x T exactly.
  CategoryMap map;
  map.assign("J1", "C1");
  map.assign("J1", "C2");
  map.assign("J2", "C1");
  std::vector<CitationEdge> edges{{"J1", "J2", 2009, 3}, {"J1", "J1", 2009, 1}};
  FieldFlowMatrix fixture = build_flow_matrix(edges, map, 2009);
  check(fixture.at(0, 0) == 4, "C1->C1 cell");  // 3 (J1->J2) + 1 (self-loop)
  check(fixture.at(1, 0) == 4, "C2->C1 cell");
  check(fixture.at(0, 1) == 1, "C1->C2 cell");
  check(fixture.at(1, 1) == 1, "C2->C2 cell");
  check(grand_total_citations(edges, 2009) == 4, "journal-level total");
  g_notes.push_back("single counting matches totals; S x T expansion exact");
}

// ---------------------------------------------------------------------------
// Criterion 8: statistics vs extended-precision references.

void criterion_statistics_oracle() {
  std::vector<double> a{1, 2, 3, 4, 5};
  std::vector<double> b{1, 3, 2, 5, 4};
  check(stats::spearman(a, b)->rho == 0.8, "spearman pinned example is not exactly 0.8");

  std::mt19937_64 rng(88);
  for (int iter = 0; iter < 60; ++iter) {
    const std::size_t n = 5 + static_cast<std::size_t>(rng() % 996);
    std::vector<double> xs(n);
    switch (iter % 4) {
      case 0: {
        std::normal_distribution<double> dist(0.31, 0.24);
        for (double& x : xs) x = dist(rng);
        break;
      }
      case 1: {
        std::lognormal_distribution<double> dist(0.0, 1.0);
        for (double& x : xs) x = dist(rng);
        break;
      }
      case 2: {
        std::exponential_distribution<double> dist(2.0);
        for (double& x : xs) x = dist(rng);
        break;
      }
      default: {
        for (double& x : xs) x = static_cast<double>(rng() % 9);
        break;
      }
    }

    const oracle::Moments ref = oracle::moments(xs);
    if (!ref.defined) continue;
    stats::DistributionSummary s = stats::summarize(xs);

    auto close = [](double got, long double want, const char* what) {
      const double tol = 1e-10 * std::max<double>(1.0, std::abs(static_cast<double>(want)));
      check(std::abs(got - static_cast<double>(want)) <= tol,
            std::string(what) + " beyond 1e-10 of the reference");
    };
    close(s.mean, ref.mean, "mean");
    close(s.sd, ref.sd, "sd");
    close(*s.skewness, ref.g1, "skewness");
    close(*s.kurtosis, ref.g2, "kurtosis");

    const stats::KsTest ks = stats::ks_normal_test(xs);
    const long double d_ref = oracle::ks_statistic(xs);
    close(ks.statistic, d_ref, "KS statistic");
    const long double p_ref =
        oracle::kolmogorov_p(std::sqrt(static_cast<long double>(n)) * d_ref);
    if (p_ref > 1e-250) {
      const double tol = 1e-10 * std::max<double>(std::abs(static_cast<double>(p_ref)), 1e-200);
      check(std::abs(ks.p_value - static_cast<double>(p_ref)) <=
                std::max(tol, 1e-10 * ks.p_value),
            "KS p-value beyond 1e-10 of the reference");
    }

    std::vector<double> ys(n);
    for (double& y : ys) y = static_cast<double>(rng() % 6);
    auto rho = stats::spearman(xs, ys);
    if (rho) close(rho->rho, oracle::spearman_rho(xs, ys), "spearman");
  }
  g_notes.push_back("moments, KS, spearman at 1e-10 vs long-double references");
}

// ---------------------------------------------------------------------------
// Criterion 9: planted taxonomy profiles.

void criterion_taxonomy() {
  // Six fields with hand-built margins. ALPHA: self-dep .60, ratio 1.60,
  // exports 1000 (high-self-dependence exporter). BETA: .08, 1.00, 800
  // (low-self-dependence balanced mid-size). GAMMA: .05, 0.25, 100
  // (low-ratio importer). DELTA's exports grow 100 -> 200 -> 300.
  auto planted = [](int year) {
    FieldFlowMatrix m(year, {"ALPHA", "BETA", "GAMMA", "DELTA", "EPSILON", "ZETA"});
    const Count cells[6][6] = {
        {600, 25, 0, 0, 0, 0},       {260, 64, 95, 201, 180, 0}, {0, 395, 5, 0, 0, 0},
        {0, 270, 0, 30, 0, 0},       {30, 46, 0, 69, 20, 60},    {110, 0, 0, 0, 0, 90},
    };
    for (std::size_t i = 0; i < 6; ++i) {
      for (std::size_t j = 0; j < 6; ++j) m.set(i, j, cells[i][j]);
    }
    return m;
  };

  FieldFlowMatrix m2009 = planted(2009);
  FieldFlowMatrix m2007 = planted(2007);
  FieldFlowMatrix m2008 = planted(2008);
  const Count delta_2007[6] = {0, 70, 0, 10, 20, 0};
  const Count delta_2008[6] = {0, 140, 0, 20, 40, 0};
  for (std::size_t i = 0; i < 6; ++i) {
    m2007.set(i, 3, delta_2007[i]);
    m2008.set(i, 3, delta_2008[i]);
  }

  std::vector<std::vector<DynamicsRecord>> periods{all_dynamics(m2007, m2008),
                                                   all_dynamics(m2008, m2009)};
  std::vector<double> increments{0.0, 0.0};  // system totals held flat by construction

  taxonomy::ClassificationReport report =
      taxonomy::classify(all_indicators(m2009), periods, increments);

  auto types_of = [&](std::string_view field) {
    for (const auto& c : report.classifications) {
      if (c.field == field) {
        std::string out;
        for (auto t : c.types) out.push_back(taxonomy::to_char(t));
        return out;
      }
    }
    fail("missing classification for " + std::string(field));
    return std::string();
  };

  check(types_of("ALPHA") == "G", "high-self-dependence exporter not in panel G: " + types_of("ALPHA"));
  check(types_of("BETA") == "C", "balanced mid-size field not in panel C: " + types_of("BETA"));
  check(types_of("GAMMA") == "F", "low-ratio importer not in panel F: " + types_of("GAMMA"));
  check(types_of("DELTA").find('I') != std::string::npos,
        "field above the increment in both periods lacks type I: " + types_of("DELTA"));
  g_notes.push_back("planted G / C / F panels and type I under median splits");
}

// ---------------------------------------------------------------------------
// Criterion 10: determinism of the CLI pipeline.

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void run_tool(const std::string& tool, const std::string& args) {
  const std::string cmd = tool + " " + args + " > /dev/null 2>&1";
  if (std::system(cmd.c_str()) != 0) fail("command failed: " + cmd);
}

void run_pipeline(const std::string& tool, const fs::path& dir) {
  fs::create_directories(dir);
  std::ofstream spec(dir / "spec.json");
  spec << R"({"n_categories": 3, "journals_per_category": 8, "multi_assign_fraction": 0.25,
              "edge_model": "preferential", "exponent": 1.0,
              "years": [2008, 2009], "seed": 1301, "total_edges": 8000})";
  spec.close();

  const std::string out = dir.string();
  run_tool(tool, "synth --config " + (dir / "spec.json").string() + " --out " + out);
  const std::string inputs = " --edges " + (dir / "edges.csv").string() + " --map " +
                             (dir / "journal_categories.csv").string() + " --universe " +
                             (dir / "categories.csv").string() + " --out " + out;
  run_tool(tool, "build" + inputs + " --year 2008");
  run_tool(tool, "build" + inputs + " --year 2009");
  run_tool(tool, "metrics --matrix " + (dir / "matrix_2009.csv").string() + " --pubs " +
                     (dir / "publications.csv").string() + " --format json --out " + out);
  run_tool(tool, "metrics --matrix " + (dir / "matrix_2009.csv").string() + " --pubs " +
                     (dir / "publications.csv").string() + " --out " + out);
  run_tool(tool, "dynamics --from " + (dir / "matrix_2008.csv").string() + " --to " +
                     (dir / "matrix_2009.csv").string() +
                     " --total-from 8000 --total-to 8000 --out " + out);
  run_tool(tool, "classify --matrix " + (dir / "matrix_2009.csv").string() + " --dynamics " +
                     (dir / "dynamics_2008_2009.csv").string() + " --out " + out);
  run_tool(tool, "stats --input " + (dir / "indicators_2009.csv").string() +
                     " --column exports --bins 6 --out " + out);
  run_tool(tool, "rank --input " + (dir / "indicators_2009.csv").string() +
                     " --column ratio --top 5 --out " + out);
}

void criterion_determinism(const std::string& tool) {
  const fs::path base = fs::temp_directory_path() / "scitrade_acceptance";
  fs::remove_all(base);
  run_pipeline(tool, base / "run1");
  run_pipeline(tool, base / "run2");

  const char* files[] = {
      "edges.csv",         "journal_categories.csv",  "categories.csv",
      "publications.csv",  "manifest.json",           "matrix_2008.csv",
      "matrix_2009.csv",   "indicators_2009.csv",     "indicators_2009.json",
      "dynamics_2008_2009.csv", "classification_2009.csv", "classification_2009.json",
      "stats_exports.csv", "histogram_exports.csv",   "qq_exports.csv",
      "rank_ratio.csv",
  };
  for (const char* name : files) {
    const std::string a = slurp(base / "run1" / name);
    const std::string b = slurp(base / "run2" / name);
    check(!a.empty(), std::string("missing output ") + name);
    check(a == b, std::string("bytes differ across runs: ") + name);
  }
  // Matrix sidecars diverge only in recorded input paths (run1 vs run2),
  // which is exactly what the manifest is for; the matrices themselves are
  // compared bytewise above.
  fs::remove_all(base);
  g_notes.push_back("16 report files byte-identical across two pipeline runs");
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: scitrade_acceptance <path-to-scitrade>\n";
    return 2;
  }
  const std::string tool = argv[1];

  struct Criterion {
    int id;
    const char* name;
    std::function<void()> body;
  };
  const std::vector<Criterion> criteria{
      {1, "published export/import and self-dependence ratios re-derive", criterion_ratios},
      {2, "published export and publication growth percentages re-derive", criterion_dynamics},
      {3, "system-total increments re-derive", criterion_increments},
      {4, "standard-error formulas round to the quoted values", criterion_standard_errors},
      {5, "indicator operations equal the brute-force reference", criterion_oracle_equivalence},
      {6, "conservation laws hold on random matrices", criterion_conservation},
      {7, "multiple counting expands and totals correctly", criterion_multiple_counting},
      {8, "statistics match extended-precision references", criterion_statistics_oracle},
      {9, "planted profiles classify into their panels", criterion_taxonomy},
      {10, "pipeline output is byte-identical across runs", [&] { criterion_determinism(tool); }},
  };

  int failures = 0;
  for (const Criterion& criterion : criteria) {
    g_notes.clear();
    try {
      criterion.body();
      std::cout << "[PASS] criterion " << criterion.id << ": " << criterion.name;
      if (!g_notes.empty()) std::cout << " (" << g_notes.front() << ")";
      std::cout << "\n";
    } catch (const Failure& f) {
      ++failures;
      std::cout << "[FAIL] criterion " << criterion.id << ": " << criterion.name << "\n"
                << "       " << f.detail << "\n";
    } catch (const std::exception& e) {
      ++failures;
      std::cout << "[FAIL] criterion " << criterion.id << ": " << criterion.name << "\n"
                << "       unexpected error: " << e.what() << "\n";
    }
  }

  if (failures) {
    std::cout << failures << " of " << criteria.size() << " criteria failed\n";
    return 1;
  }
  std::cout << "all " << criteria.size() << " criteria passed\n";
  return 0;
}
