#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace scitrade::stats {

/// Moment diagnostics plus the normality test for one indicator vector.
///
/// Conventions: sd uses the n-1 denominator; skewness and kurtosis are the
/// simple sample moments g1 and g2 (excess), whose standard errors are
/// sqrt(6/n) and sqrt(24/n). The KS entries test against a normal with the
/// sample mean and sd and are absent for constant samples.
struct DistributionSummary {
  std::size_t n = 0;
  double mean = 0;
  double sd = 0;
  std::optional<double> skewness;
  std::optional<double> kurtosis;  // excess
  double se_skewness = 0;
  double se_kurtosis = 0;
  std::optional<double> ks_statistic;
  std::optional<double> ks_p_value;
  std::string note;  // reason when moments are absent
};

struct KsTest {
  double statistic = 0;  // D, in [0, 1]
  double p_value = 0;    // asymptotic, in [0, 1]
};

struct SpearmanResult {
  double rho = 0;
  double rho_squared = 0;
};

struct HistogramBin {
  double low = 0;
  double high = 0;
  std::size_t count = 0;
};

struct QqPoint {
  double theoretical = 0;  // standard normal quantile at (i - 0.5) / n
  double sample = 0;       // i-th order statistic
};

struct PlotData {
  std::vector<HistogramBin> histogram;
  std::vector<QqPoint> qq;
};

/// Throws ValidationError for n < 4.
DistributionSummary summarize(std::span<const double> xs);

/// One-sample KS test of xs against the normal with the sample mean and
/// sd; the p-value is the asymptotic Kolmogorov distribution evaluated at
/// sqrt(n) * D. No small-sample or estimated-parameter correction is
/// applied, so p is conservative when parameters come from the data.
/// Throws ValidationError for n < 4 or zero variance.
KsTest ks_normal_test(std::span<const double> xs);

/// Spearman rank correlation with mid-ranks for ties. Returns nullopt when
/// either side has zero rank variance. Throws ValidationError for length
/// mismatch or n < 3.
std::optional<SpearmanResult> spearman(std::span<const double> xs, std::span<const double> ys);

/// Equal-width histogram over [min, max] (last bin closed) and normal Q-Q
/// pairs for sorted xs. Throws ValidationError for n < 2 or bins < 1.
PlotData plot_data(std::span<const double> xs, int bins);

/// Standard normal CDF.
double normal_cdf(double z);

/// Standard normal quantile function (inverse CDF), p in (0, 1).
double normal_quantile(double p);

/// Survival function of the asymptotic Kolmogorov distribution at lambda.
double kolmogorov_asymptotic_p(double lambda);

/// Mid-ranks (1-based; ties get the average of their rank range).
std::vector<double> mid_ranks(std::span<const double> xs);

}  // namespace scitrade::stats
