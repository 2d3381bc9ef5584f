#include "scitrade/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "scitrade/error.hpp"

namespace scitrade::stats {

namespace {

constexpr double kPi = 3.14159265358979323846;

double mean_of(std::span<const double> xs) {
  return std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(xs.size());
}

}  // namespace

double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); }

// Acklam's rational approximation with one Halley refinement step; good to
// a few ulps over (0, 1).
double normal_quantile(double p) {
  if (!(p > 0.0 && p < 1.0)) throw ValidationError("normal quantile needs p in (0, 1)");

  static constexpr double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                                 -2.759285104469687e+02, 1.383577518672690e+02,
                                 -3.066479806614716e+01, 2.506628277459239e+00};
  static constexpr double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                                 -1.556989798598866e+02, 6.680131188771972e+01,
                                 -1.328068155288572e+01};
  static constexpr double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                                 -2.400758277161838e+00, -2.549732539343734e+00,
                                 4.374664141464968e+00,  2.938163982698783e+00};
  static constexpr double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                                 2.445134137142996e+00, 3.754408661907416e+00};

  constexpr double p_low = 0.02425;
  double x;
  if (p < p_low) {
    double q = std::sqrt(-2.0 * std::log(p));
    x = (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
        ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  } else if (p <= 1.0 - p_low) {
    double q = p - 0.5;
    double r = q * q;
    x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
        (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
  } else {
    double q = std::sqrt(-2.0 * std::log(1.0 - p));
    x = -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
        ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }

  // Halley step against the exact CDF.
  double e = normal_cdf(x) - p;
  double u = e * std::sqrt(2.0 * kPi) * std::exp(x * x / 2.0);
  x = x - u / (1.0 + x * u / 2.0);
  return x;
}

double kolmogorov_asymptotic_p(double lambda) {
  if (lambda <= 0.0) return 1.0;
  if (lambda < 1.18) {
    // Theta-function form of the CDF; avoids cancellation for small lambda.
    const double t = std::exp(-kPi * kPi / (8.0 * lambda * lambda));
    const double cdf = std::sqrt(2.0 * kPi) / lambda *
                       (t + std::pow(t, 9.0) + std::pow(t, 25.0) + std::pow(t, 49.0));
    return std::clamp(1.0 - cdf, 0.0, 1.0);
  }
  double sum = 0.0;
  double sign = 1.0;
  for (int k = 1; k <= 100; ++k) {
    double term = std::exp(-2.0 * k * k * lambda * lambda);
    sum += sign * term;
    sign = -sign;
    if (term < 1e-300) break;
  }
  return std::clamp(2.0 * sum, 0.0, 1.0);
}

DistributionSummary summarize(std::span<const double> xs) {
  const std::size_t n = xs.size();
  if (n < 4) throw ValidationError("distribution summary needs at least 4 values");

  DistributionSummary s;
  s.n = n;
  s.se_skewness = std::sqrt(6.0 / static_cast<double>(n));
  s.se_kurtosis = std::sqrt(24.0 / static_cast<double>(n));

  // A constant sample is detected exactly; the accumulated mean would
  // otherwise manufacture rounding-noise variance.
  const auto [min_it, max_it] = std::minmax_element(xs.begin(), xs.end());
  if (*min_it == *max_it) {
    s.mean = *min_it;
    s.note = "zero variance: skewness, kurtosis and KS are undefined";
    return s;
  }

  // Long-double accumulation: the third moment cancels heavily on
  // near-symmetric data and plain doubles lose digits there.
  long double sum = 0;
  for (double x : xs) sum += x;
  const long double mean = sum / static_cast<long double>(n);
  s.mean = static_cast<double>(mean);

  long double m2 = 0, m3 = 0, m4 = 0;
  for (double x : xs) {
    const long double d = x - mean;
    const long double d2 = d * d;
    m2 += d2;
    m3 += d2 * d;
    m4 += d2 * d2;
  }
  s.sd = static_cast<double>(std::sqrt(m2 / static_cast<long double>(n - 1)));
  if (m2 == 0.0L) {
    s.note = "zero variance: skewness, kurtosis and KS are undefined";
    return s;
  }
  m2 /= static_cast<long double>(n);
  m3 /= static_cast<long double>(n);
  m4 /= static_cast<long double>(n);
  s.skewness = static_cast<double>(m3 / std::pow(m2, 1.5L));
  s.kurtosis = static_cast<double>(m4 / (m2 * m2) - 3.0L);

  KsTest ks = ks_normal_test(xs);
  s.ks_statistic = ks.statistic;
  s.ks_p_value = ks.p_value;
  return s;
}

KsTest ks_normal_test(std::span<const double> xs) {
  const std::size_t n = xs.size();
  if (n < 4) throw ValidationError("KS normality test needs at least 4 values");

  const auto [min_it, max_it] = std::minmax_element(xs.begin(), xs.end());
  if (*min_it == *max_it) throw ValidationError("KS normality test needs nonzero variance");

  const double mean = mean_of(xs);
  double ss = 0;
  for (double x : xs) ss += (x - mean) * (x - mean);
  if (ss == 0.0) throw ValidationError("KS normality test needs nonzero variance");
  const double sd = std::sqrt(ss / static_cast<double>(n - 1));

  std::vector<double> sorted(xs.begin(), xs.end());
  std::sort(sorted.begin(), sorted.end());

  double d = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double f = normal_cdf((sorted[i] - mean) / sd);
    const double lo = f - static_cast<double>(i) / static_cast<double>(n);
    const double hi = static_cast<double>(i + 1) / static_cast<double>(n) - f;
    d = std::max({d, lo, hi});
  }

  KsTest out;
  out.statistic = d;
  out.p_value = kolmogorov_asymptotic_p(std::sqrt(static_cast<double>(n)) * d);
  return out;
}

std::vector<double> mid_ranks(std::span<const double> xs) {
  const std::size_t n = xs.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return xs[a] < xs[b]; });

  std::vector<double> ranks(n);
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j + 1 < n && xs[order[j + 1]] == xs[order[i]]) ++j;
    // Tied block [i, j] gets the average of ranks i+1 .. j+1.
    const double rank = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = rank;
    i = j + 1;
  }
  return ranks;
}

std::optional<SpearmanResult> spearman(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size()) throw ValidationError("spearman needs equal-length vectors");
  if (xs.size() < 3) throw ValidationError("spearman needs at least 3 pairs");

  const std::vector<double> rx = mid_ranks(xs);
  const std::vector<double> ry = mid_ranks(ys);
  const double mx = mean_of(rx);
  const double my = mean_of(ry);

  double sxy = 0, sxx = 0, syy = 0;
  for (std::size_t i = 0; i < rx.size(); ++i) {
    const double dx = rx[i] - mx;
    const double dy = ry[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0.0 || syy == 0.0) return std::nullopt;

  SpearmanResult out;
  out.rho = sxy / std::sqrt(sxx * syy);
  out.rho_squared = out.rho * out.rho;
  return out;
}

PlotData plot_data(std::span<const double> xs, int bins) {
  const std::size_t n = xs.size();
  if (n < 2) throw ValidationError("plot data needs at least 2 values");
  if (bins < 1) throw ValidationError("plot data needs at least 1 bin");

  std::vector<double> sorted(xs.begin(), xs.end());
  std::sort(sorted.begin(), sorted.end());
  const double lo = sorted.front();
  const double hi = sorted.back();
  const double width = (hi - lo) / static_cast<double>(bins);

  PlotData out;
  out.histogram.resize(static_cast<std::size_t>(bins));
  for (int b = 0; b < bins; ++b) {
    out.histogram[b].low = lo + width * b;
    out.histogram[b].high = (b + 1 == bins) ? hi : lo + width * (b + 1);
  }
  for (double x : sorted) {
    std::size_t b = 0;
    if (width > 0.0) {
      b = std::min(static_cast<std::size_t>((x - lo) / width),
                   static_cast<std::size_t>(bins - 1));
    }
    ++out.histogram[b].count;
  }

  out.qq.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double p = (static_cast<double>(i) + 0.5) / static_cast<double>(n);
    out.qq.push_back({normal_quantile(p), sorted[i]});
  }
  return out;
}

}  // namespace scitrade::stats
