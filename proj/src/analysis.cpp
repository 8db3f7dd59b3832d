#include "gridspectra/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "gridspectra/error.hpp"

namespace gridspectra {

namespace {
constexpr double kRangeSlack = 1e-9;
constexpr std::size_t kMaxQuadratureNodes = std::size_t{1} << 26;
}  // namespace

SpectrumSummary full_spectrum(const GridSpec& spec, LaplacianKind kind, const SpectrumOptions& options) {
  SpectrumSummary summary{spec, kind, analytic_eigenvalues(spec, kind, options), 0.0, 0.0};
  summary.fiedler = summary.values.at(1);
  summary.max = summary.values.back();
  return summary;
}

double default_range(const GridSpec& spec, LaplacianKind kind) {
  switch (kind) {
    case LaplacianKind::Combinatorial:
    case LaplacianKind::Unoriented: return spec.combinatorial_bound();
    case LaplacianKind::Normalized:
    case LaplacianKind::RandomWalk: return 2.0;
  }
  return 0.0;
}

std::vector<std::size_t> eigenvalue_histogram(const std::vector<double>& values, std::size_t bins, double range_max) {
  if (bins < 1) throw DomainError("histogram needs at least one bin");
  if (!(range_max > 0.0)) throw DomainError("histogram range must be positive");
  std::vector<std::size_t> counts(bins, 0);
  for (double v : values) {
    if (!(v >= -kRangeSlack && v <= range_max + kRangeSlack)) {
      throw DomainError("value " + std::to_string(v) + " outside histogram range [0, " + std::to_string(range_max) +
                        "]");
    }
    const double position = std::clamp(v, 0.0, range_max) / range_max * static_cast<double>(bins);
    const auto bin = std::min(static_cast<std::size_t>(position), bins - 1);
    ++counts[bin];
  }
  return counts;
}

std::vector<CdfPoint> empirical_cdf(const std::vector<double>& values) {
  std::vector<CdfPoint> steps;
  const auto n = static_cast<double>(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i + 1 < values.size() && values[i + 1] == values[i]) continue;
    steps.push_back({values[i], static_cast<double>(i + 1) / n});
  }
  if (!steps.empty()) steps.back().fraction = 1.0;
  return steps;
}

double ks_uniformity(const std::vector<double>& values, double range_max) {
  if (!(range_max > 0.0)) throw DomainError("uniform range must be positive");
  const auto n = static_cast<double>(values.size());
  double sup = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double u = std::clamp(values[i] / range_max, 0.0, 1.0);
    const double above = static_cast<double>(i + 1) / n - u;
    const double below = u - static_cast<double>(i) / n;
    sup = std::max({sup, above, below});
  }
  return sup;
}

LimitCdf::LimitCdf(int d, int resolution) : d_(d) {
  if (d < 1) throw DomainError("limit CDF needs d >= 1");
  if (resolution < 2) throw DomainError("limit CDF needs resolution >= 2");
  std::vector<double> axis(static_cast<std::size_t>(resolution));
  for (int k = 0; k < resolution; ++k) {
    const double s = std::sin(std::numbers::pi * (k + 0.5) / resolution / 2.0);
    axis[static_cast<std::size_t>(k)] = 4.0 * s * s;
  }
  std::size_t total = 1;
  for (int j = 0; j < d; ++j) {
    if (total > kMaxQuadratureNodes / axis.size()) throw DomainError("limit CDF quadrature grid too large");
    total *= axis.size();
  }
  sums_.assign(1, 0.0);
  for (int j = 0; j < d; ++j) {
    std::vector<double> next;
    next.reserve(sums_.size() * axis.size());
    for (double s : sums_) {
      for (double a : axis) next.push_back(s + a);
    }
    sums_ = std::move(next);
  }
  std::sort(sums_.begin(), sums_.end());
}

double LimitCdf::operator()(double v) const {
  const auto count = std::upper_bound(sums_.begin(), sums_.end(), v) - sums_.begin();
  return static_cast<double>(count) / static_cast<double>(sums_.size());
}

std::vector<CdfPoint> limit_cdf_combinatorial(int d, int resolution) {
  const LimitCdf cdf(d, resolution);
  std::vector<CdfPoint> samples;
  samples.reserve(static_cast<std::size_t>(resolution) + 1);
  for (int k = 0; k <= resolution; ++k) {
    const double v = cdf.support_max() * k / resolution;
    samples.push_back({v, cdf(v)});
  }
  return samples;
}

double cdf_sup_distance(const std::vector<double>& values, const LimitCdf& cdf) {
  const auto n = static_cast<double>(values.size());
  double sup = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double f = cdf(values[i]);
    sup = std::max({sup, std::abs(static_cast<double>(i + 1) / n - f), std::abs(static_cast<double>(i) / n - f)});
  }
  return sup;
}

DistributionReport analyze_distribution(const std::vector<double>& values, std::size_t bins, double range_max) {
  DistributionReport report;
  report.range_max = range_max;
  report.bins = eigenvalue_histogram(values, bins, range_max);
  report.cdf = empirical_cdf(values);
  report.ks_statistic = ks_uniformity(values, range_max);
  return report;
}

}  // namespace gridspectra
