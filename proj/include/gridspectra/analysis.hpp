#pragma once

// Eigenvalue-distribution studies: sorted spectra with Fiedler / max values,
// histograms, empirical and limiting CDFs, uniformity statistics.

#include <cstddef>
#include <vector>

#include "gridspectra/eigensystem.hpp"
#include "gridspectra/grid.hpp"

namespace gridspectra {

struct SpectrumSummary {
  GridSpec spec;
  LaplacianKind kind;
  std::vector<double> values;  // ascending
  double fiedler = 0.0;        // second-smallest
  double max = 0.0;
};

struct CdfPoint {
  double value = 0.0;
  double fraction = 0.0;
  bool operator==(const CdfPoint&) const = default;
};

struct DistributionReport {
  double range_max = 0.0;
  std::vector<std::size_t> bins;
  std::vector<CdfPoint> cdf;
  double ks_statistic = 0.0;
};

SpectrumSummary full_spectrum(const GridSpec& spec, LaplacianKind kind, const SpectrumOptions& options = {});

/// 4 * sum_j w_j for combinatorial / unoriented, 2 for normalized / random-walk.
double default_range(const GridSpec& spec, LaplacianKind kind);

/// Equal-width bins on [0, range_max], the last one closed on the right.
/// Values may sit 1e-9 outside the range (rounding); anything further throws DomainError.
std::vector<std::size_t> eigenvalue_histogram(const std::vector<double>& values, std::size_t bins, double range_max);

/// One step per distinct value; `values` must be sorted.
std::vector<CdfPoint> empirical_cdf(const std::vector<double>& values);

/// sup over sample points of |ECDF(v) - v / range_max|; `values` sorted.
double ks_uniformity(const std::vector<double>& values, double range_max);

/// Limiting eigenvalue CDF of the unweighted d-dimensional combinatorial Laplacian,
///   F(v) = |{t in [0,1]^d : sum_j 4 sin^2(pi t_j / 2) <= v}|,
/// by midpoint tensor quadrature with `resolution` nodes per axis.
class LimitCdf {
public:
  LimitCdf(int d, int resolution);

  int dimension() const noexcept { return d_; }
  double support_max() const noexcept { return 4.0 * d_; }
  double operator()(double v) const;

private:
  int d_;
  std::vector<double> sums_;  // sorted
};

/// F sampled at resolution + 1 equally spaced points of [0, 4d].
std::vector<CdfPoint> limit_cdf_combinatorial(int d, int resolution);

/// sup over sample points of |ECDF - F|; `values` sorted.
double cdf_sup_distance(const std::vector<double>& values, const LimitCdf& cdf);

DistributionReport analyze_distribution(const std::vector<double>& values, std::size_t bins, double range_max);

}  // namespace gridspectra
