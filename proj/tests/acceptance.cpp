// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "gridspectra/analysis.hpp"
#include "gridspectra/closed_form.hpp"
#include "gridspectra/eigensystem.hpp"
#include "gridspectra/oracle.hpp"
#include "gridspectra/shift_solver.hpp"

using namespace gridspectra;

namespace {

constexpr LaplacianKind kAllKinds[] = {LaplacianKind::Combinatorial, LaplacianKind::Unoriented,
                                       LaplacianKind::Normalized, LaplacianKind::RandomWalk};

// Pinned once from the dense spectrum of the 32x32 normalized Laplacian.
constexpr double kPinnedKs32 = 0.06869917137500359;

std::vector<double> ramp_weights(std::size_t d) {
  std::vector<double> w(d);
  std::iota(w.begin(), w.end(), 1.0);
  return w;
}

std::vector<GridSpec> oracle_suite() {
  const std::vector<std::vector<int>> shapes{{2}, {3}, {5}, {2, 2}, {2, 3}, {3, 3}, {3, 4}, {2, 2, 2}, {2, 3, 4}};
  std::vector<GridSpec> grids;
  for (const auto& dims : shapes) {
    grids.emplace_back(dims);
    grids.emplace_back(dims, ramp_weights(dims.size()));
  }
  return grids;
}

std::vector<GridSpec> residual_suite() {
  return {GridSpec({10, 10}), GridSpec({10, 10}, {1.0, 2.0}), GridSpec({5, 5, 5}),
          GridSpec({5, 5, 5}, {1.0, 2.0, 3.0})};
}

std::vector<GridSpec> all_suite() {
  auto grids = oracle_suite();
  for (auto& g : residual_suite()) grids.push_back(g);
  return grids;
}

std::string describe(const GridSpec& spec) {
  std::ostringstream os;
  os << "[";
  for (std::size_t j = 0; j < spec.dimension(); ++j) os << (j ? "," : "") << spec.dim(j);
  os << "]w[";
  for (std::size_t j = 0; j < spec.dimension(); ++j) os << (j ? "," : "") << spec.weight(j);
  os << "]";
  return os.str();
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

struct Outcome {
  bool pass = true;
  std::string detail;
};

Outcome oracle_spectrum_equality() {
  const auto start = std::chrono::steady_clock::now();
  double worst = 0.0;
  std::string worst_case;
  bool pass = true;
  for (const auto& spec : oracle_suite()) {
    for (auto kind : kAllKinds) {
      const auto report = spectrum_compare(spec, kind, 1e-7);
      pass = pass && report.pass;
      if (report.max_deviation >= worst) {
        worst = report.max_deviation;
        worst_case = describe(spec) + " " + std::string(to_string(kind));
      }
    }
  }
  const double elapsed = seconds_since(start);
  std::ostringstream os;
  os << "max deviation " << worst << " (" << worst_case << "), " << elapsed << " s";
  return {pass && elapsed < 30.0, os.str()};
}

Outcome residual_suite_check() {
  const auto start = std::chrono::steady_clock::now();
  double worst = 0.0;
  std::size_t pairs = 0;
  for (const auto& spec : residual_suite()) {
    for (auto kind : kAllKinds) {
      for (const auto& z : enumerate_eigen_indices(spec)) {
        worst = std::max(worst, residual_norm(spec, kind, eigenpair(spec, kind, z)));
        ++pairs;
      }
    }
  }
  const double elapsed = seconds_since(start);
  std::ostringstream os;
  os << pairs << " eigenpairs, max residual " << worst << ", " << elapsed << " s";
  return {worst <= 1e-8 && elapsed < 60.0, os.str()};
}

Outcome orthogonality() {
  bool pass = true;
  std::ostringstream os;
  for (const auto& spec : {GridSpec({3, 3}), GridSpec({2, 2})}) {
    for (auto kind : kAllKinds) {
      const double g = gram_offdiag_max(analytic_eigenvectors(spec, kind));
      pass = pass && g <= 1e-7 * static_cast<double>(spec.node_count());
      os << describe(spec) << " " << to_string(kind) << "=" << g << " ";
    }
    // Random-walk vectors are orthogonal under the D^-1 inner product; reported, not scored.
    auto vectors = analytic_eigenvectors(spec, LaplacianKind::RandomWalk);
    const auto deg = degree_vector(spec);
    for (auto& v : vectors) {
      for (std::size_t i = 0; i < v.size(); ++i) v[i] /= std::sqrt(deg[i]);
    }
    os << describe(spec) << " random-walk(D^-1 weighted)=" << gram_offdiag_max(vectors) << " ";
  }
  return {pass, os.str()};
}

Outcome zero_sum() {
  double worst_ratio = 0.0;
  for (const auto& spec : all_suite()) {
    for (const auto& z : enumerate_eigen_indices(spec)) {
      if (std::all_of(z.z.begin(), z.z.end(), [](int c) { return c == 0; })) continue;
      const auto v = comb_eigenvector(z, spec);
      const double sum = std::accumulate(v.begin(), v.end(), 0.0);
      worst_ratio = std::max(worst_ratio, std::abs(sum) / static_cast<double>(spec.node_count()));
    }
  }
  std::ostringstream os;
  os << "max |sum| / n = " << worst_ratio;
  return {worst_ratio <= 1e-9, os.str()};
}

Outcome known_values() {
  auto deviation = [](const std::vector<double>& got, const std::vector<double>& want) {
    if (got.size() != want.size()) return 1.0;
    double worst = 0.0;
    for (std::size_t i = 0; i < got.size(); ++i) worst = std::max(worst, std::abs(got[i] - want[i]));
    return worst;
  };
  const double p3c = deviation(analytic_eigenvalues(GridSpec({3}), LaplacianKind::Combinatorial), {0.0, 1.0, 3.0});
  const double p3n = deviation(analytic_eigenvalues(GridSpec({3}), LaplacianKind::Normalized), {0.0, 1.0, 2.0});
  const double k2 =
      deviation(analytic_eigenvalues(GridSpec({2}, {3.0}), LaplacianKind::Combinatorial), {0.0, 6.0});
  std::ostringstream os;
  os << "P3 comb " << p3c << ", P3 normalized " << p3n << ", [2]w[3] comb " << k2;
  return {std::max({p3c, p3n, k2}) <= 1e-10, os.str()};
}

Outcome range_claims() {
  double worst_norm = 0.0;
  for (const auto& spec : all_suite()) {
    worst_norm = std::max(worst_norm, std::abs(full_spectrum(spec, LaplacianKind::Normalized).max - 2.0));
  }
  const auto path = full_spectrum(GridSpec({64}), LaplacianKind::Combinatorial);
  const double ratio = path.max / path.spec.combinatorial_bound();
  bool bound_ok = path.max <= path.spec.combinatorial_bound();
  for (const auto& spec : all_suite()) {
    bound_ok = bound_ok && full_spectrum(spec, LaplacianKind::Combinatorial).max <= spec.combinatorial_bound();
  }
  std::ostringstream os;
  os << "max |normalized max - 2| = " << worst_norm << ", [64] comb max/bound = " << ratio;
  return {worst_norm <= 1e-9 && bound_ok && ratio >= 0.99, os.str()};
}

Outcome one_dimensional() {
  ShiftSolverOptions general;
  general.closed_form_shortcuts = false;
  double worst_delta = 0.0;
  double min_gap = 2.0;
  for (int n = 2; n <= 64; ++n) {
    const GridSpec spec({n});
    std::vector<double> values;
    for (const auto& z : enumerate_eigen_indices(spec)) {
      for (const auto& options : {ShiftSolverOptions{}, general}) {
        const auto s = solve_eigenvalue_and_shifts(z, spec, options);
        worst_delta = std::max(worst_delta, std::abs(s.shifts.deltas[0]));
      }
      values.push_back(solve_eigenvalue_and_shifts(z, spec).lambda);
    }
    std::sort(values.begin(), values.end());
    for (std::size_t i = 1; i < values.size(); ++i) min_gap = std::min(min_gap, values[i] - values[i - 1]);
  }
  std::ostringstream os;
  os << "max |delta| = " << worst_delta << ", min eigenvalue gap = " << min_gap;
  return {worst_delta <= 1e-10 && min_gap > 0.0, os.str()};
}

Outcome non_uniformity() {
  const auto s = full_spectrum(GridSpec({32, 32}), LaplacianKind::Normalized);
  const double ks = ks_uniformity(s.values, 2.0);
  std::ostringstream os;
  os.precision(17);
  os << "KS = " << ks << " (pinned " << kPinnedKs32 << ")";
  return {ks > 0.05 && std::abs(ks - kPinnedKs32) <= 1e-9, os.str()};
}

Outcome scale_laws() {
  double comb_rel = 0.0;
  double norm_abs = 0.0;
  for (const auto& spec : all_suite()) {
    const auto scaled = spec.scaled(7.0);
    for (const auto& z : enumerate_eigen_indices(spec)) {
      const double base = comb_eigenvalue(z, spec);
      const double big = comb_eigenvalue(z, scaled);
      comb_rel = std::max(comb_rel, std::abs(big - 7.0 * base) / std::max(1.0, 7.0 * base));
      const auto a = solve_eigenvalue_and_shifts(z, spec);
      const auto b = solve_eigenvalue_and_shifts(z, scaled);
      norm_abs = std::max(norm_abs, std::abs(a.lambda - b.lambda));
      for (std::size_t j = 0; j < spec.dimension(); ++j) {
        norm_abs = std::max(norm_abs, std::abs(a.shifts.deltas[j] - b.shifts.deltas[j]));
      }
    }
  }
  std::ostringstream os;
  os << "comb/unoriented relative " << comb_rel << ", normalized (lambda, delta) " << norm_abs;
  return {comb_rel <= 1e-10 && norm_abs <= 1e-10, os.str()};
}

Outcome performance() {
  auto start = std::chrono::steady_clock::now();
  const auto comb = analytic_eigenvalues(GridSpec({100, 100}), LaplacianKind::Combinatorial);
  const double comb_s = seconds_since(start);
  start = std::chrono::steady_clock::now();
  SpectrumOptions serial;
  serial.threads = 1;
  const auto norm = analytic_spectrum(GridSpec({32, 32}), LaplacianKind::Normalized, serial);
  const double norm_s = seconds_since(start);
  std::ostringstream os;
  os << "[100,100] combinatorial " << comb_s << " s (" << comb.size() << " values), [32,32] normalized " << norm_s
     << " s (" << norm.size() << " solves)";
  return {comb_s < 1.0 && norm_s < 30.0 && comb.size() == 10000 && norm.size() == 1024, os.str()};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> check;
  };
  const std::vector<Criterion> criteria{
      {"AC1 oracle spectrum equality", oracle_spectrum_equality},
      {"AC2 residual suite", residual_suite_check},
      {"AC3 orthogonality", orthogonality},
      {"AC4 zero-sum", zero_sum},
      {"AC5 known closed values", known_values},
      {"AC6 range claims", range_claims},
      {"AC7 1-d distinctness and zero shifts", one_dimensional},
      {"AC8 non-uniformity regression", non_uniformity},
      {"AC9 scale laws", scale_laws},
      {"AC10 performance sanity", performance},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    Outcome outcome;
    try {
      outcome = c.check();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    if (!outcome.pass) ++failures;
    std::printf("%s %s: %s\n", outcome.pass ? "PASS" : "FAIL", c.name, outcome.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
