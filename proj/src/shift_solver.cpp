#include "gridspectra/shift_solver.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <sstream>

#include "gridspectra/error.hpp"

namespace gridspectra {

namespace {

using std::numbers::pi;

std::string describe(const EigenIndex& z) { return "[" + format_eigen_index(z, ',') + "]"; }

double phase_step(int z_l, int n_l, double delta) { return (z_l * pi - 2.0 * delta) / (n_l - 1); }

template <typename F>
double bisect(F&& f, double lo, double hi, double f_lo, int max_iterations, double width) {
  for (int it = 0; it < max_iterations && hi - lo > width; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double f_mid = f(mid);
    if (f_mid == 0.0) return mid;
    if ((f_lo < 0.0) == (f_mid < 0.0)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

// z_j / (n_j - 1) equal across dimensions: delta = 0 solves every shift
// equation and all cosines coincide.
std::optional<double> common_phase_ratio(const EigenIndex& z, const GridSpec& spec) {
  for (std::size_t j = 1; j < spec.dimension(); ++j) {
    const long long lhs = static_cast<long long>(z.z[j]) * (spec.dim(0) - 1);
    const long long rhs = static_cast<long long>(z.z[0]) * (spec.dim(j) - 1);
    if (lhs != rhs) return std::nullopt;
  }
  return static_cast<double>(z.z[0]) / (spec.dim(0) - 1);
}

std::vector<double> shift_factors(int z_j, int n_j, double delta) {
  std::vector<double> f(static_cast<std::size_t>(n_j));
  const double step = phase_step(z_j, n_j, delta);
  for (int x = 1; x <= n_j; ++x) {
    const double c = std::cos((x - 1) * step + delta);
    f[static_cast<std::size_t>(x - 1)] = (x % 2 == 1) ? -c : c;
  }
  return f;
}

// prod_j factor_j(x_j) over all nodes in id order.
std::vector<double> shifted_product(const EigenIndex& z, const ShiftVector& shifts, const GridSpec& spec) {
  const std::size_t d = spec.dimension();
  std::vector<std::vector<double>> factors(d);
  for (std::size_t j = 0; j < d; ++j) factors[j] = shift_factors(z.z[j], spec.dim(j), shifts.deltas[j]);
  std::vector<double> out(spec.node_count());
  std::vector<std::size_t> x(d, 0);
  for (auto& value : out) {
    double prod = 1.0;
    for (std::size_t j = 0; j < d; ++j) prod *= factors[j][x[j]];
    value = prod;
    for (std::size_t j = d; j-- > 0;) {
      if (++x[j] < factors[j].size()) break;
      x[j] = 0;
    }
  }
  return out;
}

void require_shifts(const EigenIndex& z, const ShiftVector& shifts, const GridSpec& spec) {
  require_canonical(z, spec);
  if (shifts.deltas.size() != spec.dimension()) {
    throw DomainError("shift vector length does not match grid dimension");
  }
}

}  // namespace

double shift_equation_residual(double lambda, double delta, int z_l, int n_l) {
  return (lambda - 1.0) * std::cos(delta) - std::cos(delta - phase_step(z_l, n_l, delta));
}

double delta_from_lambda(double lambda, int z_l, int n_l, const ShiftSolverOptions& options) {
  if (!(lambda >= 0.0 && lambda <= 2.0)) throw DomainError("lambda must lie in [0, 2]");
  if (n_l < 2) throw DomainError("dimension needs at least 2 layers");
  if (z_l < 0 || z_l > n_l - 1) throw DomainError("eigen index component outside [0, n - 1]");

  auto h = [&](double delta) { return shift_equation_residual(lambda, delta, z_l, n_l); };

  // even in delta at the ends of the index range
  const bool symmetric = z_l == 0 || z_l == n_l - 1;
  const double hi_end = pi / 2 - options.bracket_margin;
  const double lo_end = symmetric ? 0.0 : -hi_end;
  const int scan = std::max(options.delta_scan_points, 2);

  std::vector<double> roots;
  double a = lo_end;
  double fa = h(a);
  if (fa == 0.0) roots.push_back(a);
  for (int k = 1; k <= scan; ++k) {
    const double b = lo_end + (hi_end - lo_end) * k / scan;
    const double fb = h(b);
    if (fb == 0.0) {
      roots.push_back(b);
    } else if (fa != 0.0 && (fa < 0.0) != (fb < 0.0)) {
      roots.push_back(bisect(h, a, b, fa, options.max_iterations, 0.0));
    }
    a = b;
    fa = fb;
  }

  std::ostringstream where;
  where << " (lambda=" << lambda << ", z=" << z_l << ", n=" << n_l << ")";
  if (roots.empty()) throw SolverError("no sign change of the shift equation" + where.str());
  if (roots.size() > 1) throw SolverError("shift equation has multiple roots" + where.str());
  const double residual = std::abs(h(roots.front()));
  if (residual > 1e-12) throw SolverError("shift equation residual too large" + where.str(), residual);
  return roots.front();
}

double lambda_from_shifts(const EigenIndex& z, const ShiftVector& shifts, const GridSpec& spec) {
  double sum = 0.0;
  for (std::size_t j = 0; j < spec.dimension(); ++j) {
    sum += spec.weight(j) / spec.weight_sum() * std::cos(phase_step(z.z[j], spec.dim(j), shifts.deltas[j]));
  }
  return 1.0 + sum;
}

double shift_system_residual(const EigenIndex& z, const GridSpec& spec, double lambda, const ShiftVector& shifts) {
  require_shifts(z, shifts, spec);
  double worst = std::abs(lambda - lambda_from_shifts(z, shifts, spec));
  for (std::size_t j = 0; j < spec.dimension(); ++j) {
    worst = std::max(worst, std::abs(shift_equation_residual(lambda, shifts.deltas[j], z.z[j], spec.dim(j))));
  }
  return worst;
}

ShiftSolution solve_eigenvalue_and_shifts(const EigenIndex& z, const GridSpec& spec,
                                          const ShiftSolverOptions& options) {
  require_canonical(z, spec);
  const std::size_t d = spec.dimension();

  if (options.closed_form_shortcuts) {
    if (const auto ratio = common_phase_ratio(z, spec)) {
      ShiftSolution s;
      const double c = std::cos(pi * *ratio / 2.0);
      s.lambda = 2.0 * c * c;
      s.shifts.deltas.assign(d, 0.0);
      s.residual = shift_system_residual(z, spec, s.lambda, s.shifts);
      return s;
    }
  }

  auto shifts_at = [&](double lambda) {
    ShiftVector shifts{std::vector<double>(d)};
    for (std::size_t j = 0; j < d; ++j) shifts.deltas[j] = delta_from_lambda(lambda, z.z[j], spec.dim(j), options);
    return shifts;
  };
  auto g = [&](double lambda) { return lambda - lambda_from_shifts(z, shifts_at(lambda), spec); };

  try {
    // g(0) <= 0 <= g(2); isolate the crossing on a coarse grid, then bisect.
    const int scan = std::max(options.lambda_scan_points, 1);
    struct Bracket {
      double lo, hi, f_lo;
    };
    std::vector<Bracket> brackets;
    double a = 0.0;
    double fa = g(a);
    if (fa == 0.0) brackets.push_back({a, a, fa});
    for (int k = 1; k <= scan; ++k) {
      const double b = 2.0 * k / scan;
      const double fb = g(b);
      if (fb == 0.0) {
        brackets.push_back({b, b, fb});
      } else if (fa != 0.0 && (fa < 0.0) != (fb < 0.0)) {
        brackets.push_back({a, b, fa});
      }
      a = b;
      fa = fb;
    }
    if (brackets.empty()) throw SolverError("no eigenvalue bracket found");
    if (brackets.size() > 1) throw SolverError("multiple eigenvalue roots found");

    Bracket br = brackets.front();
    int iterations = 0;
    while (br.hi - br.lo > options.lambda_tolerance) {
      if (iterations >= options.max_iterations) {
        throw SolverError("bisection did not converge", std::abs(g(0.5 * (br.lo + br.hi))));
      }
      ++iterations;
      const double mid = 0.5 * (br.lo + br.hi);
      if (mid <= br.lo || mid >= br.hi) break;
      const double f_mid = g(mid);
      if (f_mid == 0.0) {
        br = {mid, mid, f_mid};
        break;
      }
      if ((br.f_lo < 0.0) == (f_mid < 0.0)) {
        br.lo = mid;
        br.f_lo = f_mid;
      } else {
        br.hi = mid;
      }
    }

    ShiftSolution s;
    s.lambda = 0.5 * (br.lo + br.hi);
    s.shifts = shifts_at(s.lambda);
    s.iterations = iterations;
    s.residual = shift_system_residual(z, spec, s.lambda, s.shifts);
    if (s.residual > options.acceptance_residual) {
      throw SolverError("shift system residual above tolerance", s.residual);
    }
    return s;
  } catch (const SolverError& e) {
    throw SolverError(std::string(e.what()) + " for z=" + describe(z), e.best_residual());
  }
}

double normalized_eigenvector_component(const EigenIndex& z, const ShiftVector& shifts, const GridSpec& spec,
                                        const NodeVector& x) {
  require_shifts(z, shifts, spec);
  double value = std::sqrt(node_degree(x, spec));
  for (std::size_t j = 0; j < spec.dimension(); ++j) {
    const double delta = shifts.deltas[j];
    const int xj = x.coords[j];
    const double c = std::cos((xj - 1) * phase_step(z.z[j], spec.dim(j), delta) + delta);
    value *= (xj % 2 == 1) ? -c : c;
  }
  return value;
}

std::vector<double> normalized_eigenvector(const EigenIndex& z, const ShiftVector& shifts, const GridSpec& spec,
                                           bool normalize) {
  require_shifts(z, shifts, spec);
  auto v = shifted_product(z, shifts, spec);
  const auto degrees = degree_vector(spec);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] *= std::sqrt(degrees[i]);
  if (normalize) normalize_in_place(v);
  return v;
}

double randomwalk_eigenvector_component(const EigenIndex& z, const ShiftVector& shifts, const GridSpec& spec,
                                        const NodeVector& x) {
  return std::sqrt(node_degree(x, spec)) * normalized_eigenvector_component(z, shifts, spec, x);
}

std::vector<double> randomwalk_eigenvector(const EigenIndex& z, const ShiftVector& shifts, const GridSpec& spec,
                                           bool normalize) {
  auto v = normalized_eigenvector(z, shifts, spec, false);
  const auto degrees = degree_vector(spec);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = std::sqrt(degrees[i]) * v[i];
  if (normalize) normalize_in_place(v);
  return v;
}

OneDimEigenPair onedim_normalized_eigenpair(int z, int n) {
  if (n < 2) throw DomainError("path graph needs at least 2 nodes");
  if (z < 0 || z > n - 1) throw DomainError("eigen index outside [0, n - 1]");
  OneDimEigenPair pair;
  const double c = std::cos(pi * z / (2.0 * (n - 1)));
  pair.lambda = 2.0 * c * c;
  pair.vector.resize(static_cast<std::size_t>(n));
  for (int x = 1; x <= n; ++x) {
    double v = std::cos(pi * z / (n - 1) * (x - 1));
    if (x % 2 == 1) v = -v;
    if (x == 1 || x == n) v /= std::numbers::sqrt2;
    pair.vector[static_cast<std::size_t>(x - 1)] = v;
  }
  return pair;
}

EigenPair normalized_eigenpair(const EigenIndex& z, const GridSpec& spec, bool normalize,
                               const ShiftSolverOptions& options) {
  auto solution = solve_eigenvalue_and_shifts(z, spec, options);
  auto v = normalized_eigenvector(z, solution.shifts, spec, normalize);
  return EigenPair{LaplacianKind::Normalized, z, solution.lambda, std::move(v), std::move(solution.shifts)};
}

EigenPair randomwalk_eigenpair(const EigenIndex& z, const GridSpec& spec, bool normalize,
                               const ShiftSolverOptions& options) {
  auto solution = solve_eigenvalue_and_shifts(z, spec, options);
  auto v = randomwalk_eigenvector(z, solution.shifts, spec, normalize);
  return EigenPair{LaplacianKind::RandomWalk, z, solution.lambda, std::move(v), std::move(solution.shifts)};
}

}  // namespace gridspectra
