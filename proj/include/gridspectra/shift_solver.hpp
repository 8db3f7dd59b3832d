#pragma once

// Eigensystems of the normalized Laplacian I - D^{-1/2} S D^{-1/2} and the
// random-walk Laplacian I - S D^{-1} of weighted grid graphs.
//
// Each canonical index z has an eigenvalue
//   lambda = 1 + sum_j (w_j / w_sum) cos((z_j pi - 2 delta_j) / (n_j - 1))
// where every shift delta_l satisfies
//   (lambda - 1) cos(delta_l) = cos(delta_l - (z_l pi - 2 delta_l) / (n_l - 1)).
// The pair is found by bisection on lambda: for a trial lambda each delta_l is
// the root of the second equation, which gives lambda' from the first; the
// search drives lambda - lambda' to zero.
//
// Index orientation is reversed relative to the combinatorial case: z = 0
// gives lambda = 2, z_j = n_j - 1 for all j gives lambda = 0.

#include <vector>

#include "gridspectra/eigenpair.hpp"
#include "gridspectra/grid.hpp"

namespace gridspectra {

struct ShiftSolution {
  double lambda = 0.0;
  ShiftVector shifts;
  int iterations = 0;
  /// max of |lambda - lambda'| and the per-dimension shift-equation residuals.
  double residual = 0.0;
};

struct ShiftSolverOptions {
  /// Bisection stops once the lambda bracket is narrower than this.
  double lambda_tolerance = 1e-12;
  int max_iterations = 200;
  /// Subintervals scanned for sign changes before bisecting.
  int lambda_scan_points = 32;
  int delta_scan_points = 64;
  /// delta is searched in (-pi/2 + margin, pi/2 - margin).
  double bracket_margin = 1e-9;
  /// Accepted |lambda - lambda'| and shift-equation residual.
  double acceptance_residual = 1e-10;
  /// Return delta = 0 directly when z_j / (n_j - 1) is the same for every dimension
  /// (one-dimensional grids, regular grids with equal z_j, the lambda = 1 cases).
  bool closed_form_shortcuts = true;
};

/// (lambda - 1) cos(delta) - cos(delta - (z_l pi - 2 delta) / (n_l - 1)).
double shift_equation_residual(double lambda, double delta, int z_l, int n_l);

/// Root delta of the shift equation for one dimension. For z_l in {0, n_l - 1}
/// the equation is even in delta and the non-negative root is returned.
/// Throws DomainError on bad arguments and SolverError when no unique root exists.
double delta_from_lambda(double lambda, int z_l, int n_l, const ShiftSolverOptions& options = {});

/// 1 + sum_j (w_j / w_sum) cos((z_j pi - 2 delta_j) / (n_j - 1)).
double lambda_from_shifts(const EigenIndex& z, const ShiftVector& shifts, const GridSpec& spec);

/// Largest residual of the (lambda, delta) equation system.
double shift_system_residual(const EigenIndex& z, const GridSpec& spec, double lambda, const ShiftVector& shifts);

/// Throws SolverError (message names z) if the system cannot be solved.
ShiftSolution solve_eigenvalue_and_shifts(const EigenIndex& z, const GridSpec& spec,
                                          const ShiftSolverOptions& options = {});

/// sqrt(D(x)) prod_j (-1)^{x_j} cos((x_j - 1)/(n_j - 1) (z_j pi - 2 delta_j) + delta_j).
double normalized_eigenvector_component(const EigenIndex& z, const ShiftVector& shifts, const GridSpec& spec,
                                        const NodeVector& x);
std::vector<double> normalized_eigenvector(const EigenIndex& z, const ShiftVector& shifts, const GridSpec& spec,
                                           bool normalize = false);

/// D^{1/2} times the normalized-Laplacian eigenvector, componentwise.
double randomwalk_eigenvector_component(const EigenIndex& z, const ShiftVector& shifts, const GridSpec& spec,
                                        const NodeVector& x);
std::vector<double> randomwalk_eigenvector(const EigenIndex& z, const ShiftVector& shifts, const GridSpec& spec,
                                           bool normalize = false);

struct OneDimEigenPair {
  double lambda = 0.0;
  std::vector<double> vector;
};

/// Path graph on n nodes: lambda = 2 cos^2(pi z / (2 (n - 1))), components
/// (-1)^x cos(pi z (x - 1) / (n - 1)) / s with s = sqrt(2) at both ends.
OneDimEigenPair onedim_normalized_eigenpair(int z, int n);

EigenPair normalized_eigenpair(const EigenIndex& z, const GridSpec& spec, bool normalize = false,
                               const ShiftSolverOptions& options = {});
EigenPair randomwalk_eigenpair(const EigenIndex& z, const GridSpec& spec, bool normalize = false,
                               const ShiftSolverOptions& options = {});

}  // namespace gridspectra
