#pragma once

// Closed-form eigensystems of the combinatorial (L = D - S) and unoriented
// (K = D + S) Laplacians of weighted grid graphs.
//
// For a canonical index z the eigenvalue is additive over dimensions,
//   lambda_z = sum_j 2 w_j (1 - cos(pi z_j / n_j)),
// and the eigenvector is a tensor product of per-dimension cosines,
//   v_z(x) = prod_j cos(pi z_j / n_j * (x_j - 0.5)),
// which does not depend on the weights. K shares the eigenvalues (grids are
// bipartite); its eigenvectors carry an extra (-1)^{x_j} per dimension.
//
// Vectors are returned unnormalized unless `normalize` is set.

#include <vector>

#include "gridspectra/eigenpair.hpp"
#include "gridspectra/grid.hpp"

namespace gridspectra {

/// 2 w_j (1 - cos(pi z_j / n_j)) for one dimension.
double comb_dimension_eigenvalue(int z_j, int n_j, double w_j);

double comb_eigenvalue(const EigenIndex& z, const GridSpec& spec);

/// Same value via sum_j w_j (2 sin(pi z_j / (2 n_j)))^2.
double comb_eigenvalue_sine_form(const EigenIndex& z, const GridSpec& spec);

double comb_eigenvector_component(const EigenIndex& z, const GridSpec& spec, const NodeVector& x);
std::vector<double> comb_eigenvector(const EigenIndex& z, const GridSpec& spec, bool normalize = false);

double unoriented_eigenvector_component(const EigenIndex& z, const GridSpec& spec, const NodeVector& x);
std::vector<double> unoriented_eigenvector(const EigenIndex& z, const GridSpec& spec, bool normalize = false);

/// Eigenvalues for every canonical index, in enumeration order (not sorted).
std::vector<double> comb_eigenvalues(const GridSpec& spec);

EigenPair comb_eigenpair(const EigenIndex& z, const GridSpec& spec, bool normalize = false);
EigenPair unoriented_eigenpair(const EigenIndex& z, const GridSpec& spec, bool normalize = false);

}  // namespace gridspectra
