#include "gridspectra/closed_form.hpp"

#include <cmath>
#include <numbers>

#include "gridspectra/error.hpp"

namespace gridspectra {

void normalize_in_place(std::vector<double>& v) {
  double sum = 0.0;
  for (double x : v) sum += x * x;
  if (sum == 0.0) return;
  const double inv = 1.0 / std::sqrt(sum);
  for (double& x : v) x *= inv;
}

namespace {

using std::numbers::pi;

// Tensor-product materialization: factors[j][x_j - 1], nodes in id order.
std::vector<double> tensor_product(const std::vector<std::vector<double>>& factors, std::size_t n) {
  const std::size_t d = factors.size();
  std::vector<double> out(n);
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

std::vector<std::vector<double>> cosine_factors(const EigenIndex& z, const GridSpec& spec, bool alternate) {
  std::vector<std::vector<double>> factors(spec.dimension());
  for (std::size_t j = 0; j < spec.dimension(); ++j) {
    const int n = spec.dim(j);
    factors[j].resize(static_cast<std::size_t>(n));
    for (int x = 1; x <= n; ++x) {
      double c = std::cos(pi * z.z[j] / n * (x - 0.5));
      if (alternate && x % 2 == 1) c = -c;
      factors[j][static_cast<std::size_t>(x - 1)] = c;
    }
  }
  return factors;
}

void require_node_shape(const NodeVector& x, const GridSpec& spec) {
  // node_id_from_vector validates ranges and length
  (void)node_id_from_vector(x, spec);
}

}  // namespace

double comb_dimension_eigenvalue(int z_j, int n_j, double w_j) {
  return 2.0 * w_j * (1.0 - std::cos(pi * z_j / n_j));
}

double comb_eigenvalue(const EigenIndex& z, const GridSpec& spec) {
  require_canonical(z, spec);
  double lambda = 0.0;
  for (std::size_t j = 0; j < spec.dimension(); ++j) {
    lambda += comb_dimension_eigenvalue(z.z[j], spec.dim(j), spec.weight(j));
  }
  return lambda;
}

double comb_eigenvalue_sine_form(const EigenIndex& z, const GridSpec& spec) {
  require_canonical(z, spec);
  double lambda = 0.0;
  for (std::size_t j = 0; j < spec.dimension(); ++j) {
    const double s = 2.0 * std::sin(pi * z.z[j] / (2.0 * spec.dim(j)));
    lambda += spec.weight(j) * s * s;
  }
  return lambda;
}

double comb_eigenvector_component(const EigenIndex& z, const GridSpec& spec, const NodeVector& x) {
  require_canonical(z, spec);
  require_node_shape(x, spec);
  double prod = 1.0;
  for (std::size_t j = 0; j < spec.dimension(); ++j) {
    prod *= std::cos(pi * z.z[j] / spec.dim(j) * (x.coords[j] - 0.5));
  }
  return prod;
}

std::vector<double> comb_eigenvector(const EigenIndex& z, const GridSpec& spec, bool normalize) {
  require_canonical(z, spec);
  auto v = tensor_product(cosine_factors(z, spec, false), spec.node_count());
  if (normalize) normalize_in_place(v);
  return v;
}

double unoriented_eigenvector_component(const EigenIndex& z, const GridSpec& spec, const NodeVector& x) {
  double value = comb_eigenvector_component(z, spec, x);
  for (int c : x.coords) {
    if (c % 2 == 1) value = -value;
  }
  return value;
}

std::vector<double> unoriented_eigenvector(const EigenIndex& z, const GridSpec& spec, bool normalize) {
  require_canonical(z, spec);
  auto v = tensor_product(cosine_factors(z, spec, true), spec.node_count());
  if (normalize) normalize_in_place(v);
  return v;
}

std::vector<double> comb_eigenvalues(const GridSpec& spec) {
  const std::size_t d = spec.dimension();
  std::vector<std::vector<double>> per_dim(d);
  for (std::size_t j = 0; j < d; ++j) {
    for (int z = 0; z < spec.dim(j); ++z) {
      per_dim[j].push_back(comb_dimension_eigenvalue(z, spec.dim(j), spec.weight(j)));
    }
  }
  std::vector<double> out(spec.node_count());
  std::vector<std::size_t> z(d, 0);
  for (auto& value : out) {
    double sum = 0.0;
    for (std::size_t j = 0; j < d; ++j) sum += per_dim[j][z[j]];
    value = sum;
    for (std::size_t j = d; j-- > 0;) {
      if (++z[j] < per_dim[j].size()) break;
      z[j] = 0;
    }
  }
  return out;
}

EigenPair comb_eigenpair(const EigenIndex& z, const GridSpec& spec, bool normalize) {
  return EigenPair{LaplacianKind::Combinatorial, z, comb_eigenvalue(z, spec), comb_eigenvector(z, spec, normalize),
                   std::nullopt};
}

EigenPair unoriented_eigenpair(const EigenIndex& z, const GridSpec& spec, bool normalize) {
  return EigenPair{LaplacianKind::Unoriented, z, comb_eigenvalue(z, spec), unoriented_eigenvector(z, spec, normalize),
                   std::nullopt};
}

}  // namespace gridspectra
