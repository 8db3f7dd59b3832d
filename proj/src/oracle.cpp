#include "gridspectra/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gridspectra/error.hpp"

namespace gridspectra {

namespace {

// Calls visit(i, l, w) once per unordered edge with 0-based ids i < l.
template <typename Visit>
void for_each_edge(const GridSpec& spec, Visit&& visit) {
  const std::size_t d = spec.dimension();
  std::vector<std::size_t> stride(d, 1);
  for (std::size_t j = d - 1; j-- > 0;) stride[j] = stride[j + 1] * static_cast<std::size_t>(spec.dim(j + 1));
  std::vector<int> x(d, 1);
  for (std::size_t i = 0; i < spec.node_count(); ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      if (x[j] < spec.dim(j)) visit(i, i + stride[j], spec.weight(j));
    }
    for (std::size_t j = d; j-- > 0;) {
      if (++x[j] <= spec.dim(j)) break;
      x[j] = 1;
    }
  }
}

double off_diagonal_norm(const std::vector<double>& a, std::size_t n) {
  double sum = 0.0;
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = 0; q < n; ++q) {
      if (p != q) sum += a[p * n + q] * a[p * n + q];
    }
  }
  return std::sqrt(sum);
}

}  // namespace

SparseAdjacency assemble_adjacency(const GridSpec& spec) {
  SparseAdjacency adj;
  adj.n = spec.node_count();
  for_each_edge(spec, [&](std::size_t i, std::size_t l, double w) {
    adj.entries.push_back({i + 1, l + 1, w});
    adj.entries.push_back({l + 1, i + 1, w});
  });
  return adj;
}

double DenseSymMatrix::trace() const {
  double t = 0.0;
  for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
  return t;
}

double DenseSymMatrix::frobenius_norm() const {
  double sum = 0.0;
  for (double v : values_) sum += v * v;
  return std::sqrt(sum);
}

bool DenseSymMatrix::is_symmetric(double tolerance) const {
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i + 1; j < n_; ++j) {
      if (std::abs((*this)(i, j) - (*this)(j, i)) > tolerance) return false;
    }
  }
  return true;
}

DenseSymMatrix assemble_laplacian(const GridSpec& spec, LaplacianKind kind, std::size_t cap) {
  const std::size_t n = spec.node_count();
  if (n > cap) {
    throw CapacityError("grid has " + std::to_string(n) + " nodes, dense cap is " + std::to_string(cap));
  }
  const auto degrees = degree_vector(spec);
  DenseSymMatrix m(n);
  const bool normalized = kind == LaplacianKind::Normalized || kind == LaplacianKind::RandomWalk;
  for (std::size_t i = 0; i < n; ++i) m(i, i) = normalized ? 1.0 : degrees[i];
  for_each_edge(spec, [&](std::size_t i, std::size_t l, double w) {
    double value = 0.0;
    switch (kind) {
      case LaplacianKind::Combinatorial: value = -w; break;
      case LaplacianKind::Unoriented: value = w; break;
      case LaplacianKind::Normalized:
      case LaplacianKind::RandomWalk: value = -w / std::sqrt(degrees[i] * degrees[l]); break;
    }
    m(i, l) = value;
    m(l, i) = value;
  });
  return m;
}

std::vector<double> apply_laplacian(const GridSpec& spec, LaplacianKind kind, std::span<const double> v) {
  if (v.size() != spec.node_count()) throw DomainError("vector length does not match node count");
  const auto degrees = degree_vector(spec);
  std::vector<double> out(v.size());
  // start from the diagonal, then add the off-diagonal part
  for (std::size_t i = 0; i < v.size(); ++i) {
    switch (kind) {
      case LaplacianKind::Combinatorial:
      case LaplacianKind::Unoriented: out[i] = degrees[i] * v[i]; break;
      case LaplacianKind::Normalized:
      case LaplacianKind::RandomWalk: out[i] = v[i]; break;
    }
  }
  for_each_edge(spec, [&](std::size_t i, std::size_t l, double w) {
    switch (kind) {
      case LaplacianKind::Combinatorial:
        out[i] -= w * v[l];
        out[l] -= w * v[i];
        break;
      case LaplacianKind::Unoriented:
        out[i] += w * v[l];
        out[l] += w * v[i];
        break;
      case LaplacianKind::Normalized: {
        const double s = w / std::sqrt(degrees[i] * degrees[l]);
        out[i] -= s * v[l];
        out[l] -= s * v[i];
        break;
      }
      case LaplacianKind::RandomWalk:
        out[i] -= w * v[l] / degrees[l];
        out[l] -= w * v[i] / degrees[i];
        break;
    }
  });
  return out;
}

std::vector<double> dense_symmetric_eigenvalues(const DenseSymMatrix& m) {
  const std::size_t n = m.order();
  std::vector<double> a(m.values().begin(), m.values().end());
  const double scale = m.frobenius_norm();
  const double target = 1e-12 * scale;
  constexpr int kMaxSweeps = 100;

  int sweep = 0;
  while (scale > 0.0 && off_diagonal_norm(a, n) > target) {
    if (++sweep > kMaxSweeps) {
      throw SolverError("Jacobi eigensolver did not converge in 100 sweeps", off_diagonal_norm(a, n));
    }
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a[p * n + q];
        if (apq == 0.0) continue;
        const double theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(1.0 + theta * theta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a[k * n + p];
          const double akq = a[k * n + q];
          a[k * n + p] = c * akp - s * akq;
          a[k * n + q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a[p * n + k];
          const double aqk = a[q * n + k];
          a[p * n + k] = c * apk - s * aqk;
          a[q * n + k] = s * apk + c * aqk;
        }
        a[p * n + q] = 0.0;
        a[q * n + p] = 0.0;
      }
    }
  }

  std::vector<double> eigenvalues(n);
  for (std::size_t i = 0; i < n; ++i) eigenvalues[i] = a[i * n + i];
  std::sort(eigenvalues.begin(), eigenvalues.end());
  return eigenvalues;
}

double residual_norm(const GridSpec& spec, LaplacianKind kind, const EigenPair& pair) {
  if (pair.vector.size() != spec.node_count()) throw DomainError("eigenvector length does not match node count");
  const auto av = apply_laplacian(spec, kind, pair.vector);
  double worst = 0.0;
  double vmax = 0.0;
  for (std::size_t i = 0; i < av.size(); ++i) {
    worst = std::max(worst, std::abs(av[i] - pair.lambda * pair.vector[i]));
    vmax = std::max(vmax, std::abs(pair.vector[i]));
  }
  return worst / std::max(1.0, vmax);
}

SpectrumComparison spectrum_compare(const GridSpec& spec, LaplacianKind kind, double tolerance, std::size_t cap,
                                    const SpectrumOptions& options) {
  SpectrumComparison report;
  report.dense = dense_symmetric_eigenvalues(assemble_laplacian(spec, kind, cap));
  report.analytic = analytic_eigenvalues(spec, kind, options);
  for (std::size_t i = 0; i < report.dense.size(); ++i) {
    report.max_deviation = std::max(report.max_deviation, std::abs(report.dense[i] - report.analytic[i]));
  }
  report.pass = report.analytic.size() == report.dense.size() && report.max_deviation <= tolerance;
  return report;
}

double gram_offdiag_max(const std::vector<std::vector<double>>& vectors) {
  std::vector<double> norms(vectors.size());
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (vectors[i].size() != vectors.front().size()) throw DomainError("vectors differ in length");
    double sum = 0.0;
    for (double x : vectors[i]) sum += x * x;
    if (sum == 0.0) throw DomainError("zero vector in Gram check");
    norms[i] = std::sqrt(sum);
  }
  double worst = 0.0;
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    for (std::size_t j = i + 1; j < vectors.size(); ++j) {
      double dot = 0.0;
      for (std::size_t k = 0; k < vectors[i].size(); ++k) dot += vectors[i][k] * vectors[j][k];
      worst = std::max(worst, std::abs(dot) / (norms[i] * norms[j]));
    }
  }
  return worst;
}

}  // namespace gridspectra
