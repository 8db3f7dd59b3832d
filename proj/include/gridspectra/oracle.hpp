#pragma once

// Ground truth for the analytic eigensystems: explicit matrices, a dense
// cyclic-Jacobi eigensolver and residual / orthogonality diagnostics.

#include <cstddef>
#include <span>
#include <vector>

#include "gridspectra/eigenpair.hpp"
#include "gridspectra/eigensystem.hpp"
#include "gridspectra/grid.hpp"

namespace gridspectra {

inline constexpr std::size_t kDefaultDenseCap = 4096;

struct AdjacencyEntry {
  std::size_t i = 0;  // 1-based node ids
  std::size_t l = 0;
  double weight = 0.0;
  bool operator==(const AdjacencyEntry&) const = default;
};

/// Both orientations of every edge are stored; no diagonal entries.
struct SparseAdjacency {
  std::size_t n = 0;
  std::vector<AdjacencyEntry> entries;

  std::size_t edge_count() const noexcept { return entries.size() / 2; }
};

SparseAdjacency assemble_adjacency(const GridSpec& spec);

class DenseSymMatrix {
public:
  DenseSymMatrix() = default;
  explicit DenseSymMatrix(std::size_t n) : n_(n), values_(n * n, 0.0) {}

  std::size_t order() const noexcept { return n_; }
  double& operator()(std::size_t row, std::size_t col) { return values_[row * n_ + col]; }
  double operator()(std::size_t row, std::size_t col) const { return values_[row * n_ + col]; }
  std::span<const double> values() const noexcept { return values_; }

  double trace() const;
  double frobenius_norm() const;
  bool is_symmetric(double tolerance = 1e-14) const;

private:
  std::size_t n_ = 0;
  std::vector<double> values_;
};

/// Explicit L, K or normalized Laplacian. RandomWalk returns the normalized
/// Laplacian, which is similar to it through D^{1/2} and has the same spectrum.
/// Throws CapacityError when the node count exceeds `cap`.
DenseSymMatrix assemble_laplacian(const GridSpec& spec, LaplacianKind kind, std::size_t cap = kDefaultDenseCap);

/// Operator action A v using the grid structure directly (O(nnz)); RandomWalk applies I - S D^{-1}.
std::vector<double> apply_laplacian(const GridSpec& spec, LaplacianKind kind, std::span<const double> v);

/// Cyclic Jacobi rotations until the off-diagonal Frobenius mass is below
/// 1e-12 * ||m||_F. Ascending order. Throws SolverError after 100 sweeps.
std::vector<double> dense_symmetric_eigenvalues(const DenseSymMatrix& m);

/// ||A v - lambda v||_inf / max(1, ||v||_inf).
double residual_norm(const GridSpec& spec, LaplacianKind kind, const EigenPair& pair);

struct SpectrumComparison {
  double max_deviation = 0.0;
  bool pass = false;
  std::vector<double> analytic;
  std::vector<double> dense;
};

SpectrumComparison spectrum_compare(const GridSpec& spec, LaplacianKind kind, double tolerance,
                                    std::size_t cap = kDefaultDenseCap, const SpectrumOptions& options = {});

/// max_{i != j} |<v_i, v_j>| / (||v_i|| ||v_j||). Throws DomainError on a zero vector or length mismatch.
double gram_offdiag_max(const std::vector<std::vector<double>>& vectors);

}  // namespace gridspectra
