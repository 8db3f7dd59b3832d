#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gridspectra {

enum class LaplacianKind { Combinatorial, Unoriented, Normalized, RandomWalk };

std::string_view to_string(LaplacianKind kind);
/// Accepts the lower-case names used on the command line ("combinatorial", "random-walk", ...).
LaplacianKind parse_laplacian_kind(std::string_view name);

/// Node identity vector, 1-based coordinates x_j in [1, n_j].
struct NodeVector {
  std::vector<int> coords;
  bool operator==(const NodeVector&) const = default;
};

/// Eigen identity vector z; canonical when 0 <= z_j <= n_j - 1.
struct EigenIndex {
  std::vector<int> z;
  bool operator==(const EigenIndex&) const = default;
  auto operator<=>(const EigenIndex&) const = default;
};

/// Weighted d-dimensional grid graph: layer counts n_j and direction weights w_j.
class GridSpec {
public:
  /// Throws DomainError unless dims/weights have equal length d >= 1, every n_j >= 2,
  /// every w_j > 0 (and finite), and the node count fits in std::size_t.
  GridSpec(std::vector<int> dims, std::vector<double> weights);
  /// Unweighted grid (all w_j = 1).
  explicit GridSpec(std::vector<int> dims);

  std::size_t dimension() const noexcept { return dims_.size(); }
  const std::vector<int>& dims() const noexcept { return dims_; }
  const std::vector<double>& weights() const noexcept { return weights_; }
  int dim(std::size_t j) const { return dims_.at(j); }
  double weight(std::size_t j) const { return weights_.at(j); }

  std::size_t node_count() const noexcept { return node_count_; }
  double weight_sum() const noexcept { return weight_sum_; }
  /// Upper bound of the combinatorial/unoriented spectrum, sum_j 4 w_j.
  double combinatorial_bound() const noexcept { return 4.0 * weight_sum_; }

  /// Same dims, every weight multiplied by `factor` (> 0).
  GridSpec scaled(double factor) const;

  bool operator==(const GridSpec&) const = default;

private:
  std::vector<int> dims_;
  std::vector<double> weights_;
  std::size_t node_count_ = 0;
  double weight_sum_ = 0.0;
};

/// i = 1 + sum_j (x_j - 1) * prod_{k>j} n_k.
std::size_t node_id_from_vector(const NodeVector& x, const GridSpec& spec);
NodeVector node_vector_from_id(std::size_t id, const GridSpec& spec);

/// Weighted degree: sum_j w_j * (number of neighbours along dimension j).
double node_degree(const NodeVector& x, const GridSpec& spec);

/// Degrees of all nodes, indexed by node id - 1.
std::vector<double> degree_vector(const GridSpec& spec);

/// All prod n_j canonical indices, lexicographic (last dimension fastest).
std::vector<EigenIndex> enumerate_eigen_indices(const GridSpec& spec);

/// The position-th canonical index in lexicographic order, 0 <= position < n.
EigenIndex eigen_index_at(std::size_t position, const GridSpec& spec);

bool is_canonical(const EigenIndex& z, const GridSpec& spec) noexcept;
/// Throws DomainError if z is not canonical for spec.
void require_canonical(const EigenIndex& z, const GridSpec& spec);

struct CanonicalIndex {
  /// Absent when the raw index describes the zero vector.
  std::optional<EigenIndex> index;
  int sign = 1;
  bool is_zero_vector = false;
};

/// Reduces raw components in [-n_j + 1, 2 n_j - 1] to [0, n_j - 1]:
/// negative z_j -> -z_j, z_j = n_j -> zero vector, z_j > n_j -> 2 n_j - z_j with a sign flip.
CanonicalIndex canonicalize_eigen_index(const std::vector<int>& raw, const GridSpec& spec);

std::string format_eigen_index(const EigenIndex& z, char separator = ';');
/// Parses "1;2;0" (also accepts ',' as separator).
EigenIndex parse_eigen_index(std::string_view text);

}  // namespace gridspectra
