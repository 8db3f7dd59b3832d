#include "gridspectra/grid.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include "gridspectra/error.hpp"

namespace gridspectra {

std::string_view to_string(LaplacianKind kind) {
  switch (kind) {
    case LaplacianKind::Combinatorial: return "combinatorial";
    case LaplacianKind::Unoriented: return "unoriented";
    case LaplacianKind::Normalized: return "normalized";
    case LaplacianKind::RandomWalk: return "random-walk";
  }
  return "unknown";
}

LaplacianKind parse_laplacian_kind(std::string_view name) {
  if (name == "combinatorial") return LaplacianKind::Combinatorial;
  if (name == "unoriented" || name == "signless") return LaplacianKind::Unoriented;
  if (name == "normalized") return LaplacianKind::Normalized;
  if (name == "random-walk" || name == "randomwalk") return LaplacianKind::RandomWalk;
  throw DomainError("unknown Laplacian kind '" + std::string(name) + "'");
}

GridSpec::GridSpec(std::vector<int> dims, std::vector<double> weights)
    : dims_(std::move(dims)), weights_(std::move(weights)) {
  if (dims_.empty()) throw DomainError("grid must have at least one dimension");
  if (dims_.size() != weights_.size()) {
    throw DomainError("grid has " + std::to_string(dims_.size()) + " dimensions but " +
                      std::to_string(weights_.size()) + " weights");
  }
  node_count_ = 1;
  for (std::size_t j = 0; j < dims_.size(); ++j) {
    if (dims_[j] < 2) {
      throw DomainError("dimension " + std::to_string(j + 1) + " has " + std::to_string(dims_[j]) +
                        " layers; at least 2 are required");
    }
    if (!(weights_[j] > 0.0) || !std::isfinite(weights_[j])) {
      throw DomainError("weight of dimension " + std::to_string(j + 1) + " must be positive and finite");
    }
    const auto layers = static_cast<std::size_t>(dims_[j]);
    if (node_count_ > std::numeric_limits<std::size_t>::max() / layers) {
      throw DomainError("grid node count overflows the index range");
    }
    node_count_ *= layers;
    weight_sum_ += weights_[j];
  }
}

GridSpec::GridSpec(std::vector<int> dims)
    : GridSpec(dims, std::vector<double>(dims.size(), 1.0)) {}

GridSpec GridSpec::scaled(double factor) const {
  std::vector<double> w = weights_;
  for (auto& v : w) v *= factor;
  return GridSpec(dims_, std::move(w));
}

namespace {

void require_node(const NodeVector& x, const GridSpec& spec) {
  if (x.coords.size() != spec.dimension()) {
    throw DomainError("node vector has " + std::to_string(x.coords.size()) + " coordinates, grid has " +
                      std::to_string(spec.dimension()) + " dimensions");
  }
  for (std::size_t j = 0; j < x.coords.size(); ++j) {
    if (x.coords[j] < 1 || x.coords[j] > spec.dim(j)) {
      throw DomainError("coordinate " + std::to_string(j + 1) + " = " + std::to_string(x.coords[j]) +
                        " outside [1, " + std::to_string(spec.dim(j)) + "]");
    }
  }
}

}  // namespace

std::size_t node_id_from_vector(const NodeVector& x, const GridSpec& spec) {
  require_node(x, spec);
  std::size_t offset = 0;
  for (std::size_t j = 0; j < spec.dimension(); ++j) {
    offset = offset * static_cast<std::size_t>(spec.dim(j)) + static_cast<std::size_t>(x.coords[j] - 1);
  }
  return offset + 1;
}

NodeVector node_vector_from_id(std::size_t id, const GridSpec& spec) {
  if (id < 1 || id > spec.node_count()) {
    throw DomainError("node id " + std::to_string(id) + " outside [1, " + std::to_string(spec.node_count()) +
                      "]");
  }
  NodeVector x{std::vector<int>(spec.dimension())};
  std::size_t rest = id - 1;
  for (std::size_t j = spec.dimension(); j-- > 0;) {
    const auto layers = static_cast<std::size_t>(spec.dim(j));
    x.coords[j] = static_cast<int>(rest % layers) + 1;
    rest /= layers;
  }
  return x;
}

double node_degree(const NodeVector& x, const GridSpec& spec) {
  require_node(x, spec);
  double degree = 0.0;
  for (std::size_t j = 0; j < spec.dimension(); ++j) {
    const bool border = x.coords[j] == 1 || x.coords[j] == spec.dim(j);
    degree += spec.weight(j) * (border ? 1.0 : 2.0);
  }
  return degree;
}

std::vector<double> degree_vector(const GridSpec& spec) {
  const std::size_t d = spec.dimension();
  std::vector<double> degrees(spec.node_count());
  std::vector<int> x(d, 1);
  for (auto& out : degrees) {
    double degree = 0.0;
    for (std::size_t j = 0; j < d; ++j) {
      const bool border = x[j] == 1 || x[j] == spec.dim(j);
      degree += spec.weight(j) * (border ? 1.0 : 2.0);
    }
    out = degree;
    for (std::size_t j = d; j-- > 0;) {
      if (++x[j] <= spec.dim(j)) break;
      x[j] = 1;
    }
  }
  return degrees;
}

EigenIndex eigen_index_at(std::size_t position, const GridSpec& spec) {
  if (position >= spec.node_count()) {
    throw DomainError("eigen index position " + std::to_string(position) + " out of range");
  }
  EigenIndex z{std::vector<int>(spec.dimension())};
  for (std::size_t j = spec.dimension(); j-- > 0;) {
    const auto layers = static_cast<std::size_t>(spec.dim(j));
    z.z[j] = static_cast<int>(position % layers);
    position /= layers;
  }
  return z;
}

std::vector<EigenIndex> enumerate_eigen_indices(const GridSpec& spec) {
  std::vector<EigenIndex> out;
  out.reserve(spec.node_count());
  std::vector<int> z(spec.dimension(), 0);
  for (std::size_t k = 0; k < spec.node_count(); ++k) {
    out.push_back(EigenIndex{z});
    for (std::size_t j = spec.dimension(); j-- > 0;) {
      if (++z[j] < spec.dim(j)) break;
      z[j] = 0;
    }
  }
  return out;
}

bool is_canonical(const EigenIndex& z, const GridSpec& spec) noexcept {
  if (z.z.size() != spec.dimension()) return false;
  for (std::size_t j = 0; j < z.z.size(); ++j) {
    if (z.z[j] < 0 || z.z[j] >= spec.dims()[j]) return false;
  }
  return true;
}

void require_canonical(const EigenIndex& z, const GridSpec& spec) {
  if (!is_canonical(z, spec)) {
    throw DomainError("eigen index [" + format_eigen_index(z, ',') + "] is not canonical for the grid");
  }
}

CanonicalIndex canonicalize_eigen_index(const std::vector<int>& raw, const GridSpec& spec) {
  if (raw.size() != spec.dimension()) {
    throw DomainError("eigen index has " + std::to_string(raw.size()) + " components, grid has " +
                      std::to_string(spec.dimension()) + " dimensions");
  }
  CanonicalIndex result;
  EigenIndex reduced{std::vector<int>(raw.size())};
  for (std::size_t j = 0; j < raw.size(); ++j) {
    const int n = spec.dim(j);
    const int v = raw[j];
    if (v < -n + 1 || v > 2 * n - 1) {
      throw DomainError("eigen index component " + std::to_string(j + 1) + " = " + std::to_string(v) +
                        " outside [" + std::to_string(-n + 1) + ", " + std::to_string(2 * n - 1) + "]");
    }
    if (v < 0) {
      reduced.z[j] = -v;
    } else if (v < n) {
      reduced.z[j] = v;
    } else if (v == n) {
      result.is_zero_vector = true;
    } else {
      reduced.z[j] = 2 * n - v;
      result.sign = -result.sign;
    }
  }
  if (!result.is_zero_vector) result.index = std::move(reduced);
  return result;
}

std::string format_eigen_index(const EigenIndex& z, char separator) {
  std::string out;
  for (std::size_t j = 0; j < z.z.size(); ++j) {
    if (j > 0) out.push_back(separator);
    out += std::to_string(z.z[j]);
  }
  return out;
}

EigenIndex parse_eigen_index(std::string_view text) {
  EigenIndex z;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find_first_of(";,", start);
    if (end == std::string_view::npos) end = text.size();
    const auto token = text.substr(start, end - start);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
      throw DomainError("cannot parse eigen index '" + std::string(text) + "'");
    }
    z.z.push_back(value);
    start = end + 1;
  }
  return z;
}

}  // namespace gridspectra
