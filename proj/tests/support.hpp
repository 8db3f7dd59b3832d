#pragma once

// Test-only helpers, written independently of the library's assembly code:
// explicit dense matrices built node by node from the neighbour rule.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <random>
#include <vector>

#include "gridspectra/grid.hpp"

namespace testsupport {

using Matrix = std::vector<std::vector<double>>;

// Similarity matrix S from coordinates: nodes x, y adjacent iff they differ by 1 in exactly one coordinate.
inline Matrix similarity(const gridspectra::GridSpec& spec) {
  const std::size_t n = spec.node_count();
  std::vector<std::vector<int>> coords(n);
  for (std::size_t i = 0; i < n; ++i) coords[i] = gridspectra::node_vector_from_id(i + 1, spec).coords;
  Matrix s(n, std::vector<double>(n, 0.0));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      int diffs = 0;
      std::size_t axis = 0;
      bool unit = true;
      for (std::size_t j = 0; j < spec.dimension(); ++j) {
        const int delta = coords[a][j] - coords[b][j];
        if (delta != 0) {
          ++diffs;
          axis = j;
          unit = unit && std::abs(delta) == 1;
        }
      }
      if (diffs == 1 && unit) s[a][b] = spec.weight(axis);
    }
  }
  return s;
}

inline std::vector<double> row_sums(const Matrix& m) {
  std::vector<double> out(m.size(), 0.0);
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (double v : m[i]) out[i] += v;
  }
  return out;
}

enum class Op { L, K, Normalized, RandomWalk };

inline Matrix laplacian(const gridspectra::GridSpec& spec, Op op) {
  const Matrix s = similarity(spec);
  const auto deg = row_sums(s);
  const std::size_t n = s.size();
  Matrix m(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t l = 0; l < n; ++l) {
      const double id = i == l ? 1.0 : 0.0;
      switch (op) {
        case Op::L: m[i][l] = id * deg[i] - s[i][l]; break;
        case Op::K: m[i][l] = id * deg[i] + s[i][l]; break;
        case Op::Normalized: m[i][l] = id - s[i][l] / std::sqrt(deg[i] * deg[l]); break;
        case Op::RandomWalk: m[i][l] = id - s[i][l] / deg[l]; break;
      }
    }
  }
  return m;
}

inline std::vector<double> multiply(const Matrix& m, const std::vector<double>& v) {
  std::vector<double> out(m.size(), 0.0);
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t l = 0; l < v.size(); ++l) out[i] += m[i][l] * v[l];
  }
  return out;
}

// ||M v - lambda v||_inf
inline double residual(const Matrix& m, const std::vector<double>& v, double lambda) {
  const auto mv = multiply(m, v);
  double worst = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) worst = std::max(worst, std::abs(mv[i] - lambda * v[i]));
  return worst;
}

inline double max_abs(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

// Random grids with node count <= max_nodes, deterministic per seed.
inline std::vector<gridspectra::GridSpec> random_grids(unsigned seed, int count, std::size_t max_nodes,
                                                       bool weighted) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> dim_count(1, 3);
  std::uniform_real_distribution<double> weight(0.25, 4.0);
  std::vector<gridspectra::GridSpec> grids;
  while (static_cast<int>(grids.size()) < count) {
    const int d = dim_count(rng);
    std::vector<int> dims;
    std::vector<double> weights;
    std::size_t n = 1;
    for (int j = 0; j < d; ++j) {
      std::uniform_int_distribution<int> layers(2, d == 1 ? 40 : (d == 2 ? 14 : 7));
      dims.push_back(layers(rng));
      weights.push_back(weighted ? weight(rng) : 1.0);
      n *= static_cast<std::size_t>(dims.back());
    }
    if (n <= max_nodes) grids.emplace_back(dims, weights);
  }
  return grids;
}

}  // namespace testsupport
