#pragma once

#include <optional>
#include <vector>

#include "gridspectra/grid.hpp"

namespace gridspectra {

/// Per-dimension phase corrections of the normalized-Laplacian cosines (radians).
struct ShiftVector {
  std::vector<double> deltas;
  bool operator==(const ShiftVector&) const = default;
};

struct EigenPair {
  LaplacianKind kind = LaplacianKind::Combinatorial;
  EigenIndex z;
  double lambda = 0.0;
  std::vector<double> vector;
  /// Present for Normalized / RandomWalk only.
  std::optional<ShiftVector> shifts;
};

/// Divides v by its Euclidean norm; a zero vector is returned unchanged.
void normalize_in_place(std::vector<double>& v);

}  // namespace gridspectra
