#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "gridspectra/eigenpair.hpp"
#include "gridspectra/grid.hpp"
#include "gridspectra/shift_solver.hpp"

namespace gridspectra {

struct SpectrumOptions {
  /// Worker threads for per-index solves; 0 picks the hardware concurrency.
  unsigned threads = 1;
  ShiftSolverOptions solver;
};

struct SpectrumEntry {
  EigenIndex z;
  double lambda = 0.0;
  std::optional<ShiftVector> shifts;
};

/// Analytic eigenpair of any kind for a canonical index.
EigenPair eigenpair(const GridSpec& spec, LaplacianKind kind, const EigenIndex& z, bool normalize = false,
                    const ShiftSolverOptions& options = {});

/// One entry per canonical index, in enumeration order. Output does not depend on the thread count.
std::vector<SpectrumEntry> analytic_spectrum(const GridSpec& spec, LaplacianKind kind,
                                             const SpectrumOptions& options = {});

/// Eigenvalues only, sorted ascending.
std::vector<double> analytic_eigenvalues(const GridSpec& spec, LaplacianKind kind,
                                         const SpectrumOptions& options = {});

/// All n eigenvectors of a kind, in enumeration order.
std::vector<std::vector<double>> analytic_eigenvectors(const GridSpec& spec, LaplacianKind kind,
                                                       bool normalize = false, const SpectrumOptions& options = {});

unsigned resolve_thread_count(unsigned requested, std::size_t work_items);

}  // namespace gridspectra
