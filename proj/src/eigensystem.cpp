#include "gridspectra/eigensystem.hpp"

#include <algorithm>
#include <exception>
#include <thread>

#include "gridspectra/closed_form.hpp"

namespace gridspectra {

namespace {

bool uses_shifts(LaplacianKind kind) {
  return kind == LaplacianKind::Normalized || kind == LaplacianKind::RandomWalk;
}

// Runs body(i) for i in [0, count) on `threads` workers; each slot is written by exactly one worker.
// The exception from the lowest failing index is rethrown.
template <typename Body>
void parallel_for(std::size_t count, unsigned threads, Body&& body) {
  if (threads <= 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::vector<std::exception_ptr> errors(threads);
  std::vector<std::size_t> error_index(threads, count);
  {
    std::vector<std::jthread> workers;
    workers.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
      workers.emplace_back([&, t] {
        for (std::size_t i = t; i < count; i += threads) {
          try {
            body(i);
          } catch (...) {
            errors[t] = std::current_exception();
            error_index[t] = i;
            return;
          }
        }
      });
    }
  }
  const auto first = std::min_element(error_index.begin(), error_index.end());
  if (*first < count) std::rethrow_exception(errors[static_cast<std::size_t>(first - error_index.begin())]);
}

}  // namespace

unsigned resolve_thread_count(unsigned requested, std::size_t work_items) {
  unsigned threads = requested == 0 ? std::max(1u, std::thread::hardware_concurrency()) : requested;
  if (work_items < threads) threads = static_cast<unsigned>(std::max<std::size_t>(work_items, 1));
  return threads;
}

EigenPair eigenpair(const GridSpec& spec, LaplacianKind kind, const EigenIndex& z, bool normalize,
                    const ShiftSolverOptions& options) {
  switch (kind) {
    case LaplacianKind::Combinatorial: return comb_eigenpair(z, spec, normalize);
    case LaplacianKind::Unoriented: return unoriented_eigenpair(z, spec, normalize);
    case LaplacianKind::Normalized: return normalized_eigenpair(z, spec, normalize, options);
    case LaplacianKind::RandomWalk: return randomwalk_eigenpair(z, spec, normalize, options);
  }
  return {};
}

std::vector<SpectrumEntry> analytic_spectrum(const GridSpec& spec, LaplacianKind kind,
                                             const SpectrumOptions& options) {
  auto indices = enumerate_eigen_indices(spec);
  std::vector<SpectrumEntry> entries(indices.size());
  if (!uses_shifts(kind)) {
    const auto values = comb_eigenvalues(spec);
    for (std::size_t i = 0; i < indices.size(); ++i) entries[i] = {std::move(indices[i]), values[i], std::nullopt};
    return entries;
  }
  const unsigned threads = resolve_thread_count(options.threads, indices.size());
  parallel_for(indices.size(), threads, [&](std::size_t i) {
    auto solution = solve_eigenvalue_and_shifts(indices[i], spec, options.solver);
    entries[i] = {indices[i], solution.lambda, std::move(solution.shifts)};
  });
  return entries;
}

std::vector<double> analytic_eigenvalues(const GridSpec& spec, LaplacianKind kind, const SpectrumOptions& options) {
  std::vector<double> values;
  if (!uses_shifts(kind)) {
    values = comb_eigenvalues(spec);
  } else {
    const auto entries = analytic_spectrum(spec, kind, options);
    values.reserve(entries.size());
    for (const auto& e : entries) values.push_back(e.lambda);
  }
  std::sort(values.begin(), values.end());
  return values;
}

std::vector<std::vector<double>> analytic_eigenvectors(const GridSpec& spec, LaplacianKind kind, bool normalize,
                                                       const SpectrumOptions& options) {
  const auto indices = enumerate_eigen_indices(spec);
  std::vector<std::vector<double>> vectors(indices.size());
  const unsigned threads = resolve_thread_count(options.threads, indices.size());
  parallel_for(indices.size(), threads, [&](std::size_t i) {
    vectors[i] = eigenpair(spec, kind, indices[i], normalize, options.solver).vector;
  });
  return vectors;
}

}  // namespace gridspectra
