#pragma once

#include <stdexcept>
#include <string>

namespace gridspectra {

/// Invalid input: out-of-range coordinates, malformed grid specs, bad index ranges.
class DomainError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Root finding or iterative eigensolver did not produce an acceptable answer.
class SolverError : public std::runtime_error {
public:
  explicit SolverError(const std::string& what, double best_residual = 0.0)
      : std::runtime_error(what), best_residual_(best_residual) {}

  double best_residual() const noexcept { return best_residual_; }

private:
  double best_residual_;
};

/// Request exceeds the dense-matrix node cap.
class CapacityError : public std::length_error {
public:
  using std::length_error::length_error;
};

}  // namespace gridspectra
