#pragma once

#include <stdexcept>
#include <string>

namespace cpsynth {

// Numeric failure: the multi-start budget was exhausted without an
// acceptable root. Carries the best residual norm seen, for diagnostics.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double best_residual)
      : std::runtime_error(what), best_residual_(best_residual) {}
  double best_residual() const { return best_residual_; }

 private:
  double best_residual_;
};

// A requested metric is undefined for the given sequence/profile
// (no half-maximum crossing, endpoint probability not suppressed, ...).
class MetricError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed resource or document (reference table, sequence/phase JSON).
class SchemaError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace cpsynth
