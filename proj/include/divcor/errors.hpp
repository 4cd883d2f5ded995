#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace divcor {

// Bad arguments / violated preconditions. The CLI maps this to exit code 1.
struct validation_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A numerical contract failed (residue check, overflow, non-convergence).
// The CLI maps this to exit code 2.
struct numeric_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Adaptive refinement did not reach the requested tolerance. Carries the best
// estimate and the achieved error bound.
struct quadrature_error : numeric_error {
  quadrature_error(const std::string& msg, double best, double bound)
      : numeric_error(msg), best_estimate(best), error_bound(bound) {}
  double best_estimate;
  double error_bound;
};

// A series truncation rule was not reached within the allowed range.
// Carries the partial sums accumulated so far.
struct truncation_error : numeric_error {
  truncation_error(const std::string& msg, std::complex<double> plus,
                   std::complex<double> minus, uint64_t n_reached)
      : numeric_error(msg), partial_plus(plus), partial_minus(minus),
        last_n(n_reached) {}
  std::complex<double> partial_plus;
  std::complex<double> partial_minus;
  uint64_t last_n;
};

}  // namespace divcor
