#pragma once

#include <complex>
#include <functional>

namespace divcor {

struct QuadratureOptions {
  double abs_tol = 1e-10;
  int max_depth = 32;
  // Pre-split the interval into this many equal panels before refining.
  // Callers integrating oscillatory kernels set it from the phase range so
  // that the error estimate never sees a whole oscillation packet at once.
  int initial_intervals = 1;
  long max_panels = 2000000;
};

struct QuadratureResult {
  double value = 0.0;
  double error_bound = 0.0;
  bool converged = false;
  long panels = 0;
};

struct ComplexQuadratureResult {
  std::complex<double> value{0.0, 0.0};
  double error_bound = 0.0;
  bool converged = false;
  long panels = 0;
};

// Adaptive Gauss-Legendre (embedded 7/15 pair, bisection refinement) with
// deterministic node placement. Never throws on non-convergence; the result
// carries the best estimate and its error bound.
QuadratureResult integrate(const std::function<double(double)>& f, double a,
                           double b, const QuadratureOptions& opts = {});

ComplexQuadratureResult integrate_complex(
    const std::function<std::complex<double>(double)>& f, double a, double b,
    const QuadratureOptions& opts = {});

}  // namespace divcor
