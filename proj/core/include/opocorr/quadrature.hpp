#pragma once

#include <functional>
#include <span>

namespace opocorr {

struct QuadratureOptions {
  double rel_tol = 1e-6;      ///< target relative tolerance on the integral
  double abs_tol = 0.0;       ///< absolute tolerance floor
  int max_depth = 48;         ///< bisection depth cap per initial interval
  long max_evals = 40000000;  ///< integrand evaluation budget
};

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;  ///< accumulated local Richardson estimates
  long n_evals = 0;
  bool budget_exhausted = false;
};

/// Adaptive Simpson over [a, b].
QuadratureResult integrate_adaptive(const std::function<double(double)>& f,
                                    double a, double b,
                                    const QuadratureOptions& opts = {});

/// Adaptive Simpson over [breakpoints.front(), breakpoints.back()], with the
/// interior breakpoints used as mandatory initial subdivisions. Breakpoints
/// must be sorted; duplicates are tolerated. Placing breakpoints at known
/// kinks, spikes and oscillation nodes is what keeps the refinement honest on
/// sharply peaked integrands.
QuadratureResult integrate_adaptive_split(const std::function<double(double)>& f,
                                          std::span<const double> breakpoints,
                                          const QuadratureOptions& opts = {});

}  // namespace opocorr
