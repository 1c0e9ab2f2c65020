#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "opocorr/correlation.hpp"
#include "opocorr/histogram.hpp"

namespace opocorr {

enum class WeightMode { poisson, uniform };

/// Parameter indices in the canonical order.
enum ParamIndex : int {
  kTauF = 0,
  kTR = 1,
  kOmegaC = 2,
  kC1 = 3,
  kC2 = 4,
  kTau0 = 5,
};
inline constexpr int kNumParams = 6;

struct ParamBounds {
  double lo = 0.0;
  double hi = 0.0;
};

struct FitProblem {
  Histogram histogram;
  WeightMode weights = WeightMode::poisson;
  /// Free/frozen mask; frozen parameters keep the guess value exactly.
  std::array<bool, kNumParams> free_mask = {true, true, true, true, true, true};
  std::array<ParamBounds, kNumParams> bounds = {{
      {1e-15, 1.0},    // tau_f (s)
      {1e-15, 1.0},    // t_r (s)
      {1e-3, 1e15},    // omega_c (rad/s)
      {1e-30, 1e30},   // c1
      {0.0, 1e30},     // c2
      {-1.0, 1.0},     // tau0 (s)
  }};

  void validate() const;  // >= 20 nonzero bins, bounds lo < hi
};

struct FitOptions {
  int max_iterations = 200;
  double param_tol = 1e-8;      ///< relative parameter-change convergence
  double cost_tol = 1e-10;      ///< relative cost-change convergence
  double fd_rel_step = 1e-6;    ///< central-difference relative step
  double lambda0 = 1e-3;        ///< initial damping
  double rescue_chi2 = 10.0;    ///< refit from an automatic guess above this
};

struct FitResult {
  CoincidenceModelParams params;
  std::array<double, kNumParams * kNumParams> covariance{};  // row-major 6x6
  double reduced_chi2 = 0.0;
  double cost = 0.0;
  int n_iterations = 0;
  bool converged = false;
  std::vector<double> residuals;      ///< counts - model, per bin
  std::vector<double> std_residuals;  ///< (counts - model) * sqrt(weight)

  double cov(int i, int j) const { return covariance[static_cast<std::size_t>(i) * kNumParams + static_cast<std::size_t>(j)]; }
  double stderr_of(int i) const;
};

/// Automatic starting point from the histogram structure: tau0 from the
/// global maximum, tau_f from the median peak spacing, omega_c from a
/// log-linear regression of peak heights, t_r from the FWHM of the tallest
/// peak, c1/c2 from the maximum and the low-percentile floor. Requires at
/// least three peaks above floor + 5*sqrt(floor); throws TooFewPeaks
/// otherwise (typically single-mode data or t_r >= tau_f).
CoincidenceModelParams initial_guess(const Histogram& h);

/// Damped least squares against the coincidence model (the model evaluation
/// is the one call path shared with coincidence_model). Positive parameters
/// step in log space; c2 is clamped at zero. Damping increases on rejected
/// steps and decreases on accepted ones; convergence when the relative
/// parameter change < param_tol or the relative cost change < cost_tol.
/// Returns best-so-far flagged converged=false after max_iterations. Throws
/// SingularNormalMatrix when parameters are unidentifiable.
FitResult fit(const FitProblem& problem, const CoincidenceModelParams& guess,
              const FitOptions& opts = {});

struct GoodnessOfFit {
  double reduced_chi2 = 0.0;
  double runs_test_p = 1.0;        ///< two-sided p of the residual-sign runs test
  double max_std_residual = 0.0;   ///< largest |standardized residual|
  std::size_t max_residual_bin = 0;
};

GoodnessOfFit goodness_of_fit(const FitResult& r);

}  // namespace opocorr
