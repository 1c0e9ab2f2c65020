#pragma once

#include <random>

namespace opocorr {

using RngEngine = std::mt19937_64;

/// Detector timing-jitter distribution: the double exponential
///   p(tau) = (ln2 / t_r) * exp(-2 |tau| ln2 / t_r),
/// normalized to 1, with t_r the full width at half maximum (the detector
/// resolving time T_R).
struct JitterModel {
  double t_r = 0.0;  ///< FWHM of p(tau), seconds

  double pdf(double tau) const;
  double cdf(double tau) const;
  /// Inverse CDF; u must lie in (0, 1).
  double quantile(double u) const;
  /// Closed-form autocorrelation integral p*p(delta) = integral p(t)p(t+delta) dt
  ///   = (ln2 / (2 t_r)) * (1 + 2|delta| ln2/t_r) * exp(-2|delta| ln2/t_r),
  /// which is exactly the per-peak shape of the coincidence model.
  double autocorrelation(double delta) const;
  /// One jitter draw via the inverse CDF.
  double sample(RngEngine& rng) const;

  void validate() const;  // throws InvalidParams unless t_r > 0
};

}  // namespace opocorr
