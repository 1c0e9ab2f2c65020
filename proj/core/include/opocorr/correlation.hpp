#pragma once

#include <functional>
#include <span>

#include "opocorr/jitter.hpp"
#include "opocorr/opo_params.hpp"
#include "opocorr/quadrature.hpp"

namespace opocorr {

/// The tau-independent accidental term of the intensity correlation:
///   epsilon^2 (F/F0)^2 (2 epsilon (2N+1) / omega_c)^2.
double gamma_floor(const OpoParams& p);

/// The tau-dependent term of the intensity correlation:
///   epsilon^2 (F/F0)^2 e^{-omega_c |tau|} comb(tau) [1 + (2 epsilon/omega_c)^2].
double gamma_oscillatory(const OpoParams& p, double tau);

/// Intensity correlation Gamma(tau) = gamma_floor + gamma_oscillatory.
/// Even in tau.
double gamma_exact(const OpoParams& p, double tau);

/// Per-peak shape of the jitter-averaged correlation:
///   (1 + 2|delta| ln2 / t_r) exp(-2 |delta| ln2 / t_r).
/// Equals the normalized autocorrelation of the double-exponential jitter,
/// peak value 1 at delta = 0.
double coincidence_peak_shape(double delta, double t_r);

/// The six parameters of the coincidence-count model. Times in seconds,
/// omega_c angular (rad/s).
struct CoincidenceModelParams {
  double tau_f = 0.0;    ///< comb period (cavity round-trip time)
  double t_r = 0.0;      ///< detector resolving time (FWHM of p)
  double omega_c = 0.0;  ///< envelope decay rate
  double c1 = 0.0;       ///< overall counts scale (> 0)
  double c2 = 0.0;       ///< accidental floor relative to c1 (>= 0)
  double tau0 = 0.0;     ///< electronic delay

  /// Oscillations are resolvable only if t_r < tau_f.
  bool peaks_resolvable() const { return t_r < tau_f; }
  void validate() const;  // throws InvalidParams
};

/// Expected coincidence counts at delay tau:
///   c1 * [ c2 + e^{-omega_c |tau - tau0|} * sum_n shape(tau - n tau_f - tau0) ]
/// with the envelope outside the comb sum. The sum always covers at least
/// min_half_window peaks on each side of the nearest one and is auto-extended
/// until the dropped tail is bounded below 1e-9 of the retained sum.
double coincidence_model(const CoincidenceModelParams& m, double tau,
                         int min_half_window = 1);

/// Jitter autocorrelation by adaptive quadrature (test/validation route; the
/// closed form is JitterModel::autocorrelation).
double jitter_autocorrelation_numeric(const JitterModel& j, double delta,
                                      const QuadratureOptions& opts = {});

/// integral corr(t) * (p*p)(tau - t) dt over [breakpoints.front(),
/// breakpoints.back()], with the inner autocorrelation evaluated numerically.
/// Split points near the autocorrelation spike at t = tau are added
/// automatically; callers supply the structure of corr (peak locations,
/// oscillation nodes) through `breakpoints`.
double smeared_correlation_numeric(const std::function<double(double)>& corr,
                                   std::span<const double> breakpoints,
                                   const JitterModel& j, double tau,
                                   const QuadratureOptions& opts = {});

/// Jitter-averaged correlation
///   integral dtau1 dtau2 Gamma(tau1) p(tau2) p(tau2 + tau - tau1)
/// by adaptive quadrature. The accidental floor passes through the double
/// convolution unchanged (p integrates to 1); the oscillatory term is
/// integrated with mandatory splits at every comb node. Throws
/// QuadratureError when the requested tolerance cannot be certified.
double gamma_bar_numeric(const OpoParams& p, const JitterModel& j, double tau,
                         const QuadratureOptions& opts = {});

/// Delta-comb approximation of the averaged correlation, valid for
/// t_r >> tau_F/(2N+1):
///   epsilon^2 (F/F0)^2 [ (2 eps (2N+1)/omega_c)^2
///     + tau_F (2N+1) e^{-omega_c |tau|} sum_n (p*p)(tau - n tau_F) ],
/// the closed form that the coincidence model is fitted with.
double gamma_bar_delta_approx(const OpoParams& p, const JitterModel& j,
                              double tau, int min_half_window = 1);

}  // namespace opocorr
