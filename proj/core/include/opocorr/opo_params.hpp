#pragma once

#include <complex>

namespace opocorr {

/// Cavity and pump parameters of a degenerate OPO below threshold.
///
/// Convention: every rate is angular (rad/s) and every time is in seconds.
/// The boundary layers (CLI, file headers) speak ns and ordinary MHz and
/// convert with explicit 2*pi factors; nothing inside the library does unit
/// conversion.
struct OpoParams {
  double gamma1 = 0.0;     ///< output-coupler coupling rate (rad/s)
  double gamma2 = 0.0;     ///< coupling rate of all other losses (rad/s)
  double epsilon = 0.0;    ///< single-pass parametric amplitude gain, expressed
                           ///< as an angular rate so that 2*epsilon/omega_c()
                           ///< is the dimensionless distance to threshold
  double omega_fsr = 0.0;  ///< free spectral range (rad/s)
  int n_modes_half = 0;    ///< N; the output spans longitudinal modes -N..N
  double omega0 = 0.0;     ///< degenerate carrier frequency (rad/s), metadata
                           ///< only: no operation consumes it

  /// Cavity bandwidth, omega_c = gamma1 + gamma2.
  double omega_c() const { return gamma1 + gamma2; }
  /// F/F0: finesse relative to the loss-free cavity; equals the escape
  /// efficiency through the output coupler.
  double escape_efficiency() const { return gamma1 / (gamma1 + gamma2); }
  /// Cavity round-trip time tau_F = 2*pi/omega_fsr.
  double round_trip_time() const;
  /// Number of longitudinal modes, 2N+1.
  int n_modes_total() const { return 2 * n_modes_half + 1; }

  /// Below-threshold condition 2*epsilon/(gamma1+gamma2) < 1.
  bool below_threshold() const { return 2.0 * epsilon < omega_c(); }
  /// Far-below-threshold helper: (2*epsilon/omega_c)^2 < 0.01.
  bool far_below_threshold() const;

  /// Throws InvalidParams unless gamma1 > 0, gamma2 >= 0, epsilon >= 0,
  /// omega_fsr > 0, n_modes_half >= 0 and the pump is below threshold.
  void validate() const;
};

/// Input-output coefficients of the OPO at offset Omega from a comb line.
/// |G1|^2 + |G2|^2 = 1 identically; g2/g1 = sqrt(gamma2/gamma1).
struct SpectralCoefficients {
  std::complex<double> G1;  ///< vacuum reflection through the output coupler
  std::complex<double> g1;  ///< parametric (conjugate) coefficient, coupler mode
  std::complex<double> G2;  ///< vacuum transmission of the loss mode
  std::complex<double> g2;  ///< parametric (conjugate) coefficient, loss mode
  double omega = 0.0;       ///< offset the coefficients were evaluated at (rad/s)
};

/// Evaluates the four spectral coefficients at offset omega.
SpectralCoefficients spectral_coefficients(const OpoParams& p, double omega);

}  // namespace opocorr
