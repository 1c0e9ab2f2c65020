#pragma once

namespace opocorr {

/// The squared-sine comb sin^2[(2N+1)*omega_fsr*tau/2] / sin^2(omega_fsr*tau/2).
///
/// Total function of tau: the removable singularities at tau = k*tau_F are
/// evaluated by series expansion and return the limit (2N+1)^2. Periodic with
/// period tau_F = 2*pi/omega_fsr, even, and continuous everywhere.
double fejer_comb(double omega_fsr, int n_half, double tau);

}  // namespace opocorr
