#include "opocorr/opo_params.hpp"

#include <cmath>
#include <numbers>

#include "opocorr/errors.hpp"

namespace opocorr {

double OpoParams::round_trip_time() const {
  return 2.0 * std::numbers::pi / omega_fsr;
}

bool OpoParams::far_below_threshold() const {
  const double x = 2.0 * epsilon / omega_c();
  return x * x < 0.01;
}

void OpoParams::validate() const {
  if (!(gamma1 > 0.0) || !std::isfinite(gamma1))
    throw InvalidParams("OpoParams: gamma1 must be > 0");
  if (!(gamma2 >= 0.0) || !std::isfinite(gamma2))
    throw InvalidParams("OpoParams: gamma2 must be >= 0");
  if (!(epsilon >= 0.0) || !std::isfinite(epsilon))
    throw InvalidParams("OpoParams: epsilon must be >= 0");
  if (!(omega_fsr > 0.0) || !std::isfinite(omega_fsr))
    throw InvalidParams("OpoParams: omega_fsr must be > 0");
  if (n_modes_half < 0)
    throw InvalidParams("OpoParams: n_modes_half must be >= 0");
  if (!below_threshold())
    throw InvalidParams("OpoParams: pump at or above threshold (2*epsilon >= gamma1 + gamma2)");
}

SpectralCoefficients spectral_coefficients(const OpoParams& p, double omega) {
  p.validate();
  const std::complex<double> d(p.gamma1 + p.gamma2, -2.0 * omega);
  const double root12 = std::sqrt(p.gamma1 * p.gamma2);
  SpectralCoefficients c;
  c.omega = omega;
  c.G1 = std::complex<double>(p.gamma1 - p.gamma2, 2.0 * omega) / d;
  c.g1 = 4.0 * p.epsilon * p.gamma1 / (d * d);
  c.G2 = 2.0 * root12 / d;
  c.g2 = 4.0 * p.epsilon * root12 / (d * d);
  return c;
}

}  // namespace opocorr
