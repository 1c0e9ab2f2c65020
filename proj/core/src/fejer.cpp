#include "opocorr/fejer.hpp"

#include <cmath>
#include <numbers>

#include "opocorr/errors.hpp"

namespace opocorr {

double fejer_comb(double omega_fsr, int n_half, double tau) {
  if (!(omega_fsr > 0.0) || !std::isfinite(omega_fsr))
    throw InvalidParams("fejer_comb: omega_fsr must be > 0");
  if (n_half < 0) throw InvalidParams("fejer_comb: n_half must be >= 0");

  const double m = 2.0 * n_half + 1.0;
  // Reduce to u = omega_fsr*tau/2 mod pi in [-pi/2, pi/2]: sin^2(u) is
  // pi-periodic and, m being odd, sin^2(m u) shifts by whole multiples of pi
  // as well. This keeps the comb exactly periodic and well conditioned at
  // large |tau|.
  const double u = std::remainder(0.5 * omega_fsr * tau, std::numbers::pi);
  const double s = std::sin(u);
  if (std::abs(s) < 1e-6 && std::abs(m * u) < 1e-3) {
    // removable singularity: sin^2(mu)/sin^2(u) = m^2 (1 - (m^2-1) u^2 / 3 + ...)
    return m * m * (1.0 - (m * m - 1.0) * u * u / 3.0);
  }
  const double sm = std::sin(m * u);
  return (sm * sm) / (s * s);
}

}  // namespace opocorr
