#include "opocorr/jitter.hpp"

#include <cmath>
#include <numbers>

#include "opocorr/correlation.hpp"
#include "opocorr/errors.hpp"
#include "opocorr/rng.hpp"

namespace opocorr {

namespace {
constexpr double ln2 = std::numbers::ln2;
}

void JitterModel::validate() const {
  if (!(t_r > 0.0) || !std::isfinite(t_r))
    throw InvalidParams("JitterModel: t_r must be > 0");
}

double JitterModel::pdf(double tau) const {
  return (ln2 / t_r) * std::exp(-2.0 * std::abs(tau) * ln2 / t_r);
}

double JitterModel::cdf(double tau) const {
  const double b = 2.0 * ln2 / t_r;
  return tau < 0.0 ? 0.5 * std::exp(b * tau) : 1.0 - 0.5 * std::exp(-b * tau);
}

double JitterModel::quantile(double u) const {
  const double b = 2.0 * ln2 / t_r;
  return u < 0.5 ? std::log(2.0 * u) / b : -std::log(2.0 * (1.0 - u)) / b;
}

double JitterModel::autocorrelation(double delta) const {
  return (ln2 / (2.0 * t_r)) * coincidence_peak_shape(delta, t_r);
}

double JitterModel::sample(RngEngine& rng) const {
  return quantile(uniform01(rng));
}

}  // namespace opocorr
