#include "opocorr/correlation.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "opocorr/errors.hpp"
#include "opocorr/fejer.hpp"

namespace opocorr {

namespace {
constexpr double ln2 = std::numbers::ln2;
}

double gamma_floor(const OpoParams& p) {
  p.validate();
  const double eta = p.escape_efficiency();
  const double m = p.n_modes_total();
  const double a = 2.0 * p.epsilon * m / p.omega_c();
  return p.epsilon * p.epsilon * eta * eta * a * a;
}

double gamma_oscillatory(const OpoParams& p, double tau) {
  p.validate();
  const double eta = p.escape_efficiency();
  const double x = 2.0 * p.epsilon / p.omega_c();
  return p.epsilon * p.epsilon * eta * eta * (1.0 + x * x) *
         std::exp(-p.omega_c() * std::abs(tau)) *
         fejer_comb(p.omega_fsr, p.n_modes_half, tau);
}

double gamma_exact(const OpoParams& p, double tau) {
  return gamma_floor(p) + gamma_oscillatory(p, tau);
}

double coincidence_peak_shape(double delta, double t_r) {
  const double u = 2.0 * std::abs(delta) * ln2 / t_r;
  return (1.0 + u) * std::exp(-u);
}

void CoincidenceModelParams::validate() const {
  if (!(tau_f > 0.0) || !std::isfinite(tau_f))
    throw InvalidParams("CoincidenceModelParams: tau_f must be > 0");
  if (!(t_r > 0.0) || !std::isfinite(t_r))
    throw InvalidParams("CoincidenceModelParams: t_r must be > 0");
  if (!(omega_c > 0.0) || !std::isfinite(omega_c))
    throw InvalidParams("CoincidenceModelParams: omega_c must be > 0");
  if (!(c1 > 0.0) || !std::isfinite(c1))
    throw InvalidParams("CoincidenceModelParams: c1 must be > 0");
  if (!(c2 >= 0.0) || !std::isfinite(c2))
    throw InvalidParams("CoincidenceModelParams: c2 must be >= 0");
  if (!std::isfinite(tau0))
    throw InvalidParams("CoincidenceModelParams: tau0 must be finite");
}

namespace {

/// Comb sum sum_n shape(x - n*tau_f) with shape(d) = (1+b|d|)e^{-b|d|}.
/// Extends outward from the nearest peak until the geometric tail bound drops
/// below 1e-9 of the retained sum (and at least min_half_window peaks per
/// side are included). shape(d + tau_f) <= shape(d) * q with
/// q = (1 + b*tau_f) e^{-b*tau_f} < 1, which bounds the dropped tail.
double peak_comb_sum(double x, double tau_f, double t_r, int min_half_window) {
  const double b = 2.0 * ln2 / t_r;
  const double q = (1.0 + b * tau_f) * std::exp(-b * tau_f);
  const auto n0 = static_cast<long long>(std::llround(x / tau_f));
  double sum = coincidence_peak_shape(x - static_cast<double>(n0) * tau_f, t_r);
  constexpr double tail_frac = 1e-9;
  constexpr long long k_cap = 1000000;
  for (long long k = 1; k <= k_cap; ++k) {
    const double tp = coincidence_peak_shape(x - static_cast<double>(n0 + k) * tau_f, t_r);
    const double tm = coincidence_peak_shape(x - static_cast<double>(n0 - k) * tau_f, t_r);
    sum += tp + tm;
    if (k >= min_half_window) {
      const double tail_bound = (tp + tm) * q / (1.0 - q);
      if (tail_bound < tail_frac * sum) break;
    }
  }
  return sum;
}

}  // namespace

double coincidence_model(const CoincidenceModelParams& m, double tau,
                         int min_half_window) {
  m.validate();
  if (min_half_window < 1)
    throw InvalidParams("coincidence_model: min_half_window must be >= 1");
  const double x = tau - m.tau0;
  const double comb = peak_comb_sum(x, m.tau_f, m.t_r, min_half_window);
  return m.c1 * (m.c2 + std::exp(-m.omega_c * std::abs(x)) * comb);
}

double jitter_autocorrelation_numeric(const JitterModel& j, double delta,
                                      const QuadratureOptions& opts) {
  j.validate();
  const double b = 2.0 * ln2 / j.t_r;
  const double cut = 30.0 / b + std::abs(delta);
  // kinks of the integrand p(t) p(t+delta) sit at t = 0 and t = -delta
  std::vector<double> bp{-cut, std::min(0.0, -delta), std::max(0.0, -delta), cut};
  std::sort(bp.begin(), bp.end());
  const auto res = integrate_adaptive_split(
      [&](double t) { return j.pdf(t) * j.pdf(t + delta); }, bp, opts);
  return res.value;
}

double smeared_correlation_numeric(const std::function<double(double)>& corr,
                                   std::span<const double> breakpoints,
                                   const JitterModel& j, double tau,
                                   const QuadratureOptions& opts) {
  j.validate();
  if (breakpoints.size() < 2)
    throw InvalidParams("smeared_correlation_numeric: need at least two breakpoints");
  const double b = 2.0 * ln2 / j.t_r;
  QuadratureOptions inner = opts;
  inner.rel_tol = std::min(1e-9, opts.rel_tol * 1e-2);
  inner.max_evals = std::max(100000L, opts.max_evals / 100);

  std::vector<double> bp(breakpoints.begin(), breakpoints.end());
  // the autocorrelation spike sits at t = tau; pin it and its shoulders
  for (const double d : {0.0, 1.0 / b, 3.0 / b, 10.0 / b, 30.0 / b}) {
    bp.push_back(tau - d);
    bp.push_back(tau + d);
  }
  std::sort(bp.begin(), bp.end());
  const double lo = breakpoints.front(), hi = breakpoints.back();
  std::erase_if(bp, [&](double v) { return v < lo || v > hi; });
  bp.insert(bp.begin(), lo);
  bp.push_back(hi);
  std::sort(bp.begin(), bp.end());

  const auto res = integrate_adaptive_split(
      [&](double t) { return corr(t) * jitter_autocorrelation_numeric(j, tau - t, inner); },
      bp, opts);
  const double scale = std::max(std::abs(res.value), opts.abs_tol);
  if (res.budget_exhausted && res.error_estimate > opts.rel_tol * scale)
    throw QuadratureError("smeared correlation: tolerance not reached within budget",
                          opts.rel_tol, res.error_estimate / std::max(scale, 1e-300));
  return res.value;
}

double gamma_bar_numeric(const OpoParams& p, const JitterModel& j, double tau,
                         const QuadratureOptions& opts) {
  p.validate();
  j.validate();
  const double oc = p.omega_c();
  const double tf = p.round_trip_time();
  const int m = p.n_modes_total();
  const double b = 2.0 * ln2 / j.t_r;

  // The tau-independent floor passes through the double convolution exactly
  // (p integrates to 1); only the oscillatory term needs quadrature. Its
  // support: envelope cut at 50/omega_c, autocorrelation cut at 45/b.
  const double hg = 50.0 / oc;
  const double ha = 45.0 / b;
  double lo = std::max(-hg, tau - ha);
  double hi = std::min(hg, tau + ha);
  if (!(lo < hi)) return gamma_floor(p);

  // mandatory splits at every comb node (zeros and peak centers), spacing
  // tau_f / (2N+1): adaptive Simpson alone can alias on hundreds of
  // oscillations per envelope length
  const double node = tf / static_cast<double>(m);
  std::vector<double> bp;
  const auto i_lo = static_cast<long long>(std::floor(lo / node));
  const auto i_hi = static_cast<long long>(std::ceil(hi / node));
  bp.reserve(static_cast<std::size_t>(i_hi - i_lo + 3));
  bp.push_back(lo);
  for (long long i = i_lo; i <= i_hi; ++i) {
    const double v = static_cast<double>(i) * node;
    if (v > lo && v < hi) bp.push_back(v);
  }
  bp.push_back(hi);

  const double osc =
      smeared_correlation_numeric([&](double t) { return gamma_oscillatory(p, t); },
                                  bp, j, tau, opts);
  return gamma_floor(p) + osc;
}

double gamma_bar_delta_approx(const OpoParams& p, const JitterModel& j,
                              double tau, int min_half_window) {
  p.validate();
  j.validate();
  const double eta = p.escape_efficiency();
  const double m = p.n_modes_total();
  const double e2 = p.epsilon * p.epsilon;
  const double tf = p.round_trip_time();
  // per-peak weight tau_F (2N+1) (p*p)(0); the (2 eps/omega_c)^2 correction of
  // the oscillatory term is dropped in the averaged form
  const double comb = peak_comb_sum(tau, tf, j.t_r, min_half_window);
  const double a0 = ln2 / (2.0 * j.t_r);
  return gamma_floor(p) +
         e2 * eta * eta * tf * m * a0 * std::exp(-p.omega_c() * std::abs(tau)) * comb;
}

}  // namespace opocorr
