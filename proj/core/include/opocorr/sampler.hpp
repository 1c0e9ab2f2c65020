#pragma once

#include <cstddef>
#include <vector>

#include "opocorr/opo_params.hpp"
#include "opocorr/rng.hpp"

namespace opocorr {

/// Draws pair relative delays from the normalized density proportional to the
/// tau-dependent correlation term, e^{-omega_c |tau|} * comb(tau).
///
/// Two-stage sampling: first the comb peak index n, whose weights decay
/// geometrically with ratio r = e^{-omega_c tau_F}; then the offset within the
/// period from a tabulated inverse CDF. The within-period tables include the
/// e^{-omega_c delta} envelope tilt (one symmetric table for n = 0, one tilted
/// table shared by n >= 1 and mirrored for n <= -1), so the sampled density is
/// exact up to the table resolution. Construction runs a monotonicity
/// self-check on every table and throws TabulationError on failure.
///
/// Immutable after construction; safe to share across threads.
class PairDelaySampler {
 public:
  explicit PairDelaySampler(const OpoParams& p, std::size_t min_table_size = 4096);

  double sample(RngEngine& rng) const;

  double period() const { return tau_f_; }
  /// Geometric peak-weight ratio r = e^{-omega_c tau_F}.
  double peak_weight_ratio() const { return r_; }
  /// Probability that a draw comes from the central (n = 0) peak.
  double center_peak_probability() const { return p0_; }

 private:
  struct InverseCdfTable {
    double lo = 0.0, cell = 0.0;
    std::vector<double> cdf;  // size n_cells + 1, cdf.front()=0, cdf.back()=1
    double mass = 0.0;        // unnormalized integral
    double draw(double u) const;
  };

  InverseCdfTable build_table(const OpoParams& p, bool symmetric,
                              std::size_t n_cells) const;

  double tau_f_ = 0.0;
  double r_ = 0.0;
  double p0_ = 0.0;
  InverseCdfTable center_;  // density e^{-omega_c |delta|} comb(delta)
  InverseCdfTable side_;    // density e^{-omega_c delta} comb(delta), n >= 1
};

}  // namespace opocorr
