#pragma once

#include <span>

namespace opocorr {

inline constexpr double speed_of_light = 299792458.0;  // m/s

struct LossEstimate {
  double finesse = 0.0;                ///< FSR / bandwidth
  double total_round_trip_loss = 0.0;  ///< 2*pi/finesse = omega_c * tau_f
  double coupler_transmittance = 0.0;  ///< echoed input
  double other_loss = 0.0;             ///< total minus coupler
};

/// Estimates intracavity loss from the measured bandwidth and round-trip
/// time. Uses the low-loss convention L_total ~= 2*pi/F with
/// F = (2*pi/tau_f)/omega_c, so L_total = omega_c * tau_f. Throws
/// InconsistentInputs when the coupler transmittance alone exceeds the total
/// loss.
LossEstimate estimate_intracavity_loss(double omega_c, double tau_f,
                                       double t_output_coupler);

/// A stretch of material inside the cavity: geometric length (m) and
/// refractive index.
struct RefractiveSegment {
  double length = 0.0;
  double index = 1.0;
};

/// Round-trip time from the cavity geometry: the air path (index 1) plus each
/// listed segment contributing length*index of optical path,
///   tau_F = (air_path + sum length_i * index_i) / c.
double round_trip_time_from_length(double air_path_length,
                                   std::span<const RefractiveSegment> segments = {});

}  // namespace opocorr
