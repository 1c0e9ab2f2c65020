#include "opocorr/cavity.hpp"

#include <cmath>
#include <numbers>

#include "opocorr/errors.hpp"

namespace opocorr {

LossEstimate estimate_intracavity_loss(double omega_c, double tau_f,
                                       double t_output_coupler) {
  if (!(omega_c > 0.0)) throw InvalidParams("loss estimate: omega_c must be > 0");
  if (!(tau_f > 0.0)) throw InvalidParams("loss estimate: tau_f must be > 0");
  if (!(t_output_coupler > 0.0 && t_output_coupler < 1.0))
    throw InvalidParams("loss estimate: coupler transmittance must be in (0, 1)");

  LossEstimate e;
  e.coupler_transmittance = t_output_coupler;
  e.finesse = (2.0 * std::numbers::pi / tau_f) / omega_c;
  e.total_round_trip_loss = omega_c * tau_f;  // = 2*pi / finesse
  e.other_loss = e.total_round_trip_loss - t_output_coupler;
  if (e.other_loss < 0.0)
    throw InconsistentInputs(
        "loss estimate: coupler transmittance exceeds the total round-trip "
        "loss implied by omega_c * tau_f");
  return e;
}

double round_trip_time_from_length(double air_path_length,
                                   std::span<const RefractiveSegment> segments) {
  if (!(air_path_length >= 0.0) || !std::isfinite(air_path_length))
    throw InvalidParams("round trip: air path length must be >= 0");
  double optical = air_path_length;
  for (const auto& s : segments) {
    if (!(s.length > 0.0)) throw InvalidParams("round trip: segment length must be > 0");
    if (!(s.index >= 1.0)) throw InvalidParams("round trip: refractive index must be >= 1");
    optical += s.length * s.index;
  }
  if (!(optical > 0.0)) throw InvalidParams("round trip: zero total path");
  return optical / speed_of_light;
}

}  // namespace opocorr
