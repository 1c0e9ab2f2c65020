#pragma once

#include <cstdint>
#include <vector>

#include "opocorr/histogram.hpp"
#include "opocorr/jitter.hpp"
#include "opocorr/opo_params.hpp"

namespace opocorr {

/// Photon-pair emission process: Poisson pair births at `pair_rate` over
/// `duration`, relative delays drawn from the comb density of `opo`.
struct EmissionConfig {
  double pair_rate = 0.0;  ///< mean pairs per second (proportional to pump power)
  OpoParams opo;
  double duration = 0.0;   ///< acquisition time, seconds
  std::uint64_t seed = 0;

  void validate() const;
};

struct DetectorConfig {
  JitterModel jitter;
  double efficiency = 1.0;  ///< in (0, 1]

  void validate() const;
};

/// Start-stop converter plus multichannel analyzer settings. The electronic
/// delay is added to the stop arm; a conversion lands in the bin containing
/// (t_stop + electronic_delay - t_start).
struct TacConfig {
  double electronic_delay = 0.0;  ///< tau0, seconds
  double bin_width = 50e-12;
  double window_start = 0.0;
  double window_stop = 50e-9;
  int start_channel = 1;
  int stop_channel = 2;

  int n_bins() const;
  void validate() const;
};

struct EventRecord {
  std::int32_t detector_id = 0;  ///< 1 or 2
  double timestamp = 0.0;        ///< seconds
};

/// Full event stream for the configured acquisition: pair births split on a
/// 50/50 beamsplitter, thinned by detector efficiency, smeared by per-detector
/// jitter. Events are generated slice by slice from per-slice RNG substreams
/// (deterministic in (config, seed)) and returned sorted within each slice.
std::vector<EventRecord> generate_events(const EmissionConfig& e,
                                         const DetectorConfig& det1,
                                         const DetectorConfig& det2);

/// Classic single-stop TAC/MCA pass over an event stream: each start-channel
/// event opens the converter unless it is busy; the first stop-channel event
/// whose delayed time falls inside the window converts to one count; the
/// converter stays busy until conversion or window expiry. Events are sorted
/// internally; an empty input yields an all-zero histogram.
Histogram tac_mca_histogram(std::vector<EventRecord> events, const TacConfig& t);

struct SimulationOptions {
  int workers = 1;          ///< worker threads; the histogram is invariant to this
  bool keep_events = false; ///< also return the raw event stream (memory!)
};

struct SimulationOutput {
  Histogram histogram;
  std::vector<EventRecord> events;  // filled only when keep_events
};

/// End-to-end acquisition. Time is cut into fixed slices that depend only on
/// the configuration; each slice owns an RNG substream and is processed with a
/// TAC replay that starts one slice earlier, so cross-boundary coincidences
/// are kept and the result is bit-identical for any worker count.
SimulationOutput simulate(const EmissionConfig& e, const DetectorConfig& det1,
                          const DetectorConfig& det2, const TacConfig& t,
                          const SimulationOptions& opts = {});

}  // namespace opocorr
