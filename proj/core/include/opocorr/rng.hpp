#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace opocorr {

using RngEngine = std::mt19937_64;

/// splitmix64 finalizer; decorrelates nearby seeds.
inline std::uint64_t mix64(std::uint64_t z) {
  z ^= z >> 30;
  z *= 0xBF58476D1CE4E5B9ull;
  z ^= z >> 27;
  z *= 0x94D049BB133111EBull;
  z ^= z >> 31;
  return z;
}

/// Deterministic per-stream engine: stream k of a given seed is the same on
/// every run and on every worker, which is what makes parallel simulation
/// results independent of the worker count.
inline RngEngine make_stream_engine(std::uint64_t seed, std::uint64_t stream) {
  constexpr std::uint64_t golden = 0x9E3779B97F4A7C15ull;
  return RngEngine(mix64(seed + golden * (stream + 1)));
}

/// Uniform draw in the open interval (0, 1), 53-bit resolution. Built from
/// raw engine words so the sequence is identical across platforms.
inline double uniform01(RngEngine& g) {
  return (static_cast<double>(g() >> 11) + 0.5) * 0x1.0p-53;
}

/// Exponential waiting time with the given rate.
inline double exponential_draw(RngEngine& g, double rate) {
  return -std::log(uniform01(g)) / rate;
}

}  // namespace opocorr
