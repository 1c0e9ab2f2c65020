#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace opocorr {

/// Uniformly binned coincidence histogram: counts of start-stop delays.
/// `start` and `bin_width` are in seconds. `meta` carries acquisition
/// settings as flat key=value strings and is what file headers serialize.
struct Histogram {
  double start = 0.0;
  double bin_width = 0.0;
  std::vector<std::uint64_t> counts;
  std::map<std::string, std::string> meta;

  std::size_t size() const { return counts.size(); }
  double stop() const { return start + bin_width * static_cast<double>(counts.size()); }
  double center(std::size_t i) const { return start + bin_width * (static_cast<double>(i) + 0.5); }
  double edge(std::size_t i) const { return start + bin_width * static_cast<double>(i); }

  /// Bin containing x, or -1 when x lies outside [start, stop()).
  std::int64_t bin_index(double x) const;
  /// Increments the bin containing x; returns false when x is out of range.
  bool add(double x);
  std::uint64_t total() const;

  /// Adds counts of an identically binned histogram. Throws InvalidParams on
  /// geometry mismatch.
  Histogram& operator+=(const Histogram& other);

  void validate() const;  // bin_width > 0, non-empty
};

}  // namespace opocorr
