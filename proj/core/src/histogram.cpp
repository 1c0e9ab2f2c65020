#include "opocorr/histogram.hpp"

#include <cmath>

#include "opocorr/errors.hpp"

namespace opocorr {

std::int64_t Histogram::bin_index(double x) const {
  if (!(x >= start)) return -1;
  const auto i = static_cast<std::int64_t>(std::floor((x - start) / bin_width));
  if (i < 0 || i >= static_cast<std::int64_t>(counts.size())) return -1;
  return i;
}

bool Histogram::add(double x) {
  const std::int64_t i = bin_index(x);
  if (i < 0) return false;
  ++counts[static_cast<std::size_t>(i)];
  return true;
}

std::uint64_t Histogram::total() const {
  std::uint64_t n = 0;
  for (const auto c : counts) n += c;
  return n;
}

Histogram& Histogram::operator+=(const Histogram& other) {
  if (other.counts.size() != counts.size() || other.start != start ||
      other.bin_width != bin_width)
    throw InvalidParams("Histogram: merge of mismatched binnings");
  for (std::size_t i = 0; i < counts.size(); ++i) counts[i] += other.counts[i];
  return *this;
}

void Histogram::validate() const {
  if (!(bin_width > 0.0)) throw InvalidParams("Histogram: bin_width must be > 0");
  if (counts.empty()) throw InvalidParams("Histogram: no bins");
}

}  // namespace opocorr
