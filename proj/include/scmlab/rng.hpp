#pragma once

#include <cstdint>

#include "scmlab/normal.hpp"

namespace scmlab {

namespace detail {

// splitmix64 finalizer (Vigna 2015; Steele, Lea & Flood 2014).
inline uint64_t mix64(uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

inline constexpr uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

}  // namespace detail

// Identifies one replication's worth of randomness: (master seed, replication).
struct StreamKey {
  uint64_t seed = 0;
  uint64_t replication = 0;
};

// Counter-based stream: output k is a pure function of (seed, replication,
// stream_id, k), so draws can be positioned with seek() and the same stream
// yields the same sequence regardless of how work is partitioned.
class RngStream {
 public:
  RngStream(StreamKey key, uint64_t stream_id) {
    uint64_t h = detail::mix64(key.seed + detail::kGamma);
    h = detail::mix64(h ^ (key.replication + detail::kGamma));
    key_ = detail::mix64(h ^ (stream_id + detail::kGamma));
  }

  uint64_t next_u64() { return detail::mix64(key_ + ++counter_ * detail::kGamma); }

  void seek(uint64_t position) { counter_ = position; }
  uint64_t position() const { return counter_; }

  // Uniform on the open interval (0, 1); never returns an endpoint, so
  // the inverse normal CDF below stays finite.
  double next_uniform() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  }

  double next_normal() { return norm_quantile(next_uniform()); }

 private:
  uint64_t key_ = 0;
  uint64_t counter_ = 0;
};

}  // namespace scmlab
