#pragma once

#include <cmath>
#include <cstdint>

namespace covmag {

// Counter-based random stream built on the SplitMix64 finalizer.
// Every (master_seed, stream_id) pair is an independent stream; draw k of a
// stream depends only on (master_seed, stream_id, k), so parallel shots can
// each own a stream and reproduce bit-identically in any execution order.
//
//   state_0 = mix(master_seed ^ mix(stream_id))
//   u64_k   = mix(state_0 + (k+1) * 0x9E3779B97F4A7C15)
//
// with mix(z) the SplitMix64 output function (Steele, Lea, Flood 2014).
class CounterRng {
 public:
  CounterRng(std::uint64_t master_seed, std::uint64_t stream_id)
      : base_(mix(master_seed ^ mix(stream_id))) {}

  std::uint64_t next_u64() {
    counter_ += 0x9E3779B97F4A7C15ull;
    return mix(base_ + counter_);
  }

  // uniform in [0,1) with 53-bit resolution
  double uniform() { return double(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // standard normal, Box-Muller (pairs cached per stream)
  double normal() {
    if (have_cache_) {
      have_cache_ = false;
      return cache_;
    }
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double th = 2.0 * 3.14159265358979323846 * uniform();
    cache_ = r * std::sin(th);
    have_cache_ = true;
    return r * std::cos(th);
  }

  // Poisson counts; Knuth multiplication for small means, rounded normal
  // approximation above 64 (means in this domain are photon counts << 64)
  long poisson(double mean) {
    if (mean <= 0.0) return 0;
    if (mean > 64.0) {
      const double x = mean + std::sqrt(mean) * normal();
      return x > 0.0 ? std::lround(x) : 0;
    }
    const double limit = std::exp(-mean);
    long k = 0;
    double p = 1.0;
    do {
      ++k;
      p *= uniform();
    } while (p > limit);
    return k - 1;
  }

  // Bernoulli draw
  bool flip(double p_true) { return uniform() < p_true; }

  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t base_ = 0;
  std::uint64_t counter_ = 0;
  bool have_cache_ = false;
  double cache_ = 0.0;
};

// conventional stream-id layout: high byte tags the purpose, low bits the shot
inline std::uint64_t stream_id(std::uint32_t purpose, std::uint64_t index) {
  return (std::uint64_t(purpose) << 56) ^ index;
}

}  // namespace covmag
