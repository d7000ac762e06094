#pragma once

#include <cmath>
#include <cstdint>
#include <limits>

namespace levymix {

/// Counter-based 64-bit generator (SplitMix64). One instance per sampled
/// path; streams are derived from (base_seed, path_index) so that path i
/// is reproducible regardless of how paths are distributed over workers.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit SplitMix64(std::uint64_t seed = 0x9e3779b97f4a7c15ULL) : state_(seed) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return ~0ULL; }

  result_type operator()() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in (0,1): 53-bit mantissa, never exactly 0.
  double uniform() {
    return (static_cast<double>((*this)() >> 11) + 0.5) * 0x1.0p-53;
  }

  double exponential(double rate) { return -std::log(uniform()) / rate; }

  /// Standard normal via Box-Muller (spare cached).
  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u = uniform();
    double v = uniform();
    double r = std::sqrt(-2.0 * std::log(u));
    double a = 6.283185307179586476925286766559 * v;
    spare_ = r * std::sin(a);
    has_spare_ = true;
    return r * std::cos(a);
  }

  /// Poisson count via unit-exponential interarrival sums. Exact for any
  /// mean; O(mean) draws, which is fine for the jump intensities used here.
  std::uint64_t poisson(double mean) {
    if (mean <= 0.0) return 0;
    std::uint64_t k = 0;
    double acc = exponential(1.0);
    while (acc < mean) {
      ++k;
      acc += exponential(1.0);
    }
    return k;
  }

 private:
  std::uint64_t state_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

/// Stream derivation: seeds path `index` of a run keyed by `base_seed`.
/// Double-mixed so that nearby (seed, index) pairs decorrelate.
inline SplitMix64 derive_stream(std::uint64_t base_seed, std::uint64_t index,
                                std::uint64_t stride = 1) {
  SplitMix64 mixer(base_seed ^ (0x6a09e667f3bcc909ULL + index * stride));
  std::uint64_t s = mixer();
  s ^= mixer();
  return SplitMix64(s);
}

}  // namespace levymix
