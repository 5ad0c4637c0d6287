#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>

namespace qtel::rng {

// SplitMix64 mixing step (Steele, Lea & Flood). Used both as the stream
// generator and to derive independent per-sample sub-seeds, so sample i is
// identical no matter how work is chunked across threads.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Stream tags keep the state-sampling and wavevector-sampling streams
// independent: consuming draws from one never shifts the other.
inline constexpr std::uint64_t kStateStream = 0x706869u;       // "phi"
inline constexpr std::uint64_t kWavevectorStream = 0x6b766563u;  // "kvec"

inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream_tag,
                                 std::uint64_t index) {
  std::uint64_t s = master;
  std::uint64_t a = splitmix64(s);
  s ^= stream_tag * 0x9e3779b97f4a7c15ULL;
  std::uint64_t b = splitmix64(s);
  s ^= index + 0x632be59bd9b4e019ULL;
  std::uint64_t c = splitmix64(s);
  return a ^ (b + (c << 1));
}

// Small deterministic generator: uniform doubles in [0,1) and Box-Muller
// normals, independent of platform library internals.
class Prng {
 public:
  explicit Prng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() { return splitmix64(state_); }

  double uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  double normal() {
    if (cached_) {
      double v = *cached_;
      cached_.reset();
      return v;
    }
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    cached_ = radius * std::sin(angle);
    return radius * std::cos(angle);
  }

 private:
  std::uint64_t state_;
  std::optional<double> cached_;
};

}  // namespace qtel::rng
