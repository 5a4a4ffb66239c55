#pragma once

#include <cstdint>

namespace foldcat {

// Deterministic splitmix64 stream. Reports must be byte-identical across
// platforms, and std::uniform_int_distribution is not reproducible across
// standard libraries, so all sampling goes through this.
class SplitMix64 {
 public:
  explicit constexpr SplitMix64(std::uint64_t seed) : state_(seed) {}

  constexpr std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Draw in [0, n). Modulo bias is irrelevant at the ranges we sample.
  constexpr std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }

  // Independent substream for one trial of a seeded sweep, so sweeps can be
  // partitioned across workers without changing results.
  static constexpr SplitMix64 for_trial(std::uint64_t seed, std::uint64_t trial) {
    SplitMix64 g(seed ^ (0x632be59bd9b4e019ULL * (trial + 1)));
    g.next();
    return g;
  }

 private:
  std::uint64_t state_;
};

}  // namespace foldcat
