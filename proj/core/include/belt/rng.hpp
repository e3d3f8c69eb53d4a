#pragma once

#include <cstdint>
#include <random>

namespace belt {

// Deterministic random stream. Thin wrapper over std::mt19937_64 that does its
// own range reduction; std::uniform_int_distribution is implementation-defined,
// and results here must be reproducible for a given seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform integer in [0, n). Rejection sampling, no modulo bias.
  std::uint64_t below(std::uint64_t n) {
    if (n == 0) return 0;
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t v;
    do {
      v = engine_();
    } while (v >= limit);
    return v % n;
  }

  // Uniform double in [0, 1), 53 bits.
  double next_double() {
    return static_cast<double>(engine_() >> 11) * (1.0 / 9007199254740992.0);
  }

  // Standard normal via Box-Muller. Two uniforms per call, no state carried
  // over, so the stream stays easy to reason about.
  double next_normal();

 private:
  std::mt19937_64 engine_;
};

// Trial substreams: the convention everywhere is seed XOR trial index.
inline std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t trial) {
  return seed ^ trial;
}

}  // namespace belt
