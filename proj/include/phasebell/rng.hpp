#pragma once

#include <cstdint>
#include <initializer_list>

namespace phasebell {

// SplitMix64 finalizer. Bijective on 64-bit words, good avalanche.
constexpr std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Derives a substream key from a seed and a path of indices, e.g.
// stream_key(seed, {point_index, sample_index}). Distinct paths give
// statistically independent streams, so parallel work units can draw
// without any shared state (results are schedule-independent).
constexpr std::uint64_t stream_key(std::uint64_t seed,
                                   std::initializer_list<std::uint64_t> path) {
    std::uint64_t k = mix64(seed);
    for (std::uint64_t p : path) {
        k = mix64(k ^ mix64(p + 0x632be59bd9b4e019ULL));
    }
    return k;
}

// Counter-based generator: output i is mix64(key + i * odd constant).
// No hidden state beyond the counter, so a stream can be split or
// fast-forwarded freely.
class Rng {
  public:
    explicit Rng(std::uint64_t key, std::uint64_t counter = 0)
        : key_(key), counter_(counter) {}

    std::uint64_t next_u64() {
        return mix64(key_ + (counter_++) * 0x9e3779b97f4a7c15ULL);
    }

    // Uniform double in [0, 1), 53 mantissa bits.
    double uniform01() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    // Standard normal via Box-Muller; the spare value is cached so each
    // pair of draws consumes exactly two uniforms.
    double normal();

    // UniformRandomBitGenerator interface for <random> distributions.
    using result_type = std::uint64_t;
    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return ~0ULL; }
    result_type operator()() { return next_u64(); }

  private:
    std::uint64_t key_;
    std::uint64_t counter_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

} // namespace phasebell
