#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <utility>

namespace sqws {

// SplitMix64 finalizer: the seed-derivation scheme for worker/sub-streams.
// derive_seed(seed, k) for k = 0,1,2,... gives decorrelated stream seeds and
// is the documented contract that keeps parallel runs reproducible.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
    return splitmix64(splitmix64(seed) ^ splitmix64(~stream));
}

// mt19937_64 with explicit bounded draws. The engine's output sequence is
// fixed by the standard and the rejection step below is exact, so every draw
// is bit-reproducible across platforms.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    // Unbiased integer in [0, n) by rejection below 2^64 - (2^64 mod n).
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t threshold = (0 - n) % n;
        for (;;) {
            const std::uint64_t r = next();
            if (r >= threshold) return r % n;
        }
    }

    // Uniform in [0, 1) with 53 random bits.
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Fisher-Yates; draw order (i = n-1 down to 1) is part of the contract.
    template <typename T>
    void shuffle(std::span<T> items) {
        for (std::size_t i = items.size(); i > 1; --i) {
            const std::size_t j = static_cast<std::size_t>(below(i));
            std::swap(items[i - 1], items[j]);
        }
    }

  private:
    std::mt19937_64 engine_;
};

}  // namespace sqws
