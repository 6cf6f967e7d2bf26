// rng.hpp — SplitMix64-style counter RNG. Streams derive from (seed, stream)
// and draws from a counter, so parallel schedules cannot perturb sampling.
#pragma once

#include <cstdint>

namespace fsg {

inline constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

inline std::uint64_t mix64(std::uint64_t z) {
    z += kGolden;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    return mix64(seed ^ mix64(index + kGolden));
}

class CounterRng {
public:
    explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0)
        : key_(mix64(seed) ^ mix64(stream * kGolden + 1)) {}

    std::uint64_t next() { return mix64(key_ + (++counter_) * kGolden); }

    bool coin(double p) {
        if (p >= 1.0) { next(); return true; }
        if (p <= 0.0) { next(); return false; }
        return next() < static_cast<std::uint64_t>(p * 18446744073709551616.0);
    }

    std::uint64_t below(std::uint64_t bound) { return next() % bound; }

private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

}  // namespace fsg
