#pragma once

#include <cstdint>

namespace plab {

// SplitMix64 finalizer. Used both as a sequential stream and, hashed over
// (seed, trial, stream), as a counter-based generator whose draws are pure
// functions of their indices, so Monte Carlo results do not depend on
// execution order or thread count.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

// Top 53 bits -> [0, 1)
constexpr double unit_double(std::uint64_t x) noexcept {
    return static_cast<double>(x >> 11) * 0x1.0p-53;
}

inline double counter_uniform(std::uint64_t seed, std::uint64_t trial,
                              std::uint64_t stream) noexcept {
    std::uint64_t h = mix64(seed + kGolden);
    h = mix64(h + (trial + 1) * kGolden);
    h = mix64(h + (stream + 1) * 0xd1b54a32d192ed03ULL);
    return unit_double(h);
}

class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    std::uint64_t next() noexcept { return mix64(state_ += kGolden); }

    double uniform() noexcept { return unit_double(next()); }

    double uniform(double lo, double hi) noexcept {
        return lo + (hi - lo) * uniform();
    }

    // n must be > 0; modulo bias is irrelevant at test-suite scale
    std::uint64_t below(std::uint64_t n) noexcept { return next() % n; }

    int range(int lo, int hi) noexcept {
        return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

private:
    std::uint64_t state_;
};

}  // namespace plab
