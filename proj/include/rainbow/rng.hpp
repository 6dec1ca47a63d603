#pragma once

#include <cstdint>
#include <limits>

namespace rainbow {

/// SplitMix64 finalizer (Stafford variant 13).
constexpr std::uint64_t mix64(std::uint64_t z)
{
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Sub-seed for stream `index` of a parent seed:
///   derive_seed(s, i) = mix64(s ^ mix64(i + 0x9e3779b97f4a7c15)).
/// Used for Las Vegas iterations, Monte Carlo trials and sweep values.
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index)
{
    return mix64(seed ^ mix64(index + 0x9e3779b97f4a7c15ULL));
}

/// SplitMix64 generator. Every bounded draw goes through uniform_below so that
/// seeded outputs do not depend on the standard library's distributions.
class SplitMix64 {
public:
    using result_type = std::uint64_t;

    explicit constexpr SplitMix64(std::uint64_t seed) : state_(seed) {}

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

    constexpr result_type operator()()
    {
        state_ += 0x9e3779b97f4a7c15ULL;
        return mix64(state_);
    }

    /// Unbiased draw from 0..bound-1 by rejection; bound must be positive.
    constexpr std::uint64_t uniform_below(std::uint64_t bound)
    {
        const std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            std::uint64_t r = (*this)();
            if (r >= threshold)
                return r % bound;
        }
    }

    /// Uniform double in [0, 1) from the top 53 bits.
    constexpr double uniform_real() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

private:
    std::uint64_t state_;
};

} // namespace rainbow
