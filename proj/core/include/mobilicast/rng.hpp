#ifndef MOBILICAST_RNG_HPP
#define MOBILICAST_RNG_HPP

#include <cstdint>
#include <limits>
#include <vector>

#include "mobilicast/errors.hpp"

namespace mobilicast
{

// Deterministic splitmix64 stream. The standard <random> distributions are
// not byte-stable across library implementations, so everything that must
// reproduce bit-for-bit from a seed (sampling, shuffling, the mock backend)
// draws from this class instead.
class Rng
{
public:
    explicit Rng(std::uint64_t seed)
        : m_seed(seed)
        , m_state(seed)
    {
    }

    static std::uint64_t mix(std::uint64_t z)
    {
        z += 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t next_u64()
    {
        m_state += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = m_state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform double in [0, 1) with 53 random bits.
    double next_double()
    {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // Uniform integer in [0, range) without modulo bias (rejection sampling).
    std::uint64_t bounded(std::uint64_t range)
    {
        if (range == 0) {
            throw InvalidRange("bounded: range must be positive");
        }
        const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
        // 2^64 mod range; the top `rem` values of the raw stream are rejected
        // so every residue is hit by the same number of raw values.
        const std::uint64_t rem = (max % range + 1) % range;
        std::uint64_t x = next_u64();
        while (rem != 0 && x >= max - rem + 1) {
            x = next_u64();
        }
        return x % range;
    }

    // Uniform integer in [lo, hi], both ends inclusive.
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi)
    {
        if (lo > hi) {
            throw InvalidRange("uniform_int: lo > hi");
        }
        const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
        if (span == 0) { // full 64-bit range
            return static_cast<std::int64_t>(next_u64());
        }
        return lo + static_cast<std::int64_t>(bounded(span));
    }

    // Index into [0, n).
    std::size_t uniform_index(std::size_t n)
    {
        return static_cast<std::size_t>(bounded(static_cast<std::uint64_t>(n)));
    }

    // Draw from a categorical distribution given outcome probabilities.
    // Probabilities are assumed validated (non-negative, summing to ~1);
    // float slack at the top end falls back to the last positive outcome.
    std::size_t categorical(const std::vector<double>& probs)
    {
        if (probs.empty()) {
            throw InvalidDistribution("categorical: no outcomes");
        }
        const double u = next_double();
        double cum = 0.0;
        std::size_t last_positive = probs.size() - 1;
        for (std::size_t i = 0; i < probs.size(); ++i) {
            if (probs[i] > 0.0) {
                last_positive = i;
            }
            cum += probs[i];
            if (u < cum) {
                return i;
            }
        }
        return last_positive;
    }

    // Child stream keyed by (a, b). Derivation uses the construction seed,
    // not the evolving state, so derived streams do not depend on how many
    // draws the parent has made, and siblings are mutually independent.
    Rng derive(std::uint64_t a, std::uint64_t b = 0) const
    {
        return Rng(mix(mix(mix(m_seed) ^ a) ^ b));
    }

    std::uint64_t seed() const noexcept
    {
        return m_seed;
    }

private:
    std::uint64_t m_seed;
    std::uint64_t m_state;
};

} // namespace mobilicast

#endif // MOBILICAST_RNG_HPP
