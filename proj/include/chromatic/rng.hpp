#pragma once

#include <cstdint>

// Deterministic random number generation. Two flavors:
//
//  * CounterStream: counter-based, random-access. Output i is the i-th value
//    of a splitmix64 sequence, computed directly as finalize(key + (i+1)*gamma)
//    without walking the sequence. Draws keyed by (seed, stream, counter) are
//    therefore order-independent, which is what makes graph sampling
//    reproducible under any parallel schedule.
//
//  * SplitMix64: the same generator as a sequential engine, for state that
//    evolves step by step (the color-matching loop).
//
// splitmix64: Steele, Lea, Flood, "Fast splittable pseudorandom number
// generators", OOPSLA 2014; public-domain reference by S. Vigna.

namespace chromatic {

inline constexpr std::uint64_t kSplitMixGamma = 0x9e3779b97f4a7c15ull;

constexpr std::uint64_t mix64(std::uint64_t z) noexcept
{
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

// Well-mixed 64-bit key for a (seed, stream, tag) triple. Distinct tags keep
// consumers (edge sampling, color matching, ...) on disjoint streams even
// when they share a seed and stream id.
constexpr std::uint64_t derive_key(std::uint64_t seed,
                                   std::uint64_t stream,
                                   std::uint64_t tag) noexcept
{
    std::uint64_t k = mix64(seed + kSplitMixGamma);
    k = mix64(k ^ (stream * 0xd1342543de82ef95ull + 0x2545f4914f6cdd1dull));
    k = mix64(k ^ (tag * kSplitMixGamma + 0x6a09e667f3bcc909ull));
    return k;
}

inline constexpr std::uint64_t kTagEdgeSampling = 0x45444745ull;  // gnp edge draws
inline constexpr std::uint64_t kTagColorMatching = 0x4952434dull; // ircm pair draws

class CounterStream
{
public:
    explicit constexpr CounterStream(std::uint64_t key) : key_(key) {}

    constexpr std::uint64_t at(std::uint64_t counter) const noexcept
    {
        return mix64(key_ + (counter + 1) * kSplitMixGamma);
    }

    // uniform in [0, 1), 53 significant bits
    constexpr double uniform_at(std::uint64_t counter) const noexcept
    {
        return static_cast<double>(at(counter) >> 11) * 0x1.0p-53;
    }

private:
    std::uint64_t key_;
};

class SplitMix64
{
public:
    explicit constexpr SplitMix64(std::uint64_t seed) : state_(seed) {}

    constexpr std::uint64_t next() noexcept
    {
        return mix64(state_ += kSplitMixGamma);
    }

    constexpr std::uint64_t operator()() noexcept { return next(); }

    // uniform integer in [0, n), Lemire multiply-shift (n > 0)
    constexpr std::uint64_t bounded(std::uint64_t n) noexcept
    {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next()) * n) >> 64);
    }

    constexpr double uniform() noexcept
    {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    using result_type = std::uint64_t;
    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return ~0ull; }

private:
    std::uint64_t state_;
};

} // namespace chromatic
