#pragma once

#include <cstdint>
#include <vector>

#include "chromatic/graph.hpp"
#include "chromatic/rng.hpp"

namespace chromatic {

// Iterated random color matching: start from the all-distinct coloring and
// repeatedly try to merge the colors of a random vertex pair. The coloring
// stays proper throughout and the number of colors in use never increases,
// so the final count upper-bounds the chromatic number.

class ColoringState
{
public:
    explicit ColoringState(const LabeledGraph& g);

    int order() const noexcept { return n_; }
    int distinct_count() const noexcept { return distinct_; }
    std::uint64_t iteration() const noexcept { return t_; }
    const std::vector<int>& colors() const noexcept { return color_; }

    // One matching attempt: draw an ordered pair (v_i, v_j), i != j
    // (equivalently an unordered pair plus a fair coin for the roles). If the
    // colors differ, v_i adopts v_j's color when none of its neighbors wears
    // it; otherwise v_j adopts v_i's color under the same condition.
    // Consumes exactly two RNG draws whether or not anything changes.
    void step(SplitMix64& rng);
    void run(SplitMix64& rng, std::uint64_t steps);

    bool is_proper() const; // O(n * n/64) audit

private:
    bool blocked(int v, int c) const noexcept;
    void recolor(int v, int c) noexcept;

    int n_;
    int words_;
    std::vector<std::uint64_t> adj_; // n rows of neighbor bits
    std::vector<std::uint64_t> occ_; // n rows: vertices wearing color c
    std::vector<int> color_;         // color identity = initial vertex index
    std::vector<int> class_size_;
    int distinct_;
    std::uint64_t t_ = 0;
};

struct IrcmTracePoint
{
    std::uint64_t t;
    int color_count;
};

struct IrcmResult
{
    int color_count = 0;
    std::uint64_t t_final = 0;
    bool converged = true;
    std::vector<IrcmTracePoint> trace;
};

// Exactly t_max matching attempts; deterministic in (g, t_max, seed).
// The trace, when requested, records the color count at each power-of-two
// iteration and at t_max.
IrcmResult ircm_run(const LabeledGraph& g, std::uint64_t t_max,
                    std::uint64_t seed, bool with_trace = false);

inline constexpr std::uint64_t kIrcmDefaultCeiling = 1ull << 34;

// Doubling schedule on one random stream: run to t_start, then keep doubling
// the total; stop when a doubling leaves the color count unchanged. Hitting
// the ceiling returns the best count so far with converged = false.
IrcmResult ircm_until_stable(const LabeledGraph& g, std::uint64_t t_start,
                             std::uint64_t seed,
                             std::uint64_t ceiling = kIrcmDefaultCeiling,
                             bool with_trace = false);

} // namespace chromatic
