#include "chromatic/ircm.hpp"

#include <numeric>
#include <stdexcept>

namespace chromatic {

ColoringState::ColoringState(const LabeledGraph& g)
    : n_(g.order()),
      words_((g.order() + 63) / 64),
      adj_(static_cast<std::size_t>(n_) * words_, 0),
      occ_(static_cast<std::size_t>(n_) * words_, 0),
      color_(n_),
      class_size_(n_, 1),
      distinct_(n_)
{
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j)
            if (g.adjacent(i, j)) {
                adj_[static_cast<std::size_t>(i) * words_ + j / 64] |=
                    1ull << (j % 64);
                adj_[static_cast<std::size_t>(j) * words_ + i / 64] |=
                    1ull << (i % 64);
            }
    std::iota(color_.begin(), color_.end(), 0);
    for (int v = 0; v < n_; ++v)
        occ_[static_cast<std::size_t>(v) * words_ + v / 64] |= 1ull << (v % 64);
}

bool ColoringState::blocked(int v, int c) const noexcept
{
    const std::uint64_t* a = adj_.data() + static_cast<std::size_t>(v) * words_;
    const std::uint64_t* o = occ_.data() + static_cast<std::size_t>(c) * words_;
    for (int w = 0; w < words_; ++w)
        if (a[w] & o[w])
            return true;
    return false;
}

void ColoringState::recolor(int v, int c) noexcept
{
    const int old = color_[v];
    occ_[static_cast<std::size_t>(old) * words_ + v / 64] &= ~(1ull << (v % 64));
    if (--class_size_[old] == 0)
        --distinct_;
    occ_[static_cast<std::size_t>(c) * words_ + v / 64] |= 1ull << (v % 64);
    ++class_size_[c];
    color_[v] = c;
}

void ColoringState::step(SplitMix64& rng)
{
    // one draw per attempt: high word picks v_i, low word picks v_j among
    // the remaining n-1 vertices
    const std::uint64_t r = rng.next();
    const int vi = static_cast<int>(
        (static_cast<std::uint64_t>(static_cast<std::uint32_t>(r >> 32)) *
         static_cast<std::uint32_t>(n_)) >>
        32);
    int vj = static_cast<int>(
        (static_cast<std::uint64_t>(static_cast<std::uint32_t>(r)) *
         static_cast<std::uint32_t>(n_ - 1)) >>
        32);
    if (vj >= vi)
        ++vj;
    ++t_;
    const int ci = color_[vi];
    const int cj = color_[vj];
    if (ci == cj)
        return;
    if (!blocked(vi, cj))
        recolor(vi, cj);
    else if (!blocked(vj, ci))
        recolor(vj, ci);
}

void ColoringState::run(SplitMix64& rng, std::uint64_t steps)
{
    for (std::uint64_t s = 0; s < steps; ++s)
        step(rng);
}

bool ColoringState::is_proper() const
{
    for (int v = 0; v < n_; ++v) {
        const std::uint64_t* a =
            adj_.data() + static_cast<std::size_t>(v) * words_;
        const std::uint64_t* o =
            occ_.data() + static_cast<std::size_t>(color_[v]) * words_;
        for (int w = 0; w < words_; ++w)
            if (a[w] & o[w])
                return false;
    }
    return true;
}

namespace {

void check_ircm_args(const LabeledGraph& g, std::uint64_t t)
{
    if (g.order() < 1)
        throw std::invalid_argument("graph order must be positive");
    if (t < 1)
        throw std::invalid_argument("iteration budget must be positive");
}

} // namespace

IrcmResult ircm_run(const LabeledGraph& g, std::uint64_t t_max,
                    std::uint64_t seed, bool with_trace)
{
    check_ircm_args(g, t_max);
    IrcmResult r;
    if (g.order() == 1) {
        r.color_count = 1;
        r.t_final = t_max;
        return r;
    }
    ColoringState state(g);
    SplitMix64 rng(derive_key(seed, 0, kTagColorMatching));
    std::uint64_t next_mark = 1;
    for (std::uint64_t t = 1; t <= t_max; ++t) {
        state.step(rng);
        if (with_trace && (t == next_mark || t == t_max)) {
            r.trace.push_back({t, state.distinct_count()});
            while (next_mark <= t)
                next_mark *= 2;
        }
    }
    r.color_count = state.distinct_count();
    r.t_final = t_max;
    return r;
}

IrcmResult ircm_until_stable(const LabeledGraph& g, std::uint64_t t_start,
                             std::uint64_t seed, std::uint64_t ceiling,
                             bool with_trace)
{
    check_ircm_args(g, t_start);
    IrcmResult r;
    if (g.order() == 1) {
        r.color_count = 1;
        r.t_final = t_start;
        return r;
    }
    ColoringState state(g);
    SplitMix64 rng(derive_key(seed, 0, kTagColorMatching));

    state.run(rng, t_start);
    std::uint64_t t = t_start;
    int prev = state.distinct_count();
    if (with_trace)
        r.trace.push_back({t, prev});

    for (;;) {
        if (2 * t > ceiling) {
            r.color_count = prev;
            r.t_final = t;
            r.converged = false;
            return r;
        }
        state.run(rng, t); // total now 2t, same stream
        t *= 2;
        const int cur = state.distinct_count();
        if (with_trace)
            r.trace.push_back({t, cur});
        if (cur == prev) {
            r.color_count = cur;
            r.t_final = t;
            return r;
        }
        prev = cur;
    }
}

} // namespace chromatic
