#include "chromatic/chi.hpp"

#include <array>
#include <bit>
#include <string>

#include "chromatic/errors.hpp"

namespace chromatic {

namespace {

// edges as pair list for the assignment scan
std::vector<std::pair<int, int>> edge_pairs(const LabeledGraph& g)
{
    std::vector<std::pair<int, int>> e;
    e.reserve(g.edge_count());
    for (int i = 0; i < g.order(); ++i)
        for (int j = i + 1; j < g.order(); ++j)
            if (g.adjacent(i, j))
                e.emplace_back(i, j);
    return e;
}

bool any_proper_assignment(const std::vector<std::pair<int, int>>& edges,
                           int n, int k, std::vector<int>& colors)
{
    colors.assign(n, 0);
    for (;;) {
        bool proper = true;
        for (const auto& [i, j] : edges)
            if (colors[i] == colors[j]) {
                proper = false;
                break;
            }
        if (proper)
            return true;
        // odometer increment over [0,k)^n
        int v = 0;
        while (v < n && ++colors[v] == k)
            colors[v++] = 0;
        if (v == n)
            return false;
    }
}

// Backtracking k-colorability on neighbor masks. satmask[v] holds the set of
// colors already present in v's neighborhood; the next vertex is the
// uncolored one with the most saturated mask (lowest index on ties). Colors
// are tried ascending and capped at one fresh color per node, which keeps the
// search complete while pruning color permutations.
struct KColorableSearch
{
    const std::uint64_t* rows;
    int n;
    int k;
    std::array<std::int8_t, 64> color;
    std::array<std::uint64_t, 64> satmask;

    bool run()
    {
        color.fill(-1);
        satmask.fill(0);
        return extend(0, 0);
    }

    bool extend(int depth, int used)
    {
        if (depth == n)
            return true;

        int best = -1;
        int best_sat = -1;
        for (int v = 0; v < n; ++v)
            if (color[v] < 0) {
                const int s = std::popcount(satmask[v]);
                if (s > best_sat) {
                    best_sat = s;
                    best = v;
                }
            }

        const int limit = used < k ? used + 1 : k;
        for (int c = 0; c < limit; ++c) {
            if ((satmask[best] >> c) & 1)
                continue;
            color[best] = static_cast<std::int8_t>(c);
            std::uint64_t touched = 0;
            for (std::uint64_t m = rows[best]; m; m &= m - 1) {
                const int w = std::countr_zero(m);
                if (color[w] < 0 && !((satmask[w] >> c) & 1)) {
                    satmask[w] |= 1ull << c;
                    touched |= 1ull << w;
                }
            }
            if (extend(depth + 1, c == used ? used + 1 : used))
                return true;
            for (std::uint64_t m = touched; m; m &= m - 1)
                satmask[std::countr_zero(m)] &= ~(1ull << c);
            color[best] = -1;
        }
        return false;
    }
};

} // namespace

ChromaticResult chi_bruteforce(const LabeledGraph& g, int cap)
{
    const int n = g.order();
    if (n > cap)
        throw OrderTooLargeError("assignment scan of order " +
                                 std::to_string(n) + " exceeds the cap of " +
                                 std::to_string(cap));
    const auto edges = edge_pairs(g);
    std::vector<int> colors;
    for (int k = 1; k <= n; ++k)
        if (any_proper_assignment(edges, n, k, colors)) {
            ChromaticResult r;
            r.chi = k;
            r.witness.resize(n);
            for (int v = 0; v < n; ++v)
                r.witness[v] = colors[v] + 1;
            return r;
        }
    return {}; // unreachable: k = n always admits the identity coloring
}

int chi_exact_rows(std::span<const std::uint64_t> rows, std::int8_t* witness)
{
    const int n = static_cast<int>(rows.size());
    KColorableSearch search;
    search.rows = rows.data();
    search.n = n;
    for (int k = 1; k <= n; ++k) {
        search.k = k;
        if (search.run()) {
            if (witness)
                for (int v = 0; v < n; ++v)
                    witness[v] = search.color[v];
            return k;
        }
    }
    return n;
}

ChromaticResult chi_exact(const LabeledGraph& g)
{
    const auto rows = adjacency_rows64(g);
    std::array<std::int8_t, 64> witness{};
    ChromaticResult r;
    r.chi = chi_exact_rows(rows, witness.data());
    r.witness.resize(g.order());
    for (int v = 0; v < g.order(); ++v)
        r.witness[v] = witness[v] + 1;
    return r;
}

bool is_proper_coloring(const LabeledGraph& g, std::span<const int> colors)
{
    if (static_cast<int>(colors.size()) != g.order())
        return false;
    for (int i = 0; i < g.order(); ++i)
        for (int j = i + 1; j < g.order(); ++j)
            if (g.adjacent(i, j) && colors[i] == colors[j])
                return false;
    return true;
}

} // namespace chromatic
