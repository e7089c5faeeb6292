#include <doctest.h>

#include <map>
#include <set>

#include "chromatic/chi.hpp"
#include "chromatic/errors.hpp"
#include "chromatic/graph.hpp"
#include "chromatic/rng.hpp"

using namespace chromatic;

namespace {

LabeledGraph path3()
{
    LabeledGraph g(3);
    g.set_edge(0, 1, true);
    g.set_edge(1, 2, true);
    return g;
}

LabeledGraph cycle(int n)
{
    LabeledGraph g(n);
    for (int i = 0; i < n; ++i)
        g.set_edge(i, (i + 1) % n, true);
    return g;
}

LabeledGraph complete_bipartite(int a, int b)
{
    LabeledGraph g(a + b);
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j)
            g.set_edge(i, a + j, true);
    return g;
}

int distinct_colors(const std::vector<int>& witness)
{
    return static_cast<int>(
        std::set<int>(witness.begin(), witness.end()).size());
}

} // namespace

TEST_CASE("assignment scan on canonical graphs")
{
    for (int n = 1; n <= 6; ++n)
        CHECK(chi_bruteforce(LabeledGraph(n)).chi == 1);
    CHECK(chi_bruteforce(LabeledGraph::complete(4)).chi == 4);
    CHECK(chi_bruteforce(path3()).chi == 2);
    CHECK(chi_bruteforce(cycle(5)).chi == 3);
}

TEST_CASE("fast solver on canonical graphs")
{
    CHECK(chi_exact(LabeledGraph(1)).chi == 1);
    CHECK(chi_exact(LabeledGraph::complete(4)).chi == 4);
    CHECK(chi_exact(path3()).chi == 2);
    CHECK(chi_exact(cycle(5)).chi == 3);
    CHECK(chi_exact(complete_bipartite(3, 3)).chi == 2);

    // Petersen graph: outer 5-cycle, inner pentagram, spokes
    LabeledGraph petersen(10);
    for (int i = 0; i < 5; ++i) {
        petersen.set_edge(i, (i + 1) % 5, true);
        petersen.set_edge(5 + i, 5 + (i + 2) % 5, true);
        petersen.set_edge(i, 5 + i, true);
    }
    CHECK(chi_exact(petersen).chi == 3);
}

TEST_CASE("order-5 chi distribution over the whole space")
{
    std::map<int, int> totals;
    auto stream = enumerate_all(5);
    while (auto g = stream.next())
        ++totals[chi_exact(*g).chi];
    CHECK(totals[1] == 1);
    CHECK(totals[2] == 375);
    CHECK(totals[3] == 582);
    CHECK(totals[4] == 65);
    CHECK(totals[5] == 1);
}

TEST_CASE("solver equals the oracle exhaustively at small orders")
{
    for (int n = 1; n <= 4; ++n) {
        auto stream = enumerate_all(n);
        while (auto g = stream.next())
            CHECK(chi_exact(*g).chi == chi_bruteforce(*g).chi);
    }
}

TEST_CASE("solver equals the oracle on sampled orders 5 and 6")
{
    for (int n : {5, 6})
        for (int i = 0; i < 200; ++i) {
            const auto g = sample_gnp(n, 0.5, 7, i);
            CHECK(chi_exact(g).chi == chi_bruteforce(g).chi);
        }
}

TEST_CASE("witnesses are proper and use exactly chi colors")
{
    auto check_witness = [](const LabeledGraph& g) {
        const auto r = chi_exact(g);
        REQUIRE(static_cast<int>(r.witness.size()) == g.order());
        CHECK(is_proper_coloring(g, r.witness));
        CHECK(distinct_colors(r.witness) == r.chi);
        for (int c : r.witness) {
            CHECK(c >= 1);
            CHECK(c <= r.chi);
        }
    };
    auto stream = enumerate_all(4);
    while (auto g = stream.next())
        check_witness(*g);
    for (int i = 0; i < 50; ++i)
        check_witness(sample_gnp(12, 0.5, 3, i));

    const auto bf = chi_bruteforce(cycle(5));
    CHECK(is_proper_coloring(cycle(5), bf.witness));
    CHECK(distinct_colors(bf.witness) == bf.chi);
}

TEST_CASE("chi bounds and extremes")
{
    auto stream = enumerate_all(5);
    while (auto g = stream.next()) {
        const int chi = chi_exact(*g).chi;
        CHECK(chi >= 1);
        CHECK(chi <= 5);
        CHECK((chi == 1) == (g->edge_count() == 0));
        CHECK((chi == 5) == (g->edge_count() == 10));
    }
}

TEST_CASE("adding edges never decreases chi")
{
    SplitMix64 rng(404);
    for (int chain = 0; chain < 20; ++chain) {
        LabeledGraph g(7);
        int prev = 1;
        // add the 21 possible edges in random order
        std::vector<std::pair<int, int>> pairs;
        for (int i = 0; i < 7; ++i)
            for (int j = i + 1; j < 7; ++j)
                pairs.emplace_back(i, j);
        for (std::size_t k = pairs.size(); k > 0; --k) {
            const auto pick = rng.bounded(k);
            std::swap(pairs[pick], pairs[k - 1]);
            g.set_edge(pairs[k - 1].first, pairs[k - 1].second, true);
            const int chi = chi_exact(g).chi;
            CHECK(chi >= prev);
            prev = chi;
        }
        CHECK(prev == 7);
    }
}

TEST_CASE("assignment scan order cap")
{
    CHECK_THROWS_AS(chi_bruteforce(LabeledGraph(9)), OrderTooLargeError);
    CHECK_NOTHROW(chi_bruteforce(LabeledGraph(9), 9));
}
