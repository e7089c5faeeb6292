#include <doctest.h>

#include <stdexcept>

#include "chromatic/chi.hpp"
#include "chromatic/graph.hpp"
#include "chromatic/ircm.hpp"

using namespace chromatic;

TEST_CASE("complete graphs never lose a color")
{
    for (int n : {2, 4, 7})
        for (std::uint64_t seed : {1ull, 99ull}) {
            CHECK(ircm_run(LabeledGraph::complete(n), 100, seed).color_count ==
                  n);
            CHECK(ircm_until_stable(LabeledGraph::complete(n), 32, seed)
                      .color_count == n);
        }
}

TEST_CASE("single edge keeps two colors")
{
    LabeledGraph g(2);
    g.set_edge(0, 1, true);
    CHECK(ircm_run(g, 50, 3).color_count == 2);
}

TEST_CASE("order 1 returns immediately")
{
    CHECK(ircm_run(LabeledGraph(1), 10, 0).color_count == 1);
    CHECK(ircm_until_stable(LabeledGraph(1), 10, 0).color_count == 1);
}

TEST_CASE("empty graph collapses to one color")
{
    const auto r = ircm_until_stable(LabeledGraph(5), 64, 17);
    CHECK(r.color_count == 1);
    CHECK(r.converged);
}

TEST_CASE("complete graph stabilizes after exactly one doubling")
{
    const auto r = ircm_until_stable(LabeledGraph::complete(5), 64, 5);
    CHECK(r.color_count == 5);
    CHECK(r.t_final == 128);
}

TEST_CASE("three-vertex path reaches two colors nearly always")
{
    LabeledGraph path(3);
    path.set_edge(0, 1, true);
    path.set_edge(1, 2, true);
    int twos = 0;
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        const int count = ircm_run(path, 1000, seed).color_count;
        CHECK(count >= 2);
        CHECK(count <= 3);
        twos += count == 2;
    }
    CHECK(twos >= 990);
}

TEST_CASE("deterministic given the seed")
{
    const auto g = sample_gnp(15, 0.5, 8, 0);
    const auto a = ircm_run(g, 5000, 77);
    const auto b = ircm_run(g, 5000, 77);
    CHECK(a.color_count == b.color_count);
    const auto c = ircm_until_stable(g, 128, 77);
    const auto d = ircm_until_stable(g, 128, 77);
    CHECK(c.color_count == d.color_count);
    CHECK(c.t_final == d.t_final);
}

TEST_CASE("coloring stays proper and the count never increases")
{
    for (int i = 0; i < 20; ++i) {
        const auto g = sample_gnp(12, 0.4, 21, i);
        ColoringState state(g);
        SplitMix64 rng(derive_key(21, i, kTagColorMatching));
        int prev = state.distinct_count();
        CHECK(prev == 12);
        for (int t = 0; t < 2000; ++t) {
            state.step(rng);
            const int cur = state.distinct_count();
            CHECK(cur <= prev);
            prev = cur;
            if (t % 250 == 0)
                CHECK(state.is_proper());
        }
        CHECK(state.is_proper());
        CHECK(is_proper_coloring(g, state.colors()));
    }
}

TEST_CASE("count upper-bounds the chromatic number")
{
    for (int n = 2; n <= 4; ++n) {
        auto stream = enumerate_all(n);
        while (auto g = stream.next())
            CHECK(ircm_until_stable(*g, 32, 5).color_count >=
                  chi_exact(*g).chi);
    }
    for (int i = 0; i < 200; ++i) {
        const auto g = sample_gnp(9, 0.5, 31, i);
        CHECK(ircm_until_stable(g, 64, i).color_count >= chi_exact(g).chi);
    }
}

TEST_CASE("trace marks powers of two with nonincreasing counts")
{
    const auto g = sample_gnp(16, 0.5, 2, 0);
    const auto r = ircm_run(g, 1000, 9, true);
    REQUIRE(!r.trace.empty());
    CHECK(r.trace.front().t == 1);
    CHECK(r.trace.back().t == 1000);
    int prev = 16;
    for (const auto& pt : r.trace) {
        if (pt.t != 1000)
            CHECK((pt.t & (pt.t - 1)) == 0);
        CHECK(pt.color_count <= prev);
        prev = pt.color_count;
    }
}

TEST_CASE("iteration ceiling reports non-convergence")
{
    const auto g = sample_gnp(30, 0.5, 4, 0);
    const auto r = ircm_until_stable(g, 64, 4, 256);
    CHECK_FALSE(r.converged);
    CHECK(r.t_final <= 256);
    CHECK(r.color_count >= chi_exact(g).chi);
}

TEST_CASE("argument validation")
{
    CHECK_THROWS_AS(ircm_run(LabeledGraph(3), 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(ircm_until_stable(LabeledGraph(3), 0, 1),
                    std::invalid_argument);
}
