#include <doctest.h>

#include <cmath>
#include <map>
#include <set>

#include "chromatic/errors.hpp"
#include "chromatic/graph.hpp"

using namespace chromatic;

TEST_CASE("pair indexing is lexicographic")
{
    CHECK(pair_count(1) == 0);
    CHECK(pair_count(4) == 6);
    CHECK(pair_count(9) == 36);

    // (0,1),(0,2),(0,3),(1,2),(1,3),(2,3) for n = 4
    int expected = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            CHECK(pair_index(i, j, 4) == static_cast<std::uint64_t>(expected++));
    CHECK(expected == 6);
}

TEST_CASE("index round trip is the identity for small orders")
{
    for (int n = 1; n <= 5; ++n) {
        const GraphIndex size = 1ull << pair_count(n);
        for (GraphIndex idx = 0; idx < size; ++idx)
            CHECK(LabeledGraph::from_index(n, idx).index() == idx);
    }
}

TEST_CASE("adjacency is symmetric and loop-free")
{
    const auto g = sample_gnp(12, 0.6, 99, 0);
    for (int i = 0; i < 12; ++i) {
        CHECK_FALSE(g.adjacent(i, i));
        for (int j = 0; j < 12; ++j)
            CHECK(g.adjacent(i, j) == g.adjacent(j, i));
    }
}

TEST_CASE("enumeration yields every graph once, in ascending index order")
{
    auto stream = enumerate_all(3);
    CHECK(stream.size() == 8);
    std::set<GraphIndex> seen;
    GraphIndex prev = 0;
    while (auto g = stream.next()) {
        const auto idx = g->index();
        CHECK(seen.insert(idx).second);
        CHECK(idx >= prev);
        prev = idx;
    }
    CHECK(seen.size() == 8);
}

TEST_CASE("order 1 enumerates exactly one edgeless graph")
{
    auto stream = enumerate_all(1);
    CHECK(stream.size() == 1);
    auto g = stream.next();
    REQUIRE(g.has_value());
    CHECK(g->edge_count() == 0);
    CHECK_FALSE(stream.next().has_value());
}

TEST_CASE("edge counts follow the binomial profile")
{
    for (int n = 2; n <= 5; ++n) {
        std::map<int, std::uint64_t> histogram;
        auto stream = enumerate_all(n);
        while (auto g = stream.next())
            ++histogram[g->edge_count()];

        const auto binom = [](int a, int b) {
            std::uint64_t r = 1;
            for (int i = 1; i <= b; ++i)
                r = r * (a + 1 - i) / i;
            return r;
        };
        const int pairs = static_cast<int>(pair_count(n));
        for (int m = 0; m <= pairs; ++m)
            CHECK(histogram[m] == binom(pairs, m));
    }

    // order 4: 20 of the 64 graphs have three edges
    std::uint64_t three = 0;
    auto stream = enumerate_all(4);
    while (auto g = stream.next())
        three += g->edge_count() == 3;
    CHECK(three == 20);
}

TEST_CASE("enumeration refuses orders above the cap")
{
    CHECK_THROWS_AS(enumerate_all(8), OrderTooLargeError);
    CHECK_NOTHROW(GraphStream(8, 8)); // explicit override
    CHECK_THROWS_AS(enumerate_all(12, 12), std::invalid_argument); // > 64 bits
}

TEST_CASE("gnp endpoints: p=0 empty, p=1 complete")
{
    for (std::uint64_t seed : {0ull, 7ull, 123456789ull}) {
        CHECK(sample_gnp(9, 0.0, seed, 3).edge_count() == 0);
        CHECK(sample_gnp(9, 1.0, seed, 3) == LabeledGraph::complete(9));
    }
}

TEST_CASE("gnp sampling is a pure function of its arguments")
{
    const auto a = sample_gnp(20, 0.37, 42, 1000);
    const auto b = sample_gnp(20, 0.37, 42, 1000);
    CHECK(a == b);
    CHECK_FALSE(a == sample_gnp(20, 0.37, 42, 1001));
    CHECK_FALSE(a == sample_gnp(20, 0.37, 43, 1000));
}

TEST_CASE("gnp mean edge count is within three sigma")
{
    // n=10, p=0.5: mean 22.5, per-sample variance 45*0.25
    const int samples = 100000;
    double total = 0;
    for (int i = 0; i < samples; ++i)
        total += sample_gnp(10, 0.5, 2024, i).edge_count();
    const double mean = total / samples;
    const double band = 3.0 * std::sqrt(45.0 * 0.25 / samples);
    CHECK(std::abs(mean - 22.5) <= band);
}

TEST_CASE("graph probability matches the closed form")
{
    auto g = LabeledGraph(3);
    g.set_edge(0, 1, true);
    g.set_edge(1, 2, true);
    CHECK(graph_probability(g, 0.3) == doctest::Approx(0.063).epsilon(1e-12));
    CHECK(graph_probability(LabeledGraph::complete(5), 1.0) == 1.0);
    CHECK(graph_probability(LabeledGraph(4), 0.0) == 1.0);
}

TEST_CASE("graph probabilities sum to one over the whole space")
{
    for (int n = 2; n <= 5; ++n)
        for (int tenth = 0; tenth <= 10; ++tenth) {
            const double p = tenth / 10.0;
            double total = 0;
            auto stream = enumerate_all(n);
            while (auto g = stream.next())
                total += graph_probability(*g, p);
            CHECK(total == doctest::Approx(1.0).epsilon(1e-10));
        }
}

TEST_CASE("line serialization round-trips")
{
    CHECK(LabeledGraph::complete(3).to_line() == "n:3 e:7");
    CHECK(LabeledGraph::parse_line("n:3 e:7") == LabeledGraph::complete(3));

    for (int n : {1, 2, 7, 11, 40, 70}) {
        const auto g = sample_gnp(n, 0.5, 5, n);
        CHECK(LabeledGraph::parse_line(g.to_line()) == g);
    }
}

TEST_CASE("edge list serialization round-trips")
{
    const auto g = sample_gnp(9, 0.4, 11, 0);
    CHECK(LabeledGraph::parse_edge_list(9, g.to_edge_list()) == g);
    CHECK(LabeledGraph(5).to_edge_list().empty());
}

TEST_CASE("malformed graph lines are rejected")
{
    CHECK_THROWS_AS(LabeledGraph::parse_line("x:3 e:7"), SchemaError);
    CHECK_THROWS_AS(LabeledGraph::parse_line("n:3 e:77"), SchemaError);
    CHECK_THROWS_AS(LabeledGraph::parse_line("n:3 e:g"), SchemaError);
    CHECK_THROWS_AS(LabeledGraph::parse_line("n:3 e:8"), SchemaError);
    CHECK_THROWS_AS(LabeledGraph::parse_edge_list(3, "1 4\n"), SchemaError);
    CHECK_THROWS_AS(LabeledGraph::parse_edge_list(3, "1\n"), SchemaError);
}

TEST_CASE("gnp rejects out-of-range probabilities")
{
    CHECK_THROWS_AS(sample_gnp(5, -0.1, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(sample_gnp(5, 1.1, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(sample_gnp(0, 0.5, 0, 0), std::invalid_argument);
}
