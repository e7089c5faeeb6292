#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "chromatic/rng.hpp"

namespace chromatic {

// Simple labeled graphs on vertex set {0, ..., n-1}, stored as an
// edge-presence bitset over the C(n,2) vertex pairs. Pairs (i,j), i < j, are
// indexed in lexicographic order: (0,1), (0,2), ..., (0,n-1), (1,2), ...
// The bit pattern doubles as the graph's index in [0, 2^C(n,2)), so index k
// and graph are in bijection for orders whose pair count fits in 64 bits.

constexpr std::uint64_t pair_count(int n) noexcept
{
    return static_cast<std::uint64_t>(n) * (n - 1) / 2;
}

constexpr std::uint64_t pair_index(int i, int j, int n) noexcept
{
    // requires 0 <= i < j < n
    return static_cast<std::uint64_t>(i) * (2 * n - i - 1) / 2 + (j - i - 1);
}

using GraphIndex = std::uint64_t;

inline constexpr int kDefaultExhaustiveCap = 7;

class LabeledGraph
{
public:
    explicit LabeledGraph(int order);

    // bijection with GraphIndex; requires pair_count(order) <= 64
    static LabeledGraph from_index(int order, GraphIndex index);
    static LabeledGraph complete(int order);

    GraphIndex index() const;

    int order() const noexcept { return order_; }
    int edge_count() const noexcept;

    bool adjacent(int i, int j) const noexcept;
    void set_edge(int i, int j, bool present);
    void set_pair(std::uint64_t k, bool present);

    std::span<const std::uint64_t> words() const noexcept { return words_; }

    // line form: "n:<order> e:<hex bitset, little-endian pair order>"
    std::string to_line() const;
    static LabeledGraph parse_line(std::string_view line);

    // edge-list form: one "i j" per line, 1-based labels
    std::string to_edge_list() const;
    static LabeledGraph parse_edge_list(int order, std::string_view text);

    bool operator==(const LabeledGraph&) const = default;

private:
    int order_;
    std::vector<std::uint64_t> words_; // ceil(C(n,2)/64) words, bit k = pair k
};

// Neighbor masks, one row per vertex; rows are words_per_row() 64-bit words.
class AdjacencyMatrix
{
public:
    explicit AdjacencyMatrix(const LabeledGraph& g);

    int order() const noexcept { return order_; }
    int words_per_row() const noexcept { return words_; }

    std::span<const std::uint64_t> row(int v) const noexcept
    {
        return {rows_.data() + static_cast<std::size_t>(v) * words_,
                static_cast<std::size_t>(words_)};
    }

private:
    int order_;
    int words_;
    std::vector<std::uint64_t> rows_;
};

// single-word neighbor masks for order <= 64 (solver fast path)
std::vector<std::uint64_t> adjacency_rows64(const LabeledGraph& g);

// Ascending-index stream over all 2^C(n,2) graphs of the given order.
// Exhaustive iteration above the cap is refused: the space doubles with every
// added pair, and n = 8 already holds 2^28 graphs.
class GraphStream
{
public:
    GraphStream(int order, int cap = kDefaultExhaustiveCap);

    std::uint64_t size() const noexcept { return size_; }
    std::optional<LabeledGraph> next();

private:
    int order_;
    std::uint64_t size_;
    std::uint64_t cursor_ = 0;
};

GraphStream enumerate_all(int order, int cap = kDefaultExhaustiveCap);

// G(n,p) sample: each pair bit is set independently with probability p.
// A pure function of (n, p, seed, sample_id): pair k is decided by the
// counter-based draw at counter k, so the result does not depend on
// evaluation order or thread count.
LabeledGraph sample_gnp(int n, double p, std::uint64_t seed,
                        std::uint64_t sample_id);

// P_p(G) = p^|E| (1-p)^(C(n,2)-|E|)
double graph_probability(const LabeledGraph& g, double p);

} // namespace chromatic
