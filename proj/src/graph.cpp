#include "chromatic/graph.hpp"

#include <bit>
#include <cassert>
#include <charconv>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "chromatic/errors.hpp"

namespace chromatic {

namespace {

std::size_t word_count(int order)
{
    return static_cast<std::size_t>((pair_count(order) + 63) / 64);
}

void check_order(int order)
{
    if (order < 1)
        throw std::invalid_argument("graph order must be positive");
}

} // namespace

LabeledGraph::LabeledGraph(int order)
    : order_(order), words_(word_count(order), 0)
{
    check_order(order);
}

LabeledGraph LabeledGraph::from_index(int order, GraphIndex index)
{
    check_order(order);
    const std::uint64_t pairs = pair_count(order);
    if (pairs > 64)
        throw std::invalid_argument(
            "graph index form requires C(n,2) <= 64 (order <= 11)");
    if (pairs < 64 && index >= (1ull << pairs))
        throw std::invalid_argument("graph index out of range");
    LabeledGraph g(order);
    if (!g.words_.empty())
        g.words_[0] = index;
    return g;
}

LabeledGraph LabeledGraph::complete(int order)
{
    LabeledGraph g(order);
    const std::uint64_t pairs = pair_count(order);
    for (std::uint64_t k = 0; k < pairs; ++k)
        g.words_[k / 64] |= 1ull << (k % 64);
    return g;
}

GraphIndex LabeledGraph::index() const
{
    if (pair_count(order_) > 64)
        throw std::invalid_argument(
            "graph index form requires C(n,2) <= 64 (order <= 11)");
    return words_.empty() ? 0 : words_[0];
}

int LabeledGraph::edge_count() const noexcept
{
    int c = 0;
    for (std::uint64_t w : words_)
        c += std::popcount(w);
    return c;
}

bool LabeledGraph::adjacent(int i, int j) const noexcept
{
    if (i == j)
        return false;
    if (i > j)
        std::swap(i, j);
    const std::uint64_t k = pair_index(i, j, order_);
    return (words_[k / 64] >> (k % 64)) & 1;
}

void LabeledGraph::set_edge(int i, int j, bool present)
{
    if (i == j || i < 0 || j < 0 || i >= order_ || j >= order_)
        throw std::invalid_argument("edge endpoints out of range");
    if (i > j)
        std::swap(i, j);
    set_pair(pair_index(i, j, order_), present);
}

void LabeledGraph::set_pair(std::uint64_t k, bool present)
{
    if (k >= pair_count(order_))
        throw std::invalid_argument("pair index out of range");
    if (present)
        words_[k / 64] |= 1ull << (k % 64);
    else
        words_[k / 64] &= ~(1ull << (k % 64));
}

std::string LabeledGraph::to_line() const
{
    static constexpr char hex[] = "0123456789abcdef";
    const std::uint64_t pairs = pair_count(order_);
    const std::uint64_t digits = (pairs + 3) / 4;
    std::string out = "n:" + std::to_string(order_) + " e:";
    for (std::uint64_t d = 0; d < digits; ++d) {
        const std::uint64_t k = 4 * d;
        const unsigned nibble = (words_[k / 64] >> (k % 64)) & 0xf;
        out.push_back(hex[nibble]);
    }
    return out;
}

LabeledGraph LabeledGraph::parse_line(std::string_view line)
{
    if (!line.starts_with("n:"))
        throw SchemaError("graph line must start with 'n:'");
    const auto sp = line.find(' ');
    if (sp == std::string_view::npos || line.substr(sp + 1, 2) != "e:")
        throw SchemaError("graph line missing 'e:' field");
    int order = 0;
    const auto num = line.substr(2, sp - 2);
    auto [p, ec] = std::from_chars(num.begin(), num.end(), order);
    if (ec != std::errc{} || p != num.end() || order < 1)
        throw SchemaError("bad order in graph line");
    const auto hexs = line.substr(sp + 3);
    const std::uint64_t pairs = pair_count(order);
    if (hexs.size() != (pairs + 3) / 4)
        throw SchemaError("bitset length does not match order");
    LabeledGraph g(order);
    for (std::size_t d = 0; d < hexs.size(); ++d) {
        const char c = hexs[d];
        unsigned v;
        if (c >= '0' && c <= '9')
            v = c - '0';
        else if (c >= 'a' && c <= 'f')
            v = 10 + (c - 'a');
        else if (c >= 'A' && c <= 'F')
            v = 10 + (c - 'A');
        else
            throw SchemaError("non-hex digit in graph bitset");
        const std::uint64_t k = 4 * d;
        if (k + 4 > pairs && (v >> (pairs - k)) != 0)
            throw SchemaError("stray bits beyond C(n,2) in graph bitset");
        g.words_[k / 64] |= static_cast<std::uint64_t>(v) << (k % 64);
    }
    return g;
}

std::string LabeledGraph::to_edge_list() const
{
    std::string out;
    for (int i = 0; i < order_; ++i)
        for (int j = i + 1; j < order_; ++j)
            if (adjacent(i, j)) {
                out += std::to_string(i + 1);
                out += ' ';
                out += std::to_string(j + 1);
                out += '\n';
            }
    return out;
}

LabeledGraph LabeledGraph::parse_edge_list(int order, std::string_view text)
{
    LabeledGraph g(order);
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        std::istringstream row(line);
        int i = 0, j = 0;
        if (!(row >> i >> j))
            throw SchemaError("edge list line is not 'i j': " + line);
        if (i < 1 || j < 1 || i > order || j > order || i == j)
            throw SchemaError("edge endpoints out of range: " + line);
        g.set_edge(i - 1, j - 1, true);
    }
    return g;
}

AdjacencyMatrix::AdjacencyMatrix(const LabeledGraph& g)
    : order_(g.order()),
      words_((g.order() + 63) / 64),
      rows_(static_cast<std::size_t>(order_) * words_, 0)
{
    for (int i = 0; i < order_; ++i)
        for (int j = i + 1; j < order_; ++j)
            if (g.adjacent(i, j)) {
                rows_[static_cast<std::size_t>(i) * words_ + j / 64] |=
                    1ull << (j % 64);
                rows_[static_cast<std::size_t>(j) * words_ + i / 64] |=
                    1ull << (i % 64);
            }
}

std::vector<std::uint64_t> adjacency_rows64(const LabeledGraph& g)
{
    const int n = g.order();
    if (n > 64)
        throw OrderTooLargeError("single-word adjacency needs order <= 64");
    std::vector<std::uint64_t> rows(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (g.adjacent(i, j)) {
                rows[i] |= 1ull << j;
                rows[j] |= 1ull << i;
            }
    return rows;
}

GraphStream::GraphStream(int order, int cap) : order_(order)
{
    check_order(order);
    if (order > cap)
        throw OrderTooLargeError(
            "exhaustive enumeration of order " + std::to_string(order) +
            " exceeds the cap of " + std::to_string(cap) +
            " (2^" + std::to_string(pair_count(order)) + " graphs)");
    size_ = 1ull << pair_count(order);
}

std::optional<LabeledGraph> GraphStream::next()
{
    if (cursor_ >= size_)
        return std::nullopt;
    return LabeledGraph::from_index(order_, cursor_++);
}

GraphStream enumerate_all(int order, int cap)
{
    return GraphStream(order, cap);
}

LabeledGraph sample_gnp(int n, double p, std::uint64_t seed,
                        std::uint64_t sample_id)
{
    check_order(n);
    if (!(p >= 0.0 && p <= 1.0))
        throw std::invalid_argument("edge probability must lie in [0,1]");
    LabeledGraph g(n);
    const CounterStream draws(derive_key(seed, sample_id, kTagEdgeSampling));
    const std::uint64_t pairs = pair_count(n);
    for (std::uint64_t k = 0; k < pairs; ++k)
        if (draws.uniform_at(k) < p)
            g.set_pair(k, true);
    return g;
}

double graph_probability(const LabeledGraph& g, double p)
{
    if (!(p >= 0.0 && p <= 1.0))
        throw std::invalid_argument("edge probability must lie in [0,1]");
    const double e = g.edge_count();
    const double non = static_cast<double>(pair_count(g.order())) - e;
    return std::pow(p, e) * std::pow(1.0 - p, non);
}

} // namespace chromatic
