#include "chromatic/census.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <utility>

#include "chromatic/chi.hpp"
#include "chromatic/errors.hpp"

namespace chromatic {

namespace {

std::uint64_t binomial(std::uint64_t a, std::uint64_t b)
{
    if (b > a)
        return 0;
    std::uint64_t res = 1;
    for (std::uint64_t i = 1; i <= std::min(b, a - b); ++i) {
        res *= a + 1 - i;
        res /= i;
    }
    return res;
}

// census over a contiguous graph-index range, accumulated into flat
// counts[m * n + (chi-1)]
void census_range(int n, GraphIndex begin, GraphIndex end,
                  std::vector<std::uint64_t>& flat)
{
    const int pairs = static_cast<int>(pair_count(n));
    std::vector<std::pair<int, int>> pair_ij(pairs);
    {
        int k = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j, ++k)
                pair_ij[k] = {i, j};
    }
    std::array<std::uint64_t, 64> rows{};
    for (GraphIndex idx = begin; idx < end; ++idx) {
        std::fill_n(rows.begin(), n, 0);
        for (std::uint64_t m = idx; m; m &= m - 1) {
            const auto [i, j] = pair_ij[std::countr_zero(m)];
            rows[i] |= 1ull << j;
            rows[j] |= 1ull << i;
        }
        const int chi =
            chi_exact_rows({rows.data(), static_cast<std::size_t>(n)});
        ++flat[static_cast<std::size_t>(std::popcount(idx)) * n + chi - 1];
    }
}

ChromaticCensus from_flat(int n, const std::vector<std::uint64_t>& flat)
{
    const int pairs = static_cast<int>(pair_count(n));
    ChromaticCensus c;
    c.order = n;
    c.counts.assign(pairs + 1, std::vector<std::uint64_t>(n, 0));
    for (int m = 0; m <= pairs; ++m)
        for (int chi = 1; chi <= n; ++chi)
            c.counts[m][chi - 1] = flat[static_cast<std::size_t>(m) * n + chi - 1];
    return c;
}

void check_census_order(int n, int cap)
{
    if (n < 1)
        throw std::invalid_argument("census order must be positive");
    if (n > cap)
        throw OrderTooLargeError(
            "census of order " + std::to_string(n) + " exceeds the cap of " +
            std::to_string(cap) + " (2^" + std::to_string(pair_count(n)) +
            " graphs); raise the cap explicitly to override");
    if (pair_count(n) >= 64)
        throw OrderTooLargeError("census index space exceeds 64 bits");
}

} // namespace

std::uint64_t ChromaticCensus::total() const
{
    std::uint64_t t = 0;
    for (const auto& row : counts)
        for (std::uint64_t c : row)
            t += c;
    return t;
}

std::uint64_t ChromaticCensus::edge_row_total(int edges) const
{
    std::uint64_t t = 0;
    for (std::uint64_t c : counts[edges])
        t += c;
    return t;
}

std::vector<std::uint64_t> ChromaticCensus::chi_totals() const
{
    std::vector<std::uint64_t> t(order, 0);
    for (const auto& row : counts)
        for (int i = 0; i < order; ++i)
            t[i] += row[i];
    return t;
}

void ChromaticCensus::validate() const
{
    const int n = order;
    if (n < 1)
        throw InvariantError("census order must be positive");
    const std::uint64_t pairs = pair_count(n);
    if (pairs >= 64)
        throw InvariantError("census order too large to validate");
    if (counts.size() != pairs + 1)
        throw InvariantError("census must have C(n,2)+1 edge rows, got " +
                             std::to_string(counts.size()));
    for (std::uint64_t m = 0; m <= pairs; ++m) {
        if (counts[m].size() != static_cast<std::size_t>(n))
            throw InvariantError("edge row " + std::to_string(m) +
                                 " must have n chromatic columns");
        const std::uint64_t want = binomial(pairs, m);
        if (edge_row_total(static_cast<int>(m)) != want)
            throw InvariantError(
                "edge row " + std::to_string(m) + " sums to " +
                std::to_string(edge_row_total(static_cast<int>(m))) +
                ", expected C(" + std::to_string(pairs) + "," +
                std::to_string(m) + ") = " + std::to_string(want));
    }
    if (total() != (1ull << pairs))
        throw InvariantError("census total is not 2^C(n,2)");
    if (at(0, 1) != 1)
        throw InvariantError("cell (edges=0, chi=1) must be 1");
    for (std::uint64_t m = 1; m <= pairs; ++m)
        if (at(static_cast<int>(m), 1) != 0)
            throw InvariantError("cell (edges=" + std::to_string(m) +
                                 ", chi=1) must be 0");
    if (at(static_cast<int>(pairs), n) != 1)
        throw InvariantError("cell (edges=C(n,2), chi=n) must be 1");
}

ChromaticCensus build_census_serial(int n, int cap)
{
    check_census_order(n, cap);
    std::vector<std::uint64_t> flat((pair_count(n) + 1) * n, 0);
    census_range(n, 0, 1ull << pair_count(n), flat);
    return from_flat(n, flat);
}

ChromaticCensus build_census(int n, int cap)
{
    check_census_order(n, cap);
    const GraphIndex size = 1ull << pair_count(n);
    const std::size_t cells = (pair_count(n) + 1) * n;
    // fixed chunk grid so the merge is independent of the thread count
    const int chunks = size < 1024 ? 1 : 256;
    std::vector<std::vector<std::uint64_t>> partial(
        chunks, std::vector<std::uint64_t>(cells, 0));

#pragma omp parallel for schedule(dynamic)
    for (int c = 0; c < chunks; ++c) {
        const GraphIndex lo = size / chunks * c;
        const GraphIndex hi = c + 1 == chunks ? size : size / chunks * (c + 1);
        census_range(n, lo, hi, partial[c]);
    }

    std::vector<std::uint64_t> flat(cells, 0);
    for (int c = 0; c < chunks; ++c)
        for (std::size_t i = 0; i < cells; ++i)
            flat[i] += partial[c][i];
    return from_flat(n, flat);
}

void write_census_csv(const ChromaticCensus& c, std::ostream& out)
{
    out << "n,edges,chromatic,count\n";
    for (std::size_t m = 0; m < c.counts.size(); ++m)
        for (int chi = 1; chi <= c.order; ++chi)
            if (const auto v = c.counts[m][chi - 1])
                out << c.order << ',' << m << ',' << chi << ',' << v << '\n';
}

ChromaticCensus read_census_csv(std::istream& in)
{
    std::string line;
    if (!std::getline(in, line))
        throw SchemaError("empty census CSV");
    if (!line.empty() && line.back() == '\r')
        line.pop_back();
    if (line != "n,edges,chromatic,count")
        throw SchemaError("census CSV header must be "
                          "'n,edges,chromatic,count', got '" + line + "'");

    ChromaticCensus c;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty())
            continue;
        std::uint64_t field[4];
        const char* p = line.data();
        const char* end = line.data() + line.size();
        for (int f = 0; f < 4; ++f) {
            auto [q, ec] = std::from_chars(p, end, field[f]);
            if (ec != std::errc{})
                throw SchemaError("census CSV line " + std::to_string(lineno) +
                                  ": expected integer field");
            p = q;
            if (f < 3) {
                if (p == end || *p != ',')
                    throw SchemaError("census CSV line " +
                                      std::to_string(lineno) +
                                      ": expected 4 comma-separated fields");
                ++p;
            }
        }
        if (p != end)
            throw SchemaError("census CSV line " + std::to_string(lineno) +
                              ": trailing characters");

        const int n = static_cast<int>(field[0]);
        if (c.order == 0) {
            if (n < 1 || pair_count(n) >= 64)
                throw SchemaError("census CSV order out of range");
            c.order = n;
            c.counts.assign(pair_count(n) + 1,
                            std::vector<std::uint64_t>(n, 0));
        } else if (n != c.order) {
            throw SchemaError("census CSV line " + std::to_string(lineno) +
                              ": mixed orders");
        }
        const std::uint64_t edges = field[1];
        const std::uint64_t chi = field[2];
        if (edges > pair_count(n) || chi < 1 ||
            chi > static_cast<std::uint64_t>(n))
            throw SchemaError("census CSV line " + std::to_string(lineno) +
                              ": cell (" + std::to_string(edges) + "," +
                              std::to_string(chi) + ") out of range");
        auto& cell = c.counts[edges][chi - 1];
        if (cell != 0)
            throw SchemaError("census CSV line " + std::to_string(lineno) +
                              ": duplicate cell");
        cell = field[3];
    }
    if (c.order == 0)
        throw SchemaError("census CSV has no data rows");
    return c;
}

ChromaticCensus ingest_census_fixture(const std::filesystem::path& file)
{
    std::ifstream in(file);
    if (!in)
        throw SchemaError("cannot open census fixture " + file.string());
    ChromaticCensus c = read_census_csv(in);
    c.validate();
    return c;
}

std::filesystem::path census_fixture_path(const std::filesystem::path& dir,
                                          int order)
{
    return dir / ("census_n" + std::to_string(order) + ".csv");
}

} // namespace chromatic
