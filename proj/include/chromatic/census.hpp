#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <vector>

#include "chromatic/graph.hpp"

namespace chromatic {

// Count of labeled graphs of a fixed order, indexed by (edge count,
// chromatic number). Row m covers the C(C(n,2), m) graphs with m edges.
struct ChromaticCensus
{
    int order = 0;
    std::vector<std::vector<std::uint64_t>> counts; // counts[m][chi-1]

    std::uint64_t at(int edges, int chi) const
    {
        return counts[edges][chi - 1];
    }

    std::uint64_t total() const;
    std::uint64_t edge_row_total(int edges) const;
    std::vector<std::uint64_t> chi_totals() const;

    // throws InvariantError naming the first offending (edges, chromatic)
    // cell or row: row totals must equal C(C(n,2), m), the grand total
    // 2^C(n,2), the one edgeless graph has chi 1, and only K_n has chi n.
    void validate() const;
};

// Exhaustive census via enumeration + exact chromatic number. The parallel
// version partitions the graph-index space; partial tables merge by
// elementwise addition, so the result is identical for any thread count.
ChromaticCensus build_census(int n, int cap = kDefaultExhaustiveCap);
ChromaticCensus build_census_serial(int n, int cap = kDefaultExhaustiveCap);

// CSV schema: header "n,edges,chromatic,count", one row per nonzero cell,
// sorted by (edges, chromatic).
void write_census_csv(const ChromaticCensus& c, std::ostream& out);
ChromaticCensus read_census_csv(std::istream& in);

// Loads a shipped census table (census_n<order>.csv) and validates it.
ChromaticCensus ingest_census_fixture(const std::filesystem::path& file);
std::filesystem::path census_fixture_path(const std::filesystem::path& dir,
                                          int order);

} // namespace chromatic
