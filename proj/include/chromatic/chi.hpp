#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "chromatic/graph.hpp"

namespace chromatic {

struct ChromaticResult
{
    int chi = 0;
    std::vector<int> witness; // proper coloring, colors in [1, chi]
};

// Minimum k such that some assignment V -> [k] is proper, found by scanning
// assignments for k = 1, 2, ... in odometer order. Exponential; the guard
// rejects orders above the cap (n = 8 is 16.7M patterns per graph).
ChromaticResult chi_bruteforce(const LabeledGraph& g, int cap = 8);

// Same chi as chi_bruteforce on every input, via iterative-deepening
// k-colorability with backtracking. Vertices are picked by saturation degree
// (lowest index on ties), colors tried in ascending index, and at most one
// previously unused color is offered per node, so the witness is
// deterministic. Handles orders up to 64.
ChromaticResult chi_exact(const LabeledGraph& g);

// solver kernel on single-word neighbor masks (order <= 64), no allocation
int chi_exact_rows(std::span<const std::uint64_t> rows,
                   std::int8_t* witness = nullptr);

bool is_proper_coloring(const LabeledGraph& g, std::span<const int> colors);

} // namespace chromatic
