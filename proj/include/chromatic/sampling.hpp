#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "chromatic/graph.hpp"

namespace chromatic {

enum class McMethod { ac, ircm };

const char* method_name(McMethod m);

inline constexpr int kDefaultSampleCount = 16384;
inline constexpr int kDefaultMcAcOrderCap = 20;

struct McEstimate
{
    McMethod method = McMethod::ac;
    int n = 0;
    double p = 0.0;
    int sample_count = 0;
    std::uint64_t seed = 0;
    double mean = 0.0;
    double sample_stddev = 0.0;
    std::uint64_t t_start = 0; // ircm only
    std::uint64_t t_final = 0; // ircm only
    bool converged = true;
    std::vector<int> chi_values; // per-sample, in sample_id order
};

// Sample average of the exact chromatic number over s independent G(n,p)
// draws (sample ids 0..s-1). Samples are scheduled in parallel but each is a
// pure function of (n, p, seed, sample_id) and the reduction runs in sample
// order, so mean and stddev are bit-identical for any thread count.
McEstimate mc_ac(int n, double p, int s, std::uint64_t seed,
                 int cap = kDefaultMcAcOrderCap);
McEstimate mc_ac_serial(int n, double p, int s, std::uint64_t seed,
                        int cap = kDefaultMcAcOrderCap);

struct McIrcmOptions
{
    std::uint64_t t_start = 256;
    std::uint64_t ceiling = 1ull << 32; // per-sample iteration ceiling
    // false: one doubling schedule for the whole sample set, stopping when no
    // sample's color count changed across a doubling. true: each sample stops
    // on its own doubling criterion (faster, slightly different estimate).
    bool per_sample_termination = false;
};

struct McIrcmTracePoint
{
    std::uint64_t t;
    double mean_color_count;
};

// As mc_ac but with the color-matching heuristic per sample. t_final reports
// the total iterations per sample at termination; converged goes false if the
// ceiling was hit first.
McEstimate mc_ircm(int n, double p, int s, std::uint64_t seed,
                   const McIrcmOptions& options = {},
                   std::vector<McIrcmTracePoint>* trace = nullptr);
McEstimate mc_ircm_serial(int n, double p, int s, std::uint64_t seed,
                          const McIrcmOptions& options = {},
                          std::vector<McIrcmTracePoint>* trace = nullptr);

// CSV schema: method,n,p,s,seed,mean,stddev,t_final
void write_estimates_csv(std::span<const McEstimate> estimates,
                         std::ostream& out);

} // namespace chromatic
