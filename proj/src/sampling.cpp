#include "chromatic/sampling.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>
#include <string>

#include "chromatic/chi.hpp"
#include "chromatic/errors.hpp"
#include "chromatic/io.hpp"
#include "chromatic/ircm.hpp"

namespace chromatic {

const char* method_name(McMethod m)
{
    return m == McMethod::ac ? "mc-ac" : "mc-ircm";
}

namespace {

void check_sample_args(int n, double p, int s)
{
    if (n < 1)
        throw std::invalid_argument("order must be positive");
    if (!(p >= 0.0 && p <= 1.0))
        throw std::invalid_argument("edge probability must lie in [0,1]");
    if (s < 1)
        throw std::invalid_argument("sample count must be positive");
}

// mean and sample stddev reduced in sample order
void finalize_moments(McEstimate& e)
{
    double sum = 0.0;
    for (int v : e.chi_values)
        sum += v;
    e.mean = sum / e.sample_count;
    if (e.sample_count > 1) {
        double ss = 0.0;
        for (int v : e.chi_values) {
            const double d = v - e.mean;
            ss += d * d;
        }
        e.sample_stddev = std::sqrt(ss / (e.sample_count - 1));
    }
}

McEstimate run_mc_ac(int n, double p, int s, std::uint64_t seed, int cap,
                     bool parallel)
{
    check_sample_args(n, p, s);
    if (n > cap)
        throw OrderTooLargeError("mc-ac at order " + std::to_string(n) +
                                 " exceeds the cap of " + std::to_string(cap));

    McEstimate e;
    e.method = McMethod::ac;
    e.n = n;
    e.p = p;
    e.sample_count = s;
    e.seed = seed;
    e.chi_values.assign(s, 0);

#pragma omp parallel for schedule(dynamic, 16) if (parallel)
    for (int i = 0; i < s; ++i) {
        const LabeledGraph g = sample_gnp(n, p, seed, i);
        const auto rows = adjacency_rows64(g);
        e.chi_values[i] = chi_exact_rows(rows);
    }

    finalize_moments(e);
    return e;
}

McEstimate run_mc_ircm(int n, double p, int s, std::uint64_t seed,
                       const McIrcmOptions& options,
                       std::vector<McIrcmTracePoint>* trace, bool parallel)
{
    check_sample_args(n, p, s);
    if (options.t_start < 1)
        throw std::invalid_argument("t_start must be positive");

    McEstimate e;
    e.method = McMethod::ircm;
    e.n = n;
    e.p = p;
    e.sample_count = s;
    e.seed = seed;
    e.t_start = options.t_start;
    e.chi_values.assign(s, 1);

    if (n == 1) {
        e.t_final = options.t_start;
        finalize_moments(e);
        return e;
    }

    if (options.per_sample_termination) {
        std::uint64_t t_max = 0;
        bool all_converged = true;
#pragma omp parallel for schedule(dynamic) if (parallel) \
    reduction(max : t_max) reduction(&& : all_converged)
        for (int i = 0; i < s; ++i) {
            ColoringState state(sample_gnp(n, p, seed, i));
            SplitMix64 rng(derive_key(seed, i, kTagColorMatching));
            state.run(rng, options.t_start);
            std::uint64_t t = options.t_start;
            int prev = state.distinct_count();
            for (;;) {
                if (2 * t > options.ceiling) {
                    all_converged = false;
                    break;
                }
                state.run(rng, t);
                t *= 2;
                const int cur = state.distinct_count();
                if (cur == prev)
                    break;
                prev = cur;
            }
            e.chi_values[i] = prev;
            t_max = std::max(t_max, t);
        }
        e.t_final = t_max;
        e.converged = all_converged;
        finalize_moments(e);
        return e;
    }

    // Global doubling: every sample follows the same schedule on its own
    // stream; the run stops when one full doubling changes no sample.
    std::vector<ColoringState> states;
    states.reserve(s);
    std::vector<SplitMix64> rngs;
    rngs.reserve(s);
    for (int i = 0; i < s; ++i) {
        states.emplace_back(sample_gnp(n, p, seed, i));
        rngs.emplace_back(derive_key(seed, i, kTagColorMatching));
    }

#pragma omp parallel for schedule(dynamic, 16) if (parallel)
    for (int i = 0; i < s; ++i) {
        states[i].run(rngs[i], options.t_start);
        e.chi_values[i] = states[i].distinct_count();
    }
    std::uint64_t t = options.t_start;
    if (trace) {
        finalize_moments(e);
        trace->push_back({t, e.mean});
    }

    for (;;) {
        if (2 * t > options.ceiling) {
            e.converged = false;
            break;
        }
        bool changed = false;
#pragma omp parallel for schedule(dynamic, 16) if (parallel) \
    reduction(|| : changed)
        for (int i = 0; i < s; ++i) {
            states[i].run(rngs[i], t);
            const int cur = states[i].distinct_count();
            if (cur != e.chi_values[i]) {
                changed = true;
                e.chi_values[i] = cur;
            }
        }
        t *= 2;
        if (trace) {
            finalize_moments(e);
            trace->push_back({t, e.mean});
        }
        if (!changed)
            break;
    }

    e.t_final = t;
    finalize_moments(e);
    return e;
}

} // namespace

McEstimate mc_ac(int n, double p, int s, std::uint64_t seed, int cap)
{
    return run_mc_ac(n, p, s, seed, cap, true);
}

McEstimate mc_ac_serial(int n, double p, int s, std::uint64_t seed, int cap)
{
    return run_mc_ac(n, p, s, seed, cap, false);
}

McEstimate mc_ircm(int n, double p, int s, std::uint64_t seed,
                   const McIrcmOptions& options,
                   std::vector<McIrcmTracePoint>* trace)
{
    return run_mc_ircm(n, p, s, seed, options, trace, true);
}

McEstimate mc_ircm_serial(int n, double p, int s, std::uint64_t seed,
                          const McIrcmOptions& options,
                          std::vector<McIrcmTracePoint>* trace)
{
    return run_mc_ircm(n, p, s, seed, options, trace, false);
}

void write_estimates_csv(std::span<const McEstimate> estimates,
                         std::ostream& out)
{
    out << "method,n,p,s,seed,mean,stddev,t_final\n";
    for (const auto& e : estimates)
        out << method_name(e.method) << ',' << e.n << ',' << format_double(e.p)
            << ',' << e.sample_count << ',' << e.seed << ','
            << format_double(e.mean) << ',' << format_double(e.sample_stddev)
            << ',' << e.t_final << '\n';
}

} // namespace chromatic
