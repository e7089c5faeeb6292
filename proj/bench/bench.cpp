// Serial-reference vs OpenMP-kernel timings. Run with a varying
// OMP_NUM_THREADS (or --threads) to see the scaling; the outputs of each
// pair are asserted identical before timing is reported.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <string>

#include <omp.h>

#include "chromatic/census.hpp"
#include "chromatic/ircm.hpp"
#include "chromatic/sampling.hpp"

using namespace chromatic;

namespace {

template <typename F>
double timed(F&& f)
{
    const auto t0 = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
        .count();
}

std::string census_csv(const ChromaticCensus& c)
{
    std::ostringstream ss;
    write_census_csv(c, ss);
    return ss.str();
}

} // namespace

int main(int argc, char** argv)
{
    int census_order = 6;
    int samples = 4096;
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "--census-n" && i + 1 < argc)
            census_order = std::atoi(argv[++i]);
        else if (arg == "--s" && i + 1 < argc)
            samples = std::atoi(argv[++i]);
        else if (arg == "--threads" && i + 1 < argc)
            omp_set_num_threads(std::atoi(argv[++i]));
        else {
            std::fprintf(stderr,
                         "usage: %s [--census-n N] [--s SAMPLES] "
                         "[--threads T]\n",
                         argv[0]);
            return 1;
        }
    }

    std::printf("threads: %d\n", omp_get_max_threads());
    std::printf("%-28s %10s %10s %8s\n", "kernel", "serial[s]", "parallel[s]",
                "speedup");

    {
        ChromaticCensus serial, parallel;
        const double ts =
            timed([&] { serial = build_census_serial(census_order, 8); });
        const double tp =
            timed([&] { parallel = build_census(census_order, 8); });
        if (census_csv(serial) != census_csv(parallel)) {
            std::fprintf(stderr, "census outputs differ!\n");
            return 1;
        }
        std::printf("%-28s %10.3f %10.3f %7.2fx\n",
                    ("census n=" + std::to_string(census_order)).c_str(), ts,
                    tp, ts / tp);
    }

    {
        McEstimate serial, parallel;
        const double ts =
            timed([&] { serial = mc_ac_serial(12, 0.5, samples, 7); });
        const double tp = timed([&] { parallel = mc_ac(12, 0.5, samples, 7); });
        if (serial.mean != parallel.mean ||
            serial.sample_stddev != parallel.sample_stddev) {
            std::fprintf(stderr, "mc-ac outputs differ!\n");
            return 1;
        }
        std::printf("%-28s %10.3f %10.3f %7.2fx\n",
                    ("mc-ac n=12 s=" + std::to_string(samples)).c_str(), ts,
                    tp, ts / tp);
    }

    {
        McIrcmOptions opt;
        opt.t_start = 256;
        McEstimate serial, parallel;
        const double ts = timed(
            [&] { serial = mc_ircm_serial(20, 0.5, samples, 7, opt); });
        const double tp =
            timed([&] { parallel = mc_ircm(20, 0.5, samples, 7, opt); });
        if (serial.mean != parallel.mean || serial.t_final != parallel.t_final) {
            std::fprintf(stderr, "mc-ircm outputs differ!\n");
            return 1;
        }
        std::printf("%-28s %10.3f %10.3f %7.2fx\n",
                    ("mc-ircm n=20 s=" + std::to_string(samples)).c_str(), ts,
                    tp, ts / tp);
    }

    return 0;
}
