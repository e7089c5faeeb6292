#include <doctest.h>

#include <cmath>
#include <filesystem>

#include "chromatic/census.hpp"
#include "chromatic/errors.hpp"
#include "chromatic/polynomial.hpp"
#include "chromatic/sampling.hpp"

using namespace chromatic;

namespace {

const std::filesystem::path kFixtures = CHROMATIC_FIXTURE_DIR;

} // namespace

TEST_CASE("p=0 gives mean exactly 1, p=1 exactly n")
{
    const auto zero = mc_ac(6, 0.0, 32, 9);
    CHECK(zero.mean == 1.0);
    CHECK(zero.sample_stddev == 0.0);
    CHECK(mc_ac(6, 1.0, 8, 9).mean == 6.0);
    CHECK(mc_ircm(6, 0.0, 8, 9, {.t_start = 64}).mean == 1.0);
}

TEST_CASE("single sample at p=0")
{
    CHECK(mc_ac(10, 0.0, 1, 0).mean == 1.0);
}

TEST_CASE("estimates are deterministic and thread-count independent")
{
    const auto a = mc_ac(10, 0.5, 512, 42);
    const auto b = mc_ac(10, 0.5, 512, 42);
    const auto c = mc_ac_serial(10, 0.5, 512, 42);
    CHECK(a.mean == b.mean);
    CHECK(a.mean == c.mean);
    CHECK(a.sample_stddev == c.sample_stddev);
    CHECK(a.chi_values == c.chi_values);

    McIrcmOptions opt{.t_start = 64, .ceiling = 1ull << 20};
    const auto d = mc_ircm(12, 0.5, 256, 42, opt);
    const auto e = mc_ircm_serial(12, 0.5, 256, 42, opt);
    CHECK(d.mean == e.mean);
    CHECK(d.t_final == e.t_final);
    CHECK(d.chi_values == e.chi_values);
}

TEST_CASE("mc-ac converges to the exact expectation")
{
    // law-of-large-numbers band: |mean - exact| <= 4 * stddev / sqrt(s)
    const int s = 4096;
    for (int n = 2; n <= 7; ++n) {
        const auto poly = census_to_polynomial(build_census(n));
        for (double p : {0.3, 0.5, 0.7}) {
            const auto est = mc_ac(n, p, s, 1234);
            const double exact = evaluate_polynomial(poly, p);
            const double band =
                4.0 * std::max(est.sample_stddev, 1e-6) / std::sqrt(s);
            CHECK(std::abs(est.mean - exact) <= band);
        }
    }
}

TEST_CASE("ircm estimates dominate exact-search estimates")
{
    for (int n : {7, 9, 11})
        for (double p : {0.3, 0.5}) {
            const auto ac = mc_ac(n, p, 2048, 5);
            const auto ircm = mc_ircm(n, p, 2048, 5, {.t_start = 128});
            const double slack =
                4.0 * ac.sample_stddev / std::sqrt(2048.0);
            CHECK(ircm.mean >= ac.mean - slack);
        }
}

TEST_CASE("mc-ircm order 9 agrees with the exact expectation")
{
    const auto est = mc_ircm(9, 0.5, kDefaultSampleCount, 42);
    CHECK(est.converged);
    const auto poly = census_to_polynomial(
        ingest_census_fixture(census_fixture_path(kFixtures, 9)));
    CHECK(std::abs(est.mean - evaluate_polynomial(poly, 0.5)) <= 0.05);
    CHECK(std::abs(est.mean - 3.76068) <= 0.05);
}

TEST_CASE("per-sample and global termination land close together")
{
    McIrcmOptions global{.t_start = 128};
    McIrcmOptions per{.t_start = 128, .per_sample_termination = true};
    const auto g = mc_ircm(12, 0.5, 1024, 3, global);
    const auto q = mc_ircm(12, 0.5, 1024, 3, per);
    CHECK(g.converged);
    CHECK(q.converged);
    // per-sample stops earlier, so it can only sit at or above the global run
    CHECK(q.mean >= g.mean - 1e-12);
    CHECK(std::abs(q.mean - g.mean) <= 0.10);
}

TEST_CASE("global doubling trace has nonincreasing means")
{
    std::vector<McIrcmTracePoint> trace;
    const auto est = mc_ircm(14, 0.5, 512, 11, {.t_start = 64}, &trace);
    REQUIRE(trace.size() >= 2);
    CHECK(trace.front().t == 64);
    CHECK(trace.back().t == est.t_final);
    double prev = 14.0;
    for (const auto& pt : trace) {
        CHECK(pt.mean_color_count <= prev + 1e-12);
        prev = pt.mean_color_count;
    }
    CHECK(trace.back().mean_color_count == doctest::Approx(est.mean));
}

TEST_CASE("tiny ceiling propagates the non-convergence flag")
{
    const auto est = mc_ircm(25, 0.5, 64, 8, {.t_start = 64, .ceiling = 128});
    CHECK_FALSE(est.converged);
    CHECK(est.t_final == 128);
}

TEST_CASE("sampling argument validation")
{
    CHECK_THROWS_AS(mc_ac(21, 0.5, 8, 0), OrderTooLargeError);
    CHECK_NOTHROW(mc_ac(21, 0.5, 8, 0, 21));
    CHECK_THROWS_AS(mc_ac(10, 0.5, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(mc_ac(10, 1.5, 8, 0), std::invalid_argument);
    CHECK_THROWS_AS(mc_ircm(10, 0.5, 8, 0, {.t_start = 0}),
                    std::invalid_argument);
}

TEST_CASE("estimate CSV layout")
{
    McEstimate est[1] = {mc_ac(5, 0.5, 16, 3)};
    std::ostringstream out;
    write_estimates_csv(est, out);
    const auto text = out.str();
    CHECK(text.starts_with("method,n,p,s,seed,mean,stddev,t_final\n"));
    CHECK(text.find("mc-ac,5,0.5,16,3,") != std::string::npos);
}
