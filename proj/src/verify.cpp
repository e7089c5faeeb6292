#include "chromatic/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <optional>
#include <ostream>
#include <sstream>

#include <omp.h>

#include "chromatic/asymptotics.hpp"
#include "chromatic/census.hpp"
#include "chromatic/chi.hpp"
#include "chromatic/errors.hpp"
#include "chromatic/io.hpp"
#include "chromatic/ircm.hpp"
#include "chromatic/polynomial.hpp"
#include "chromatic/reference.hpp"
#include "chromatic/sampling.hpp"

namespace chromatic {

namespace {

std::filesystem::path fixtures(const VerifyOptions& opt)
{
    return opt.fixture_dir.empty() ? default_fixture_dir() : opt.fixture_dir;
}

std::string fmt(double v)
{
    std::ostringstream ss;
    ss.precision(6);
    ss << v;
    return ss.str();
}

// first differing cell, if any
std::optional<std::string> compare_census(const ChromaticCensus& got,
                                          const ChromaticCensus& want)
{
    if (got.order != want.order)
        return "order mismatch";
    for (std::size_t m = 0; m < want.counts.size(); ++m)
        for (int chi = 1; chi <= want.order; ++chi)
            if (got.counts[m][chi - 1] != want.counts[m][chi - 1])
                return "cell (edges=" + std::to_string(m) +
                       ", chi=" + std::to_string(chi) + "): computed " +
                       std::to_string(got.counts[m][chi - 1]) +
                       " vs reference " +
                       std::to_string(want.counts[m][chi - 1]);
    return std::nullopt;
}

std::optional<std::string> compare_polynomial(const ExpectationPolynomial& got,
                                              int n)
{
    const auto want = reference::polynomial_coeffs(n);
    if (got.coeffs.size() != want.size())
        return "order " + std::to_string(n) + ": " +
               std::to_string(got.coeffs.size()) + " coefficients, expected " +
               std::to_string(want.size());
    for (std::size_t j = 0; j < want.size(); ++j)
        if (got.coeffs[j] != mpz_class(want[j]))
            return "order " + std::to_string(n) + " coefficient of p^" +
                   std::to_string(j) + ": computed " + got.coeffs[j].get_str() +
                   " vs reference " + std::string(want[j]);
    return std::nullopt;
}

ExpectationPolynomial fixture_polynomial(const VerifyOptions& opt, int n)
{
    return census_to_polynomial(
        ingest_census_fixture(census_fixture_path(fixtures(opt), n)));
}

CheckResult make(const char* id, const char* name)
{
    CheckResult r;
    r.id = id;
    r.name = name;
    return r;
}

} // namespace

const char* status_name(CheckStatus s)
{
    switch (s) {
    case CheckStatus::pass:
        return "pass";
    case CheckStatus::advisory:
        return "advisory";
    case CheckStatus::hard_fail:
        return "hard-fail";
    }
    return "?";
}

std::filesystem::path default_fixture_dir()
{
    if (const char* env = std::getenv("CHROMATIC_FIXTURES"))
        return env;
    return "data/fixtures";
}

CheckResult check_census_small(const VerifyOptions& opt)
{
    auto r = make("census-small", "exhaustive census orders 2..6 vs reference");
    for (int n = 2; n <= 6; ++n) {
        const auto computed = build_census(n);
        computed.validate();
        const auto fixture =
            ingest_census_fixture(census_fixture_path(fixtures(opt), n));
        if (auto diff = compare_census(computed, fixture)) {
            r.status = CheckStatus::hard_fail;
            r.detail = "order " + std::to_string(n) + " " + *diff;
            return r;
        }
    }
    r.detail = "orders 2..6 match cell-for-cell";
    return r;
}

CheckResult check_census_order7(const VerifyOptions& opt)
{
    auto r = make("census-n7", "exhaustive census order 7 vs reference");
    const auto computed = build_census(7);
    computed.validate();
    const auto fixture =
        ingest_census_fixture(census_fixture_path(fixtures(opt), 7));
    if (auto diff = compare_census(computed, fixture)) {
        r.status = CheckStatus::hard_fail;
        r.detail = *diff;
        return r;
    }
    r.detail = "2097152 graphs match cell-for-cell";
    return r;
}

CheckResult check_polynomial_coefficients(const VerifyOptions& opt)
{
    auto r = make("polynomials",
                  "expectation polynomial coefficients, orders 2..9");
    const int max_computed = opt.quick ? 6 : 7;
    for (int n = 2; n <= 9; ++n) {
        const auto poly = n <= max_computed
                              ? census_to_polynomial(build_census(n))
                              : fixture_polynomial(opt, n);
        poly.validate();
        if (auto diff = compare_polynomial(poly, n)) {
            r.status = CheckStatus::hard_fail;
            r.detail = *diff +
                       (n <= max_computed ? " (computed census)"
                                          : " (fixture census)");
            return r;
        }
    }
    r.detail = "orders 2.." + std::to_string(max_computed) +
               " computed and up to 9 from fixtures match integer-exact";
    return r;
}

CheckResult check_oracle_equivalence(const VerifyOptions& opt)
{
    auto r = make("oracle-equivalence",
                  "fast solver equals assignment-scan oracle");
    const int max_exhaustive = opt.quick ? 5 : 6;
    for (int n = 1; n <= max_exhaustive; ++n) {
        const GraphIndex size = 1ull << pair_count(n);
        std::uint64_t mismatches = 0;
#pragma omp parallel for schedule(dynamic, 1024) reduction(+ : mismatches)
        for (GraphIndex idx = 0; idx < size; ++idx) {
            const auto g = LabeledGraph::from_index(n, idx);
            if (chi_exact(g).chi != chi_bruteforce(g).chi)
                ++mismatches;
        }
        if (mismatches) {
            r.status = CheckStatus::hard_fail;
            r.detail = "order " + std::to_string(n) + ": " +
                       std::to_string(mismatches) + " mismatches";
            return r;
        }
    }
    const int samples = opt.quick ? 500 : 10000;
    std::uint64_t mismatches = 0;
#pragma omp parallel for schedule(dynamic, 64) reduction(+ : mismatches)
    for (int i = 0; i < samples; ++i) {
        const auto g = sample_gnp(7, 0.5, opt.seed, i);
        if (chi_exact(g).chi != chi_bruteforce(g).chi)
            ++mismatches;
    }
    if (mismatches) {
        r.status = CheckStatus::hard_fail;
        r.detail = "order 7 sampled: " + std::to_string(mismatches) +
                   " mismatches";
        return r;
    }
    r.detail = "exhaustive orders 1.." + std::to_string(max_exhaustive) +
               " and " + std::to_string(samples) + " order-7 samples agree";
    return r;
}

CheckResult check_mc_ac_reference(const VerifyOptions& opt)
{
    auto r = make("mc-ac", "mc-ac means vs reference values");
    const int s = opt.quick ? 1024 : kDefaultSampleCount;
    const double advisory_tol = opt.quick ? 0.10 : 0.05;
    const double hard_tol = opt.quick ? 0.30 : 0.15;
    double worst = 0.0;
    std::string worst_cell;
    for (const auto& ref : reference::mc_ac_means()) {
        if (opt.quick && ref.n > 12)
            continue;
        const auto est = mc_ac(ref.n, ref.p, s, opt.seed);
        const double diff = std::abs(est.mean - ref.mean);
        if (diff > worst) {
            worst = diff;
            worst_cell = "(n=" + std::to_string(ref.n) + ", p=" + fmt(ref.p) +
                         "): " + fmt(est.mean) + " vs " + fmt(ref.mean);
        }
        if (diff > hard_tol) {
            r.status = CheckStatus::hard_fail;
            r.detail = worst_cell + ", |diff| " + fmt(diff) + " > " +
                       fmt(hard_tol);
            return r;
        }
        if (diff > advisory_tol)
            r.status = CheckStatus::advisory;
    }
    r.detail = "worst cell " + worst_cell + ", |diff| " + fmt(worst) +
               " (advisory at " + fmt(advisory_tol) + ", hard at " +
               fmt(hard_tol) + ", s=" + std::to_string(s) + ")";
    return r;
}

CheckResult check_mc_ircm_reference(const VerifyOptions& opt)
{
    auto r = make("mc-ircm", "mc-ircm means vs reference values");
    const int s = opt.quick ? 256 : kDefaultSampleCount;
    const double advisory_tol = opt.quick ? 0.25 : 0.10;
    const double hard_tol = opt.quick ? 0.60 : 0.25;
    McIrcmOptions mi;
    mi.t_start = 256;
    mi.ceiling = 1ull << 24;
    double worst = 0.0;
    std::string worst_cell;
    bool all_converged = true;
    for (const auto& ref : reference::mc_ircm_means()) {
        if (opt.quick && ref.n > 9)
            continue;
        const auto est = mc_ircm(ref.n, ref.p, s, opt.seed, mi);
        all_converged = all_converged && est.converged;
        const double diff = std::abs(est.mean - ref.mean);
        if (diff > worst) {
            worst = diff;
            worst_cell = "(n=" + std::to_string(ref.n) + ", p=" + fmt(ref.p) +
                         "): " + fmt(est.mean) + " vs " + fmt(ref.mean);
        }
        if (diff > hard_tol) {
            r.status = CheckStatus::hard_fail;
            r.detail = worst_cell + ", |diff| " + fmt(diff) + " > " +
                       fmt(hard_tol);
            return r;
        }
        if (diff > advisory_tol)
            r.status = CheckStatus::advisory;
    }
    r.detail = "worst cell " + worst_cell + ", |diff| " + fmt(worst) +
               " (advisory at " + fmt(advisory_tol) + ", hard at " +
               fmt(hard_tol) + ", s=" + std::to_string(s) +
               (all_converged ? ", all stabilized" : ", ceiling hit") + ")";
    return r;
}

CheckResult check_ircm_soundness(const VerifyOptions& opt)
{
    auto r = make("ircm-soundness",
                  "ircm count upper-bounds the chromatic number");
    // exhaustive small orders
    for (int n = 1; n <= 5; ++n) {
        const GraphIndex size = 1ull << pair_count(n);
        std::uint64_t violations = 0;
#pragma omp parallel for schedule(dynamic, 256) reduction(+ : violations)
        for (GraphIndex idx = 0; idx < size; ++idx) {
            const auto g = LabeledGraph::from_index(n, idx);
            const auto heur = ircm_until_stable(g, 64, opt.seed + idx);
            if (heur.color_count < chi_exact(g).chi)
                ++violations;
        }
        if (violations) {
            r.status = CheckStatus::hard_fail;
            r.detail = "order " + std::to_string(n) + ": " +
                       std::to_string(violations) + " counts below chi";
            return r;
        }
    }
    // sampled orders 9 and 12; the order-9 set doubles as the accuracy probe
    const int samples = opt.quick ? 2000 : 10000;
    int equal9 = 0;
    for (int n : {9, 12}) {
        std::uint64_t violations = 0;
        int equal = 0;
#pragma omp parallel for schedule(dynamic, 64) \
    reduction(+ : violations) reduction(+ : equal)
        for (int i = 0; i < samples; ++i) {
            const auto g = sample_gnp(n, 0.5, opt.seed, i);
            const int exact = chi_exact(g).chi;
            const auto heur = ircm_until_stable(g, 64, opt.seed + i);
            if (heur.color_count < exact)
                ++violations;
            if (heur.color_count == exact)
                ++equal;
        }
        if (violations) {
            r.status = CheckStatus::hard_fail;
            r.detail = "order " + std::to_string(n) + " sampled: " +
                       std::to_string(violations) + " counts below chi";
            return r;
        }
        if (n == 9)
            equal9 = equal;
    }
    const double rate = static_cast<double>(equal9) / samples;
    if (rate < 0.95)
        r.status = CheckStatus::advisory;
    r.detail = "no undercount; order-9 equality rate " + fmt(rate) +
               " (advisory below 0.95)";
    return r;
}

CheckResult check_recurrence_step(const VerifyOptions&)
{
    auto r = make("recurrence-step", "recurrence step against references");
    const double got = recurrence_step(3.0, 9, 0.5);
    const double want = reference::kRecurrenceStepAt3n9;
    if (std::abs(got - want) > 1e-12) {
        r.status = CheckStatus::hard_fail;
        r.detail = "step(3, 9, 0.5) = " + format_double(got) +
                   ", reference " + format_double(want);
        return r;
    }
    // p = 0 fixed point at chi = 1
    for (int n : {1, 5, 100})
        if (recurrence_step(1.0, n, 0.0) != 1.0) {
            r.status = CheckStatus::hard_fail;
            r.detail = "p=0 fixed point broken at n=" + std::to_string(n);
            return r;
        }
    // step increment is 1 - q, to within rounding
    for (double chi : {1.0, 2.5, 4.0, 10.0})
        for (int n : {5, 9, 50})
            for (double p : {0.1, 0.5, 0.9}) {
                const double inc = recurrence_step(chi, n, p) - chi;
                const double q = recurrence_q(chi, n, p);
                if (std::abs(inc - (1.0 - q)) > 1e-14) {
                    r.status = CheckStatus::hard_fail;
                    r.detail = "increment != 1 - q at chi=" + fmt(chi) +
                               ", n=" + std::to_string(n) + ", p=" + fmt(p);
                    return r;
                }
            }
    r.detail = "step(3, 9, 0.5) within 1e-12; p=0 fixed point; "
               "increment identity holds";
    return r;
}

CheckResult check_bounds_band(const VerifyOptions& opt)
{
    auto r = make("bounds-band",
                  "bound sanity and recurrence inside the band at large n");
    for (double p : {0.1, 0.3, 0.5, 0.7, 0.9})
        for (int n : {3, 10, 100, 1000, 100000}) {
            const auto b = bollobas_bounds(n, p);
            if (!(b.lower < b.upper)) {
                r.status = CheckStatus::advisory;
                r.detail = "lower >= upper at n=" + std::to_string(n) +
                           ", p=" + fmt(p);
                return r;
            }
        }
    for (double p : {0.3, 0.5, 0.7}) {
        const auto poly = fixture_polynomial(opt, 9);
        const double chi0 = evaluate_polynomial(poly, p);
        const auto traj = recurrence_trajectory(9, chi0, p, 100000);
        for (int n : {1000, 10000, 100000}) {
            const double value = traj.values[n - 9].chi_bar;
            const auto b = bollobas_bounds(n, p, InnerLog::natural);
            if (!(value > b.lower && value < b.upper)) {
                r.status = CheckStatus::advisory;
                r.detail = "recurrence " + fmt(value) + " outside (" +
                           fmt(b.lower) + ", " + fmt(b.upper) + ") at n=" +
                           std::to_string(n) + ", p=" + fmt(p) +
                           " (natural inner log)";
                return r;
            }
        }
    }
    r.detail = "lower < upper on grid; recurrence strictly inside the band "
               "at n in {1e3,1e4,1e5}, p in {0.3,0.5,0.7} (natural inner log)";
    return r;
}

CheckResult check_thread_determinism(const VerifyOptions& opt)
{
    auto r = make("determinism", "outputs are identical for any thread count");
    const int s = opt.quick ? 512 : 4096;

    const auto artifacts = [&](int threads) {
        omp_set_num_threads(threads);
        std::ostringstream out;
        write_census_csv(build_census(6), out);
        McEstimate est[2] = {mc_ac(10, 0.5, s, opt.seed),
                             mc_ircm(9, 0.5, s / 2, opt.seed,
                                     {.t_start = 64, .ceiling = 1ull << 22})};
        write_estimates_csv(est, out);
        return out.str();
    };

    const int save = omp_get_max_threads();
    const std::string one = artifacts(1);
    const std::string many = artifacts(std::max(2, save));
    omp_set_num_threads(save);

    if (one != many) {
        r.status = CheckStatus::hard_fail;
        r.detail = "census/estimate artifacts differ between 1 and " +
                   std::to_string(std::max(2, save)) + " threads";
        return r;
    }

    // the parallel kernels must also agree with the serial references
    std::ostringstream a, b;
    write_census_csv(build_census(6), a);
    write_census_csv(build_census_serial(6), b);
    McEstimate pe[2] = {mc_ac(10, 0.5, s, opt.seed),
                        mc_ircm(9, 0.5, s / 2, opt.seed,
                                {.t_start = 64, .ceiling = 1ull << 22})};
    McEstimate se[2] = {mc_ac_serial(10, 0.5, s, opt.seed),
                        mc_ircm_serial(9, 0.5, s / 2, opt.seed,
                                       {.t_start = 64, .ceiling = 1ull << 22})};
    write_estimates_csv(pe, a);
    write_estimates_csv(se, b);
    if (a.str() != b.str()) {
        r.status = CheckStatus::hard_fail;
        r.detail = "parallel kernels disagree with serial references";
        return r;
    }

    r.detail = "byte-identical artifacts at 1 vs " +
               std::to_string(std::max(2, save)) +
               " threads; parallel kernels match serial references";
    return r;
}

std::vector<CheckResult> run_all_checks(const VerifyOptions& opt,
                                        std::ostream* progress)
{
    using Check = CheckResult (*)(const VerifyOptions&);
    static constexpr std::pair<const char*, Check> checks[] = {
        {"census-small", check_census_small},
        {"census-n7", check_census_order7},
        {"polynomials", check_polynomial_coefficients},
        {"oracle-equivalence", check_oracle_equivalence},
        {"mc-ac", check_mc_ac_reference},
        {"mc-ircm", check_mc_ircm_reference},
        {"ircm-soundness", check_ircm_soundness},
        {"recurrence-step", check_recurrence_step},
        {"bounds-band", check_bounds_band},
        {"determinism", check_thread_determinism},
    };

    std::vector<CheckResult> results;
    results.reserve(std::size(checks));
    int i = 0;
    for (const auto& [id, fn] : checks) {
        ++i;
        if (progress)
            *progress << "[" << i << "/" << std::size(checks) << "] " << id
                      << " ... " << std::flush;
        const auto t0 = std::chrono::steady_clock::now();
        CheckResult res;
        try {
            res = fn(opt);
        } catch (const std::exception& e) {
            res = make(id, "check aborted");
            res.status = CheckStatus::hard_fail;
            res.detail = e.what();
        }
        const auto dt = std::chrono::duration<double>(
                            std::chrono::steady_clock::now() - t0)
                            .count();
        if (progress)
            *progress << status_name(res.status) << " ("
                      << fmt(dt) << "s) " << res.detail << "\n";
        results.push_back(std::move(res));
    }
    return results;
}

int verification_exit_code(std::span<const CheckResult> results)
{
    bool advisory = false;
    for (const auto& r : results) {
        if (r.status == CheckStatus::hard_fail)
            return 2;
        advisory = advisory || r.status == CheckStatus::advisory;
    }
    return advisory ? 3 : 0;
}

namespace {

std::string csv_escape(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    out += '"';
    return out;
}

} // namespace

void write_report_csv(std::span<const CheckResult> results, std::ostream& out)
{
    out << "check,name,status,detail\n";
    for (const auto& r : results)
        out << r.id << ',' << csv_escape(r.name) << ',' << status_name(r.status)
            << ',' << csv_escape(r.detail) << '\n';
}

} // namespace chromatic
