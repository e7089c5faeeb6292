#include <cstdint>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>
#include <omp.h>

#include "chromatic/asymptotics.hpp"
#include "chromatic/census.hpp"
#include "chromatic/errors.hpp"
#include "chromatic/io.hpp"
#include "chromatic/polynomial.hpp"
#include "chromatic/sampling.hpp"
#include "chromatic/verify.hpp"

namespace {

using namespace chromatic;

// ---------------------------------------------------------------- tables

using Cell = std::variant<std::monostate, long long, double, std::string>;

struct Table
{
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    std::string to_csv() const
    {
        std::ostringstream out;
        for (std::size_t i = 0; i < columns.size(); ++i)
            out << (i ? "," : "") << columns[i];
        out << '\n';
        for (const auto& row : rows) {
            for (std::size_t i = 0; i < row.size(); ++i) {
                if (i)
                    out << ',';
                if (std::holds_alternative<long long>(row[i]))
                    out << std::get<long long>(row[i]);
                else if (std::holds_alternative<double>(row[i]))
                    out << format_double(std::get<double>(row[i]));
                else if (std::holds_alternative<std::string>(row[i]))
                    out << std::get<std::string>(row[i]);
            }
            out << '\n';
        }
        return out.str();
    }

    std::string to_json() const
    {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& row : rows) {
            nlohmann::json obj;
            for (std::size_t i = 0; i < row.size(); ++i) {
                if (std::holds_alternative<long long>(row[i]))
                    obj[columns[i]] = std::get<long long>(row[i]);
                else if (std::holds_alternative<double>(row[i]))
                    obj[columns[i]] = std::get<double>(row[i]);
                else if (std::holds_alternative<std::string>(row[i]))
                    obj[columns[i]] = std::get<std::string>(row[i]);
                else
                    obj[columns[i]] = nullptr;
            }
            arr.push_back(std::move(obj));
        }
        return arr.dump(2) + "\n";
    }
};

void emit(const Table& table, const std::string& format,
          const std::string& out_path)
{
    const std::string text =
        format == "json" ? table.to_json() : table.to_csv();
    if (out_path.empty() || out_path == "-")
        std::cout << text;
    else
        write_file_atomic(out_path, text);
}

// ------------------------------------------------------------- arg parsing

// "7", "10..13", "2,5,9", "2..4,7" -> ascending unique list
std::vector<int> parse_int_list(const std::string& text)
{
    std::vector<int> out;
    std::stringstream ss(text);
    std::string token;
    while (std::getline(ss, token, ',')) {
        if (token.empty())
            throw CLI::ValidationError("empty entry in '" + text + "'");
        const auto dots = token.find("..");
        if (dots == std::string::npos) {
            out.push_back(std::stoi(token));
        } else {
            const int lo = std::stoi(token.substr(0, dots));
            const int hi = std::stoi(token.substr(dots + 2));
            if (hi < lo)
                throw CLI::ValidationError("descending range '" + token + "'");
            for (int v = lo; v <= hi; ++v)
                out.push_back(v);
        }
    }
    if (out.empty())
        throw CLI::ValidationError("no values in '" + text + "'");
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<double> parse_double_list(const std::string& text)
{
    std::vector<double> out;
    std::stringstream ss(text);
    std::string token;
    while (std::getline(ss, token, ','))
        out.push_back(std::stod(token));
    if (out.empty())
        throw CLI::ValidationError("no values in '" + text + "'");
    return out;
}

InnerLog parse_inner_log(const std::string& name)
{
    if (name == "natural")
        return InnerLog::natural;
    if (name == "base-d")
        return InnerLog::base_d;
    if (name == "base-2")
        return InnerLog::base2;
    throw CLI::ValidationError("inner log must be natural, base-d or base-2");
}

// initial term for the recurrence: exact-n9 | ircm-max | user:<n>:<value>
struct InitialSource
{
    enum Kind { exact_n9, ircm_max, user } kind = exact_n9;
    int n = 0;
    double value = 0.0;
};

InitialSource parse_initial(const std::string& text)
{
    InitialSource src;
    if (text == "exact-n9") {
        src.kind = InitialSource::exact_n9;
    } else if (text == "ircm-max") {
        src.kind = InitialSource::ircm_max;
    } else if (text.starts_with("user:")) {
        src.kind = InitialSource::user;
        const auto rest = text.substr(5);
        const auto colon = rest.find(':');
        if (colon == std::string::npos)
            throw CLI::ValidationError("user initial must be user:<n>:<value>");
        src.n = std::stoi(rest.substr(0, colon));
        src.value = std::stod(rest.substr(colon + 1));
        if (src.n < 1 || src.value < 1.0)
            throw CLI::ValidationError("user initial needs n >= 1, value >= 1");
    } else {
        throw CLI::ValidationError(
            "initial must be exact-n9, ircm-max or user:<n>:<value>");
    }
    return src;
}

// ------------------------------------------------------------- helpers

ExpectationPolynomial load_polynomial(int n, const std::string& source,
                                      const std::filesystem::path& fixtures,
                                      int cap)
{
    if (source == "computed" || (source == "auto" && n <= cap))
        return census_to_polynomial(build_census(n, cap));
    if (n > 9)
        throw OrderTooLargeError(
            "no fixture census beyond order 9; order " + std::to_string(n) +
            " would need an exhaustive run");
    return census_to_polynomial(
        ingest_census_fixture(census_fixture_path(fixtures, n)));
}

std::string census_csv_string(const ChromaticCensus& c)
{
    std::ostringstream ss;
    write_census_csv(c, ss);
    return ss.str();
}

std::string polynomial_json_string(const ExpectationPolynomial& poly)
{
    std::ostringstream ss;
    write_polynomial_json(poly, ss);
    return ss.str();
}

// ------------------------------------------------------------- commands

int cmd_census(int n, int cap, const std::string& out_dir)
{
    if (n >= 8)
        std::cerr << "note: order " << n << " enumerates 2^" << pair_count(n)
                  << " graphs; this is a long run\n";
    const auto census = build_census(n, cap);
    census.validate();
    const auto poly = census_to_polynomial(census);
    poly.validate();

    const std::filesystem::path dir(out_dir);
    std::filesystem::create_directories(dir);
    const auto census_path = census_fixture_path(dir, n);
    const auto poly_path = dir / ("poly_n" + std::to_string(n) + ".json");
    write_file_atomic(census_path, census_csv_string(census));
    write_file_atomic(poly_path, polynomial_json_string(poly));

    const auto totals = census.chi_totals();
    std::cout << "order " << n << ": " << census.total() << " graphs; chi totals:";
    for (auto t : totals)
        std::cout << ' ' << t;
    std::cout << "\nwrote " << census_path.string() << " and "
              << poly_path.string() << "\n";
    return 0;
}

int cmd_poly(int n, const std::string& source,
             const std::filesystem::path& fixtures, int cap,
             const std::string& eval_list, const std::string& format,
             const std::string& out)
{
    const auto poly = load_polynomial(n, source, fixtures, cap);
    poly.validate();
    if (eval_list.empty()) {
        const std::string text = polynomial_json_string(poly);
        if (out.empty() || out == "-")
            std::cout << text;
        else
            write_file_atomic(out, text);
        return 0;
    }
    Table table;
    table.columns = {"n", "p", "value"};
    for (double p : parse_double_list(eval_list))
        table.rows.push_back({static_cast<long long>(n), p,
                              evaluate_polynomial(poly, p)});
    emit(table, format, out);
    return 0;
}

int cmd_estimate(const std::string& method, const std::string& n_list,
                 const std::string& p_list, int s, std::uint64_t seed,
                 std::uint64_t t_start, std::uint64_t ceiling, bool per_sample,
                 int ac_cap, const std::string& trace_path,
                 const std::string& format, const std::string& out)
{
    const auto orders = parse_int_list(n_list);
    const auto probs = parse_double_list(p_list);
    if (!trace_path.empty() &&
        (orders.size() != 1 || probs.size() != 1 || method != "mc-ircm"))
        throw CLI::ValidationError(
            "--trace needs a single (n, p) cell and method mc-ircm");

    Table table;
    table.columns = {"method", "n", "p", "s", "seed",
                     "mean",   "stddev", "t_final"};
    for (double p : probs)
        for (int n : orders) {
            std::vector<Cell> row{method,
                                  static_cast<long long>(n),
                                  p,
                                  static_cast<long long>(s),
                                  static_cast<long long>(seed),
                                  std::monostate{},
                                  std::monostate{},
                                  std::monostate{}};
            try {
                McEstimate est;
                if (method == "mc-ac") {
                    est = mc_ac(n, p, s, seed, ac_cap);
                } else {
                    McIrcmOptions opt;
                    opt.t_start = t_start;
                    opt.ceiling = ceiling;
                    opt.per_sample_termination = per_sample;
                    std::vector<McIrcmTracePoint> trace;
                    est = mc_ircm(n, p, s, seed, opt,
                                  trace_path.empty() ? nullptr : &trace);
                    if (!trace_path.empty()) {
                        Table tt;
                        tt.columns = {"t", "color_count"};
                        for (const auto& pt : trace)
                            tt.rows.push_back(
                                {static_cast<long long>(pt.t),
                                 pt.mean_color_count});
                        write_file_atomic(trace_path, tt.to_csv());
                    }
                    if (!est.converged)
                        std::cerr << "note: (n=" << n << ", p=" << p
                                  << ") hit the iteration ceiling before "
                                     "stabilizing\n";
                    row[7] = static_cast<long long>(est.t_final);
                }
                row[5] = est.mean;
                row[6] = est.sample_stddev;
            } catch (const Error& e) {
                std::cerr << "row (n=" << n << ", p=" << p
                          << ") failed: " << e.what() << "\n";
            }
            table.rows.push_back(std::move(row));
        }
    emit(table, format, out);
    return 0;
}

int cmd_recurrence(double p, int n0, double chi0, bool initial_exact9,
                   const std::filesystem::path& fixtures, int n_end,
                   bool clamp, const std::string& format,
                   const std::string& out)
{
    if (initial_exact9) {
        const auto poly = census_to_polynomial(
            ingest_census_fixture(census_fixture_path(fixtures, 9)));
        n0 = 9;
        chi0 = evaluate_polynomial(poly, p);
    }
    const auto traj = recurrence_trajectory(n0, chi0, p, n_end, clamp);
    Table table;
    table.columns = {"n", "chi_bar", "q"};
    for (const auto& pt : traj.values)
        table.rows.push_back(
            {static_cast<long long>(pt.n), pt.chi_bar, pt.q});
    emit(table, format, out);
    return 0;
}

int cmd_bounds(const std::string& n_list, const std::string& p_list,
               const std::string& inner_log, const std::string& format,
               const std::string& out)
{
    const auto convention = parse_inner_log(inner_log);
    Table table;
    table.columns = {"n", "p", "lower", "upper", "convention"};
    for (double p : parse_double_list(p_list))
        for (int n : parse_int_list(n_list)) {
            const auto b = bollobas_bounds(n, p, convention);
            table.rows.push_back({static_cast<long long>(n), p, b.lower,
                                  b.upper, std::string(inner_log_name(
                                               b.convention))});
        }
    emit(table, format, out);
    return 0;
}

int cmd_compare(const std::string& n_list, const std::string& p_list,
                const std::string& initial_text,
                const std::filesystem::path& fixtures, int s,
                std::uint64_t seed, std::uint64_t t_start, int ac_cap,
                int ircm_cap, const std::string& inner_log,
                const std::string& format, const std::string& out)
{
    const auto orders = parse_int_list(n_list);
    const auto probs = parse_double_list(p_list);
    const auto initial = parse_initial(initial_text);
    const auto convention = parse_inner_log(inner_log);

    std::map<int, ExpectationPolynomial> exact_polys;
    for (int n : orders)
        if (n >= 1 && n <= 9)
            exact_polys.emplace(
                n, census_to_polynomial(
                       ingest_census_fixture(census_fixture_path(fixtures, n))));
    const bool need_exact9 = initial.kind == InitialSource::exact_n9;
    if (need_exact9 && !exact_polys.count(9))
        exact_polys.emplace(
            9, census_to_polynomial(
                   ingest_census_fixture(census_fixture_path(fixtures, 9))));

    Table table;
    table.columns = {"n",      "p",          "exact", "mc_ac",
                     "mc_ircm", "recurrence", "lower", "upper"};

    for (double p : probs) {
        // per-method columns keyed by n
        std::map<int, double> mc_ac_col, mc_ircm_col, recurrence_col;
        for (int n : orders) {
            if (n <= ac_cap) {
                try {
                    mc_ac_col[n] = mc_ac(n, p, s, seed, ac_cap).mean;
                } catch (const Error&) {
                }
            }
            if (n >= 2 && n <= ircm_cap) {
                McIrcmOptions opt;
                opt.t_start = t_start;
                opt.ceiling = 1ull << 24;
                mc_ircm_col[n] = mc_ircm(n, p, s, seed, opt).mean;
            }
        }

        int n0 = 0;
        double chi0 = 0.0;
        switch (initial.kind) {
        case InitialSource::exact_n9:
            n0 = 9;
            chi0 = evaluate_polynomial(exact_polys.at(9), p);
            break;
        case InitialSource::ircm_max:
            if (mc_ircm_col.empty())
                throw Error("ircm-max initial needs a nonempty mc-ircm "
                            "column; widen --n or raise --mc-ircm-cap");
            n0 = mc_ircm_col.rbegin()->first;
            chi0 = mc_ircm_col.rbegin()->second;
            break;
        case InitialSource::user:
            n0 = initial.n;
            chi0 = initial.value;
            break;
        }
        const int n_max = orders.back();
        if (n_max >= n0) {
            const auto traj = recurrence_trajectory(n0, chi0, p, n_max);
            for (const auto& pt : traj.values)
                recurrence_col[pt.n] = pt.chi_bar;
        }

        for (int n : orders) {
            std::vector<Cell> row(8, std::monostate{});
            row[0] = static_cast<long long>(n);
            row[1] = p;
            if (auto it = exact_polys.find(n); it != exact_polys.end())
                row[2] = evaluate_polynomial(it->second, p);
            if (auto it = mc_ac_col.find(n); it != mc_ac_col.end())
                row[3] = it->second;
            if (auto it = mc_ircm_col.find(n); it != mc_ircm_col.end())
                row[4] = it->second;
            if (auto it = recurrence_col.find(n); it != recurrence_col.end())
                row[5] = it->second;
            if (n >= 3 && p > 0.0 && p < 1.0) {
                const auto b = bollobas_bounds(n, p, convention);
                row[6] = b.lower;
                row[7] = b.upper;
            }
            table.rows.push_back(std::move(row));
        }
    }
    emit(table, format, out);
    return 0;
}

int cmd_verify(const std::filesystem::path& fixtures, bool quick,
               std::uint64_t seed, const std::string& out)
{
    VerifyOptions opt;
    opt.fixture_dir = fixtures;
    opt.quick = quick;
    opt.seed = seed;
    const auto results = run_all_checks(opt, &std::cerr);

    std::ostringstream report;
    write_report_csv(results, report);
    if (out.empty() || out == "-")
        std::cout << report.str();
    else
        write_file_atomic(out, report.str());
    return verification_exit_code(results);
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"expected chromatic number of G(n,p): exact census, "
                 "Monte Carlo and color-matching estimates, recurrence "
                 "extrapolation, and cross-validation"};
    app.require_subcommand(1);

    int threads = 0;
    app.add_option("--threads", threads,
                   "worker threads (0 = OpenMP default); results do not "
                   "depend on this");

    std::string fixtures_flag;
    app.add_option("--fixtures", fixtures_flag,
                   "census fixture directory (default: $CHROMATIC_FIXTURES "
                   "or data/fixtures)")
        ->envname("CHROMATIC_FIXTURES");

    // census
    auto* census = app.add_subcommand(
        "census", "exhaustive census of one order; writes census CSV and "
                  "polynomial JSON");
    int census_n = 0;
    int census_cap = kDefaultExhaustiveCap;
    std::string census_out = ".";
    census->add_option("--n", census_n, "graph order")->required();
    census->add_option("--cap", census_cap,
                       "exhaustive order cap; raise to 8 explicitly for the "
                       "2^28-graph run");
    census->add_option("--out", census_out, "output directory");

    // poly
    auto* poly = app.add_subcommand(
        "poly", "expectation polynomial for one order; optionally evaluate");
    int poly_n = 0;
    std::string poly_source = "auto";
    std::string poly_eval, poly_format = "csv", poly_out;
    int poly_cap = kDefaultExhaustiveCap;
    poly->add_option("--n", poly_n, "graph order")->required();
    poly->add_option("--source", poly_source,
                     "auto | computed | fixture (auto: compute up to the "
                     "cap, fixtures beyond)")
        ->check(CLI::IsMember({"auto", "computed", "fixture"}));
    poly->add_option("--cap", poly_cap, "exhaustive order cap");
    poly->add_option("--eval", poly_eval,
                     "comma-separated p values; emits n,p,value rows "
                     "instead of JSON");
    poly->add_option("--format", poly_format, "csv | json (for --eval)")
        ->check(CLI::IsMember({"csv", "json"}));
    poly->add_option("--out", poly_out, "output file (default stdout)");

    // estimate
    auto* estimate = app.add_subcommand(
        "estimate", "Monte Carlo estimates over an (n, p) grid");
    std::string est_method, est_n, est_p;
    int est_s = kDefaultSampleCount;
    std::uint64_t est_seed = 1;
    std::uint64_t est_t_start = 256;
    std::uint64_t est_ceiling = 1ull << 32;
    bool est_per_sample = false;
    int est_ac_cap = kDefaultMcAcOrderCap;
    std::string est_trace, est_format = "csv", est_out;
    estimate->add_option("--method", est_method, "mc-ac | mc-ircm")
        ->required()
        ->check(CLI::IsMember({"mc-ac", "mc-ircm"}));
    estimate->add_option("--n", est_n, "orders, e.g. 10..13 or 7,9")
        ->required();
    estimate->add_option("--p", est_p, "probabilities, e.g. 0.3,0.5")
        ->required();
    estimate->add_option("--s", est_s, "samples per cell");
    estimate->add_option("--seed", est_seed, "RNG seed");
    estimate->add_option("--t-start", est_t_start,
                         "initial iteration budget (mc-ircm)");
    estimate->add_option("--ceiling", est_ceiling,
                         "absolute iteration ceiling per sample (mc-ircm)");
    estimate->add_flag("--per-sample", est_per_sample,
                       "stop each sample's doubling individually instead of "
                       "globally (mc-ircm)");
    estimate->add_option("--mc-ac-cap", est_ac_cap,
                         "order cap for exact per-sample search");
    estimate->add_option("--trace", est_trace,
                         "write mean color count at power-of-two iterations "
                         "(single cell, mc-ircm)");
    estimate->add_option("--format", est_format, "csv | json")
        ->check(CLI::IsMember({"csv", "json"}));
    estimate->add_option("--out", est_out, "output file (default stdout)");

    // recurrence
    auto* recurrence = app.add_subcommand(
        "recurrence", "iterate the expected-chromatic-number recurrence");
    double rec_p = 0.5;
    int rec_n0 = 9, rec_n_end = 0;
    double rec_chi0 = 0.0;
    bool rec_clamp = false, rec_exact9 = false;
    std::string rec_format = "csv", rec_out;
    recurrence->add_option("--p", rec_p, "edge probability")->required();
    recurrence->add_option("--n-end", rec_n_end, "final order")->required();
    recurrence->add_option("--n0", rec_n0, "initial order");
    recurrence->add_option("--chi0", rec_chi0, "initial expected value");
    recurrence->add_flag("--initial-exact-n9", rec_exact9,
                         "take the initial term from the order-9 fixture "
                         "polynomial at p");
    recurrence->add_flag("--clamp", rec_clamp, "clip q to [0,1] per step");
    recurrence->add_option("--format", rec_format, "csv | json")
        ->check(CLI::IsMember({"csv", "json"}));
    recurrence->add_option("--out", rec_out, "output file (default stdout)");

    // bounds
    auto* bounds = app.add_subcommand(
        "bounds", "lower/upper chromatic bounds with d = 1/(1-p)");
    std::string bnd_n, bnd_p, bnd_log = "natural", bnd_format = "csv", bnd_out;
    bounds->add_option("--n", bnd_n, "orders, e.g. 100..200 or 1000,10000")
        ->required();
    bounds->add_option("--p", bnd_p, "probabilities")->required();
    bounds->add_option("--inner-log", bnd_log,
                       "bare-log convention: natural | base-d | base-2");
    bounds->add_option("--format", bnd_format, "csv | json")
        ->check(CLI::IsMember({"csv", "json"}));
    bounds->add_option("--out", bnd_out, "output file (default stdout)");

    // compare
    auto* compare = app.add_subcommand(
        "compare", "side-by-side exact / mc-ac / mc-ircm / recurrence / "
                   "bounds columns");
    std::string cmp_n, cmp_p, cmp_initial = "exact-n9";
    int cmp_s = 1024;
    std::uint64_t cmp_seed = 1, cmp_t_start = 256;
    int cmp_ac_cap = kDefaultMcAcOrderCap, cmp_ircm_cap = 50;
    std::string cmp_log = "natural", cmp_format = "csv", cmp_out;
    compare->add_option("--n", cmp_n, "orders")->required();
    compare->add_option("--p", cmp_p, "probabilities")->required();
    compare->add_option("--initial", cmp_initial,
                        "recurrence initial term: exact-n9 | ircm-max | "
                        "user:<n>:<value>");
    compare->add_option("--s", cmp_s, "samples per Monte Carlo cell");
    compare->add_option("--seed", cmp_seed, "RNG seed");
    compare->add_option("--t-start", cmp_t_start,
                        "initial iteration budget (mc-ircm)");
    compare->add_option("--mc-ac-cap", cmp_ac_cap, "mc-ac order cap");
    compare->add_option("--mc-ircm-cap", cmp_ircm_cap, "mc-ircm order cap");
    compare->add_option("--inner-log", cmp_log,
                        "bound convention: natural | base-d | base-2");
    compare->add_option("--format", cmp_format, "csv | json")
        ->check(CLI::IsMember({"csv", "json"}));
    compare->add_option("--out", cmp_out, "output file (default stdout)");

    // verify
    auto* verify = app.add_subcommand(
        "verify", "run the full cross-validation suite; exit 0 pass, "
                  "2 hard failure, 3 advisory deviations");
    bool ver_quick = false;
    std::uint64_t ver_seed = 12345;
    std::string ver_out;
    verify->add_flag("--quick", ver_quick,
                     "reduced sample counts (smoke and determinism runs)");
    verify->add_option("--seed", ver_seed, "RNG seed");
    verify->add_option("--out", ver_out, "report CSV (default stdout)");

    for (auto* sub : app.get_subcommands({}))
        sub->fallthrough(); // global flags may follow the subcommand

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1; // usage errors are exit 1, help is 0
    }

    if (threads > 0)
        omp_set_num_threads(threads);
    const std::filesystem::path fixtures =
        fixtures_flag.empty() ? default_fixture_dir()
                              : std::filesystem::path(fixtures_flag);

    try {
        if (*census)
            return cmd_census(census_n, census_cap, census_out);
        if (*poly)
            return cmd_poly(poly_n, poly_source, fixtures, poly_cap, poly_eval,
                            poly_format, poly_out);
        if (*estimate)
            return cmd_estimate(est_method, est_n, est_p, est_s, est_seed,
                                est_t_start, est_ceiling, est_per_sample,
                                est_ac_cap, est_trace, est_format, est_out);
        if (*recurrence)
            return cmd_recurrence(rec_p, rec_n0, rec_chi0, rec_exact9,
                                  fixtures, rec_n_end, rec_clamp, rec_format,
                                  rec_out);
        if (*bounds)
            return cmd_bounds(bnd_n, bnd_p, bnd_log, bnd_format, bnd_out);
        if (*compare)
            return cmd_compare(cmp_n, cmp_p, cmp_initial, fixtures, cmp_s,
                               cmp_seed, cmp_t_start, cmp_ac_cap, cmp_ircm_cap,
                               cmp_log, cmp_format, cmp_out);
        if (*verify)
            return cmd_verify(fixtures, ver_quick, ver_seed, ver_out);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
