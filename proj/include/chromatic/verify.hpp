#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace chromatic {

// Cross-validation of every implemented method against the shipped reference
// tables and against each other. Used by the `verify` CLI subcommand and by
// the acceptance test suite, so tolerances live here, in one place.

enum class CheckStatus { pass, advisory, hard_fail };

const char* status_name(CheckStatus s);

struct CheckResult
{
    std::string id;
    std::string name;
    CheckStatus status = CheckStatus::pass;
    std::string detail;
};

struct VerifyOptions
{
    std::filesystem::path fixture_dir; // empty: default_fixture_dir()
    bool quick = false;  // reduced sample counts; smoke/determinism runs
    std::uint64_t seed = 12345;
};

// $CHROMATIC_FIXTURES if set, else data/fixtures
std::filesystem::path default_fixture_dir();

// individual checks, in reporting order
CheckResult check_census_small(const VerifyOptions& opt);
CheckResult check_census_order7(const VerifyOptions& opt);
CheckResult check_polynomial_coefficients(const VerifyOptions& opt);
CheckResult check_oracle_equivalence(const VerifyOptions& opt);
CheckResult check_mc_ac_reference(const VerifyOptions& opt);
CheckResult check_mc_ircm_reference(const VerifyOptions& opt);
CheckResult check_ircm_soundness(const VerifyOptions& opt);
CheckResult check_recurrence_step(const VerifyOptions& opt);
CheckResult check_bounds_band(const VerifyOptions& opt);
CheckResult check_thread_determinism(const VerifyOptions& opt);

std::vector<CheckResult> run_all_checks(const VerifyOptions& opt,
                                        std::ostream* progress = nullptr);

// 0 all pass, 2 any hard failure, 3 advisory deviations only
int verification_exit_code(std::span<const CheckResult> results);

// CSV schema: check,name,status,detail
void write_report_csv(std::span<const CheckResult> results, std::ostream& out);

} // namespace chromatic
