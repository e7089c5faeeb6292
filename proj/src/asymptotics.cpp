#include "chromatic/asymptotics.hpp"

#include <cmath>
#include <stdexcept>

namespace chromatic {

namespace {

void check_step_args(double chi, double p)
{
    if (!(chi >= 1.0))
        throw std::domain_error("expected chromatic number must be >= 1");
    if (!(p >= 0.0 && p <= 1.0))
        throw std::domain_error("edge probability must lie in [0,1]");
}

} // namespace

double recurrence_q(double chi, int n, double p)
{
    check_step_args(chi, p);
    const double base = (chi - 1.0) / chi;
    const double expo = n * p;
    // std::pow(0,0) is 1, which is the convention we want
    return chi * std::pow(base, expo);
}

double recurrence_step(double chi, int n, double p, bool clamp)
{
    double q = recurrence_q(chi, n, p);
    if (clamp)
        q = std::min(1.0, std::max(0.0, q));
    return chi + 1.0 - q;
}

RecurrenceTrajectory recurrence_trajectory(int n0, double chi0, double p,
                                           int n_end, bool clamp)
{
    if (n0 < 1)
        throw std::invalid_argument("initial order must be positive");
    if (n_end < n0)
        throw std::invalid_argument("final order must be >= initial order");
    check_step_args(chi0, p);

    RecurrenceTrajectory traj;
    traj.p = p;
    traj.n0 = n0;
    traj.chi0 = chi0;
    traj.clamped = clamp;
    traj.values.reserve(n_end - n0 + 1);

    double chi = chi0;
    for (int n = n0; n <= n_end; ++n) {
        traj.values.push_back({n, chi, recurrence_q(chi, n, p)});
        if (n < n_end)
            chi = recurrence_step(chi, n, p, clamp);
    }
    return traj;
}

const char* inner_log_name(InnerLog c)
{
    switch (c) {
    case InnerLog::natural:
        return "natural";
    case InnerLog::base_d:
        return "base-d";
    case InnerLog::base2:
        return "base-2";
    }
    return "?";
}

BollobasBounds bollobas_bounds(int n, double p, InnerLog convention)
{
    if (n < 3)
        throw std::domain_error("bounds need n >= 3");
    if (!(p > 0.0 && p < 1.0))
        throw std::domain_error("bounds need 0 < p < 1");

    const double d = 1.0 / (1.0 - p);
    const double ln_d = std::log(d);
    const double ln_n = std::log(n);

    double log_n = ln_n; // the bare "log n" under the chosen convention
    if (convention == InnerLog::base_d)
        log_n = ln_n / ln_d;
    else if (convention == InnerLog::base2)
        log_n = ln_n / std::log(2.0);

    const double prefactor = n / (2.0 * (ln_n / ln_d));
    const double correction = (std::log(log_n) / ln_d) / log_n;

    BollobasBounds b;
    b.n = n;
    b.p = p;
    b.d = d;
    b.convention = convention;
    b.lower = prefactor * (1.0 + correction);
    b.upper = prefactor * (1.0 + 3.0 * correction);
    return b;
}

} // namespace chromatic
