#pragma once

#include <vector>

namespace chromatic {

// Large-n estimates: a one-step recurrence for the expected chromatic number
// when a vertex is added to G(n,p), and the classical lower/upper bounds with
// d = 1/(1-p).

// Next expected chromatic number: chi + 1 - q, where
// q = chi * ((chi-1)/chi)^(n*p) is the chance that some color class avoids
// all of the new vertex's ~np neighbors. Conventions: 0^0 = 1, so p = 0 keeps
// chi = 1 a fixed point. Unclamped q can slightly exceed 1 for small n*p
// (e.g. chi = 3, np = 2.7 gives q = 1.0039), letting the value dip; clamping
// restricts q to [0,1] and makes trajectories monotone.
double recurrence_step(double chi, int n, double p, bool clamp = false);

// the q used by the step at (chi, n, p), before any clamping
double recurrence_q(double chi, int n, double p);

struct RecurrencePoint
{
    int n;
    double chi_bar;
    double q; // q at (chi_bar, n); the step to n+1 uses it (clamped if set)
};

struct RecurrenceTrajectory
{
    double p = 0.0;
    int n0 = 0;
    double chi0 = 1.0;
    bool clamped = false;
    std::vector<RecurrencePoint> values; // n = n0 .. n_end
};

RecurrenceTrajectory recurrence_trajectory(int n0, double chi0, double p,
                                           int n_end, bool clamp = false);

// Base convention for the bare "log n" factors in the bound's correction
// term; the log_d factors are always base d.
enum class InnerLog { natural, base_d, base2 };

const char* inner_log_name(InnerLog c);

struct BollobasBounds
{
    int n = 0;
    double p = 0.0;
    double d = 0.0; // 1/(1-p)
    double lower = 0.0;
    double upper = 0.0;
    InnerLog convention = InnerLog::natural;
};

// lower = n/(2 log_d n) * (1 + log_d(log n)/log n), upper = same with the
// correction term tripled. Requires n >= 3 and 0 < p < 1.
BollobasBounds bollobas_bounds(int n, double p,
                               InnerLog convention = InnerLog::natural);

} // namespace chromatic
