#pragma once

#include <span>

// Frozen reference values the verification suite checks computed results
// against: the exact expectation-polynomial coefficients for orders 1..9 and
// reference Monte Carlo means at 16384 samples.

namespace chromatic::reference {

// exact coefficients of the order-n expectation polynomial, ascending
// degree 0..C(n,2), as decimal strings; n in [1, 9]
std::span<const char* const> polynomial_coeffs(int n);

struct McReference
{
    int n;
    double p;
    double mean;
};

// mc-ac means, all populated reference cells (orders 10..15)
std::span<const McReference> mc_ac_means();

// mc-ircm spot-check means (orders 7..50)
std::span<const McReference> mc_ircm_means();

// 4 - 3*(2/3)^4.5, evaluated independently at 40-digit precision
inline constexpr double kRecurrenceStepAt3n9 = 3.516150174265051239862264874132169601587;

} // namespace chromatic::reference
