#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "chromatic/census.hpp"

namespace chromatic {

// Expected chromatic number of G(n,p) as an exact polynomial in p, monomial
// basis, ascending degree. Coefficients are arbitrary-precision integers:
// already at n = 9 they pass 4x10^12 and intermediate binomial products
// overflow 64 bits.
struct ExpectationPolynomial
{
    int order = 0;
    std::vector<mpz_class> coeffs;

    std::vector<std::string> coeff_strings() const;

    // value at p = 0 is 1, at p = 1 is n
    void validate() const;
};

// Exact expansion of sum_{m,chi} chi * count[m][chi] * p^m (1-p)^(C(n,2)-m).
ExpectationPolynomial census_to_polynomial(const ChromaticCensus& c);

// Horner evaluation in double precision. Coefficients up to n = 9 are exact
// in double (< 2^53), so the result is accurate to ~1e-12 on [0,1].
double evaluate_polynomial(const ExpectationPolynomial& poly, double p);

// JSON form: {"n": <int>, "coeffs": ["<decimal>", ...]}, ascending degree.
void write_polynomial_json(const ExpectationPolynomial& poly,
                           std::ostream& out);
ExpectationPolynomial read_polynomial_json(std::istream& in);

} // namespace chromatic
