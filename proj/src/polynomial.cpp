#include "chromatic/polynomial.hpp"

#include <istream>
#include <ostream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "chromatic/errors.hpp"

namespace chromatic {

std::vector<std::string> ExpectationPolynomial::coeff_strings() const
{
    std::vector<std::string> out;
    out.reserve(coeffs.size());
    for (const auto& c : coeffs)
        out.push_back(c.get_str());
    return out;
}

void ExpectationPolynomial::validate() const
{
    if (order < 1)
        throw InvariantError("polynomial order must be positive");
    if (coeffs.empty() || coeffs.front() != 1)
        throw InvariantError("polynomial constant term must be 1");
    mpz_class sum = 0;
    for (const auto& c : coeffs)
        sum += c;
    if (sum != order)
        throw InvariantError("polynomial coefficients must sum to n, got " +
                             sum.get_str());
}

ExpectationPolynomial census_to_polynomial(const ChromaticCensus& c)
{
    const int n = c.order;
    const unsigned long degree = static_cast<unsigned long>(pair_count(n));

    // weight of p^m (1-p)^(degree-m): w_m = sum_chi chi * count[m][chi]
    std::vector<mpz_class> w(degree + 1, 0);
    for (unsigned long m = 0; m <= degree; ++m)
        for (int chi = 1; chi <= n; ++chi)
            w[m] += chi * mpz_class(c.counts[m][chi - 1]);

    // (1-p)^(degree-m) expands to sum_i C(degree-m, i) (-p)^i, so
    // coeff[j] = sum_{m<=j} w_m * C(degree-m, j-m) * (-1)^(j-m)
    ExpectationPolynomial poly;
    poly.order = n;
    poly.coeffs.assign(degree + 1, 0);
    mpz_class bin;
    for (unsigned long j = 0; j <= degree; ++j) {
        mpz_class& out = poly.coeffs[j];
        for (unsigned long m = 0; m <= j; ++m) {
            mpz_bin_uiui(bin.get_mpz_t(), degree - m, j - m);
            bin *= w[m];
            if ((j - m) % 2)
                out -= bin;
            else
                out += bin;
        }
    }
    return poly;
}

double evaluate_polynomial(const ExpectationPolynomial& poly, double p)
{
    if (!(p >= 0.0 && p <= 1.0))
        throw std::invalid_argument("evaluation point must lie in [0,1]");
    double acc = 0.0;
    for (auto it = poly.coeffs.rbegin(); it != poly.coeffs.rend(); ++it)
        acc = acc * p + it->get_d();
    return acc;
}

void write_polynomial_json(const ExpectationPolynomial& poly,
                           std::ostream& out)
{
    nlohmann::json j;
    j["n"] = poly.order;
    j["coeffs"] = poly.coeff_strings();
    out << j.dump(2) << '\n';
}

ExpectationPolynomial read_polynomial_json(std::istream& in)
{
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw SchemaError(std::string("polynomial JSON parse error: ") +
                          e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("coeffs") ||
        !j["n"].is_number_integer() || !j["coeffs"].is_array())
        throw SchemaError("polynomial JSON must be {\"n\": int, "
                          "\"coeffs\": [\"<decimal>\", ...]}");
    ExpectationPolynomial poly;
    poly.order = j["n"].get<int>();
    for (const auto& item : j["coeffs"]) {
        if (!item.is_string())
            throw SchemaError("polynomial coefficients must be "
                              "decimal strings");
        try {
            poly.coeffs.emplace_back(item.get<std::string>());
        } catch (const std::invalid_argument&) {
            throw SchemaError("bad decimal coefficient: " +
                              item.get<std::string>());
        }
    }
    return poly;
}

} // namespace chromatic
