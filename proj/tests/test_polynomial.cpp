#include <doctest.h>

#include <filesystem>
#include <sstream>

#include "chromatic/census.hpp"
#include "chromatic/errors.hpp"
#include "chromatic/polynomial.hpp"
#include "chromatic/reference.hpp"

using namespace chromatic;

namespace {

const std::filesystem::path kFixtures = CHROMATIC_FIXTURE_DIR;

ExpectationPolynomial poly_from_fixture(int n)
{
    return census_to_polynomial(
        ingest_census_fixture(census_fixture_path(kFixtures, n)));
}

bool equals_reference(const ExpectationPolynomial& poly, int n)
{
    const auto want = reference::polynomial_coeffs(n);
    if (poly.coeffs.size() != want.size())
        return false;
    for (std::size_t j = 0; j < want.size(); ++j)
        if (poly.coeffs[j] != mpz_class(want[j]))
            return false;
    return true;
}

} // namespace

TEST_CASE("small-order polynomials from computed censuses")
{
    const auto p3 = census_to_polynomial(build_census(3));
    CHECK(p3.coeffs == std::vector<mpz_class>{1, 3, -3, 2});

    const auto p2 = census_to_polynomial(build_census(2));
    CHECK(p2.coeffs == std::vector<mpz_class>{1, 1});

    const auto p4 = census_to_polynomial(build_census(4));
    CHECK(p4.coeffs == std::vector<mpz_class>{1, 6, -15, 24, -15, 0, 3});
}

TEST_CASE("fixture polynomials match the reference coefficients exactly")
{
    for (int n = 2; n <= 9; ++n) {
        const auto poly = poly_from_fixture(n);
        poly.validate();
        CHECK(equals_reference(poly, n));
    }
}

TEST_CASE("coefficient invariants: value 1 at p=0, n at p=1")
{
    for (int n = 2; n <= 9; ++n) {
        const auto poly = poly_from_fixture(n);
        CHECK(poly.coeffs.front() == 1);
        mpz_class sum = 0;
        for (const auto& c : poly.coeffs)
            sum += c;
        CHECK(sum == n);
        CHECK(evaluate_polynomial(poly, 0.0) == 1.0);
        CHECK(evaluate_polynomial(poly, 1.0) == static_cast<double>(n));
    }
}

TEST_CASE("order-3 value at one half")
{
    // (1*1 + 2*3 + 2*3 + 3*1) / 8 over the eight order-3 graphs
    const auto poly = census_to_polynomial(build_census(3));
    CHECK(evaluate_polynomial(poly, 0.5) == doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("evaluation is nondecreasing in p and in n")
{
    std::vector<ExpectationPolynomial> polys;
    for (int n = 2; n <= 9; ++n)
        polys.push_back(poly_from_fixture(n));

    for (const auto& poly : polys) {
        double prev = 1.0;
        for (int k = 0; k <= 100; ++k) {
            const double v = evaluate_polynomial(poly, k / 100.0);
            CHECK(v >= prev - 1e-9);
            prev = v;
        }
    }
    for (int k = 0; k <= 100; ++k) {
        const double p = k / 100.0;
        double prev = 0.0;
        for (const auto& poly : polys) {
            const double v = evaluate_polynomial(poly, p);
            CHECK(v >= prev - 1e-9);
            prev = v;
        }
    }
}

TEST_CASE("polynomial JSON round-trips")
{
    const auto poly = poly_from_fixture(9);
    std::ostringstream out;
    write_polynomial_json(poly, out);
    std::istringstream in(out.str());
    const auto back = read_polynomial_json(in);
    CHECK(back.order == poly.order);
    CHECK(back.coeffs == poly.coeffs);
}

TEST_CASE("bad polynomial JSON is rejected")
{
    std::istringstream not_json("nope");
    CHECK_THROWS_AS(read_polynomial_json(not_json), SchemaError);

    std::istringstream missing("{\"n\": 3}");
    CHECK_THROWS_AS(read_polynomial_json(missing), SchemaError);

    std::istringstream numbers("{\"n\": 3, \"coeffs\": [1, 2]}");
    CHECK_THROWS_AS(read_polynomial_json(numbers), SchemaError);

    std::istringstream garbage("{\"n\": 3, \"coeffs\": [\"12x\"]}");
    CHECK_THROWS_AS(read_polynomial_json(garbage), SchemaError);
}

TEST_CASE("validate rejects broken invariants")
{
    auto poly = poly_from_fixture(3);
    poly.coeffs[0] = 2;
    CHECK_THROWS_AS(poly.validate(), InvariantError);

    auto poly2 = poly_from_fixture(3);
    poly2.coeffs.back() += 1;
    CHECK_THROWS_AS(poly2.validate(), InvariantError);
}
