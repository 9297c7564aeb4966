#include "wpoly/asymptotics.hpp"

#include "wpoly/closed_form.hpp"

#include "test_support.hpp"

#include <doctest.h>

#include <cmath>

using namespace wpoly;

namespace {

Rational q(long num, long den = 1)
{
    Rational r(num, den);
    r.canonicalize();
    return r;
}

} // namespace

TEST_CASE("gamma factors")
{
    CHECK(gamma_factor(5, 1) == 1);
    CHECK(gamma_factor(4, 3) == q(3, 8));
    CHECK(gamma_factor(3, 4) == 0);
    for (int k = 1; k <= 50; ++k)
        for (int n = k; n < 50; ++n) {
            CHECK(gamma_factor(n, k) <= gamma_factor(n + 1, k));
            CHECK(gamma_factor(n + 1, k) <= 1);
        }
}

TEST_CASE("scaled_f examples")
{
    CHECK(scaled_f(2, 2) == RatPolynomial(std::vector<Rational>{q(0), q(1), q(1, 16)}));
    CHECK(scaled_f(1, 1) == RatPolynomial(std::vector<Rational>{q(0), q(1)}));
    for (int m = 1; m <= 15; ++m)
        for (int n = 1; n <= 15; ++n)
            CHECK(scaled_f(m, n)[1] == 1);
}

TEST_CASE("gamma route equals the binomial route, coefficient by coefficient")
{
    for (int m = 1; m <= 20; ++m)
        for (int n = 1; n <= 20; ++n) {
            // Oracle: C(m,k) C(n,k) / (mn)^k straight from GMP binomials.
            std::vector<Rational> expected(static_cast<std::size_t>(std::min(m, n)) + 1);
            for (int k = 1; k <= std::min(m, n); ++k) {
                Integer den;
                mpz_ui_pow_ui(den.get_mpz_t(), static_cast<unsigned long>(m * n), static_cast<unsigned long>(k));
                Rational v(test::gmp_binomial(static_cast<unsigned long>(m), static_cast<unsigned long>(k))
                               * test::gmp_binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(k)),
                           den);
                v.canonicalize();
                expected[static_cast<std::size_t>(k)] = v;
            }
            CHECK(scaled_f(m, n) == RatPolynomial(expected));
            CHECK(scaled_f(m, n) == rescale_argument(w_pmn(m, n), q(1, m * n)));
        }
}

TEST_CASE("truncations of F - 1")
{
    CHECK(f_limit_truncation(1) == RatPolynomial(std::vector<Rational>{q(0), q(1)}));
    CHECK(f_limit_truncation(3) == RatPolynomial(std::vector<Rational>{q(0), q(1), q(1, 4), q(1, 36)}));
    // At z = -2 the terms decrease from k = 1 on, so the error is below the first omitted term.
    const Rational at = f_limit_truncation(40).evaluate(q(-2));
    const Rational longer = f_limit_truncation(60).evaluate(q(-2));
    Integer f41;
    mpz_fac_ui(f41.get_mpz_t(), 41);
    Integer two41;
    mpz_ui_pow_ui(two41.get_mpz_t(), 2, 41);
    const Rational bound(two41, f41 * f41);
    CHECK(abs(at - longer) < bound);
    CHECK(f_limit_truncation(40).evaluate(q(-2)).get_d() == doctest::Approx(eval_f_series(-2.0, 40) - 1).epsilon(1e-15));
}

TEST_CASE("Bessel J_0 series")
{
    CHECK(eval_bessel_j0(0.0, 5) == 1.0);
    CHECK(std::abs(eval_bessel_j0(2.404825557695773, 40)) < 1e-10);
    for (double x = -10; x <= 10; x += 0.01) {
        CHECK(std::abs(eval_bessel_j0(x, 40)) <= 1 + 1e-12);
        CHECK(eval_bessel_j0(x, 40) == eval_bessel_j0(-x, 40));
    }
    // reference values of J_0 (Abramowitz-Stegun table 9.1)
    CHECK(eval_bessel_j0(1.0, 40) == doctest::Approx(0.7651976865579666).epsilon(1e-14));
    CHECK(eval_bessel_j0(8.0, 60) == doctest::Approx(0.1716508071375539).epsilon(1e-9));
}

TEST_CASE("first zero of J_0, recomputed by bisection")
{
    const double j1 = first_bessel_zero(40);
    CHECK(std::abs(eval_bessel_j0(j1, 40)) < 1e-10);
    // mpmath.besseljzero(0, 1) = 2.4048255576957728
    CHECK(j1 == doctest::Approx(2.4048255576957728).epsilon(1e-14));
    CHECK_THROWS(first_bessel_zero(2));
}

TEST_CASE("zeros of F truncations")
{
    const double j1 = first_bessel_zero();
    const auto four = zeros_of_F_truncation(30, q(4));
    REQUIRE(four.size() == 1);
    const SturmChain chain(squarefree_part(clear_denominators(f_truncation(30))));
    const IsolatingInterval tight = refine_root(chain, four[0], q(1, 1000000000));
    const Rational z1(-j1 * j1 / 4);
    CHECK(tight.lo <= z1);
    CHECK(z1 <= tight.hi);
    CHECK(zeros_of_F_truncation(30, q(1)).empty());
    CHECK(zeros_of_F_truncation(30, q(8)).size() == 2); // -1.4458 and -7.6178
    CHECK_THROWS_AS(zeros_of_F_truncation(2, q(4)), std::invalid_argument);
    CHECK_THROWS_AS(zeros_of_F_truncation(30, q(0)), std::invalid_argument);
}

TEST_CASE("truncation order")
{
    CHECK(truncation_order(q(4)) == 13);
    const Rational a = q(4);
    const int K = truncation_order(a);
    Integer kf;
    mpz_fac_ui(kf.get_mpz_t(), static_cast<unsigned long>(K));
    Integer ap;
    mpz_ui_pow_ui(ap.get_mpz_t(), 4, static_cast<unsigned long>(K));
    CHECK(Rational(ap, kf * kf) < q(4, 1000000000000L));
}

TEST_CASE("convergence gap goldens")
{
    // Frozen from tests/oracles/compute_goldens.py (Python Fractions).
    CHECK(convergence_gap(5, 5, q(4), 100) == doctest::Approx(0.43436129479485597).epsilon(1e-12));
    CHECK(convergence_gap(10, 10, q(4), 100) == doctest::Approx(0.17787545703347854).epsilon(1e-12));
    CHECK(convergence_gap(20, 20, q(4), 100) == doctest::Approx(0.08069809106459383).epsilon(1e-12));
    CHECK(convergence_gap(40, 40, q(4), 100) == doctest::Approx(0.038572707280058682).epsilon(1e-12));
    CHECK(convergence_gap(80, 80, q(4), 100) == doctest::Approx(0.018872606197711545).epsilon(1e-12));
    CHECK(convergence_gap(5, 5, q(4), 100) > convergence_gap(40, 40, q(4), 100));
    CHECK(convergence_gap(80, 80, q(4), 100) < 0.1);
}

TEST_CASE("near-unit magnitude of f + 1")
{
    CHECK(near_unit_magnitude_check(11, 11, q(1, 4)));
    CHECK(near_unit_magnitude_check(11, 11, q(4)));
    CHECK(near_unit_magnitude_check(1, 1, q(1, 2)));
    // f_{1,1} + 1 = 1 + t reaches -1 at t = -2
    CHECK_FALSE(near_unit_magnitude_check(1, 1, q(3)));
}
