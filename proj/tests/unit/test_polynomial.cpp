#include "wpoly/polynomial.hpp"

#include <doctest.h>

using namespace wpoly;

TEST_CASE("trailing zeros are trimmed and degree of zero is -1")
{
    CHECK(IntPolynomial{1, 2, 0, 0}.degree() == 1);
    CHECK(IntPolynomial{0, 0}.is_zero());
    CHECK(IntPolynomial{}.degree() == -1);
}

TEST_CASE("ring operations")
{
    const IntPolynomial a{1, 1};  // 1 + t
    const IntPolynomial b{-1, 1}; // -1 + t
    CHECK(a * b == IntPolynomial{-1, 0, 1});
    CHECK(a + b == IntPolynomial{0, 2});
    CHECK(a - a == IntPolynomial{});
    CHECK((IntPolynomial{1, 2, 3}).derivative() == IntPolynomial{2, 6});
    CHECK((IntPolynomial{1, 2, 3}).evaluate(Integer(2)) == 17);
    CHECK((IntPolynomial{0, 0, 5, 1}).low_order() == 2);
    CHECK((IntPolynomial{0, 0, 5, 1}).shift_down(2) == IntPolynomial{5, 1});
}

TEST_CASE("pseudo-remainder scales by lc^(deg a - deg b + 1)")
{
    // a = t^2 + 1, b = 2t: 4 * a = (2t)(2t) + 4
    CHECK(pseudo_remainder(IntPolynomial{1, 0, 1}, IntPolynomial{0, 2}) == IntPolynomial{4});
    // a = t^3 - t + 5, b = 3t^2 - 1 ; 9a = (3t)(3t^2 - 1)*... remainder -6t + 45
    CHECK(pseudo_remainder(IntPolynomial{5, -1, 0, 1}, IntPolynomial{-1, 0, 3}) == IntPolynomial{45, -6});
    CHECK_THROWS_AS(pseudo_remainder(IntPolynomial{1, 1}, IntPolynomial{}), std::domain_error);
}

TEST_CASE("exact division")
{
    const IntPolynomial a = IntPolynomial{2, 1} * IntPolynomial{-3, 2}; // (t+2)(2t-3)
    CHECK(exact_divide(a, IntPolynomial{2, 1}) == IntPolynomial{-3, 2});
    CHECK_THROWS_AS(exact_divide(a, IntPolynomial{1, 1}), std::domain_error);
    CHECK_THROWS_AS(exact_divide(IntPolynomial{1, 0, 2}, IntPolynomial{0, 2}), std::domain_error);
}

TEST_CASE("content, primitive part, gcd")
{
    CHECK(content(IntPolynomial{6, -4, 10}) == 2);
    CHECK(primitive_part(IntPolynomial{6, -4, -10}) == IntPolynomial{-3, 2, 5});
    const IntPolynomial common{-1, 1}; // t - 1
    const IntPolynomial a = common * IntPolynomial{1, 0, 1} * IntPolynomial{6};
    const IntPolynomial b = common * common * IntPolynomial{3, 1};
    CHECK(gcd(a, b) == common);
    CHECK(gcd(IntPolynomial{1, 0, 1}, IntPolynomial{0, 1}) == IntPolynomial{1});
    CHECK(gcd(IntPolynomial{}, IntPolynomial{4, 2}) == IntPolynomial{2, 1});
}

TEST_CASE("clearing denominators")
{
    const RatPolynomial f(std::vector<Rational>{Rational(1), Rational(1), Rational(1, 4)});
    CHECK(clear_denominators(f) == IntPolynomial{4, 4, 1});
}

TEST_CASE("rendering in ascending powers")
{
    CHECK(to_string(IntPolynomial{0, 4, 1}) == "4*t + t^2");
    CHECK(to_string(IntPolynomial{1, 4, 1}) == "1 + 4*t + t^2");
    CHECK(to_string(IntPolynomial{1, -2, 1}) == "1 - 2*t + t^2");
    CHECK(to_string(IntPolynomial{-1, 0, 1}) == "-1 + t^2");
    CHECK(to_string(IntPolynomial{}) == "0");
    CHECK(to_string(RatPolynomial(std::vector<Rational>{Rational(0), Rational(1), Rational(1, 16)})) == "t + 1/16*t^2");
}
