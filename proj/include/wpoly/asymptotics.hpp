#ifndef WPOLY_ASYMPTOTICS_HPP
#define WPOLY_ASYMPTOTICS_HPP

#include "wpoly/polynomial.hpp"
#include "wpoly/realroots.hpp"

#include <vector>

namespace wpoly {

// Scaled W-polynomials f_{m,n}(t) = W(P_{m,n}, t/(mn)) and their limit
// F(z) - 1, where F(z) = sum z^k / (k!)^2 and J_0(x) = F(-x^2/4).

/// (1 - 1/n)(1 - 2/n)...(1 - (k-1)/n); 1 for k = 1, 0 for k > n.
Rational gamma_factor(int n, int k);

/// Coefficients gamma(m,k) gamma(n,k) / (k!)^2 for k = 1..min(m,n).
RatPolynomial scaled_f(int m, int n);

/// p(s * t) with exact rational coefficients.
RatPolynomial rescale_argument(const IntPolynomial& p, const Rational& s);

/// sum_{k=0}^{K} z^k / (k!)^2.
RatPolynomial f_truncation(int K);

/// F(z) - 1 truncated at degree K: sum_{k=1}^{K} z^k / (k!)^2.
RatPolynomial f_limit_truncation(int K);

/// Truncated F at t. Exact rational summation when |t| <= 8, plain
/// floating accumulation otherwise.
double eval_f_series(double t, int K);

/// Bessel J_0 by its power series through the term of order K:
/// sum (-x^2/4)^k / (k!)^2.
double eval_bessel_j0(double x, int K);

/// First positive zero of the K-term J_0 series, by bisection on [2, 3].
double first_bessel_zero(int K = 40);

/// Smallest K with a^K / (K!)^2 < 1e-12 max(1, a).
int truncation_order(const Rational& a);

/// Zeros of the degree-K truncation of F inside (-a, 0), as isolating
/// intervals of the integer-cleared polynomial. Requires K >= 3 (K = 2 has a
/// double root at -2) and a > 0.
std::vector<IsolatingInterval> zeros_of_F_truncation(int K, const Rational& a);

/// max |f_{m,n}(t) - (F(t) - 1)| over t = -a i / (samples + 1), i = 1..samples,
/// with F truncated by truncation_order(a). Exact except for the final rounding.
double convergence_gap(int m, int n, const Rational& a, int samples);

/// |f_{m,n}(t) + 1| < 1 at every point of the same interior grid of (-a, 0).
bool near_unit_magnitude_check(int m, int n, const Rational& a, int samples = 200);

} // namespace wpoly

#endif
