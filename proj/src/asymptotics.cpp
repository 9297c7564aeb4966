#include "wpoly/asymptotics.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace wpoly {

namespace {

void require_positive(long v, const char* what)
{
    if (v < 1)
        throw std::invalid_argument(std::string(what) + " must be positive, got " + std::to_string(v));
}

Rational fraction(long num, long den)
{
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational factorial_squared_inverse(int k)
{
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(k));
    return Rational(Integer(1), Integer(f * f));
}

std::vector<Rational> grid(const Rational& a, int samples)
{
    std::vector<Rational> points;
    points.reserve(static_cast<std::size_t>(samples));
    for (int i = 1; i <= samples; ++i) {
        Rational t = -a * i / (samples + 1);
        t.canonicalize();
        points.push_back(t);
    }
    return points;
}

void require_positive_rational(const Rational& a)
{
    if (a <= 0)
        throw std::invalid_argument("interval half-width a must be positive, got " + a.get_str());
}

} // namespace

Rational gamma_factor(int n, int k)
{
    require_positive(n, "n");
    require_positive(k, "k");
    Rational g = 1;
    for (int j = 1; j < k; ++j)
        g *= fraction(n - j, n);
    g.canonicalize();
    return g;
}

RatPolynomial scaled_f(int m, int n)
{
    require_positive(m, "m");
    require_positive(n, "n");
    const int top = std::min(m, n);
    std::vector<Rational> c(static_cast<std::size_t>(top) + 1);
    Rational gm = 1;
    Rational gn = 1;
    for (int k = 1; k <= top; ++k) {
        if (k > 1) {
            gm *= fraction(m - k + 1, m);
            gn *= fraction(n - k + 1, n);
        }
        Rational v = gm * gn * factorial_squared_inverse(k);
        v.canonicalize();
        c[static_cast<std::size_t>(k)] = v;
    }
    return RatPolynomial(std::move(c));
}

RatPolynomial rescale_argument(const IntPolynomial& p, const Rational& s)
{
    std::vector<Rational> c;
    c.reserve(p.coeffs().size());
    Rational power = 1;
    for (const auto& a : p.coeffs()) {
        Rational v = Rational(a) * power;
        v.canonicalize();
        c.push_back(v);
        power *= s;
    }
    return RatPolynomial(std::move(c));
}

RatPolynomial f_truncation(int K)
{
    if (K < 0)
        throw std::invalid_argument("truncation degree must be non-negative");
    std::vector<Rational> c;
    for (int k = 0; k <= K; ++k)
        c.push_back(factorial_squared_inverse(k));
    return RatPolynomial(std::move(c));
}

RatPolynomial f_limit_truncation(int K)
{
    require_positive(K, "K");
    return f_truncation(K) - RatPolynomial::constant(Rational(1));
}

double eval_f_series(double t, int K)
{
    if (K < 0)
        throw std::invalid_argument("truncation degree must be non-negative");
    if (!std::isfinite(t))
        throw std::invalid_argument("eval_f_series: non-finite argument");
    if (std::abs(t) <= 8.0) {
        // Alternating for t < 0; exact summation avoids cancellation error.
        const Rational x(t);
        Rational term = 1;
        Rational sum = 1;
        for (int k = 1; k <= K; ++k) {
            term *= x;
            term /= static_cast<unsigned long>(k) * static_cast<unsigned long>(k);
            sum += term;
        }
        return sum.get_d();
    }
    double term = 1;
    double sum = 1;
    for (int k = 1; k <= K; ++k) {
        term *= t / (static_cast<double>(k) * k);
        sum += term;
    }
    return sum;
}

double eval_bessel_j0(double x, int K)
{
    if (!std::isfinite(x))
        throw std::invalid_argument("eval_bessel_j0: non-finite argument");
    if (x * x <= 32.0) {
        // -x^2/4 is exact in binary rationals; keep it exact.
        Rational z(x);
        z = -z * z / 4;
        Rational term = 1;
        Rational sum = 1;
        for (int k = 1; k <= K; ++k) {
            term *= z;
            term /= static_cast<unsigned long>(k) * static_cast<unsigned long>(k);
            sum += term;
        }
        return sum.get_d();
    }
    return eval_f_series(-x * x / 4, K);
}

double first_bessel_zero(int K)
{
    double lo = 2.0;
    double hi = 3.0;
    if (!(eval_bessel_j0(lo, K) > 0 && eval_bessel_j0(hi, K) < 0))
        throw std::runtime_error("first_bessel_zero: no sign change on [2, 3]; K too small");
    for (int i = 0; i < 200 && hi - lo > 1e-15; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (eval_bessel_j0(mid, K) > 0)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

int truncation_order(const Rational& a)
{
    require_positive_rational(a);
    const Rational target = fraction(1, 1'000'000'000'000L) * (a > 1 ? a : Rational(1));
    Rational term = 1;
    for (int k = 1;; ++k) {
        term *= a;
        term /= static_cast<unsigned long>(k) * static_cast<unsigned long>(k);
        if (term < target)
            return k;
    }
}

std::vector<IsolatingInterval> zeros_of_F_truncation(int K, const Rational& a)
{
    if (K < 3)
        throw std::invalid_argument("zeros_of_F_truncation: K must be at least 3, got " + std::to_string(K));
    require_positive_rational(a);
    const IntPolynomial q = clear_denominators(f_truncation(K));
    return isolate_real_roots(SturmChain(squarefree_part(q)), -a, Rational(0));
}

double convergence_gap(int m, int n, const Rational& a, int samples)
{
    require_positive_rational(a);
    require_positive(samples, "samples");
    const RatPolynomial f = scaled_f(m, n);
    const RatPolynomial limit = f_limit_truncation(truncation_order(a));
    double gap = 0;
    for (const Rational& t : grid(a, samples)) {
        const Rational diff = f.evaluate(t) - limit.evaluate(t);
        gap = std::max(gap, std::abs(diff.get_d()));
    }
    return gap;
}

bool near_unit_magnitude_check(int m, int n, const Rational& a, int samples)
{
    require_positive_rational(a);
    require_positive(samples, "samples");
    const RatPolynomial f = scaled_f(m, n);
    for (const Rational& t : grid(a, samples)) {
        const Rational v = f.evaluate(t) + 1;
        if (abs(v) >= 1)
            return false;
    }
    return true;
}

} // namespace wpoly
