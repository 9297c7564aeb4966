#include "wpoly/realroots.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace wpoly {

namespace {

// Sign of p(a/b) for b > 0, via the homogenized sum of c_i a^i b^(d-i).
int sign_at_fraction(const IntPolynomial& p, const Integer& num, const Integer& den)
{
    if (p.is_zero())
        return 0;
    const auto& c = p.coeffs();
    Integer acc = c.back();
    Integer den_pow = 1;
    for (std::size_t i = c.size() - 1; i-- > 0;) {
        den_pow *= den;
        acc *= num;
        acc += c[i] * den_pow;
    }
    return sgn(acc);
}

} // namespace

int sign_at(const IntPolynomial& p, const ExtendedRational& x)
{
    if (p.is_zero())
        return 0;
    switch (x.kind()) {
    case ExtendedRational::Kind::positive_infinity:
        return sgn(p.lead());
    case ExtendedRational::Kind::negative_infinity:
        return p.degree() % 2 == 0 ? sgn(p.lead()) : -sgn(p.lead());
    case ExtendedRational::Kind::finite:
        break;
    }
    return sign_at_fraction(p, x.value().get_num(), x.value().get_den());
}

std::vector<SquarefreeFactor> squarefree_decomposition(const IntPolynomial& p)
{
    if (p.is_zero())
        throw std::invalid_argument("squarefree_decomposition: zero polynomial");
    std::vector<SquarefreeFactor> out;
    if (p.is_constant())
        return out;

    // Yun. All divisions are by primitive divisors of the dividend, hence exact in Z[t].
    const IntPolynomial f = primitive_part(p);
    const IntPolynomial df = f.derivative();
    const IntPolynomial g = gcd(f, df);
    IntPolynomial b = exact_divide(f, g);
    IntPolynomial d = exact_divide(df, g) - b.derivative();
    for (int i = 1; !b.is_constant(); ++i) {
        const IntPolynomial a = gcd(b, d);
        if (!a.is_constant())
            out.push_back({a, i});
        const IntPolynomial c = exact_divide(d, a);
        b = exact_divide(b, a);
        d = c - b.derivative();
    }
    return out;
}

IntPolynomial squarefree_part(const IntPolynomial& p)
{
    if (p.is_zero())
        throw std::invalid_argument("squarefree_part: zero polynomial");
    const IntPolynomial f = primitive_part(p);
    return exact_divide(f, gcd(f, f.derivative()));
}

SturmChain::SturmChain(const IntPolynomial& q)
{
    if (q.is_constant())
        throw std::invalid_argument("sturm_chain: polynomial must be non-constant");
    polys_.push_back(q);
    polys_.push_back(q.derivative());
    while (!polys_.back().is_constant()) {
        const IntPolynomial& prev = polys_[polys_.size() - 2];
        const IntPolynomial& cur = polys_.back();
        IntPolynomial r = pseudo_remainder(prev, cur);
        // prem multiplies by lc^(delta+1); keep the overall scaling positive.
        const int delta = prev.degree() - cur.degree();
        if (cur.lead() < 0 && delta % 2 == 0)
            r = -r;
        if (r.is_zero())
            throw NotSquarefree("sturm_chain: polynomial has a repeated root (gcd with derivative: "
                                + to_string(primitive_part(cur)) + ")");
        // Negate, then divide by the (positive) content.
        const Integer g = content(r);
        std::vector<Integer> next = r.coeffs();
        for (auto& c : next) {
            mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
            c = -c;
        }
        polys_.emplace_back(std::move(next));
    }
}

int SturmChain::sign_variations_at(const ExtendedRational& x) const
{
    int changes = 0;
    int last = 0;
    for (const auto& p : polys_) {
        const int s = sign_at(p, x);
        if (s == 0)
            continue;
        if (last != 0 && s != last)
            ++changes;
        last = s;
    }
    return changes;
}

int count_real_roots(const IntPolynomial& q, const ExtendedRational& lo, const ExtendedRational& hi)
{
    if (!(lo < hi))
        throw std::invalid_argument("count_real_roots: requires lo < hi");
    if ((lo.is_finite() && sign_at(q, lo) == 0) || (hi.is_finite() && sign_at(q, hi) == 0))
        throw std::invalid_argument("count_real_roots: endpoint is a root; perturb the interval");
    return SturmChain(q).count_in(lo, hi);
}

Rational cauchy_bound(const IntPolynomial& p)
{
    if (p.degree() < 1)
        return Rational(1);
    Integer biggest = 0;
    for (int i = 0; i < p.degree(); ++i)
        biggest = std::max(biggest, Integer(abs(p.coeffs()[static_cast<std::size_t>(i)])));
    Rational bound(biggest, Integer(abs(p.lead())));
    bound.canonicalize();
    return bound + 1;
}

namespace {

// A point strictly inside (lo, hi) where q does not vanish.
Rational split_point(const IntPolynomial& q, const Rational& lo, const Rational& hi)
{
    for (long den = 2;; ++den) {
        for (long num = den / 2; num >= 1; --num) {
            for (long k : {num, den - num}) {
                Rational frac(k, den);
                frac.canonicalize();
                const Rational mid = lo + (hi - lo) * frac;
                if (sign_at(q, mid) != 0)
                    return mid;
            }
        }
    }
}

void bisect(const SturmChain& chain, const Rational& lo, int v_lo, const Rational& hi, int v_hi,
            std::vector<IsolatingInterval>& out)
{
    const int n = v_lo - v_hi;
    if (n == 0)
        return;
    if (n == 1) {
        out.push_back({lo, hi});
        return;
    }
    const Rational mid = split_point(chain.base(), lo, hi);
    const int v_mid = chain.sign_variations_at(mid);
    bisect(chain, lo, v_lo, mid, v_mid, out);
    bisect(chain, mid, v_mid, hi, v_hi, out);
}

} // namespace

std::vector<IsolatingInterval> isolate_real_roots(const SturmChain& chain, const Rational& lo, const Rational& hi)
{
    std::vector<IsolatingInterval> out;
    if (!(lo < hi))
        return out;
    const IntPolynomial& q = chain.base();
    if (sign_at(q, hi) == 0) {
        // Counts run over (lo, hi]; divide the rational root at hi out so it is not reported.
        const IntPolynomial linear(std::vector<Integer>{-hi.get_num(), hi.get_den()});
        const IntPolynomial rest = exact_divide(primitive_part(q), linear);
        if (rest.is_constant())
            return out;
        return isolate_real_roots(SturmChain(rest), lo, hi);
    }
    // A root at lo is excluded automatically: V(lo) equals V just right of lo.
    bisect(chain, lo, chain.sign_variations_at(lo), hi, chain.sign_variations_at(hi), out);
    return out;
}

std::vector<IsolatingInterval> isolate_real_roots(const IntPolynomial& q)
{
    const SturmChain chain(q);
    const Rational bound = cauchy_bound(q);
    if (sign_at(q, Rational(0)) == 0)
        return isolate_real_roots(chain, -bound, bound);
    // Splitting at 0 keeps every interval on one side of the origin.
    auto out = isolate_real_roots(chain, -bound, Rational(0));
    for (auto& iv : isolate_real_roots(chain, Rational(0), bound))
        out.push_back(iv);
    return out;
}

IsolatingInterval refine_root(const SturmChain& chain, IsolatingInterval interval, const Rational& tol)
{
    const IntPolynomial& q = chain.base();
    while (interval.hi - interval.lo > tol) {
        const Rational mid = split_point(q, interval.lo, interval.hi);
        if (chain.count_in(interval.lo, mid) == 1)
            interval.hi = mid;
        else
            interval.lo = mid;
    }
    return interval;
}

namespace {

using Complex = std::complex<long double>;

std::vector<long double> to_long_double(const IntPolynomial& p)
{
    std::vector<long double> c;
    c.reserve(p.coeffs().size());
    for (const auto& a : p.coeffs())
        c.push_back(static_cast<long double>(a.get_d()));
    return c;
}

} // namespace

std::vector<std::complex<double>> approximate_roots(const IntPolynomial& p)
{
    const int d = p.degree();
    std::vector<std::complex<double>> out;
    if (d < 1)
        return out;
    const auto c = to_long_double(p);
    auto eval = [&](Complex z, Complex& deriv) {
        Complex v = c.back();
        deriv = 0;
        for (std::size_t i = c.size() - 1; i-- > 0;) {
            deriv = deriv * z + v;
            v = v * z + c[i];
        }
        return v;
    };

    const long double radius = cauchy_bound(p).get_d();
    // Offset angle, irrational in units of pi, keeps the start off the real axis.
    constexpr long double offset = 0.4L;
    std::vector<Complex> z(static_cast<std::size_t>(d));
    for (int k = 0; k < d; ++k)
        z[static_cast<std::size_t>(k)] = std::polar(radius, 2 * std::numbers::pi_v<long double> * k / d + offset);

    for (int sweep = 0; sweep < 1000; ++sweep) {
        bool converged = true;
        for (std::size_t k = 0; k < z.size(); ++k) {
            Complex deriv;
            const Complex value = eval(z[k], deriv);
            if (value == Complex(0))
                continue;
            const Complex ratio = value / deriv;
            Complex repulsion = 0;
            for (std::size_t j = 0; j < z.size(); ++j)
                if (j != k)
                    repulsion += Complex(1) / (z[k] - z[j]);
            const Complex step = ratio / (Complex(1) - ratio * repulsion);
            z[k] -= step;
            if (std::abs(step) > 1e-12L * std::max(1.0L, std::abs(z[k])))
                converged = false;
        }
        if (converged)
            break;
    }
    for (const auto& r : z)
        out.emplace_back(static_cast<double>(r.real()), static_cast<double>(r.imag()));
    return out;
}

double backward_error(const IntPolynomial& p, std::complex<double> z)
{
    const auto c = to_long_double(p);
    const Complex x(z.real(), z.imag());
    const long double r = std::abs(x);
    Complex v = 0;
    long double scale = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        v = v * x + *it;
        scale = scale * r + std::abs(*it);
    }
    return scale == 0 ? 0.0 : static_cast<double>(std::abs(v) / scale);
}

RootReport analyze(const IntPolynomial& p, bool want_approx)
{
    if (p.is_zero())
        throw std::invalid_argument("analyze: zero polynomial");
    RootReport report;
    report.degree = p.degree();
    report.zero_root_multiplicity = static_cast<int>(p.low_order());
    const IntPolynomial q = p.shift_down(p.low_order());

    int real_distinct = 0;
    int real_with_mult = 0;
    for (const auto& [factor, multiplicity] : squarefree_decomposition(q)) {
        const int roots = SturmChain(factor).count_in(ExtendedRational::negative_infinity(),
                                                      ExtendedRational::positive_infinity());
        real_distinct += roots;
        real_with_mult += roots * multiplicity;
    }
    report.distinct_real_roots = real_distinct + (report.zero_root_multiplicity > 0 ? 1 : 0);
    report.real_roots_with_multiplicity = real_with_mult + report.zero_root_multiplicity;
    report.nonreal_with_multiplicity = report.degree - report.real_roots_with_multiplicity;

    if (q.is_constant())
        return report;
    const IntPolynomial core = squarefree_part(q);
    report.nonreal_distinct = core.degree() - real_distinct;
    if (real_distinct > 0)
        report.isolating_intervals = isolate_real_roots(core);

    if (want_approx && report.nonreal_distinct > 0) {
        auto roots = approximate_roots(core);
        std::sort(roots.begin(), roots.end(),
                  [](const auto& a, const auto& b) { return std::abs(a.imag()) > std::abs(b.imag()); });
        roots.resize(static_cast<std::size_t>(report.nonreal_distinct));
        std::sort(roots.begin(), roots.end(), [](const auto& a, const auto& b) {
            return a.real() != b.real() ? a.real() < b.real() : a.imag() > b.imag();
        });
        report.nonreal_approx = std::move(roots);
    }
    return report;
}

RealRootedness is_real_rooted(const IntPolynomial& p)
{
    const RootReport report = analyze(p, false);
    return {report.nonreal_with_multiplicity == 0, report.nonreal_with_multiplicity};
}

bool is_simple_rooted(const IntPolynomial& p)
{
    if (p.is_zero())
        throw std::invalid_argument("is_simple_rooted: zero polynomial");
    return gcd(p, p.derivative()).is_constant();
}

} // namespace wpoly
