#ifndef WPOLY_REALROOTS_HPP
#define WPOLY_REALROOTS_HPP

#include "wpoly/polynomial.hpp"

#include <complex>
#include <optional>
#include <stdexcept>
#include <vector>

namespace wpoly {

struct NotSquarefree : std::domain_error {
    using std::domain_error::domain_error;
};

/// A rational number or one of the two infinities.
class ExtendedRational {
public:
    enum class Kind { negative_infinity, finite, positive_infinity };

    ExtendedRational(Rational value) : kind_(Kind::finite), value_(std::move(value)) {}
    ExtendedRational(long value) : kind_(Kind::finite), value_(value) {}

    static ExtendedRational negative_infinity() { return ExtendedRational(Kind::negative_infinity); }
    static ExtendedRational positive_infinity() { return ExtendedRational(Kind::positive_infinity); }

    Kind kind() const { return kind_; }
    bool is_finite() const { return kind_ == Kind::finite; }
    const Rational& value() const { return value_; }

    friend bool operator<(const ExtendedRational& a, const ExtendedRational& b)
    {
        if (a.kind_ != b.kind_)
            return a.kind_ < b.kind_;
        return a.is_finite() && a.value_ < b.value_;
    }

private:
    explicit ExtendedRational(Kind kind) : kind_(kind) {}

    Kind kind_;
    Rational value_;
};

/// Sign of p at x (-1, 0, +1); at the infinities, the sign of the limit.
int sign_at(const IntPolynomial& p, const ExtendedRational& x);

struct SquarefreeFactor {
    IntPolynomial factor; ///< primitive, positive leading coefficient
    int multiplicity;
};

/// Yun's algorithm in Z[t]: p = c * prod factor_i^multiplicity_i with the
/// factors squarefree and pairwise coprime. Constant p gives an empty list.
std::vector<SquarefreeFactor> squarefree_decomposition(const IntPolynomial& p);

/// Primitive squarefree part p / gcd(p, p').
IntPolynomial squarefree_part(const IntPolynomial& p);

/// Sturm sequence of a squarefree polynomial:
///     p0 = q, p1 = q', p(i+1) = -prem(p(i-1), p(i)) / c
/// with every scaling factor positive, ending at a non-zero constant.
class SturmChain {
public:
    /// Throws NotSquarefree if gcd(q, q') is non-constant and
    /// std::invalid_argument if q is constant.
    explicit SturmChain(const IntPolynomial& q);

    const std::vector<IntPolynomial>& polys() const { return polys_; }
    const IntPolynomial& base() const { return polys_.front(); }

    /// Sign changes in the evaluated chain, zeros skipped.
    int sign_variations_at(const ExtendedRational& x) const;

    /// Distinct roots in (lo, hi]; no root check on the endpoints.
    int count_in(const ExtendedRational& lo, const ExtendedRational& hi) const
    {
        return sign_variations_at(lo) - sign_variations_at(hi);
    }

private:
    std::vector<IntPolynomial> polys_;
};

inline SturmChain sturm_chain(const IntPolynomial& q) { return SturmChain(q); }
inline int sign_variations_at(const SturmChain& chain, const ExtendedRational& x)
{
    return chain.sign_variations_at(x);
}

/// Distinct real roots of the squarefree q in (lo, hi]. Requires lo < hi and
/// q non-zero at finite endpoints (std::invalid_argument otherwise).
int count_real_roots(const IntPolynomial& q, const ExtendedRational& lo, const ExtendedRational& hi);

/// Cauchy bound 1 + max |a_i / a_n|; every root has smaller absolute value.
Rational cauchy_bound(const IntPolynomial& p);

/// Open interval (lo, hi) holding exactly one root.
struct IsolatingInterval {
    Rational lo;
    Rational hi;

    bool contains(const Rational& x) const { return lo < x && x < hi; }
    friend bool operator==(const IsolatingInterval&, const IsolatingInterval&) = default;
};

/// Isolates the roots of the squarefree q lying in (lo, hi) by bisection on
/// Sturm counts. Intervals come out in increasing order and are disjoint.
std::vector<IsolatingInterval> isolate_real_roots(const SturmChain& chain, const Rational& lo, const Rational& hi);

/// All real roots of the squarefree q.
std::vector<IsolatingInterval> isolate_real_roots(const IntPolynomial& q);

/// Shrinks an isolating interval of the squarefree q to width <= tol.
IsolatingInterval refine_root(const SturmChain& chain, IsolatingInterval interval, const Rational& tol);

/// All complex roots of p (simple roots assumed) by Aberth iteration in
/// long double, started on the Cauchy-bound circle with a fixed angle offset.
/// Deterministic; at most 1000 sweeps, stops when every step is below 1e-12
/// relative to max(1, |z|).
std::vector<std::complex<double>> approximate_roots(const IntPolynomial& p);

/// |p(z)| / sum |a_i| |z|^i, evaluated in long double.
double backward_error(const IntPolynomial& p, std::complex<double> z);

struct RootReport {
    int degree = 0;
    int zero_root_multiplicity = 0;
    int distinct_real_roots = 0;
    int real_roots_with_multiplicity = 0;
    int nonreal_with_multiplicity = 0;
    int nonreal_distinct = 0;
    std::vector<IsolatingInterval> isolating_intervals; ///< distinct non-zero real roots, ascending
    std::optional<std::vector<std::complex<double>>> nonreal_approx;

    friend bool operator==(const RootReport&, const RootReport&) = default;
};

/// Exact real/non-real root census of a non-zero integer polynomial.
///
/// t^k is stripped first, the rest is squarefree-decomposed and each factor
/// Sturm-counted over the whole line. Counts with multiplicity come from the
/// decomposition; the non-zero real roots of the squarefree part are
/// isolated by bisection from the Cauchy bound. With want_approx, the
/// non-real roots of the squarefree part are approximated by approximate_roots;
/// nothing exact depends on that step.
RootReport analyze(const IntPolynomial& p, bool want_approx = false);

struct RealRootedness {
    bool real_rooted;
    int nonreal_count; ///< with multiplicity

    friend bool operator==(const RealRootedness&, const RealRootedness&) = default;
};

RealRootedness is_real_rooted(const IntPolynomial& p);

/// gcd(p, p') is constant.
bool is_simple_rooted(const IntPolynomial& p);

} // namespace wpoly

#endif
