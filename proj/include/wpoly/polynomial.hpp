#ifndef WPOLY_POLYNOMIAL_HPP
#define WPOLY_POLYNOMIAL_HPP

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace wpoly {

using Integer = mpz_class;
using Rational = mpq_class;

/// Dense univariate polynomial, ascending coefficients, trailing zeros trimmed.
/// The zero polynomial has no coefficients and degree -1.
template <class Coeff>
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
    Polynomial(std::initializer_list<long> coeffs)
    {
        coeffs_.reserve(coeffs.size());
        for (long c : coeffs)
            coeffs_.emplace_back(c);
        trim();
    }

    static Polynomial constant(const Coeff& c) { return Polynomial(std::vector<Coeff>{c}); }
    static Polynomial monomial(const Coeff& c, std::size_t k)
    {
        std::vector<Coeff> v(k + 1);
        v[k] = c;
        return Polynomial(std::move(v));
    }

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    const std::vector<Coeff>& coeffs() const { return coeffs_; }

    /// Coefficient of t^k; zero beyond the degree.
    Coeff operator[](std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Coeff(0); }
    const Coeff& lead() const { return coeffs_.back(); }

    void set(std::size_t k, const Coeff& c)
    {
        if (k >= coeffs_.size())
            coeffs_.resize(k + 1);
        coeffs_[k] = c;
        trim();
    }

    Polynomial derivative() const
    {
        std::vector<Coeff> d;
        for (std::size_t k = 1; k < coeffs_.size(); ++k)
            d.push_back(coeffs_[k] * static_cast<unsigned long>(k));
        return Polynomial(std::move(d));
    }

    template <class X>
    X evaluate(const X& x) const
    {
        X acc(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
            acc = acc * x + X(*it);
        return acc;
    }

    /// Exponent of the largest power of t dividing this polynomial (0 for the zero polynomial).
    std::size_t low_order() const
    {
        std::size_t k = 0;
        while (k < coeffs_.size() && coeffs_[k] == 0)
            ++k;
        return k == coeffs_.size() ? 0 : k;
    }

    /// Divides by t^k; the low k coefficients must be zero.
    Polynomial shift_down(std::size_t k) const
    {
        if (k >= coeffs_.size())
            return {};
        return Polynomial(std::vector<Coeff>(coeffs_.begin() + static_cast<std::ptrdiff_t>(k), coeffs_.end()));
    }

    Polynomial operator-() const
    {
        auto v = coeffs_;
        for (auto& c : v)
            c = -c;
        return Polynomial(std::move(v));
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b)
    {
        std::vector<Coeff> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
        for (std::size_t k = 0; k < v.size(); ++k)
            v[k] = a[k] + b[k];
        return Polynomial(std::move(v));
    }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b)
    {
        if (a.is_zero() || b.is_zero())
            return {};
        std::vector<Coeff> v(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                v[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return Polynomial(std::move(v));
    }
    friend Polynomial operator*(const Coeff& s, const Polynomial& p)
    {
        auto v = p.coeffs_;
        for (auto& c : v)
            c *= s;
        return Polynomial(std::move(v));
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

private:
    void trim()
    {
        while (!coeffs_.empty() && coeffs_.back() == 0)
            coeffs_.pop_back();
    }

    std::vector<Coeff> coeffs_;
};

using IntPolynomial = Polynomial<Integer>;
using RatPolynomial = Polynomial<Rational>;

/// Positive gcd of the coefficients; zero for the zero polynomial.
Integer content(const IntPolynomial& p);

/// p divided by its content, sign normalized so the leading coefficient is positive.
IntPolynomial primitive_part(const IntPolynomial& p);

/// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b, computed in Z[t].
IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b);

/// Exact quotient a / b in Z[t]. Throws std::domain_error if b does not divide a.
IntPolynomial exact_divide(const IntPolynomial& a, const IntPolynomial& b);

/// Primitive gcd with positive leading coefficient (primitive remainder sequence).
IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b);

/// Clears denominators: returns the primitive integer polynomial proportional to p
/// with positive leading coefficient.
IntPolynomial clear_denominators(const RatPolynomial& p);

RatPolynomial to_rational(const IntPolynomial& p);

/// Human rendering in ascending powers, e.g. "216*t + 9450*t^2".
std::string to_string(const IntPolynomial& p);
std::string to_string(const RatPolynomial& p);

} // namespace wpoly

#endif
