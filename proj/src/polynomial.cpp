#include "wpoly/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace wpoly {

Integer content(const IntPolynomial& p)
{
    Integer g = 0;
    for (const auto& c : p.coeffs()) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1)
            break;
    }
    return g;
}

IntPolynomial primitive_part(const IntPolynomial& p)
{
    if (p.is_zero())
        return p;
    Integer g = content(p);
    if (p.lead() < 0)
        g = -g;
    std::vector<Integer> v = p.coeffs();
    for (auto& c : v)
        mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    return IntPolynomial(std::move(v));
}

IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b)
{
    if (b.is_zero())
        throw std::domain_error("pseudo_remainder: division by zero polynomial");
    if (a.degree() < b.degree())
        return a;
    std::vector<Integer> r = a.coeffs();
    const auto& d = b.coeffs();
    const Integer& lc = b.lead();
    const int db = b.degree();
    for (int top = a.degree(); top >= db; --top) {
        // r <- lc * r - r[top] * t^(top-db) * b
        Integer q = r[top];
        for (auto& c : r)
            c *= lc;
        if (q != 0)
            for (int j = 0; j <= db; ++j)
                r[top - db + j] -= q * d[j];
    }
    // deg a - deg b + 1 multiplications by lc were applied.
    r.resize(static_cast<std::size_t>(db));
    return IntPolynomial(std::move(r));
}

IntPolynomial exact_divide(const IntPolynomial& a, const IntPolynomial& b)
{
    if (b.is_zero())
        throw std::domain_error("exact_divide: division by zero polynomial");
    if (a.is_zero())
        return {};
    if (a.degree() < b.degree())
        throw std::domain_error("exact_divide: divisor does not divide dividend");
    std::vector<Integer> r = a.coeffs();
    const auto& d = b.coeffs();
    const int db = b.degree();
    std::vector<Integer> q(static_cast<std::size_t>(a.degree() - db + 1));
    for (int top = a.degree(); top >= db; --top) {
        if (r[top] == 0)
            continue;
        if (!mpz_divisible_p(r[top].get_mpz_t(), b.lead().get_mpz_t()))
            throw std::domain_error("exact_divide: divisor does not divide dividend");
        Integer c;
        mpz_divexact(c.get_mpz_t(), r[top].get_mpz_t(), b.lead().get_mpz_t());
        for (int j = 0; j <= db; ++j)
            r[top - db + j] -= c * d[j];
        q[top - db] = c;
    }
    for (int k = 0; k < db; ++k)
        if (r[k] != 0)
            throw std::domain_error("exact_divide: divisor does not divide dividend");
    return IntPolynomial(std::move(q));
}

IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b)
{
    if (a.is_zero())
        return primitive_part(b);
    if (b.is_zero())
        return primitive_part(a);
    IntPolynomial x = primitive_part(a);
    IntPolynomial y = primitive_part(b);
    if (x.degree() < y.degree())
        std::swap(x, y);
    while (!y.is_zero()) {
        IntPolynomial r = pseudo_remainder(x, y);
        x = std::move(y);
        y = primitive_part(r);
    }
    return primitive_part(x);
}

IntPolynomial clear_denominators(const RatPolynomial& p)
{
    Integer l = 1;
    for (const auto& c : p.coeffs())
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    std::vector<Integer> v;
    v.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) {
        Integer scaled = c.get_num() * (l / c.get_den());
        v.push_back(scaled);
    }
    return primitive_part(IntPolynomial(std::move(v)));
}

RatPolynomial to_rational(const IntPolynomial& p)
{
    std::vector<Rational> v(p.coeffs().begin(), p.coeffs().end());
    return RatPolynomial(std::move(v));
}

namespace {

template <class Coeff>
std::string render(const Polynomial<Coeff>& p)
{
    if (p.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
        Coeff c = p.coeffs()[k];
        if (c == 0)
            continue;
        if (first) {
            if (c < 0) {
                os << "-";
                c = -c;
            }
        } else {
            os << (c < 0 ? " - " : " + ");
            if (c < 0)
                c = -c;
        }
        first = false;
        if (k == 0) {
            os << c;
            continue;
        }
        if (c != 1)
            os << c << "*";
        os << "t";
        if (k > 1)
            os << "^" << k;
    }
    return os.str();
}

} // namespace

std::string to_string(const IntPolynomial& p) { return render(p); }
std::string to_string(const RatPolynomial& p) { return render(p); }

} // namespace wpoly
