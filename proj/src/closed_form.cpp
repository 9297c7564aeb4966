#include "wpoly/closed_form.hpp"

#include <stdexcept>
#include <string>

namespace wpoly {

namespace {

void require_positive(int v, const char* what)
{
    if (v < 1)
        throw std::invalid_argument(std::string(what) + " must be positive, got " + std::to_string(v));
}

} // namespace

Integer binomial(unsigned long n, unsigned long k)
{
    if (k > n)
        return 0;
    if (k > n - k)
        k = n - k;
    Integer r = 1;
    for (unsigned long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i; // exact: r is C(n-k+i, i) here
    }
    return r;
}

IntPolynomial w_disjoint_chains(int m, int n)
{
    require_positive(m, "m");
    require_positive(n, "n");
    const auto top = static_cast<unsigned long>(std::min(m, n));
    std::vector<Integer> c;
    c.reserve(top + 1);
    for (unsigned long k = 0; k <= top; ++k)
        c.push_back(binomial(static_cast<unsigned long>(m), k) * binomial(static_cast<unsigned long>(n), k));
    return IntPolynomial(std::move(c));
}

IntPolynomial w_pmn(int m, int n)
{
    return w_disjoint_chains(m, n) - IntPolynomial{1};
}

IntPolynomial eulerian_polynomial(int p)
{
    require_positive(p, "p");
    IntPolynomial a{1};
    for (int q = 2; q <= p; ++q) {
        const IntPolynomial lin{1, q - 1};
        const IntPolynomial t_one_minus_t{0, 1, -1};
        a = lin * a + t_one_minus_t * a.derivative();
    }
    return a;
}

bool is_unimodal(const IntPolynomial& poly)
{
    const auto& c = poly.coeffs();
    std::size_t i = 0;
    while (i + 1 < c.size() && c[i] <= c[i + 1])
        ++i;
    while (i + 1 < c.size() && c[i] >= c[i + 1])
        ++i;
    return i + 1 >= c.size();
}

} // namespace wpoly
