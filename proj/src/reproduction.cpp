#include "wpoly/reproduction.hpp"

#include "wpoly/closed_form.hpp"
#include "wpoly/linext.hpp"
#include "wpoly/realroots.hpp"

#include <cmath>
#include <sstream>

namespace wpoly {

namespace {

CheckResult check(std::string name, bool passed, std::string detail = {})
{
    return {std::move(name), passed, std::move(detail)};
}

IntPolynomial from_longs(std::initializer_list<long> c) { return IntPolynomial(c); }

} // namespace

std::vector<CheckResult> run_reproduction_battery(const BatteryOptions& options)
{
    std::vector<CheckResult> out;

    {
        const Poset p22 = make_pmn(2, 2);
        const std::vector<Permutation> expected = {
            {{1, 3, 2, 4}}, {{1, 3, 4, 2}}, {{3, 1, 2, 4}}, {{3, 1, 4, 2}}, {{3, 4, 1, 2}}};
        const bool same_set = linear_extensions(p22) == expected;
        const IntPolynomial w = w_polynomial_enumerative(p22);
        out.push_back(check("P_{2,2} extensions and W = 4*t + t^2", same_set && w == from_longs({0, 4, 1}),
                            "W = " + to_string(w)));
    }

    {
        bool ok = true;
        std::string detail;
        for (int m = 1; m <= 5 && ok; ++m)
            for (int n = 1; n <= 5 && ok; ++n) {
                const IntPolynomial diff = w_polynomial_enumerative(make_disjoint_chains(m, n))
                                           - w_polynomial_enumerative(make_pmn(m, n));
                if (diff != IntPolynomial{1}) {
                    ok = false;
                    detail = "m=" + std::to_string(m) + " n=" + std::to_string(n) + " difference " + to_string(diff);
                }
            }
        out.push_back(check("W(m+n chains) = 1 + W(P_{m,n}) for m,n <= 5", ok, detail));
    }

    {
        bool ok = true;
        std::string detail;
        for (int m = 1; m <= 6 && ok; ++m)
            for (int n = 1; n <= 6 && ok; ++n)
                if (w_disjoint_chains(m, n) != w_polynomial_enumerative(make_disjoint_chains(m, n))) {
                    ok = false;
                    detail = "m=" + std::to_string(m) + " n=" + std::to_string(n);
                }
        out.push_back(check("binomial formula matches enumeration for m,n <= 6", ok, detail));
    }

    IntPolynomial expected_36_6 = from_longs({0, 216, 9450, 142800, 883575, 2261952, 1947792});
    if (options.corrupt_expected)
        expected_36_6.set(3, Integer(142801));
    {
        const IntPolynomial w = w_pmn(36, 6);
        out.push_back(check("W(P_{36,6}) explicit coefficients (formula)", w == expected_36_6, to_string(w)));
        if (!options.quick) {
            const IntPolynomial e = w_polynomial_enumerative(make_pmn(36, 6));
            out.push_back(check("W(P_{36,6}) explicit coefficients (enumeration)", e == expected_36_6, to_string(e)));
            const IntPolynomial e11 = w_polynomial_enumerative(make_pmn(11, 11));
            out.push_back(check("W(P_{11,11}) enumeration matches formula", e11 == w_pmn(11, 11)));
        }
    }

    for (auto [m, n] : {std::pair{36, 6}, std::pair{11, 11}}) {
        const RootReport r = analyze(w_pmn(m, n));
        out.push_back(check("W(P_{" + std::to_string(m) + "," + std::to_string(n) + "}) has exactly 2 non-real zeros",
                            r.nonreal_with_multiplicity == 2,
                            "non-real with multiplicity: " + std::to_string(r.nonreal_with_multiplicity)));
    }

    {
        const RootReport r = analyze(w_pmn(11, 11), true);
        bool ok = r.nonreal_approx && r.nonreal_approx->size() == 2;
        std::ostringstream detail;
        if (ok) {
            for (const auto& z : *r.nonreal_approx) {
                ok = ok && std::abs(z.real() - -0.10902) <= 1e-4 && std::abs(std::abs(z.imag()) - 0.01308) <= 1e-4;
                detail << z.real() << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << "i  ";
            }
            ok = ok && ((*r.nonreal_approx)[0].imag() > 0) != ((*r.nonreal_approx)[1].imag() > 0);
        }
        out.push_back(check("W(P_{11,11}) non-real pair ~ -0.10902 +- 0.01308i", ok, detail.str()));
    }

    {
        bool ok = true;
        std::string detail;
        for (int p = 1; p <= 10 && ok; ++p) {
            const IntPolynomial a = eulerian_polynomial(p);
            if (p <= 8 && a != w_polynomial_enumerative(make_antichain(p))) {
                ok = false;
                detail = "enumeration mismatch at p=" + std::to_string(p);
            } else if (!is_real_rooted(a).real_rooted) {
                ok = false;
                detail = "not real-rooted at p=" + std::to_string(p);
            }
        }
        out.push_back(check("Eulerian polynomials: enumeration p <= 8, real-rooted p <= 10", ok, detail));
    }
    return out;
}

} // namespace wpoly
