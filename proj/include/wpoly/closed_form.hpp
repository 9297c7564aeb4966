#ifndef WPOLY_CLOSED_FORM_HPP
#define WPOLY_CLOSED_FORM_HPP

#include "wpoly/polynomial.hpp"

namespace wpoly {

/// C(n, k) by running product; zero when k > n.
Integer binomial(unsigned long n, unsigned long k);

/// W of two disjoint chains: sum over k of C(m,k) C(n,k) t^k.
IntPolynomial w_disjoint_chains(int m, int n);

/// W(P_{m,n}) = W(m + n disjoint chains) - 1.
IntPolynomial w_pmn(int m, int n);

/// Eulerian polynomial A_p(t), i.e. W of the antichain on [p].
/// A_1 = 1, A_p = (1 + (p-1)t) A_{p-1} + t(1-t) A'_{p-1}.
IntPolynomial eulerian_polynomial(int p);

/// Coefficients weakly rise then weakly fall. The zero polynomial counts as unimodal.
bool is_unimodal(const IntPolynomial& poly);

} // namespace wpoly

#endif
