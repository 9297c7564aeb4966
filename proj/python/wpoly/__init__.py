"""W-polynomials of naturally labeled posets, with exact real-root certification."""

import json
from fractions import Fraction

from . import _core
from ._core import (
    BudgetExceeded,
    Poset,
    PosetError,
    eval_bessel_j0,
    eval_f_series,
    first_bessel_zero,
    linear_extensions,
)

__all__ = [
    "BudgetExceeded",
    "Poset",
    "PosetError",
    "analyze",
    "convergence_gap",
    "count_linear_extensions",
    "eulerian_polynomial",
    "eval_bessel_j0",
    "eval_f_series",
    "first_bessel_zero",
    "gamma_factor",
    "is_real_rooted",
    "is_unimodal",
    "linear_extensions",
    "near_unit_magnitude",
    "reproduction_battery",
    "scan",
    "w_disjoint_chains",
    "w_pmn",
    "w_polynomial",
    "zeros_of_f_truncation",
]


def _coeffs(text):
    return [int(c) for c in json.loads(text)["coeffs"]]


def _decode_report(doc):
    doc["isolating_intervals"] = [(Fraction(lo), Fraction(hi)) for lo, hi in doc["isolating_intervals"]]
    if "nonreal_approx" in doc:
        doc["nonreal_approx"] = [complex(re, im) for re, im in doc["nonreal_approx"]]
    return doc


def w_polynomial(poset, budget=100_000_000):
    """Coefficients of W(P, t), lowest degree first, by enumeration."""
    return _coeffs(_core.w_enumerative_json(poset, budget))


def count_linear_extensions(poset):
    return int(_core.count_linear_extensions(poset))


def w_pmn(m, n):
    return _coeffs(_core.w_pmn_json(m, n))


def w_disjoint_chains(m, n):
    return _coeffs(_core.w_disjoint_chains_json(m, n))


def eulerian_polynomial(p):
    return _coeffs(_core.eulerian_json(p))


def analyze(coeffs, approx=False):
    """Exact root census of an integer polynomial given as a coefficient list."""
    return _decode_report(json.loads(_core.analyze_json([str(int(c)) for c in coeffs], approx)))


def is_real_rooted(coeffs):
    return analyze(coeffs)["nonreal_with_multiplicity"] == 0


def is_unimodal(coeffs):
    return _core.is_unimodal([str(int(c)) for c in coeffs])


def scan(m_range="1:12", n_range="1:12", only_failures=False, approx=False, jobs=0):
    """Scan P_{m,n} over the given ranges ("a" or "a:b")."""
    out = []
    for line in _core.scan_json(str(m_range), str(n_range), only_failures, approx, jobs):
        doc = json.loads(line)
        doc["report"] = _decode_report(doc["report"])
        out.append(doc)
    return out


def gamma_factor(n, k):
    return Fraction(_core.gamma_factor(n, k))


def convergence_gap(m, n, a=4, samples=100):
    return _core.convergence_gap(m, n, str(Fraction(a)), samples)


def near_unit_magnitude(m, n, a=4, samples=200):
    return _core.near_unit_magnitude(m, n, str(Fraction(a)), samples)


def zeros_of_f_truncation(K, a=4):
    return [(Fraction(lo), Fraction(hi)) for lo, hi in _core.zeros_of_f_truncation(K, str(Fraction(a)))]


def reproduction_battery(quick=True):
    return _core.reproduction_battery(quick)
