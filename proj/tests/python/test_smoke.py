from fractions import Fraction

import pytest

import wpoly


def test_example_poset():
    p = wpoly.Poset.pmn(2, 2)
    assert wpoly.linear_extensions(p) == [[1, 3, 2, 4], [1, 3, 4, 2], [3, 1, 2, 4], [3, 1, 4, 2], [3, 4, 1, 2]]
    assert wpoly.w_polynomial(p) == [0, 4, 1]
    assert wpoly.count_linear_extensions(p) == 5


def test_parse_and_errors():
    p = wpoly.Poset.parse("poset 4\ncover 1 2\ncover 3 4\ncover 3 2\n")
    assert p == wpoly.Poset.pmn(2, 2)
    assert wpoly.Poset.parse(p.format()) == p
    with pytest.raises(wpoly.PosetError):
        wpoly.Poset(3, [(1, 2), (2, 1)])
    with pytest.raises(ValueError):
        wpoly.Poset.parse("poset 2\ncover 1 3\n")


def test_budget():
    with pytest.raises(wpoly.BudgetExceeded):
        wpoly.w_polynomial(wpoly.Poset.antichain(14), budget=1000)


def test_closed_forms_match_enumeration():
    assert wpoly.w_pmn(36, 6) == [0, 216, 9450, 142800, 883575, 2261952, 1947792]
    assert wpoly.w_disjoint_chains(3, 4) == wpoly.w_polynomial(wpoly.Poset.disjoint_chains(3, 4))
    assert wpoly.eulerian_polynomial(6) == wpoly.w_polynomial(wpoly.Poset.antichain(6))


def test_analyze():
    report = wpoly.analyze(wpoly.w_pmn(11, 11), approx=True)
    assert report["nonreal_with_multiplicity"] == 2
    assert report["zero_root_multiplicity"] == 1
    assert all(isinstance(lo, Fraction) for lo, _ in report["isolating_intervals"])
    z = report["nonreal_approx"][0]
    assert abs(z.real + 0.10902) < 1e-4 and abs(abs(z.imag) - 0.01308) < 1e-4
    assert wpoly.is_real_rooted(wpoly.w_disjoint_chains(11, 11))
    assert wpoly.is_unimodal(wpoly.w_pmn(11, 11))


def test_scan():
    failures = wpoly.scan("10:12", "9:11", only_failures=True, jobs=2)
    assert [(c["m"], c["n"]) for c in failures] == [(11, 10), (11, 11), (12, 9), (12, 10), (12, 11)]


def test_asymptotics():
    assert wpoly.gamma_factor(4, 2) == Fraction(3, 4)
    assert abs(wpoly.convergence_gap(10, 10) - 0.17787545703347854) < 1e-12
    assert wpoly.near_unit_magnitude(11, 11, Fraction(1, 4))
    j1 = wpoly.first_bessel_zero()
    assert abs(wpoly.eval_bessel_j0(j1)) < 1e-10
    [(lo, hi)] = wpoly.zeros_of_f_truncation(30)
    assert lo < -j1 * j1 / 4 < hi


def test_battery():
    assert all(passed for _, passed, _ in wpoly.reproduction_battery(quick=True))
