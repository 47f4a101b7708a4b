"""Exact moments: Wick sums, genus expansions, and the index-sum oracle."""

from fractions import Fraction

import pytest

from annular.moments import (
    DEFAULT_ORDER_CAPS,
    Ensemble,
    correction_coefficient,
    genus_expansion_moment,
    wick_moment,
    wick_oracle_smallN,
)
from annular.polynomial import MomentPolynomial
from annular.streams import CapExceeded, EnumerationBudget

from oracles import ref_catalan, ref_lagrange_coefficients, ref_narayana


def poly(coeffs):
    return MomentPolynomial.from_coefficients(coeffs)


# ---------------------------------------------------------------------------
# ensemble tag
# ---------------------------------------------------------------------------

def test_ensemble_parse_and_properties():
    ens = Ensemble.parse("gue")
    assert ens.kind == "GUE"
    assert ens.is_gaussian and ens.is_complex and not ens.is_laguerre
    loe = Ensemble("LOE")
    assert loe.is_laguerre and not loe.is_complex
    assert Ensemble.parse(loe) is loe
    with pytest.raises(ValueError):
        Ensemble("WISHART")


# ---------------------------------------------------------------------------
# pinned exact polynomials
# ---------------------------------------------------------------------------

def test_gue_small_moments():
    assert wick_moment("GUE", 2) == poly({(2, 0): Fraction(1, 2)})
    assert wick_moment("GUE", 4) == poly(
        {(3, 0): Fraction(1, 2), (1, 0): Fraction(1, 4)}
    )


def test_goe_small_moments():
    assert wick_moment("GOE", 2) == poly(
        {(2, 0): Fraction(1, 4), (1, 0): Fraction(1, 4)}
    )
    assert wick_moment("GOE", 4) == poly(
        {(3, 0): Fraction(2, 16), (2, 0): Fraction(5, 16), (1, 0): Fraction(5, 16)}
    )


def test_lue_small_moments():
    assert wick_moment("LUE", 1) == poly({(2, 1): 1})
    assert wick_moment("LUE", 2) == poly({(3, 2): 1, (3, 1): 1})


def test_loe_small_moments():
    assert wick_moment("LOE", 1) == poly({(2, 1): Fraction(1, 2)})
    assert wick_moment("LOE", 2) == poly(
        {(3, 2): Fraction(1, 4), (3, 1): Fraction(1, 4), (2, 1): Fraction(1, 4)}
    )


@pytest.mark.parametrize("ensemble", ["GUE", "GOE"])
@pytest.mark.parametrize("n", [1, 3, 5])
def test_odd_gaussian_moments_are_zero(ensemble, n):
    assert wick_moment(ensemble, n).is_zero()
    assert genus_expansion_moment(ensemble, n).is_zero()
    assert wick_oracle_smallN(ensemble, n, 3) == 0


# ---------------------------------------------------------------------------
# cross-method identity (moderate sizes; the full sweep is in acceptance)
# ---------------------------------------------------------------------------

@pytest.mark.parametrize(
    "ensemble,orders",
    [
        ("GUE", (2, 4, 6, 8)),
        ("GOE", (2, 4, 6)),
        ("LUE", (1, 2, 3, 4)),
        ("LOE", (1, 2, 3)),
    ],
)
def test_wick_equals_genus_expansion(ensemble, orders):
    for n in orders:
        assert wick_moment(ensemble, n) == genus_expansion_moment(ensemble, n)


# ---------------------------------------------------------------------------
# oracle agreement (spot checks; the full sweep is in acceptance)
# ---------------------------------------------------------------------------

def test_gaussian_oracle_spot_checks():
    assert wick_oracle_smallN("GOE", 2, 3) == Fraction(12, 4)
    for N in (1, 2, 3):
        assert wick_moment("GUE", 4).evaluate(N) == wick_oracle_smallN("GUE", 4, N)
        assert wick_moment("GOE", 4).evaluate(N) == wick_oracle_smallN("GOE", 4, N)


def test_laguerre_oracle_spot_checks():
    for N, M in ((2, 2), (2, 4), (3, 2)):
        c = Fraction(M, N)
        assert wick_moment("LUE", 2).evaluate(N, c) == wick_oracle_smallN(
            "LUE", 2, N, M
        )
        assert wick_moment("LOE", 2).evaluate(N, c) == wick_oracle_smallN(
            "LOE", 2, N, M
        )


def test_oracle_interpolation_recovers_polynomial():
    points = [(N, wick_oracle_smallN("GUE", 4, N)) for N in range(1, 6)]
    coeffs = ref_lagrange_coefficients(points)
    assert coeffs[3] == Fraction(1, 2)
    assert coeffs[1] == Fraction(1, 4)
    assert coeffs[0] == coeffs[2] == coeffs[4] == 0


def test_oracle_validation():
    with pytest.raises(ValueError):
        wick_oracle_smallN("LUE", 2, 3)  # missing M
    with pytest.raises(ValueError):
        wick_oracle_smallN("GUE", 2, 3, 4)  # M given for a Gaussian ensemble
    with pytest.raises(ValueError):
        wick_oracle_smallN("GUE", 0, 3)
    with pytest.raises(CapExceeded):
        wick_oracle_smallN("GUE", 12, 5)  # 5^12 index tuples is over the cap


# ---------------------------------------------------------------------------
# structural invariants of the expansions
# ---------------------------------------------------------------------------

def test_gue_powers_alternate():
    m8 = wick_moment("GUE", 8)
    assert set(m8.n_powers()) <= {5, 3, 1}
    m6 = wick_moment("GUE", 6)
    assert m6.n_powers() == (4, 2)


def test_goe_has_full_power_ladder():
    m6 = wick_moment("GOE", 6)
    assert m6.n_powers() == (4, 3, 2, 1)


@pytest.mark.parametrize("ensemble,n", [("GUE", 6), ("GOE", 6), ("GUE", 8)])
def test_leading_coefficient_is_catalan(ensemble, n):
    lead = n // 2 + 1
    prefactor = 2 ** (n // 2) if ensemble == "GUE" else 2**n
    coeff = wick_moment(ensemble, n).coefficient(lead, 0)
    assert coeff * prefactor == ref_catalan(n // 2)


def test_gaussian_denominators_are_powers_of_two():
    for ensemble, n in (("GUE", 6), ("GOE", 6)):
        for _, coeff in wick_moment(ensemble, n).terms:
            den = coeff.denominator
            assert den & (den - 1) == 0  # power of two


def test_lue_leading_coefficients_are_narayana():
    for n in (2, 3, 4):
        lead = wick_moment("LUE", n).coefficient(n + 1)
        expected = {(0, p): Fraction(ref_narayana(n, p)) for p in range(1, n + 1)}
        assert lead.coefficients == expected


def test_loe_subleading_matches_twisted_counts():
    # coefficient of N^n: (1/2^n) * sum_p c^p |twisted genus-1 gluings|
    from annular.maps import family_b_tilde_counts

    for n in (2, 3):
        sub = wick_moment("LOE", n).coefficient(n)
        hist = family_b_tilde_counts(n)
        expected = {
            (0, p): Fraction(cnt, 2**n)
            for (k, p), cnt in hist.items()
            if k == 1
        }
        assert sub.coefficients == expected


# ---------------------------------------------------------------------------
# correction coefficients
# ---------------------------------------------------------------------------

def test_correction_coefficient_goe_n4():
    at_n2 = correction_coefficient("GOE", 4, 2)
    assert at_n2.coefficients == {(0, 0): Fraction(5, 16)}
    assert at_n2.coefficient(0, 0) * 2**4 == 5  # twisted genus-1 gluings of ±[4]
    at_n1 = correction_coefficient("GOE", 4, 1)
    assert at_n1.coefficient(0, 0) * 2**4 == 5  # |a1(4)| + |b2(4)| = 1 + 4


def test_correction_coefficient_gue_even_powers_vanish():
    assert correction_coefficient("GUE", 4, 2).is_zero()
    assert correction_coefficient("GUE", 4, 0).is_zero()


def test_correction_coefficient_lue():
    assert correction_coefficient("LUE", 2, 3).coefficients == {
        (0, 2): Fraction(1),
        (0, 1): Fraction(1),
    }


# ---------------------------------------------------------------------------
# caps and budgets
# ---------------------------------------------------------------------------

def test_order_caps_enforced():
    for ensemble, cap in DEFAULT_ORDER_CAPS.items():
        with pytest.raises(CapExceeded):
            wick_moment(ensemble, cap + 1)
        with pytest.raises(CapExceeded):
            genus_expansion_moment(ensemble, cap + 1)


def test_order_cap_override():
    with pytest.raises(CapExceeded):
        wick_moment("GUE", 4, max_order=2)
    assert wick_moment("GUE", 4, max_order=4) == wick_moment("GUE", 4)


def test_invalid_order():
    with pytest.raises(ValueError):
        wick_moment("GUE", 0)


def test_budget_propagates():
    tight = EnumerationBudget(max_elements=2, on_overflow="error")
    with pytest.raises(CapExceeded):
        wick_moment("GUE", 6, budget=tight)
    with pytest.raises(CapExceeded):
        genus_expansion_moment("GOE", 4, budget=tight)
