"""Exact Laurent polynomials in the matrix dimension N and the aspect
ratio c.

Spectral moments of the four ensembles are polynomials in N whose
coefficients are rationals (Gaussian cases) or rational polynomials in
the rectangularity parameter c = M/N (Laguerre cases).  All arithmetic
here is exact over :class:`fractions.Fraction`; no floating point ever
enters.  Powers of N may be negative in intermediate expressions (the
expansions are naturally Laurent), while powers of c are nonnegative.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

__all__ = ["MomentPolynomial"]

_Coeffs = Mapping[tuple[int, int], Fraction | int]


def _normalize(items: Iterable[tuple[tuple[int, int], Fraction | int]]):
    acc: dict[tuple[int, int], Fraction] = {}
    for (n_power, c_power), coeff in items:
        if c_power < 0:
            raise ValueError("powers of c must be nonnegative")
        coeff = Fraction(coeff)
        if coeff:
            key = (int(n_power), int(c_power))
            total = acc.get(key, Fraction(0)) + coeff
            if total:
                acc[key] = total
            else:
                acc.pop(key, None)
    # canonical order: N descending, then c descending
    return tuple(
        (key, acc[key]) for key in sorted(acc, key=lambda k: (-k[0], -k[1]))
    )


@dataclass(frozen=True)
class MomentPolynomial:
    """Immutable polynomial with terms coeff · N^a · c^b, exact coefficients.

    ``terms`` is canonically sorted (N descending, c descending) with no
    zero coefficients, so equality and hashing are structural.
    """

    terms: tuple[tuple[tuple[int, int], Fraction], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "terms", _normalize(self.terms))

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls) -> "MomentPolynomial":
        return cls()

    @classmethod
    def from_coefficients(cls, coefficients: _Coeffs) -> "MomentPolynomial":
        return cls(tuple(coefficients.items()))

    @classmethod
    def monomial(
        cls, coeff: Fraction | int, n_power: int = 0, c_power: int = 0
    ) -> "MomentPolynomial":
        return cls((((n_power, c_power), Fraction(coeff)),))

    # -- views ---------------------------------------------------------

    @property
    def coefficients(self) -> dict[tuple[int, int], Fraction]:
        return dict(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, n_power: int, c_power: int | None = None):
        """Coefficient of N^n_power: a Fraction when ``c_power`` is given,
        otherwise the full c-polynomial at that power of N."""
        if c_power is not None:
            return self.coefficients.get((n_power, c_power), Fraction(0))
        return MomentPolynomial(
            tuple(
                ((0, c), coeff)
                for (n, c), coeff in self.terms
                if n == n_power
            )
        )

    def n_powers(self) -> tuple[int, ...]:
        return tuple(sorted({n for (n, _), _ in self.terms}, reverse=True))

    # -- arithmetic ------------------------------------------------------

    def __add__(self, other: "MomentPolynomial") -> "MomentPolynomial":
        if not isinstance(other, MomentPolynomial):
            return NotImplemented
        return MomentPolynomial(self.terms + other.terms)

    def __sub__(self, other: "MomentPolynomial") -> "MomentPolynomial":
        if not isinstance(other, MomentPolynomial):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> "MomentPolynomial":
        return MomentPolynomial(
            tuple((key, -coeff) for key, coeff in self.terms)
        )

    def __mul__(self, other):
        if isinstance(other, MomentPolynomial):
            return MomentPolynomial(
                tuple(
                    ((na + nb, ca + cb), coeff_a * coeff_b)
                    for (na, ca), coeff_a in self.terms
                    for (nb, cb), coeff_b in other.terms
                )
            )
        if isinstance(other, (int, Fraction)):
            return MomentPolynomial(
                tuple((key, coeff * Fraction(other)) for key, coeff in self.terms)
            )
        return NotImplemented

    __rmul__ = __mul__

    def shift(self, n_power: int, c_power: int = 0) -> "MomentPolynomial":
        """Multiply by N^n_power · c^c_power (n_power may be negative)."""
        return MomentPolynomial(
            tuple(((n + n_power, c + c_power), coeff) for (n, c), coeff in self.terms)
        )

    # -- evaluation --------------------------------------------------------

    def evaluate(
        self, N: Fraction | int, c: Fraction | int = 1
    ) -> Fraction:
        """Exact value at rational N (and c); N must be nonzero when
        negative powers are present."""
        N = Fraction(N)
        c = Fraction(c)
        total = Fraction(0)
        for (n_power, c_power), coeff in self.terms:
            total += coeff * N**n_power * c**c_power
        return total

    # -- serialization ---------------------------------------------------

    def to_json_dict(self) -> dict:
        return {
            "terms": [
                {
                    "N": n_power,
                    "c": c_power,
                    "num": str(coeff.numerator),
                    "den": str(coeff.denominator),
                }
                for (n_power, c_power), coeff in self.terms
            ]
        }

    @classmethod
    def from_json_dict(cls, payload: Mapping) -> "MomentPolynomial":
        return cls(
            tuple(
                (
                    (int(term["N"]), int(term["c"])),
                    Fraction(int(term["num"]), int(term["den"])),
                )
                for term in payload["terms"]
            )
        )

    # -- display -------------------------------------------------------

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        bits = []
        for (n_power, c_power), coeff in self.terms:
            factors = []
            if coeff != 1 or (n_power == 0 and c_power == 0):
                factors.append(str(coeff))
            if n_power:
                factors.append("N" if n_power == 1 else f"N^{n_power}")
            if c_power:
                factors.append("c" if c_power == 1 else f"c^{c_power}")
            bits.append("*".join(factors))
        return " + ".join(bits)
