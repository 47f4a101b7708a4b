"""Explicit maps between gluing families and non-crossing annular families.

Every moment contribution can be listed two ways: as a gluing of edge
labels around one or two vertices (the ``family_*`` builders in
:mod:`annular.maps`) or as a non-crossing annular object (the families in
:mod:`annular.noncrossing`).  This module holds the conversion maps and
exhaustive verification drivers that check, size by size, that each map
is a bijection between independently constructed sets.

The two code paths share no family-construction logic: the gluing side
filters raw enumeration streams by cycle-count statistics, while the
annular side filters by geometric non-crossing conditions.  Agreement is
therefore a genuine cross-check, and the drivers report any discrepancy
(a non-injective image, an image outside the target family, or a target
member never hit) rather than raising.
"""

from __future__ import annotations

from dataclasses import dataclass

from .frames import tau0
from .maps import (
    family_a,
    family_a_hat,
    family_a_tilde,
    family_b,
    family_b_hat,
    family_b_tilde,
    has_twist,
    hypermap_from_bipartite_nonorientable,
    hypermap_from_bipartite_orientable,
    nonorientable_euler_genus,
)
from .noncrossing import NCFamilyId, family_nc
from .perms import Pairing, Permutation, compose, inverse
from .streams import EnumerationBudget

__all__ = [
    "WITNESS_CAP",
    "BijectionReport",
    "ConjectureRow",
    "phi1",
    "phi1_inverse",
    "phi2",
    "phi2_inverse",
    "phi1_tilde",
    "phi2_tilde",
    "phi1_hat",
    "phi2_hat",
    "verify_phi1",
    "verify_phi2",
    "verify_torus_equality",
    "verify_phi1_tilde",
    "verify_phi2_tilde",
    "verify_a_tilde_equality",
    "verify_phi1_hat",
    "verify_phi2_hat",
    "verify_a_hat_equality",
    "verify_lemma3",
    "conjecture_table",
]

WITNESS_CAP = 100


@dataclass(frozen=True)
class BijectionReport:
    """Outcome of one exhaustive map verification.

    ``verified`` holds exactly when the map is injective, hits every
    member of the target family, and produced no membership failures.
    ``witnesses`` samples (input, image) pairs in cycle notation;
    ``failures`` lists human-readable discrepancies.  Both lists are
    deterministic and capped, so reports are reproducible byte for byte.
    """

    name: str
    n: int
    domain_size: int
    codomain_size: int
    injective: bool
    surjective: bool
    witnesses: tuple[tuple[str, str], ...]
    failures: tuple[str, ...]

    @property
    def verified(self) -> bool:
        return self.injective and self.surjective and not self.failures

    def to_payload(self) -> dict:
        return {
            "name": self.name,
            "n": self.n,
            "domain_size": self.domain_size,
            "codomain_size": self.codomain_size,
            "injective": self.injective,
            "surjective": self.surjective,
            "verified": self.verified,
            "witnesses": [list(w) for w in self.witnesses],
            "failures": list(self.failures),
        }


@dataclass(frozen=True)
class ConjectureRow:
    """One line of the surmised-count table: twisted Euler-genus-1
    bipartite gluings versus graded mirror-symmetric annular pairings."""

    n: int
    p: int
    twisted_count: int
    annular_count: int

    @property
    def equal(self) -> bool:
        return self.twisted_count == self.annular_count

    def to_payload(self) -> dict:
        return {
            "n": self.n,
            "p": self.p,
            "twisted_count": self.twisted_count,
            "annular_count": self.annular_count,
            "equal": self.equal,
        }


# ---------------------------------------------------------------------------
# the maps
# ---------------------------------------------------------------------------

def _glue_with_negation(tau1: Permutation) -> Permutation:
    """Compose a mirror-symmetric gluing with the label-negation pairing."""
    n = tau1.domain.size // 2
    return compose(tau1, tau0(n))


def _require_twisted_member(tau1: Pairing, k: int) -> None:
    labels = tau1.domain.labels()
    if min(labels) >= 0:
        raise ValueError("input must live on a signed domain")
    for x in labels:
        if tau1(x) == -x:
            raise ValueError("input pairs a label with its own negation")
        if tau1(-x) != -tau1(x):
            raise ValueError("input is not mirror-symmetric")
    if not has_twist(tau1):
        raise ValueError("input has no twisted pair")
    if nonorientable_euler_genus(tau1) != k:
        raise ValueError(f"input does not have Euler genus {k}")


def phi1(tau1: Pairing) -> Permutation:
    """Send a twisted Euler-genus-1 gluing to its annular pairing.

    The image is mirror-symmetric and non-crossing with respect to the
    two-cycle annular frame; the inverse map is :func:`phi1_inverse`.
    """
    _require_twisted_member(tau1, 1)
    return _glue_with_negation(tau1)


def phi1_inverse(pi: Permutation) -> Permutation:
    """Recover the gluing from its annular pairing (negation is an involution)."""
    return _glue_with_negation(pi)


def phi2(tau1: Pairing) -> Permutation:
    """Send a twisted Euler-genus-2 gluing to its Klein-frame annular pairing."""
    _require_twisted_member(tau1, 2)
    return _glue_with_negation(tau1)


def phi2_inverse(pi: Permutation) -> Permutation:
    return _glue_with_negation(pi)


def phi1_tilde(tau1: Pairing) -> Permutation:
    """Bipartite graded variant of :func:`phi1`; same gluing formula."""
    return _glue_with_negation(tau1)


def phi2_tilde(tau1: Pairing) -> Permutation:
    """Bipartite graded variant of :func:`phi2`; same gluing formula."""
    return _glue_with_negation(tau1)


def phi1_hat(tau1: Permutation) -> Permutation:
    """Hypermap variant: on mirror-symmetric permutations, conjugating by
    label negation equals inversion, so the image is simply the inverse."""
    return inverse(tau1)


def phi2_hat(tau1: Permutation) -> Permutation:
    return inverse(tau1)


# ---------------------------------------------------------------------------
# verification core
# ---------------------------------------------------------------------------

def _verify(
    name: str,
    n: int,
    domain,
    codomain,
    fn,
    *,
    witness_cap: int | None = WITNESS_CAP,
) -> BijectionReport:
    """Exhaustively map ``domain`` through ``fn`` and compare against
    ``codomain`` two-sidedly.  Discrepancies become report failures."""
    domain = tuple(domain)
    codomain_set = frozenset(codomain)
    witnesses: list[tuple[str, str]] = []
    failures: list[str] = []
    hit: dict[Permutation, Permutation] = {}
    injective = True
    for t in domain:
        image = fn(t)
        if witness_cap is None or len(witnesses) < witness_cap:
            witnesses.append((t.cycle_string(), image.cycle_string()))
        previous = hit.get(image)
        if previous is not None:
            injective = False
            failures.append(
                f"not injective: {previous.cycle_string()} and "
                f"{t.cycle_string()} share the image {image.cycle_string()}"
            )
        else:
            hit[image] = t
        if image not in codomain_set:
            failures.append(
                f"image {image.cycle_string()} of {t.cycle_string()} "
                "lies outside the target family"
            )
    missed = sorted(codomain_set - set(hit), key=lambda p: p.sort_key())
    for pi in missed:
        failures.append(f"target member {pi.cycle_string()} is never hit")
    surjective = not missed
    if witness_cap is not None:
        failures = failures[:witness_cap]
    return BijectionReport(
        name=name,
        n=n,
        domain_size=len(domain),
        codomain_size=len(codomain_set),
        injective=injective,
        surjective=surjective,
        witnesses=tuple(witnesses),
        failures=tuple(failures),
    )


def _identity(x: Permutation) -> Permutation:
    return x


def _require_even(n: int) -> None:
    if n < 2 or n % 2:
        raise ValueError("n must be a positive even integer")


# ---------------------------------------------------------------------------
# ungraded pairing-level drivers
# ---------------------------------------------------------------------------

def verify_phi1(
    n: int,
    *,
    budget: EnumerationBudget | None = None,
    witness_cap: int | None = WITNESS_CAP,
) -> BijectionReport:
    """Twisted Euler-genus-1 gluings of ±[n] versus mirror-symmetric
    non-crossing annular pairings, via gluing with label negation."""
    _require_even(n)
    domain = family_b(n, 1, budget=budget)
    codomain = family_nc(NCFamilyId("NC2delta", n), budget=budget)
    return _verify(
        "phi1", n, domain, codomain, _glue_with_negation, witness_cap=witness_cap
    )


def verify_phi2(
    n: int,
    *,
    budget: EnumerationBudget | None = None,
    witness_cap: int | None = WITNESS_CAP,
) -> BijectionReport:
    """Twisted Euler-genus-2 gluings of ±[n] versus Klein-frame
    non-crossing annular pairings."""
    _require_even(n)
    domain = family_b(n, 2, budget=budget)
    codomain = family_nc(NCFamilyId("NC2K", n), budget=budget)
    return _verify(
        "phi2", n, domain, codomain, _glue_with_negation, witness_cap=witness_cap
    )


def verify_torus_equality(
    n: int,
    *,
    budget: EnumerationBudget | None = None,
    witness_cap: int | None = WITNESS_CAP,
) -> BijectionReport:
    """Genus-1 gluings of [n] versus torus-frame non-crossing annular
    pairings — claimed equal as sets, so the map is the identity."""
    _require_even(n)
    left = family_a(n, 1, budget=budget)
    right = family_nc(NCFamilyId("NC2T", n), budget=budget)
    return _verify("torus-eq", n, left, right, _identity, witness_cap=witness_cap)


# ---------------------------------------------------------------------------
# graded bipartite pairing-level drivers (families on ±[2n] / [2n])
# ---------------------------------------------------------------------------

def verify_phi1_tilde(
    n: int,
    p: int,
    *,
    budget: EnumerationBudget | None = None,
    witness_cap: int | None = WITNESS_CAP,
) -> BijectionReport:
    domain = family_b_tilde(n, 1, p, budget=budget)
    codomain = family_nc(NCFamilyId("NC2delta_bip", 2 * n, p), budget=budget)
    return _verify(
        f"phi1-tilde(p={p})",
        n,
        domain,
        codomain,
        _glue_with_negation,
        witness_cap=witness_cap,
    )


def verify_phi2_tilde(
    n: int,
    p: int,
    *,
    budget: EnumerationBudget | None = None,
    witness_cap: int | None = WITNESS_CAP,
) -> BijectionReport:
    domain = family_b_tilde(n, 2, p, budget=budget)
    codomain = family_nc(NCFamilyId("NC2K_bip", 2 * n, p), budget=budget)
    return _verify(
        f"phi2-tilde(p={p})",
        n,
        domain,
        codomain,
        _glue_with_negation,
        witness_cap=witness_cap,
    )


def verify_a_tilde_equality(
    n: int,
    p: int,
    *,
    budget: EnumerationBudget | None = None,
    witness_cap: int | None = WITNESS_CAP,
) -> BijectionReport:
    left = family_a_tilde(n, 1, p, budget=budget)
    right = family_nc(NCFamilyId("NC2T_bip", 2 * n, p), budget=budget)
    return _verify(
        f"a-tilde-eq(p={p})", n, left, right, _identity, witness_cap=witness_cap
    )


# ---------------------------------------------------------------------------
# graded permutation-level drivers (families on ±[n] / [n])
# ---------------------------------------------------------------------------

def verify_phi1_hat(
    n: int,
    p: int,
    *,
    budget: EnumerationBudget | None = None,
    witness_cap: int | None = WITNESS_CAP,
) -> BijectionReport:
    domain = family_b_hat(n, 1, p, budget=budget)
    codomain = family_nc(NCFamilyId("NCdelta_p", n, p), budget=budget)
    return _verify(
        f"phi1-hat(p={p})", n, domain, codomain, phi1_hat, witness_cap=witness_cap
    )


def verify_phi2_hat(
    n: int,
    p: int,
    *,
    budget: EnumerationBudget | None = None,
    witness_cap: int | None = WITNESS_CAP,
) -> BijectionReport:
    domain = family_b_hat(n, 2, p, budget=budget)
    codomain = family_nc(NCFamilyId("NCK_p", n, p), budget=budget)
    return _verify(
        f"phi2-hat(p={p})", n, domain, codomain, phi2_hat, witness_cap=witness_cap
    )


def verify_a_hat_equality(
    n: int,
    p: int,
    *,
    budget: EnumerationBudget | None = None,
    witness_cap: int | None = WITNESS_CAP,
) -> BijectionReport:
    left = family_a_hat(n, 1, p, budget=budget)
    right = family_nc(NCFamilyId("NCT_p", n, p), budget=budget)
    return _verify(
        f"a-hat-eq(p={p})", n, left, right, _identity, witness_cap=witness_cap
    )


# ---------------------------------------------------------------------------
# reduction drivers (bipartite gluings on ±[2n]/[2n] versus hypermaps on ±[n]/[n])
# ---------------------------------------------------------------------------

def verify_lemma3(
    n: int,
    *,
    budget: EnumerationBudget | None = None,
    witness_cap: int | None = WITNESS_CAP,
) -> tuple[BijectionReport, ...]:
    """Check that the half-edge reductions carry each graded bipartite
    gluing family bijectively onto the matching hypermap family.

    One report per (grade, part-count) key at which either side is
    nonempty, orientable cases first; a key where only one side is
    populated yields a failing report rather than an error.
    """
    reports: list[BijectionReport] = []
    for g in range(0, n // 2 + 1):
        for p in range(1, n + 1):
            domain = family_a_tilde(n, g, p, budget=budget)
            codomain = family_a_hat(n, g, p, budget=budget)
            if not domain and not codomain:
                continue
            reports.append(
                _verify(
                    f"lemma3-orientable(g={g},p={p})",
                    n,
                    domain,
                    codomain,
                    hypermap_from_bipartite_orientable,
                    witness_cap=witness_cap,
                )
            )
    for k in range(1, n + 1):
        for p in range(1, n + 1):
            domain = family_b_tilde(n, k, p, budget=budget)
            codomain = family_b_hat(n, k, p, budget=budget)
            if not domain and not codomain:
                continue
            reports.append(
                _verify(
                    f"lemma3-nonorientable(k={k},p={p})",
                    n,
                    domain,
                    codomain,
                    hypermap_from_bipartite_nonorientable,
                    witness_cap=witness_cap,
                )
            )
    return tuple(reports)


# ---------------------------------------------------------------------------
# surmised count identity (evidence only, never pass/fail)
# ---------------------------------------------------------------------------

def conjecture_table(
    max_n: int = 3,
    *,
    budget: EnumerationBudget | None = None,
) -> tuple[ConjectureRow, ...]:
    """Tabulate |twisted Euler-genus-1 bipartite gluings of ±[2n], grade p|
    against |graded mirror-symmetric annular pairings of ±[2n]| for
    n ≤ max_n and every p.  The equality is only surmised, so rows carry
    an ``equal`` flag and no verdict."""
    rows: list[ConjectureRow] = []
    for n in range(1, max_n + 1):
        for p in range(1, n + 1):
            twisted = len(family_b_tilde(n, 1, p, budget=budget))
            annular = len(family_nc(NCFamilyId("NC2delta_bip", 2 * n, p), budget=budget))
            rows.append(ConjectureRow(n=n, p=p, twisted_count=twisted, annular_count=annular))
    return tuple(rows)
