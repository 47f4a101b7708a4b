"""One-vertex gluing families: orientable, non-orientable, bipartite, hypermap.

A pairing of [n] glues the sides of an n-gon into an orientable surface
whose genus g is read off Euler's formula: the face count is
#(π⁻¹1ₙ) = n/2 + 1 − 2g.  The family ``a(n, g)`` collects the pairings
of each genus.

Non-orientable gluings are encoded on ±[n]: a mirror-symmetric pairing
τ₁ (no (r,−r) pair) describes an n-gon whose sides are glued pairwise,
Möbius-twisted exactly on the pairs {a, b} with τ₁(a) = b > 0.  The
boundary walk is τ₂τ₁ (two cycles per boundary component), and the
Euler genus k — 2 minus the Euler characteristic — satisfies
#(τ₂τ₁) = n + 2 − 2k.  The family ``b(n, k)`` collects the gluings
with at least one twist; twist-free gluings are orientable and are
counted by ``a`` instead.

Bipartite refinements (for Gram-matrix ensembles) restrict to gluings
whose half-edge colouring alternates: on [2n] every pair joins an even
label to an odd one; on ±[2n] the black set B(n) = odd positives ∪
even negatives is preserved.  The grade p counts white vertices: the
cycles of the face walk supported on odd labels (orientable) or half
the cycles of τ₂τ₁ supported on the white labels (non-orientable).

Hypermap forms shrink the white vertices to points: an orientable
bipartite pairing of [2n] becomes a permutation of [n]; a
non-orientable bipartite gluing of ±[2n] becomes a mirror-symmetric
permutation of ±[n].  ``hypermap_*`` implement these reductions, and
``family_a_hat`` / ``family_b_hat`` enumerate the reduced families
directly from their own definitions — the test suite checks that the
reductions are grade-preserving bijections.
"""

from __future__ import annotations

from .frames import annulus_cycle, full_cycle, tau0, tau2
from .perms import (
    Pairing,
    Permutation,
    compose,
    inverse,
    num_cycles,
    restricted_cycle_count,
    signed_ground,
    unsigned_ground,
)
from .streams import (
    EnumerationBudget,
    pairings,
    permutations,
    signed_symmetric_pairings,
    signed_symmetric_permutations,
)

__all__ = [
    "orientable_genus",
    "nonorientable_euler_genus",
    "has_twist",
    "has_hat_twist",
    "family_a",
    "family_b",
    "family_a_counts",
    "family_b_counts",
    "black_labels",
    "white_labels",
    "is_bipartite_pairing",
    "is_bipartite_signed_pairing",
    "orientable_white_grade",
    "nonorientable_white_grade",
    "family_a_tilde",
    "family_b_tilde",
    "family_a_tilde_counts",
    "family_b_tilde_counts",
    "family_a_hat",
    "family_b_hat",
    "hypermap_from_bipartite_orientable",
    "hypermap_from_bipartite_nonorientable",
]


class MonochromaticityError(AssertionError):
    """A boundary-walk cycle mixed black and white labels.

    Cannot happen for genuinely bipartite gluings; raising instead of
    silently counting guards against calling a graded operation on an
    object that is not actually bipartite.
    """


# ---------------------------------------------------------------------------
# genus / Euler genus
# ---------------------------------------------------------------------------

def orientable_genus(pi: Pairing) -> int:
    """Genus of the orientable one-vertex gluing encoded by a pairing of [n]."""
    n = pi.domain.n
    faces = num_cycles(compose(inverse(pi), full_cycle(n)))
    twice_genus = n // 2 + 1 - faces
    if twice_genus < 0 or twice_genus % 2:
        raise ValueError(
            f"impossible face count {faces} for a one-vertex gluing of [{n}]"
        )
    return twice_genus // 2


def nonorientable_euler_genus(tau1: Pairing) -> int:
    """Euler genus k of the gluing encoded by a mirror-symmetric pairing of ±[n].

    #(τ₂τ₁) = n + 2 − 2k; k = 1 is the projective plane, k = 2 the
    Klein bottle.  Only meaningful for mirror-symmetric pairings with
    at least one twist (otherwise the gluing is orientable and the
    right invariant is :func:`orientable_genus` of its positive part).
    """
    n = tau1.domain.n
    boundary = num_cycles(compose(tau2(n), tau1))
    twice_k = n + 2 - boundary
    if twice_k < 0 or twice_k % 2:
        raise ValueError(
            f"impossible boundary count {boundary} for a gluing of ±[{n}]"
        )
    return twice_k // 2


def has_twist(tau1: Permutation) -> bool:
    """True iff some positive label maps to a positive label (a Möbius pair)."""
    n = tau1.domain.n
    return any(tau1(a) > 0 for a in range(1, n + 1))


def has_hat_twist(tau1: Permutation) -> bool:
    """Hypermap twist condition: some positive label maps to a negative one."""
    n = tau1.domain.n
    return any(tau1(a) < 0 for a in range(1, n + 1))


# ---------------------------------------------------------------------------
# plain families a(n, g), b(n, k)
# ---------------------------------------------------------------------------

def family_a(
    n: int,
    g: int,
    *,
    cap: int | None = None,
    budget: EnumerationBudget | None = None,
) -> tuple[Pairing, ...]:
    """Pairings of [n] of genus g, in stream order."""
    if n % 2:
        return ()
    return tuple(
        p for p in pairings(n, cap=cap, budget=budget) if orientable_genus(p) == g
    )


def family_a_counts(
    n: int,
    *,
    cap: int | None = None,
    budget: EnumerationBudget | None = None,
) -> dict[int, int]:
    """Histogram g -> |a(n, g)| in one pass over the pairing stream."""
    counts: dict[int, int] = {}
    for p in pairings(n, cap=cap, budget=budget):
        g = orientable_genus(p)
        counts[g] = counts.get(g, 0) + 1
    return counts


def family_b(
    n: int,
    k: int,
    *,
    cap: int | None = None,
    budget: EnumerationBudget | None = None,
) -> tuple[Pairing, ...]:
    """Twisted mirror-symmetric gluings of ±[n] of Euler genus k ≥ 1."""
    if k < 1:
        raise ValueError("Euler genus k must be >= 1 for twisted gluings")
    return tuple(
        t
        for t in signed_symmetric_pairings(n, cap=cap, budget=budget)
        if has_twist(t) and nonorientable_euler_genus(t) == k
    )


def family_b_counts(
    n: int,
    *,
    cap: int | None = None,
    budget: EnumerationBudget | None = None,
) -> dict[int, int]:
    """Histogram k -> |b(n, k)| over the twisted mirror-symmetric gluings."""
    counts: dict[int, int] = {}
    for t in signed_symmetric_pairings(n, cap=cap, budget=budget):
        if not has_twist(t):
            continue
        k = nonorientable_euler_genus(t)
        counts[k] = counts.get(k, 0) + 1
    return counts


# ---------------------------------------------------------------------------
# bipartite structure
# ---------------------------------------------------------------------------

def black_labels(m: int) -> tuple[int, ...]:
    """B(m) = odd positives ∪ even negatives inside ±[2m], ascending."""
    return tuple(sorted(list(range(1, 2 * m, 2)) + [-2 * i for i in range(1, m + 1)]))


def white_labels(m: int) -> tuple[int, ...]:
    """W(m) = even positives ∪ odd negatives inside ±[2m], ascending."""
    return tuple(sorted(list(range(2, 2 * m + 1, 2)) + [1 - 2 * i for i in range(1, m + 1)]))


def is_bipartite_pairing(pi: Pairing) -> bool:
    """On [2n]: every pair joins an even label with an odd label."""
    size = pi.domain.n
    return all(pi(a) % 2 for a in range(2, size + 1, 2))


def is_bipartite_signed_pairing(tau1: Permutation) -> bool:
    """On ±[2n]: the black set B(n) is carried to itself."""
    m = tau1.domain.n // 2
    black = set(black_labels(m))
    return all(tau1(b) in black for b in black)


def _assert_monochromatic(perm: Permutation, black: set[int], white: set[int]) -> None:
    for cyc in perm.cycles():
        in_black = sum(1 for x in cyc if x in black)
        if in_black not in (0, len(cyc)):
            raise MonochromaticityError(
                f"cycle {cyc} mixes colour classes; object is not bipartite"
            )


def orientable_white_grade(pi: Pairing) -> int:
    """p = number of odd-supported face cycles of a bipartite pairing of [2n]."""
    size = pi.domain.n
    faces = compose(inverse(pi), full_cycle(size))
    odds = set(range(1, size, 2))
    evens = set(range(2, size + 1, 2))
    _assert_monochromatic(faces, odds, evens)
    return restricted_cycle_count(faces, odds)


def nonorientable_white_grade(tau1: Pairing) -> int:
    """p with 2p = number of white-supported boundary cycles on ±[2n]."""
    m = tau1.domain.n // 2
    walk = compose(tau2(2 * m), tau1)
    black = set(black_labels(m))
    white = set(white_labels(m))
    _assert_monochromatic(walk, black, white)
    white_cycles = restricted_cycle_count(walk, white)
    if white_cycles % 2:
        raise ValueError(
            f"white boundary count {white_cycles} is odd; "
            "expected mirror-paired boundary walks"
        )
    return white_cycles // 2


# ---------------------------------------------------------------------------
# bipartite families ã(n, g, p), b̃(n, k, p)  — on [2n] / ±[2n]
# ---------------------------------------------------------------------------

def family_a_tilde(
    n: int,
    g: int,
    p: int,
    *,
    cap: int | None = None,
    budget: EnumerationBudget | None = None,
) -> tuple[Pairing, ...]:
    """Bipartite pairings of [2n] with genus g and white grade p."""
    out = []
    for pi in pairings(2 * n, cap=cap, budget=budget):
        if not is_bipartite_pairing(pi):
            continue
        if orientable_genus(pi) == g and orientable_white_grade(pi) == p:
            out.append(pi)
    return tuple(out)


def family_a_tilde_counts(
    n: int,
    *,
    cap: int | None = None,
    budget: EnumerationBudget | None = None,
) -> dict[tuple[int, int], int]:
    """Histogram (g, p) -> |ã(n, g, p)| in one pass."""
    counts: dict[tuple[int, int], int] = {}
    for pi in pairings(2 * n, cap=cap, budget=budget):
        if not is_bipartite_pairing(pi):
            continue
        key = (orientable_genus(pi), orientable_white_grade(pi))
        counts[key] = counts.get(key, 0) + 1
    return counts


def family_b_tilde(
    n: int,
    k: int,
    p: int,
    *,
    cap: int | None = None,
    budget: EnumerationBudget | None = None,
) -> tuple[Pairing, ...]:
    """Bipartite twisted mirror-symmetric gluings of ±[2n], Euler genus k, grade p."""
    if k < 1:
        raise ValueError("Euler genus k must be >= 1 for twisted gluings")
    out = []
    for t in signed_symmetric_pairings(2 * n, cap=cap, budget=budget):
        if not is_bipartite_signed_pairing(t) or not has_twist(t):
            continue
        if nonorientable_euler_genus(t) == k and nonorientable_white_grade(t) == p:
            out.append(t)
    return tuple(out)


def family_b_tilde_counts(
    n: int,
    *,
    cap: int | None = None,
    budget: EnumerationBudget | None = None,
) -> dict[tuple[int, int], int]:
    """Histogram (k, p) -> |b̃(n, k, p)| in one pass."""
    counts: dict[tuple[int, int], int] = {}
    for t in signed_symmetric_pairings(2 * n, cap=cap, budget=budget):
        if not is_bipartite_signed_pairing(t) or not has_twist(t):
            continue
        key = (nonorientable_euler_genus(t), nonorientable_white_grade(t))
        counts[key] = counts.get(key, 0) + 1
    return counts


# ---------------------------------------------------------------------------
# hypermap families â(n, g, p), b̂(n, k, p)  — on [n] / ±[n]
# ---------------------------------------------------------------------------

def family_a_hat(
    n: int,
    g: int,
    p: int,
    *,
    cap: int | None = None,
    budget: EnumerationBudget | None = None,
) -> tuple[Permutation, ...]:
    """Permutations of [n] with #(π) = p and #(π⁻¹1ₙ) = n − p + 1 − 2g."""
    gamma = full_cycle(n)
    want_faces = n - p + 1 - 2 * g
    out = []
    for pi in permutations(n, cap=cap, budget=budget):
        if num_cycles(pi) != p:
            continue
        if num_cycles(compose(inverse(pi), gamma)) == want_faces:
            out.append(pi)
    return tuple(out)


def family_b_hat(
    n: int,
    k: int,
    p: int,
    *,
    cap: int | None = None,
    budget: EnumerationBudget | None = None,
) -> tuple[Permutation, ...]:
    """Mirror-symmetric permutations of ±[n] encoding twisted hypermaps.

    Filter of the mirror-symmetric permutation stream by
    #(τ₁) = 2p, #(1̃ₙτ₁) = 2(n − p + 1 − k), and the hypermap twist
    condition (some positive label maps to a negative one).
    """
    if k < 1:
        raise ValueError("Euler genus k must be >= 1 for twisted hypermaps")
    gamma = annulus_cycle(n)
    want_boundary = 2 * (n - p + 1 - k)
    out = []
    for t in signed_symmetric_permutations(n, cap=cap, budget=budget):
        if num_cycles(t) != 2 * p:
            continue
        if not has_hat_twist(t):
            continue
        if num_cycles(compose(gamma, t)) == want_boundary:
            out.append(t)
    return tuple(out)


# ---------------------------------------------------------------------------
# reductions (bipartite gluing -> hypermap)
# ---------------------------------------------------------------------------

def hypermap_from_bipartite_orientable(pi: Pairing) -> Permutation:
    """Shrink white vertices of a bipartite pairing of [2n]: π'(u) = (π(2u)+1)/2."""
    if not is_bipartite_pairing(pi):
        raise ValueError("reduction requires a bipartite pairing of [2n]")
    n = pi.domain.n // 2
    ground = unsigned_ground(n)
    image = []
    for u in range(1, n + 1):
        odd = pi(2 * u)
        image.append(ground.index((odd + 1) // 2))
    return Permutation(ground, image)


def _white_relabel(m: int) -> dict[int, int]:
    """h: W(m) -> ±[m]; odd |w| to (|w|+1)/2, even |w| to −|w|/2."""
    h = {}
    for w in white_labels(m):
        a = abs(w)
        h[w] = (a + 1) // 2 if a % 2 else -(a // 2)
    return h


def hypermap_from_bipartite_nonorientable(tau1: Pairing) -> Permutation:
    """Shrink white vertices of a bipartite gluing of ±[2n] to a map on ±[n].

    The white half of the boundary walk τ₂τ₁ is carried along the
    relabelling h(w) = (|w|+1)/2 for odd |w|, −|w|/2 for even |w|,
    which is a bijection from W(n) onto ±[n].
    """
    if not is_bipartite_signed_pairing(tau1):
        raise ValueError("reduction requires a bipartite gluing of ±[2n]")
    m = tau1.domain.n // 2
    walk = compose(tau2(2 * m), tau1)
    h = _white_relabel(m)
    ground = signed_ground(m)
    mapping = {h[w]: h[walk(w)] for w in h}
    return Permutation.from_mapping(ground, mapping)
