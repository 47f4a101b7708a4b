"""Canonical permutations and the reference frames for non-crossing tests.

The package measures "non-crossing" against a small zoo of reference
permutations ("frames"), each describing how boundary points are wired
on a surface:

* disk: the full cycle 1ₙ = (1, 2, ..., n) on [n];
* annulus: 1̃ₙ = (1, ..., n)(−n, ..., −1) on ±[n], which factors as
  τ₂·τ₀ for the canonical involutions below;
* torus: 1ₙ(u−1, v) = (u, ..., v)(1, ..., u−1, v+1, ..., n) on [n],
  for 1 ≤ u < v < n, with (0, v) ≡ (n, v) covering u = 1;
* Klein bottle: 1̃ₙ,ᵤ,ᵥ = 1̃ₙ·(−u, v−1)·(−v, u−1) on ±[n] for
  1 ≤ u < v ≤ n, with (−v, 0) ≡ (−v, n) and (v, 0) ≡ (v, −n)
  covering u = 1.

The two canonical involutions on ±[n] are τ₀ = (1,−1)(2,−2)···(n,−n)
(mirror) and τ₂ = (−1,2)(−2,3)···(−n,1) (successor gluing); boundary
walks of one-vertex gluings are cycles of τ₂τ₁.

The torus and Klein constructors verify on construction that the
product formula produces exactly the displayed two-cycle form:

* torus: (u, ..., v)(1, ..., u−1, v+1, ..., n);
* Klein: (u, ..., v−1, 1−u, ..., −1, −n, ..., −v)
         (v, ..., n, 1, ..., u−1, 1−v, ..., −u),
  where integer ranges step by +1 and empty ranges vanish (so u = 1
  drops "1, ..., u−1" and "1−u, ..., −1", and v = n drops "−n, ..., −v"
  to the single label −n and "v, ..., n" to the single label n).

The Klein family definition is a union over frames with v up to n:
frames with v = n are non-degenerate (still two cycles) and are
required for the family to match the twisted gluings it counts, so the
constructor accepts v ≤ n.  The torus frame at v = n would merge the
two cycles into one, and the toroidal family never needs it, so the
torus constructor rejects v = n.
"""

from __future__ import annotations

from dataclasses import dataclass

from .perms import Permutation, compose, signed_ground, unsigned_ground

__all__ = [
    "tau0",
    "tau2",
    "full_cycle",
    "annulus_cycle",
    "AnnularFrame",
    "disk_frame",
    "annulus_frame",
    "torus_frame",
    "klein_frame",
]


def tau0(n: int) -> Permutation:
    """The mirror involution (1,−1)(2,−2)···(n,−n) on ±[n]."""
    g = signed_ground(n)
    return Permutation.from_cycles(g, [(i, -i) for i in range(1, n + 1)])


def tau2(n: int) -> Permutation:
    """The successor gluing (−1,2)(−2,3)···(−n,1) on ±[n]."""
    g = signed_ground(n)
    return Permutation.from_cycles(
        g, [(-i, i + 1 if i < n else 1) for i in range(1, n + 1)]
    )


def full_cycle(n: int) -> Permutation:
    """1ₙ = (1, 2, ..., n) on [n]."""
    return Permutation.from_cycles(unsigned_ground(n), [tuple(range(1, n + 1))])


def annulus_cycle(n: int) -> Permutation:
    """1̃ₙ = (1, ..., n)(−n, ..., −1) on ±[n]; equals τ₂·τ₀."""
    g = signed_ground(n)
    gamma = Permutation.from_cycles(
        g,
        [tuple(range(1, n + 1)), tuple(range(-n, 0))],
    )
    assert gamma == compose(tau2(n), tau0(n))
    return gamma


@dataclass(frozen=True)
class AnnularFrame:
    """A reference permutation γ together with its surface descriptor.

    ``kind`` is one of ``disk``, ``annulus``, ``torus``, ``klein``;
    ``u``/``v`` are the cut parameters for the latter two, else None.
    """

    kind: str
    n: int
    gamma: Permutation
    u: int | None = None
    v: int | None = None

    def describe(self) -> str:
        if self.u is None:
            return f"{self.kind}(n={self.n})"
        return f"{self.kind}(n={self.n},u={self.u},v={self.v})"


def disk_frame(n: int) -> AnnularFrame:
    """Frame for classical non-crossing objects on [n]."""
    return AnnularFrame("disk", n, full_cycle(n))


def annulus_frame(n: int) -> AnnularFrame:
    """Frame for annular objects on ±[n] (two concentric circles)."""
    return AnnularFrame("annulus", n, annulus_cycle(n))


def torus_frame(n: int, u: int, v: int) -> AnnularFrame:
    """The annulus obtained by cutting a torus gluing along (u−1, v).

    γ = 1ₙ·(u−1, v) = (u, ..., v)(1, ..., u−1, v+1, ..., n) on [n],
    where (0, v) ≡ (n, v) handles u = 1.  Requires 1 ≤ u < v < n.
    """
    if not (1 <= u < v < n):
        raise ValueError(
            f"torus frame requires 1 <= u < v < n, got (n,u,v)=({n},{u},{v})"
        )
    g = unsigned_ground(n)
    cut = u - 1 if u > 1 else n  # (0,v) ≡ (n,v)
    gamma = compose(full_cycle(n), Permutation.from_cycles(g, [(cut, v)]))
    displayed = Permutation.from_cycles(
        g,
        [
            tuple(range(u, v + 1)),
            tuple(range(1, u)) + tuple(range(v + 1, n + 1)),
        ],
    )
    assert gamma == displayed, "torus frame product and displayed forms differ"
    return AnnularFrame("torus", n, gamma, u, v)


def klein_frame(n: int, u: int, v: int) -> AnnularFrame:
    """The annulus obtained by cutting a Klein-bottle gluing at (u, v).

    γ = 1̃ₙ·(−u, v−1)·(−v, u−1) on ±[n], with (−v, 0) ≡ (−v, n) and
    (v, 0) ≡ (v, −n) handling u = 1.  Requires 1 ≤ u < v ≤ n.
    """
    if not (1 <= u < v <= n):
        raise ValueError(
            f"klein frame requires 1 <= u < v <= n, got (n,u,v)=({n},{u},{v})"
        )
    g = signed_ground(n)
    # (−u, v−1) never needs a convention: u < v forces v−1 ≥ 1.
    swap1 = Permutation.from_cycles(g, [(-u, v - 1)])
    # (−v, u−1) degenerates to (−v, 0) ≡ (−v, n) when u = 1.
    swap2 = Permutation.from_cycles(g, [(-v, u - 1) if u > 1 else (-v, n)])
    gamma = compose(compose(annulus_cycle(n), swap1), swap2)

    upper = (
        tuple(range(u, v))
        + tuple(range(1 - u, 0))
        + tuple(range(-n, -v + 1))
    )
    lower = (
        tuple(range(v, n + 1))
        + tuple(range(1, u))
        + tuple(range(1 - v, -u + 1))
    )
    displayed = Permutation.from_cycles(g, [upper, lower])
    assert gamma == displayed, "klein frame product and displayed forms differ"
    return AnnularFrame("klein", n, gamma, u, v)
