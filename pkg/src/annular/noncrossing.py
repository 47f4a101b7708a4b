"""Non-crossing predicates and the annular non-crossing families.

A permutation π of an n-point set is *non-crossing with respect to* a
reference permutation γ when the pair is jointly transitive and the
cycle counts meet the genus-zero bound:

    #(π) + #(π⁻¹γ) + #(γ) = n + 2.

The general inequality #(π) + #(π⁻¹γ) + #(γ) ≤ n + 2·#(π∨γ) makes the
*Euler defect* — the (always even, always non-negative) gap to that
bound — a useful genus proxy: defect 0 with one joint orbit is exactly
the non-crossing condition.

On the signed set ±[n], a permutation is *mirror-symmetric* (written
δ) when its cycle set is closed under the mirror (r₁,…,r_s) ↦
(−r_s,…,−r₁) and no label maps to its own negative.  Fixed points are
allowed; cycles therefore come in mirror pairs and the total cycle
count is even.

The families built here, keyed by :class:`NCFamilyId` tags:

* ``NC`` / ``NC2``: permutations / pairings of [n] non-crossing with
  respect to the disk frame 1ₙ.
* ``NCdelta`` / ``NC2delta``: mirror-symmetric permutations / pairings
  of ±[n] non-crossing with respect to the annulus frame 1̃ₙ.
* ``NC2T`` / ``NC2K``: unions over cut parameters (u, v) of pairings
  non-crossing with respect to the torus / Klein frames, anchored by
  π(u) = v (torus, on [n]) or π(u) = −v (Klein, on ±[n], mirror-
  symmetric) plus the head conditions on labels below u.
* ``NC2T_bip`` / ``NC2K_bip`` / ``NC2delta_bip``: the graded bipartite
  refinements — every pair joins the two colour classes, and the grade
  p counts the black-supported cycles of π⁻¹1̃ₙ (annular/Klein) or the
  odd-supported cycles of π⁻¹1ₙ (torus).  The torus union keeps only
  v − u odd, the Klein union only v − u even.
* ``NCdelta_p`` / ``NCT_p`` / ``NCK_p``: permutation-level graded
  families with #(π) = 2p (signed) or #(π) = p (unsigned) and the
  anchor conditions π⁻¹(u) = v (torus) / π⁻¹(u) = −v (Klein; the
  anchor, like the head condition, constrains π⁻¹ — the underlying
  twisted gluing — which is what lets these sets receive the
  hypermap families bijectively).

Union families record which (u, v) admitted each member; the unions
are expected to be disjoint, and any member with several witnesses is
reported via :attr:`NCFamily.union_collisions` rather than hidden.

The Klein unions run over 1 ≤ u < v ≤ n (the frames with v = n are
non-degenerate and are needed for the family sizes to match the
twisted-gluing counts); the torus unions stop at v < n, where the
frame would degenerate to a single cycle.

Graded bipartite tags read their inner sets as the ungraded (u, v)
members and measure grades against the canonical disk/annulus frames,
exactly as the displayed conditions state.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .frames import annulus_cycle, full_cycle, klein_frame, torus_frame
from .maps import black_labels, white_labels
from .perms import (
    Permutation,
    compose,
    inverse,
    is_jointly_transitive,
    join_block_count,
    num_cycles,
    restricted_cycle_count,
    signed_ground,
)
from .streams import (
    EnumerationBudget,
    pairings,
    permutations,
    permutations_of,
    signed_symmetric_pairings,
)

__all__ = [
    "is_noncrossing",
    "euler_defect",
    "is_delta_symmetric",
    "NCFamilyId",
    "NCFamily",
    "family_nc",
    "UNGRADED_TAGS",
    "GRADED_TAGS",
    "UNION_TAGS",
    "ALL_TAGS",
]

UNGRADED_TAGS = ("NC", "NC2", "NCdelta", "NC2delta", "NC2T", "NC2K")
GRADED_TAGS = (
    "NC2delta_bip",
    "NC2T_bip",
    "NC2K_bip",
    "NCdelta_p",
    "NCT_p",
    "NCK_p",
)
ALL_TAGS = UNGRADED_TAGS + GRADED_TAGS
UNION_TAGS = ("NC2T", "NC2K", "NC2T_bip", "NC2K_bip", "NCT_p", "NCK_p")

_EVEN_N_TAGS = ("NC2delta_bip", "NC2T_bip", "NC2K_bip")


# ---------------------------------------------------------------------------
# predicates
# ---------------------------------------------------------------------------

def _require_same_domain(pi: Permutation, gamma: Permutation) -> None:
    if pi.domain != gamma.domain:
        raise ValueError(
            f"domain mismatch: {pi.domain} vs {gamma.domain}"
        )


def is_noncrossing(pi: Permutation, gamma: Permutation) -> bool:
    """Joint transitivity plus the genus-zero cycle-count identity."""
    _require_same_domain(pi, gamma)
    if not is_jointly_transitive(pi, gamma):
        return False
    n = pi.domain.size
    total = num_cycles(pi) + num_cycles(compose(inverse(pi), gamma)) + num_cycles(gamma)
    return total == n + 2


def euler_defect(pi: Permutation, gamma: Permutation) -> int:
    """n + 2·#(π∨γ) − (#(π) + #(π⁻¹γ) + #(γ)); non-negative and even."""
    _require_same_domain(pi, gamma)
    n = pi.domain.size
    total = num_cycles(pi) + num_cycles(compose(inverse(pi), gamma)) + num_cycles(gamma)
    return n + 2 * join_block_count(pi, gamma) - total


def is_delta_symmetric(pi: Permutation) -> bool:
    """Mirror-closed cycle set on ±[n], with no label sent to its negative.

    The second condition is the permutation-level form of "(r,−r) is
    never a cycle": on pairings the two are literally the same, and on
    general permutations it additionally rejects the self-mirror
    cycles (those mapped to themselves by negate-and-reverse, such as
    (−2,−1,1,2)), each of which necessarily contains two positions
    with π(x) = −x.  Keeping those out is what makes the cycle count
    of every member even, so the grade #(π) = 2p covers the whole
    family, and what keeps the families aligned with the
    mirror-symmetric gluing streams.
    """
    for x in pi.domain.labels():
        image = pi(x)
        if image == -x or pi(-image) != -x:
            return False
    return True


# ---------------------------------------------------------------------------
# family identifiers and results
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class NCFamilyId:
    """Identifier for a non-crossing family: a tag, the size n, a grade p."""

    tag: str
    n: int
    p: int | None = None

    def __post_init__(self) -> None:
        if self.tag not in ALL_TAGS:
            raise ValueError(f"unknown family tag {self.tag!r}; known: {ALL_TAGS}")
        if self.n < 1:
            raise ValueError("n must be a positive integer")
        graded = self.tag in GRADED_TAGS
        if graded and (self.p is None or self.p < 1):
            raise ValueError(f"family {self.tag} requires a grade p >= 1")
        if not graded and self.p is not None:
            raise ValueError(f"family {self.tag} takes no grade")
        if self.tag in _EVEN_N_TAGS and self.n % 2:
            raise ValueError(f"family {self.tag} requires even n")

    def describe(self) -> str:
        if self.p is None:
            return f"{self.tag}(n={self.n})"
        return f"{self.tag}(n={self.n},p={self.p})"


@dataclass(frozen=True, eq=False)
class NCFamily:
    """A materialized non-crossing family, canonically ordered.

    ``witness_table`` (union families only) aligns with ``members``:
    entry i lists every (u, v) whose frame admitted ``members[i]``.
    """

    family_id: NCFamilyId
    members: tuple[Permutation, ...]
    witness_table: tuple[tuple[tuple[int, int], ...], ...] | None = None
    _index: dict = field(default_factory=dict, repr=False)

    def __post_init__(self) -> None:
        self._index.update({pi: i for i, pi in enumerate(self.members)})

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, pi: object) -> bool:
        return pi in self._index

    @property
    def member_set(self) -> frozenset:
        return frozenset(self.members)

    def witnesses_for(self, pi: Permutation) -> tuple[tuple[int, int], ...]:
        if self.witness_table is None:
            raise ValueError(f"{self.family_id.tag} is not a union family")
        return self.witness_table[self._index[pi]]

    @property
    def union_collisions(self) -> tuple[tuple[Permutation, tuple[tuple[int, int], ...]], ...]:
        """Members admitted by more than one (u, v) frame, if any."""
        if self.witness_table is None:
            return ()
        return tuple(
            (pi, ws)
            for pi, ws in zip(self.members, self.witness_table)
            if len(ws) > 1
        )


def _finalize(
    family_id: NCFamilyId,
    found: dict[Permutation, list[tuple[int, int]]] | list[Permutation],
) -> NCFamily:
    if isinstance(found, dict):
        members = tuple(sorted(found, key=lambda q: q.sort_key()))
        table = tuple(tuple(sorted(found[pi])) for pi in members)
        return NCFamily(family_id, members, table)
    members = tuple(sorted(found, key=lambda q: q.sort_key()))
    return NCFamily(family_id, members)


# ---------------------------------------------------------------------------
# family builders
# ---------------------------------------------------------------------------

def _alternating_signed(pi: Permutation, m: int) -> bool:
    """Every white label of ±[2m] is sent into the black set."""
    black = set(black_labels(m))
    return all(pi(w) in black for w in white_labels(m))


def _black_grade_doubled(pi: Permutation, m: int) -> int:
    """#((π⁻¹1̃ₙ)|_B(m)) for π on ±[2m]; cycles must be colour-pure."""
    faces = compose(inverse(pi), annulus_cycle(2 * m))
    return restricted_cycle_count(faces, black_labels(m))


def _odd_grade(pi: Permutation) -> int:
    """#((π⁻¹1ₙ)|odds) for π on [n], n even; cycles must be parity-pure."""
    size = pi.domain.n
    faces = compose(inverse(pi), full_cycle(size))
    return restricted_cycle_count(faces, range(1, size, 2))


def _is_bipartite_unsigned(pi: Permutation) -> bool:
    size = pi.domain.n
    return all(pi(a) % 2 for a in range(2, size + 1, 2))


def _disk_family(fid: NCFamilyId, budget, *, pairs_only: bool) -> NCFamily:
    n = fid.n
    gamma = full_cycle(n)
    stream = pairings(n, budget=budget) if pairs_only else permutations(n, budget=budget)
    return _finalize(fid, [pi for pi in stream if is_noncrossing(pi, gamma)])


def _annulus_family(
    fid: NCFamilyId, budget, *, pairs_only: bool, grade: int | None = None
) -> NCFamily:
    n = fid.n
    gamma = annulus_cycle(n)
    if pairs_only:
        stream = signed_symmetric_pairings(n, budget=budget)
        candidates = (pi for pi in stream)
    else:
        stream = permutations_of(signed_ground(n), budget=budget)
        candidates = (pi for pi in stream if is_delta_symmetric(pi))
    found = []
    for pi in candidates:
        if grade is not None and num_cycles(pi) != 2 * grade:
            continue
        if is_noncrossing(pi, gamma):
            found.append(pi)
    return _finalize(fid, found)


def _bip_annulus_family(fid: NCFamilyId, budget) -> NCFamily:
    n, p = fid.n, fid.p
    m = n // 2
    gamma = annulus_cycle(n)
    found = []
    for pi in signed_symmetric_pairings(n, budget=budget):
        if not _alternating_signed(pi, m):
            continue
        if not is_noncrossing(pi, gamma):
            continue
        if _black_grade_doubled(pi, m) == 2 * p:
            found.append(pi)
    return _finalize(fid, found)


def _torus_parameters(n: int, parity: int | None) -> list[tuple[int, int]]:
    return [
        (u, v)
        for u in range(1, n)
        for v in range(u + 1, n)
        if parity is None or (v - u) % 2 == parity
    ]


def _klein_parameters(n: int, parity: int | None) -> list[tuple[int, int]]:
    return [
        (u, v)
        for u in range(1, n + 1)
        for v in range(u + 1, n + 1)
        if parity is None or (v - u) % 2 == parity
    ]


def _torus_pairing_family(fid: NCFamilyId, budget, *, bipartite: bool) -> NCFamily:
    n = fid.n
    candidates = []
    for pi in pairings(n, budget=budget):
        if bipartite and not (_is_bipartite_unsigned(pi) and _odd_grade(pi) == fid.p):
            continue
        candidates.append(pi)
    found: dict[Permutation, list[tuple[int, int]]] = {}
    for u, v in _torus_parameters(n, 1 if bipartite else None):
        gamma = torus_frame(n, u, v).gamma
        banned = set(range(u, v + 1))
        for pi in candidates:
            if pi(u) != v:
                continue
            if any(pi(a) in banned for a in range(1, u)):
                continue
            if is_noncrossing(pi, gamma):
                found.setdefault(pi, []).append((u, v))
    return _finalize(fid, found)


def _klein_pairing_family(fid: NCFamilyId, budget, *, bipartite: bool) -> NCFamily:
    n = fid.n
    candidates = []
    for pi in signed_symmetric_pairings(n, budget=budget):
        if bipartite and not _alternating_signed(pi, n // 2):
            continue
        if bipartite and _black_grade_doubled(pi, n // 2) != 2 * fid.p:
            continue
        candidates.append(pi)
    found: dict[Permutation, list[tuple[int, int]]] = {}
    for u, v in _klein_parameters(n, 0 if bipartite else None):
        gamma = klein_frame(n, u, v).gamma
        for pi in candidates:
            if pi(u) != -v:
                continue
            if any(pi(a) < 0 for a in range(1, u)):
                continue
            if is_noncrossing(pi, gamma):
                found.setdefault(pi, []).append((u, v))
    return _finalize(fid, found)


def _torus_permutation_family(fid: NCFamilyId, budget) -> NCFamily:
    n, p = fid.n, fid.p
    candidates = [pi for pi in permutations(n, budget=budget) if num_cycles(pi) == p]
    found: dict[Permutation, list[tuple[int, int]]] = {}
    for u, v in _torus_parameters(n, None):
        gamma = torus_frame(n, u, v).gamma
        banned = set(range(u, v + 1))
        for pi in candidates:
            inv = inverse(pi)
            if inv(u) != v:
                continue
            if any(inv(a) in banned for a in range(1, u)):
                continue
            if is_noncrossing(pi, gamma):
                found.setdefault(pi, []).append((u, v))
    return _finalize(fid, found)


def _klein_permutation_family(fid: NCFamilyId, budget) -> NCFamily:
    n, p = fid.n, fid.p
    candidates = [
        (pi, inverse(pi))
        for pi in permutations_of(signed_ground(n), budget=budget)
        if num_cycles(pi) == 2 * p and is_delta_symmetric(pi)
    ]
    found: dict[Permutation, list[tuple[int, int]]] = {}
    for u, v in _klein_parameters(n, None):
        gamma = klein_frame(n, u, v).gamma
        for pi, inv in candidates:
            if inv(u) != -v:
                continue
            if any(inv(a) < 0 for a in range(1, u)):
                continue
            if is_noncrossing(pi, gamma):
                found.setdefault(pi, []).append((u, v))
    return _finalize(fid, found)


def family_nc(
    family_id: NCFamilyId,
    *,
    budget: EnumerationBudget | None = None,
) -> NCFamily:
    """Materialize the family named by ``family_id``.

    Members are produced by filtering the matching enumeration stream
    and are returned in a canonical sorted order; union families also
    carry their (u, v) witnesses.
    """
    tag = family_id.tag
    if tag == "NC":
        return _disk_family(family_id, budget, pairs_only=False)
    if tag == "NC2":
        return _disk_family(family_id, budget, pairs_only=True)
    if tag == "NCdelta":
        return _annulus_family(family_id, budget, pairs_only=False)
    if tag == "NC2delta":
        return _annulus_family(family_id, budget, pairs_only=True)
    if tag == "NC2T":
        return _torus_pairing_family(family_id, budget, bipartite=False)
    if tag == "NC2K":
        return _klein_pairing_family(family_id, budget, bipartite=False)
    if tag == "NC2delta_bip":
        return _bip_annulus_family(family_id, budget)
    if tag == "NC2T_bip":
        return _torus_pairing_family(family_id, budget, bipartite=True)
    if tag == "NC2K_bip":
        return _klein_pairing_family(family_id, budget, bipartite=True)
    if tag == "NCdelta_p":
        return _annulus_family(family_id, budget, pairs_only=False, grade=family_id.p)
    if tag == "NCT_p":
        return _torus_permutation_family(family_id, budget)
    if tag == "NCK_p":
        return _klein_permutation_family(family_id, budget)
    raise ValueError(f"unknown family tag {tag!r}")
