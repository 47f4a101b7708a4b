"""Deterministic enumeration streams with caps and budgets.

Four element streams feed every family construction in the package:

* :func:`pairings` — perfect matchings of a ground set;
* :func:`signed_symmetric_pairings` — mirror-symmetric matchings of ±[n]
  (one per unsigned matching and per-pair twist assignment);
* :func:`permutations` — all permutations of a ground set;
* :func:`signed_symmetric_permutations` — permutations of ±[n] whose
  cycle set is mirror-closed in the strong sense τ₀ττ₀ = τ⁻¹ with
  τ₀τ fixed-point free, obtained by brute-force filtering.

Each stream has a documented deterministic order, an ``n``-cap guarding
against accidental combinatorial explosions (overridable per call), and
an optional :class:`EnumerationBudget` limiting the number of elements
produced.  ``stream_slice`` exposes the k-th residue class of any
stream's order, so independent workers can split an enumeration without
coordination and their union is exactly the plain stream.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from itertools import permutations as _iter_permutations, product as _iter_product
from typing import Callable, Iterable, Iterator

from .perms import GroundSet, Pairing, Permutation, signed_ground, unsigned_ground

__all__ = [
    "CapExceeded",
    "EnumerationBudget",
    "DEFAULT_PAIRING_CAP",
    "DEFAULT_PERMUTATION_CAP",
    "DEFAULT_SIGNED_PERMUTATION_CAP",
    "MAX_ELEMENTS_ENV_VAR",
    "pairings",
    "pairings_of",
    "signed_pairings",
    "signed_symmetric_pairings",
    "permutations",
    "signed_symmetric_permutations",
    "double_factorial",
    "stream_slice",
    "budget_from_environment",
]

#: Largest ground-set size for which matchings are enumerated by default.
DEFAULT_PAIRING_CAP = 16
#: Largest ground-set size for which all permutations are enumerated.
DEFAULT_PERMUTATION_CAP = 9
#: Largest n for the brute-force filtered stream over all (2n)! permutations.
DEFAULT_SIGNED_PERMUTATION_CAP = 4

MAX_ELEMENTS_ENV_VAR = "ANNULAR_MAX_ELEMENTS"


class CapExceeded(RuntimeError):
    """An enumeration exceeded its size cap or element budget."""

    def __init__(self, message: str, *, requested=None, cap=None):
        super().__init__(message)
        self.requested = requested
        self.cap = cap


@dataclass(frozen=True)
class EnumerationBudget:
    """A hard limit on how many elements a stream may yield.

    ``on_overflow`` selects the behaviour when the limit is hit:
    ``"error"`` raises :class:`CapExceeded`; ``"truncate"`` ends the
    stream quietly and records the truncation on the budget wrapper
    (see :func:`_budgeted`).
    """

    max_elements: int
    on_overflow: str = "error"

    def __post_init__(self):
        if self.max_elements < 0:
            raise ValueError("max_elements must be >= 0")
        if self.on_overflow not in ("error", "truncate"):
            raise ValueError("on_overflow must be 'error' or 'truncate'")


def budget_from_environment() -> EnumerationBudget | None:
    """Budget from the ANNULAR_MAX_ELEMENTS environment variable, if set."""
    raw = os.environ.get(MAX_ELEMENTS_ENV_VAR)
    if raw is None or raw == "":
        return None
    try:
        limit = int(raw)
    except ValueError as exc:
        raise ValueError(
            f"{MAX_ELEMENTS_ENV_VAR} must be an integer, got {raw!r}"
        ) from exc
    return EnumerationBudget(limit, on_overflow="error")


class BudgetedStream:
    """Iterator wrapper enforcing an :class:`EnumerationBudget`.

    After exhaustion, ``truncated`` reports whether the underlying
    stream was cut short by a ``truncate`` budget.
    """

    def __init__(self, inner: Iterator, budget: EnumerationBudget, what: str):
        self._inner = inner
        self._budget = budget
        self._what = what
        self._count = 0
        self._done = False
        self.truncated = False

    def __iter__(self):
        return self

    def __next__(self):
        if self._done:
            raise StopIteration
        if self._count >= self._budget.max_elements:
            # Peek once to distinguish "exactly at the limit" from overflow.
            try:
                next(self._inner)
            except StopIteration:
                self._done = True
                raise
            if self._budget.on_overflow == "error":
                self._done = True
                raise CapExceeded(
                    f"{self._what} exceeded the element budget "
                    f"({self._budget.max_elements})",
                    requested=self._count + 1,
                    cap=self._budget.max_elements,
                )
            self.truncated = True
            self._done = True
            raise StopIteration
        item = next(self._inner)
        self._count += 1
        return item


def _budgeted(it: Iterator, budget: EnumerationBudget | None, what: str):
    if budget is None:
        return it
    return BudgetedStream(it, budget, what)


def _check_cap(what: str, n: int, cap: int | None, default_cap: int) -> None:
    effective = default_cap if cap is None else cap
    if n > effective:
        raise CapExceeded(
            f"{what} requested for size {n}, above the cap {effective}; "
            f"pass an explicit cap to override",
            requested=n,
            cap=effective,
        )


def double_factorial(m: int) -> int:
    """(m)!! — the number of pairings of an m-set is (m-1)!! for even m."""
    out = 1
    while m > 1:
        out *= m
        m -= 2
    return out


# ---------------------------------------------------------------------------
# pairings
# ---------------------------------------------------------------------------

def _pairing_images(size: int) -> Iterator[tuple[int, ...]]:
    """Index-space images of all matchings of 0..size-1.

    Deterministic order: the smallest unmatched index is paired with
    each larger unmatched index in ascending order, recursively.
    """
    if size % 2:
        return
    image = [-1] * size

    def rec(start: int) -> Iterator[tuple[int, ...]]:
        i = start
        while i < size and image[i] != -1:
            i += 1
        if i == size:
            yield tuple(image)
            return
        for j in range(i + 1, size):
            if image[j] == -1:
                image[i], image[j] = j, i
                yield from rec(i + 1)
                image[i], image[j] = -1, -1

    yield from rec(0)


def pairings_of(
    ground: GroundSet,
    *,
    cap: int | None = None,
    budget: EnumerationBudget | None = None,
) -> Iterator[Pairing]:
    """All pairings of an arbitrary ground set, smallest-label-first order."""
    _check_cap("pairing enumeration", ground.size, cap, DEFAULT_PAIRING_CAP)
    inner = (Pairing._make(ground, img) for img in _pairing_images(ground.size))
    return _budgeted(inner, budget, f"pairings of {ground!r}")


def pairings(
    n: int,
    *,
    cap: int | None = None,
    budget: EnumerationBudget | None = None,
) -> Iterator[Pairing]:
    """All (n-1)!! pairings of [n] (empty stream for odd n)."""
    return pairings_of(unsigned_ground(n), cap=cap, budget=budget)


def signed_pairings(
    n: int,
    *,
    cap: int | None = None,
    budget: EnumerationBudget | None = None,
) -> Iterator[Pairing]:
    """All (2n-1)!! pairings of ±[n] (no symmetry imposed)."""
    return pairings_of(signed_ground(n), cap=cap, budget=budget)


# ---------------------------------------------------------------------------
# signed symmetric pairings
# ---------------------------------------------------------------------------

def _signed_symmetric_pairing_images(n: int) -> Iterator[tuple[int, ...]]:
    """Index images of mirror-symmetric pairings of ±[n] with no (r,−r) pair.

    Constructive: every such pairing is an unsigned pairing of [n]
    together with an independent twist bit per pair.  For a pair
    {a, b} (a < b): untwisted contributes the 2-cycles (a,−b)(−a,b),
    twisted contributes (a,b)(−a,−b).  Order: unsigned pairings in
    :func:`pairings` order; within one, twist tuples in lexicographic
    order with untwisted (False) first, bits aligned with the pairs
    sorted by smaller element.
    """
    size = 2 * n
    # index of label x in ±[n]: negatives first
    def idx(x: int) -> int:
        return x + n if x < 0 else n + x - 1

    for img in _pairing_images(n):
        pairs = [(i + 1, j + 1) for i, j in enumerate(img) if i < j]
        m = len(pairs)
        for twists in _iter_product((False, True), repeat=m):
            out = [-1] * size
            for (a, b), twisted in zip(pairs, twists):
                if twisted:
                    x, y, z, w = a, b, -a, -b
                else:
                    x, y, z, w = a, -b, -a, b
                out[idx(x)], out[idx(y)] = idx(y), idx(x)
                out[idx(z)], out[idx(w)] = idx(w), idx(z)
            yield tuple(out)


def signed_symmetric_pairings(
    n: int,
    *,
    cap: int | None = None,
    budget: EnumerationBudget | None = None,
) -> Iterator[Pairing]:
    """Mirror-symmetric pairings of ±[n]: (n−1)!!·2^(n/2) elements.

    Exactly the pairings that commute with the mirror involution
    τ₀ = (1,−1)···(n,−n) and contain no (r,−r) pair; empty for odd n.
    """
    _check_cap(
        "signed symmetric pairing enumeration", 2 * n, cap, DEFAULT_PAIRING_CAP
    )
    ground = signed_ground(n)
    inner = (
        Pairing._make(ground, img) for img in _signed_symmetric_pairing_images(n)
    )
    return _budgeted(inner, budget, f"signed symmetric pairings of ±[{n}]")


# ---------------------------------------------------------------------------
# permutations
# ---------------------------------------------------------------------------

def permutations_of(
    ground: GroundSet,
    *,
    cap: int | None = None,
    budget: EnumerationBudget | None = None,
) -> Iterator[Permutation]:
    """All permutations of a ground set in lexicographic image order."""
    _check_cap("permutation enumeration", ground.size, cap, DEFAULT_PERMUTATION_CAP)
    inner = (
        Permutation._make(ground, img)
        for img in _iter_permutations(range(ground.size))
    )
    return _budgeted(inner, budget, f"permutations of {ground!r}")


def permutations(
    n: int,
    *,
    cap: int | None = None,
    budget: EnumerationBudget | None = None,
) -> Iterator[Permutation]:
    """All n! permutations of [n], identity first (lexicographic images)."""
    return permutations_of(unsigned_ground(n), cap=cap, budget=budget)


def signed_symmetric_permutations(
    n: int,
    *,
    cap: int | None = None,
    budget: EnumerationBudget | None = None,
) -> Iterator[Permutation]:
    """Permutations τ of ±[n] with τ₀ττ₀ = τ⁻¹ and τ₀τ fixed-point free.

    Brute-force filter over all (2n)! permutations of ±[n] in
    lexicographic image order (the order inherited from the full
    stream).  In index space, with the mirror M(i) = 2n−1−i, the two
    conditions read image[M(image[i])] = M(i) for all i (mirror
    symmetry) and image[i] ≠ M(i) for all i (no label maps to its
    negative).  At n=1 the stream is exactly {identity}: the swap
    (1,−1) fails the second condition.
    """
    _check_cap(
        "signed symmetric permutation enumeration",
        n,
        cap,
        DEFAULT_SIGNED_PERMUTATION_CAP,
    )
    ground = signed_ground(n)
    size = 2 * n
    last = size - 1

    def gen() -> Iterator[Permutation]:
        for img in _iter_permutations(range(size)):
            ok = True
            for i in range(size):
                j = img[i]
                if j == last - i or img[last - j] != last - i:
                    ok = False
                    break
            if ok:
                yield Permutation._make(ground, img)

    return _budgeted(gen(), budget, f"signed symmetric permutations of ±[{n}]")


# ---------------------------------------------------------------------------
# slicing
# ---------------------------------------------------------------------------

def stream_slice(stream: Iterable, index: int, count: int) -> Iterator:
    """Every ``count``-th element starting at position ``index``.

    The ``count`` slices of a stream partition it: interleaving slice
    0..count-1 in round-robin order reproduces the stream exactly, so
    workers can process slices independently and merge deterministically.
    """
    if count <= 0:
        raise ValueError("count must be positive")
    if not 0 <= index < count:
        raise ValueError("index must satisfy 0 <= index < count")
    for pos, item in enumerate(stream):
        if pos % count == index:
            yield item
