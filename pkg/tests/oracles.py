"""Independent naive reference implementations used as test oracles.

Everything here works on plain dicts mapping label -> label, so that it
shares no code path with the package under test.  The implementations
favour obviousness over speed and are only used at very small sizes.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import permutations as iter_permutations
from math import comb


def ref_compose(p: dict, q: dict) -> dict:
    """x -> p(q(x))."""
    return {x: p[q[x]] for x in q}


def ref_inverse(p: dict) -> dict:
    return {y: x for x, y in p.items()}


def ref_identity(labels) -> dict:
    return {x: x for x in labels}


def ref_cycles(p: dict) -> list[tuple]:
    """Disjoint cycles, each rotated to start at its min, sorted by min."""
    seen = set()
    out = []
    for start in sorted(p):
        if start in seen:
            continue
        cyc = [start]
        seen.add(start)
        x = p[start]
        while x != start:
            cyc.append(x)
            seen.add(x)
            x = p[x]
        m = cyc.index(min(cyc))
        out.append(tuple(cyc[m:] + cyc[:m]))
    out.sort(key=lambda c: c[0])
    return out


def ref_num_cycles(p: dict) -> int:
    return len(ref_cycles(p))


def ref_join_blocks(p: dict, q: dict) -> int:
    """Blocks of the finest common coarsening of the orbit partitions."""
    labels = set(p)
    blocks = {x: {x} for x in labels}

    def merge(a, b):
        ba, bb = blocks[a], blocks[b]
        if ba is bb:
            return
        if len(ba) < len(bb):
            ba, bb = bb, ba
        ba |= bb
        for x in bb:
            blocks[x] = ba

    for x in labels:
        merge(x, p[x])
        merge(x, q[x])
    return len({id(b) for b in blocks.values()})


def ref_all_pairings(items: list) -> list[list[tuple]]:
    """All perfect matchings of ``items``, smallest-element-first order.

    The first item is paired with each later item in ascending order and
    the rest is matched recursively; this is the deterministic order the
    package promises.
    """
    if not items:
        return [[]]
    out = []
    first, rest = items[0], items[1:]
    for k, other in enumerate(rest):
        for sub in ref_all_pairings(rest[:k] + rest[k + 1:]):
            out.append([(first, other)] + sub)
    return out


def pairing_to_map(pairs) -> dict:
    p = {}
    for a, b in pairs:
        p[a] = b
        p[b] = a
    return p


def ref_full_cycle(n: int) -> dict:
    """1_n = (1, 2, ..., n) on [n]."""
    return {i: (i % n) + 1 for i in range(1, n + 1)}


def ref_tau0(n: int) -> dict:
    """(1,-1)(2,-2)...(n,-n) on ±[n]."""
    p = {}
    for i in range(1, n + 1):
        p[i] = -i
        p[-i] = i
    return p


def ref_tau2(n: int) -> dict:
    """(-1,2)(-2,3)...(-n,1) on ±[n]."""
    p = {}
    for i in range(1, n + 1):
        p[-i] = i + 1 if i < n else 1
        p[i + 1 if i < n else 1] = -i
    return p


def ref_annulus_cycle(n: int) -> dict:
    """(1,...,n)(-n,...,-1) on ±[n] (equals tau2·tau0)."""
    p = {}
    for i in range(1, n + 1):
        p[i] = i + 1 if i < n else 1
    for i in range(1, n + 1):
        p[-i] = -(i - 1) if i > 1 else -n
    return p


def ref_is_noncrossing(p: dict, gamma: dict) -> bool:
    """Joint transitivity plus the genus-zero cycle-count identity."""
    n = len(gamma)
    if ref_join_blocks(p, gamma) != 1:
        return False
    total = (
        ref_num_cycles(p)
        + ref_num_cycles(ref_compose(ref_inverse(p), gamma))
        + ref_num_cycles(gamma)
    )
    return total == n + 2


def ref_is_delta_symmetric(p: dict) -> bool:
    """Mirror-closed cycle set and no (r,-r) two-cycle."""
    for x in p:
        # mirror condition pi(-pi(x)) = -x
        if p[-p[x]] != -x:
            return False
    for x in p:
        if x > 0 and p[x] == -x and p[-x] == x:
            return False
    return True


def ref_signed_symmetric_pairings(n: int) -> list[dict]:
    """Brute-force delta-symmetric pairings of ±[n] (as dicts)."""
    labels = [x for x in range(-n, n + 1) if x != 0]
    out = []
    for pairs in ref_all_pairings(labels):
        p = pairing_to_map(pairs)
        if ref_is_delta_symmetric(p):
            out.append(p)
    return out


def ref_permutations(labels) -> list[dict]:
    labels = sorted(labels)
    return [dict(zip(labels, img)) for img in iter_permutations(labels)]


def ref_catalan(n: int) -> int:
    value = Fraction(1)
    for k in range(n):
        value = value * Fraction(2 * (2 * k + 1), k + 2)
    assert value.denominator == 1
    return int(value)


def ref_narayana(n: int, p: int) -> int:
    value = Fraction(comb(n, p) * comb(n, p - 1), n)
    assert value.denominator == 1
    return int(value)


def ref_cycle_count_on(p: dict, subset: set) -> int:
    """Number of cycles of p supported inside ``subset``.

    Requires every cycle to be entirely inside or entirely outside.
    """
    count = 0
    for cyc in ref_cycles(p):
        inside = len(set(cyc) & subset)
        assert inside in (0, len(cyc)), "cycle straddles the subset"
        if inside:
            count += 1
    return count


def ref_genus_of_pairing(p: dict, n: int) -> int:
    faces = ref_num_cycles(ref_compose(ref_inverse(p), ref_full_cycle(n)))
    twice = n // 2 + 1 - faces
    assert twice >= 0 and twice % 2 == 0
    return twice // 2


def ref_family_a_counts(n: int) -> dict[int, int]:
    counts: dict[int, int] = {}
    for pairs in ref_all_pairings(list(range(1, n + 1))):
        g = ref_genus_of_pairing(pairing_to_map(pairs), n)
        counts[g] = counts.get(g, 0) + 1
    return counts


def ref_euler_genus(p: dict, n: int) -> int:
    boundary = ref_num_cycles(ref_compose(ref_tau2(n), p))
    twice = n + 2 - boundary
    assert twice >= 0 and twice % 2 == 0
    return twice // 2


def ref_has_twist(p: dict, n: int) -> bool:
    return any(p[a] > 0 for a in range(1, n + 1))


def ref_family_b_counts(n: int) -> dict[int, int]:
    counts: dict[int, int] = {}
    for p in ref_signed_symmetric_pairings(n):
        if not ref_has_twist(p, n):
            continue
        k = ref_euler_genus(p, n)
        counts[k] = counts.get(k, 0) + 1
    return counts


def ref_black_white(m: int) -> tuple[set, set]:
    black = set(range(1, 2 * m, 2)) | {-2 * i for i in range(1, m + 1)}
    white = set(range(2, 2 * m + 1, 2)) | {1 - 2 * i for i in range(1, m + 1)}
    return black, white


def ref_family_a_tilde_counts(n: int) -> dict[tuple[int, int], int]:
    counts: dict[tuple[int, int], int] = {}
    for pairs in ref_all_pairings(list(range(1, 2 * n + 1))):
        if any((a + b) % 2 == 0 for a, b in pairs):
            continue
        p = pairing_to_map(pairs)
        g = ref_genus_of_pairing(p, 2 * n)
        faces = ref_compose(ref_inverse(p), ref_full_cycle(2 * n))
        grade = ref_cycle_count_on(faces, set(range(1, 2 * n, 2)))
        counts[(g, grade)] = counts.get((g, grade), 0) + 1
    return counts


def ref_family_b_tilde_counts(n: int) -> dict[tuple[int, int], int]:
    black, white = ref_black_white(n)
    counts: dict[tuple[int, int], int] = {}
    for p in ref_signed_symmetric_pairings(2 * n):
        if any(p[b] not in black for b in black):
            continue
        if not ref_has_twist(p, 2 * n):
            continue
        k = ref_euler_genus(p, 2 * n)
        walk = ref_compose(ref_tau2(2 * n), p)
        white_cycles = ref_cycle_count_on(walk, white)
        assert white_cycles % 2 == 0
        counts[(k, white_cycles // 2)] = counts.get((k, white_cycles // 2), 0) + 1
    return counts


def ref_family_a_hat_counts(n: int) -> dict[tuple[int, int], int]:
    counts: dict[tuple[int, int], int] = {}
    for p in ref_permutations(range(1, n + 1)):
        vertices = ref_num_cycles(p)
        faces = ref_num_cycles(ref_compose(ref_inverse(p), ref_full_cycle(n)))
        twice = n - vertices + 1 - faces
        assert twice >= 0 and twice % 2 == 0
        key = (twice // 2, vertices)
        counts[key] = counts.get(key, 0) + 1
    return counts


def ref_family_b_hat_counts(n: int) -> dict[tuple[int, int], int]:
    """(k, p) histogram over mirror-symmetric twisted permutations of ±[n]."""
    labels = [x for x in range(-n, n + 1) if x != 0]
    counts: dict[tuple[int, int], int] = {}
    for p in ref_permutations(labels):
        if any(p[-p[x]] != -x for x in labels):
            continue
        if any(p[x] == -x for x in labels):
            continue
        if not any(p[a] < 0 for a in range(1, n + 1)):
            continue
        halves = ref_num_cycles(p)
        boundary = ref_num_cycles(ref_compose(ref_annulus_cycle(n), p))
        assert halves % 2 == 0 and boundary % 2 == 0
        grade = halves // 2
        k = n - grade + 1 - boundary // 2
        assert k >= 1
        key = (k, grade)
        counts[key] = counts.get(key, 0) + 1
    return counts


def ref_lagrange_coefficients(points: list[tuple]) -> list:
    """Exact coefficients [c0, c1, ...] of the unique polynomial of degree
    < len(points) through the given (x, y) points, via Lagrange bases."""
    from fractions import Fraction

    size = len(points)
    coeffs = [Fraction(0)] * size
    for i, (xi, yi) in enumerate(points):
        # numerator polynomial prod_{j != i} (x - xj), lowest degree first
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j, (xj, _) in enumerate(points):
            if j == i:
                continue
            denom *= Fraction(xi) - Fraction(xj)
            nxt = [Fraction(0)] * (len(basis) + 1)
            for d, coeff in enumerate(basis):
                nxt[d] += coeff * (-Fraction(xj))
                nxt[d + 1] += coeff
            basis = nxt
        scale = Fraction(yi) / denom
        for d, coeff in enumerate(basis):
            coeffs[d] += coeff * scale
    return coeffs
