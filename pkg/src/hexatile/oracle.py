"""Independent brute-force counters.

* :func:`count_tilings` - weighted perfect matchings of the dual graph by a
  left-to-right sweep over vertical strips (profile dynamic programming).
* :func:`count_tilings_lgv` - the Lindström-Gessel-Viennot determinant for a
  hole-free hexagon.
* :func:`enumerate_pp` / :func:`count_pp_restricted` - boxed plane partitions.
* :func:`kuo_check` - the two six-term condensation recurrences.
"""
from __future__ import annotations

import os
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .exactnum import DomainError, binomial
from .region import Region, TriCell, build_h_double_prime, build_h_prime, build_intruded

__all__ = [
    "CapacityError",
    "OracleConfig",
    "count_tilings",
    "count_tilings_lgv",
    "enumerate_pp",
    "count_pp_restricted",
    "kuo_terms",
    "kuo_check",
    "kuo_regions",
    "kuo_term_mismatches",
    "exact_determinant",
]


class CapacityError(RuntimeError):
    """The requested computation is larger than the configured limits."""


@dataclass(frozen=True)
class OracleConfig:
    max_width: int = 24  # right-pointing cells per strip (profile bits)
    max_pp_cells: int = 20
    max_pp_height: int = 8

    @classmethod
    def from_env(cls) -> "OracleConfig":
        raw = os.environ.get("HEXATILE_MAX_WIDTH")
        return cls(max_width=int(raw)) if raw else cls()


def count_tilings(region: Region, config: OracleConfig | None = None):
    """Weighted number of lozenge tilings of ``region``.

    Returns an ``int`` when no weighted lozenge is involved and a ``Fraction``
    otherwise.  Regions with an odd number of cells, or flagged untileable,
    give 0.  The empty region has exactly one (empty) tiling.
    """
    config = config or OracleConfig.from_env()
    if region.untileable:
        return 0
    cells = region.cells
    if not cells:
        return 1
    if len(cells) % 2 or region.imbalance() != 0:
        return 0

    by_strip: dict[int, set[int]] = defaultdict(set)
    for c in cells:
        by_strip[c.strip].add(c.level)
    width = max(sum(1 for lv in lvls if lv % 2 == 0) for lvls in by_strip.values())
    if width > config.max_width:
        raise CapacityError(f"strip with {width} right-pointing cells exceeds max_width={config.max_width}")

    half = region.half_weight
    weighted = bool(half)

    def w(c1, c2):
        if weighted and frozenset((c1, c2)) in half:
            return Fraction(1, 2)
        return 1

    # profile: frozenset of levels of right-pointing cells in the current
    # strip already covered by a horizontal lozenge from the strip to the left
    profiles: dict[frozenset, object] = {frozenset(): 1}
    strips = range(min(by_strip), max(by_strip) + 1)
    for s in strips:
        levels = by_strip.get(s, set())
        nxt_levels = by_strip.get(s + 1, set())
        new: dict[frozenset, object] = defaultdict(int)
        for covered, value in profiles.items():
            for out, wt in _strip_transitions(s, levels, nxt_levels, covered, w):
                new[out] += value * wt
        profiles = {k: v for k, v in new.items() if v}
        if not profiles:
            return 0
    return profiles.get(frozenset(), 0)


def _strip_transitions(s, levels, nxt_levels, covered, w):
    """All ways to finish strip ``s`` given the cells already covered.

    Walks the strip bottom to top.  A state is (pending, out, weight) where
    ``pending`` is the level of a cell that must pair with the next one up
    and ``out`` collects right-pointing cells of strip s+1 that get covered
    by horizontal lozenges leaving this strip.
    """
    if not levels:
        return [(frozenset(), 1)] if not covered else []
    states = [(None, (), 1)]
    for lv in range(min(levels), max(levels) + 1):
        present = lv in levels
        nstates = []
        for pending, out, wt in states:
            if not present:
                if pending is None:
                    nstates.append((None, out, wt))
                continue
            if lv in covered:
                if pending is None:
                    nstates.append((None, out, wt))
                continue
            if pending is not None:
                nstates.append((None, out, wt * w(TriCell(s, pending), TriCell(s, lv))))
                continue
            nstates.append((lv, out, wt))
            if lv % 2 == 1 and (lv - 1) in nxt_levels:
                nstates.append((None, out + (lv - 1,), wt * w(TriCell(s, lv), TriCell(s + 1, lv - 1))))
        states = nstates
        if not states:
            return []
    return [(frozenset(out), wt) for pending, out, wt in states if pending is None]


def exact_determinant(matrix: list[list[int]]) -> int:
    """Integer determinant by fraction-free (Bareiss) elimination."""
    n = len(matrix)
    if n == 0:
        return 1
    m = [list(row) for row in matrix]
    sign, prev = 1, 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((r for r in range(k + 1, n) if m[r][k] != 0), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def count_tilings_lgv(a: int, b: int, c: int) -> int:
    """Tilings of H_{a,b,c} as families of nonintersecting lattice paths.

    One path starts on each unit segment of the north-west side (length b) and
    crosses the lozenges that share an edge parallel to it, ending on the
    south-east side.  Each path makes a + c unit moves, a of them in one of the
    two allowed directions, so the path matrix is binomial.
    """
    if min(a, b, c) < 0:
        raise DomainError("hexagon sides must be nonnegative")
    mat = [[binomial(a + c, a + i - j) for j in range(b)] for i in range(b)]
    return exact_determinant(mat)


# ---------------------------------------------------------------------------
# plane partitions


def _pp_check(b, c, h, config):
    config = config or OracleConfig()
    if min(b, c, h) < 0:
        raise DomainError("box dimensions must be nonnegative")
    if b * c > config.max_pp_cells or h > config.max_pp_height:
        raise CapacityError(f"plane partitions in a {b}x{c}x{h} box exceed the configured capacity")


def _count_pp(b: int, c: int, h: int, pinned: dict[tuple[int, int], int]) -> int:
    """Arrays b x c with entries in [0, h], weakly decreasing along rows and
    columns, honoring ``pinned[(row, col)] = value`` (0-based)."""

    def rows_under(prev: tuple[int, ...], r: int):
        # weakly decreasing rows bounded entrywise by prev
        out = []

        def rec(col, bound, acc):
            if col == c:
                out.append(tuple(acc))
                return
            hi = min(bound, prev[col])
            fixed = pinned.get((r, col))
            choices = [fixed] if fixed is not None else range(hi + 1)
            for v in choices:
                if 0 <= v <= hi:
                    acc.append(v)
                    rec(col + 1, v, acc)
                    acc.pop()

        rec(0, h, [])
        return out

    @lru_cache(maxsize=None)
    def count(r: int, prev: tuple[int, ...]) -> int:
        if r == b:
            return 1
        return sum(count(r + 1, row) for row in rows_under(prev, r))

    return count(0, (h,) * c)


def enumerate_pp(b: int, c: int, h: int, config: OracleConfig | None = None) -> int:
    """Number of plane partitions with at most b rows, c columns, parts <= h."""
    _pp_check(b, c, h, config)
    return _count_pp(b, c, h, {})


def count_pp_restricted(b: int, c: int, h: int, d: int, config: OracleConfig | None = None) -> int:
    """Plane partitions in the b x c x h box with pi_{b+1-i, i} = h/2 for i <= d."""
    _pp_check(b, c, h, config)
    if h % 2:
        raise DomainError(f"the restricted count needs an even height, got {h}")
    if d < 0 or d > min(b, c):
        raise DomainError(f"need 0 <= d <= min(b, c), got d={d}")
    pinned = {(b - i, i - 1): h // 2 for i in range(1, d + 1)}
    return _count_pp(b, c, h, pinned)


# ---------------------------------------------------------------------------
# condensation


def kuo_terms(variant: str, a: int, b: int, c: int, k: int):
    """The six intruded hexagons of a condensation recurrence, as
    ((lhs1, lhs2), (r11, r12), (r21, r22)) parameter tuples (m, b, c, d)."""
    if variant == "prime":
        return (
            ((2 * a + 1, b, c, k), (2 * a, b, c, k + 1)),
            ((2 * a, b + 1, c, k + 1), (2 * a + 1, b - 1, c, k)),
            ((2 * a, b, c + 1, k + 1), (2 * a + 1, b, c - 1, k)),
        )
    if variant == "double-prime":
        return (
            ((2 * a + 1, b, c, k), (2 * a, b, c, k)),
            ((2 * a, b + 1, c, k), (2 * a + 1, b - 1, c, k)),
            ((2 * a, b, c + 1, k), (2 * a + 1, b, c - 1, k)),
        )
    raise ValueError(f"unknown recurrence {variant!r}; expected 'prime' or 'double-prime'")


# which marks to delete for each of the six terms, in kuo_terms order
_KUO_DELETIONS = {
    "prime": (((), ("x", "y", "z", "w")), (("x", "y"), ("z", "w")), (("x", "w"), ("y", "z"))),
    "double-prime": ((("y",), ("x", "z", "w")), (("z",), ("x", "y", "w")), (("x",), ("y", "z", "w"))),
}


def _kuo_domain(variant, b, c, k):
    if variant not in _KUO_DELETIONS:
        raise ValueError(f"unknown recurrence {variant!r}; expected 'prime' or 'double-prime'")
    if b < 1 or c < 1:
        raise DomainError("condensation needs b, c >= 1")
    limit = min(b, c) - (1 if variant == "prime" else 0)
    if k < 0 or k > limit:
        raise DomainError(f"{variant} needs 0 <= k <= {limit}, got k={k}")


def kuo_regions(variant: str, a: int, b: int, c: int, k: int):
    """The six regions obtained by deleting marked cells from the primed
    hexagon, paired and ordered like :func:`kuo_terms`."""
    _kuo_domain(variant, b, c, k)
    base = build_h_prime(a, b, c, k) if variant == "prime" else build_h_double_prime(a, b, c, k)
    return tuple(tuple(base.without_marks(*labels) for labels in pair) for pair in _KUO_DELETIONS[variant])


def _intruded_count(m, b, c, d, config):
    try:
        region = build_intruded(m, b, c, d)
    except DomainError:
        return None  # the holes do not fit: no such intruded hexagon
    return count_tilings(region, config)


def kuo_check(variant: str, a: int, b: int, c: int, k: int, config: OracleConfig | None = None) -> bool:
    """Evaluate both sides of a condensation recurrence with the sweep oracle.

    The six terms are counted on the marked-cell deletions of the primed
    hexagon, which is what the condensation theorem speaks about.
    """
    (l1, l2), (p1, p2), (q1, q2) = kuo_regions(variant, a, b, c, k)
    ev = lambda r: count_tilings(r, config)  # noqa: E731
    return ev(l1) * ev(l2) == ev(p1) * ev(p2) + ev(q1) * ev(q2)


def kuo_term_mismatches(variant: str, a: int, b: int, c: int, k: int, config: OracleConfig | None = None):
    """Terms whose marked-deletion count differs from the intruded hexagon
    it stands for.  Terms naming a hexagon whose holes do not fit are skipped
    and reported separately as ``(params, None, count)``."""
    out = []
    regions = kuo_regions(variant, a, b, c, k)
    for pair_r, pair_t in zip(regions, kuo_terms(variant, a, b, c, k)):
        for region, params in zip(pair_r, pair_t):
            got = count_tilings(region, config)
            want = _intruded_count(*params, config)
            if want != got:
                out.append((params, want, got))
    return out
