"""Regions on the triangular lattice with one family of vertical lattice lines.

Coordinates
-----------
Lattice points are integer pairs ``(i, j)`` meaning ``i*e1 + j*e2`` with
``e1 = (sqrt(3)/2, 1/2)`` (a unit step north-east) and ``e2 = (0, 1)`` (a unit
step north).  The vertical lattice lines are ``i = const``.  The strip between
``i`` and ``i + 1`` is cut into unit triangles stacked on top of each other::

        |\\
        | \\   L(i, j)   vertices (i, j+1), (i+1, j), (i+1, j+1)
        |  |
        | /|
        |/ |  R(i, j)   vertices (i, j), (i, j+1), (i+1, j)
        |\\ |
        | \\|
       i    i+1

A cell is stored as ``TriCell(strip=i, level=2*j + t)`` with ``t = 0`` for the
right-pointing triangle ``R(i, j)`` and ``t = 1`` for the left-pointing
``L(i, j)``.  Consecutive levels of one strip share an edge; across the
vertical line ``i`` the cell ``L(i-1, j)`` meets ``R(i, j)``, and that pair is a
horizontal lozenge.

Twice the Cartesian height of the point ``(i, j)`` is ``2j + i``; horizontal
lines (the bisectors along which holes are punched) are given in that unit.
"""
from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Iterable, Mapping, NamedTuple

from .exactnum import DomainError

__all__ = [
    "Orientation",
    "TriCell",
    "Region",
    "RegionSpec",
    "STEPS",
    "cells_inside",
    "axis_cells",
    "build_hexagon",
    "build_general_hexagon",
    "build_intruded",
    "build_h_prime",
    "build_h_double_prime",
    "build_R",
    "build_Rbar",
    "split_factorization",
    "remove_forced_lozenges",
    "region_from_json",
]


class Orientation(enum.Enum):
    RIGHT = "R"  # vertical edge on the left, apex pointing right
    LEFT = "L"


class TriCell(NamedTuple):
    strip: int
    level: int

    @classmethod
    def R(cls, i: int, j: int) -> "TriCell":
        return cls(i, 2 * j)

    @classmethod
    def L(cls, i: int, j: int) -> "TriCell":
        return cls(i, 2 * j + 1)

    @property
    def orientation(self) -> Orientation:
        return Orientation.RIGHT if self.level % 2 == 0 else Orientation.LEFT

    @property
    def row(self) -> int:
        return self.level // 2

    def vertices(self) -> tuple[tuple[int, int], ...]:
        i, j = self.strip, self.row
        if self.level % 2 == 0:
            return ((i, j), (i, j + 1), (i + 1, j))
        return ((i, j + 1), (i + 1, j), (i + 1, j + 1))

    def neighbors(self) -> tuple["TriCell", "TriCell", "TriCell"]:
        s, lv = self
        if lv % 2 == 0:
            across = TriCell(s - 1, lv + 1)
        else:
            across = TriCell(s + 1, lv - 1)
        return (TriCell(s, lv - 1), TriCell(s, lv + 1), across)

    def height2_range(self) -> tuple[int, int]:
        """Min and max of twice the Cartesian height over the vertices."""
        ys = [2 * j + i for i, j in self.vertices()]
        return min(ys), max(ys)


def _pair(c1: TriCell, c2: TriCell) -> frozenset:
    return frozenset((c1, c2))


def is_adjacent(c1: TriCell, c2: TriCell) -> bool:
    return c2 in c1.neighbors()


FAMILIES = ("Hexagon", "Intruded", "HPrime", "HDoublePrime", "R", "Rbar", "PlusPart", "MinusPart", "Custom")


@dataclass(frozen=True)
class RegionSpec:
    family: str
    params: tuple[tuple[str, int], ...] = ()

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown region family {self.family!r}")

    @classmethod
    def make(cls, family: str, **params: int) -> "RegionSpec":
        return cls(family, tuple(params.items()))

    def as_dict(self) -> dict:
        return {"family": self.family, "params": dict(self.params)}

    def __str__(self):
        inner = ",".join(f"{k}={v}" for k, v in self.params)
        return f"{self.family}({inner})"


@dataclass(frozen=True)
class Region:
    """A finite set of unit triangles with optional weight-1/2 lozenge positions.

    ``half_weight`` holds unordered adjacent pairs; a lozenge covering such a
    pair has weight 1/2, every other lozenge weight 1.  ``marks`` names cells
    (x, y, z, w) used by the condensation identities.
    """

    cells: frozenset
    half_weight: frozenset = frozenset()
    marks: tuple = ()
    spec: RegionSpec | None = None
    untileable: bool = False

    def __post_init__(self):
        cells = frozenset(TriCell(*c) for c in self.cells)
        object.__setattr__(self, "cells", cells)
        pairs = frozenset(frozenset(TriCell(*c) for c in p) for p in self.half_weight)
        for p in pairs:
            a, b = tuple(p)
            if not (a in cells and b in cells and is_adjacent(a, b)):
                raise ValueError(f"half-weight pair {sorted(p)} is not an adjacent pair of the region")
        object.__setattr__(self, "half_weight", pairs)
        marks = tuple(sorted((str(k), TriCell(*v)) for k, v in dict(self.marks).items()))
        for label, c in marks:
            if c not in cells:
                raise ValueError(f"mark {label} at {c} is not a cell of the region")
        object.__setattr__(self, "marks", marks)

    # -- basic queries -------------------------------------------------
    def __len__(self) -> int:
        return len(self.cells)

    def __contains__(self, cell) -> bool:
        return cell in self.cells

    def mark(self, label: str) -> TriCell:
        return dict(self.marks)[label]

    def weight(self, c1: TriCell, c2: TriCell) -> Fraction | int:
        return Fraction(1, 2) if _pair(c1, c2) in self.half_weight else 1

    def orientation_counts(self) -> tuple[int, int]:
        """(number of right-pointing, number of left-pointing) cells."""
        r = sum(1 for c in self.cells if c.level % 2 == 0)
        return r, len(self.cells) - r

    def imbalance(self) -> int:
        r, l = self.orientation_counts()
        return r - l

    def edges(self) -> Iterable[tuple[TriCell, TriCell]]:
        """Adjacent pairs (each once, right-pointing cell first)."""
        for c in sorted(self.cells):
            if c.level % 2 == 0:
                for n in c.neighbors():
                    if n in self.cells:
                        yield c, n

    def boundary_cells(self) -> list[TriCell]:
        """Cells with at least one edge on the boundary of the region."""
        return sorted(c for c in self.cells if any(n not in self.cells for n in c.neighbors()))

    def outer_face_cells(self) -> list[TriCell]:
        """Cells whose dual vertex lies on the outer face of the dual graph.

        Missing triangles that can be reached from outside the region through
        shared corners all belong to the outer face, so a cell is on it when
        one of its corners is a corner of such a triangle.
        """
        if not self.cells:
            return []
        lo_s = min(c.strip for c in self.cells) - 1
        hi_s = max(c.strip for c in self.cells) + 1
        lo_l = min(c.level for c in self.cells) - 2 * (hi_s - lo_s) - 4
        hi_l = max(c.level for c in self.cells) + 2 * (hi_s - lo_s) + 4

        def outside_box(c):
            return not (lo_s <= c.strip <= hi_s and lo_l <= c.level <= hi_l)

        corner_of: dict[tuple[int, int], list[TriCell]] = {}
        for s in range(lo_s, hi_s + 1):
            for lv in range(lo_l, hi_l + 1):
                c = TriCell(s, lv)
                if c not in self.cells:
                    for v in c.vertices():
                        corner_of.setdefault(v, []).append(c)
        start = TriCell(lo_s, lo_l)
        seen, stack = {start}, [start]
        while stack:
            c = stack.pop()
            for v in c.vertices():
                for n in corner_of.get(v, ()):
                    if n not in seen and not outside_box(n):
                        seen.add(n)
                        stack.append(n)
        outer_vertices = {v for c in seen for v in c.vertices()}
        return sorted(c for c in self.cells if outer_vertices.intersection(c.vertices()))

    # -- derived regions -----------------------------------------------
    def remove(self, cells: Iterable[TriCell], spec: RegionSpec | None = None) -> "Region":
        gone = set(cells)
        missing = gone - self.cells
        if missing:
            raise ValueError(f"cells {sorted(missing)} are not in the region")
        keep = self.cells - gone
        hw = frozenset(p for p in self.half_weight if p <= keep)
        marks = tuple((k, v) for k, v in self.marks if v in keep)
        return Region(keep, hw, marks, spec, self.untileable)

    def without_marks(self, *labels: str) -> "Region":
        """The region with the named marked cells deleted (marks dropped)."""
        d = dict(self.marks)
        r = self.remove([d[k] for k in labels])
        return replace(r, marks=())

    def with_spec(self, spec: RegionSpec | None) -> "Region":
        return replace(self, spec=spec)

    def transform(self, fn) -> "Region":
        return Region(
            frozenset(fn(c) for c in self.cells),
            frozenset(frozenset(fn(c) for c in p) for p in self.half_weight),
            tuple((k, fn(v)) for k, v in self.marks),
            self.spec,
            self.untileable,
        )

    def translate(self, di: int, dj: int) -> "Region":
        return self.transform(lambda c: TriCell(c.strip + di, c.level + 2 * dj))

    def reflect_horizontal(self) -> "Region":
        """Mirror in a horizontal line: (i, j) -> (i, -i - j)."""

        def f(c: TriCell) -> TriCell:
            i, j = c.strip, c.row
            if c.level % 2 == 0:
                return TriCell.R(i, -i - j - 1)
            return TriCell.L(i, -i - j - 2)

        return self.transform(f)

    def reflect_vertical(self) -> "Region":
        """Mirror in a vertical line: (i, j) -> (-i, i + j)."""

        def f(c: TriCell) -> TriCell:
            i, j = c.strip, c.row
            if c.level % 2 == 0:
                return TriCell.L(-i - 1, i + j)
            return TriCell.R(-i - 1, i + j + 1)

        return self.transform(f)

    def canonical_key(self) -> tuple:
        """Key that is equal for congruent regions (translations and the
        lattice-preserving reflections); marks and spec are ignored."""
        best = None
        variants = [self, self.reflect_horizontal(), self.reflect_vertical(), self.reflect_horizontal().reflect_vertical()]
        for v in variants:
            if not v.cells:
                return ((), ())
            lo = min(v.cells)
            # translation must preserve parity of level, so shift rows only
            di, dj = -lo.strip, -(lo.level // 2)
            t = v.translate(di, dj)
            key = (tuple(sorted(t.cells)), tuple(sorted(tuple(sorted(p)) for p in t.half_weight)))
            if best is None or key < best:
                best = key
        return best

    def congruent(self, other: "Region") -> bool:
        return self.canonical_key() == other.canonical_key()

    # -- serialization -------------------------------------------------
    def to_dict(self) -> dict:
        return {
            "spec": self.spec.as_dict() if self.spec else None,
            "cells": [list(c) for c in sorted(self.cells)],
            "half_weight": sorted([list(c) for c in sorted(p)] for p in self.half_weight),
            "marks": {k: list(v) for k, v in self.marks},
            "untileable": self.untileable,
        }

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, **kw)


def region_from_json(text: str | Mapping) -> Region:
    data = json.loads(text) if isinstance(text, str) else dict(text)
    spec = None
    if data.get("spec"):
        spec = RegionSpec.make(data["spec"]["family"], **data["spec"]["params"])
    return Region(
        frozenset(TriCell(*c) for c in data["cells"]),
        frozenset(frozenset(TriCell(*c) for c in p) for p in data.get("half_weight", [])),
        tuple((k, TriCell(*v)) for k, v in data.get("marks", {}).items()),
        spec,
        bool(data.get("untileable", False)),
    )


# ---------------------------------------------------------------------------
# polygon rasterisation

STEPS = {
    "N": (0, 1),
    "S": (0, -1),
    "NE": (1, 0),
    "SW": (-1, 0),
    "SE": (1, -1),
    "NW": (-1, 1),
}


def trace(start: tuple[int, int], moves: Iterable[tuple[str, int]]) -> list[tuple[int, int]]:
    """Lattice points visited by a boundary path given as (direction, length) runs."""
    pts = [start]
    i, j = start
    for d, n in moves:
        di, dj = STEPS[d]
        for _ in range(n):
            i, j = i + di, j + dj
            pts.append((i, j))
    return pts


def cells_inside(path: list[tuple[int, int]]) -> frozenset:
    """Unit triangles whose centroid lies inside a closed lattice path."""
    if path[0] == path[-1]:
        path = path[:-1]
    if len(path) < 3:
        return frozenset()
    poly = [(3 * i, 3 * j) for i, j in path]
    imin = min(p[0] for p in path)
    imax = max(p[0] for p in path)
    jmin = min(p[1] for p in path)
    jmax = max(p[1] for p in path)
    out = set()
    for i in range(imin - 1, imax + 1):
        for j in range(jmin - 1, jmax + 1):
            for t in (0, 1):
                px, py = 3 * i + 1 + t, 3 * j + 1 + t
                if _point_in_polygon(px, py, poly):
                    out.add(TriCell(i, 2 * j + t))
    return frozenset(out)


def _point_in_polygon(px: int, py: int, poly: list[tuple[int, int]]) -> bool:
    # centroids never sit on lattice lines, so ray casting has no ties
    inside = False
    n = len(poly)
    for k in range(n):
        x1, y1 = poly[k]
        x2, y2 = poly[(k + 1) % n]
        if (y1 > py) != (y2 > py):
            xint = x1 + Fraction((py - y1) * (x2 - x1), y2 - y1)
            if px < xint:
                inside = not inside
    return inside


def axis_cells(cells: Iterable[TriCell], height2: int) -> list[TriCell]:
    """Cells cut by the horizontal line at doubled height ``height2``, left to right."""
    hit = []
    for c in cells:
        lo, hi = c.height2_range()
        if lo < height2 < hi:
            hit.append(c)
    return sorted(hit)


# ---------------------------------------------------------------------------
# constructors


def _nonneg(**kw):
    for k, v in kw.items():
        if not isinstance(v, int) or v < 0:
            raise DomainError(f"{k} must be a nonnegative integer, got {v!r}")


def build_general_hexagon(p: int, q: int, r: int, s: int, t: int, u: int, start=(0, 0)) -> frozenset:
    """Cells of the hexagon with sides p, q, r, s, t, u clockwise from the left
    (N, NE, SE, S, SW, NW), starting at its lower-left corner."""
    if q + r != t + u or p - r != s - u:
        raise DomainError(f"sides {(p, q, r, s, t, u)} do not close up")
    path = trace(start, [("N", p), ("NE", q), ("SE", r), ("S", s), ("SW", t), ("NW", u)])
    return cells_inside(path)


def build_hexagon(a: int, b: int, c: int) -> Region:
    """H_{a,b,c}: sides a, b, c, a, b, c clockwise from the (vertical) left side.

    The lower-left corner sits at the lattice origin.
    """
    _nonneg(a=a, b=b, c=c)
    cells = build_general_hexagon(a, b, c, a, b, c)
    expected = 2 * (a * b + b * c + c * a)
    if len(cells) != expected:  # pragma: no cover - geometry guard
        raise AssertionError(f"hexagon {a},{b},{c}: {len(cells)} cells, expected {expected}")
    return Region(cells, spec=RegionSpec.make("Hexagon", a=a, b=b, c=c))


def build_intruded(m: int, b: int, c: int, d: int) -> Region:
    """H_{m,b,c;d}: H_{m,b,c} minus the first 2d triangles cut by the bisector of
    the left side, counted from the left.

    For even ``m`` the removed triangles form d horizontal lozenges, for odd
    ``m`` they form d bowties.  Holes only need to fit inside the hexagon; when
    ``d > min(b, c)`` the region exists but (as the path picture shows) has no
    tiling.
    """
    _nonneg(m=m, b=b, c=c, d=d)
    hexagon = build_hexagon(m, b, c)
    axis = axis_cells(hexagon.cells, m)
    if 2 * d > len(axis):
        raise DomainError(f"only {len(axis) // 2} holes fit on the bisector of H_{m},{b},{c}; d={d}")
    spec = RegionSpec.make("Intruded", m=m, b=b, c=c, d=d)
    region = hexagon.remove(axis[: 2 * d], spec)
    expected = 2 * (m * b + b * c + c * m) - 2 * d
    assert len(region) == expected
    return region


def _h_prime_base(a: int, b: int, c: int, k: int):
    _nonneg(a=a, b=b, c=c, k=k)
    if b < 1 or c < 1:
        raise DomainError(f"need b, c >= 1, got b={b}, c={c}")
    if k > min(b, c):
        raise DomainError(f"need k <= min(b, c), got k={k}")
    cells = build_general_hexagon(2 * a, b + 1, c, 2 * a + 1, b, c + 1)
    return cells, axis_cells(cells, 2 * a)


def build_h_prime(a: int, b: int, c: int, k: int) -> Region:
    """Hexagon with sides 2a, b+1, c, 2a+1, b, c+1 minus its first 2k+1 bisector
    triangles, with the four condensation marks (see :func:`_prime_marks`)."""
    cells, axis = _h_prime_base(a, b, c, k)
    removed = axis[: 2 * k + 1]
    keep = cells - set(removed)
    marks = _prime_marks(a, b, c, axis[2 * k + 1])
    return Region(keep, marks=marks, spec=RegionSpec.make("HPrime", a=a, b=b, c=c, k=k))


def build_h_double_prime(a: int, b: int, c: int, k: int) -> Region:
    """Same hexagon as :func:`build_h_prime` minus only 2k bisector triangles;
    the dual graph has one more right-pointing than left-pointing vertex."""
    cells, axis = _h_prime_base(a, b, c, k)
    keep = cells - set(axis[: 2 * k])
    marks = _double_prime_marks(a, b, c, axis[2 * k])
    return Region(keep, marks=marks, spec=RegionSpec.make("HDoublePrime", a=a, b=b, c=c, k=k))


# Mark placement in the primed hexagons (lower-left corner at the origin,
# top corner T = (b, 2a) between the NE and SE sides, bottom corner
# B = (c+1, -c-1) between the NW and SW sides, right side on i = b+c+1):
#
#              T
#           t /\
#    2a      /  \  c
#           /    \
#    h ...==      |  2a+1
#           \     |
#    c+1     \    | 
#             \   |
#           bo \__| r
#              B  b
#
#   h   tip of the hole: the first bisector triangle still present
#   t   left-pointing triangle just under T
#   bo  left-pointing triangle in the corner B
#   r   right-pointing triangle in the lower-right corner, on the SW side
#
# Counter-clockwise the outer face meets h, bo, r, t.  In H' (balanced) the
# marks are x=h, y=bo, z=r, w=t.  In H'' the left-pointing cells outnumber the
# right-pointing ones by one, so the lone right-pointing mark must be w and
# the labels rotate to x=t, y=h, z=bo, w=r.


def _corner_cells(a, b, c):
    return TriCell.L(b, 2 * a - 1), TriCell.L(c, -c - 1), TriCell.R(b + c, -c - 1)


def _prime_marks(a, b, c, tip: TriCell):
    top, bottom, lower_right = _corner_cells(a, b, c)
    return (("x", tip), ("y", bottom), ("z", lower_right), ("w", top))


def _double_prime_marks(a, b, c, tip: TriCell):
    top, bottom, lower_right = _corner_cells(a, b, c)
    return (("x", top), ("y", tip), ("z", bottom), ("w", lower_right))


def _zigzag_region(m: int, n: int, x: int, bar: bool) -> Region:
    """Shared boundary tracing for the two Ciucu families.

    O is the origin, A = O + n*(2, -1) lies n lattice points to the right on
    the horizontal line l through O, Obar = O + NW and B lies m lattice points
    to the left of Obar on the horizontal line through Obar.
    """
    zig = [("SW", 1), ("NW", 1)]
    A = (2 * n, -n)
    moves: list[tuple[str, int]] = zig * n  # A -> O along l
    if not bar:
        if m == 0:
            moves += [("N", x + 1), ("NE", n), ("SE", n), ("S", x + 1)]
        else:
            moves += [("N", 1), ("SW", 1)]  # O -> Obar
            moves += zig * m  # Obar -> B along lbar
            moves += [("N", x), ("NE", m + n + 1), ("SE", m + n), ("S", x + 1)]
        start = A
    else:
        if n == 0:
            start = (-1, 1)  # Obar; O is not used
            moves = zig * m + [("N", x), ("NE", m), ("SE", m), ("S", x)]
        else:
            moves += [("NW", 1)]
            moves += zig * m
            moves += [("N", x), ("NE", m + n), ("SE", m + n + 1), ("S", x)]
            start = A
    path = trace(start, moves)
    if path[-1] != path[0]:  # pragma: no cover - geometry guard
        raise AssertionError(f"boundary of {'Rbar' if bar else 'R'}({m},{n},{x}) does not close")
    cells = cells_inside(path)
    # horizontal lozenges cut in half by l, between A and O
    half = frozenset(_pair(TriCell.L(2 * t, -t - 1), TriCell.R(2 * t + 1, -t - 1)) for t in range(n))
    fam = "Rbar" if bar else "R"
    return Region(cells, half, spec=RegionSpec.make(fam, m=m, n=n, x=x))


def build_R(m: int, n: int, x: int) -> Region:
    """Ciucu's region R_{m,n,x}; lozenges along l carry weight 1/2."""
    if not (isinstance(m, int) and isinstance(n, int) and isinstance(x, int)) or m < 0 or n < 0:
        raise DomainError(f"R needs nonnegative m, n; got m={m}, n={n}")
    if (m >= 1 and x < 0) or (m == 0 and x < -1):
        raise DomainError(f"R_{{{m},{n},{x}}} is outside the domain (x >= 0, or x >= -1 when m = 0)")
    return _zigzag_region(m, n, x, bar=False)


def build_Rbar(m: int, n: int, x: int) -> Region:
    """Ciucu's region Rbar_{m,n,x}; no weighted lozenges when n = 0."""
    _nonneg(m=m, n=n, x=x)
    return _zigzag_region(m, n, x, bar=True)


def split_factorization(m: int, c: int, d: int) -> tuple[Region, Region]:
    """Cut H_{m,c,c;d} along its symmetry axis into (plus, minus).

    ``plus`` is the bottom part: every cell below the axis plus the surviving
    axis triangles, with the horizontal lozenges on the axis weighted 1/2.
    ``minus`` is everything strictly above the axis.  When d = c the holes
    already disconnect the hexagon and there is nothing on the axis.
    """
    _nonneg(m=m, c=c, d=d)
    if d > c:
        raise DomainError(f"split needs d <= c, got d={d}, c={c}")
    whole = build_intruded(m, c, c, d)
    axis = axis_cells(whole.cells, m)
    axis_set = set(axis)
    minus_cells = frozenset(cell for cell in whole.cells if cell.height2_range()[0] >= m)
    plus_cells = whole.cells - minus_cells
    half = frozenset(_pair(p, q) for p in axis for q in p.neighbors() if q in axis_set)
    plus = Region(plus_cells, half, spec=RegionSpec.make("PlusPart", m=m, c=c, d=d))
    minus = Region(minus_cells, spec=RegionSpec.make("MinusPart", m=m, c=c, d=d))
    return plus, minus


def remove_forced_lozenges(region: Region) -> tuple[Region, Fraction]:
    """Strip lozenges that every tiling must contain.

    Repeatedly pairs a cell that has a single remaining neighbour with that
    neighbour.  Returns the reduced region and the product of the weights of
    the removed lozenges, so that M(region) = factor * M(reduced).  A cell with
    no neighbour left marks the reduced region untileable.
    """
    cells = set(region.cells)
    factor = Fraction(1)
    queue = list(cells)
    untileable = region.untileable
    while queue:
        c = queue.pop()
        if c not in cells:
            continue
        nbrs = [n for n in c.neighbors() if n in cells]
        if not nbrs:
            untileable = True
            continue
        if len(nbrs) == 1:
            partner = nbrs[0]
            factor *= region.weight(c, partner)
            cells.discard(c)
            cells.discard(partner)
            for n in partner.neighbors():
                if n in cells:
                    queue.append(n)
    keep = frozenset(cells)
    reduced = Region(
        keep,
        frozenset(p for p in region.half_weight if p <= keep),
        tuple((k, v) for k, v in region.marks if v in keep),
        region.spec,
        untileable,
    )
    return reduced, factor
