"""Core geometric vocabulary: exact integer points, rectangles, dominance.

Every structure in this package is built on two strict partial orders over
points with pairwise-distinct coordinates:

* ``q`` is *dominated* by ``p`` when ``p`` is strictly up-right of ``q``;
* ``p`` *anti-dominates* ``q`` when ``p`` is strictly up-left of ``q``.

Inputs are validated to be in general position (all x distinct, all y
distinct), which makes every predicate an exact integer comparison.
Rectangles are closed sets throughout.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

Coord = Union[int, Fraction]


class GeomError(ValueError):
    """Base class for input-validation failures."""


class DuplicateX(GeomError):
    """Two input points share an x coordinate."""

    def __init__(self, i: int, j: int):
        super().__init__(f"points {i} and {j} share an x coordinate")
        self.i = i
        self.j = j


class DuplicateY(GeomError):
    """Two input points share a y coordinate."""

    def __init__(self, i: int, j: int):
        super().__init__(f"points {i} and {j} share a y coordinate")
        self.i = i
        self.j = j


@dataclass(frozen=True)
class Point:
    x: int
    y: int
    id: int


@dataclass(frozen=True)
class Rect:
    """Closed axis-parallel rectangle spanned by two support points.

    ``support`` records the ordered pair of point ids sitting on antipodal
    corners.  ``lo``/``hi`` are the min/max corners.
    """

    lo: tuple[int, int]
    hi: tuple[int, int]
    support: tuple[int, int]

    def contains(self, qx: Coord, qy: Coord) -> bool:
        return self.lo[0] <= qx <= self.hi[0] and self.lo[1] <= qy <= self.hi[1]

    def contains_interior(self, qx: Coord, qy: Coord) -> bool:
        return self.lo[0] < qx < self.hi[0] and self.lo[1] < qy < self.hi[1]

    def intersects(self, other: "Rect") -> bool:
        """Closed intersection test (shared boundary counts)."""
        return (self.lo[0] <= other.hi[0] and other.lo[0] <= self.hi[0]
                and self.lo[1] <= other.hi[1] and other.lo[1] <= self.hi[1])

    def interior_intersects(self, other: "Rect") -> bool:
        return (self.lo[0] < other.hi[0] and other.lo[0] < self.hi[0]
                and self.lo[1] < other.hi[1] and other.lo[1] < self.hi[1])

    def area(self) -> int:
        return (self.hi[0] - self.lo[0]) * (self.hi[1] - self.lo[1])


def dominates(p: Point, q: Point) -> bool:
    """True iff q is strictly below-left of p (q ≺ p)."""
    return q.x < p.x and q.y < p.y


def anti_dominates(p: Point, q: Point) -> bool:
    """True iff p is strictly up-left of q."""
    return p.x < q.x and p.y > q.y


def rect_of(p: Point, q: Point) -> Rect:
    """Closed bounding rectangle of {p, q}, with p and q as antipodal corners."""
    if p.id == q.id:
        raise GeomError(f"rect_of needs two distinct points, got id {p.id} twice")
    lo = (min(p.x, q.x), min(p.y, q.y))
    hi = (max(p.x, q.x), max(p.y, q.y))
    return Rect(lo=lo, hi=hi, support=(p.id, q.id))


class PointSet:
    """Validated planar point set in general position.

    Immutable after construction.  ``by_x``/``by_y`` are the permutations of
    ids in increasing coordinate order; ``rank_x``/``rank_y`` their inverses.
    """

    __slots__ = ("points", "xs", "ys", "by_x", "by_y", "rank_x", "rank_y")

    def __init__(self, points: Sequence[Point], by_x: Sequence[int], by_y: Sequence[int]):
        self.points = tuple(points)
        self.xs = [p.x for p in self.points]
        self.ys = [p.y for p in self.points]
        self.by_x = tuple(by_x)
        self.by_y = tuple(by_y)
        n = len(self.points)
        rank_x = [0] * n
        rank_y = [0] * n
        for r, i in enumerate(self.by_x):
            rank_x[i] = r
        for r, i in enumerate(self.by_y):
            rank_y[i] = r
        self.rank_x = tuple(rank_x)
        self.rank_y = tuple(rank_y)

    @property
    def n(self) -> int:
        return len(self.points)

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __getitem__(self, i: int) -> Point:
        return self.points[i]

    def coords(self) -> list[tuple[int, int]]:
        return [(p.x, p.y) for p in self.points]


def validate(coords: Iterable[tuple[int, int]]) -> PointSet:
    """Build a PointSet, rejecting coordinate ties.

    Raises DuplicateX/DuplicateY naming the first offending index pair in
    sorted order.
    """
    pts = [Point(int(x), int(y), i) for i, (x, y) in enumerate(coords)]
    by_x = sorted(range(len(pts)), key=lambda i: pts[i].x)
    for a, b in zip(by_x, by_x[1:]):
        if pts[a].x == pts[b].x:
            raise DuplicateX(min(a, b), max(a, b))
    by_y = sorted(range(len(pts)), key=lambda i: pts[i].y)
    for a, b in zip(by_y, by_y[1:]):
        if pts[a].y == pts[b].y:
            raise DuplicateY(min(a, b), max(a, b))
    return PointSet(pts, by_x, by_y)


def dbl(v: Coord) -> int:
    """Map an int or half-integer Fraction to the doubled-integer lattice.

    All oracle and query arithmetic runs on doubled coordinates so that cell
    midpoints stay exact without floating point.
    """
    w = 2 * v
    if isinstance(w, Fraction):
        if w.denominator != 1:
            raise GeomError(f"query coordinate {v!r} is not an integer or half-integer")
        return int(w)
    return int(w)
