"""Box hull: the union of all empty influence rectangles.

The hull is exactly the closed complement of four shadow regions, one per
extremal staircase: a point is outside iff it strictly dominates a maxima
point, is strictly dominated by a minima point, or strictly anti-relates to
the up-left / down-right chains.  Membership is therefore four binary
searches.  The boundary is the four staircases through the chains, joined
at the leftmost / bottommost / rightmost / topmost points.
"""

from __future__ import annotations

from bisect import bisect_left, bisect_right
from dataclasses import dataclass
import numpy as np

from .chains import MAX_ANTI, MAX_DOM, MIN_ANTI, MIN_DOM, maxima
from .geom import Coord, PointSet, Rect, dbl, rect_of
from .rangestack import NEG_INF

POS_INF = -NEG_INF


class NotInHull(ValueError):
    """witness_rect was asked for a point outside the hull."""


@dataclass(frozen=True)
class ShadowSet:
    """The four forbidden staircase regions, each given by its boundary
    polyline (chain points plus outer corner vertices, x-increasing)."""

    dom_max: tuple     # shadow of the up-right staircase
    dom_min: tuple     # shadow of the down-left staircase
    anti_max: tuple    # shadow of the up-left staircase
    anti_min: tuple    # shadow of the down-right staircase


def _staircase(pts, corner) -> list[tuple[int, int]]:
    """Chain vertices interleaved with corner(prev, cur) outer corners."""
    out = [pts[0]]
    for a, b in zip(pts, pts[1:]):
        c = corner(a, b)
        if c != a and c != b:
            out.append(c)
        out.append(b)
    return out


class BoxHull:
    """Queryable hull: four chains (doubled coordinates for exact closed
    comparisons), boundary polygon, and exact area."""

    def __init__(self, ps: PointSet):
        if ps.n < 2:
            raise ValueError("need at least two points")
        self.ps = ps
        xs, ys = ps.xs, ps.ys

        def pts_of(kind):
            return [(xs[i], ys[i]) for i in maxima(ps, kind).ids]

        self.ne = pts_of(MAX_DOM)    # x up, y down; first = topmost, last = rightmost
        self.sw = pts_of(MIN_DOM)    # x up, y down; first = leftmost, last = bottommost
        self.nw = pts_of(MAX_ANTI)   # x up, y up; first = leftmost, last = topmost
        self.se = pts_of(MIN_ANTI)   # x up, y up; first = bottommost, last = rightmost
        # doubled coordinate arrays for the membership searches
        self._ne_x = [2 * x for x, _ in self.ne]
        self._ne_y = [2 * y for _, y in self.ne]
        self._sw_x = [2 * x for x, _ in self.sw]
        self._sw_y = [2 * y for _, y in self.sw]
        self._nw_x = [2 * x for x, _ in self.nw]
        self._nw_y = [2 * y for _, y in self.nw]
        self._se_x = [2 * x for x, _ in self.se]
        self._se_y = [2 * y for _, y in self.se]
        self._sw_y_asc = self._sw_y[::-1]
        self._ne_y_asc = self._ne_y[::-1]
        self.bbox = (min(xs), min(ys), max(xs), max(ys))
        self.boundary = self._boundary_polygon()

    # -- boundary -----------------------------------------------------------

    def _boundary_polygon(self) -> list[tuple[int, int]]:
        """Counterclockwise rectilinear polygon; may pinch at shared
        chain corners (the hull can be two boxes glued at a point)."""
        sw = _staircase(self.sw, lambda a, b: (a[0], b[1]))
        se = _staircase(self.se, lambda a, b: (b[0], a[1]))
        ne = _staircase(self.ne, lambda a, b: (b[0], a[1]))[::-1]
        nw = _staircase(self.nw, lambda a, b: (a[0], b[1]))[::-1]
        verts: list[tuple[int, int]] = []
        for part in (sw, se, ne, nw):
            for v in part:
                if not verts or verts[-1] != v:
                    verts.append(v)
        if len(verts) > 1 and verts[0] == verts[-1]:
            verts.pop()
        # drop collinear middles
        out: list[tuple[int, int]] = []
        for v in verts:
            while len(out) >= 2 and (
                    (out[-2][0] == out[-1][0] == v[0])
                    or (out[-2][1] == out[-1][1] == v[1])):
                out.pop()
            out.append(v)
        while len(out) >= 3 and (
                (out[-2][0] == out[-1][0] == out[0][0])
                or (out[-2][1] == out[-1][1] == out[0][1])):
            out.pop()
        return out

    def area(self) -> int:
        verts = self.boundary
        if len(verts) < 4:
            return 0
        twice = 0
        for (x1, y1), (x2, y2) in zip(verts, verts[1:] + verts[:1]):
            twice += x1 * y2 - x2 * y1
        assert twice % 2 == 0
        return twice // 2

    # -- membership -----------------------------------------------------------

    def _blocked2(self, qx2: int, qy2: int) -> bool:
        """True iff the doubled-coordinate point lies strictly inside one of
        the four shadows."""
        # strictly dominates a NE-chain point?
        i = bisect_left(self._ne_x, qx2)
        if i and self._ne_y[i - 1] < qy2:
            return True
        # strictly dominated by a SW-chain point?
        i = bisect_right(self._sw_x, qx2)
        if i < len(self._sw_x) and qy2 < self._sw_y[i]:
            return True
        # strictly up-left of a NW-chain point?
        i = bisect_right(self._nw_x, qx2)
        if i < len(self._nw_x) and qy2 > self._nw_y[i]:
            return True
        # strictly down-right of a SE-chain point?
        i = bisect_left(self._se_x, qx2)
        if i and self._se_y[i - 1] > qy2:
            return True
        return False

    def contains(self, q: tuple[Coord, Coord]) -> bool:
        """Closed membership; boundary points are inside.  A point is in the
        hull iff it lies in the bounding box and in no open shadow (rows and
        columns extending past the extreme points are shadow-free but still
        outside, hence the box clamp)."""
        qx2, qy2 = dbl(q[0]), dbl(q[1])
        x1, y1, x2, y2 = self.bbox
        if not (2 * x1 <= qx2 <= 2 * x2 and 2 * y1 <= qy2 <= 2 * y2):
            return False
        return not self._blocked2(qx2, qy2)

    def contains_many2(self, qx2: np.ndarray, qy2: np.ndarray) -> np.ndarray:
        """Vectorised membership on doubled integer coordinates."""
        inf_lo = np.int64(NEG_INF)
        inf_hi = np.int64(POS_INF)

        def pick(arr, idx, default):
            a = np.asarray(arr, dtype=np.int64)
            out = np.full(len(idx), default, dtype=np.int64)
            ok = (idx >= 0) & (idx < len(a))
            out[ok] = a[idx[ok]]
            return out

        ne_x = np.asarray(self._ne_x, dtype=np.int64)
        i = np.searchsorted(ne_x, qx2, side="left") - 1
        blocked = pick(self._ne_y, i, inf_hi) < qy2
        sw_x = np.asarray(self._sw_x, dtype=np.int64)
        i = np.searchsorted(sw_x, qx2, side="right")
        blocked |= qy2 < pick(self._sw_y, i, inf_lo)
        nw_x = np.asarray(self._nw_x, dtype=np.int64)
        i = np.searchsorted(nw_x, qx2, side="right")
        blocked |= qy2 > pick(self._nw_y, i, inf_hi)
        se_x = np.asarray(self._se_x, dtype=np.int64)
        i = np.searchsorted(se_x, qx2, side="left") - 1
        blocked |= pick(self._se_y, i, inf_lo) > qy2
        x1, y1, x2, y2 = self.bbox
        inside_box = ((2 * x1 <= qx2) & (qx2 <= 2 * x2)
                      & (2 * y1 <= qy2) & (qy2 <= 2 * y2))
        return inside_box & ~blocked

    def vertical_extent2(self, qx2: int):
        """Hull slice on the vertical line x = qx2/2 as a doubled-y interval
        [lo2, hi2], or None.  Axis convexity makes every slice one interval."""
        x1, y1, x2, y2 = self.bbox
        if not 2 * x1 <= qx2 <= 2 * x2:
            return None
        lo = 2 * y1
        i = bisect_right(self._sw_x, qx2)
        if i < len(self._sw_x):
            lo = max(lo, self._sw_y[i])
        i = bisect_left(self._se_x, qx2)
        if i:
            lo = max(lo, self._se_y[i - 1])
        hi = 2 * y2
        i = bisect_left(self._ne_x, qx2)
        if i:
            hi = min(hi, self._ne_y[i - 1])
        i = bisect_right(self._nw_x, qx2)
        if i < len(self._nw_x):
            hi = min(hi, self._nw_y[i])
        if lo > hi:
            return None
        return lo, hi

    def horizontal_extent2(self, qy2: int):
        """Hull slice on a horizontal line as a doubled-x interval, or None."""
        x1, y1, x2, y2 = self.bbox
        if not 2 * y1 <= qy2 <= 2 * y2:
            return None
        lo = 2 * x1
        # up-left chain: a point with cy < qy and cx > qx blocks; so x must
        # reach at least the largest such cx
        i = bisect_left(self._nw_y, qy2)
        if i:
            lo = max(lo, self._nw_x[i - 1])
        # down-left staircase: w with wy > qy and wx > qx blocks (y desc)
        cnt = len(self._sw_y) - bisect_right(self._sw_y_asc, qy2)
        if cnt:
            lo = max(lo, self._sw_x[cnt - 1])
        hi = 2 * x2
        # down-right chain: s with sy > qy and sx < qx blocks (y asc)
        i = bisect_right(self._se_y, qy2)
        if i < len(self._se_y):
            hi = min(hi, self._se_x[i])
        # up-right staircase: m with my < qy and mx < qx blocks (y desc)
        cnt = bisect_left(self._ne_y_asc, qy2)
        if cnt:
            hi = min(hi, self._ne_x[len(self._ne_y) - cnt])
        if lo > hi:
            return None
        return lo, hi

    def shadows(self) -> ShadowSet:
        return ShadowSet(
            dom_max=tuple(_staircase(self.ne, lambda a, b: (b[0], a[1]))),
            dom_min=tuple(_staircase(self.sw, lambda a, b: (a[0], b[1]))),
            anti_max=tuple(_staircase(self.nw, lambda a, b: (a[0], b[1]))),
            anti_min=tuple(_staircase(self.se, lambda a, b: (b[0], a[1]))),
        )


def build_hull(ps: PointSet) -> BoxHull:
    return BoxHull(ps)


def contains(h: BoxHull, q: tuple[Coord, Coord]) -> bool:
    return h.contains(q)


# ---------------------------------------------------------------------------
# witness rectangle


def _empty_rect_check(ps: PointSet, r: Rect) -> bool:
    a, b = r.support
    for p in ps:
        if p.id != a and p.id != b and r.contains(p.x, p.y):
            return False
    return True


def _consecutive_witness(ps, chain_pts, chain_ids, qx2, qy2):
    cx2 = [2 * x for x, _ in chain_pts]
    i = bisect_right(cx2, qx2) - 1
    for j in (i, i - 1, i + 1):
        if 0 <= j < len(chain_pts) - 1:
            r = rect_of(ps[chain_ids[j]], ps[chain_ids[j + 1]])
            if 2 * r.lo[0] <= qx2 <= 2 * r.hi[0] and 2 * r.lo[1] <= qy2 <= 2 * r.hi[1]:
                return r
    return None


def witness_rect(ps: PointSet, h: BoxHull, q: tuple[Coord, Coord]) -> Rect:
    """An empty rectangle containing q, by four-quadrant case analysis:
    antipodal extreme pair when possible, otherwise the extreme point of the
    empty horizontal slab, otherwise consecutive extremal-chain points."""
    qx2, qy2 = dbl(q[0]), dbl(q[1])
    if not h.contains(q):
        raise NotInHull(f"{q!r} is outside the hull")
    xs2 = np.asarray(ps.xs, dtype=np.int64) * 2
    ys2 = np.asarray(ps.ys, dtype=np.int64) * 2
    exact = np.nonzero((xs2 == qx2) & (ys2 == qy2))[0]
    if len(exact):
        # the query is an input point; its consecutive x-neighbour always
        # supports an empty rectangle with it
        pid = int(exact[0])
        r = ps.rank_x[pid]
        nb = ps.by_x[r + 1] if r + 1 < ps.n else ps.by_x[r - 1]
        return rect_of(ps[pid], ps[nb])
    right = xs2 >= qx2
    left = xs2 <= qx2
    up = ys2 >= qy2
    down = ys2 <= qy2
    quads = [right & up, left & up, left & down, right & down]

    def lowest(mask):
        idx = np.nonzero(mask)[0]
        return int(idx[np.argmin(ys2[idx])]) if len(idx) else -1

    def highest(mask):
        idx = np.nonzero(mask)[0]
        return int(idx[np.argmax(ys2[idx])]) if len(idx) else -1

    def checked(a: int, b: int):
        if a == b:
            return None
        r = rect_of(ps[a], ps[b])
        if (2 * r.lo[0] <= qx2 <= 2 * r.hi[0]
                and 2 * r.lo[1] <= qy2 <= 2 * r.hi[1]
                and _empty_rect_check(ps, r)):
            return r
        return None

    if all(bool(m.any()) for m in quads):
        p1, p2 = lowest(quads[0]), lowest(quads[1])
        p3, p4 = highest(quads[2]), highest(quads[3])
        lt = p1 if ys2[p1] <= ys2[p2] else p2          # lower of the two tops
        hb = p3 if ys2[p3] >= ys2[p4] else p4          # higher of the two bottoms
        antipodal = ((lt == p1 and hb == p3) or (lt == p2 and hb == p4))
        if antipodal:
            r = checked(lt, hb)
            if r is not None:
                return r
        else:
            # slab between the higher top point and the lower bottom point;
            # both sit on one side, so probe the other side for the point
            # nearest the slab wall and pair it with the diagonal definer
            y_top = max(ys2[p1], ys2[p2])
            y_bot = min(ys2[p3], ys2[p4])
            in_slab = (ys2 > y_bot) & (ys2 < y_top)
            if lt == p2:  # definers p1, p4 on the right; probe the left side
                cand = np.nonzero(in_slab & (xs2 < qx2))[0]
                if len(cand):
                    pp = int(cand[np.argmax(xs2[cand])])
                    partner = p4 if ys2[pp] >= qy2 else p1
                    r = checked(pp, partner)
                    if r is not None:
                        return r
            else:        # definers p2, p3 on the left; probe the right side
                cand = np.nonzero(in_slab & (xs2 > qx2))[0]
                if len(cand):
                    pp = int(cand[np.argmin(xs2[cand])])
                    partner = p3 if ys2[pp] >= qy2 else p2
                    r = checked(pp, partner)
                    if r is not None:
                        return r
        # fall through to exhaustive extreme-pair probing (tie corner cases)
        for a in (p1, p2):
            for b in (p3, p4):
                r = checked(a, b)
                if r is not None:
                    return r
    chain_map = [
        (quads[0], MAX_DOM, h.ne),
        (quads[2], MIN_DOM, h.sw),
        (quads[1], MAX_ANTI, h.nw),
        (quads[3], MIN_ANTI, h.se),
    ]
    for mask, kind, pts in chain_map:
        if not mask.any():
            ids = maxima(ps, kind).ids
            r = _consecutive_witness(ps, pts, ids, qx2, qy2)
            if r is not None and _empty_rect_check(ps, r):
                return r
    raise AssertionError(f"no witness found for {q!r}; hull membership bug")


# ---------------------------------------------------------------------------
# interior-disjoint decomposition


@dataclass(frozen=True)
class Piece:
    """One rectangle of the decomposition: its own extent plus the support
    pair of the empty rectangle it was carved from."""

    lo: tuple[int, int]
    hi: tuple[int, int]
    support: tuple[int, int]

    def area(self) -> int:
        return (self.hi[0] - self.lo[0]) * (self.hi[1] - self.lo[1])

    def support_rect(self, ps: PointSet) -> Rect:
        return rect_of(ps[self.support[0]], ps[self.support[1]])


@dataclass
class DisjointCover:
    pieces: list

    def total_area(self) -> int:
        return sum(p.area() for p in self.pieces)

    def __len__(self) -> int:
        return len(self.pieces)


def disjoint_cover(ps: PointSet) -> DisjointCover:
    """Left-to-right sweep: each new point p takes its visible partners off
    one of the two live right staircases and emits the strip of hull area
    gained beyond the old right profile, split into one band per partner so
    every piece lies inside that partner's empty rectangle.  The bands tile
    exactly the area the insertion adds, so pieces are pairwise
    interior-disjoint and their union is the final hull."""
    if ps.n < 2:
        raise ValueError("need at least two points")
    xs, ys = ps.xs, ps.ys
    order = list(ps.by_x)
    first = order[0]
    upper = [first]   # maxima staircase of seen points (x up, y down)
    lower = [first]   # down-right staircase of seen points (x up, y up)
    pieces: list[Piece] = []

    def emit(x1, y1, x2, y2, q, pid):
        if x1 < x2 and y1 < y2:
            pieces.append(Piece((x1, y1), (x2, y2), (q, pid)))

    for pid in order[1:]:
        px, py = xs[pid], ys[pid]
        if py > ys[upper[-1]]:
            chain = upper
            # partners: everything p dominates plus the point just above
            j = bisect_left([-ys[i] for i in chain], -py)
            partners = chain[max(0, j - 1):]
            qx1, qy1 = xs[partners[0]], ys[partners[0]]
            if qy1 > py:
                # band above p, left-clipped at the next partner's x
                emit(xs[partners[1]], py, px, qy1, partners[0], pid)
            else:
                emit(qx1, qy1, px, py, partners[0], pid)
            for qa, qb in zip(partners, partners[1:]):
                emit(xs[qb], ys[qb], px, min(py, ys[qa]), qb, pid)
        else:
            chain = lower
            j = bisect_left([ys[i] for i in chain], py)
            partners = chain[max(0, j - 1):]
            qx1, qy1 = xs[partners[0]], ys[partners[0]]
            if qy1 < py:
                emit(xs[partners[1]], qy1, px, py, partners[0], pid)
            else:
                emit(qx1, py, px, qy1, partners[0], pid)
            for qa, qb in zip(partners, partners[1:]):
                emit(xs[qb], max(py, ys[qa]), px, ys[qb], qb, pid)
        while upper and ys[upper[-1]] < py:
            upper.pop()
        upper.append(pid)
        while lower and ys[lower[-1]] > py:
            lower.pop()
        lower.append(pid)
    return DisjointCover(pieces)
