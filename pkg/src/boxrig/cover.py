"""Biclique covers of the empty-rectangle influence graph.

An edge (q, p) with q strictly below-left of p and an empty rectangle exists
exactly when q lies on the maxima of p's lower-left quadrant.  Covers are
built per orientation: points stream in x order into per-strip range stacks
that maintain quadrant maxima; each query point decomposes its quadrant into
O(log n) y-strips, pulls the surviving maxima suffix of each strip out of
the strip's stack history, and registers itself on every returned canonical
set.  One biclique per canonical set with registrants.

Three variants share this skeleton:

* basic: strips are all subtrees of a y-tree with single-point leaves,
  unbuffered stacks (O(n log n) bicliques, weight O(n log^2 n));
* compact: leaf strips hold 3*ceil(log2 n) points, stacks are buffered, leaf
  strips are answered by direct scanning, and all scan/partial results merge
  into one star biclique per query point (O(n) bicliques, same weight);
* k-level: k+1 stacked maxima layers per strip; an arriving point pops the
  prefix it dominates from every layer and reinserts layer i's casualties
  into layer i+1, so layer membership counts within-strip blockers exactly.

The anti-dominance orientation reuses the dominance pipeline on x-reflected
coordinates.
"""

from __future__ import annotations

import gc
import time
from contextlib import contextmanager
from bisect import bisect_left, bisect_right
from collections import Counter
from dataclasses import dataclass, field
from typing import NamedTuple

from .geom import PointSet
from .oracle import brute_k_rig, brute_rig
from .rangestack import NEG_INF, RangeStack

ORIENT_DOM = "dominance"
ORIENT_ANTI = "anti-dominance"

COMPACT_MIN_N = 64  # below this the compact machinery degenerates; use basic


@contextmanager
def _gc_paused():
    """The builders allocate millions of acyclic tuples; pausing the cyclic
    collector for the build avoids quadratic-feeling GC sweeps."""
    was_enabled = gc.isenabled()
    gc.disable()
    try:
        yield
    finally:
        if was_enabled:
            gc.enable()


class Biclique(NamedTuple):
    """Complete bipartite piece: every left point pairs with every right
    point.  Both sides are staircase chains sorted by x; for dominance
    bicliques every right point dominates every left point, for
    anti-dominance every right point is up-left of every left point."""

    left: tuple
    right: tuple
    orientation: str

    @property
    def weight(self) -> int:
        return len(self.left) + len(self.right)

    @property
    def edge_count(self) -> int:
        return len(self.left) * len(self.right)


@dataclass
class CoverStats:
    count: int
    weight: int
    edges: int
    build_ms: float
    variant: str


@dataclass
class BicliqueCover:
    bicliques: list
    stats: CoverStats
    n: int


# ---------------------------------------------------------------------------
# y-tree scaffolding (implicit balanced tree over rank units)


def _tree_nodes(units: int):
    """Balanced binary tree over [0, units); parents precede children."""
    lo: list[int] = []
    hi: list[int] = []
    lc: list[int] = []
    rc: list[int] = []

    def rec(a: int, b: int) -> int:
        idx = len(lo)
        lo.append(a)
        hi.append(b)
        lc.append(-1)
        rc.append(-1)
        if b - a > 1:
            m = (a + b) // 2
            lc[idx] = rec(a, m)
            rc[idx] = rec(m, b)
        return idx

    rec(0, units)
    return lo, hi, lc, rc


def _prefix_nodes_desc(lo, hi, lc, rc, f: int) -> list[int]:
    """Maximal nodes covering units [0, f), highest units first."""
    out: list[int] = []

    def rec(idx: int):
        if hi[idx] <= f:
            out.append(idx)
            return
        if lo[idx] >= f or lc[idx] == -1:
            return
        rec(rc[idx])
        rec(lc[idx])

    if f > 0:
        rec(0)
    return out


def _distribute(by_x, rank_unit, lo, lc, rc):
    """Split the x-sorted id list down the tree (stable, so every node's
    list stays x-sorted)."""
    node_pts = [None] * len(lo)
    node_pts[0] = list(by_x)
    for idx in range(len(lo)):
        l, r = lc[idx], rc[idx]
        if l == -1:
            continue
        midu = lo[r]
        pts = node_pts[idx]
        node_pts[l] = [p for p in pts if rank_unit[p] < midu]
        node_pts[r] = [p for p in pts if rank_unit[p] >= midu]
    return node_pts


# ---------------------------------------------------------------------------
# leveled pipeline (basic cover and k-level cover)


def _leveled_oriented(ps: PointSet, xs, k: int):
    """Dominance-orientation cover over coordinates xs (negate for the anti
    orientation): list of (left ids, right ids) pairs covering exactly the
    pairs with at most k blockers."""
    n = ps.n
    ys = ps.ys
    rank_y = ps.rank_y
    by_x = list(ps.by_x) if xs is ps.xs else list(reversed(ps.by_x))
    lo, hi, lc, rc = _tree_nodes(n)
    node_pts = _distribute(by_x, rank_y, lo, lc, rc)
    m = len(lo)
    node_sxs = [None] * m
    node_epochs = [None] * m
    node_stacks = [None] * m
    for idx in range(m):
        pts = node_pts[idx]
        stacks = [RangeStack(max(len(pts), 1)) for _ in range(k + 1)]
        mny = [[] for _ in range(k + 1)]   # -y, ascending == stack order
        mx = [[] for _ in range(k + 1)]
        mids = [[] for _ in range(k + 1)]
        sxs: list[int] = []
        epochs: list[tuple] = []
        for pid in pts:
            x = xs[pid]
            ny = -ys[pid]
            popped: list[tuple] = []
            for lev in range(k + 1):
                a = mny[lev]
                c = len(a) - bisect_right(a, ny)
                if c:
                    stacks[lev].pop(c)
                    popped.append((mx[lev][-c:], mids[lev][-c:], a[-c:]))
                    del mx[lev][-c:]
                    del mids[lev][-c:]
                    del a[-c:]
                else:
                    popped.append(((), (), ()))
            stacks[0].push(x, pid)
            mx[0].append(x)
            mids[0].append(pid)
            mny[0].append(ny)
            for lev in range(k):
                tx, ti, tn = popped[lev]
                if not tx:
                    continue
                nxt = stacks[lev + 1]
                for e in range(len(tx)):
                    nxt.push(tx[e], ti[e])
                mx[lev + 1].extend(tx)
                mids[lev + 1].extend(ti)
                mny[lev + 1].extend(tn)
            sxs.append(x)
            epochs.append(tuple(s.step for s in stacks))
        node_sxs[idx] = sxs
        node_epochs[idx] = epochs
        node_stacks[idx] = stacks

    registries: list[dict] = [{} for _ in range(m)]
    for pid in by_x:
        t = rank_y[pid]
        if t == 0:
            continue
        px = xs[pid]
        topk: list[int] = []  # largest quadrant x's of higher strips, descending
        for idx in _prefix_nodes_desc(lo, hi, lc, rc, t):
            sxs = node_sxs[idx]
            e = bisect_left(sxs, px)
            if e:
                epoch = node_epochs[idx][e - 1]
                stacks = node_stacks[idx]
                reg = registries[idx]
                for lev in range(k + 1):
                    j = k - lev
                    cut = topk[j] if len(topk) > j else NEG_INF
                    canons, elems = stacks[lev].suffix_at(epoch[lev], cut)
                    assert not elems  # unbuffered stacks are block-exact
                    for cid in canons:
                        key = (lev, cid)
                        lst = reg.get(key)
                        if lst is None:
                            reg[key] = [pid]
                        else:
                            lst.append(pid)
                tail = sxs[max(0, e - k - 1):e]
                topk = sorted(topk + tail, reverse=True)[:k + 1]
        # nothing registered for strips with no quadrant points
    parts = []
    for idx in range(m):
        stacks = node_stacks[idx]
        for (lev, cid), regs in registries[idx].items():
            parts.append((stacks[lev].canonical_payloads(cid), regs))
    return parts, []


# ---------------------------------------------------------------------------
# compact pipeline (buffered stacks, strip floor, star merge)


def _compact_oriented(ps: PointSet, xs):
    """Compact dominance-orientation cover: (canonical parts, stars)."""
    n = ps.n
    ys = ps.ys
    rank_y = ps.rank_y
    by_x = list(ps.by_x) if xs is ps.xs else list(reversed(ps.by_x))
    tau = 3 * max(1, (n - 1).bit_length())
    leaves = (n + tau - 1) // tau
    lo, hi, lc, rc = _tree_nodes(leaves)
    rank_unit = [rank_y[i] // tau for i in range(n)]
    node_pts = _distribute(by_x, rank_unit, lo, lc, rc)
    m = len(lo)
    node_sxs = [None] * m
    node_epochs = [None] * m
    node_stacks = [None] * m
    node_suffix = [None] * m
    node_ys = [None] * m
    leaf_node = [0] * leaves
    for idx in range(m):
        pts = node_pts[idx]
        node_sxs[idx] = [xs[i] for i in pts]
        if lc[idx] == -1:
            leaf_node[lo[idx]] = idx
            node_ys[idx] = [ys[i] for i in pts]
            continue
        stack = RangeStack(len(pts), buffered=True)
        # each arrival pops the chain suffix it dominates (y below its own)
        mny: list[int] = []
        pops: list[int] = []
        for pid in pts:
            ny = -ys[pid]
            c = 0
            while mny and mny[-1] > ny:
                mny.pop()
                c += 1
            pops.append(c)
            mny.append(ny)
        node_epochs[idx] = stack.run_monotone_script(node_sxs[idx], pts, pops)
        node_stacks[idx] = stack
        node_suffix[idx] = stack.suffix_at

    registries: list[dict] = [{} for _ in range(m)]
    stars: list[tuple[int, list[int]]] = []
    prefix_cache: dict[int, list[int]] = {}
    for pid in by_x:
        t = rank_y[pid]
        px = xs[pid]
        py = ys[pid]
        f, within = divmod(t, tau)
        r = NEG_INF
        star: list[int] = []
        if within:
            # top strip is cut by the query; answer it by scanning
            idx = leaf_node[f]
            sxs = node_sxs[idx]
            ids_ = node_pts[idx]
            lys = node_ys[idx]
            ymax = NEG_INF
            got: list[int] = []
            for i2 in range(bisect_left(sxs, px) - 1, -1, -1):
                y2 = lys[i2]
                if y2 >= py:
                    continue
                if r == NEG_INF:
                    r = sxs[i2]
                if y2 > ymax:
                    got.append(ids_[i2])
                    ymax = y2
            got.reverse()
            star.extend(got)
        if f:
            nodes = prefix_cache.get(f)
            if nodes is None:
                nodes = _prefix_nodes_desc(lo, hi, lc, rc, f)
                prefix_cache[f] = nodes
            for idx in nodes:
                sxs = node_sxs[idx]
                e = bisect_left(sxs, px)
                if e == 0:
                    continue
                last = sxs[e - 1]
                if last <= r:
                    continue  # the whole strip prefix is shadowed
                if lc[idx] == -1:
                    # strip at the floor size: no stack, scan directly
                    ids_ = node_pts[idx]
                    lys = node_ys[idx]
                    ymax = NEG_INF
                    got = []
                    for i2 in range(e - 1, -1, -1):
                        if sxs[i2] <= r:
                            break
                        if lys[i2] > ymax:
                            got.append(ids_[i2])
                            ymax = lys[i2]
                    got.reverse()
                    star.extend(got)
                else:
                    canons, elems = node_suffix[idx](node_epochs[idx][e - 1], r)
                    if canons:
                        reg = registries[idx]
                        for cid in canons:
                            lst = reg.get(cid)
                            if lst is None:
                                reg[cid] = [pid]
                            else:
                                lst.append(pid)
                    for _, q in elems:
                        star.append(q)
                r = last
        if star:
            stars.append((pid, star))
    parts = []
    for idx in range(m):
        reg = registries[idx]
        if reg:
            stack = node_stacks[idx]
            for cid, regs in reg.items():
                parts.append((stack.canonical_payloads(cid), regs))
    return parts, stars


# ---------------------------------------------------------------------------
# assembly and public entry points


def _assemble(ps: PointSet, oriented_results, variant: str,
              t0: float) -> BicliqueCover:
    """Both pipelines emit every side ascending in pipeline x, so the anti
    orientation (which ran on reflected coordinates) only needs reversing
    to be ascending in true x."""
    bicliques: list[Biclique] = []
    for orientation, (parts, stars) in oriented_results:
        flip = orientation == ORIENT_ANTI
        for left, right in parts:
            if flip:
                left = left[::-1]
                right = right[::-1]
            bicliques.append(Biclique(tuple(left), tuple(right), orientation))
        for pid, members in stars:
            if flip:
                members = members[::-1]
            bicliques.append(Biclique(tuple(members), (pid,), orientation))
    weight = sum(b.weight for b in bicliques)
    edges = sum(b.edge_count for b in bicliques)
    stats = CoverStats(count=len(bicliques), weight=weight, edges=edges,
                       build_ms=(time.perf_counter() - t0) * 1e3,
                       variant=variant)
    return BicliqueCover(bicliques, stats, ps.n)


def _reflected(xs):
    return [-x for x in xs]


def build_cover_basic(ps: PointSet) -> BicliqueCover:
    """O(n log n) bicliques of total weight O(n log^2 n)."""
    if ps.n < 2:
        raise ValueError("need at least two points")
    t0 = time.perf_counter()
    with _gc_paused():
        dom = _leveled_oriented(ps, ps.xs, 0)
        anti = _leveled_oriented(ps, _reflected(ps.xs), 0)
        return _assemble(ps, [(ORIENT_DOM, dom), (ORIENT_ANTI, anti)], "basic", t0)


def build_cover(ps: PointSet) -> BicliqueCover:
    """O(n) bicliques of total weight O(n log^2 n).  Small instances fall
    back to the basic machinery (identical edges, bounds vacuous there)."""
    if ps.n < 2:
        raise ValueError("need at least two points")
    t0 = time.perf_counter()
    with _gc_paused():
        if ps.n < COMPACT_MIN_N:
            dom = _leveled_oriented(ps, ps.xs, 0)
            anti = _leveled_oriented(ps, _reflected(ps.xs), 0)
        else:
            dom = _compact_oriented(ps, ps.xs)
            anti = _compact_oriented(ps, _reflected(ps.xs))
        return _assemble(ps, [(ORIENT_DOM, dom), (ORIENT_ANTI, anti)],
                         "compact", t0)


def build_k_cover(ps: PointSet, k: int) -> BicliqueCover:
    """Cover of the relaxed graph allowing up to k interior points."""
    if ps.n < 2:
        raise ValueError("need at least two points")
    if not 0 <= k <= ps.n - 2:
        raise ValueError(f"k must be in [0, {ps.n - 2}]")
    t0 = time.perf_counter()
    with _gc_paused():
        dom = _leveled_oriented(ps, ps.xs, k)
        anti = _leveled_oriented(ps, _reflected(ps.xs), k)
        return _assemble(ps, [(ORIENT_DOM, dom), (ORIENT_ANTI, anti)],
                         f"k-level(k={k})", t0)


# ---------------------------------------------------------------------------
# views and verification


def expand_edges(cover: BicliqueCover) -> list[tuple[int, int]]:
    """All covered edges as canonical pairs, with multiplicity."""
    out = []
    for b in cover.bicliques:
        for a in b.left:
            for c in b.right:
                out.append((a, c) if a < c else (c, a))
    return out


def edge_set(cover: BicliqueCover) -> set:
    return set(expand_edges(cover))


def separation_lines(b: Biclique, ps: PointSet):
    """Witness (vertical, horizontal) separation line coordinates, doubled.
    Raises if the biclique is not quadrant-separated."""
    lx = [ps.xs[i] for i in b.left]
    rx = [ps.xs[i] for i in b.right]
    ly = [ps.ys[i] for i in b.left]
    ry = [ps.ys[i] for i in b.right]
    if max(ly) >= min(ry):
        raise AssertionError("no horizontal separation line")
    if b.orientation == ORIENT_DOM:
        if max(lx) >= min(rx):
            raise AssertionError("no vertical separation line")
        vx = max(lx) * 2 + 1
    else:
        if max(rx) >= min(lx):
            raise AssertionError("no vertical separation line")
        vx = max(rx) * 2 + 1
    return vx, max(ly) * 2 + 1


def rect_families(cover: BicliqueCover, ps: PointSet):
    """Yield each biclique as an implicit family of |left|*|right|
    rectangles; asserts quadrant separation on the way out."""
    for b in cover.bicliques:
        separation_lines(b, ps)
        left = [ps.points[i] for i in b.left]
        right = [ps.points[i] for i in b.right]
        yield left, right


@dataclass
class CoverReport:
    ok: bool
    duplicate_edges: list = field(default_factory=list)
    missing_edges: list = field(default_factory=list)
    extra_edges: list = field(default_factory=list)
    separation_violations: list = field(default_factory=list)
    overlap_violations: list = field(default_factory=list)
    stats: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "ok": self.ok,
            "duplicate_edges": self.duplicate_edges[:32],
            "missing_edges": self.missing_edges[:32],
            "extra_edges": self.extra_edges[:32],
            "separation_violations": self.separation_violations[:32],
            "overlap_violations": self.overlap_violations[:32],
            "stats": self.stats,
        }


def verify_cover(cover: BicliqueCover, ps: PointSet,
                 k: int | None = None) -> CoverReport:
    """Exhaustiveness + disjointness + separation check against the brute
    oracle.  Reports violations; never raises on a bad cover."""
    rep = CoverReport(ok=True)
    for bi, b in enumerate(cover.bicliques):
        if set(b.left) & set(b.right):
            rep.overlap_violations.append((bi, sorted(set(b.left) & set(b.right))))
        try:
            separation_lines(b, ps)
        except AssertionError as exc:
            rep.separation_violations.append((bi, str(exc)))
    counts = Counter(expand_edges(cover))
    rep.duplicate_edges = sorted(e for e, c in counts.items() if c > 1)
    want = brute_rig(ps).edges if k is None else brute_k_rig(ps, k).edges
    got = set(counts)
    rep.missing_edges = sorted(want - got)
    rep.extra_edges = sorted(got - want)
    rep.ok = not (rep.duplicate_edges or rep.missing_edges or rep.extra_edges
                  or rep.separation_violations or rep.overlap_violations)
    rep.stats = {
        "n": ps.n,
        "edges": cover.stats.edges,
        "biclique_count": cover.stats.count,
        "cover_weight": cover.stats.weight,
        "variant": cover.stats.variant,
    }
    return rep
