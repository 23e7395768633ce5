"""Stack over key-increasing elements with historical range reporting.

A lazy Bentley-Saxe forest of perfect trees backs the stack: pushes append
rank-0 trees and cascade-merge whenever three trees share a rank (two per
rank are allowed; the laziness is what keeps pops cheap), pops reuse
previously built subtrees by handle, and every created tree is registered as
an immutable canonical set.  Range reports decompose into O(log n) canonical
ids plus at most two partial runs.  A snapshot is recorded after every
operation, so reports can be answered against any past step; forest and
buffer are immutable cons chains, making each snapshot O(1) amortized space.

The buffered variant keeps up to tau incoming singletons in a FIFO buffer
and flushes the oldest ceil(log2 n) of them into one canonical block when
the buffer overflows, so every canonical set has at least logarithmic size;
reports may then also return explicit buffer elements.
"""

from __future__ import annotations

from bisect import bisect_left, bisect_right
from dataclasses import dataclass

NEG_INF = -(1 << 62)


class NonMonotoneKey(ValueError):
    """Pushed key does not strictly exceed every key currently stored."""


class StackUnderflow(ValueError):
    """pop(k) asked for more elements than the stack holds."""


@dataclass(frozen=True)
class Snapshot:
    """Frozen state after one operation: the forest tree-handle chain plus
    the buffer contents (both immutable, shared across versions)."""

    version: int
    forest_head: tuple | None   # cons cell (tree_id, next), top of stack first
    buffer_head: tuple | None   # cons cell (key, payload, next), newest first
    buffer_len: int
    size: int


@dataclass(frozen=True)
class CanonicalSet:
    """Registry view of one created tree: a contiguous sorted element run,
    materialised once at creation and never mutated."""

    id: int
    start: int
    end: int
    rank: int

    def __len__(self) -> int:
        return self.end - self.start


class RangeReport:
    """Ordered answer of one range query: canonical ids plus explicit
    (key, payload) elements from partial runs and the buffer."""

    __slots__ = ("parts", "part_count")

    def __init__(self):
        self.parts: list = []  # ("canon", cid) | ("elems", [(key, payload), ...])
        self.part_count = 0

    def add_canon(self, cid: int):
        self.parts.append(("canon", cid))
        self.part_count += 1

    def add_elems(self, elems: list):
        if not elems:
            return
        self.parts.append(("elems", elems))
        self.part_count += len(elems)

    @property
    def canonical_ids(self) -> list:
        return [v for k, v in self.parts if k == "canon"]

    @property
    def explicit(self) -> list:
        out = []
        for k, v in self.parts:
            if k == "elems":
                out.extend(v)
        return out

    def expand(self, stack: "RangeStack") -> list:
        """Full ordered (key, payload) expansion."""
        out = []
        for kind, v in self.parts:
            if kind == "canon":
                s, e = stack._t_start[v], stack._t_start[v] + stack._tree_size(v)
                out.extend(zip(stack._ekeys[s:e], stack._epayload[s:e]))
            else:
                out.extend(v)
        return out


class RangeStack:
    """See module docstring.  ``capacity`` sizes the buffer: tau is
    3*ceil(log2 capacity) and blocks hold ceil(log2 capacity) elements; the
    unbuffered variant uses single-element blocks and no buffer."""

    __slots__ = ("block", "tau", "buffered", "_ekeys", "_epayload",
                 "_t_rank", "_t_start", "_t_lorig", "_t_rorig",
                 "_fhead", "_bhead", "_buf_list", "_buffer_len", "_size",
                 "_top", "_v_forest", "_v_buffer", "_v_blen", "_v_size")

    def __init__(self, capacity: int, buffered: bool = False):
        if capacity < 1:
            raise ValueError("capacity must be positive")
        logc = max(1, (capacity - 1).bit_length())
        self.block = logc if buffered else 1
        self.tau = 3 * logc if buffered else 0
        self.buffered = buffered
        # canonical element storage: one contiguous run per created tree
        self._ekeys: list = []
        self._epayload: list = []
        # created trees (canonical sets)
        self._t_rank: list[int] = []   # block-level rank; size = (1<<rank)*block
        self._t_start: list[int] = []
        self._t_lorig: list[int] = []  # origin tree ids of the two copied halves
        self._t_rorig: list[int] = []
        # live state (immutable chains; mutation rebinds the heads)
        self._fhead: tuple | None = None          # (tree_id, next), top first
        self._bhead: tuple | None = None          # (key, payload, next), newest first
        self._buf_list: list = []                 # mirror, oldest -> newest
        self._buffer_len = 0
        self._size = 0
        self._top = None
        # history, four parallel arrays; index 0 is the empty initial state
        self._v_forest: list = [None]
        self._v_buffer: list = [None]
        self._v_blen: list[int] = [0]
        self._v_size: list[int] = [0]

    # -- basic accessors ----------------------------------------------------

    @property
    def size(self) -> int:
        return self._size

    @property
    def step(self) -> int:
        return len(self._v_size) - 1

    @property
    def created_count(self) -> int:
        return len(self._t_rank)

    @property
    def created_weight(self) -> int:
        return len(self._ekeys)

    def forest_ids(self, t: int | None = None) -> list[int]:
        """Tree handles bottom -> top at step t (default: current)."""
        head = self._fhead if t is None else self._v_forest[t]
        out = []
        while head is not None:
            out.append(head[0])
            head = head[1]
        out.reverse()
        return out

    def buffer_items(self, t: int | None = None) -> list:
        """Buffer (key, payload) pairs oldest -> newest at step t."""
        head = self._bhead if t is None else self._v_buffer[t]
        out = []
        while head is not None:
            out.append((head[0], head[1]))
            head = head[2]
        out.reverse()
        return out

    def canonical_set(self, cid: int) -> CanonicalSet:
        return CanonicalSet(cid, self._t_start[cid],
                            self._t_start[cid] + self._tree_size(cid),
                            self._t_rank[cid])

    def canonical_elements(self, cid: int) -> list:
        s = self._t_start[cid]
        e = s + self._tree_size(cid)
        return list(zip(self._ekeys[s:e], self._epayload[s:e]))

    def canonical_payloads(self, cid: int) -> list:
        s = self._t_start[cid]
        return self._epayload[s:s + self._tree_size(cid)]

    def _tree_size(self, tid: int) -> int:
        return (1 << self._t_rank[tid]) * self.block

    def _top_key(self):
        """Key of the topmost element (stack must be non-empty)."""
        if self._bhead is not None:
            return self._bhead[0]
        tid = self._fhead[0]
        return self._ekeys[self._t_start[tid] + self._tree_size(tid) - 1]

    def snapshot(self) -> Snapshot:
        return self.snapshot_at(self.step)

    def snapshot_at(self, t: int) -> Snapshot:
        if not 0 <= t <= self.step:
            raise IndexError(f"step {t} outside recorded history 0..{self.step}")
        return Snapshot(t, self._v_forest[t], self._v_buffer[t],
                        self._v_blen[t], self._v_size[t])

    def _record(self):
        self._v_forest.append(self._fhead)
        self._v_buffer.append(self._bhead)
        self._v_blen.append(self._buffer_len)
        self._v_size.append(self._size)

    # -- tree creation ------------------------------------------------------

    def _new_tree(self, rank: int, lorig: int, rorig: int) -> int:
        self._t_rank.append(rank)
        self._t_start.append(len(self._ekeys) - (1 << rank) * self.block)
        self._t_lorig.append(lorig)
        self._t_rorig.append(rorig)
        return len(self._t_rank) - 1

    def _merge(self, a: int, b: int) -> int:
        """Deep-copy both halves into a fresh canonical run; the new tree's
        internal nodes share content with the originals via origin links."""
        ek, ep = self._ekeys, self._epayload
        sa, sb = self._t_start[a], self._t_start[b]
        za, zb = self._tree_size(a), self._tree_size(b)
        ek.extend(ek[sa:sa + za])
        ep.extend(ep[sa:sa + za])
        ek.extend(ek[sb:sb + zb])
        ep.extend(ep[sb:sb + zb])
        return self._new_tree(self._t_rank[a] + 1, a, b)

    def _insert_tree(self, tid: int):
        """Append a rank-0 tree on top, then merge the two trees below the
        cascade point while three consecutive ranks coincide."""
        ranks = self._t_rank
        head = self._fhead
        spine = []
        cur = tid
        while head is not None:
            below = head[1]
            if below is None:
                break
            r = ranks[cur]
            if ranks[head[0]] != r or ranks[below[0]] != r:
                break
            m = self._merge(below[0], head[0])
            head = below[1]
            spine.append(cur)
            cur = m
        head = (cur, head)
        for t in reversed(spine):
            head = (t, head)
        self._fhead = head

    # -- operations ---------------------------------------------------------

    def push(self, key, payload=None) -> int:
        """Append an element; its key must strictly exceed every key still
        in the stack (pops lower the bar, so popped keys may be re-entered).
        Returns the step index of this operation."""
        if self._size and key <= self._top:
            raise NonMonotoneKey(f"key {key!r} <= current top {self._top!r}")
        self._top = key
        if self.buffered:
            self._bhead = (key, payload, self._bhead)
            self._buf_list.append((key, payload))
            self._buffer_len += 1
            if self._buffer_len > self.tau:
                self._flush()
        else:
            self._ekeys.append(key)
            self._epayload.append(payload)
            self._insert_tree(self._new_tree(0, -1, -1))
        self._size += 1
        self._v_forest.append(self._fhead)
        self._v_buffer.append(self._bhead)
        self._v_blen.append(self._buffer_len)
        vs = self._v_size
        vs.append(self._size)
        return len(vs) - 1

    def replace_top(self, count: int, key, payload=None) -> int:
        """Pop `count` elements, then push one, recorded as a single step:
        the combined arrival event of a point that dominates `count` chain
        elements.  Equivalent to pop(count) followed by push(key, payload)
        except that only the final state is snapshotted."""
        if count:
            self._pop_body(count)
        if self._size and key <= self._top:
            raise NonMonotoneKey(f"key {key!r} <= current top {self._top!r}")
        self._top = key
        if self.buffered:
            self._bhead = (key, payload, self._bhead)
            self._buf_list.append((key, payload))
            self._buffer_len += 1
            if self._buffer_len > self.tau:
                self._flush()
        else:
            self._ekeys.append(key)
            self._epayload.append(payload)
            self._insert_tree(self._new_tree(0, -1, -1))
        self._size += 1
        self._v_forest.append(self._fhead)
        self._v_buffer.append(self._bhead)
        self._v_blen.append(self._buffer_len)
        vs = self._v_size
        vs.append(self._size)
        return len(vs) - 1

    def run_monotone_script(self, keys, payloads, popcounts) -> list[int]:
        """Bulk arrivals for the buffered variant: for each i, pop
        popcounts[i] elements then push keys[i] (one recorded step per
        arrival, as replace_top).  Keys must be strictly increasing.
        Returns the step index of every arrival."""
        if not self.buffered:
            raise ValueError("bulk scripts are a buffered-variant fast path")
        bhead = self._bhead
        buf = self._buf_list
        blen = self._buffer_len
        size = self._size
        tau = self.tau
        vf, vb = self._v_forest, self._v_buffer
        vl, vs = self._v_blen, self._v_size
        flush = self._flush
        pop_body = self._pop_body
        prev = self._top if size else None
        out: list[int] = []
        step = len(vs) - 1
        for i in range(len(keys)):
            k = keys[i]
            if prev is not None and k <= prev:
                raise NonMonotoneKey(f"key {k!r} <= previous {prev!r}")
            prev = k
            c = popcounts[i]
            if c:
                if c <= blen:
                    node = bhead
                    for _ in range(c):
                        node = node[2]
                    bhead = node
                    del buf[blen - c:]
                    blen -= c
                    size -= c
                else:
                    self._bhead = bhead
                    self._buffer_len = blen
                    self._size = size
                    pop_body(c)
                    bhead = self._bhead
                    buf = self._buf_list
                    blen = self._buffer_len
                    size = self._size
            p = payloads[i]
            bhead = (k, p, bhead)
            buf.append((k, p))
            blen += 1
            size += 1
            if blen > tau:
                self._bhead = bhead
                self._buffer_len = blen
                flush()
                bhead = self._bhead
                buf = self._buf_list
                blen = self._buffer_len
            vf.append(self._fhead)
            vb.append(bhead)
            vl.append(blen)
            vs.append(size)
            step += 1
            out.append(step)
        self._bhead = bhead
        self._buffer_len = blen
        self._size = size
        if keys:
            self._top = keys[-1]
        return out

    def _flush(self):
        """Move the oldest `block` buffer elements into one canonical block."""
        buf = self._buf_list
        b = self.block
        for k, p in buf[:b]:
            self._ekeys.append(k)
            self._epayload.append(p)
        del buf[:b]
        head = None
        for kp in buf:
            head = (kp[0], kp[1], head)
        self._bhead = head
        self._buffer_len = len(buf)
        self._insert_tree(self._new_tree(0, -1, -1))

    def pop(self, k: int) -> int:
        """Remove the top k elements; O(log n) plus any block re-buffering."""
        if k:
            self._pop_body(k)
        self._v_forest.append(self._fhead)
        self._v_buffer.append(self._bhead)
        self._v_blen.append(self._buffer_len)
        vs = self._v_size
        vs.append(self._size)
        return len(vs) - 1

    def _pop_body(self, k: int):
        if k < 0 or k > self._size:
            raise StackUnderflow(f"pop({k}) from stack of size {self._size}")
        remaining = k
        if remaining and self._buffer_len:
            drop = self._buffer_len if self._buffer_len < remaining else remaining
            node = self._bhead
            for _ in range(drop):
                node = node[2]
            self._bhead = node
            del self._buf_list[self._buffer_len - drop:]
            self._buffer_len -= drop
            remaining -= drop
        head = self._fhead
        while remaining:
            z = self._tree_size(head[0])
            if remaining < z:
                break
            remaining -= z
            head = head[1]
        if remaining:
            tid = head[0]
            head = head[1]
            keep = self._tree_size(tid) - remaining
            kb, rem = divmod(keep, self.block)
            for t in self._prefix_subtrees(tid, kb):
                head = (t, head)
            if rem:
                # re-buffer the partial block; everything above it was popped
                s = self._t_start[tid] + kb * self.block
                bh = None
                buf = []
                for i in range(s, s + rem):
                    bh = (self._ekeys[i], self._epayload[i], bh)
                    buf.append((self._ekeys[i], self._epayload[i]))
                self._bhead = bh
                self._buf_list = buf
                self._buffer_len = rem
        self._fhead = head
        self._size -= k
        self._top = self._top_key() if self._size else None

    def _origin(self, tid: int, block_off: int, rank: int) -> int:
        """Tree id whose run equals the subtree at (block_off, rank) of tid."""
        ranks, lor, ror = self._t_rank, self._t_lorig, self._t_rorig
        while ranks[tid] > rank:
            half = 1 << (ranks[tid] - 1)
            if block_off < half:
                tid = lor[tid]
            else:
                block_off -= half
                tid = ror[tid]
        return tid

    def _prefix_subtrees(self, tid: int, kb: int) -> list[int]:
        """Previously-created subtrees covering the first kb blocks of tid,
        ranks strictly decreasing (bottom -> top order)."""
        out = []
        off = 0
        for rank in range(self._t_rank[tid] - 1, -1, -1):
            if kb >> rank & 1:
                out.append(self._origin(tid, off, rank))
                off += 1 << rank
        return out

    # -- reporting ----------------------------------------------------------

    def report(self, lo, hi) -> RangeReport:
        """Elements with key in [lo, hi] on the current state."""
        return self.report_at_time(self.step, lo, hi)

    def report_at_time(self, t: int, lo, hi) -> RangeReport:
        """Same as report, answered against the snapshot after step t."""
        rep = RangeReport()
        if lo > hi:
            return rep
        ek = self._ekeys
        starts, ranks = self._t_start, self._t_rank
        block = self.block
        for tid in self.forest_ids(t):
            s = starts[tid]
            z = (1 << ranks[tid]) * block
            if ek[s + z - 1] < lo:
                continue
            if ek[s] > hi:
                break
            if lo <= ek[s] and ek[s + z - 1] <= hi:
                rep.add_canon(tid)
            else:
                self._decompose(tid, lo, hi, rep)
        if self._v_blen[t]:
            items = [kp for kp in self.buffer_items(t) if lo <= kp[0] <= hi]
            rep.add_elems(items)
        return rep

    def suffix_at(self, t: int, lo_exclusive) -> tuple[list, list]:
        """Fast path for quadrant queries: (canonical ids, explicit
        (key, payload) pairs) of all elements with key > lo_exclusive at
        step t, both key-ascending.  Touches only the trees that contribute
        to the answer."""
        buf_elems: list = []
        node = self._v_buffer[t]
        while node is not None and node[0] > lo_exclusive:
            buf_elems.append((node[0], node[1]))
            node = node[2]
        buf_elems.reverse()
        if node is not None:
            # the suffix ends inside the buffer; the forest is all below it
            return [], buf_elems
        whole: list[int] = []
        bound_canons: list[int] = []
        bound_elems: list = []
        ek = self._ekeys
        starts = self._t_start
        head = self._v_forest[t]
        while head is not None:
            tid = head[0]
            s = starts[tid]
            if ek[s] > lo_exclusive:
                whole.append(tid)
                head = head[1]
                continue
            z = self._tree_size(tid)
            if ek[s + z - 1] > lo_exclusive:
                rep = RangeReport()
                self._decompose(tid, lo_exclusive, ek[s + z - 1], rep,
                                strict_lo=True)
                for kind, v in rep.parts:
                    if kind == "canon":
                        bound_canons.append(v)
                    else:
                        bound_elems.extend(v)
            break
        whole.reverse()
        return bound_canons + whole, bound_elems + buf_elems

    def _decompose(self, tid: int, lo, hi, rep: RangeReport,
                   strict_lo: bool = False):
        """Boundary tree: partial blocks go out explicitly, aligned full
        blocks as canonical subtree ids (<= 2*rank of them)."""
        ek, ep = self._ekeys, self._epayload
        s = self._t_start[tid]
        z = self._tree_size(tid)
        if strict_lo:
            i = bisect_right(ek, lo, s, s + z) - s
        else:
            i = bisect_left(ek, lo, s, s + z) - s
        j = bisect_right(ek, hi, s, s + z) - s
        if i >= j:
            return
        block = self.block
        bi, ri = divmod(i, block)
        bj, rj = divmod(j, block)
        if bi == bj:
            rep.add_elems(list(zip(ek[s + i:s + j], ep[s + i:s + j])))
            return
        if ri:
            e = s + (bi + 1) * block
            rep.add_elems(list(zip(ek[s + i:e], ep[s + i:e])))
            bi += 1
        self._aligned_nodes(tid, bi, bj, rep)
        if rj:
            b0 = s + bj * block
            rep.add_elems(list(zip(ek[b0:s + j], ep[b0:s + j])))

    def _aligned_nodes(self, tid: int, blo: int, bhi: int, rep: RangeReport):
        """Canonical cover of full-block range [blo, bhi) inside tid; the
        emitted handles are the origin trees the copies were made from."""

        def rec(off: int, rank: int, origin: int):
            if blo <= off and off + (1 << rank) <= bhi:
                rep.add_canon(origin)
                return
            if off >= bhi or off + (1 << rank) <= blo:
                return
            half = 1 << (rank - 1)
            rec(off, rank - 1, self._t_lorig[origin])
            rec(off + half, rank - 1, self._t_rorig[origin])

        rec(0, self._t_rank[tid], tid)
