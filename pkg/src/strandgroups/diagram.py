"""Square (m,n)-strand diagrams as ported directed acyclic graphs.

A diagram has m ordered boundary sources along the top, n ordered sinks
along the bottom, and interior vertices that are splits (one input, two
ordered outputs) or merges (two ordered inputs, one output).

Representation: a flat endpoint-connection table instead of explicit
edge records.  Every vertex owns three slots; an edge is a mutual pair
of endpoint codes.  This keeps reduction allocation-free on million-
vertex diagrams; edge records are synthesized on demand for export.

Endpoint codes:
    vertex v, slot s        ->  3*v + s
    boundary source i       ->  -2 - 2*i   (even negative)
    boundary sink i         ->  -3 - 2*i   (odd negative)

Slots: split = (0 input, 1 left output, 2 right output),
       merge = (0 left input, 1 right input, 2 output).

Optionally a diagram carries per-edge wrap counts (``long``) recording
crossings with a longitudinal reference line, which turns the square
into a cylinder; this is how T words are modelled before toral closure.
Weights are keyed by the head endpoint of each edge (every edge has a
unique head) and stored sparsely.
"""

from __future__ import annotations

from .errors import ArityMismatch, BoundaryMismatch, CyclicGraph, DanglingPort
from .trees import TreePair

SPLIT = 0
MERGE = 1
DEAD = 2

TOMB = -1


def source_code(i: int) -> int:
    return -2 - 2 * i


def sink_code(i: int) -> int:
    return -3 - 2 * i


def is_source_code(e: int) -> bool:
    return e < -1 and e % 2 == 0


def is_sink_code(e: int) -> bool:
    return e < -1 and e % 2 == 1


def source_index(e: int) -> int:
    return (-e - 2) // 2


def sink_index(e: int) -> int:
    return (-e - 3) // 2


class StrandDiagram:
    __slots__ = ("kind", "conn", "src_conn", "snk_conn", "long")

    def __init__(self, m: int = 0, n: int = 0):
        self.kind = bytearray()
        self.conn: list[int] = []
        self.src_conn: list[int] = [TOMB] * m
        self.snk_conn: list[int] = [TOMB] * n
        self.long: dict[int, int] | None = None

    # -- basic accessors -------------------------------------------------

    @property
    def m(self) -> int:
        return len(self.src_conn)

    @property
    def n(self) -> int:
        return len(self.snk_conn)

    def num_vertices(self) -> int:
        """Count of live (non-removed) vertices."""
        kind = self.kind
        return sum(1 for v in range(len(kind)) if kind[v] != DEAD)

    def live_vertices(self):
        kind = self.kind
        return (v for v in range(len(kind)) if kind[v] != DEAD)

    def is_identity(self) -> bool:
        """True for the degenerate (1,1) diagram with no vertices."""
        return (self.m == 1 and self.n == 1 and self.num_vertices() == 0)

    def _new_vertex(self, k: int) -> int:
        v = len(self.kind)
        self.kind.append(k)
        self.conn.extend((TOMB, TOMB, TOMB))
        return v

    def read_conn(self, e: int) -> int:
        if e >= 0:
            return self.conn[e]
        if e % 2 == 0:
            return self.src_conn[(-e - 2) // 2]
        return self.snk_conn[(-e - 3) // 2]

    def _write_conn(self, e: int, val: int) -> None:
        if e >= 0:
            self.conn[e] = val
        elif e % 2 == 0:
            self.src_conn[(-e - 2) // 2] = val
        else:
            self.snk_conn[(-e - 3) // 2] = val

    def _link(self, a: int, b: int) -> None:
        self._write_conn(a, b)
        self._write_conn(b, a)

    def is_tail(self, e: int) -> bool:
        """True if an edge leaves from endpoint ``e``."""
        if e >= 0:
            k = self.kind[e // 3]
            s = e % 3
            return (k == SPLIT and s != 0) or (k == MERGE and s == 2)
        return is_source_code(e)

    def edges(self):
        """Yield live edges as (tail_endpoint, head_endpoint) pairs."""
        for i, peer in enumerate(self.src_conn):
            yield (source_code(i), peer)
        kind = self.kind
        conn = self.conn
        for v in range(len(kind)):
            k = kind[v]
            if k == SPLIT:
                yield (3 * v + 1, conn[3 * v + 1])
                yield (3 * v + 2, conn[3 * v + 2])
            elif k == MERGE:
                yield (3 * v + 2, conn[3 * v + 2])

    def edge_long(self, head: int) -> int:
        if self.long is None:
            return 0
        return self.long.get(head, 0)

    def copy(self) -> "StrandDiagram":
        d = StrandDiagram()
        d.kind = bytearray(self.kind)
        d.conn = list(self.conn)
        d.src_conn = list(self.src_conn)
        d.snk_conn = list(self.snk_conn)
        d.long = None if self.long is None else dict(self.long)
        return d

    # -- validation ------------------------------------------------------

    def validate(self) -> None:
        """Raise if any structural invariant fails; no return value."""
        if self.m < 1 or self.n < 1:
            raise BoundaryMismatch("need at least one source and one sink")
        kind = self.kind
        conn = self.conn
        if 3 * len(kind) != len(conn):
            raise DanglingPort("slot table length mismatch")

        def check_endpoint(e, here):
            if e == TOMB:
                raise DanglingPort(f"endpoint {here} is unconnected")
            if e >= 0:
                v = e // 3
                if v >= len(kind) or kind[v] == DEAD:
                    raise DanglingPort(f"endpoint {here} points at removed vertex {v}")
            elif is_source_code(e):
                if source_index(e) >= self.m:
                    raise BoundaryMismatch(f"endpoint {here} names source {source_index(e)}")
            elif sink_index(e) >= self.n:
                raise BoundaryMismatch(f"endpoint {here} names sink {sink_index(e)}")
            if self.read_conn(e) != here:
                raise DanglingPort(f"connection {here} <-> {e} is not mutual")
            if self.is_tail(e) == self.is_tail(here):
                raise DanglingPort(f"edge {here} <-> {e} lacks a direction")

        for i, peer in enumerate(self.src_conn):
            check_endpoint(peer, source_code(i))
        for i, peer in enumerate(self.snk_conn):
            check_endpoint(peer, sink_code(i))
        for v in range(len(kind)):
            if kind[v] == DEAD:
                continue
            for s in range(3):
                check_endpoint(conn[3 * v + s], 3 * v + s)

        self._check_acyclic()

    def _check_acyclic(self) -> None:
        kind = self.kind
        conn = self.conn
        indeg = {}
        for v in range(len(kind)):
            k = kind[v]
            if k == DEAD:
                continue
            deg = 0
            in_slots = (0,) if k == SPLIT else (0, 1)
            for s in in_slots:
                if conn[3 * v + s] >= 0:
                    deg += 1
            indeg[v] = deg
        queue = [v for v, dg in indeg.items() if dg == 0]
        seen = 0
        while queue:
            v = queue.pop()
            seen += 1
            out_slots = (1, 2) if kind[v] == SPLIT else (2,)
            for s in out_slots:
                peer = conn[3 * v + s]
                if peer >= 0:
                    w = peer // 3
                    indeg[w] -= 1
                    if indeg[w] == 0:
                        queue.append(w)
        if seen != len(indeg):
            bad = next(v for v, dg in indeg.items() if dg > 0)
            raise CyclicGraph(f"directed cycle through vertex {bad}")


def identity_diagram(cylindrical: bool = False) -> StrandDiagram:
    d = StrandDiagram(1, 1)
    d._link(source_code(0), sink_code(0))
    if cylindrical:
        d.long = {}
    return d


def concatenate(top: StrandDiagram, bottom: StrandDiagram) -> StrandDiagram:
    """Splice sink i of ``top`` to source i of ``bottom``; no reduction."""
    if top.n != bottom.m:
        raise ArityMismatch(f"cannot concatenate ({top.m},{top.n}) with ({bottom.m},{bottom.n})")
    off = 3 * len(top.kind)

    def tr(x):
        return x + off if x >= 0 else x

    res = StrandDiagram(top.m, bottom.n)
    res.kind = top.kind + bottom.kind
    res.conn = list(top.conn)
    res.conn.extend(tr(x) for x in bottom.conn)
    res.src_conn = list(top.src_conn)
    res.snk_conn = [tr(x) for x in bottom.snk_conn]

    if top.long is not None or bottom.long is not None:
        res.long = {}
        if top.long:
            for h, w in top.long.items():
                if not is_sink_code(h):
                    res.long[h] = w
        if bottom.long:
            for h, w in bottom.long.items():
                res.long[tr(h)] = res.long.get(tr(h), 0) + w

    for i in range(top.n):
        tail = top.snk_conn[i]
        head = tr(bottom.src_conn[i])
        res._link(tail, head)
        if res.long is not None and top.long:
            w = top.long.get(sink_code(i), 0)
            if w:
                res.long[head] = res.long.get(head, 0) + w
    if res.long is not None:
        res.long = {h: w for h, w in res.long.items() if w}
    return res


_INV_SLOT = {SPLIT: (2, 0, 1), MERGE: (1, 2, 0)}


def invert(d: StrandDiagram) -> StrandDiagram:
    """Reflect across a horizontal line and reverse all edges.

    Splits become merges with left/right preserved as mirror images;
    sources and sinks swap; wrap counts negate (the reflected strand
    crosses the longitude line in the opposite direction).
    """
    res = StrandDiagram(d.n, d.m)
    kind = d.kind
    res.kind = bytearray(DEAD if k == DEAD else 1 - k for k in kind)
    res.conn = [TOMB] * len(d.conn)

    def f(x):
        if x >= 0:
            v, s = divmod(x, 3)
            return 3 * v + _INV_SLOT[kind[v]][s]
        if is_source_code(x):
            return sink_code(source_index(x))
        return source_code(sink_index(x))

    for v in range(len(kind)):
        if kind[v] == DEAD:
            continue
        for s in range(3):
            res._write_conn(f(3 * v + s), f(d.conn[3 * v + s]))
    for i, peer in enumerate(d.src_conn):
        res._write_conn(sink_code(i), f(peer))
    for i, peer in enumerate(d.snk_conn):
        res._write_conn(source_code(i), f(peer))

    if d.long is not None:
        res.long = {}
        for h, w in d.long.items():
            if w:
                tail = d.read_conn(h)
                res.long[f(tail)] = -w
    return res


def vine(k: int) -> StrandDiagram:
    """The right vine: the (1,k)-diagram of k-1 nested right splits."""
    if k < 1:
        raise ValueError("vine needs k >= 1")
    if k == 1:
        return identity_diagram()
    d = StrandDiagram(1, k)
    prev_tail = source_code(0)
    for j in range(k - 1):
        v = d._new_vertex(SPLIT)
        d._link(prev_tail, 3 * v + 0)
        d._link(3 * v + 1, sink_code(j))
        prev_tail = 3 * v + 2
    d._link(prev_tail, sink_code(k - 1))
    return d


def conjugate_by_vine(d: StrandDiagram) -> StrandDiagram:
    """Transport a (k,k)-diagram to the (1,1)-diagram vine . d . vine^-1."""
    if d.m != d.n:
        raise ArityMismatch(f"diagram is ({d.m},{d.n}), need equal arities")
    v = vine(d.m)
    return concatenate(v, concatenate(d, invert(v)))


def from_tree_pair(tp: TreePair, cylindrical: bool = False) -> StrandDiagram:
    """Glue the two trees of a tree pair into a (1,1)-diagram.

    Domain-tree internal nodes become splits, range-tree nodes merges;
    domain leaf i feeds range leaf ``bijection[i]``.  With
    ``cylindrical=True`` the bijection must be cyclic and strands that
    wrap around the cylinder get wrap count 1.
    """
    d = StrandDiagram(1, 1)
    if cylindrical:
        d.long = {}
    dom_tails: list[int] = []
    rng_heads: list[int] = []

    def build_splits(t, feed):
        if t is None:
            dom_tails.append(feed)
            return
        v = d._new_vertex(SPLIT)
        d._link(feed, 3 * v + 0)
        build_splits(t[0], 3 * v + 1)
        build_splits(t[1], 3 * v + 2)

    def build_merges(t, drain):
        if t is None:
            rng_heads.append(drain)
            return
        v = d._new_vertex(MERGE)
        d._link(3 * v + 2, drain)
        build_merges(t[0], 3 * v + 0)
        build_merges(t[1], 3 * v + 1)

    build_splits(tp.domain, source_code(0))
    build_merges(tp.range_, sink_code(0))

    shift = tp.cyclic_shift() if cylindrical else 0
    nl = len(dom_tails)
    for i, tail in enumerate(dom_tails):
        head = rng_heads[tp.bijection[i]]
        d._link(tail, head)
        if cylindrical and i + shift >= nl:
            d.long[head] = 1
    return d
