"""Confluent reduction of square strand diagrams to unique reduced form.

Two local moves:

    type I  : a split whose left/right outputs are the left/right inputs
              of a single merge (matching orientation only); both
              vertices vanish and one edge remains.
    type II : a merge whose output is the input of a split; both
              vertices vanish and the strands reconnect left-to-left,
              right-to-right.

On cylindrical diagrams (wrap counts present) a type I bigon may only
cancel when both parallel edges carry the same wrap count, i.e. when
the bigon spans a disc on the cylinder.

``reduce_diagram`` runs the frontier worklist: find all currently
reducible vertices, fire those moves, then re-examine only vertices
adjacent to the rewiring, until no redex remains.  Total work is linear
in practice; per-round sizes are exposed for measurement.  A randomized
strategy exists purely so tests can exercise confluence.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .diagram import DEAD, MERGE, SPLIT, StrandDiagram, is_sink_code, sink_code, source_code
from .errors import ArityMismatch, NotReduced, StaleRedex
from .trees import TreePair, tree_from_antichain

TYPE_I = "I"
TYPE_II = "II"


@dataclass(frozen=True)
class Redex:
    kind: str  # TYPE_I or TYPE_II
    top: int
    bottom: int


@dataclass
class ReductionStats:
    """Per-round frontier sizes: (vertices removed, candidates examined)."""

    rounds: list[tuple[int, int]] = field(default_factory=list)
    moves: int = 0

    @property
    def removed_total(self) -> int:
        return sum(r for r, _ in self.rounds)

    @property
    def examined_total(self) -> int:
        return sum(v for _, v in self.rounds)


def _redex_at(d: StrandDiagram, u: int):
    """Return (type, bottom) if vertex u is the top of a redex, else None."""
    kind = d.kind
    conn = d.conn
    k = kind[u]
    if k == SPLIT:
        x = conn[3 * u + 1]
        if (
            x >= 0
            and x % 3 == 0
            and kind[x // 3] == MERGE
            and conn[3 * u + 2] == x + 1
        ):
            long = d.long
            if long is None or long.get(x, 0) == long.get(x + 1, 0):
                return (TYPE_I, x // 3)
    elif k == MERGE:
        x = conn[3 * u + 2]
        if x >= 0 and x % 3 == 0 and kind[x // 3] == SPLIT:
            return (TYPE_II, x // 3)
    return None


def find_redexes(d: StrandDiagram) -> list[Redex]:
    """All current redexes, ordered by top vertex id."""
    out = []
    for u in d.live_vertices():
        hit = _redex_at(d, u)
        if hit is not None:
            out.append(Redex(hit[0], u, hit[1]))
    return out


def _apply_type1(d: StrandDiagram, u: int, v: int) -> int:
    """Remove split u and merge v; returns the tail of the spliced edge."""
    conn = d.conn
    a = conn[3 * u]
    e = conn[3 * v + 2]
    long = d.long
    if long is not None:
        w = long.pop(3 * u, 0) + long.pop(3 * v, 0) + long.pop(e, 0)
        long.pop(3 * v + 1, None)
        if w:
            long[e] = w
    d._link(a, e)
    d.kind[u] = DEAD
    d.kind[v] = DEAD
    return a


def _apply_type2(d: StrandDiagram, u: int, v: int) -> tuple[int, int]:
    """Remove merge u and split v; returns tails of the two spliced edges."""
    conn = d.conn
    a = conn[3 * u]
    b = conn[3 * u + 1]
    c = conn[3 * v + 1]
    e = conn[3 * v + 2]
    long = d.long
    if long is not None:
        wm = long.pop(3 * v, 0)
        wl = long.pop(3 * u, 0) + wm + long.pop(c, 0)
        wr = long.pop(3 * u + 1, 0) + wm + long.pop(e, 0)
        if wl:
            long[c] = wl
        if wr:
            long[e] = wr
    d._link(a, c)
    d._link(b, e)
    d.kind[u] = DEAD
    d.kind[v] = DEAD
    return a, b


def apply_redex(d: StrandDiagram, r: Redex) -> StrandDiagram:
    """Fire one redex in place; raises StaleRedex if it is no longer valid."""
    kind = d.kind
    if r.top >= len(kind) or kind[r.top] == DEAD or kind[r.bottom] == DEAD:
        raise StaleRedex(f"redex {r} references removed vertices")
    hit = _redex_at(d, r.top)
    if hit is None or hit != (r.kind, r.bottom):
        raise StaleRedex(f"redex {r} no longer matches the diagram")
    if r.kind == TYPE_I:
        _apply_type1(d, r.top, r.bottom)
    else:
        _apply_type2(d, r.top, r.bottom)
    return d


def reduce_diagram(
    d: StrandDiagram,
    order: str = "frontier",
    rng=None,
    stats: ReductionStats | None = None,
    trace: list | None = None,
) -> StrandDiagram:
    """Reduce ``d`` in place until no redex remains; returns ``d``.

    ``order="frontier"`` is the deterministic worklist (lowest top id
    first inside a round).  ``order="random"`` needs an ``rng`` and
    fires redexes in random order.
    """
    if order == "random":
        return _reduce_random(d, rng, trace)
    if order != "frontier":
        raise ValueError(f"unknown reduction order {order!r}")

    kind = d.kind
    conn = d.conn
    candidates = range(len(kind))
    while True:
        pairs = []
        for u in candidates:
            if kind[u] == DEAD:
                continue
            hit = _redex_at(d, u)
            if hit is not None:
                pairs.append((u, hit[1], hit[0]))
        if not pairs:
            if stats is not None and isinstance(candidates, list):
                stats.rounds.append((0, len(candidates)))
            break
        removed = 0
        touched = []
        for u, v, t in pairs:
            if kind[u] == DEAD or kind[v] == DEAD:
                continue
            hit = _redex_at(d, u)
            if hit is None or hit != (t, v):
                continue
            if trace is not None:
                trace.append((t, u, v))
            if t == TYPE_I:
                a = _apply_type1(d, u, v)
                if a >= 0:
                    touched.append(a // 3)
            else:
                a, b = _apply_type2(d, u, v)
                if a >= 0:
                    touched.append(a // 3)
                if b >= 0:
                    touched.append(b // 3)
            removed += 2
        if stats is not None:
            examined = len(candidates) if isinstance(candidates, list) else len(kind)
            stats.rounds.append((removed, examined))
            stats.moves += removed // 2
        candidates = sorted(set(w for w in touched if kind[w] != DEAD))
    return d


def _reduce_random(d: StrandDiagram, rng, trace=None) -> StrandDiagram:
    kind = d.kind
    pairs = []
    for u in d.live_vertices():
        hit = _redex_at(d, u)
        if hit is not None:
            pairs.append((u, hit[1], hit[0]))
    while pairs:
        i = rng.randrange(len(pairs))
        pairs[i], pairs[-1] = pairs[-1], pairs[i]
        u, v, t = pairs.pop()
        if kind[u] == DEAD or kind[v] == DEAD:
            continue
        hit = _redex_at(d, u)
        if hit is None or hit != (t, v):
            continue
        if trace is not None:
            trace.append((t, u, v))
        if t == TYPE_I:
            tails = (_apply_type1(d, u, v),)
        else:
            tails = _apply_type2(d, u, v)
        for a in tails:
            if a >= 0:
                w = a // 3
                hit = _redex_at(d, w)
                if hit is not None:
                    pairs.append((w, hit[1], hit[0]))
    return d


# -- cutting a reduced (1,1)-diagram back into a tree pair -------------------


def to_tree_pair(d: StrandDiagram) -> TreePair:
    """Cut every split-to-merge edge of a reduced (1,1)-diagram.

    Returns the tree pair whose gluing reproduces the diagram.  The leaf
    bijection is read off the strand connections (identity for diagrams
    built from F words).
    """
    if d.m != 1 or d.n != 1:
        raise ArityMismatch("tree pairs exist only for (1,1)-diagrams")
    redexes = find_redexes(d)
    if redexes:
        raise NotReduced(f"diagram has redex {redexes[0]}")

    kind = d.kind
    conn = d.conn

    # Domain tree: follow splits downward from the source; a strand that
    # reaches a merge input (or the sink) is a leaf of the split tree.
    dom_leaves: list[tuple[str, int]] = []  # (address, head endpoint reached)
    stack = [(d.src_conn[0], "")]
    while stack:
        head, addr = stack.pop()
        if head >= 0 and head % 3 == 0 and kind[head // 3] == SPLIT:
            v = head // 3
            stack.append((conn[3 * v + 2], addr + "1"))
            stack.append((conn[3 * v + 1], addr + "0"))
        else:
            dom_leaves.append((addr, head))
    dom_leaves.sort()

    # Range tree: follow merges upward from the sink.
    rng_leaves: list[tuple[str, int]] = []  # (address, head endpoint of cut edge)
    stack = [(sink_code(0), "")]
    while stack:
        feed, addr = stack.pop()
        tail = d.read_conn(feed)
        if tail >= 0 and tail % 3 == 2 and kind[tail // 3] == MERGE:
            v = tail // 3
            stack.append((3 * v + 1, addr + "1"))
            stack.append((3 * v + 0, addr + "0"))
        else:
            rng_leaves.append((addr, feed))
    rng_leaves.sort()

    feed_index = {feed: j for j, (_, feed) in enumerate(rng_leaves)}
    bijection = tuple(feed_index[head] for _, head in dom_leaves)
    return TreePair(
        tree_from_antichain([a for a, _ in dom_leaves]),
        tree_from_antichain([a for a, _ in rng_leaves]),
        bijection,
    )


# -- deterministic byte encoding of square diagrams --------------------------


def encode_square(d: StrandDiagram) -> bytes:
    """Order-comparable encoding of a square diagram.

    Vertex ids do not leak in: vertices are numbered in a traversal
    seeded from the boundary, so structurally identical diagrams encode
    identically regardless of construction history.  Wrap counts, when
    present, are folded in as gauge-fixed potentials (tree edges fix the
    gauge; every edge emits its residual).
    """
    kind = d.kind
    conn = d.conn
    long = d.long
    number: dict[int, int] = {}
    phi: dict[int, int] = {}
    queue: list[int] = []
    tokens: list[str] = [f"{d.m},{d.n}"]

    def edge_data(ep, peer):
        # (head endpoint, +1 if edge flows ep->peer else -1)
        return (peer, 1) if d.is_tail(ep) else (ep, -1)

    def enc(ep, peer, phi_here):
        if peer >= 0:
            w = peer // 3
            head, direction = edge_data(ep, peer)
            lw = 0 if long is None else long.get(head, 0)
            if w not in number:
                # fresh vertices get sequential numbers, so the number is implicit
                number[w] = len(number)
                phi[w] = phi_here + direction * lw
                queue.append(w)
                return f"+{peer % 3}"
            resid = phi_here + direction * lw - phi[w]
            if long is None:
                return f"v{number[w]}.{peer % 3}"
            return f"v{number[w]}.{peer % 3}r{resid}"
        if is_sink_code(peer):
            j = (-peer - 3) // 2
            lw = 0 if long is None else long.get(peer, 0)
            tag = f"o{j}"
            return tag if long is None else f"{tag}r{phi_here + lw}"
        return f"i{(-peer - 2) // 2}"

    for i, peer in enumerate(d.src_conn):
        tokens.append("S" + enc(source_code(i), peer, 0))
    qi = 0
    while qi < len(queue):
        v = queue[qi]
        qi += 1
        tokens.append("SM"[kind[v]])
        for s in range(3):
            tokens.append(enc(3 * v + s, conn[3 * v + s], phi[v]))
    return ";".join(tokens).encode()
