"""Canonical forms for reduced annular diagrams and conjugacy in F.

A reduced annular diagram is a radial sequence of rings: free loops and
connected components.  Isotopy classes of a connected component are
exactly ported-digraph isomorphism classes rooted at the innermost
directed cycle: rotating the annulus lets the traversal start anywhere
on that cycle (hence the minimum over starting vertices), while twists
of the annulus wash out all per-edge crossing weights, so the encoding
records pure port structure.  Crossing weights still matter before
encoding: they are validated (every cycle winds exactly once) and they
determine the radial order of the rings.
"""

from __future__ import annotations

from dataclasses import dataclass

from .closure import (
    ClosedDiagram,
    Ring,
    close_annular,
    check_cycle_structure,
    find_closed_redexes,
    reduce_closed,
    ring_decomposition,
)
from .errors import AlphabetError, NotReduced
from .rewrite import reduce_diagram
from .words import Word, word_to_diagram


@dataclass(frozen=True, order=True)
class CanonicalForm:
    blob: bytes
    summary: tuple = ()

    def hex(self) -> str:
        return self.blob.hex()

    def __repr__(self):
        return f"CanonicalForm({self.blob.hex()[:24]}..., summary={self.summary})"


def encode_component(
    c: ClosedDiagram, root: int, with_weights: bool = False
) -> bytes:
    """Deterministic port-respecting traversal encoding from ``root``.

    Vertices are numbered in discovery order, so the bytes depend only
    on the ported structure (and, with ``with_weights``, on the gauge
    residuals of the cut/wrap cochains along non-tree edges).
    """
    kind = c.kind
    conn = c.conn
    number = {root: 0}
    phi_m = {root: 0}
    phi_l = {root: 0}
    queue = [root]
    tokens = []
    qi = 0
    while qi < len(queue):
        v = queue[qi]
        qi += 1
        tokens.append("SM"[kind[v]])
        pm = phi_m[v]
        pl = phi_l[v]
        for s in range(3):
            ep = 3 * v + s
            peer = conn[ep]
            w = peer // 3
            k = kind[v]
            is_tail = (k == 0 and s != 0) or (k == 1 and s == 2)
            head = peer if is_tail else ep
            direction = 1 if is_tail else -1
            mw = len(c.cuts.get(head, ()))
            lw = c.long.get(head, 0)
            if w not in number:
                number[w] = len(number)
                phi_m[w] = pm + direction * mw
                phi_l[w] = pl + direction * lw
                queue.append(w)
                tokens.append(f"+{peer % 3}")
            elif with_weights:
                rm = pm + direction * mw - phi_m[w]
                rl = pl + direction * lw - phi_l[w]
                tokens.append(f"v{number[w]}.{peer % 3}:{rm},{rl}")
            else:
                tokens.append(f"v{number[w]}.{peer % 3}")
    return ";".join(tokens).encode()


def encode_ring(c: ClosedDiagram, ring: Ring, with_weights: bool = False) -> bytes:
    """Free loops are a fixed token; components minimize over starting
    vertices on their innermost directed cycle."""
    if ring.kind == "free":
        return b"F"
    inner = ring.cycles[0]
    return min(encode_component(c, v, with_weights) for v in inner.vertices)


def canonical_annular(a: ClosedDiagram) -> CanonicalForm:
    """Order-comparable encoding of a reduced annular diagram.

    Equal blobs mean isotopic diagrams; the radial ring order is read
    off the cut positions.  Raises NotReduced on unreduced input.
    """
    redexes = find_closed_redexes(a)
    if redexes:
        raise NotReduced(f"diagram has redex {redexes[0]}")
    check_cycle_structure(a)
    rings = ring_decomposition(a)
    parts = [b"A%d" % len(rings)]
    pattern = []
    for ring in rings:
        parts.append(encode_ring(a, ring))
        pattern.append(1 if ring.kind == "free" else 0)
    blob = b"|".join(parts)
    return CanonicalForm(blob, (len(rings), a.num_vertices(), tuple(pattern)))


def annular_form(w: Word) -> CanonicalForm:
    """Word -> reduced square diagram -> reduced annular diagram -> bytes."""
    d = word_to_diagram(w)
    reduce_diagram(d)
    a = close_annular(d)
    reduce_closed(a)
    return canonical_annular(a)


def is_conjugate_f(w1: Word, w2: Word) -> bool:
    """Two F words are conjugate iff their reduced annular diagrams match."""
    if w1.group != "F" or w2.group != "F":
        raise AlphabetError("is_conjugate_f expects words over F's alphabet")
    return annular_form(w1) == annular_form(w2)


# -- decoration export --------------------------------------------------------

_GADGET_LEN = {(0, 0): 1, (0, 1): 2, (0, 2): 3, (1, 0): 4, (1, 1): 5, (1, 2): 6}
_MARKER_LEN = 8
_HOLE_LEN = 9


def decorate(a: ClosedDiagram):
    """Plain undirected graph whose isomorphism type captures the
    isotopy class of a reduced annular diagram.

    Each edge is subdivided in three; pendant paths of distinct lengths
    around every split and merge encode edge directions and the port
    order; a chain of ring markers anchored at a hole vertex encodes
    the radial order.  Returns (nodes, edges) with hashable node names,
    ready for any third-party graph-isomorphism tool.
    """
    rings = ring_decomposition(a)
    nodes = []
    edges = []

    def pendant(base, length, tag):
        prev = base
        for t in range(length):
            nd = (tag, base, t)
            nodes.append(nd)
            edges.append((prev, nd))
            prev = nd

    for v in a.live_vertices():
        nodes.append(("v", v))
    for tail, head in a.edges():
        e0 = ("e", head, 0)
        e1 = ("e", head, 1)
        nodes.extend((e0, e1))
        edges.append((("v", tail // 3), e0))
        edges.append((e0, e1))
        edges.append((e1, ("v", head // 3)))
        pendant(e0, _GADGET_LEN[(a.kind[tail // 3], tail % 3)], "g")
        pendant(e1, _GADGET_LEN[(a.kind[head // 3], head % 3)], "g")
    for i, _loop in enumerate(a.free_loops):
        ring_nodes = [("l", i, t) for t in range(3)]
        nodes.extend(ring_nodes)
        edges.extend(
            (ring_nodes[t], ring_nodes[(t + 1) % 3]) for t in range(3)
        )

    hole = ("H",)
    nodes.append(hole)
    pendant(hole, _HOLE_LEN, "h")
    prev = hole
    loop_index = {id(f): i for i, f in enumerate(a.free_loops)}
    for ring in rings:
        marker = ("M", ring.radial_index)
        nodes.append(marker)
        edges.append((prev, marker))
        pendant(marker, _MARKER_LEN, "m")
        if ring.kind == "free":
            li = loop_index[id(ring.loop)]
            edges.append((marker, ("l", li, 0)))
            edges.append((marker, ("l", li, 1)))
            edges.append((marker, ("l", li, 2)))
        else:
            for h in ring.cycles[0].heads:
                edges.append((marker, ("e", h, 0)))
        prev = marker
    return nodes, edges
