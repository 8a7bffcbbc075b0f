"""Thompson's group V: closed abstract strand diagrams and conjugacy.

Crossings need no explicit representation: they are implicit in which
ports connect to which, exactly as in the embedding-free definition of
an abstract diagram.  Equality of closed diagrams is port-preserving
directed-graph isomorphism plus equivalence of the cutting cochains
modulo vertex coboundaries; free loops carry their weight exactly
(coboundaries vanish on them).

Cochains are dicts keyed like ``cutting_sequence`` carriers: an edge's
head endpoint, or ("loop", i) for free loop i.
"""

from __future__ import annotations

from math import lcm

from .closure import (
    ClosedDiagram,
    close_abstract,
    reduce_closed,
    weak_components,
)
from .errors import AlphabetError, CutoffExceeded
from .oracle import equals_identity, identity_map, compose, word_to_map
from .rewrite import reduce_diagram
from .words import ALPHABETS, Word, word_to_diagram


def cut_cochain(c: ClosedDiagram) -> dict:
    """The cutting class as a cochain: cut counts per edge and free loop."""
    out = {}
    for _tail, head in c.edges():
        out[head] = len(c.cuts.get(head, ()))
    for i, f in enumerate(c.free_loops):
        out[("loop", i)] = len(f.cuts)
    return out


def cohomology_equivalent(c: ClosedDiagram, w1: dict, w2: dict) -> bool:
    """True iff w1 - w2 is the coboundary of some vertex potential.

    Solved by spanning-tree propagation on each component: assign the
    potential along discovery edges and verify every remaining edge.
    On a graph the cochain-mod-coboundary group is free, so rational
    solvability equals integer solvability; potentials based at 0 stay
    integral automatically.  Free loops admit no coboundary at all, so
    their values must agree exactly.
    """
    for i in range(len(c.free_loops)):
        key = ("loop", i)
        if w1.get(key, 0) != w2.get(key, 0):
            return False

    kind = c.kind
    conn = c.conn

    def diff(head):
        return w1.get(head, 0) - w2.get(head, 0)

    pot: dict[int, int] = {}
    for v0 in c.live_vertices():
        if v0 in pot:
            continue
        pot[v0] = 0
        stack = [v0]
        while stack:
            v = stack.pop()
            for s in range(3):
                ep = 3 * v + s
                peer = conn[ep]
                w = peer // 3
                k = kind[v]
                is_tail = (k == 0 and s != 0) or (k == 1 and s == 2)
                head = peer if is_tail else ep
                # coboundary convention: (df)(edge t->h) = f(h) - f(t)
                step = diff(head) if is_tail else -diff(head)
                if w not in pot:
                    pot[w] = pot[v] + step
                    stack.append(w)
                elif pot[w] != pot[v] + step:
                    return False
    return True


def _component_isos(c1: ClosedDiagram, c2: ClosedDiagram, comp1, anchor2):
    """Try to extend comp1[0] -> anchor2 to a full component isomorphism."""
    kind1, kind2 = c1.kind, c2.kind
    conn1, conn2 = c1.conn, c2.conn
    v0 = comp1[0]
    if kind1[v0] != kind2[anchor2]:
        return None
    mapping = {v0: anchor2}
    stack = [v0]
    while stack:
        v = stack.pop()
        w = mapping[v]
        for s in range(3):
            p1 = conn1[3 * v + s]
            p2 = conn2[3 * w + s]
            if p1 % 3 != p2 % 3:
                return None
            u1, u2 = p1 // 3, p2 // 3
            if kind1[u1] != kind2[u2]:
                return None
            if u1 in mapping:
                if mapping[u1] != u2:
                    return None
            else:
                mapping[u1] = u2
                stack.append(u1)
    return mapping


def _isomorphisms(c1: ClosedDiagram, c2: ClosedDiagram):
    """Yield all port-preserving vertex bijections c1 -> c2.

    Ports rigidify everything: fixing the image of one vertex per
    component forces the rest, so the search is a product over
    components of anchor choices.
    """
    comps1 = weak_components(c1)
    comps2 = weak_components(c2)
    if sorted(map(len, comps1)) != sorted(map(len, comps2)):
        return
    verts2 = list(c2.live_vertices())

    def rec(idx, used, acc):
        if idx == len(comps1):
            yield dict(acc)
            return
        comp = comps1[idx]
        for w in verts2:
            if w in used:
                continue
            mapping = _component_isos(c1, c2, comp, w)
            if mapping is None:
                continue
            img = set(mapping.values())
            if img & used:
                continue
            acc.update(mapping)
            yield from rec(idx + 1, used | img, acc)
            for v in mapping:
                del acc[v]

    yield from rec(0, set(), {})


def closed_diagrams_equal(c1: ClosedDiagram, c2: ClosedDiagram) -> bool:
    """Isomorphism with matching cutting class, the V equality notion."""
    if c1.num_vertices() != c2.num_vertices():
        return False
    loops1 = sorted(len(f.cuts) for f in c1.free_loops)
    loops2 = sorted(len(f.cuts) for f in c2.free_loops)
    if loops1 != loops2:
        return False
    w1 = cut_cochain(c1)
    w2 = cut_cochain(c2)
    if c1.num_vertices() == 0:
        return True  # loops already matched exactly (they deduplicate by class)
    for phi in _isomorphisms(c1, c2):
        pulled = {}
        for _tail, head in c1.edges():
            v, s = divmod(head, 3)
            pulled[head] = w2.get(3 * phi[v] + s, 0)
        for i in range(len(c1.free_loops)):
            pulled[("loop", i)] = w1.get(("loop", i), 0)  # matched separately
        if cohomology_equivalent(c1, w1, pulled):
            return True
    return False


def _v_word(w: Word) -> Word:
    for g in w.letters:
        if g.symbol not in ALPHABETS["V"]:
            raise AlphabetError(f"generator {g.symbol!r} is illegal in V")
    return w if w.group == "V" else Word("V", w.letters)


def closed_form(w: Word) -> ClosedDiagram:
    w = _v_word(w)
    d = word_to_diagram(w)
    reduce_diagram(d)
    c = close_abstract(d)
    reduce_closed(c)
    return c


def is_conjugate_v(w1: Word, w2: Word) -> bool:
    """Conjugacy in V: isomorphic reduced closed strand diagrams."""
    return closed_diagrams_equal(closed_form(w1), closed_form(w2))


def torsion_check(w: Word) -> tuple[bool, int | None]:
    """(is_torsion, order).

    An element is torsion iff its reduced closed diagram consists of
    free loops only (it is then conjugate to a prefix permutation whose
    orbit lengths are the loop weights).  The oracle confirms by
    iterating: the order must divide the lcm of the loop weights, and
    CutoffExceeded reports the engine bug should it ever fail to.
    """
    c = closed_form(w)
    if c.num_vertices() != 0:
        return (False, None)
    bound = lcm(*(len(f.cuts) for f in c.free_loops)) if c.free_loops else 1
    m = word_to_map(_v_word(w))
    acc = identity_map()
    order = None
    for i in range(1, bound + 1):
        acc = compose(acc, m)
        if equals_identity(acc):
            order = i
            break
    if order is None:
        raise CutoffExceeded(
            f"diagram says torsion with order dividing {bound}, iteration disagrees"
        )
    return (True, order)
