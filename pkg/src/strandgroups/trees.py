"""Finite binary trees and tree pairs.

A tree is either ``None`` (a leaf) or a pair ``(left, right)`` of trees.
Trees double as complete prefix antichains: the leaves of a tree, read
left to right, are binary strings no one of which is a prefix of another,
and every infinite binary string has exactly one of them as a prefix.
"""

from __future__ import annotations

from dataclasses import dataclass

LEAF = None


def is_leaf(t) -> bool:
    return t is None


def num_leaves(t) -> int:
    if t is None:
        return 1
    return num_leaves(t[0]) + num_leaves(t[1])


def antichain(t) -> list[str]:
    """Leaf addresses of ``t`` in left-to-right order ('' for a lone leaf)."""
    out = []

    def walk(node, prefix):
        if node is None:
            out.append(prefix)
        else:
            walk(node[0], prefix + "0")
            walk(node[1], prefix + "1")

    walk(t, "")
    return out


def tree_from_antichain(chain) -> tuple | None:
    """Rebuild the tree whose leaves are exactly ``chain`` (sorted or not)."""
    strings = sorted(chain)
    if strings == [""]:
        return LEAF

    def build(lo, hi, depth):
        # All strings in [lo, hi) share a prefix of length `depth`.
        if hi - lo == 1 and len(strings[lo]) == depth:
            return LEAF
        mid = lo
        while mid < hi and strings[mid][depth] == "0":
            mid += 1
        if mid == lo or mid == hi:
            raise ValueError("not a complete antichain: %r" % (chain,))
        return (build(lo, mid, depth + 1), build(mid, hi, depth + 1))

    return build(0, len(strings), 0)


def comb(n: int) -> tuple | None:
    """The right vine / right comb with ``n`` leaves."""
    if n < 1:
        raise ValueError("comb needs at least one leaf")
    t = LEAF
    for _ in range(n - 1):
        t = (LEAF, t)
    return t


def tree_with_cut(s: str) -> tuple | None:
    """Smallest tree in which the dyadic point 0.s is a boundary between leaves."""
    if s == "":
        return LEAF
    if s[0] == "1":
        return (LEAF, tree_with_cut(s[1:]))
    return (tree_with_cut(s[1:]), LEAF)


@dataclass
class TreePair:
    """A pair of binary trees with a bijection between their leaves.

    ``bijection[i]`` is the index of the range-tree leaf fed by domain
    leaf ``i``.  The identity bijection describes an element of F, a
    cyclic one an element of T, an arbitrary one an element of V.
    """

    domain: tuple | None
    range_: tuple | None
    bijection: tuple[int, ...]

    def __post_init__(self):
        n = num_leaves(self.domain)
        if num_leaves(self.range_) != n:
            raise ValueError("tree pair leaf counts differ")
        if sorted(self.bijection) != list(range(n)):
            raise ValueError("leaf bijection is not a bijection")

    @property
    def n_leaves(self) -> int:
        return num_leaves(self.domain)

    def is_cyclic(self) -> bool:
        """True when the bijection is i -> (i + s) mod n for some shift s."""
        n = self.n_leaves
        s = self.bijection[0]
        return all(self.bijection[i] == (i + s) % n for i in range(n))

    def cyclic_shift(self) -> int:
        if not self.is_cyclic():
            raise ValueError("leaf bijection is not cyclic")
        return self.bijection[0]


def identity_pair() -> TreePair:
    return TreePair(LEAF, LEAF, (0,))
