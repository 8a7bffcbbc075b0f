import random

import pytest

from strandgroups.closure import ClosedDiagram
from strandgroups.trees import LEAF, TreePair


@pytest.fixture
def rng():
    return random.Random(0xC0FFEE)


def random_tree(rng, n_leaves):
    """Uniform-ish random binary tree with the given number of leaves."""
    if n_leaves == 1:
        return LEAF
    left = rng.randrange(1, n_leaves)
    return (random_tree(rng, left), random_tree(rng, n_leaves - left))


def random_tree_pair(rng, n_leaves, group="F"):
    dom = random_tree(rng, n_leaves)
    ran = random_tree(rng, n_leaves)
    if group == "F":
        bij = tuple(range(n_leaves))
    elif group == "T":
        s = rng.randrange(n_leaves)
        bij = tuple((i + s) % n_leaves for i in range(n_leaves))
    else:
        bij = list(range(n_leaves))
        rng.shuffle(bij)
        bij = tuple(bij)
    return TreePair(dom, ran, bij)


def permute_vertices(c: ClosedDiagram, rng) -> ClosedDiagram:
    """Relabel vertex ids of a closed diagram by a random permutation."""
    n = len(c.kind)
    perm = list(range(n))
    rng.shuffle(perm)
    out = ClosedDiagram(c.mode)
    out.kind = [0] * n
    out.conn = [0] * (3 * n)
    for v in range(n):
        out.kind[perm[v]] = c.kind[v]
        for s in range(3):
            peer = c.conn[3 * v + s]
            out.conn[3 * perm[v] + s] = 3 * perm[peer // 3] + peer % 3
    out.cuts = {3 * perm[h // 3] + h % 3: list(ps) for h, ps in c.cuts.items()}
    out.long = {3 * perm[h // 3] + h % 3: w for h, w in c.long.items()}
    out.free_loops = [type(f)(list(f.cuts), f.long) for f in c.free_loops]
    return out
