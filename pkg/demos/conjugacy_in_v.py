#!/usr/bin/env python3
"""Walkthrough: Thompson's group V and closed strand diagrams.

V allows strand crossings, so closed diagrams are abstract graphs with
a cutting cohomology class instead of an embedding.  Conjugacy is
port-preserving graph isomorphism plus agreement of the cutting classes
modulo vertex coboundaries, and torsion is visible at a glance: the
reduced closed diagram of a torsion element is free loops only.
"""

import random

from strandgroups import (
    closed_form,
    cut_cochain,
    cohomology_equivalent,
    is_conjugate_v,
    parse_word,
    random_word,
    torsion_check,
    word_to_text,
)

print("== the transposition pi0 ==")
c = closed_form(parse_word("pi0", "V"))
print(f"reduced closed diagram: {c.num_vertices()} vertices, "
      f"free loop weights {sorted(len(f.cuts) for f in c.free_loops)}")
print(f"torsion_check(pi0) = {torsion_check(parse_word('pi0', 'V'))}")
print(f"torsion_check(x0)  = {torsion_check(parse_word('x0', 'V'))}")

print("\n== conjugacy verdicts ==")
for s1, s2 in (("pi0", "x0^-1 pi0 x0"), ("x0", "pi0"), ("c pi0", "pi0 c")):
    v = is_conjugate_v(parse_word(s1, "V"), parse_word(s2, "V"))
    print(f"{s1!r} ~ {s2!r}: {v}")

print("\n== the cutting class is only defined up to coboundaries ==")
c = closed_form(parse_word("x0 pi0", "V"))
base = cut_cochain(c)
rng = random.Random(5)
f = {v: rng.randrange(-2, 3) for v in c.live_vertices()}
shifted = dict(base)
for tail, head in c.edges():
    shifted[head] += f[head // 3] - f[tail // 3]
print(f"cochain shifted by a coboundary stays equivalent: "
      f"{cohomology_equivalent(c, base, shifted)}")
loops = closed_form(parse_word("pi0", "V"))
w1 = cut_cochain(loops)
w2 = dict(w1)
w2[("loop", 0)] += 1
print(f"bumping a free loop's weight breaks equivalence: "
      f"{cohomology_equivalent(loops, w1, w2)}")

print("\n== torsion elements keep their order under conjugation ==")
for _ in range(3):
    g = random_word("V", rng.randrange(1, 6), rng)
    w = g.inverse() * parse_word("pi0", "V") * g
    print(f"g = {word_to_text(g)!r}: torsion_check = {torsion_check(w)}")
