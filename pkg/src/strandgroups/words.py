"""Words over the standard generating sets of F, T and V.

Grammar: tokens separated by whitespace or '*'; each token is a
generator name with an optional integer exponent, e.g. ``x0 x1^-2``.
An uppercase name is shorthand for the inverse (``X0`` is ``x0^-1``).
Powers expand eagerly into letter sequences; the rewriting engine
absorbs any redundancy this introduces.

Generator conventions (fixed here, validated downstream by the exact
prefix-map oracle):

    x0 : domain {00,01,1} -> range {0,10,11}, order-preserving
    x1 : domain {0,100,101,11} -> range {0,10,110,111}, order-preserving
    c  : domain {00,01,1} -> range {0,10,11}, leaves rotated by 2
    pi0: domain {00,01,1} -> itself, first two leaves transposed

In T, ``c`` is realized cylindrically: the two strands that wrap around
the cylinder carry wrap count 1.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .diagram import (
    StrandDiagram,
    identity_diagram,
    from_tree_pair,
    invert,
    sink_code,
    source_code,
)
from .errors import AlphabetError, ParseError
from .trees import TreePair, tree_from_antichain


GROUPS = ("F", "T", "V")

ALPHABETS = {
    "F": ("x0", "x1"),
    "T": ("x0", "x1", "c"),
    "V": ("x0", "x1", "c", "pi0"),
}

GENERATOR_PAIRS = {
    "x0": TreePair(
        tree_from_antichain(["00", "01", "1"]),
        tree_from_antichain(["0", "10", "11"]),
        (0, 1, 2),
    ),
    "x1": TreePair(
        tree_from_antichain(["0", "100", "101", "11"]),
        tree_from_antichain(["0", "10", "110", "111"]),
        (0, 1, 2, 3),
    ),
    "c": TreePair(
        tree_from_antichain(["00", "01", "1"]),
        tree_from_antichain(["0", "10", "11"]),
        (2, 0, 1),
    ),
    "pi0": TreePair(
        tree_from_antichain(["00", "01", "1"]),
        tree_from_antichain(["00", "01", "1"]),
        (1, 0, 2),
    ),
}


@dataclass(frozen=True)
class Generator:
    symbol: str
    sign: int  # +1 or -1

    def inverse(self) -> "Generator":
        return Generator(self.symbol, -self.sign)


@dataclass(frozen=True)
class Word:
    group: str
    letters: tuple[Generator, ...]

    def __post_init__(self):
        if self.group not in GROUPS:
            raise AlphabetError(f"unknown group {self.group!r}")
        for g in self.letters:
            if g.symbol not in ALPHABETS[self.group]:
                raise AlphabetError(f"generator {g.symbol!r} is illegal in {self.group}")

    def __len__(self):
        return len(self.letters)

    def __mul__(self, other: "Word") -> "Word":
        if other.group != self.group:
            raise AlphabetError("cannot concatenate words over different groups")
        return Word(self.group, self.letters + other.letters)

    def inverse(self) -> "Word":
        return Word(self.group, tuple(g.inverse() for g in reversed(self.letters)))


def word(group: str, *letters) -> Word:
    """Convenience constructor from (symbol, sign) pairs or symbols."""
    out = []
    for item in letters:
        if isinstance(item, Generator):
            out.append(item)
        elif isinstance(item, str):
            out.append(Generator(item, 1))
        else:
            sym, sg = item
            out.append(Generator(sym, sg))
    return Word(group, tuple(out))


def commutator(u: Word, v: Word) -> Word:
    return u * v * u.inverse() * v.inverse()


_TOKEN = re.compile(r"^([A-Za-z][A-Za-z0-9]*)(\^(-?\d+))?$")


def parse_word(text: str, group: str = "F") -> Word:
    """Parse the word grammar; see module docstring."""
    if group not in GROUPS:
        raise AlphabetError(f"unknown group {group!r}")
    letters: list[Generator] = []
    pos = 0
    for raw in re.split(r"[\s*]+", text):
        if not raw:
            continue
        pos = text.index(raw, pos)
        m = _TOKEN.match(raw)
        if not m:
            raise ParseError(pos, f"bad token {raw!r}")
        name, _, exp = m.groups()
        sign = 1
        if not name.islower():
            sign = -1
            name = name.lower()
        if name not in GENERATOR_PAIRS:
            raise ParseError(pos, f"unknown generator {raw!r}")
        if name not in ALPHABETS[group]:
            raise AlphabetError(f"generator {name!r} is illegal in {group}")
        count = 1 if exp is None else int(exp)
        total = sign * count
        g = Generator(name, 1 if total > 0 else -1)
        letters.extend([g] * abs(total))
        pos += len(raw)
    return Word(group, tuple(letters))


def word_to_text(w: Word) -> str:
    """Round-trip printer emitting the parse grammar."""
    return " ".join(g.symbol if g.sign > 0 else f"{g.symbol}^-1" for g in w.letters)


def generator_diagram(g: Generator, group: str = "F") -> StrandDiagram:
    """The glued tree-pair diagram of a standard generator."""
    if g.symbol not in ALPHABETS[group]:
        raise AlphabetError(f"generator {g.symbol!r} is illegal in {group}")
    d = from_tree_pair(GENERATOR_PAIRS[g.symbol], cylindrical=(group == "T"))
    if g.sign < 0:
        d = invert(d)
    return d


# -- fast linear word builder -----------------------------------------------
#
# Generator diagrams are tiny and fixed, so building a word's diagram is a
# single pass that appends a precomputed template per letter and splices it
# onto the previous letter's dangling strand.

_TEMPLATES: dict[tuple[str, int, bool], tuple] = {}


def _template(symbol: str, sign: int, cylindrical: bool):
    key = (symbol, sign, cylindrical)
    tpl = _TEMPLATES.get(key)
    if tpl is not None:
        return tpl
    d = from_tree_pair(GENERATOR_PAIRS[symbol], cylindrical=cylindrical)
    if sign < 0:
        d = invert(d)
    x_ep = d.src_conn[0]   # head endpoint fed by the source
    y_ep = d.snk_conn[0]   # tail endpoint feeding the sink
    assert x_ep >= 0 and y_ep >= 0, "generator template must not be the identity"
    lw = d.long or {}
    tlong = tuple((h, w) for h, w in lw.items() if h >= 0 and w)
    snk_lw = lw.get(sink_code(0), 0)
    tpl = (bytes(d.kind), tuple(d.conn), x_ep, y_ep, tlong, snk_lw)
    _TEMPLATES[key] = tpl
    return tpl


def word_to_diagram(w: Word) -> StrandDiagram:
    """Concatenate the generator diagrams of ``w`` left to right.

    No reduction is performed; the result has at most 6 vertices per
    letter.  The empty word gives the identity diagram.
    """
    cyl = w.group == "T"
    if not w.letters:
        return identity_diagram(cylindrical=cyl)
    d = StrandDiagram(1, 1)
    kind = d.kind
    conn = d.conn
    long = {} if cyl else None
    prev_tail = source_code(0)
    carried_lw = 0
    for g in w.letters:
        tk, tconn, x_ep, y_ep, tlong, snk_lw = _template(g.symbol, g.sign, cyl)
        off = len(kind) * 3
        kind.extend(tk)
        conn.extend(v + off if v >= 0 else v for v in tconn)
        x = x_ep + off
        # splice the previous dangling strand into this letter's source edge
        conn[x] = prev_tail
        if prev_tail >= 0:
            conn[prev_tail] = x
        else:
            d.src_conn[0] = x
        if long is not None:
            for h, wv in tlong:
                long[h + off] = wv
            if carried_lw:
                long[x] = long.get(x, 0) + carried_lw
            carried_lw = snk_lw
        prev_tail = y_ep + off
    d.snk_conn[0] = prev_tail
    conn[prev_tail] = sink_code(0)
    if long is not None:
        if carried_lw:
            long[sink_code(0)] = carried_lw
        d.long = long
    return d


def random_word(group: str, length: int, rng) -> Word:
    """Uniform random word over the group alphabet and inverses."""
    alpha = ALPHABETS[group]
    letters = tuple(
        Generator(rng.choice(alpha), rng.choice((1, -1))) for _ in range(length)
    )
    return Word(group, letters)
