"""Command-line surface.

Verbs:
    reduce  -g F "x0 x1^-1"        vertex/edge counts, optional canonical hex
    eq      -g F "w1" "w2"         word problem via diagram reduction
    conj    -g {F,T,V} "w1" "w2"   conjugacy decision
    rotnum  "w"                    rotation number of a T word
    oracle  eq|conj ...            exact prefix-map oracle
    export  --format dot|json      serialized reduced diagram
    bench   reduce --lengths ...   linear-reduction measurements

Exit codes: 0 ok, 1 internal invariant violation (a bug), 2 user error.
"""

from __future__ import annotations

import argparse
import random
import sys
import time

from .canonical import canonical_annular, is_conjugate_f
from .closure import close_abstract, close_annular, close_cylindrical, reduce_closed
from .errors import AlphabetError, ArityMismatch, ParseError, StrandError
from .io import closed_to_dot, closed_to_json, square_to_dot, square_to_json, to_json_text
from .oracle import brute_conj_witness, word_to_map
from .rewrite import encode_square, reduce_diagram
from .toral import canonical_toral, is_conjugate_t, rotation_number
from .vgroup import is_conjugate_v
from .words import parse_word, random_word, word_to_diagram, word_to_text


def _cmd_reduce(args) -> int:
    w = parse_word(args.word, args.group)
    d = word_to_diagram(w)
    trace = [] if args.trace else None
    reduce_diagram(d, trace=trace)
    edges = sum(1 for _ in d.edges())
    print(f"vertices={d.num_vertices()} edges={edges}")
    if args.trace:
        for kind, top, bottom in trace:
            print(f"{kind} {top} {bottom}")
    if args.emit_canon:
        # conjugacy-class canonical form where one exists (F: annular,
        # T: toral); for V the reduced square encoding identifies the element
        if args.group == "F":
            blob = canonical_annular(reduce_closed(close_annular(d))).blob
        elif args.group == "T":
            blob = canonical_toral(reduce_closed(close_cylindrical(d, 0))).blob
        else:
            blob = encode_square(d)
        print(blob.hex())
    return 0


def _cmd_eq(args) -> int:
    w1 = parse_word(args.word1, args.group)
    w2 = parse_word(args.word2, args.group)
    d = word_to_diagram(w1 * w2.inverse())
    reduce_diagram(d)
    print("true" if d.is_identity() else "false")
    return 0


def _cmd_conj(args) -> int:
    w1 = parse_word(args.word1, args.group)
    w2 = parse_word(args.word2, args.group)
    verdict = {
        "F": is_conjugate_f,
        "T": is_conjugate_t,
        "V": is_conjugate_v,
    }[args.group](w1, w2)
    print("true" if verdict else "false")
    return 0


def _cmd_rotnum(args) -> int:
    w = parse_word(args.word, "T")
    r = rotation_number(w)
    print(f"{r.numerator}/{r.denominator}")
    return 0


def _cmd_oracle(args) -> int:
    if args.oracle_verb == "eq":
        m1 = word_to_map(parse_word(args.word1, args.group))
        m2 = word_to_map(parse_word(args.word2, args.group))
        print("true" if m1 == m2 else "false")
        return 0
    w1 = parse_word(args.word1, args.group)
    w2 = parse_word(args.word2, args.group)
    witness = brute_conj_witness(w1, w2, args.max_len)
    if witness is None:
        print("none")
    else:
        print(word_to_text(witness) if witness.letters else "<empty>")
    return 0


def _cmd_export(args) -> int:
    w = parse_word(args.word, args.group)
    d = word_to_diagram(w)
    reduce_diagram(d)
    if args.stage == "square":
        out = square_to_dot(d) if args.format == "dot" else to_json_text(square_to_json(d))
    else:
        closer = {
            "F": close_annular,
            "T": lambda dd: close_cylindrical(dd, 0),
            "V": close_abstract,
        }[args.group]
        c = reduce_closed(closer(d))
        out = closed_to_dot(c) if args.format == "dot" else to_json_text(closed_to_json(c))
    print(out)
    return 0


def _cmd_bench(args) -> int:
    if args.bench_verb != "reduce":
        raise AlphabetError(f"unknown bench target {args.bench_verb!r}")
    lengths = sorted(int(x) for x in args.lengths.split(","))
    rng = random.Random(args.seed)
    print("# N build_s reduce_s total_s vertices_before vertices_after")
    for n in lengths:
        w = random_word("F", n, rng)
        t0 = time.perf_counter()
        d = word_to_diagram(w)
        t1 = time.perf_counter()
        before = len(d.kind)
        reduce_diagram(d)
        t2 = time.perf_counter()
        after = d.num_vertices()
        print(
            f"{n} {t1 - t0:.3f} {t2 - t1:.3f} {t2 - t0:.3f} {before} {after}",
            flush=True,
        )
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="strandgroups")
    sub = p.add_subparsers(dest="verb", required=True)

    def add_group(sp):
        sp.add_argument("-g", "--group", choices=("F", "T", "V"), default="F")

    sp = sub.add_parser("reduce", help="reduce a word's strand diagram")
    add_group(sp)
    sp.add_argument("word")
    sp.add_argument("--emit-canon", action="store_true")
    sp.add_argument("--trace", action="store_true", help="print (kind, top, bottom) per move")
    sp.set_defaults(func=_cmd_reduce)

    sp = sub.add_parser("eq", help="word problem")
    add_group(sp)
    sp.add_argument("word1")
    sp.add_argument("word2")
    sp.set_defaults(func=_cmd_eq)

    sp = sub.add_parser("conj", help="conjugacy problem")
    add_group(sp)
    sp.add_argument("word1")
    sp.add_argument("word2")
    sp.set_defaults(func=_cmd_conj)

    sp = sub.add_parser("rotnum", help="rotation number of a T word")
    sp.add_argument("word")
    sp.set_defaults(func=_cmd_rotnum)

    sp = sub.add_parser("oracle", help="exact prefix-map oracle")
    osub = sp.add_subparsers(dest="oracle_verb", required=True)
    oe = osub.add_parser("eq")
    add_group(oe)
    oe.add_argument("word1")
    oe.add_argument("word2")
    oe.set_defaults(func=_cmd_oracle)
    oc = osub.add_parser("conj")
    add_group(oc)
    oc.add_argument("--max-len", type=int, default=6)
    oc.add_argument("word1")
    oc.add_argument("word2")
    oc.set_defaults(func=_cmd_oracle)

    sp = sub.add_parser("export", help="serialize a reduced diagram")
    add_group(sp)
    sp.add_argument("--format", choices=("dot", "json"), default="json")
    sp.add_argument("--stage", choices=("square", "closed"), default="square")
    sp.add_argument("word")
    sp.set_defaults(func=_cmd_export)

    sp = sub.add_parser("bench", help="reduction scaling measurements")
    bsub = sp.add_subparsers(dest="bench_verb", required=True)
    br = bsub.add_parser("reduce")
    br.add_argument("--lengths", default="1000,10000,100000")
    br.add_argument("--seed", type=int, default=0)
    br.set_defaults(func=_cmd_bench)

    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, AlphabetError, ArityMismatch) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except StrandError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
