"""Command line entry point.

Exit codes: 0 success, 1 validation or comparison failure, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import difflib
import json
import math
import sys
import time
from dataclasses import asdict

from . import fixtures
from .bench import ALGORITHMS, FAMILIES, bench_rows, write_bench_csv
from .cli_io import format_dot, gvf_document, parse_complex_file, result_document
from .complex_core import ComplexError
from .extract import Counters, extract_right_child
from .hasse import decorated_hasse, is_left_right_parent
from .morse import betti_z2, critical_counts, euler_characteristic, validate_gvf
from .reference import extract, extract_raw

EXIT_OK, EXIT_INVALID, EXIT_USAGE = 0, 1, 2


def _run(K, algo: str, persistence: float):
    counters = Counters()
    start = time.perf_counter()
    if algo == "right-child":
        gvf = extract_right_child(K, counters=counters)
    elif algo == "raw":
        gvf = extract_raw(K, counters=counters)
    else:
        gvf = extract(K, persistence, counters=counters)
    return gvf, counters, time.perf_counter() - start


def _parse_dims(text: str) -> range:
    lo, sep, hi = text.partition("..")
    try:
        a = int(lo)
        b = int(hi) if sep else a
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected A..B, got {text!r}") from None
    if b < a or a < 0:
        raise argparse.ArgumentTypeError(f"bad dimension range {text!r}")
    return range(a, b + 1)


def cmd_extract(args) -> int:
    K = parse_complex_file(args.file)
    gvf, counters, seconds = _run(K, args.algo, args.persistence)
    if args.out == "dot":
        text = format_dot(K, gvf)
    else:
        text = json.dumps(result_document(K, gvf, args.algo, asdict(counters), seconds), indent=1) + "\n"
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_compare(args) -> int:
    K = parse_complex_file(args.file)
    a = json.dumps(gvf_document(K, extract_right_child(K)), indent=1)
    b = json.dumps(gvf_document(K, extract_raw(K)), indent=1)
    if a == b:
        print(f"{args.file}: outputs identical (n={K.n}, dim={K.dim})")
        return EXIT_OK
    diff = difflib.unified_diff(
        b.splitlines(), a.splitlines(), "extract_raw", "extract_right_child", lineterm=""
    )
    print("\n".join(diff))
    print(f"{args.file}: outputs differ", file=sys.stderr)
    return EXIT_INVALID


def cmd_validate(args) -> int:
    K = parse_complex_file(args.file)
    gvf, _, _ = _run(K, args.algo, args.persistence)
    report = validate_gvf(K, gvf)
    c = critical_counts(gvf, K.dim)
    b = betti_z2(K)
    morse_ok = all(ci >= bi for ci, bi in zip(c, b))
    euler_ok = sum((-1) ** i * x for i, x in enumerate(c)) == euler_characteristic(K)
    for name, ok in (("partition", report.is_partition), ("bijection", report.is_bijection),
                     ("codim1", report.is_codim1), ("acyclic", report.is_acyclic),
                     ("morse-inequalities", morse_ok), ("euler", euler_ok)):
        print(f"{name:20s} {'ok' if ok else 'FAIL'}")
    print(f"critical counts      {c}")
    print(f"betti (Z2)           {b}")
    for rule, cells in report.violations:
        print(f"violation: {rule}: {[list(s) for s in cells]}", file=sys.stderr)
    return EXIT_OK if report.ok and morse_ok and euler_ok else EXIT_INVALID


def cmd_bench(args) -> int:
    algos = args.algo or list(ALGORITHMS)
    write_bench_csv(bench_rows(args.family, args.dims, args.trials, algos))
    return EXIT_OK


def cmd_demo(args) -> int:
    K = fixtures.load("cat")
    H = decorated_hasse(K)
    gvf = extract_right_child(K, hasse=H)
    print(f"cat complex: counts {K.counts}")
    for p in range(K.dim, 0, -1):
        for s in sorted(K.levels[p], key=K.key, reverse=True):
            node = H[s]
            print(f"  {list(s)!s:12} rchild={list(node.rchild.simplex)!s:9} "
                  f"lparent(rchild)={list(node.rchild.lparent.simplex)!s:9} "
                  f"lr-parent={is_left_right_parent(H, node)!s:5} -> {gvf.label(s)}")
    print(f"  vertices critical: {sorted(s[0] for s in gvf.criticals if len(s) == 1)}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hassemorse", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add_algo(p, default):
        p.add_argument("--algo", choices=["right-child", "raw", "full"], default=default)
        p.add_argument("--persistence", type=float, default=math.inf,
                       help="cancellation threshold for --algo full (default: inf)")

    p = sub.add_parser("extract", help="compute a gradient vector field")
    p.add_argument("file")
    add_algo(p, "right-child")
    p.add_argument("--out", choices=["json", "dot"], default="json")
    p.add_argument("-o", "--output", help="write here instead of stdout")
    p.set_defaults(func=cmd_extract)

    p = sub.add_parser("compare", help="check both extractors agree")
    p.add_argument("file")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("validate", help="validate a field and the Morse inequalities")
    p.add_argument("file")
    add_algo(p, "right-child")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("bench", help="CSV benchmark over a complex family")
    p.add_argument("--family", choices=FAMILIES, default="simplex")
    p.add_argument("--dims", type=_parse_dims, default=range(1, 6), help="A..B")
    p.add_argument("--trials", type=int, default=1)
    p.add_argument("--algo", action="append", choices=ALGORITHMS)
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("demo", help="walk the extractor over the cat complex")
    p.set_defaults(func=cmd_demo)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ComplexError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE
