"""Complex files, JSON result documents and DOT export.

Complex file format, one record per line::

    # comment
    v <id> <value>        vertex with its value
    s <id> <id> ...       maximal simplex

Blank lines are ignored.  Vertex lines may appear anywhere in the file.
"""

from __future__ import annotations

import json
from collections.abc import Iterable
from pathlib import Path

from .complex_core import (
    ComplexError,
    DuplicateValue,
    Simplex,
    SimplicialComplex,
    UnknownVertex,
    build_complex,
)
from .extract import Gvf
from .morse import critical_counts


class ParseError(ComplexError):
    def __init__(self, message: str, line: int | None = None, path: str | None = None):
        where = ""
        if path is not None:
            where += f"{path}:"
        if line is not None:
            where += f"{line}:"
        super().__init__(f"{where} {message}" if where else message)
        self.line = line
        self.path = path


def parse_complex_text(text: str, path: str | None = None) -> SimplicialComplex:
    values: dict[int, float] = {}
    value_line: dict[float, int] = {}
    simplices: list[tuple[int, list[int]]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tag, *fields = line.split()
        try:
            if tag == "v":
                if len(fields) != 2:
                    raise ParseError("expected 'v <id> <value>'", lineno, path)
                vid, x = int(fields[0]), float(fields[1])
                if vid in values:
                    raise ParseError(f"vertex {vid} defined twice", lineno, path)
                if x in value_line:
                    raise DuplicateValue(
                        f"{path or '<text>'}:{lineno}: value {x!r} already used on line {value_line[x]}"
                    )
                values[vid] = x
                value_line[x] = lineno
            elif tag == "s":
                if not fields:
                    raise ParseError("empty simplex", lineno, path)
                simplices.append((lineno, [int(f) for f in fields]))
            else:
                raise ParseError(f"unknown record type {tag!r}", lineno, path)
        except ValueError as exc:
            if isinstance(exc, ComplexError):
                raise
            raise ParseError(str(exc), lineno, path) from None
    for lineno, vs in simplices:
        for v in vs:
            if v not in values:
                raise UnknownVertex(f"{path or '<text>'}:{lineno}: vertex {v} has no 'v' line")
    try:
        return build_complex((vs for _, vs in simplices), values)
    except ComplexError as exc:
        raise ParseError(str(exc), path=path) from exc


def parse_complex_file(path: str | Path) -> SimplicialComplex:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise ParseError(f"cannot read file: {exc.strerror or exc}", path=str(path)) from None
    return parse_complex_text(text, str(path))


def facets(K: SimplicialComplex) -> list[Simplex]:
    return [s for s in K.sorted_simplices() if len(s) > 1 and not K.cofaces(s)]


def format_complex(K: SimplicialComplex) -> str:
    """Serialize ``K`` to the complex file format (vertices, then facets)."""
    lines = [f"v {v} {K.values[v]!r}" for v in sorted(K.values)]
    lines += ["s " + " ".join(map(str, s)) for s in facets(K)]
    return "\n".join(lines) + "\n"


def write_complex_file(K: SimplicialComplex, path: str | Path) -> None:
    Path(path).write_text(format_complex(K))


def _ordered(K: SimplicialComplex, cells: Iterable[Simplex]) -> list[list[int]]:
    return [list(s) for s in sorted(cells, key=lambda s: (len(s), K.key(s)))]


def gvf_document(K: SimplicialComplex, gvf: Gvf) -> dict:
    """Deterministic description of a gradient vector field.

    Simplices are ordered by (dimension, lexicographic key), so two fields on
    the same complex serialize identically exactly when they are equal.
    """
    pairs = sorted(gvf.matching.items(), key=lambda th: (len(th[0]), K.key(th[0])))
    return {
        "complex": {"n": K.n, "dim": K.dim, "counts": K.counts},
        "heads": _ordered(K, gvf.heads),
        "tails": _ordered(K, gvf.tails),
        "criticals": _ordered(K, gvf.criticals),
        "matching": [[list(t), list(h)] for t, h in pairs],
        "critical_counts": critical_counts(gvf, K.dim),
    }


def result_document(
    K: SimplicialComplex,
    gvf: Gvf,
    algorithm: str,
    counters: dict | None = None,
    seconds: float | None = None,
) -> dict:
    doc = {"algorithm": algorithm}
    doc.update(gvf_document(K, gvf))
    doc["counters"] = dict(counters or {})
    if seconds is not None:
        doc["counters"]["seconds"] = seconds
    return doc


def dumps(doc: dict) -> str:
    return json.dumps(doc, indent=None, separators=(",", ":"))


def gvf_from_document(doc: dict) -> Gvf:
    """Rebuild the field from a document; partition facts are re-derived from it."""
    def cells(key: str) -> set[Simplex]:
        return {tuple(s) for s in doc[key]}

    return Gvf(
        heads=cells("heads"),
        tails=cells("tails"),
        criticals=cells("criticals"),
        matching={tuple(t): tuple(h) for t, h in doc["matching"]},
    )


SHAPES = {"H": "box", "T": "pentagon", "C": "hexagon"}
COLORS = {"H": "lightblue", "T": "palegreen", "C": "salmon"}


def _node_id(s: Simplex) -> str:
    return '"' + ",".join(map(str, s)) + '"'


def format_dot(K: SimplicialComplex, gvf: Gvf) -> str:
    """Layered Hasse diagram: heads boxes, tails pentagons, criticals hexagons.

    Ordinary incidences point from coface down to face; matched pairs point
    from tail up to head and are drawn bold.
    """
    out = ["digraph hasse {", "\trankdir=BT;", "\tnode [style=filled];"]
    for p, level in enumerate(K.levels):
        out.append("\t{")
        out.append("\t\trank = same;")
        for s in sorted(level, key=K.key):
            tag = gvf.label(s)
            label = "[" + ",".join(map(str, s)) + "]"
            out.append(
                f'\t\t{_node_id(s)} [label="{label}", shape={SHAPES[tag]}, fillcolor={COLORS[tag]}];'
            )
        out.append("\t}")
    for level in K.levels[1:]:
        for s in sorted(level, key=K.key):
            for f in K.faces(s):
                if gvf.matching.get(f) == s:
                    out.append(f"\t{_node_id(f)} -> {_node_id(s)} [style=bold, color=blue];")
                else:
                    out.append(f"\t{_node_id(s)} -> {_node_id(f)};")
    out.append("}")
    return "\n".join(out) + "\n"


def export_dot(K: SimplicialComplex, gvf: Gvf, path: str | Path) -> None:
    Path(path).write_text(format_dot(K, gvf))
