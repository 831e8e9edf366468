"""Simplicial complexes with injective vertex values.

Simplices are plain tuples of vertex ids, stored in ascending order of the
vertex values.  The lexicographic key of a simplex is the tuple of its vertex
values read from the largest down, so comparing two keys compares the
simplices lexicographically.
"""

from __future__ import annotations

import math
from collections.abc import Iterable, Iterator, Mapping
from itertools import combinations

Simplex = tuple[int, ...]


class ComplexError(ValueError):
    """Base class for malformed complex input."""


class DuplicateValue(ComplexError):
    pass


class UnknownVertex(ComplexError):
    pass


class DimensionMismatch(ComplexError):
    pass


class SimplicialComplex:
    """Immutable, downward-closed set of simplices with vertex values.

    Use :func:`build_complex` to construct one from maximal simplices.
    """

    def __init__(self, levels: list[list[Simplex]], values: Mapping[int, float]):
        # Trusts its input: canonical simplices, closed under faces, no duplicates.
        self.values: dict[int, float] = dict(values)
        self.levels: list[list[Simplex]] = [list(level) for level in levels]
        while self.levels and not self.levels[-1]:
            self.levels.pop()
        self._index: dict[Simplex, int] = {}
        for level in self.levels:
            for s in level:
                self._index[s] = len(self._index)
        self._keys: dict[Simplex, tuple[float, ...]] = {}
        self._cofaces: dict[Simplex, list[Simplex]] | None = None

    @property
    def dim(self) -> int:
        return len(self.levels) - 1

    @property
    def n(self) -> int:
        return len(self._index)

    @property
    def counts(self) -> list[int]:
        return [len(level) for level in self.levels]

    @property
    def vertices(self) -> list[int]:
        return [s[0] for s in self.levels[0]] if self.levels else []

    def __len__(self) -> int:
        return len(self._index)

    def __contains__(self, s: object) -> bool:
        return s in self._index

    def __iter__(self) -> Iterator[Simplex]:
        for level in self.levels:
            yield from level

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self.values == other.values and set(self._index) == set(other._index)

    def __repr__(self) -> str:
        return f"SimplicialComplex(dim={self.dim}, counts={self.counts})"

    def simplices(self, p: int) -> list[Simplex]:
        if 0 <= p < len(self.levels):
            return self.levels[p]
        return []

    def key(self, s: Simplex) -> tuple[float, ...]:
        """Lexicographic key: vertex values in descending order."""
        k = self._keys.get(s)
        if k is None:
            values = self.values
            k = tuple(values[v] for v in reversed(s))
            self._keys[s] = k
        return k

    def maxh(self, s: Simplex) -> float:
        return self.values[s[-1]]

    def canonical(self, vertices: Iterable[int]) -> Simplex:
        """Sort vertex ids into storage order; raises UnknownVertex."""
        vs = list(vertices)
        for v in vs:
            if v not in self.values:
                raise UnknownVertex(f"vertex {v} has no value")
        return tuple(sorted(vs, key=self.values.__getitem__))

    def faces(self, s: Simplex) -> list[Simplex]:
        """Codimension-one faces of ``s``."""
        if len(s) == 1:
            return []
        return [s[:i] + s[i + 1:] for i in range(len(s))]

    def cofaces(self, s: Simplex) -> list[Simplex]:
        """Codimension-one cofaces of ``s``."""
        if self._cofaces is None:
            up: dict[Simplex, list[Simplex]] = {t: [] for t in self._index}
            for level in self.levels[1:]:
                for t in level:
                    for i in range(len(t)):
                        up[t[:i] + t[i + 1:]].append(t)
            self._cofaces = up
        return self._cofaces[s]

    def index(self, s: Simplex) -> int:
        return self._index[s]

    def sorted_simplices(self) -> list[Simplex]:
        """All simplices ordered by (dimension, lexicographic key)."""
        return [s for level in self.levels for s in sorted(level, key=self.key)]


def _check_values(values: Mapping[int, float]) -> None:
    seen: dict[float, int] = {}
    for v, x in values.items():
        if not math.isfinite(x):
            raise ComplexError(f"vertex {v} has non-finite value {x!r}")
        if x in seen:
            raise DuplicateValue(f"vertices {seen[x]} and {v} share value {x!r}")
        seen[x] = v


def build_complex(
    maximal_simplices: Iterable[Iterable[int]], values: Mapping[int, float]
) -> SimplicialComplex:
    """Downward closure of ``maximal_simplices`` with vertex values ``values``.

    Every vertex with a value becomes a vertex of the complex, even if no
    listed simplex mentions it.
    """
    values = {int(v): float(x) for v, x in values.items()}
    _check_values(values)
    closed: set[Simplex] = {(v,) for v in values}
    for raw in maximal_simplices:
        vs = list(raw)
        for v in vs:
            if v not in values:
                raise UnknownVertex(f"simplex {vs} references vertex {v} without a value")
        if len(set(vs)) != len(vs):
            raise ComplexError(f"simplex {vs} repeats a vertex")
        if not vs:
            continue
        s = tuple(sorted(vs, key=values.__getitem__))
        if s in closed:
            continue
        for k in range(len(s), 0, -1):
            closed.update(combinations(s, k))
    return _from_closed(closed, values)


def _from_closed(simplices: Iterable[Simplex], values: Mapping[int, float]) -> SimplicialComplex:
    levels: list[list[Simplex]] = []
    for s in simplices:
        p = len(s) - 1
        while len(levels) <= p:
            levels.append([])
        levels[p].append(s)
    for level in levels:
        level.sort(key=lambda s: tuple(values[v] for v in reversed(s)))
    return SimplicialComplex(levels, values)


def lex_compare(K: SimplicialComplex, a: Simplex, b: Simplex) -> int:
    """Return -1, 0 or 1 as ``a`` is lexicographically below, equal to or above ``b``."""
    if len(a) != len(b):
        raise DimensionMismatch(f"cannot compare {a} and {b}")
    ka, kb = K.key(a), K.key(b)
    return (ka > kb) - (ka < kb)


def _require_vertex(K: SimplicialComplex, v: int) -> None:
    if (v,) not in K:
        raise UnknownVertex(f"vertex {v} is not in the complex")


def link(K: SimplicialComplex, v: int) -> set[Simplex]:
    """Simplices of the closed star of ``v`` that do not contain ``v``.

    Cofaces of ``v`` are coloured blue by walking up the Hasse adjacency;
    codimension-one faces of blue simplices that are not blue form the link.
    One level down is enough: if tau avoids v and lies under a blue simplex,
    tau + v is blue and has tau as a codimension-one face.
    """
    _require_vertex(K, v)
    start = (v,)
    blue = {start}
    stack = [start]
    while stack:
        s = stack.pop()
        for c in K.cofaces(s):
            if c not in blue:
                blue.add(c)
                stack.append(c)
    red: set[Simplex] = set()
    for s in blue:
        for f in K.faces(s):
            if f not in blue:
                red.add(f)
    return red


def lower_link(K: SimplicialComplex, v: int) -> SimplicialComplex:
    """Subcomplex of the link spanned by vertices with value below that of ``v``.

    Vertex ids and values are carried over unchanged.
    """
    red = link(K, v)
    top = K.values[v]
    below = [s for s in red if K.values[s[-1]] < top]
    vals = {s[0]: K.values[s[0]] for s in below if len(s) == 1}
    return _from_closed(below, vals)
