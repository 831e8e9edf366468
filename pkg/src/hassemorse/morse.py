"""Discrete Morse functions, gradient field validation and a Z2 homology oracle."""

from __future__ import annotations

from collections.abc import Hashable, Mapping
from dataclasses import dataclass, field
from fractions import Fraction
from numbers import Real

from .complex_core import Simplex, SimplicialComplex
from .extract import Gvf


class MissingValue(KeyError):
    pass


class NotMorse(ValueError):
    pass


class InvalidGvf(ValueError):
    pass


@dataclass
class DiscreteMorseFunction:
    """Values on every simplex of ``complex``.

    Realized functions use exact ``Fraction`` values so that the small
    offsets added to the vertex maxima stay distinguishable at any size.
    """

    values: dict[Simplex, Real]
    complex: SimplicialComplex
    eps: float = 0.0
    delta: float = 0.0

    def __getitem__(self, s: Simplex) -> Real:
        try:
            return self.values[s]
        except KeyError:
            raise MissingValue(s) from None

    def __contains__(self, s: object) -> bool:
        return s in self.values


def _lookup(f: DiscreteMorseFunction | Mapping[Simplex, Real], s: Simplex) -> Real:
    try:
        return f[s]
    except KeyError:
        raise MissingValue(f"no value for simplex {list(s)}") from None


def is_discrete_morse(K: SimplicialComplex, f: DiscreteMorseFunction | Mapping[Simplex, Real]) -> bool:
    """Each simplex has at most one codim-1 coface valued <= it and one face valued >= it."""
    for s in K:
        fs = _lookup(f, s)
        if sum(1 for b in K.cofaces(s) if _lookup(f, b) <= fs) > 1:
            return False
        if sum(1 for g in K.faces(s) if _lookup(f, g) >= fs) > 1:
            return False
    return True


def induced_gvf(K: SimplicialComplex, f: DiscreteMorseFunction | Mapping[Simplex, Real]) -> Gvf:
    """Pair every face with the codim-1 coface it does not lie below."""
    if not is_discrete_morse(K, f):
        raise NotMorse("function violates the discrete Morse conditions")
    gvf = Gvf()
    for level in K.levels[1:]:
        for b in level:
            fb = f[b]
            for a in K.faces(b):
                if f[a] >= fb:
                    # a simplex is matched at most once, up or down
                    if a in gvf.tails or a in gvf.heads or b in gvf.heads or b in gvf.tails:
                        raise NotMorse(f"{list(a)} and {list(b)} are matched twice")
                    gvf.pair(a, b)
    gvf.criticals = {s for s in K if s not in gvf.heads and s not in gvf.tails}
    return gvf


@dataclass
class ValidationReport:
    is_partition: bool = True
    is_bijection: bool = True
    is_codim1: bool = True
    is_acyclic: bool = True
    violations: list[tuple[str, list[Simplex]]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.is_partition and self.is_bijection and self.is_codim1 and self.is_acyclic

    def __bool__(self) -> bool:
        return self.ok


def find_cycle(graph: Mapping[Hashable, list[Hashable]]) -> list[Hashable] | None:
    """A directed cycle as a node list (first node repeated at the end), or None."""
    WHITE, GREY, BLACK = 0, 1, 2
    color = dict.fromkeys(graph, WHITE)
    for root in graph:
        if color[root] != WHITE:
            continue
        color[root] = GREY
        path = [root]
        stack = [iter(graph[root])]
        while stack:
            for nxt in stack[-1]:
                c = color.get(nxt, WHITE)
                if c == GREY:
                    return path[path.index(nxt):] + [nxt]
                if c == WHITE:
                    color[nxt] = GREY
                    path.append(nxt)
                    stack.append(iter(graph.get(nxt, ())))
                    break
            else:
                color[path.pop()] = BLACK
                stack.pop()
    return None


def modified_hasse(K: SimplicialComplex, gvf: Gvf) -> dict[Simplex, list[Simplex]]:
    """Hasse digraph with matched incidences pointing up and all others down."""
    graph: dict[Simplex, list[Simplex]] = {s: [] for s in K}
    matching = gvf.matching
    for level in K.levels[1:]:
        for b in level:
            for a in K.faces(b):
                if matching.get(a) == b:
                    graph[a].append(b)
                else:
                    graph[b].append(a)
    return graph


def validate_gvf(K: SimplicialComplex, gvf: Gvf) -> ValidationReport:
    report = ValidationReport()

    def fail(rule: str, cells) -> None:
        report.violations.append((rule, [tuple(c) for c in cells]))

    H, T, C = gvf.heads, gvf.tails, gvf.criticals
    for name, a, b in (("H&T", H, T), ("H&C", H, C), ("T&C", T, C)):
        shared = a & b
        if shared:
            report.is_partition = False
            fail(f"partition: {name} overlap", sorted(shared))
    union = H | T | C
    missing = [s for s in K if s not in union]
    extra = [s for s in union if s not in K]
    if missing:
        report.is_partition = False
        fail("partition: unassigned", missing)
    if extra:
        report.is_partition = False
        fail("partition: not in complex", extra)

    matching = gvf.matching
    if set(matching) != T:
        report.is_bijection = False
        fail("bijection: domain differs from tails", sorted(set(matching) ^ T))
    images = list(matching.values())
    if set(images) != H:
        report.is_bijection = False
        fail("bijection: image differs from heads", sorted(set(images) ^ H))
    if len(set(images)) != len(images):
        report.is_bijection = False
        seen: dict[Simplex, Simplex] = {}
        for t, h in matching.items():
            if h in seen:
                fail("bijection: head matched twice", [seen[h], t, h])
            seen[h] = t

    for t, h in matching.items():
        if len(h) != len(t) + 1 or not set(t) <= set(h):
            report.is_codim1 = False
            fail("codim1: pair is not a codimension-one incidence", [t, h])

    if report.is_partition:
        cycle = find_cycle(modified_hasse(K, gvf))
        if cycle is not None:
            report.is_acyclic = False
            fail("acyclic: directed cycle", cycle)
    else:
        report.is_acyclic = False
    return report


def _min_gap(values: Mapping[int, float]) -> float:
    xs = sorted(values.values())
    return min((b - a for a, b in zip(xs, xs[1:])), default=float("inf"))


def _offset_scales(counts: list[int]) -> tuple[list[int], list[int], int]:
    """Unscaled match offsets m_i, child bonuses b_i and the total drift bound.

    For a head sigma of dimension i the rightmost face must beat every other
    face with the same maximum vertex by more than m_i.  Both bases lie within
    2 * drift[i-2] of each other and the lex-ranked bonus separates them by at
    least b[i-1] / n[i-1], hence the recurrence below.
    """
    d = len(counts) - 1
    m = [0] + [1] * d
    b = [0] * (d + 1)
    drift = [0] * (d + 1)
    for i in range(1, d + 1):
        if i < d:
            b[i] = counts[i] * (2 * drift[i - 1] + m[i + 1] + 1)
        drift[i] = drift[i - 1] + m[i] + 2 * b[i]
    return m, b, drift[d]


def realize_morse_function(K: SimplicialComplex, gvf: Gvf, eps: float) -> DiscreteMorseFunction:
    """A discrete Morse function inducing ``gvf`` that stays within ``eps`` of the vertex maxima.

    Built one dimension at a time: start from the largest face value, push
    heads down and everything else up by a match offset, then give tails a
    bonus that grows with their lexicographic rank.  Offsets are scaled so
    the total drift is at most (1 - 2**-d) * delta with
    delta = min(eps, smallest vertex-value gap / 2).

    Raises InvalidGvf when ``gvf`` is invalid or cannot be realized this way
    (for instance after cancellation pairs cells with different maxima).
    """
    if not eps > 0:
        raise ValueError("eps must be positive")
    report = validate_gvf(K, gvf)
    if not report.ok:
        raise InvalidGvf(f"invalid gradient vector field: {report.violations[:3]}")

    delta = min(eps, _min_gap(K.values) / 2)
    d = max(K.dim, 0)
    values: dict[Simplex, Fraction] = {(v,): Fraction(x) for v, x in K.values.items()}
    if d >= 1:
        m, b, total = _offset_scales(K.counts)
        scale = Fraction(delta) * (1 - Fraction(1, 2 ** d)) / total
        for i in range(1, d + 1):
            level = sorted(K.levels[i], key=K.key)
            n_i = len(level)
            for rank, s in enumerate(level):
                f = max(values[g] for g in K.faces(s))
                f += -m[i] * scale if s in gvf.heads else m[i] * scale
                if s in gvf.tails:
                    f += b[i] * scale * (1 + Fraction(rank, n_i))
                values[s] = f

    result = DiscreteMorseFunction(values, K, eps=eps, delta=delta)
    for s, x in values.items():
        if abs(x - Fraction(K.maxh(s))) > Fraction(eps):
            raise InvalidGvf(f"{list(s)} drifts more than eps from its vertex maximum")
    if not is_discrete_morse(K, result) or induced_gvf(K, result) != gvf:
        raise InvalidGvf("gradient vector field is not consistent with the vertex values")
    return result


def critical_counts(gvf: Gvf, dim: int | None = None) -> list[int]:
    """Number of critical simplices in each dimension 0..dim."""
    top = max((len(s) - 1 for s in gvf.criticals), default=-1)
    if dim is None:
        dim = top
    counts = [0] * (max(dim, top) + 1)
    for s in gvf.criticals:
        counts[len(s) - 1] += 1
    return counts


def euler_characteristic(K: SimplicialComplex) -> int:
    return sum((-1) ** i * c for i, c in enumerate(K.counts))


def _rank_z2(rows: list[int]) -> int:
    # rows are bitmasks; xor basis keyed by leading bit
    basis: dict[int, int] = {}
    rank = 0
    for r in rows:
        while r:
            top = r.bit_length() - 1
            if top in basis:
                r ^= basis[top]
            else:
                basis[top] = r
                rank += 1
                break
    return rank


def boundary_ranks_z2(K: SimplicialComplex) -> list[int]:
    """rank of the boundary map C_p -> C_{p-1} over Z2, for p = 0..dim K."""
    ranks = [0]
    for p in range(1, K.dim + 1):
        index = {s: i for i, s in enumerate(K.levels[p - 1])}
        rows = []
        for s in K.levels[p]:
            mask = 0
            for f in K.faces(s):
                mask |= 1 << index[f]
            rows.append(mask)
        ranks.append(_rank_z2(rows))
    return ranks


def betti_z2(K: SimplicialComplex) -> list[int]:
    ranks = boundary_ranks_z2(K) + [0]
    return [n - ranks[p] - ranks[p + 1] for p, n in enumerate(K.counts)]


def morse_inequalities_hold(K: SimplicialComplex, gvf: Gvf) -> bool:
    """Weak Morse inequalities c_i >= b_i and the Euler identity."""
    c = critical_counts(gvf, K.dim)
    betti = betti_z2(K)
    if any(ci < bi for ci, bi in zip(c, betti)):
        return False
    return sum((-1) ** i * ci for i, ci in enumerate(c)) == euler_characteristic(K)
