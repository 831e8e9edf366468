"""The lower-link based extraction pipeline and its cancellation passes.

``extract_raw`` recurses on the lower link of every vertex; ``extract`` follows
it with persistence-thresholded cancellation of critical pairs along unique
gradient paths.  These serve as the baseline the Hasse-diagram extractor is
checked and benchmarked against.
"""

from __future__ import annotations

import logging
import math
import random
from dataclasses import dataclass

from .complex_core import Simplex, SimplicialComplex, lower_link
from .extract import Counters, Gvf
from .morse import InvalidGvf, validate_gvf

log = logging.getLogger(__name__)


class NotCritical(ValueError):
    pass


class PathLimitExceeded(RuntimeError):
    pass


class InvalidResult(RuntimeError):
    """A conjectural pass produced a matching that fails validation."""

    def __init__(self, message: str, report=None):
        super().__init__(message)
        self.report = report


@dataclass(frozen=True)
class GradientPath:
    """Alternating cells ``src, t0, s0, t1, s1, ..., tr-1, sr-1, target``.

    ``src`` is a critical (p+1)-simplex, ``target`` a critical p-simplex, and
    each (t_i, s_i) is a matched pair with t_i a face of the previous
    (p+1)-cell other than its own tail.
    """

    cells: tuple[Simplex, ...]

    @property
    def source(self) -> Simplex:
        return self.cells[0]

    @property
    def target(self) -> Simplex:
        return self.cells[-1]

    @property
    def r(self) -> int:
        """Number of matched pairs traversed."""
        return (len(self.cells) - 2) // 2

    @property
    def nontrivial(self) -> bool:
        return self.r > 0

    def pairs(self) -> list[tuple[Simplex, Simplex]]:
        c = self.cells
        return [(c[i], c[i + 1]) for i in range(1, len(c) - 1, 2)]


@dataclass(frozen=True)
class CancelConfig:
    p: float
    j: int

    def __post_init__(self):
        if not self.p >= 0:
            raise ValueError(f"persistence threshold must be >= 0, got {self.p}")


def _join(v: int, s: Simplex) -> Simplex:
    # every vertex of a lower-link simplex sits below v
    return s + (v,)


def extract_raw(
    K: SimplicialComplex,
    counters: Counters | None = None,
    inner_persistence: float = 0.0,
    rng: random.Random | None = None,
) -> Gvf:
    """Gradient vector field built vertex by vertex from lower links.

    Vertices are visited in ascending value order, or shuffled by ``rng`` at
    every level of the recursion.  Each lower link is extracted recursively
    with threshold ``inner_persistence``; the default of 0 performs no inner
    cancellation.  A positive threshold lets the recursion cancel pairs inside
    lower links, after which the result is no longer the left-right-parent
    field.
    """
    gvf = Gvf()
    order = sorted(K.vertices, key=K.values.__getitem__)
    if rng is not None:
        rng.shuffle(order)
    for v in order:
        sub = lower_link(K, v)
        if counters is not None:
            counters.lower_link_calls += 1
        if sub.n == 0:
            gvf.criticals.add((v,))
            continue
        inner = extract(sub, inner_persistence, counters, inner_persistence, rng=rng)
        w0 = min((s for s in inner.criticals if len(s) == 1), key=lambda s: sub.values[s[0]])
        gvf.pair((v,), _join(v, w0))
        for s in inner.criticals:
            if s != w0:
                gvf.criticals.add(_join(v, s))
        for t, h in inner.matching.items():
            gvf.pair(_join(v, t), _join(v, h))
    return gvf


def extract(
    K: SimplicialComplex,
    p: float,
    counters: Counters | None = None,
    inner_persistence: float = 0.0,
    path_limit: int | None = None,
    rng: random.Random | None = None,
) -> Gvf:
    """``extract_raw`` followed by cancellation in dimensions 1..dim K."""
    gvf = extract_raw(K, counters, inner_persistence, rng)
    for j in range(1, K.dim + 1):
        gvf = extract_cancel(K, p, j, gvf, path_limit=path_limit)
    return gvf


def gradient_paths(
    K: SimplicialComplex,
    gvf: Gvf,
    sigma: Simplex,
    j: int | None = None,
    limit: int | None = None,
) -> list[GradientPath]:
    """All nontrivial gradient paths from critical ``sigma`` to critical (j-1)-cells.

    Depth-first over the matching; terminates because the matching is
    acyclic.  Raises PathLimitExceeded once more than ``limit`` paths exist.
    """
    if sigma not in gvf.criticals:
        raise NotCritical(f"{list(sigma)} is not critical")
    if j is None:
        j = len(sigma) - 1
    if len(sigma) - 1 != j or j < 1:
        raise ValueError(f"{list(sigma)} is not a {j}-simplex with j >= 1")
    matching, criticals = gvf.matching, gvf.criticals
    found: list[GradientPath] = []
    # stack of (current (j)-cell, its tail or None, cells so far)
    stack: list[tuple[Simplex, Simplex | None, tuple[Simplex, ...]]] = [(sigma, None, (sigma,))]
    while stack:
        cell, came_from, cells = stack.pop()
        for face in K.faces(cell):
            if face == came_from:
                continue
            if face in criticals:
                if came_from is not None:
                    found.append(GradientPath(cells + (face,)))
                    if limit is not None and len(found) > limit:
                        raise PathLimitExceeded(
                            f"more than {limit} gradient paths from {list(sigma)}"
                        )
                continue
            head = matching.get(face)
            if head is not None and len(head) == len(cell):
                if head in cells:
                    raise InvalidGvf(f"matching has a cycle through {list(head)}")
                stack.append((head, face, cells + (face, head)))
    return found


def extract_cancel(
    K: SimplicialComplex,
    p: float,
    j: int,
    gvf: Gvf,
    path_limit: int | None = None,
) -> Gvf:
    """Cancel critical j/(j-1) pairs joined by a unique path of persistence below ``p``.

    Critical j-cells are processed in lexicographic order; paths are
    recomputed against the current field each time.  Returns a new field.
    """
    CancelConfig(p, j)
    if j < 1:
        raise ValueError("j must be >= 1")
    gvf = gvf.copy()
    for sigma in sorted((s for s in gvf.criticals if len(s) == j + 1), key=K.key):
        if sigma not in gvf.criticals:
            continue
        s = K.maxh(sigma)
        try:
            paths = gradient_paths(K, gvf, sigma, j, limit=path_limit)
        except PathLimitExceeded as exc:
            log.warning("skipping cancellation at %s: %s", list(sigma), exc)
            continue
        eligible = [g for g in paths if s - K.maxh(g.target) < p]
        if not eligible:
            continue
        # a critical face of sigma is a second, direct route to that endpoint
        ends: dict[Simplex, int] = {f: 1 for f in K.faces(sigma) if f in gvf.criticals}
        for g in eligible:
            ends[g.target] = ends.get(g.target, 0) + 1
        best: GradientPath | None = None
        best_m = math.inf
        for g in eligible:
            m = K.maxh(g.target) if ends[g.target] == 1 else math.inf
            # ties on m go to the lexicographically smaller endpoint
            if m < best_m or (m == best_m and best is not None and K.key(g.target) < K.key(best.target)):
                best, best_m = g, m
        if best is None or best_m == math.inf:
            continue
        _reverse(gvf, best)
    return gvf


def _reverse(gvf: Gvf, path: GradientPath) -> None:
    # in the cancellation's own indexing: sigma_1, tau_1, ..., sigma_k, tau_k
    cells = path.cells
    sigmas = cells[0::2]
    taus = cells[1::2]
    k = len(sigmas)
    first, last = sigmas[0], taus[-1]
    gvf.criticals.discard(first)
    gvf.criticals.discard(last)
    gvf.tails.add(last)
    gvf.heads.add(first)
    gvf.matching[last] = sigmas[k - 1]
    for i in range(k - 1):
        gvf.matching[taus[i]] = sigmas[i]


def count_lower_link_calls(K: SimplicialComplex) -> int:
    """Number of lower-link computations made by the recursion of ``extract_raw``."""
    calls = 0
    for v in K.vertices:
        sub = lower_link(K, v)
        calls += 1
        if sub.n:
            calls += count_lower_link_calls(sub)
    return calls


def cancel_kid(K: SimplicialComplex, gvf: Gvf) -> Gvf:
    """Experimental: pair critical cells by a left-right test on the critical-only diagram.

    The diagram has one node per critical simplex and an edge per
    codimension-one incidence between critical simplices.  Its top-down sweep
    mirrors ``extract_right_child``.  The result is validated and
    InvalidResult is raised, leaving ``gvf`` untouched, if it is not a
    gradient vector field.
    """
    crit = gvf.criticals
    down: dict[Simplex, list[Simplex]] = {}
    up: dict[Simplex, list[Simplex]] = {s: [] for s in crit}
    for s in crit:
        down[s] = [f for f in K.faces(s) if f in crit]
        for f in down[s]:
            up[f].append(s)
    rchild = {s: max(fs, key=K.key) for s, fs in down.items() if fs}
    lparent = {s: min(cs, key=K.key) for s, cs in up.items() if cs}

    out = gvf.copy()
    assigned: set[Simplex] = set()
    top = max((len(s) - 1 for s in crit), default=0)
    for i in range(top, 0, -1):
        for s in sorted((c for c in crit if len(c) == i + 1), key=K.key):
            if s in assigned:
                continue
            child = rchild.get(s)
            assigned.add(s)
            if child is not None and child not in assigned and lparent[child] == s:
                out.criticals.discard(s)
                out.criticals.discard(child)
                out.pair(child, s)
                assigned.add(child)
    report = validate_gvf(K, out)
    if not report.ok:
        raise InvalidResult("cancel_kid produced an invalid matching", report)
    return out
