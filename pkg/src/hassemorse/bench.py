"""Complex families and the benchmark comparing the two extractors."""

from __future__ import annotations

import csv
import random
import sys
import time
from itertools import combinations
from typing import IO

from .complex_core import SimplicialComplex, build_complex
from .extract import Counters, extract_right_child
from .reference import extract_raw

FAMILIES = ("simplex", "sphere", "random")
ALGORITHMS = ("right-child", "raw")
FIELDS = ["family", "d", "trial", "n", "algorithm", "comparisons", "lower_link_calls",
          "nodes_visited", "seconds"]

RANDOM_DENSITY = 0.6


def simplex_closure(d: int) -> SimplicialComplex:
    """Closure of one d-simplex with vertex values 0..d."""
    return build_complex([list(range(d + 1))], {v: float(v) for v in range(d + 1)})


def sphere(d: int) -> SimplicialComplex:
    """Boundary of a (d+1)-simplex, a triangulated d-sphere."""
    verts = range(d + 2)
    return build_complex(combinations(verts, d + 1), {v: float(v) for v in verts})


def random_flag_complex(
    n_vertices: int, density: float, max_dim: int, rng: random.Random
) -> SimplicialComplex:
    """Clique complex of an Erdos-Renyi graph, truncated at ``max_dim``.

    Vertex values are a random permutation of 0..n_vertices-1.
    """
    adj: dict[int, set[int]] = {v: set() for v in range(n_vertices)}
    for a, b in combinations(range(n_vertices), 2):
        if rng.random() < density:
            adj[a].add(b)
            adj[b].add(a)
    cliques = [(v,) for v in range(n_vertices)]
    frontier = cliques
    for _ in range(max_dim):
        grown = []
        for c in frontier:
            common = set.intersection(*(adj[v] for v in c))
            grown.extend(c + (w,) for w in sorted(common) if w > c[-1])
        if not grown:
            break
        cliques += grown
        frontier = grown
    order = list(range(n_vertices))
    rng.shuffle(order)
    return build_complex(cliques, {v: float(x) for v, x in zip(range(n_vertices), order)})


def family_complex(family: str, d: int, trial: int = 0) -> SimplicialComplex:
    if family == "simplex":
        return simplex_closure(d)
    if family == "sphere":
        return sphere(d)
    if family == "random":
        rng = random.Random(1000 * d + trial)
        return random_flag_complex(d + 6, RANDOM_DENSITY, d, rng)
    raise ValueError(f"unknown family {family!r}")


def run_one(K: SimplicialComplex, algorithm: str) -> tuple[Counters, float]:
    counters = Counters()
    start = time.perf_counter()
    if algorithm == "right-child":
        extract_right_child(K, counters=counters)
    elif algorithm == "raw":
        extract_raw(K, counters=counters)
    else:
        raise ValueError(f"unknown algorithm {algorithm!r}")
    return counters, time.perf_counter() - start


def bench_rows(family: str, dims: range, trials: int = 1, algorithms=ALGORITHMS):
    for d in dims:
        for trial in range(trials):
            K = family_complex(family, d, trial)
            for algorithm in algorithms:
                counters, seconds = run_one(K, algorithm)
                yield {
                    "family": family,
                    "d": d,
                    "trial": trial,
                    "n": K.n,
                    "algorithm": algorithm,
                    "comparisons": counters.comparisons,
                    "lower_link_calls": counters.lower_link_calls,
                    "nodes_visited": counters.nodes_visited,
                    "seconds": f"{seconds:.6f}",
                }


def write_bench_csv(rows, out: IO[str] | None = None) -> None:
    out = out or sys.stdout
    writer = csv.DictWriter(out, fieldnames=FIELDS, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow(row)
        out.flush()
