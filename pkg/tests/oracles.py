"""Brute-force reference computations, independent of the code under test."""

from itertools import permutations

import numpy as np

from hassemorse import Gvf


def brute_link(K, v):
    return {tuple(w for w in s if w != v) for s in K if v in s and len(s) > 1}


def brute_lower_link(K, v):
    return {t for t in brute_link(K, v) if all(K.values[w] < K.values[v] for w in t)}


def closed_form_field(K):
    """The left-right-parent field from its closed form.

    The leftmost coface of tau adds the lowest-valued vertex w with tau + w in
    K, so sigma is a left-right parent iff its lowest vertex is that w for the
    face sigma minus its lowest vertex.
    """
    simplices = set(K)
    gvf = Gvf()
    for s in simplices:
        if len(s) == 1:
            continue
        rest = s[1:]
        candidates = [w for w in K.vertices if w not in rest and _with(K, rest, w) in simplices]
        if min(candidates, key=K.values.__getitem__) == s[0]:
            gvf.pair(rest, s)
    gvf.criticals = simplices - gvf.heads - gvf.tails
    return gvf


def _with(K, t, w):
    return tuple(sorted(t + (w,), key=K.values.__getitem__))


def gf2_rank(matrix):
    a = np.array(matrix, dtype=np.uint8) % 2
    rank = 0
    rows, cols = a.shape if a.size else (0, 0)
    for c in range(cols):
        pivot = next((r for r in range(rank, rows) if a[r, c]), None)
        if pivot is None:
            continue
        a[[rank, pivot]] = a[[pivot, rank]]
        for r in range(rows):
            if r != rank and a[r, c]:
                a[r] ^= a[rank]
        rank += 1
    return rank


def dense_betti(K):
    ranks = [0]
    for p in range(1, K.dim + 1):
        lo, hi = K.levels[p - 1], K.levels[p]
        m = [[1 if set(f) <= set(s) else 0 for s in hi] for f in lo]
        ranks.append(gf2_rank(m))
    ranks.append(0)
    return [n - ranks[p] - ranks[p + 1] for p, n in enumerate(K.counts)]


def has_cycle_warshall(nodes, edges):
    idx = {x: i for i, x in enumerate(nodes)}
    n = len(nodes)
    reach = np.zeros((n, n), dtype=bool)
    for a, b in edges:
        reach[idx[a], idx[b]] = True
    for k in range(n):
        reach |= reach[:, [k]] & reach[[k], :]
    return bool(reach.diagonal().any())


def is_gradient_path(K, gvf, cells):
    """Check an alternating sequence against the path definition directly."""
    if len(cells) < 4 or len(cells) % 2:
        return False
    src, target = cells[0], cells[-1]
    p = len(target) - 1
    if len(src) != p + 2 or src not in gvf.criticals or target not in gvf.criticals:
        return False
    prev_top, prev_tail = src, None
    for i in range(1, len(cells) - 1, 2):
        t, s = cells[i], cells[i + 1]
        if len(t) != p + 1 or len(s) != p + 2:
            return False
        if gvf.matching.get(t) != s or not set(t) < set(prev_top) or t == prev_tail:
            return False
        prev_top, prev_tail = s, t
    return set(target) < set(prev_top)


def brute_gradient_paths(K, gvf, sigma):
    """Every ordering of distinct matched pairs between sigma and a critical face."""
    p = len(sigma) - 2
    pairs = [(t, s) for t, s in gvf.matching.items() if len(t) == p + 1]
    ends = [c for c in gvf.criticals if len(c) == p + 1]
    found = set()
    for k in range(1, len(pairs) + 1):
        for chosen in permutations(pairs, k):
            middle = tuple(x for pair in chosen for x in pair)
            for end in ends:
                cells = (sigma,) + middle + (end,)
                if is_gradient_path(K, gvf, cells):
                    found.add(cells)
    return found
