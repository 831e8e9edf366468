"""Hasse diagram of a simplicial complex, decorated for gradient extraction.

Each node carries three extra fields: ``maxh`` (largest vertex value),
``rchild`` (lexicographically largest codimension-one face) and ``lparent``
(lexicographically smallest codimension-one coface).
"""

from __future__ import annotations

import enum
import random

from .complex_core import Simplex, SimplicialComplex


class Label(enum.Enum):
    UNASSIGNED = "unassigned"
    HEAD = "head"
    TAIL = "tail"
    CRITICAL = "critical"


class VertexHasNoChild(ValueError):
    pass


class HasseNode:
    __slots__ = ("simplex", "key", "up", "down", "maxh", "rchild", "lparent", "label")

    def __init__(self, simplex: Simplex, key: tuple[float, ...]):
        self.simplex = simplex
        self.key = key
        self.up: list[HasseNode] = []
        self.down: list[HasseNode] = []
        self.maxh: float | None = None
        self.rchild: HasseNode | None = None
        self.lparent: HasseNode | None = None
        self.label = Label.UNASSIGNED

    @property
    def dim(self) -> int:
        return len(self.simplex) - 1

    def __repr__(self) -> str:
        return f"HasseNode({list(self.simplex)})"


class DecoratedHasse:
    """Hasse diagram stored level by level as adjacency lists.

    ``comparisons`` counts lexicographic comparisons made by :func:`decorate`.
    """

    def __init__(self, complex_: SimplicialComplex, levels: list[list[HasseNode]]):
        self.complex = complex_
        self.levels = levels
        self.nodes: dict[Simplex, HasseNode] = {
            node.simplex: node for level in levels for node in level
        }
        self.comparisons = 0
        self.decorated = False

    def __len__(self) -> int:
        return len(self.nodes)

    def __getitem__(self, s: Simplex) -> HasseNode:
        return self.nodes[s]

    @property
    def edge_count(self) -> int:
        return sum(len(node.down) for node in self.nodes.values())

    def level(self, p: int) -> list[HasseNode]:
        return self.levels[p] if 0 <= p < len(self.levels) else []

    def reset_labels(self) -> None:
        for node in self.nodes.values():
            node.label = Label.UNASSIGNED


def build_hasse(K: SimplicialComplex, rng: random.Random | None = None) -> DecoratedHasse:
    """Undecorated Hasse diagram of ``K``.

    With ``rng`` the node order in each level and the order of every edge list
    are shuffled; nothing downstream may depend on these orders.
    """
    levels = [[HasseNode(s, K.key(s)) for s in level] for level in K.levels]
    nodes = {node.simplex: node for level in levels for node in level}
    for level in levels[1:]:
        for node in level:
            s = node.simplex
            for i in range(len(s)):
                face = nodes[s[:i] + s[i + 1:]]
                node.down.append(face)
                face.up.append(node)
    if rng is not None:
        for level in levels:
            rng.shuffle(level)
            for node in level:
                rng.shuffle(node.up)
                rng.shuffle(node.down)
    return DecoratedHasse(K, levels)


def decorate(H: DecoratedHasse) -> DecoratedHasse:
    """Fill in maxh, rchild and lparent for every node, in place.

    maxh of a p-simplex (p >= 1) is the larger maxh of two distinct faces.
    rchild and lparent are found by scanning down- and up-edges; every scan
    step costs one comparison, so the total is bounded by twice the edge count.
    """
    comparisons = 0
    for p, level in enumerate(H.levels):
        for node in level:
            if p == 0:
                node.maxh = H.complex.values[node.simplex[0]]
                node.rchild = None
                continue
            a, b = node.down[0].maxh, node.down[1].maxh
            node.maxh = a if a > b else b
            best = node.down[0]
            for face in node.down[1:]:
                comparisons += 1
                if face.key > best.key:
                    best = face
            node.rchild = best
    for level in H.levels:
        for node in level:
            if not node.up:
                node.lparent = None
                continue
            best = node.up[0]
            for coface in node.up[1:]:
                comparisons += 1
                if coface.key < best.key:
                    best = coface
            node.lparent = best
    H.comparisons = comparisons
    H.decorated = True
    return H


def decorated_hasse(K: SimplicialComplex, rng: random.Random | None = None) -> DecoratedHasse:
    return decorate(build_hasse(K, rng))


def is_left_right_parent(H: DecoratedHasse, node: HasseNode | Simplex) -> bool:
    """True when the leftmost coface of the rightmost face of ``node`` is ``node``."""
    if not isinstance(node, HasseNode):
        node = H[node]
    child = node.rchild
    if child is None:
        raise VertexHasNoChild(f"{list(node.simplex)} is a vertex")
    # node is a coface of its own rchild, so lparent cannot be missing
    assert child.lparent is not None
    return child.lparent is node
