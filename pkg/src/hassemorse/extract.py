"""Gradient vector field extraction on the decorated Hasse diagram."""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .complex_core import Simplex, SimplicialComplex
from .hasse import DecoratedHasse, Label, decorate, build_hasse


@dataclass
class Gvf:
    """A gradient vector field as heads, tails, criticals and the matching tail -> head."""

    heads: set[Simplex] = field(default_factory=set)
    tails: set[Simplex] = field(default_factory=set)
    criticals: set[Simplex] = field(default_factory=set)
    matching: dict[Simplex, Simplex] = field(default_factory=dict)

    def copy(self) -> Gvf:
        return Gvf(set(self.heads), set(self.tails), set(self.criticals), dict(self.matching))

    def pair(self, tail: Simplex, head: Simplex) -> None:
        self.tails.add(tail)
        self.heads.add(head)
        self.matching[tail] = head

    def label(self, s: Simplex) -> str:
        if s in self.heads:
            return "H"
        if s in self.tails:
            return "T"
        if s in self.criticals:
            return "C"
        raise KeyError(s)

    def head_to_tail(self) -> dict[Simplex, Simplex]:
        return {h: t for t, h in self.matching.items()}


@dataclass
class Counters:
    comparisons: int = 0
    lower_link_calls: int = 0
    nodes_visited: int = 0


def extract_right_child(
    K: SimplicialComplex,
    hasse: DecoratedHasse | None = None,
    counters: Counters | None = None,
    rng: random.Random | None = None,
) -> Gvf:
    """The gradient vector field on ``K`` consistent with its vertex values.

    Levels are swept from the top dimension down to 1.  An unassigned simplex
    that is a left-right parent is matched with its rightmost face; any other
    unassigned simplex is critical.  Vertices left over at the end are critical.
    Runs in O(dn) time, dominated by the decoration pass.
    """
    H = hasse if hasse is not None else build_hasse(K, rng)
    if not H.decorated:
        decorate(H)
    H.reset_labels()
    gvf = Gvf()
    visited = 0
    for i in range(len(H.levels) - 1, 0, -1):
        for node in H.levels[i]:
            visited += 1
            if node.label is not Label.UNASSIGNED:
                continue
            child = node.rchild
            if child.lparent is node:
                # every tail so far lives at level >= i
                assert child.label is Label.UNASSIGNED, node
                gvf.pair(child.simplex, node.simplex)
                node.label = Label.HEAD
                child.label = Label.TAIL
            else:
                gvf.criticals.add(node.simplex)
                node.label = Label.CRITICAL
    for node in H.level(0):
        visited += 1
        if node.label is Label.UNASSIGNED:
            gvf.criticals.add(node.simplex)
            node.label = Label.CRITICAL
    if counters is not None:
        counters.comparisons += H.comparisons
        counters.nodes_visited += visited
    return gvf
