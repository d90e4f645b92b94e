"""Exact edge-chromatic class (class 1: chi' = Delta, class 2: chi' = Delta + 1)."""

from __future__ import annotations

import enum

from .errors import BudgetExceeded
from .graph import Edge, Graph

DEFAULT_NODE_BUDGET = 2_000_000


class EdgeClass(str, enum.Enum):
    CLASS1 = "Class1"
    CLASS2 = "Class2"

    def __str__(self) -> str:
        return self.value


def _edge_order(g: Graph) -> tuple[int, list[Edge]]:
    # Grow from a maximum-degree vertex so constrained edges are colored early.
    if g.m == 0:
        return -1, []
    start = max(range(g.n), key=lambda v: (g.degree(v), -v))
    order: list[Edge] = []
    seen_e: set[Edge] = set()
    seen_v = {start}
    queue = [start]
    for root in [start] + sorted(range(g.n), key=lambda v: (-g.degree(v), v)):
        if root not in seen_v:
            seen_v.add(root)
            queue.append(root)
        while queue:
            v = queue.pop(0)
            for w in sorted(g.adj[v], key=lambda x: (-g.degree(x), x)):
                e = (min(v, w), max(v, w))
                if e not in seen_e:
                    seen_e.add(e)
                    order.append(e)
                if w not in seen_v:
                    seen_v.add(w)
                    queue.append(w)
    return start, order


def edge_coloring(g: Graph, k: int, budget: int = DEFAULT_NODE_BUDGET) -> dict[Edge, int] | None:
    """A proper k-edge-coloring found by backtracking, or None when none exists."""
    first, order = _edge_order(g)
    if not order:
        return {}
    if k < g.max_degree:
        return None
    used = [0] * g.n
    colors: dict[Edge, int] = {}
    nodes = 0

    # Edges at the first vertex get distinct colors in every proper coloring;
    # fixing them as 0, 1, ... removes color-permutation symmetry.
    fixed = [e for e in order if first in e]
    for c, (u, v) in enumerate(fixed):
        colors[(u, v)] = c
        used[u] |= 1 << c
        used[v] |= 1 << c
    rest = [e for e in order if first not in e]

    def place(i: int, top: int) -> bool:
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise BudgetExceeded("edge_class", budget)
        if i == len(rest):
            return True
        u, v = rest[i]
        busy = used[u] | used[v]
        for c in range(min(k, top + 2)):
            if busy >> c & 1:
                continue
            used[u] |= 1 << c
            used[v] |= 1 << c
            colors[(u, v)] = c
            if place(i + 1, max(top, c)):
                return True
            used[u] &= ~(1 << c)
            used[v] &= ~(1 << c)
            del colors[(u, v)]
        return False

    if place(0, len(fixed) - 1):
        return colors
    return None


def edge_chromatic_class(g: Graph, budget: int = DEFAULT_NODE_BUDGET, shortcuts: bool = True) -> EdgeClass:
    """Class1 iff a proper Delta-edge-coloring exists.

    With ``shortcuts`` bipartite graphs are class 1 (Konig) and overfull
    graphs, m > Delta * floor(n/2), are class 2; everything else is decided by
    backtracking.
    """
    delta = g.max_degree
    if delta == 0:
        return EdgeClass.CLASS1
    if shortcuts:
        if g.is_bipartite():
            return EdgeClass.CLASS1
        if g.m > delta * (g.n // 2):
            return EdgeClass.CLASS2
    return EdgeClass.CLASS1 if edge_coloring(g, delta, budget) is not None else EdgeClass.CLASS2


def is_proper_edge_coloring(g: Graph, colors: dict[Edge, int]) -> bool:
    if set(colors) != set(g.edges()):
        return False
    seen = set()
    for (u, v), c in colors.items():
        if (u, c) in seen or (v, c) in seen:
            return False
        seen.add((u, c))
        seen.add((v, c))
    return True
