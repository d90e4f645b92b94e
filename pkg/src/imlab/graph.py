"""Immutable simple graphs on vertices ``0..n-1`` and the set algebra used by the bounds.

Vertex sets are exchanged as ascending tuples (``VertexSet``) and matchings as
ascending tuples of ``(u, v)`` pairs with ``u < v`` (``Matching``). Internally
most solvers work on integer bitmasks, so ``Graph`` keeps one neighbor mask per
vertex next to the frozenset adjacency.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence
from typing import TextIO

from .errors import GraphError

VertexSet = tuple[int, ...]
Edge = tuple[int, int]
Matching = tuple[Edge, ...]


def vertex_set(vertices: Iterable[int]) -> VertexSet:
    """Canonical (sorted, duplicate-free) form of a vertex collection."""
    return tuple(sorted(set(vertices)))


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def members(mask: int) -> VertexSet:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


def canonical_matching(edges: Iterable[Sequence[int]]) -> Matching:
    return tuple(sorted((min(u, v), max(u, v)) for u, v in edges))


class Graph:
    """Simple undirected graph with dense vertex labels.

    Instances are immutable and hashable; equality compares the vertex count and
    the edge set, so two graphs built from differently ordered edge lists are equal.
    """

    __slots__ = ("n", "adj", "masks", "m", "_edges", "_hash")

    def __init__(self, n: int, adj: Sequence[Iterable[int]]):
        if n < 0:
            raise GraphError("vertex count must be non-negative")
        if len(adj) != n:
            raise GraphError(f"adjacency has {len(adj)} rows for n={n}")
        frozen = tuple(frozenset(a) for a in adj)
        for v, nbrs in enumerate(frozen):
            if v in nbrs:
                raise GraphError(f"loop at vertex {v}: graphs have no loops")
            for u in nbrs:
                if not 0 <= u < n:
                    raise GraphError(f"neighbor {u} of {v} is outside 0..{n - 1}")
                if v not in frozen[u]:
                    raise GraphError(f"adjacency is not symmetric on ({v}, {u})")
        self.n = n
        self.adj = frozen
        self.masks = tuple(mask_of(a) for a in frozen)
        self.m = sum(len(a) for a in frozen) // 2
        self._edges: tuple[Edge, ...] | None = None
        self._hash: int | None = None

    def __setattr__(self, name, value):
        if name in ("_edges", "_hash") or not hasattr(self, name):
            object.__setattr__(self, name, value)
        else:
            raise AttributeError("Graph is immutable")

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, self.edges()))
        return self._hash

    def edges(self) -> tuple[Edge, ...]:
        """All edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        if self._edges is None:
            self._edges = tuple(
                (u, v) for u in range(self.n) for v in sorted(self.adj[u]) if u < v
            )
        return self._edges

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adj]

    @property
    def min_degree(self) -> int:
        return min(self.degrees(), default=0)

    @property
    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def is_regular(self, r: int | None = None) -> bool:
        degs = set(self.degrees())
        if len(degs) > 1:
            return False
        if r is None:
            return True
        return degs == {r} or (self.n == 0 and r == 0)

    @property
    def all_mask(self) -> int:
        return (1 << self.n) - 1

    def is_independent(self, vertices: Iterable[int]) -> bool:
        mask = mask_of(vertices)
        return all(not (self.masks[v] & mask) for v in members(mask))

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        seen = 1
        frontier = 1
        while frontier:
            nxt = 0
            for v in members(frontier):
                nxt |= self.masks[v]
            frontier = nxt & ~seen
            seen |= nxt
        return seen == self.all_mask

    def has_cycle(self) -> bool:
        parent = list(range(self.n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for u, v in self.edges():
            ru, rv = find(u), find(v)
            if ru == rv:
                return True
            parent[ru] = rv
        return False

    def is_bipartite(self) -> bool:
        side = [-1] * self.n
        for s in range(self.n):
            if side[s] != -1:
                continue
            side[s] = 0
            stack = [s]
            while stack:
                v = stack.pop()
                for w in self.adj[v]:
                    if side[w] == -1:
                        side[w] = 1 - side[v]
                        stack.append(w)
                    elif side[w] == side[v]:
                        return False
        return True

    def is_matching(self, edges: Iterable[Sequence[int]]) -> bool:
        """True when ``edges`` are edges of this graph and pairwise vertex-disjoint."""
        used = 0
        for u, v in edges:
            if u == v or not (0 <= u < self.n and 0 <= v < self.n) or not self.has_edge(u, v):
                return False
            bits = (1 << u) | (1 << v)
            if used & bits:
                return False
            used |= bits
        return True


def from_edge_list(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    """Build a graph; duplicate edges collapse, loops and out-of-range endpoints are rejected."""
    if n < 0:
        raise GraphError("vertex count must be non-negative")
    adj: list[set[int]] = [set() for _ in range(n)]
    for e in edges:
        u, v = e
        if u == v:
            raise GraphError(f"loop edge ({u}, {v}) rejected: graphs have no loops")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        adj[u].add(v)
        adj[v].add(u)
    return Graph(n, adj)


def from_masks(n: int, masks: Sequence[int]) -> Graph:
    return Graph(n, [members(mk) for mk in masks])


def open_neighborhood(g: Graph, S: Iterable[int]) -> VertexSet:
    out = 0
    for v in S:
        out |= g.masks[v]
    return members(out)


def closed_neighborhood(g: Graph, S: Iterable[int]) -> VertexSet:
    """``S`` together with every neighbor of a vertex of ``S``."""
    out = 0
    for v in S:
        out |= g.masks[v] | (1 << v)
    return members(out)


def closed_neighborhood_mask(g: Graph, mask: int) -> int:
    out = mask
    for v in members(mask):
        out |= g.masks[v]
    return out


def induced_subgraph(g: Graph, S: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Subgraph induced by ``S`` relabelled ``0..|S|-1`` in ascending order, plus the old->new map."""
    keep = vertex_set(S)
    index = {v: i for i, v in enumerate(keep)}
    adj = [[index[w] for w in g.adj[v] if w in index] for v in keep]
    return Graph(len(keep), adj), index


def max_degree_subgraph(g: Graph) -> Graph:
    """Subgraph induced by the vertices of maximum degree."""
    top = g.max_degree
    sub, _ = induced_subgraph(g, [v for v in range(g.n) if g.degree(v) == top])
    return sub


def remove_edge(g: Graph, u: int, v: int) -> Graph:
    adj = [set(a) for a in g.adj]
    adj[u].discard(v)
    adj[v].discard(u)
    return Graph(g.n, adj)


def complement(g: Graph) -> Graph:
    full = g.all_mask
    return from_masks(g.n, [full & ~g.masks[v] & ~(1 << v) for v in range(g.n)])


# -- plain edge-list text: first line "n m", then m lines "u v" --------------


def write_edge_list(g: Graph, fh: TextIO) -> None:
    fh.write(f"{g.n} {g.m}\n")
    for u, v in g.edges():
        fh.write(f"{u} {v}\n")


def format_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"] + [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def read_edge_lists(lines: Iterable[str]) -> Iterator[Graph]:
    """Parse one or more concatenated edge-list blocks; blank lines and ``#`` comments are skipped."""
    it = iter(enumerate(lines, start=1))
    for lineno, line in it:
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            n, m = (int(t) for t in line.split())
        except ValueError:
            raise GraphError(f"line {lineno}: expected header 'n m', got {line!r}") from None
        edges = []
        while len(edges) < m:
            try:
                lineno, body = next(it)
            except StopIteration:
                raise GraphError(f"line {lineno}: edge list ended after {len(edges)} of {m} edges") from None
            body = body.split("#", 1)[0].strip()
            if not body:
                continue
            try:
                u, v = (int(t) for t in body.split())
            except ValueError:
                raise GraphError(f"line {lineno}: expected 'u v', got {body!r}") from None
            edges.append((u, v))
        yield from_edge_list(n, edges)
