"""Graph families used by the tests, the scans and the ``family`` subcommand."""

from __future__ import annotations

import random
from collections.abc import Iterator
from itertools import combinations
from typing import NamedTuple

from .errors import GraphError
from .graph import Graph, from_edge_list

RANDOM_REGULAR_ATTEMPTS = 10_000


def empty(n: int) -> Graph:
    return from_edge_list(n, [])


def complete(n: int) -> Graph:
    return from_edge_list(n, combinations(range(n), 2))


def complete_bipartite(a: int, b: int) -> Graph:
    """K_{a,b}: vertices ``0..a-1`` on one side, ``a..a+b-1`` on the other."""
    if a < 1 or b < 1:
        raise GraphError("complete_bipartite needs a, b >= 1")
    return from_edge_list(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def path(n: int) -> Graph:
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def star(leaves: int) -> Graph:
    """K_{1,leaves} with the center at vertex 0."""
    return complete_bipartite(1, leaves)


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return from_edge_list(10, outer + spokes + inner)


def random_regular(n: int, r: int, seed: int) -> Graph:
    """Uniform simple r-regular graph by the pairing model with rejection.

    Deterministic for a given seed. Raises ``GraphError`` when ``n*r`` is odd,
    ``r >= n``, or no simple pairing turns up within the retry budget.
    """
    if n < 0 or r < 0:
        raise GraphError("n and r must be non-negative")
    if (n * r) % 2:
        raise GraphError(f"no {r}-regular graph on {n} vertices: n*r is odd")
    if r >= n and not (r == 0 and n == 0):
        raise GraphError(f"r={r} must be smaller than n={n}")
    rng = random.Random(seed)
    points = [v for v in range(n) for _ in range(r)]
    for _ in range(RANDOM_REGULAR_ATTEMPTS):
        rng.shuffle(points)
        seen = set()
        ok = True
        for k in range(0, len(points), 2):
            u, v = points[k], points[k + 1]
            e = (min(u, v), max(u, v))
            if u == v or e in seen:
                ok = False
                break
            seen.add(e)
        if ok:
            return from_edge_list(n, seen)
    raise GraphError(f"pairing model found no simple {r}-regular graph on {n} vertices "
                     f"after {RANDOM_REGULAR_ATTEMPTS} attempts")


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    """Erdos-Renyi G(n, p) drawn from the supplied generator."""
    return from_edge_list(n, [e for e in combinations(range(n), 2) if rng.random() < p])


class GpqrLayout(NamedTuple):
    clique: tuple[int, ...]      # K_p
    pendants: tuple[int, ...]    # pendants[i] hangs off clique[i]
    hub: tuple[int, ...]         # K_q
    outer: tuple[int, ...]       # the independent set of order r


def gpqr_layout(p: int, q: int, r: int) -> GpqrLayout:
    base = 2 * p + q
    return GpqrLayout(
        tuple(range(p)),
        tuple(range(p, 2 * p)),
        tuple(range(2 * p, base)),
        tuple(range(base, base + r)),
    )


def family_gpqr(p: int, q: int, r: int) -> Graph:
    """The sharpness family G(p, q, r).

    A clique K_p with one pendant per clique vertex; every one of those 2p
    vertices is joined to every vertex of a clique K_q; and r further pairwise
    non-adjacent vertices are joined to every vertex of K_q. Vertex order is
    given by :func:`gpqr_layout`.
    """
    if min(p, q, r) < 0:
        raise GraphError("p, q, r must be non-negative")
    if p + r < 2:
        raise GraphError(f"G(p,q,r) needs p + r >= 2, got p={p}, r={r}")
    lay = gpqr_layout(p, q, r)
    edges = list(combinations(lay.clique, 2))
    edges += list(zip(lay.clique, lay.pendants))
    edges += list(combinations(lay.hub, 2))
    edges += [(u, h) for u in lay.clique + lay.pendants + lay.outer for h in lay.hub]
    return from_edge_list(2 * p + q + r, edges)


def prism_with_isolates() -> Graph:
    """Two triangles joined by a perfect matching, plus three vertices with no edges.

    Vertices 0-2 and 3-5 are the triangles (i matched to i+3); 6, 7, 8 are the
    three edgeless vertices exactly as they appear in the drawing.
    """
    edges = [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)]
    return from_edge_list(9, edges)


def labeled_graphs(n: int) -> Iterator[Graph]:
    """Every labeled simple graph on n vertices, in graph6 bit order (2^(n(n-1)/2) graphs)."""
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    k = len(pairs)
    for code in range(1 << k):
        yield from_edge_list(n, [pairs[t] for t in range(k) if code >> (k - 1 - t) & 1])


def _labeled_connected_cubic(n: int) -> Iterator[list[tuple[int, int]]]:
    # Fill vertices in index order. Untouched vertices are interchangeable, so
    # only the smallest one is ever offered, which keeps them a suffix.
    deg = [0] * n
    adj = [set() for _ in range(n)]
    edges: list[tuple[int, int]] = []

    def rec():
        v = next((u for u in range(n) if deg[u] < 3), None)
        if v is None:
            yield list(edges)
            return
        if v > 0 and deg[v] == 0:
            return  # earlier vertices form a closed component
        yield from pick(v, v)

    def pick(v, after):
        if deg[v] == 3:
            yield from rec()
            return
        fresh_taken = False
        for w in range(after + 1, n):
            if deg[w] >= 3 or w in adj[v]:
                continue
            if deg[w] == 0:
                if fresh_taken:
                    break
                fresh_taken = True
            deg[v] += 1
            deg[w] += 1
            adj[v].add(w)
            adj[w].add(v)
            edges.append((v, w))
            yield from pick(v, w)
            edges.pop()
            adj[v].discard(w)
            adj[w].discard(v)
            deg[v] -= 1
            deg[w] -= 1

    if n >= 4 and n % 2 == 0:
        yield from rec()


def _vertex_profile_key(g: Graph) -> tuple:
    # Isomorphism invariant: multiset over vertices of the BFS layer sizes plus
    # the number of edges inside each layer. WL hashing is useless on regular graphs.
    profiles = []
    for s in range(g.n):
        dist = {s: 0}
        layers = [[s]]
        while layers[-1]:
            nxt = []
            for v in layers[-1]:
                for w in g.adj[v]:
                    if w not in dist:
                        dist[w] = len(layers)
                        nxt.append(w)
            layers.append(nxt)
        inner = [sum(1 for v in layer for w in g.adj[v] if dist[w] == d) // 2
                 for d, layer in enumerate(layers)]
        profiles.append((tuple(len(layer) for layer in layers), tuple(inner)))
    return tuple(sorted(profiles))


def connected_cubic_graphs(n: int) -> list[Graph]:
    """All connected 3-regular graphs on n vertices, one per isomorphism class.

    Built by exhaustive orderly construction of labeled cubic graphs followed by
    isomorphism rejection. Practical up to n = 12. The output order is fixed
    (first-seen representative, ordered by graph6 string).
    """
    import networkx as nx

    from .graph6 import encode_graph6

    buckets: dict[tuple, list[nx.Graph]] = {}
    reps: list[Graph] = []
    for edges in _labeled_connected_cubic(n):
        h = nx.Graph(edges)
        key = _vertex_profile_key(from_edge_list(n, edges))
        bucket = buckets.setdefault(key, [])
        if any(nx.is_isomorphic(h, other) for other in bucket):
            continue
        bucket.append(h)
        reps.append(from_edge_list(n, edges))
    return sorted(reps, key=encode_graph6)
