"""Matchings: maximum (Edmonds blossom), bipartite saturating, minimum maximal, and a brute-force oracle."""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable, Mapping, Sequence

from .errors import BudgetExceeded
from .graph import Graph, Matching, canonical_matching, members

BRUTE_MATCHING_MAX_EDGES = 24
DEFAULT_NODE_BUDGET = 2_000_000


def maximum_matching(g: Graph) -> Matching:
    """Maximum-cardinality matching of a general graph.

    Edmonds' augmenting-path search with blossom contraction, O(n^3). Roots and
    neighbors are scanned in ascending order, so the result is deterministic.
    """
    n = g.n
    adj = [sorted(a) for a in g.adj]
    match = [-1] * n

    # Greedy start: only saves augmentations, any maximal matching works.
    for u, v in g.edges():
        if match[u] == -1 and match[v] == -1:
            match[u], match[v] = v, u

    def find_augmenting(root: int) -> tuple[int, list[int]]:
        used = [False] * n
        parent = [-1] * n
        base = list(range(n))

        def lca(a: int, b: int) -> int:
            seen = [False] * n
            while True:
                a = base[a]
                seen[a] = True
                if match[a] == -1:
                    break
                a = parent[match[a]]
            while True:
                b = base[b]
                if seen[b]:
                    return b
                b = parent[match[b]]

        def mark_path(v: int, b: int, child: int, blossom: list[bool]) -> None:
            while base[v] != b:
                blossom[base[v]] = blossom[base[match[v]]] = True
                parent[v] = child
                child = match[v]
                v = parent[match[v]]

        used[root] = True
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for to in adj[v]:
                if base[v] == base[to] or match[v] == to:
                    continue
                if to == root or (match[to] != -1 and parent[match[to]] != -1):
                    cur = lca(v, to)
                    blossom = [False] * n
                    mark_path(v, cur, to, blossom)
                    mark_path(to, cur, v, blossom)
                    for i in range(n):
                        if blossom[base[i]]:
                            base[i] = cur
                            if not used[i]:
                                used[i] = True
                                queue.append(i)
                elif parent[to] == -1:
                    parent[to] = v
                    if match[to] == -1:
                        return to, parent
                    used[match[to]] = True
                    queue.append(match[to])
        return -1, parent

    for root in range(n):
        if match[root] != -1 or not adj[root]:
            continue
        end, parent = find_augmenting(root)
        v = end
        while v != -1:
            pv = parent[v]
            ppv = match[pv]
            match[v] = pv
            match[pv] = v
            v = ppv
    return canonical_matching((v, match[v]) for v in range(n) if match[v] > v)


def matching_number(g: Graph) -> int:
    return len(maximum_matching(g))


def brute_matching_number(g: Graph, max_edges: int = BRUTE_MATCHING_MAX_EDGES) -> int:
    """Matching number by exhaustive search over edge subsets.

    Subsets that already share a vertex are pruned, so the walk visits every
    matching exactly once. Independent of :func:`maximum_matching`; used as its
    oracle. Refuses graphs with more than ``max_edges`` edges.
    """
    edges = g.edges()
    if len(edges) > max_edges:
        raise BudgetExceeded("brute_matching_number", max_edges, "edges")
    masks = [(1 << u) | (1 << v) for u, v in edges]
    best = 0

    def walk(i: int, used: int, size: int) -> None:
        nonlocal best
        if size > best:
            best = size
        for j in range(i, len(masks)):
            if not used & masks[j]:
                walk(j + 1, used | masks[j], size + 1)

    walk(0, 0, 0)
    return best


def bipartite_matching(left: Sequence[int], neighbors: Mapping[int, Iterable[int]]) -> dict[int, int]:
    """Maximum matching of a bipartite graph by repeated augmenting-path search.

    ``left`` lists the left vertices in the order they are tried, ``neighbors``
    maps each left vertex to its right neighbors (scanned ascending). Returns
    ``{left_vertex: right_vertex}`` for matched left vertices.
    """
    nbrs = {u: sorted(neighbors.get(u, ())) for u in left}
    owner: dict[int, int] = {}

    def augment(u: int, seen: set[int]) -> bool:
        for w in nbrs[u]:
            # a free neighbor first, so nothing already matched is rerouted needlessly
            if w not in owner:
                seen.add(w)
                owner[w] = u
                return True
        for w in nbrs[u]:
            if w in seen:
                continue
            seen.add(w)
            if w not in owner or augment(owner[w], seen):
                owner[w] = u
                return True
        return False

    for u in left:
        augment(u, set())
    return {u: w for w, u in owner.items()}


def is_maximal_matching(g: Graph, matching: Iterable[Sequence[int]]) -> bool:
    covered = 0
    for u, v in matching:
        covered |= (1 << u) | (1 << v)
    return all(covered >> u & 1 or covered >> v & 1 for u, v in g.edges())


def minimum_maximal_matching(g: Graph, budget: int = DEFAULT_NODE_BUDGET) -> Matching:
    """A maximal matching of minimum cardinality (exact).

    A maximal matching must cover the lowest edge whose endpoints are both still
    free, so some chosen edge touches one of its endpoints. Branching on those
    edges, with the answer memoized on the set of free vertices, gives the
    optimum; ties go to the lexicographically first branch.
    """
    adj = g.masks
    memo: dict[int, tuple[int, tuple[int, int] | None]] = {}
    nodes = 0

    def solve(free: int) -> int:
        nonlocal nodes
        hit = memo.get(free)
        if hit is not None:
            return hit[0]
        nodes += 1
        if nodes > budget:
            raise BudgetExceeded("mu_star", budget)
        target = None
        for u in members(free):
            rest = adj[u] & free
            if rest:
                target = (u, (rest & -rest).bit_length() - 1)
                break
        if target is None:
            memo[free] = (0, None)
            return 0
        a, b = target
        best, choice = None, None
        branches = sorted(
            {(min(a, w), max(a, w)) for w in members(adj[a] & free)}
            | {(min(b, w), max(b, w)) for w in members(adj[b] & free)}
        )
        for u, v in branches:
            val = 1 + solve(free & ~(1 << u) & ~(1 << v))
            if best is None or val < best:
                best, choice = val, (u, v)
        memo[free] = (best, choice)
        return best

    free = g.all_mask
    solve(free)
    out = []
    while True:
        _, choice = memo[free]
        if choice is None:
            break
        out.append(choice)
        free &= ~(1 << choice[0]) & ~(1 << choice[1])
    return canonical_matching(out)
