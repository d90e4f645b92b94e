"""Exact independent-set solvers on vertex bitmasks.

Every search takes a node budget and raises ``BudgetExceeded`` instead of
returning a partial answer.
"""

from __future__ import annotations

from collections.abc import Iterator
from itertools import combinations

from .errors import BudgetExceeded
from .graph import Graph, VertexSet, members

DEFAULT_NODE_BUDGET = 2_000_000
DEFAULT_SET_BUDGET = 200_000
BRUTE_MAX_N = 20


def _popcount(x: int) -> int:
    return bin(x).count("1")


class _AlphaSolver:
    """Memoized branch-and-reduce for alpha(G[cand])."""

    def __init__(self, g: Graph, budget: int, field: str = "alpha"):
        self.masks = g.masks
        self.budget = budget
        self.field = field
        self.nodes = 0
        self.memo: dict[int, int] = {0: 0}

    def alpha(self, cand: int) -> int:
        hit = self.memo.get(cand)
        if hit is not None:
            return hit
        self.nodes += 1
        if self.nodes > self.budget:
            raise BudgetExceeded(self.field, self.budget)
        masks = self.masks
        low_v, low_d, high_v, high_d = -1, 1 << 30, -1, -1
        for v in members(cand):
            d = _popcount(masks[v] & cand)
            if d < low_d:
                low_v, low_d = v, d
            if d > high_d:
                high_v, high_d = v, d
        if low_d <= 1:
            # some maximum independent set contains a vertex of degree <= 1
            res = 1 + self.alpha(cand & ~masks[low_v] & ~(1 << low_v))
        else:
            without = self.alpha(cand & ~(1 << high_v))
            with_v = 1 + self.alpha(cand & ~masks[high_v] & ~(1 << high_v))
            res = max(without, with_v)
        self.memo[cand] = res
        return res


def independence_number(g: Graph, budget: int = DEFAULT_NODE_BUDGET) -> int:
    return _AlphaSolver(g, budget).alpha(g.all_mask)


def maximum_independent_set(g: Graph, budget: int = DEFAULT_NODE_BUDGET) -> VertexSet:
    """The lexicographically smallest maximum independent set."""
    solver = _AlphaSolver(g, budget)
    need = solver.alpha(g.all_mask)
    cand = g.all_mask
    chosen = []
    for v in range(g.n):
        if need == 0:
            break
        if not cand >> v & 1:
            continue
        above = cand & ~((1 << (v + 1)) - 1)
        if 1 + solver.alpha(above & ~g.masks[v]) >= need:
            chosen.append(v)
            need -= 1
            cand = above & ~g.masks[v]
        else:
            cand = above
    return tuple(chosen)


def iter_maximum_independent_sets(g: Graph, budget: int = DEFAULT_NODE_BUDGET) -> Iterator[VertexSet]:
    """Yield every maximum independent set in lexicographic order."""
    solver = _AlphaSolver(g, budget, "maximum_independent_sets")
    target = solver.alpha(g.all_mask)
    masks = g.masks

    def walk(v: int, cand: int, chosen: list[int]) -> Iterator[VertexSet]:
        need = target - len(chosen)
        if need == 0:
            yield tuple(chosen)
            return
        while v < g.n and not cand >> v & 1:
            v += 1
        if v >= g.n:
            return
        above = cand & ~((1 << (v + 1)) - 1)
        inc = above & ~masks[v]
        if 1 + solver.alpha(inc) >= need:
            chosen.append(v)
            yield from walk(v + 1, inc, chosen)
            chosen.pop()
        if solver.alpha(above) >= need:
            yield from walk(v + 1, above, chosen)

    yield from walk(0, g.all_mask, [])


def all_maximum_independent_sets(
    g: Graph, budget: int = DEFAULT_NODE_BUDGET, max_sets: int = DEFAULT_SET_BUDGET
) -> list[VertexSet]:
    """All maximum independent sets, sorted lexicographically; budget errors instead of truncation."""
    out = []
    for s in iter_maximum_independent_sets(g, budget):
        out.append(s)
        if len(out) > max_sets:
            raise BudgetExceeded("maximum_independent_sets", max_sets, "sets")
    return out


def core(g: Graph, budget: int = DEFAULT_NODE_BUDGET, max_sets: int = DEFAULT_SET_BUDGET) -> VertexSet:
    """Intersection of all maximum independent sets."""
    inter = g.all_mask
    count = 0
    for s in iter_maximum_independent_sets(g, budget):
        m = 0
        for v in s:
            m |= 1 << v
        inter &= m
        count += 1
        if count > max_sets:
            raise BudgetExceeded("core", max_sets, "sets")
    return members(inter)


def all_maximal_independent_sets(
    g: Graph, budget: int = DEFAULT_NODE_BUDGET, max_sets: int = DEFAULT_SET_BUDGET
) -> list[VertexSet]:
    """Inclusion-maximal independent sets, sorted lexicographically.

    Bron-Kerbosch with pivoting run on the complement: candidates are the
    vertices non-adjacent to everything chosen so far.
    """
    full = g.all_mask
    non_adj = [full & ~g.masks[v] & ~(1 << v) for v in range(g.n)]
    out: list[VertexSet] = []
    nodes = 0

    def expand(chosen: int, cand: int, excl: int) -> None:
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise BudgetExceeded("maximal_independent_sets", budget)
        if not cand and not excl:
            out.append(members(chosen))
            if len(out) > max_sets:
                raise BudgetExceeded("maximal_independent_sets", max_sets, "sets")
            return
        pivot = max(members(cand | excl), key=lambda u: _popcount(cand & non_adj[u]))
        for v in members(cand & ~non_adj[pivot]):
            expand(chosen | (1 << v), cand & non_adj[v], excl & non_adj[v])
            cand &= ~(1 << v)
            excl |= 1 << v

    expand(0, full, 0)
    return sorted(out)


def independent_domination_number(g: Graph, budget: int = DEFAULT_NODE_BUDGET) -> int:
    """i(G): the minimum size of a maximal independent set.

    A set is maximal independent iff it is independent and dominating. Some
    member must dominate the undominated vertex with the fewest eligible
    dominators, so we branch there; eligible vertices are exactly the
    undominated ones, which makes the undominated set a complete memo key.
    """
    closed = [g.masks[v] | (1 << v) for v in range(g.n)]
    memo: dict[int, int] = {0: 0}
    nodes = 0

    def solve(undom: int) -> int:
        nonlocal nodes
        hit = memo.get(undom)
        if hit is not None:
            return hit
        nodes += 1
        if nodes > budget:
            raise BudgetExceeded("idom", budget)
        pick = min(members(undom), key=lambda u: _popcount(closed[u] & undom))
        best = min(1 + solve(undom & ~closed[w]) for w in members(closed[pick] & undom))
        memo[undom] = best
        return best

    return solve(g.all_mask)


def is_well_covered(g: Graph, budget: int = DEFAULT_NODE_BUDGET) -> bool:
    """True when every maximal independent set is maximum."""
    return independent_domination_number(g, budget) == independence_number(g, budget)


# -- brute-force oracles (exhaustive over vertex subsets) --------------------


def brute_independence_number(g: Graph) -> int:
    if g.n > BRUTE_MAX_N:
        raise BudgetExceeded("brute_alpha", BRUTE_MAX_N, "vertices")
    masks = g.masks
    best = 0
    for s in range(1 << g.n):
        k = _popcount(s)
        if k <= best:
            continue
        if all(not masks[v] & s for v in members(s)):
            best = k
    return best


def brute_independent_sets(g: Graph) -> list[VertexSet]:
    """Every independent set (including the empty set) by subset enumeration."""
    if g.n > BRUTE_MAX_N:
        raise BudgetExceeded("brute_independent_sets", BRUTE_MAX_N, "vertices")
    out = []
    for k in range(g.n + 1):
        for s in combinations(range(g.n), k):
            if g.is_independent(s):
                out.append(s)
    return out
