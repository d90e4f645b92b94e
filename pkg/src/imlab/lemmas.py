"""Executable versions of the matching constructions behind the alpha/mu bounds.

* :func:`hall_saturating_matching` -- an independent set A and a maximum
  independent set X admit a matching from A - X into X - A saturating A - X.
* :func:`telescoping_matching` -- for maximum independent sets X_1..X_k with
  intersection X inside an independent A, chaining those matchings along the
  prefix intersections and adding a maximum matching of G[N[X]] yields a
  matching of G[N[A]] with at least |A| - |X| + mu(G[N[X]]) edges.
* :func:`regular_saturating_matching` -- in an r-regular graph (r > 0) every
  maximum independent set is saturated by a matching into its complement.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from collections.abc import Iterable, Sequence

from .errors import ContractError, DefectError
from .graph import Graph, Matching, VertexSet, canonical_matching, closed_neighborhood, induced_subgraph, vertex_set
from .independence import independence_number
from .matching import bipartite_matching, maximum_matching


def _require_independent(g: Graph, S: Iterable[int], name: str) -> None:
    if not g.is_independent(S):
        raise ContractError(f"{name} is not an independent set")


def _require_maximum(g: Graph, X: VertexSet, alpha: int, name: str) -> None:
    _require_independent(g, X, name)
    if len(X) != alpha:
        raise ContractError(f"{name} has size {len(X)} but alpha = {alpha}: not a maximum independent set")


def _saturate(g: Graph, left: Sequence[int], right: set[int], what: str) -> Matching:
    found = bipartite_matching(left, {u: [w for w in sorted(g.adj[u]) if w in right] for u in left})
    if len(found) != len(left):
        missing = [u for u in left if u not in found]
        raise DefectError(f"{what}: vertices {missing} left unsaturated although Hall's condition must hold")
    return canonical_matching(found.items())


def hall_saturating_matching(g: Graph, A: Iterable[int], X: Iterable[int], *, alpha: int | None = None) -> Matching:
    """Matching from A - X into X - A that saturates every vertex of A - X."""
    A, X = vertex_set(A), vertex_set(X)
    _require_independent(g, A, "A")
    _require_maximum(g, X, independence_number(g) if alpha is None else alpha, "X")
    xs = set(X)
    left = [v for v in A if v not in xs]
    return _saturate(g, left, xs - set(A), "hall_saturating_matching")


@dataclass(frozen=True)
class IntersectionChain:
    """Maximum independent sets X_1..X_k and an independent base A containing their intersection."""

    sets: tuple[VertexSet, ...]
    base: VertexSet

    def __init__(self, sets: Iterable[Iterable[int]], base: Iterable[int]):
        object.__setattr__(self, "sets", tuple(vertex_set(s) for s in sets))
        object.__setattr__(self, "base", vertex_set(base))
        if not self.sets:
            raise ContractError("an intersection chain needs at least one maximum independent set")

    @property
    def k(self) -> int:
        return len(self.sets)

    @property
    def intersection(self) -> VertexSet:
        inter = set(self.sets[0])
        for s in self.sets[1:]:
            inter &= set(s)
        return vertex_set(inter)

    def prefixes(self) -> list[VertexSet]:
        """A_1 = A, A_{r+1} = A_r & X_r; returns A_1..A_{k+1} (A_{k+1} equals the intersection)."""
        out = [self.base]
        for s in self.sets:
            out.append(vertex_set(set(out[-1]) & set(s)))
        return out

    def validate(self, g: Graph, alpha: int | None = None) -> None:
        alpha = independence_number(g) if alpha is None else alpha
        for i, s in enumerate(self.sets, start=1):
            _require_maximum(g, s, alpha, f"X_{i}")
        _require_independent(g, self.base, "A")
        if not set(self.intersection) <= set(self.base):
            raise ContractError("the intersection of the chain is not contained in A")


@dataclass
class TelescopeStep:
    r: int
    prefix: VertexSet          # A_r
    saturated: VertexSet       # A_r - (A_r & X_r)
    target: VertexSet          # X_r - A_r
    matching: Matching         # M_r


@dataclass
class TelescopeTrace:
    chain: IntersectionChain
    steps: list[TelescopeStep]
    core_matching: Matching    # Q, a maximum matching of G[N[X]]
    matching: Matching         # M_1 + ... + M_k + Q
    closed_base: VertexSet     # N[A]
    orientation: str = "saturate A_r - X_r into X_r - A_r"
    notes: list[str] = field(default_factory=list)

    @property
    def size_bound(self) -> int:
        """|A| - |X| + mu(G[N[X]]), the guaranteed lower bound on |matching|."""
        return len(self.chain.base) - len(self.chain.intersection) + len(self.core_matching)

    def ledger(self) -> list[tuple[int, int, int]]:
        """Per step (|A_r|, |A_{r+1}|, |M_r|); the identity |M_r| = |A_r| - |A_{r+1}| telescopes."""
        pre = self.chain.prefixes()
        return [(len(pre[s.r - 1]), len(pre[s.r]), len(s.matching)) for s in self.steps]


def telescoping_trace(g: Graph, chain: IntersectionChain, *, alpha: int | None = None) -> TelescopeTrace:
    chain.validate(g, alpha)
    steps = []
    used = 0
    pieces: list[tuple[int, int]] = []
    prefixes = chain.prefixes()
    for r, (Ar, Xr) in enumerate(zip(prefixes, chain.sets), start=1):
        xs = set(Xr)
        left = [v for v in Ar if v not in xs]
        right = xs - set(Ar)
        Mr = _saturate(g, left, right, f"telescoping step {r}")
        for u, v in Mr:
            bits = (1 << u) | (1 << v)
            if used & bits:
                raise DefectError(f"step {r} reuses a vertex of ({u}, {v}) matched in an earlier step")
            used |= bits
        pieces.extend(Mr)
        steps.append(TelescopeStep(r, Ar, tuple(left), vertex_set(right), Mr))

    X = chain.intersection
    nx_closed = closed_neighborhood(g, X)
    sub, index = induced_subgraph(g, nx_closed)
    back = {new: old for old, new in index.items()}
    Q = canonical_matching((back[a], back[b]) for a, b in maximum_matching(sub))
    for u, v in Q:
        bits = (1 << u) | (1 << v)
        if used & bits:
            raise DefectError(f"Q edge ({u}, {v}) meets an edge of M_1..M_k")
        used |= bits
    full = canonical_matching(pieces + list(Q))

    closed_a = closed_neighborhood(g, chain.base)
    inside = set(closed_a)
    if not all(u in inside and v in inside for u, v in full) or not g.is_matching(full):
        raise DefectError("telescoping matching is not a matching of G[N[A]]")
    trace = TelescopeTrace(chain, steps, Q, full, closed_a)
    if len(full) < trace.size_bound:
        raise DefectError(f"telescoping matching has {len(full)} edges, below {trace.size_bound}")
    return trace


def telescoping_matching(g: Graph, chain: IntersectionChain, *, alpha: int | None = None) -> Matching:
    return telescoping_trace(g, chain, alpha=alpha).matching


def regular_saturating_matching(g: Graph, X: Iterable[int], *, alpha: int | None = None) -> Matching:
    """Matching saturating the maximum independent set X, for r-regular g with r > 0.

    Built in the bipartite graph between X and V - X (edges inside V - X
    dropped). Each vertex of X sends r edges out and each vertex of V - X
    receives at most r, so Hall's condition holds.
    """
    if g.n == 0 or not g.is_regular() or g.max_degree == 0:
        raise ContractError("regular_saturating_matching needs an r-regular graph with r > 0")
    X = vertex_set(X)
    _require_maximum(g, X, independence_number(g) if alpha is None else alpha, "X")
    rest = set(range(g.n)) - set(X)
    return _saturate(g, list(X), rest, "regular_saturating_matching")
