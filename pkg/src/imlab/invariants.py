"""Per-graph invariant cache and the flat ``InvariantRecord``.

``GraphInvariants`` computes each invariant on first use, so a check that only
needs alpha and mu never pays for the edge-coloring search.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import asdict, dataclass, fields
from functools import cached_property

from . import coloring, independence, matching
from .coloring import EdgeClass
from .errors import BudgetExceeded, DefectError
from .graph import Graph, Matching, VertexSet, closed_neighborhood_mask, induced_subgraph, mask_of, members


@dataclass(frozen=True)
class Limits:
    """Solver budgets: search nodes per solver call, and sets per enumeration."""

    nodes: int = 2_000_000
    sets: int = 200_000

    def __post_init__(self):
        if self.nodes <= 0 or self.sets <= 0:
            raise ValueError("budgets must be positive")


def annihilation_number(g: Graph) -> int:
    """Largest k such that the k smallest degrees sum to at most m."""
    total = 0
    k = 0
    for d in sorted(g.degrees()):
        if total + d > g.m:
            break
        total += d
        k += 1
    return k


def is_konig_egervary(g: Graph) -> bool:
    return independence.independence_number(g) + matching.matching_number(g) == g.n


class GraphInvariants:
    def __init__(self, g: Graph, limits: Limits | None = None):
        self.g = g
        self.limits = limits or Limits()
        self._mu_closed: dict[int, int] = {}

    @cached_property
    def alpha(self) -> int:
        return independence.independence_number(self.g, self.limits.nodes)

    @cached_property
    def max_matching(self) -> Matching:
        return matching.maximum_matching(self.g)

    @cached_property
    def mu(self) -> int:
        return len(self.max_matching)

    @cached_property
    def min_maximal_matching(self) -> Matching:
        return matching.minimum_maximal_matching(self.g, self.limits.nodes)

    @cached_property
    def mu_star(self) -> int:
        return len(self.min_maximal_matching)

    @cached_property
    def idom(self) -> int:
        return independence.independent_domination_number(self.g, self.limits.nodes)

    @cached_property
    def maximum_independent_sets(self) -> list[VertexSet]:
        return independence.all_maximum_independent_sets(self.g, self.limits.nodes, self.limits.sets)

    @cached_property
    def mis_masks(self) -> list[int]:
        return [mask_of(s) for s in self.maximum_independent_sets]

    @cached_property
    def core(self) -> VertexSet:
        inter = self.g.all_mask
        for m in self.mis_masks:
            inter &= m
        return members(inter)

    @cached_property
    def annihilation(self) -> int:
        return annihilation_number(self.g)

    @cached_property
    def edge_class(self) -> EdgeClass:
        return coloring.edge_chromatic_class(self.g, self.limits.nodes)

    @cached_property
    def well_covered(self) -> bool:
        return self.idom == self.alpha

    @property
    def n(self) -> int:
        return self.g.n

    @property
    def m(self) -> int:
        return self.g.m

    @cached_property
    def delta(self) -> int:
        return self.g.min_degree

    @cached_property
    def big_delta(self) -> int:
        return self.g.max_degree

    @property
    def konig_egervary(self) -> bool:
        return self.alpha + self.mu == self.n

    @property
    def regular_degree(self) -> int | None:
        """r when the graph is r-regular, else None."""
        return self.delta if self.g.n and self.delta == self.big_delta else None

    def mu_closed(self, X) -> int:
        """Matching number of the subgraph induced by the closed neighborhood of X."""
        mask = X if isinstance(X, int) else mask_of(X)
        hit = self._mu_closed.get(mask)
        if hit is None:
            sub, _ = induced_subgraph(self.g, members(closed_neighborhood_mask(self.g, mask)))
            hit = self._mu_closed[mask] = matching.matching_number(sub)
        return hit


RECORD_FIELDS = (
    "n", "m", "alpha", "mu", "mu_star", "idom", "annihilation", "delta", "big_delta",
    "core_size", "edge_class", "well_covered", "konig_egervary", "max_ind_set_count",
)


@dataclass(frozen=True)
class InvariantRecord:
    """All exact invariants of one graph. Field order is the JSON/CSV column order."""

    n: int
    m: int
    alpha: int
    mu: int
    mu_star: int
    idom: int
    annihilation: int
    delta: int
    big_delta: int
    core_size: int
    edge_class: str
    well_covered: bool
    konig_egervary: bool
    max_ind_set_count: int

    def check_consistency(self) -> None:
        failures = []
        if not self.mu_star <= self.mu:
            failures.append("mu_star <= mu")
        if not (self.n - 2 * self.mu <= self.n - 2 * self.mu_star <= self.alpha <= self.n - self.mu):
            failures.append("n-2mu <= n-2mu* <= alpha <= n-mu")
        if not self.idom <= self.alpha <= self.annihilation:
            failures.append("idom <= alpha <= annihilation")
        if not self.core_size <= self.alpha:
            failures.append("core_size <= alpha")
        if self.well_covered != (self.idom == self.alpha):
            failures.append("well_covered iff idom == alpha")
        if failures:
            raise DefectError(f"inconsistent invariant record {self}: " + "; ".join(failures))

    def to_dict(self) -> dict:
        return asdict(self)

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    def csv_row(self) -> list:
        return [getattr(self, f) for f in RECORD_FIELDS]

    @staticmethod
    def csv_header() -> list[str]:
        return list(RECORD_FIELDS)

    def to_csv(self, header: bool = True) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        if header:
            w.writerow(self.csv_header())
        w.writerow(self.csv_row())
        return buf.getvalue()


assert tuple(f.name for f in fields(InvariantRecord)) == RECORD_FIELDS


def compute_record(g: Graph | GraphInvariants, limits: Limits | None = None) -> InvariantRecord:
    inv = g if isinstance(g, GraphInvariants) else GraphInvariants(g, limits)
    values = {}
    for name in RECORD_FIELDS:
        attr = {"core_size": "core", "max_ind_set_count": "maximum_independent_sets"}.get(name, name)
        try:
            value = getattr(inv, attr)
        except BudgetExceeded as exc:
            raise BudgetExceeded(name, exc.limit) from exc
        if name in ("core_size", "max_ind_set_count"):
            value = len(value)
        elif name == "edge_class":
            value = str(value)
        values[name] = value
    rec = InvariantRecord(**values)
    rec.check_consistency()
    return rec
