"""Exact evaluation of the alpha/mu upper bounds and their side inequalities.

All comparisons are done in integers or ``fractions.Fraction``; a slack is
always ``bound - value`` and must be non-negative for a proven inequality.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from itertools import combinations

from .errors import BudgetExceeded, ContractError, DefectError, NotApplicable
from .graph import Graph, VertexSet, mask_of, members, open_neighborhood, vertex_set
from .graph6 import encode_graph6
from .invariants import GraphInvariants, InvariantRecord, Limits, compute_record
from .generators import family_gpqr, prism_with_isolates, gpqr_layout


def as_invariants(g: Graph | GraphInvariants, limits: Limits | None = None) -> GraphInvariants:
    return g if isinstance(g, GraphInvariants) else GraphInvariants(g, limits)


def fmt_fraction(x: Fraction | int) -> str:
    """Exact text form: integers plain, everything else as p/q."""
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


# -- intersections of maximum independent sets -------------------------------


def is_mis_intersection(inv: GraphInvariants, X) -> bool:
    """True when X is the intersection of one or more maximum independent sets.

    That happens exactly when X equals the intersection of all maximum
    independent sets that contain it (and at least one does).
    """
    x = X if isinstance(X, int) else mask_of(X)
    inter = None
    for s in inv.mis_masks:
        if s & x == x:
            inter = s if inter is None else inter & s
    return inter == x


def pairwise_intersections(inv: GraphInvariants) -> dict[int, tuple[int, int]]:
    """Distinct masks A & B over unordered pairs of distinct maximum independent sets.

    Maps each mask to the first pair (by index in lexicographic order) producing it.
    """
    out: dict[int, tuple[int, int]] = {}
    for (i, a), (j, b) in combinations(enumerate(inv.mis_masks), 2):
        out.setdefault(a & b, (i, j))
    return out


def intersection_closure(inv: GraphInvariants, max_sets: int | None = None) -> list[int]:
    """Every distinct intersection of a non-empty family of maximum independent sets (as masks)."""
    limit = max_sets or inv.limits.sets
    seen = set(inv.mis_masks)
    frontier = set(seen)
    while frontier:
        new = set()
        for x in frontier:
            for s in inv.mis_masks:
                y = x & s
                if y not in seen:
                    new.add(y)
        seen |= new
        if len(seen) > limit:
            raise BudgetExceeded("intersection_closure", limit, "sets")
        frontier = new
    return sorted(seen, key=lambda m: members(m))


# -- the bound mu + |X| - mu(G[N[X]]) ----------------------------------------


def theorem1_term(inv: GraphInvariants, X) -> int:
    """|X| - mu(G[N[X]]), which may be negative."""
    x = X if isinstance(X, int) else mask_of(X)
    return bin(x).count("1") - inv.mu_closed(x)


def theorem1_bound(g: Graph | GraphInvariants, X, *, check: bool = True) -> int:
    """mu(G) + |X| - mu(G[N[X]]) for an intersection X of maximum independent sets."""
    inv = as_invariants(g)
    if check and not is_mis_intersection(inv, X):
        raise ContractError(f"{vertex_set(X) if not isinstance(X, int) else members(X)} "
                            "is not an intersection of maximum independent sets")
    return inv.mu + theorem1_term(inv, X)


def core_bound(g: Graph | GraphInvariants) -> int:
    inv = as_invariants(g)
    return theorem1_bound(inv, inv.core, check=False)


def best_pair_bound(g: Graph | GraphInvariants) -> int:
    """mu + min over pairs of distinct maximum independent sets A, B of |A & B| - mu(G[N[A & B]])."""
    inv = as_invariants(g)
    pairs = pairwise_intersections(inv)
    if not pairs:
        raise NotApplicable("the maximum independent set is unique")
    return inv.mu + min(theorem1_term(inv, x) for x in pairs)


def remark1_holds(g: Graph | GraphInvariants, family) -> bool:
    """For a family of >= 3 maximum independent sets, some pair bounds at least as well as the whole family."""
    inv = as_invariants(g)
    masks = [mask_of(s) for s in family]
    if len(masks) < 3:
        raise ContractError("pair-versus-family comparison needs at least three sets")
    whole = masks[0]
    for m in masks[1:]:
        whole &= m
    best_pair = min(theorem1_term(inv, a & b) for a, b in combinations(masks, 2))
    return best_pair <= theorem1_term(inv, whole)


# -- degree bounds -----------------------------------------------------------


def theorem2_check(g: Graph | GraphInvariants) -> tuple[int, int, int]:
    """(delta * alpha, Delta * mu, slack)."""
    inv = as_invariants(g)
    lhs = inv.delta * inv.alpha
    rhs = inv.big_delta * inv.mu
    return lhs, rhs, rhs - lhs


def ratio_bound(g: Graph | GraphInvariants) -> Fraction:
    """Delta * mu / delta as an exact rational; undefined when delta = 0."""
    inv = as_invariants(g)
    if inv.delta == 0:
        raise NotApplicable("ratio bound needs minimum degree >= 1")
    return Fraction(inv.big_delta * inv.mu, inv.delta)


def chain1_values(g: Graph | GraphInvariants) -> tuple[int, int, int, int]:
    """(n - 2 mu, n - 2 mu*, alpha, n - mu)."""
    inv = as_invariants(g)
    return inv.n - 2 * inv.mu, inv.n - 2 * inv.mu_star, inv.alpha, inv.n - inv.mu


def regular_chain(g: Graph | GraphInvariants) -> tuple[int, int, Fraction, int, Fraction]:
    """(alpha, mu, n/2, a, n - m/Delta) for an r-regular graph with r > 0."""
    inv = as_invariants(g)
    if not inv.regular_degree:
        raise NotApplicable("regular chain needs an r-regular graph with r > 0")
    return (inv.alpha, inv.mu, Fraction(inv.n, 2), inv.annihilation,
            Fraction(inv.n) - Fraction(inv.m, inv.big_delta))


def eq3_applicable(g: Graph | GraphInvariants) -> bool:
    """Regular with r > 0, or isolate-free and well-covered, or empty core."""
    inv = as_invariants(g)
    if inv.regular_degree:
        return True
    if inv.delta >= 1 and inv.well_covered:
        return True
    return not inv.core


def eq3_check(g: Graph | GraphInvariants) -> tuple[int, int, bool]:
    """(n - 2 mu*, mu, applicable)."""
    inv = as_invariants(g)
    return inv.n - 2 * inv.mu_star, inv.mu, eq3_applicable(inv)


def annihilation_chain(g: Graph | GraphInvariants) -> tuple[int, int, Fraction | None]:
    """(alpha, a, n - m/Delta or None when Delta = 0)."""
    inv = as_invariants(g)
    top = Fraction(inv.n) - Fraction(inv.m, inv.big_delta) if inv.big_delta else None
    return inv.alpha, inv.annihilation, top


def boros_bound(g: Graph | GraphInvariants) -> int:
    """mu + |core| - 1 (prior-work comparison column, stated for alpha > mu)."""
    inv = as_invariants(g)
    return inv.mu + len(inv.core) - 1


def levit_bound(g: Graph | GraphInvariants) -> int:
    """mu + |core| - |N(core)| (prior-work comparison column)."""
    inv = as_invariants(g)
    return inv.mu + len(inv.core) - len(open_neighborhood(inv.g, inv.core))


# -- report ------------------------------------------------------------------


@dataclass
class BoundReport:
    graph_id: str
    record: InvariantRecord
    thm1_core: tuple[int, int]                 # (bound, slack)
    thm1_best_pair: tuple[int, int] | None     # None when the maximum independent set is unique
    thm1_pairs_checked: int
    thm2: tuple[int, int, int]                 # (delta*alpha, Delta*mu, slack)
    chain1: tuple[int, int, int, int]
    ratio2: Fraction | None
    eq3: tuple[int, int, bool]
    regular: tuple | None
    annihilation: tuple[int, int, Fraction | None]
    boros: int
    levit: int
    problem1: bool
    problem2: bool
    defects: list[str] = field(default_factory=list)

    @property
    def thm1_core_equal(self) -> bool:
        return self.thm1_core[1] == 0

    def to_dict(self) -> dict:
        def q(x):
            return None if x is None else fmt_fraction(x)

        return {
            "graph": self.graph_id,
            "record": self.record.to_dict(),
            "thm1_core": {"bound": self.thm1_core[0], "slack": self.thm1_core[1],
                          "equality": self.thm1_core[1] == 0},
            "thm1_best_pair": None if self.thm1_best_pair is None else
            {"bound": self.thm1_best_pair[0], "slack": self.thm1_best_pair[1],
             "pairs_checked": self.thm1_pairs_checked},
            "thm2": {"lhs": self.thm2[0], "rhs": self.thm2[1], "slack": self.thm2[2]},
            "chain1": list(self.chain1),
            "ratio2": q(self.ratio2),
            "eq3": {"lhs": self.eq3[0], "rhs": self.eq3[1], "applicable": self.eq3[2]},
            "regular_chain": None if self.regular is None else [q(v) for v in self.regular],
            "annihilation_chain": [self.annihilation[0], self.annihilation[1], q(self.annihilation[2])],
            "comparison": {"boros": self.boros, "levit": self.levit},
            "problem1_equality": self.problem1,
            "problem2_equality": self.problem2,
            "defects": list(self.defects),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=False)

    def flat(self) -> dict:
        d = {"graph": self.graph_id}
        d.update(asdict(self.record))
        d.update({
            "thm1_core_bound": self.thm1_core[0], "thm1_core_slack": self.thm1_core[1],
            "thm1_pair_bound": "" if self.thm1_best_pair is None else self.thm1_best_pair[0],
            "thm1_pair_slack": "" if self.thm1_best_pair is None else self.thm1_best_pair[1],
            "thm2_lhs": self.thm2[0], "thm2_rhs": self.thm2[1], "thm2_slack": self.thm2[2],
            "chain1": " ".join(map(str, self.chain1)),
            "ratio2": "" if self.ratio2 is None else fmt_fraction(self.ratio2),
            "eq3_lhs": self.eq3[0], "eq3_rhs": self.eq3[1], "eq3_applicable": self.eq3[2],
            "boros": self.boros, "levit": self.levit,
            "problem1": self.problem1, "problem2": self.problem2,
            "defects": ";".join(self.defects),
        })
        return d

    def to_csv(self, header: bool = True) -> str:
        row = self.flat()
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        if header:
            w.writerow(list(row))
        w.writerow(list(row.values()))
        return buf.getvalue()


def evaluate_all(g: Graph | GraphInvariants, graph_id: str | None = None, *,
                 limits: Limits | None = None, raise_on_defect: bool = True) -> BoundReport:
    """Evaluate every bound on one graph. A negative slack on a proven inequality is a defect."""
    inv = as_invariants(g, limits)
    gid = graph_id if graph_id is not None else encode_graph6(inv.g)
    record = compute_record(inv)
    defects = []

    core_b = core_bound(inv)
    thm1_core = (core_b, core_b - inv.alpha)
    if thm1_core[1] < 0:
        defects.append("thm1_core")
    pairs = pairwise_intersections(inv)
    best = None
    for x in pairs:
        b = inv.mu + theorem1_term(inv, x)
        if b < inv.alpha:
            defects.append(f"thm1_pair:{list(members(x))}")
        if best is None or b < best:
            best = b
    thm1_pair = None if best is None else (best, best - inv.alpha)

    thm2 = theorem2_check(inv)
    if thm2[2] < 0:
        defects.append("thm2")
    ratio = ratio_bound(inv) if inv.delta >= 1 else None
    if ratio is not None and inv.alpha > ratio:
        defects.append("ratio2")
    c1 = chain1_values(inv)
    if not (c1[0] <= c1[1] <= c1[2] <= c1[3]):
        defects.append("chain1")
    e3 = eq3_check(inv)
    if e3[2] and e3[0] > e3[1]:
        defects.append("eq3")
    reg = regular_chain(inv) if inv.regular_degree else None
    if reg is not None and not (reg[0] <= reg[1] <= reg[3] <= reg[4]):
        defects.append("regular_chain")
    ann = annihilation_chain(inv)
    if ann[0] > ann[1] or (ann[2] is not None and ann[1] > ann[2]):
        defects.append("annihilation_chain")

    report = BoundReport(
        graph_id=gid, record=record, thm1_core=thm1_core, thm1_best_pair=thm1_pair,
        thm1_pairs_checked=len(pairs), thm2=thm2, chain1=c1, ratio2=ratio, eq3=e3,
        regular=reg, annihilation=ann, boros=boros_bound(inv), levit=levit_bound(inv),
        problem1=inv.regular_degree == 3 and inv.alpha == inv.mu,
        problem2=thm2[2] == 0, defects=defects,
    )
    if defects and raise_on_defect:
        raise DefectError(f"{gid}: proven inequality violated: {', '.join(defects)}")
    return report


# -- the sharpness family and the drawn counter-example -----------------------


def gpqr_predictions(p: int, q: int, r: int) -> dict:
    """Closed forms for G(p, q, r); fractional cases read with floors."""
    lay = gpqr_layout(p, q, r)
    if r >= q:
        mu, term = p + q, r - q
    else:
        mu, term = p + (r + q) // 2, (r - q) // 2
    return {"core": lay.outer, "alpha": p + r, "mu": mu, "term": term}


@dataclass
class GpqrCase:
    p: int
    q: int
    r: int
    core: VertexSet
    alpha: int
    mu: int
    predicted: dict
    intersections: list[tuple[VertexSet, int, int]]   # (X, |X| - mu(G[N[X]]), bound - alpha)
    equality_expected: bool

    @property
    def items_abc_match(self) -> bool:
        pr = self.predicted
        return self.core == pr["core"] and self.alpha == pr["alpha"] and self.mu == pr["mu"]

    @property
    def all_equal(self) -> bool:
        return all(slack == 0 for _, _, slack in self.intersections)

    @property
    def term_mismatches(self) -> list[tuple[VertexSet, int, int]]:
        """Intersections whose |X| - mu(G[N[X]]) differs from the closed form."""
        t = self.predicted["term"]
        return [(x, term, t) for x, term, _ in self.intersections if term != t]


def gpqr_case(p: int, q: int, r: int, limits: Limits | None = None) -> GpqrCase:
    inv = GraphInvariants(family_gpqr(p, q, r), limits)
    rows = []
    for x in intersection_closure(inv):
        term = theorem1_term(inv, x)
        rows.append((members(x), term, inv.mu + term - inv.alpha))
    return GpqrCase(
        p, q, r, inv.core, inv.alpha, inv.mu, gpqr_predictions(p, q, r), rows,
        equality_expected=r >= q or (q - r) % 2 == 0,
    )


def prism_isolates_investigation(limits: Limits | None = None) -> dict:
    """Slack of mu + |X| - mu(G[N[X]]) over alpha for every intersection of maximum independent sets.

    Reported separately for single sets (k = 1) and for proper intersections
    (k >= 2); nothing here is asserted.
    """
    inv = GraphInvariants(prism_with_isolates(), limits)
    singles = set(inv.mis_masks)
    rows = []
    for x in intersection_closure(inv):
        term = theorem1_term(inv, x)
        from_pair = any(a & b == x for a, b in combinations(inv.mis_masks, 2))
        rows.append({"X": list(members(x)), "slack": inv.mu + term - inv.alpha,
                     "single_set": x in singles, "proper_intersection": from_pair})
    proper = [r for r in rows if r["proper_intersection"]]
    return {
        "graph6": encode_graph6(inv.g),
        "alpha": inv.alpha, "mu": inv.mu, "core": list(inv.core),
        "maximum_independent_sets": len(inv.mis_masks),
        "intersections": rows,
        "equality_with_k1": any(r["slack"] == 0 for r in rows if r["single_set"]),
        "equality_with_k_ge_2": any(r["slack"] == 0 for r in proper),
        "core_slack": core_bound(inv) - inv.alpha,
    }
