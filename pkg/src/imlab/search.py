"""Corpus scans: verify the proven inequalities, probe the open conjectures, collect equality witnesses.

A scan streams ``(graph6, Graph)`` pairs from a source, drops graphs failing
the filters, runs the selected checks on each remaining graph and folds the
outcomes into a :class:`SearchReport`. Violations of proven inequalities are *defects*
(implementation bugs); conjecture violations are *findings*.
"""

from __future__ import annotations

import csv
import io
import json
import random
from collections import Counter
from collections.abc import Callable, Iterable, Iterator
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, islice
from pathlib import Path

from . import bounds
from .coloring import EdgeClass
from .errors import BudgetExceeded, Graph6Error, ImlabError, NotApplicable
from .generators import (complete_bipartite, connected_cubic_graphs, family_gpqr, labeled_graphs,
                         random_graph, random_regular)
from .graph import Graph, max_degree_subgraph, members, read_edge_lists, remove_edge
from .graph6 import encode_graph6, parse_graph6
from .invariants import GraphInvariants, Limits
from .lemmas import IntersectionChain, regular_saturating_matching, telescoping_trace

EXIT_CLEAN, EXIT_FINDING, EXIT_DEFECT, EXIT_FAILURE = 0, 1, 2, 3

LABELED_NOTE = "internal exhaustive enumeration is over labeled graphs (no isomorphism rejection)"


@dataclass
class Outcome:
    defects: list[str] = field(default_factory=list)
    findings: list[str] = field(default_factory=list)
    discrepancies: list[str] = field(default_factory=list)
    sharp: list[str] = field(default_factory=list)
    witnesses: list[str] = field(default_factory=list)
    conj1: bool | None = None      # None: not applicable
    q1: bool | None = None


# -- checks ------------------------------------------------------------------
# Each check reads a GraphInvariants and appends to an Outcome.


def check_thm1(inv: GraphInvariants, out: Outcome) -> None:
    core_b = bounds.core_bound(inv)
    if core_b < inv.alpha:
        out.defects.append(f"thm1_core: bound {core_b} < alpha {inv.alpha}")
    elif core_b == inv.alpha:
        out.sharp.append("thm1_core")
    pairs = bounds.pairwise_intersections(inv)
    if pairs:
        vals = {x: inv.mu + bounds.theorem1_term(inv, x) for x in pairs}
        for x, b in vals.items():
            if b < inv.alpha:
                out.defects.append(f"thm1_pair: X={list(members(x))} bound {b} < alpha {inv.alpha}")
        if min(vals.values()) == inv.alpha:
            out.sharp.append("thm1_best_pair")


def check_remark1(inv: GraphInvariants, out: Outcome) -> None:
    masks = inv.mis_masks
    if len(masks) < 3:
        return
    for fam in combinations(masks, 3):
        if not bounds.remark1_holds(inv, [members(m) for m in fam]):
            out.defects.append(f"remark1: family {[list(members(m)) for m in fam]}")
            return


def check_thm2(inv: GraphInvariants, out: Outcome) -> None:
    lhs, rhs, slack = bounds.theorem2_check(inv)
    if slack < 0:
        out.defects.append(f"thm2: delta*alpha={lhs} > Delta*mu={rhs}")
    elif slack == 0:
        out.sharp.append("thm2")
        out.witnesses.append("problem2")


def check_thm2_proof(inv: GraphInvariants, out: Outcome) -> None:
    """The case split of the degree bound: class 1 counts edges, class 2 deletes an edge of G_Delta."""
    if inv.delta == 0:
        return
    if inv.edge_class is EdgeClass.CLASS1:
        if not inv.delta * inv.alpha <= inv.m <= inv.big_delta * inv.mu:
            out.defects.append("thm2_proof: class 1 but not delta*alpha <= m <= Delta*mu")
        return
    if inv.delta == inv.big_delta:
        return  # regular graphs are settled by the saturating matching
    top = max_degree_subgraph(inv.g)
    hubs = [v for v in range(inv.n) if inv.g.degree(v) == inv.big_delta]
    if top.m == 0:
        out.defects.append("thm2_proof: class 2 with no edge among maximum-degree vertices")
        return
    a, b = top.edges()[0]
    h = remove_edge(inv.g, hubs[a], hubs[b])
    if (h.min_degree, h.max_degree) != (inv.delta, inv.big_delta):
        out.defects.append("thm2_proof: deleting an edge of G_Delta changed delta or Delta")


def check_ratio2(inv: GraphInvariants, out: Outcome) -> None:
    if inv.delta == 0:
        return
    ratio = bounds.ratio_bound(inv)
    if inv.alpha > ratio:
        out.defects.append(f"ratio2: alpha {inv.alpha} > {bounds.fmt_fraction(ratio)}")
    elif inv.alpha == ratio:
        out.sharp.append("ratio2")


def check_chain1(inv: GraphInvariants, out: Outcome) -> None:
    a, b, c, d = bounds.chain1_values(inv)
    if not a <= b <= c <= d:
        out.defects.append(f"chain1: ({a}, {b}, {c}, {d}) not non-decreasing")
    if c == d:
        out.sharp.append("chain1_konig_egervary")
    if b == c:
        out.sharp.append("chain1_min_maximal")


def check_annihilation(inv: GraphInvariants, out: Outcome) -> None:
    alpha, a, top = bounds.annihilation_chain(inv)
    if alpha > a:
        out.defects.append(f"annihilation: alpha {alpha} > a {a}")
    if top is not None and a > top:
        out.defects.append(f"annihilation: a {a} > n - m/Delta = {bounds.fmt_fraction(top)}")
    if a < inv.n // 2:
        out.defects.append(f"annihilation: a {a} < floor(n/2)")
    if 2 * a < inv.n:
        out.discrepancies.append(f"annihilation_half: a = {a} < n/2 = {bounds.fmt_fraction(Fraction(inv.n, 2))}")


def check_thm3(inv: GraphInvariants, out: Outcome) -> None:
    r = inv.regular_degree
    if not r:
        return
    if inv.alpha > inv.mu:
        out.defects.append(f"thm3: {r}-regular with alpha {inv.alpha} > mu {inv.mu}")
    X = inv.maximum_independent_sets[0]
    M = regular_saturating_matching(inv.g, X, alpha=inv.alpha)
    covered = {v for e in M for v in e}
    if not inv.g.is_matching(M) or not set(X) <= covered or len(M) < inv.alpha:
        out.defects.append("thm3: witness matching does not saturate the maximum independent set")
    chain = bounds.regular_chain(inv)
    alpha, mu, half, a, top = chain
    if not alpha <= mu <= a <= top:
        out.defects.append(f"regular_chain: {[bounds.fmt_fraction(v) for v in chain]}")
    if not mu <= half <= a:
        out.discrepancies.append(f"regular_chain_half: mu={mu} n/2={bounds.fmt_fraction(half)} a={a}")
    if r == 3 and alpha == mu:
        out.witnesses.append("problem1")


def check_fournier(inv: GraphInvariants, out: Outcome) -> None:
    if inv.big_delta and inv.edge_class is EdgeClass.CLASS2:
        if not max_degree_subgraph(inv.g).has_cycle():
            out.defects.append("fournier: class 2 but G_Delta is acyclic")


def check_cor2(inv: GraphInvariants, out: Outcome) -> None:
    if inv.delta >= 1 and inv.well_covered and inv.alpha > inv.mu:
        out.defects.append("cor2: isolate-free well-covered graph with alpha > mu")
    if not inv.core and inv.alpha > inv.mu:
        out.defects.append("empty_core: alpha > mu although the core is empty")


def check_eq3(inv: GraphInvariants, out: Outcome) -> None:
    lhs, rhs, applicable = bounds.eq3_check(inv)
    if applicable:
        if lhs > rhs:
            out.defects.append(f"eq3: n - 2mu* = {lhs} > mu = {rhs}")
        elif lhs == rhs:
            out.sharp.append("eq3")


def check_lemma4(inv: GraphInvariants, out: Outcome) -> None:
    """Telescoping construction with all maximum independent sets and the first one as base."""
    sets = inv.maximum_independent_sets
    trace = telescoping_trace(inv.g, IntersectionChain(sets, sets[0]), alpha=inv.alpha)
    A, X = trace.chain.base, trace.chain.intersection
    lhs = len(A) - inv.mu_closed(A)
    rhs = len(X) - inv.mu_closed(X)
    if lhs > rhs:
        out.defects.append(f"lemma4: |A| - mu(N[A]) = {lhs} > |X| - mu(N[X]) = {rhs}")


def check_conj1(inv: GraphInvariants, out: Outcome) -> None:
    if not inv.regular_degree:
        return
    ok = inv.idom <= inv.mu_star
    out.conj1 = ok
    if not ok:
        out.findings.append(f"conj1: i = {inv.idom} > mu* = {inv.mu_star}")


def check_q1(inv: GraphInvariants, out: Outcome) -> None:
    lhs = inv.delta * inv.idom
    rhs = inv.big_delta * inv.mu_star
    ok = lhs <= rhs
    out.q1 = ok
    if not ok:
        out.findings.append(f"q1: delta*i = {lhs} > Delta*mu* = {rhs}")


CHECKS: dict[str, Callable[[GraphInvariants, Outcome], None]] = {
    "thm1": check_thm1,
    "remark1": check_remark1,
    "thm2": check_thm2,
    "thm2_proof": check_thm2_proof,
    "ratio2": check_ratio2,
    "chain1": check_chain1,
    "annihilation": check_annihilation,
    "thm3": check_thm3,
    "fournier": check_fournier,
    "cor2": check_cor2,
    "eq3": check_eq3,
    "lemma4": check_lemma4,
    "conj1": check_conj1,
    "q1": check_q1,
}


def resolve_checks(names: Iterable[str]) -> list[str]:
    out: list[str] = []
    for name in names:
        name = name.strip()
        if not name:
            continue
        if name == "all":
            out.extend(CHECKS)
        elif name in CHECKS:
            out.append(name)
        else:
            raise ValueError(f"unknown check {name!r}; choose from {', '.join(CHECKS)} or 'all'")
    return list(dict.fromkeys(out))


# -- filters -----------------------------------------------------------------


def _filter(name: str) -> Callable[[Graph], bool]:
    if name == "connected":
        return Graph.is_connected
    if name == "regular":
        return lambda g: g.n > 0 and g.is_regular() and g.max_degree > 0
    if name == "cubic":
        return lambda g: g.is_regular(3)
    if name.startswith("regular:"):
        r = int(name.split(":", 1)[1])
        return lambda g: g.n > 0 and g.is_regular(r)
    if name in ("isolate-free", "isolate_free"):
        return lambda g: g.min_degree >= 1
    if name.startswith("n<="):
        k = int(name[3:])
        return lambda g: g.n <= k
    if name.startswith("n>="):
        k = int(name[3:])
        return lambda g: g.n >= k
    raise ValueError(f"unknown filter {name!r}")


def make_filters(names: Iterable[str]) -> list[Callable[[Graph], bool]]:
    return [_filter(n.strip()) for n in names if n.strip()]


# -- sources -----------------------------------------------------------------

Source = Iterable[tuple[str, Graph]]


def exhaustive_source(n_max: int, n_min: int = 1) -> Iterator[tuple[str, Graph]]:
    for n in range(n_min, n_max + 1):
        for g in labeled_graphs(n):
            yield encode_graph6(g), g


def graph6_source(lines: Iterable[str]) -> Iterator[tuple[str, Graph]]:
    for lineno, line in enumerate(lines, start=1):
        s = line.strip()
        if not s:
            continue
        try:
            g = parse_graph6(s)
        except Graph6Error as exc:
            raise Graph6Error(f"line {lineno}: {exc}") from exc
        yield encode_graph6(g), g


def edge_list_source(lines: Iterable[str]) -> Iterator[tuple[str, Graph]]:
    for g in read_edge_lists(lines):
        yield encode_graph6(g), g


def graphs_source(graphs: Iterable[Graph]) -> Iterator[tuple[str, Graph]]:
    for g in graphs:
        yield encode_graph6(g), g


def cubic_source(n_max: int, n_min: int = 4) -> Iterator[tuple[str, Graph]]:
    for n in range(max(4, n_min + n_min % 2), n_max + 1, 2):
        yield from graphs_source(connected_cubic_graphs(n))


def random_source(count: int, n_max: int, seed: int, n_min: int = 1) -> Iterator[tuple[str, Graph]]:
    """``count`` Erdos-Renyi graphs with n uniform in [n_min, n_max] and edge probability uniform in [0, 1)."""
    rng = random.Random(seed)
    for _ in range(count):
        n = rng.randint(n_min, n_max)
        g = random_graph(n, rng.random(), rng)
        yield encode_graph6(g), g


def random_regular_source(count: int, n_max: int, degrees: Iterable[int], seed: int) -> Iterator[tuple[str, Graph]]:
    rng = random.Random(seed)
    degrees = list(degrees)
    made = 0
    while made < count:
        r = rng.choice(degrees)
        n = rng.randint(r + 1, n_max)
        if (n * r) % 2:
            continue
        yield from graphs_source([random_regular(n, r, rng.randrange(2**31))])
        made += 1


def families_source(max_p: int = 3, max_q: int = 4, max_r: int = 5, max_side: int = 6) -> Iterator[tuple[str, Graph]]:
    for p in range(max_p + 1):
        for q in range(max_q + 1):
            for r in range(max_r + 1):
                if p + r >= 2:
                    yield from graphs_source([family_gpqr(p, q, r)])
    for a in range(1, max_side + 1):
        for b in range(a, max_side + 1):
            yield from graphs_source([complete_bipartite(a, b)])


# -- report ------------------------------------------------------------------


@dataclass
class SearchReport:
    filters: list[str] = field(default_factory=list)
    checks: list[str] = field(default_factory=list)
    source: str = ""
    notes: list[str] = field(default_factory=list)
    graphs_scanned: int = 0
    graphs_filtered_out: int = 0
    graphs_checked: int = 0
    defects: list[tuple[str, str]] = field(default_factory=list)
    skipped: list[tuple[str, str]] = field(default_factory=list)
    findings: list[tuple[str, str]] = field(default_factory=list)
    claim_discrepancies: list[tuple[str, str]] = field(default_factory=list)
    conjecture1_checked: int = 0
    conjecture1_violations: list[str] = field(default_factory=list)
    question1_checked: int = 0
    question1_violations: list[str] = field(default_factory=list)
    problem1_witnesses: list[str] = field(default_factory=list)
    problem2_witnesses: list[str] = field(default_factory=list)
    sharpness: Counter = field(default_factory=Counter)

    def merge(self, other: SearchReport) -> SearchReport:
        """Fold another partial report in. Associative and commutative up to :meth:`canonical`."""
        for name in ("graphs_scanned", "graphs_filtered_out", "graphs_checked",
                     "conjecture1_checked", "question1_checked"):
            setattr(self, name, getattr(self, name) + getattr(other, name))
        for name in ("defects", "skipped", "findings", "claim_discrepancies", "conjecture1_violations",
                     "question1_violations", "problem1_witnesses", "problem2_witnesses"):
            getattr(self, name).extend(getattr(other, name))
        self.sharpness.update(other.sharpness)
        return self

    def canonical(self) -> SearchReport:
        for name in ("defects", "skipped", "findings", "claim_discrepancies"):
            setattr(self, name, sorted(set(getattr(self, name))))
        for name in ("conjecture1_violations", "question1_violations",
                     "problem1_witnesses", "problem2_witnesses"):
            setattr(self, name, sorted(set(getattr(self, name))))
        return self

    @property
    def exit_code(self) -> int:
        if self.defects:
            return EXIT_DEFECT
        if self.findings or self.conjecture1_violations or self.question1_violations:
            return EXIT_FINDING
        return EXIT_CLEAN

    def to_dict(self) -> dict:
        self.canonical()
        return {
            "source": self.source,
            "filters": list(self.filters),
            "checks": list(self.checks),
            "notes": list(self.notes),
            "graphs_scanned": self.graphs_scanned,
            "graphs_filtered_out": self.graphs_filtered_out,
            "graphs_checked": self.graphs_checked,
            "defects": [list(d) for d in self.defects],
            "skipped": [list(s) for s in self.skipped],
            "findings": [list(f) for f in self.findings],
            "claim_discrepancies": [list(c) for c in self.claim_discrepancies],
            "conjecture1": {"checked": self.conjecture1_checked, "violations": self.conjecture1_violations},
            "question1": {"checked": self.question1_checked, "violations": self.question1_violations},
            "problem1_witnesses": self.problem1_witnesses,
            "problem2_witnesses": self.problem2_witnesses,
            "sharpness": dict(sorted(self.sharpness.items())),
            "exit_code": self.exit_code,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"

    def to_text(self) -> str:
        d = self.to_dict()
        lines = [
            f"source: {d['source']}",
            f"checks: {', '.join(d['checks'])}",
            f"filters: {', '.join(d['filters']) or '-'}",
            f"scanned {d['graphs_scanned']}, filtered out {d['graphs_filtered_out']}, "
            f"checked {d['graphs_checked']}, skipped {len(d['skipped'])}",
            f"defects: {len(d['defects'])}",
            f"conjecture 1: {d['conjecture1']['checked']} checked, "
            f"{len(d['conjecture1']['violations'])} violations",
            f"question 1: {d['question1']['checked']} checked, {len(d['question1']['violations'])} violations",
            f"problem 1 witnesses: {len(d['problem1_witnesses'])}",
            f"problem 2 witnesses: {len(d['problem2_witnesses'])}",
            f"claim discrepancies: {len(d['claim_discrepancies'])}",
        ]
        lines += [f"sharp {k}: {v}" for k, v in d["sharpness"].items()]
        lines += [f"DEFECT {g} {msg}" for g, msg in d["defects"]]
        lines += [f"FINDING {g} {msg}" for g, msg in d["findings"]]
        for note in d["notes"]:
            lines.append(f"note: {note}")
        return "\n".join(lines) + "\n"


def check_graph(g6: str, g: Graph, checks: list[str], limits: Limits) -> SearchReport:
    """Run the checks on one (already filtered) graph and return a one-graph report."""
    rep = SearchReport(graphs_scanned=1)
    inv = GraphInvariants(g, limits)
    out = Outcome()
    try:
        for name in checks:
            CHECKS[name](inv, out)
    except BudgetExceeded as exc:
        rep.skipped.append((g6, str(exc)))
        return rep
    except ImlabError as exc:
        # a contract or internal error raised inside a check on a valid graph is a defect
        out.defects.append(f"{type(exc).__name__}: {exc}")
    rep.graphs_checked = 1
    rep.defects = [(g6, d) for d in out.defects]
    rep.findings = [(g6, f) for f in out.findings]
    rep.claim_discrepancies = [(g6, c) for c in out.discrepancies]
    rep.sharpness.update(out.sharp)
    if out.conj1 is not None:
        rep.conjecture1_checked = 1
        if not out.conj1:
            rep.conjecture1_violations.append(g6)
    if out.q1 is not None:
        rep.question1_checked = 1
        if not out.q1:
            rep.question1_violations.append(g6)
    if "problem1" in out.witnesses:
        rep.problem1_witnesses.append(g6)
    if "problem2" in out.witnesses:
        rep.problem2_witnesses.append(g6)
    return rep


def _check_batch(batch: list[str], checks: list[str], limits: Limits) -> SearchReport:
    total = SearchReport()
    for g6 in batch:
        total.merge(check_graph(g6, parse_graph6(g6), checks, limits))
    return total


def _batches(items: Iterator, size: int) -> Iterator[list]:
    while True:
        chunk = list(islice(items, size))
        if not chunk:
            return
        yield chunk


def scan(source: Source, checks: Iterable[str] = ("all",), filters: Iterable[str] = (), *,
         limits: Limits | None = None, workers: int = 1, source_label: str = "",
         notes: Iterable[str] = (), batch_size: int = 256) -> SearchReport:
    """Stream a corpus through the checks.

    The returned report is canonicalized, so it does not depend on ``workers``.
    Graphs that hit a solver budget are listed under ``skipped`` with the reason.
    """
    limits = limits or Limits()
    filter_names = [f for f in filters if f.strip()]
    preds = make_filters(filter_names)
    check_names = resolve_checks(checks)
    report = SearchReport(filters=filter_names, checks=check_names, source=source_label, notes=list(notes))
    rejected = 0

    def accepted() -> Iterator[tuple[str, Graph]]:
        nonlocal rejected
        for g6, g in source:
            if all(p(g) for p in preds):
                yield g6, g
            else:
                rejected += 1

    if workers <= 1:
        for g6, g in accepted():
            report.merge(check_graph(g6, g, check_names, limits))
    else:
        stream = (g6 for g6, _ in accepted())
        with ProcessPoolExecutor(max_workers=workers) as pool:
            pending = []
            for batch in _batches(stream, batch_size):
                pending.append(pool.submit(_check_batch, batch, check_names, limits))
                if len(pending) >= 4 * workers:
                    report.merge(pending.pop(0).result())
            for fut in pending:
                report.merge(fut.result())
    report.graphs_filtered_out = rejected
    report.graphs_scanned += rejected
    return report.canonical()


def collect_equality_witnesses(source: Source, which: str, *, limits: Limits | None = None,
                               workers: int = 1) -> list[str]:
    """Deduplicated graph6 strings of equality cases: "problem1" is cubic with alpha = mu, "problem2" is delta*alpha = Delta*mu."""
    if which == "problem1":
        rep = scan(source, ["thm3"], ["cubic"], limits=limits, workers=workers)
        return rep.problem1_witnesses
    if which == "problem2":
        rep = scan(source, ["thm2"], limits=limits, workers=workers)
        return rep.problem2_witnesses
    raise ValueError(f"unknown witness family {which!r}; use problem1 or problem2")


def check_conjecture1(g: Graph | GraphInvariants) -> tuple[int, int, bool]:
    """(i, mu*, i <= mu*) for an r-regular graph with r > 0."""
    inv = bounds.as_invariants(g)
    if not inv.regular_degree:
        raise NotApplicable("the i <= mu* comparison concerns r-regular graphs with r > 0")
    return inv.idom, inv.mu_star, inv.idom <= inv.mu_star


def check_question1(g: Graph | GraphInvariants) -> tuple[int, int, bool]:
    """(delta * i, Delta * mu*, holds)."""
    inv = bounds.as_invariants(g)
    lhs, rhs = inv.delta * inv.idom, inv.big_delta * inv.mu_star
    return lhs, rhs, lhs <= rhs


def write_witnesses(path: str | Path, graph6s: Iterable[str]) -> None:
    Path(path).write_text("".join(f"{s}\n" for s in graph6s), encoding="ascii")


def per_graph_table(source: Source, *, limits: Limits | None = None) -> str:
    """CSV table with one BoundReport row per graph."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    header_done = False
    for g6, g in source:
        row = bounds.evaluate_all(g, g6, limits=limits, raise_on_defect=False).flat()
        if not header_done:
            w.writerow(list(row))
            header_done = True
        w.writerow(list(row.values()))
    return buf.getvalue()


__all__ = [
    "CHECKS", "SearchReport", "scan", "check_graph", "collect_equality_witnesses", "check_conjecture1",
    "check_question1", "exhaustive_source", "graph6_source", "edge_list_source", "graphs_source",
    "cubic_source", "random_source", "random_regular_source", "families_source", "write_witnesses",
    "per_graph_table", "LABELED_NOTE", "EXIT_CLEAN", "EXIT_FINDING", "EXIT_DEFECT", "EXIT_FAILURE",
]
