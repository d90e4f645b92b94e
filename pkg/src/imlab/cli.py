"""Command-line front end.

Every flag can also be set through an ``IMLAB_<FLAG>`` environment variable
(``--budget-nodes`` -> ``IMLAB_BUDGET_NODES``); an explicit flag wins over the
environment, which wins over the built-in default.

Exit codes: 0 clean, 1 conjecture finding, 2 defect, 3 I/O or budget failure,
64 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path
from collections.abc import Iterator, Sequence

from . import bounds, generators, search
from .errors import BudgetExceeded, GraphError, ImlabError, NotApplicable
from .graph import Graph
from .graph6 import encode_graph6
from .invariants import GraphInvariants, InvariantRecord, Limits, compute_record
from .lemmas import IntersectionChain, telescoping_trace

EXIT_USAGE = 64
ENV_PREFIX = "IMLAB_"


class UsageError(Exception):
    pass


def _env(name: str, default=None):
    return os.environ.get(ENV_PREFIX + name.upper().replace("-", "_"), default)


def _env_int(name: str, default: int) -> int:
    raw = _env(name)
    if raw is None:
        return default
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"{ENV_PREFIX}{name.upper()} must be an integer, got {raw!r}") from None


def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--graph6", action="append", default=None, metavar="STR",
                   help="inline graph6 input (repeatable)")
    p.add_argument("--input", default=_env("input"), metavar="PATH",
                   help="input file; '-' for stdin")
    p.add_argument("--input-format", choices=["graph6", "edgelist"], default=_env("input_format", "graph6"))
    p.add_argument("--format", choices=["json", "csv", "text"], default=_env("format", "text"))
    p.add_argument("--output", default=_env("output"), metavar="PATH")
    p.add_argument("--seed", type=int, default=_env_int("seed", 0))
    p.add_argument("--workers", type=int, default=_env_int("workers", 1))
    p.add_argument("--budget-nodes", type=int, default=_env_int("budget_nodes", Limits.nodes))
    p.add_argument("--budget-sets", type=int, default=_env_int("budget_sets", Limits.sets))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="imlab", description="Exact independence/matching bound laboratory.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("invariants", help="exact invariant record per input graph")
    _common(p)

    p = sub.add_parser("verify", help="evaluate every bound per input graph")
    _common(p)
    p.add_argument("--check", default=_env("check", "all"), help="comma-separated checks, or 'all'")

    p = sub.add_parser("scan", help="run checks over a corpus")
    _common(p)
    p.add_argument("--check", default=_env("check", "all"))
    p.add_argument("--filter", default=_env("filter", ""), help="comma-separated: connected, regular, "
                   "regular:R, cubic, isolate-free, n<=K, n>=K")
    p.add_argument("--exhaustive", action="store_true", help="all labeled graphs with n-min <= n <= n-max")
    p.add_argument("--source", choices=["exhaustive", "cubic", "random", "random-regular", "families", "input"],
                   default=_env("source"))
    p.add_argument("--n-max", type=int, default=_env_int("n_max", 6))
    p.add_argument("--n-min", type=int, default=_env_int("n_min", 1))
    p.add_argument("--count", type=int, default=_env_int("count", 1000), help="graphs for random sources")
    p.add_argument("--degrees", default=_env("degrees", "2,3,4"), help="degrees for random-regular")
    p.add_argument("--table", metavar="PATH", default=_env("table"), help="also write a per-graph CSV table")
    p.add_argument("--witness-dir", metavar="DIR", default=_env("witness_dir"),
                   help="write graph6 witness files here")

    p = sub.add_parser("family", help="emit generated graphs as graph6")
    _common(p)
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--gpqr", nargs=3, type=int, metavar=("P", "Q", "R"))
    g.add_argument("--kab", nargs=2, type=int, metavar=("A", "B"))
    g.add_argument("--random-regular", nargs=2, type=int, metavar=("N", "R"))
    g.add_argument("--cubic", type=int, metavar="N", help="all connected cubic graphs on N vertices")
    g.add_argument("--prism-isolates", action="store_true")
    g.add_argument("--petersen", action="store_true")
    g.add_argument("--complete", type=int, metavar="N")
    g.add_argument("--empty", type=int, metavar="N")
    g.add_argument("--cycle", type=int, metavar="N")
    g.add_argument("--path", type=int, metavar="N")
    p.add_argument("--count", type=int, default=1, help="how many random-regular graphs (seeds seed..seed+count-1)")

    p = sub.add_parser("hall-demo", help="trace the saturating and telescoping matching constructions")
    _common(p)
    p.add_argument("--sets", type=int, default=0, help="use the first K maximum independent sets (0 = all)")
    p.add_argument("--base", default=None, help="comma-separated base independent set A (default: first set)")

    p = sub.add_parser("witnesses", help="collect equality witnesses for the open problems")
    _common(p)
    p.add_argument("--problem", choices=["1", "2", "problem1", "problem2"], required=True)
    p.add_argument("--source", choices=["exhaustive", "cubic", "random", "random-regular", "families", "input"],
                   default=_env("source"))
    p.add_argument("--n-max", type=int, default=_env_int("n_max", 6))
    p.add_argument("--n-min", type=int, default=_env_int("n_min", 1))
    p.add_argument("--count", type=int, default=_env_int("count", 1000))
    p.add_argument("--degrees", default=_env("degrees", "2,3,4"))
    p.add_argument("--exhaustive", action="store_true")
    return parser


# -- input -------------------------------------------------------------------


def _read_lines(path: str) -> Iterator[str]:
    if path == "-":
        yield from sys.stdin
        return
    with open(path, encoding="ascii") as fh:
        yield from fh


def _explicit_inputs(args) -> Iterator[tuple[str, Graph]]:
    if args.graph6 and args.input:
        raise UsageError("give exactly one input source: --graph6 or --input")
    if args.graph6:
        return search.graph6_source(args.graph6)
    path = args.input or "-"
    lines = _read_lines(path)
    if args.input_format == "edgelist":
        return search.edge_list_source(lines)
    return search.graph6_source(lines)


def _corpus(args) -> tuple[search.Source, str, list[str]]:
    kind = args.source
    if args.exhaustive:
        if kind not in (None, "exhaustive"):
            raise UsageError("--exhaustive conflicts with --source " + kind)
        kind = "exhaustive"
    if kind is None:
        kind = "input"
    if kind != "input" and (args.graph6 or args.input):
        raise UsageError(f"--source {kind} takes no --graph6/--input")
    if kind == "exhaustive":
        if args.n_max > 7:
            raise UsageError("exhaustive labeled enumeration is limited to n <= 7")
        return (search.exhaustive_source(args.n_max, args.n_min),
                f"exhaustive labeled n={args.n_min}..{args.n_max}", [search.LABELED_NOTE])
    if kind == "cubic":
        return (search.cubic_source(args.n_max, args.n_min),
                f"connected cubic n={args.n_min}..{args.n_max} (isomorphism classes)", [])
    if kind == "random":
        return (search.random_source(args.count, args.n_max, args.seed, args.n_min),
                f"random G(n,p) count={args.count} n={args.n_min}..{args.n_max} seed={args.seed}", [])
    if kind == "random-regular":
        degs = [int(d) for d in args.degrees.split(",") if d.strip()]
        return (search.random_regular_source(args.count, args.n_max, degs, args.seed),
                f"random regular count={args.count} n<={args.n_max} degrees={degs} seed={args.seed}", [])
    if kind == "families":
        return search.families_source(), "G(p,q,r) grid and K_{a,b}", []
    label = "graph6 input" if args.input_format == "graph6" else "edge-list input"
    return _explicit_inputs(args), label, []


def _limits(args) -> Limits:
    if args.budget_nodes <= 0 or args.budget_sets <= 0:
        raise UsageError("budgets must be positive")
    return Limits(args.budget_nodes, args.budget_sets)


class _Out:
    def __init__(self, path: str | None):
        self.fh = open(path, "w", encoding="utf-8") if path else sys.stdout

    def write(self, text: str) -> None:
        self.fh.write(text)

    def close(self) -> None:
        if self.fh is not sys.stdout:
            self.fh.close()
        else:
            self.fh.flush()


# -- subcommands -------------------------------------------------------------


def _record_text(g6: str, rec: InvariantRecord) -> str:
    body = " ".join(f"{k}={v}" for k, v in rec.to_dict().items())
    return f"{g6} {body}\n"


def cmd_invariants(args, out: _Out) -> int:
    limits = _limits(args)
    first = True
    for g6, g in _explicit_inputs(args):
        rec = compute_record(g, limits)
        if args.format == "json":
            out.write(json.dumps({"graph": g6, **rec.to_dict()}) + "\n")
        elif args.format == "csv":
            if first:
                out.write(",".join(["graph"] + rec.csv_header()) + "\n")
            out.write(g6 + "," + rec.to_csv(header=False))
        else:
            out.write(_record_text(g6, rec))
        first = False
    return search.EXIT_CLEAN


def _verify_text(rep: bounds.BoundReport, checks: list[str]) -> str:
    d = rep.to_dict()
    lines = [f"graph {rep.graph_id}: alpha={rep.record.alpha} mu={rep.record.mu} n={rep.record.n}"]
    want = set(checks)
    if "thm1" in want:
        c = d["thm1_core"]
        lines.append(f"  thm1_core bound={c['bound']} slack={c['slack']} equality={str(c['equality']).lower()}")
        if d["thm1_best_pair"] is not None:
            b = d["thm1_best_pair"]
            lines.append(f"  thm1_best_pair bound={b['bound']} slack={b['slack']} pairs={b['pairs_checked']}")
    if "thm2" in want:
        t = d["thm2"]
        lines.append(f"  thm2 lhs={t['lhs']} rhs={t['rhs']} slack={t['slack']}")
    if "ratio2" in want and d["ratio2"] is not None:
        lines.append(f"  ratio2 bound={d['ratio2']}")
    if "chain1" in want:
        lines.append("  chain1 n-2mu={} n-2mu*={} alpha={} n-mu={}".format(*d["chain1"]))
    if "eq3" in want:
        e = d["eq3"]
        lines.append(f"  eq3 lhs={e['lhs']} rhs={e['rhs']} applicable={str(e['applicable']).lower()}")
    if ("thm3" in want or "annihilation" in want) and d["regular_chain"] is not None:
        names = ("alpha", "mu", "n/2", "a", "n-m/Delta")
        lines.append("  regular_chain " + " ".join(f"{k}={v}" for k, v in zip(names, d["regular_chain"])))
    if "annihilation" in want:
        names = ("alpha", "a", "n-m/Delta")
        vals = ("-" if v is None else v for v in d["annihilation_chain"])
        lines.append("  annihilation_chain " + " ".join(f"{k}={v}" for k, v in zip(names, vals)))
    return "\n".join(lines) + "\n"


def cmd_verify(args, out: _Out) -> int:
    limits = _limits(args)
    checks = search.resolve_checks(args.check.split(","))
    code = search.EXIT_CLEAN
    first = True
    for g6, g in _explicit_inputs(args):
        inv = GraphInvariants(g, limits)
        rep = bounds.evaluate_all(inv, g6, raise_on_defect=False)
        result = search.check_graph(g6, g, checks, limits)
        code = max(code, result.exit_code if not result.skipped else search.EXIT_FAILURE)
        if args.format == "json":
            d = rep.to_dict()
            d["checks"] = {"run": checks, "defects": [m for _, m in result.defects],
                           "findings": [m for _, m in result.findings]}
            out.write(json.dumps(d) + "\n")
        elif args.format == "csv":
            out.write(rep.to_csv(header=first))
        else:
            out.write(_verify_text(rep, checks))
            for _, msg in result.defects:
                out.write(f"  DEFECT {msg}\n")
            for _, msg in result.findings:
                out.write(f"  FINDING {msg}\n")
        first = False
    return code


def cmd_scan(args, out: _Out) -> int:
    limits = _limits(args)
    source, label, notes = _corpus(args)
    checks = [c for c in args.check.split(",") if c.strip()]
    filters = [f for f in args.filter.split(",") if f.strip()]
    if args.table:
        source = list(source)
        Path(args.table).write_text(search.per_graph_table(source, limits=limits), encoding="utf-8")
    report = search.scan(source, checks, filters, limits=limits, workers=args.workers,
                         source_label=label, notes=notes)
    if args.format == "json":
        out.write(report.to_json())
    elif args.format == "csv":
        out.write("graph6,kind,detail\n")
        for kind, rows in (("defect", report.defects), ("finding", report.findings),
                           ("skipped", report.skipped), ("discrepancy", report.claim_discrepancies)):
            for g6, msg in rows:
                out.write(f"{g6},{kind},\"{msg}\"\n")
    else:
        out.write(report.to_text())
    if args.witness_dir:
        d = Path(args.witness_dir)
        d.mkdir(parents=True, exist_ok=True)
        search.write_witnesses(d / "problem1.g6", report.problem1_witnesses)
        search.write_witnesses(d / "problem2.g6", report.problem2_witnesses)
        search.write_witnesses(d / "conjecture1_violations.g6", report.conjecture1_violations)
        search.write_witnesses(d / "question1_violations.g6", report.question1_violations)
        search.write_witnesses(d / "defects.g6", sorted({g for g, _ in report.defects}))
    if report.skipped and report.exit_code == search.EXIT_CLEAN:
        return search.EXIT_FAILURE
    return report.exit_code


def cmd_family(args, out: _Out) -> int:
    if args.gpqr:
        graphs = [generators.family_gpqr(*args.gpqr)]
    elif args.kab:
        graphs = [generators.complete_bipartite(*args.kab)]
    elif args.random_regular:
        n, r = args.random_regular
        graphs = [generators.random_regular(n, r, args.seed + i) for i in range(args.count)]
    elif args.cubic is not None:
        graphs = generators.connected_cubic_graphs(args.cubic)
    elif args.prism_isolates:
        graphs = [generators.prism_with_isolates()]
    elif args.petersen:
        graphs = [generators.petersen()]
    elif args.complete is not None:
        graphs = [generators.complete(args.complete)]
    elif args.empty is not None:
        graphs = [generators.empty(args.empty)]
    elif args.cycle is not None:
        graphs = [generators.cycle(args.cycle)]
    else:
        graphs = [generators.path(args.path)]
    for g in graphs:
        out.write(encode_graph6(g) + "\n")
    return search.EXIT_CLEAN


def _fmt_set(s) -> str:
    return "{" + ",".join(map(str, s)) + "}"


def _fmt_matching(m) -> str:
    return "{" + ",".join(f"({u},{v})" for u, v in m) + "}"


def cmd_hall_demo(args, out: _Out) -> int:
    limits = _limits(args)
    code = search.EXIT_CLEAN
    for g6, g in _explicit_inputs(args):
        inv = GraphInvariants(g, limits)
        sets = inv.maximum_independent_sets
        if args.sets:
            sets = sets[: args.sets]
        base = sets[0] if args.base is None else [int(v) for v in args.base.split(",") if v.strip()]
        trace = telescoping_trace(g, IntersectionChain(sets, base), alpha=inv.alpha)
        X = trace.chain.intersection
        lhs = len(trace.chain.base) - inv.mu_closed(trace.chain.base)
        rhs = len(X) - inv.mu_closed(X)
        if args.format == "json":
            out.write(json.dumps({
                "graph": g6, "alpha": inv.alpha, "mu": inv.mu, "base": list(trace.chain.base),
                "sets": [list(s) for s in trace.chain.sets], "intersection": list(X),
                "orientation": trace.orientation,
                "steps": [{"r": s.r, "prefix": list(s.prefix), "saturated": list(s.saturated),
                           "target": list(s.target), "matching": [list(e) for e in s.matching]}
                          for s in trace.steps],
                "Q": [list(e) for e in trace.core_matching],
                "matching": [list(e) for e in trace.matching],
                "size_bound": trace.size_bound,
                "ledger": [list(t) for t in trace.ledger()],
                "monotonicity": {"base_term": lhs, "intersection_term": rhs, "holds": lhs <= rhs},
            }) + "\n")
            continue
        out.write(f"graph {g6}: n={g.n} alpha={inv.alpha} mu={inv.mu}\n")
        out.write(f"base A = {_fmt_set(trace.chain.base)}\n")
        for i, s in enumerate(trace.chain.sets, start=1):
            out.write(f"X_{i} = {_fmt_set(s)}\n")
        out.write(f"X = intersection = {_fmt_set(X)}\n")
        out.write(f"orientation: {trace.orientation}\n")
        for s in trace.steps:
            out.write(f"step {s.r}: A_{s.r} = {_fmt_set(s.prefix)}; saturate {_fmt_set(s.saturated)} "
                      f"into {_fmt_set(s.target)}; M_{s.r} = {_fmt_matching(s.matching)}\n")
        out.write(f"Q (maximum matching of G[N[X]]) = {_fmt_matching(trace.core_matching)}\n")
        out.write(f"M = {_fmt_matching(trace.matching)} (|M| = {len(trace.matching)})\n")
        out.write("telescoping ledger |A_r| - |A_r+1| = |M_r|:\n")
        for (a, b, m), s in zip(trace.ledger(), trace.steps):
            out.write(f"  r={s.r}: {a} - {b} = {m}\n")
        out.write(f"|M| >= |A| - |X| + mu(G[N[X]]) = {len(trace.chain.base)} - {len(X)} + "
                  f"{len(trace.core_matching)} = {trace.size_bound}\n")
        out.write(f"|A| - mu(G[N[A]]) = {lhs} <= |X| - mu(G[N[X]]) = {rhs}: {str(lhs <= rhs).lower()}\n")
        if lhs > rhs:
            code = search.EXIT_DEFECT
    return code


def cmd_witnesses(args, out: _Out) -> int:
    limits = _limits(args)
    which = args.problem if args.problem.startswith("problem") else "problem" + args.problem
    source, _, _ = _corpus(args)
    for g6 in search.collect_equality_witnesses(source, which, limits=limits, workers=args.workers):
        out.write(g6 + "\n")
    return search.EXIT_CLEAN


COMMANDS = {
    "invariants": cmd_invariants,
    "verify": cmd_verify,
    "scan": cmd_scan,
    "family": cmd_family,
    "hall-demo": cmd_hall_demo,
    "witnesses": cmd_witnesses,
}


def run(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else 0
    except UsageError as exc:
        print(f"imlab: {exc}", file=sys.stderr)
        return EXIT_USAGE
    out = None
    try:
        if args.workers < 1:
            raise UsageError("--workers must be >= 1")
        out = _Out(args.output)
        return COMMANDS[args.command](args, out)
    except UsageError as exc:
        print(f"imlab: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (OSError, GraphError, BudgetExceeded) as exc:
        # unreadable or malformed input, or a solver budget ran out
        print(f"imlab: {exc}", file=sys.stderr)
        return search.EXIT_FAILURE
    except (ValueError, NotApplicable) as exc:
        print(f"imlab: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ImlabError as exc:
        print(f"imlab: defect: {exc}", file=sys.stderr)
        return search.EXIT_DEFECT
    finally:
        if out is not None:
            out.close()


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
