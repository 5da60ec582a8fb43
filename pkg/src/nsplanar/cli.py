"""Command-line front end.

Graphs stream in and out as graph6/sparse6 lines (headerless); checks
read from stdin, one graph per line, and print one result line each.

    nsplanar gen wheel 10 | nsplanar check nonsep
    nsplanar gen eprism 2 1 1 | nsplanar check complement --then minor --target K331_1
    nsplanar gen maxouterplanar 7 | nsplanar check complement --then planar
    nsplanar closure --seed K6 --moves ty,yt --max-order 10
    nsplanar verify-paper thm1 --n 7-9

Default search budgets come from ``NSPLANAR_BUDGET_NODES`` and
``NSPLANAR_BUDGET_SECONDS`` when the flags are absent.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import families
from .apex import apex_number, is_k_apex
from .encoding import (
    from_graph6,
    parse_graph_line,
    to_graph6,
    to_sparse6,
)
from .errors import BudgetExceededError, NsplanarError
from .graph import Graph
from .minors import Budget, has_minor
from .moves import MOVE_KINDS, closure
from .mu import check_klv, mu_bounds
from .nonsep import classify_nonseparating
from .planarity import is_outerplanar, is_planar, is_linear_forest
from .topology import certify_max_nik, ik_status, is_il, is_max_nil
from .verify import SUITES, run_suite

BUDGET_NODES_ENV = "NSPLANAR_BUDGET_NODES"
BUDGET_SECONDS_ENV = "NSPLANAR_BUDGET_SECONDS"


def _env_default(name: str, cast):
    raw = os.environ.get(name)
    if raw is None:
        return None
    try:
        return cast(raw)
    except ValueError:
        raise SystemExit(f"invalid {name}={raw!r}")


def _budget(args) -> Budget | None:
    nodes = args.budget_nodes
    seconds = args.budget_seconds
    if nodes is None:
        nodes = _env_default(BUDGET_NODES_ENV, int)
    if seconds is None:
        seconds = _env_default(BUDGET_SECONDS_ENV, float)
    if nodes is None and seconds is None:
        return None
    return Budget(nodes, seconds)


def _read_graphs(stream) -> list[Graph]:
    graphs = []
    for line in stream:
        line = line.strip()
        if line:
            graphs.append(parse_graph_line(line))
    return graphs


def _emit_graphs(graphs, sparse: bool) -> None:
    enc = to_sparse6 if sparse else to_graph6
    for g in graphs:
        print(enc(g))


# -- gen ---------------------------------------------------------------------


def cmd_gen(args) -> int:
    kind = args.family
    p = args.params
    if kind == "wheel":
        gs = [families.wheel(int(p[0]))]
    elif kind == "cycle":
        gs = [families.cycle(int(p[0]))]
    elif kind == "path":
        gs = [families.path_by_edges(int(p[0]))]
    elif kind == "complete":
        gs = [families.complete(int(p[0]))]
    elif kind == "empty":
        gs = [families.empty(int(p[0]))]
    elif kind == "eprism":
        s = [int(x) for x in p] or [0, 0, 0]
        while len(s) < 3:
            s.append(0)
        gs = [families.elongated_prism(*s[:3])]
    elif kind == "eprisms":
        gs = families.enumerate_elongated_prisms(int(p[0]))
    elif kind == "maxouterplanar":
        gs = families.enumerate_max_outerplanar(int(p[0]))
    elif kind == "named":
        gs = [families.named(p[0])]
    elif kind == "petersen-family":
        from .topology import petersen_family

        gs = list(petersen_family())
    elif kind == "ik-library":
        from .topology import ik_obstruction_library

        gs = [m.graph for m in ik_obstruction_library().members]
    else:
        raise SystemExit(f"unknown family {kind!r}")
    _emit_graphs(gs, args.sparse6)
    return 0


# -- check -------------------------------------------------------------------

CHECKS = (
    "planar",
    "outerplanar",
    "linearforest",
    "apex",
    "minor",
    "il",
    "ik",
    "maxnil",
    "maxnik",
    "nonsep",
    "mu",
    "klv",
    "complement",
)


def _target_graph(spec: str) -> Graph:
    if spec in families.NAMED_IDS:
        return families.named(spec)
    return parse_graph_line(spec)


def _run_check(name: str, g: Graph, args) -> dict:
    budget = _budget(args)
    if name == "planar":
        res = is_planar(g)
        out = {"check": "planar", "planar": res.planar}
        if args.json_full:
            out.update(res.to_dict())
        elif not res.planar:
            out["obstruction_order"] = res.obstruction.target.n
        return out
    if name == "outerplanar":
        res = is_outerplanar(g, budget)
        return {"check": "outerplanar", "outerplanar": res.outerplanar}
    if name == "linearforest":
        return {"check": "linearforest", "linear_forest": is_linear_forest(g)}
    if name == "apex":
        if args.k is not None:
            cert = is_k_apex(g, args.k, deterministic=args.deterministic)
            out = {"check": "apex", "k": args.k, "is_k_apex": cert is not None}
            if cert is not None:
                out["removed"] = list(cert.removed)
            return out
        k, cert = apex_number(g, deterministic=args.deterministic)
        return {"check": "apex", "apex_number": k, "removed": list(cert.removed)}
    if name == "minor":
        if not args.target:
            raise SystemExit("check minor requires --target")
        h = _target_graph(args.target)
        cert = has_minor(g, h, budget)
        out = {"check": "minor", "target": args.target, "has_minor": cert is not None}
        if cert is not None and args.json_full:
            out["certificate"] = cert.to_dict()
        return out
    if name == "il":
        r = is_il(g, budget)
        out = {"check": "il", "intrinsically_linked": r.linked}
        if r.linked:
            out["obstruction"] = r.obstruction_name
            if args.json_full:
                out["certificate"] = r.certificate.to_dict()
        return out
    if name == "ik":
        v = ik_status(g, budget)
        out = {"check": "ik", "status": v.status}
        if args.json_full:
            out.update(v.to_dict())
        elif v.status == "IK":
            out["obstruction"] = v.obstruction_name
        return out
    if name == "maxnil":
        r = is_max_nil(g, budget)
        out = {"check": "maxnil", "maximal_nil": r.maximal}
        if r.failing_edge:
            out["failing_edge"] = list(r.failing_edge)
        return out
    if name == "maxnik":
        r = certify_max_nik(g, budget)
        out = {"check": "maxnik", "status": r.status}
        if r.failing_edge:
            out["edge"] = list(r.failing_edge)
        return out
    if name == "nonsep":
        cls = classify_nonseparating(g)
        return {"check": "nonsep", **cls.to_dict()}
    if name == "mu":
        iv = mu_bounds(
            g, external_rules=not args.paper_rules_only, budget=budget
        )
        out = {"check": "mu", "lo": iv.lo, "hi": iv.hi, "exact": iv.exact}
        if args.json_full:
            out["trace"] = [s.describe() for s in iv.trace]
        return out
    if name == "klv":
        r = check_klv(g, external_rules=not args.paper_rules_only, budget=budget)
        return {"check": "klv", "status": r.status, "slack": r.slack}
    raise SystemExit(f"unknown check {name!r}")


def cmd_check(args) -> int:
    chain = [args.what] + (args.then or [])
    for name in chain:
        if name not in CHECKS:
            raise SystemExit(f"unknown check {name!r}; choose from {', '.join(CHECKS)}")
    for name in chain[:-1]:
        if name != "complement":
            raise SystemExit("only 'complement' can be chained with --then")
    graphs = _read_graphs(sys.stdin)
    rc = 0
    for i, g in enumerate(graphs):
        work = g
        for name in chain[:-1]:
            work = work.complement()
        final = chain[-1]
        if final == "complement":
            print(to_graph6(work.complement()))
            continue
        try:
            out = _run_check(final, work, args)
        except BudgetExceededError as exc:
            out = {"check": final, "status": "inconclusive", "reason": str(exc)}
            rc = max(rc, 0)
        out = {"graph": i, **out}
        if args.json or args.json_full:
            print(json.dumps(out, sort_keys=True))
        else:
            print(" ".join(f"{k}={v}" for k, v in out.items()))
    return rc


# -- closure -------------------------------------------------------------------


def cmd_closure(args) -> int:
    seeds = [families.named(s) for s in args.seed or []]
    if not seeds:
        seeds = _read_graphs(sys.stdin)
    kinds = tuple(args.moves.split(","))
    for k in kinds:
        if k not in MOVE_KINDS:
            raise SystemExit(f"unknown move kind {k!r} (use ty, yt)")
    res = closure(
        seeds, kinds, max_order=args.max_order, max_graphs=args.max_graphs
    )
    if args.json:
        print(
            json.dumps(
                {
                    "count": len(res.items),
                    "complete": res.complete,
                    "orders": sorted(g.n for g in res.graphs),
                    "graphs": [
                        {
                            "graph6": to_graph6(it.graph),
                            "seed": it.seed_index,
                            "moves": len(it.moves),
                        }
                        for it in res.items
                    ],
                },
                indent=2,
            )
        )
    else:
        _emit_graphs(res.graphs, args.sparse6)
    return 0


# -- verify-paper ----------------------------------------------------------------


def _parse_range(text: str | None):
    if text is None:
        return None
    if "-" in text:
        a, b = text.split("-", 1)
        return range(int(a), int(b) + 1)
    return [int(x) for x in text.split(",")]


def cmd_verify(args) -> int:
    kwargs = dict(
        budget_nodes=args.budget_nodes
        or _env_default(BUDGET_NODES_ENV, int),
        budget_seconds=args.budget_seconds
        or _env_default(BUDGET_SECONDS_ENV, float),
        deterministic=args.deterministic,
        seed=args.seed,
        external_rules=not args.paper_rules_only,
    )
    nrange = _parse_range(args.n)
    if nrange is not None:
        kwargs["n_values"] = nrange
    report = run_suite(args.suite, **kwargs)
    include_timing = not args.deterministic
    if args.json:
        print(report.to_json(include_timing))
    else:
        print(report.to_text(include_timing))
    return 0 if report.ok else 1


# -- json bridges ----------------------------------------------------------------


def cmd_to_json(args) -> int:
    for g in _read_graphs(sys.stdin):
        print(
            json.dumps(
                {"n": g.n, "edges": sorted(map(list, g.edges))}, sort_keys=True
            )
        )
    return 0


def cmd_from_json(args) -> int:
    for line in sys.stdin:
        line = line.strip()
        if not line:
            continue
        obj = json.loads(line)
        g = Graph(obj["n"], [tuple(e) for e in obj["edges"]])
        print(to_graph6(g))
    return 0


# -- argument wiring ---------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="nsplanar",
        description="Non-separating planar graphs, their complements, and certificates.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="emit a graph family as graph6 lines")
    g.add_argument(
        "family",
        choices=(
            "wheel",
            "cycle",
            "path",
            "complete",
            "empty",
            "eprism",
            "eprisms",
            "maxouterplanar",
            "named",
            "petersen-family",
            "ik-library",
        ),
    )
    g.add_argument("params", nargs="*")
    g.add_argument("--sparse6", action="store_true")
    g.set_defaults(func=cmd_gen)

    c = sub.add_parser("check", help="run a check on each stdin graph")
    c.add_argument("what", metavar="CHECK")
    c.add_argument(
        "--then",
        action="append",
        metavar="CHECK",
        help="chain another check after a complement transform",
    )
    c.add_argument("--k", type=int, default=None)
    c.add_argument("--target", default=None)
    c.add_argument("--json", action="store_true")
    c.add_argument(
        "--json-full",
        action="store_true",
        help="JSON including full certificates",
    )
    c.add_argument("--deterministic", action="store_true")
    c.add_argument("--budget-nodes", type=int, default=None)
    c.add_argument("--budget-seconds", type=float, default=None)
    c.add_argument("--paper-rules-only", action="store_true")
    c.set_defaults(func=cmd_check)

    cl = sub.add_parser("closure", help="move closure of seed graphs")
    cl.add_argument("--seed", action="append", help="named seed graph id")
    cl.add_argument("--moves", default="ty,yt")
    cl.add_argument("--max-order", type=int, default=None)
    cl.add_argument("--max-graphs", type=int, default=5000)
    cl.add_argument("--json", action="store_true")
    cl.add_argument("--sparse6", action="store_true")
    cl.set_defaults(func=cmd_closure)

    v = sub.add_parser("verify-paper", help="run a verification suite")
    v.add_argument("suite", choices=SUITES)
    v.add_argument("--n", default=None, help="order range, e.g. 7-11 or 8,10")
    v.add_argument("--budget-nodes", type=int, default=None)
    v.add_argument("--budget-seconds", type=float, default=None)
    v.add_argument("--deterministic", action="store_true")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--json", action="store_true")
    v.add_argument("--paper-rules-only", action="store_true")
    v.set_defaults(func=cmd_verify)

    tj = sub.add_parser("to-json", help="graph6 lines to JSON lines")
    tj.set_defaults(func=cmd_to_json)
    fj = sub.add_parser("from-json", help="JSON lines to graph6 lines")
    fj.set_defaults(func=cmd_from_json)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except NsplanarError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
