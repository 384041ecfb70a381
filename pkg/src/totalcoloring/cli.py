"""Command line surface for building graphs, running constructions,
verifying colorings, querying the exact oracle and sweeping the
power-of-cycle prediction.

Exit codes: 0 success, 2 flag parse error, 3 precondition violation,
4 verification failure, 5 search budget exhausted.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
import time
from typing import Optional

from .graphs import (Graph, MockThresholdScript, MockThresholdStep,
                     build_circulant, build_kneser, build_mock_threshold,
                     build_odd_graph, build_power_of_cycle,
                     build_unitary_cayley, kneser_vertex_labels)
from .coloring import (ColorMatrix, TotalColoring, coloring_to_matrix,
                       matrix_to_coloring, verify)
from .constructions import (BudgetError, ConstructionError,
                            mock_threshold_total, odd_graph_total, poc_any_odd,
                            poc_augment, poc_base, poc_block, poc_grow,
                            poc_shrink, unitary_total)
from . import oracle as _oracle

EXIT_PARSE = 2
EXIT_PRECONDITION = 3
EXIT_VERIFY = 4
EXIT_BUDGET = 5


class _CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def _default_budget() -> int:
    raw = os.environ.get("TCL_BUDGET")
    if raw is None:
        return _oracle.DEFAULT_BUDGET
    try:
        return int(raw)
    except ValueError:
        raise _CliError(f"TCL_BUDGET is not an integer: {raw!r}", EXIT_PARSE)


def _log(args, **stats) -> None:
    if getattr(args, "verbose", False):
        print(json.dumps(stats, sort_keys=True), file=sys.stderr)


def _write(path: Optional[str], text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text if text.endswith("\n") else text + "\n")
    else:
        with open(path, "w") as fh:
            fh.write(text)


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


# ---------------------------------------------------------------------------
# scripts for mock threshold graphs

def script_to_json(script: MockThresholdScript) -> str:
    return json.dumps({"steps": [{"kind": s.kind, "ref": s.ref}
                                 for s in script.steps]})


def script_from_json(text: str) -> MockThresholdScript:
    data = json.loads(text)
    steps = tuple(MockThresholdStep(s["kind"], s.get("ref"))
                  for s in data["steps"])
    return MockThresholdScript(steps, tuple(range(len(steps))))


def random_script(rng: random.Random, max_n: int) -> MockThresholdScript:
    n = rng.randint(1, max_n)
    steps = [MockThresholdStep("isolated", None)]
    for i in range(1, n):
        kind = rng.choice(["isolated", "pendant", "codominant", "dominant"])
        ref = rng.randrange(i) if kind in ("pendant", "codominant") else None
        steps.append(MockThresholdStep(kind, ref))
    return MockThresholdScript(tuple(steps), tuple(range(n)))


# ---------------------------------------------------------------------------
# family plumbing

def _require(args, *names) -> None:
    for name in names:
        if getattr(args, name, None) is None:
            raise _CliError(f"--family {args.family} requires --{name.replace('_', '-')}",
                            EXIT_PARSE)


def _build_family(args) -> Graph:
    fam = args.family
    try:
        if fam == "poc":
            _require(args, "n", "k")
            return build_power_of_cycle(args.n, args.k)
        if fam == "circulant":
            _require(args, "n", "distances")
            dists = [int(x) for x in args.distances.split(",") if x]
            return build_circulant(args.n, dists)
        if fam == "unitary":
            _require(args, "n")
            return build_unitary_cayley(args.n)
        if fam == "complete":
            _require(args, "n")
            n = args.n
            return Graph(n, frozenset((i, j) for i in range(n)
                                      for j in range(i + 1, n)))
        if fam == "kneser":
            _require(args, "n", "k")
            return build_kneser(args.n, args.k)
        if fam == "odd":
            _require(args, "m")
            return build_odd_graph(args.m)
        if fam == "mock-threshold":
            return build_mock_threshold(_load_script(args))
    except (ValueError, ConstructionError) as exc:
        raise _CliError(str(exc), EXIT_PRECONDITION)
    raise _CliError(f"unknown family {fam!r}", EXIT_PARSE)


def _load_script(args) -> MockThresholdScript:
    if getattr(args, "script", None):
        return script_from_json(_read(args.script))
    if getattr(args, "random_n", None):
        rng = random.Random(args.seed)
        return random_script(rng, args.random_n)
    raise _CliError("mock-threshold needs --script FILE or --random-n N",
                    EXIT_PARSE)


# ---------------------------------------------------------------------------
# subcommands

def _cmd_build(args) -> int:
    if args.family == "mock-threshold":
        script = _load_script(args)
        G = build_mock_threshold(script)
        if args.emit_script:
            _write(args.emit_script, script_to_json(script))
    elif args.family in ("kneser", "odd"):
        G = _build_family(args)
        if args.family == "odd":
            labels = kneser_vertex_labels(2 * args.m - 1, args.m - 1)
        else:
            labels = kneser_vertex_labels(args.n, args.k)
        _write(args.out, G.to_json(labels))
        _log(args, event="build", family=args.family, n=G.n, m=G.m)
        return 0
    else:
        G = _build_family(args)
    _write(args.out, G.to_json())
    _log(args, event="build", family=args.family, n=G.n, m=G.m)
    return 0


_POC_METHODS = ("base", "block", "augment", "shrink", "grow", "any-odd")


def _color_poc(args) -> tuple[Graph, TotalColoring, dict]:
    _require(args, "n", "method")
    n, k = args.n, args.k
    meta = {"method": f"poc_{args.method.replace('-', '_')}"}
    if args.method == "base":
        if k is not None and k != (n - 2) // 4:
            raise _CliError(f"base method fixes k = (n-2)/4 = {(n - 2) // 4}",
                            EXIT_PRECONDITION)
        M = poc_base(n)
        G = build_power_of_cycle(n, (n - 2) // 4)
        return G, matrix_to_coloring(G, M), meta
    _require(args, "k")
    if args.method == "block":
        M = poc_block(n, k)
        G = build_power_of_cycle(n, k)
        return G, matrix_to_coloring(G, M), meta
    if args.method == "augment":
        c = poc_augment(n, k)
        return build_power_of_cycle(n, k), c, meta
    if args.method == "shrink":
        M = poc_shrink(poc_block(n + 1, k))
        G = build_power_of_cycle(n, k)
        return G, matrix_to_coloring(G, M), meta
    if args.method == "grow":
        from .constructions import poc_grow as _grow
        M = _grow(poc_block(n - 1, k))
        G = build_power_of_cycle(n, k)
        return G, matrix_to_coloring(G, M), meta
    if args.method == "any-odd":
        res = poc_any_odd(n, k)
        meta.update(json.loads(res.envelope()))
        return build_power_of_cycle(n, k), res.coloring, meta
    raise _CliError(f"--method must be one of {', '.join(_POC_METHODS)}",
                    EXIT_PARSE)


def _cmd_color(args) -> int:
    t0 = time.time()
    try:
        if args.family == "poc":
            G, coloring, meta = _color_poc(args)
        elif args.family == "unitary":
            _require(args, "n")
            res = unitary_total(args.n)
            G, coloring = build_unitary_cayley(args.n), res.coloring
            meta = json.loads(res.envelope())
        elif args.family == "complete":
            _require(args, "n")
            from .coloring import complete_total
            G = _build_family(args)
            coloring = complete_total(args.n)
            meta = {"method": "complete_total"}
        elif args.family == "odd":
            _require(args, "m")
            res = odd_graph_total(args.m)
            G, coloring = build_odd_graph(args.m), res.coloring
            meta = json.loads(res.envelope())
        elif args.family == "mock-threshold":
            script = _load_script(args)
            G = build_mock_threshold(script)
            res = mock_threshold_total(G, script)
            coloring = res.coloring
            meta = json.loads(res.envelope())
        else:
            raise _CliError(f"no construction for family {args.family!r}",
                            EXIT_PARSE)
    except BudgetError as exc:
        raise _CliError(str(exc), EXIT_BUDGET)
    except (ConstructionError, ValueError) as exc:
        raise _CliError(str(exc), EXIT_PRECONDITION)

    report = verify(G, coloring)
    if not report.is_valid:
        raise _CliError(f"construction produced an invalid coloring: "
                        f"{report.violations[0]}", EXIT_VERIFY)
    meta.setdefault("colors_used", report.colors_used)
    matrix = coloring_to_matrix(G, coloring)
    if args.out_prefix:
        _write(args.out_prefix + ".matrix.csv", matrix.to_csv())
        _write(args.out_prefix + ".coloring.json", coloring.to_json(G.n))
        _write(args.out_prefix + ".envelope.json", json.dumps(meta, sort_keys=True))
    else:
        sys.stdout.write(matrix.to_csv())
        sys.stdout.write(json.dumps(meta, sort_keys=True) + "\n")
    _log(args, event="color", family=args.family,
         colors_used=report.colors_used, seconds=round(time.time() - t0, 3))
    return 0


def _cmd_verify(args) -> int:
    G = Graph.from_json(_read(args.graph))
    try:
        if args.matrix:
            M = ColorMatrix.from_csv(_read(args.matrix))
            coloring = matrix_to_coloring(G, M)
        else:
            coloring = TotalColoring.from_json(_read(args.coloring))
    except ValueError as exc:
        raise _CliError(str(exc), EXIT_PRECONDITION)
    report = verify(G, coloring)
    out = {"valid": report.is_valid, "colors_used": report.colors_used,
           "violations": [{"kind": v.kind, "witness": list(v.witness)}
                          for v in report.violations[:20]],
           "violation_count": len(report.violations)}
    print(json.dumps(out, sort_keys=True))
    return 0 if report.is_valid else EXIT_VERIFY


def _cmd_oracle(args) -> int:
    if args.graph:
        G = Graph.from_json(_read(args.graph))
    else:
        G = _build_family(args)
    budget = args.budget if args.budget is not None else _default_budget()
    t0 = time.time()
    if args.kind == "edge":
        out = _oracle.chromatic_index_exact(G, budget)
    else:
        out = _oracle.total_chromatic_exact(G, budget)
    _log(args, event="oracle", kind=args.kind, nodes=out.nodes,
         seconds=round(time.time() - t0, 3))
    print(json.dumps({"kind": args.kind, "lower": out.lower,
                      "upper": out.upper, "value": out.value,
                      "nodes": out.nodes, "budget_hit": out.budget_hit},
                     sort_keys=True))
    return EXIT_BUDGET if out.budget_hit else 0


def _cmd_sweep(args) -> int:
    budget = args.budget if args.budget is not None else _default_budget()
    t0 = time.time()
    rows = _oracle.conjecture_sweep(args.nmax, budget=budget, jobs=args.jobs)
    text = _oracle.sweep_to_json(rows) if args.json else _oracle.sweep_to_csv(rows)
    _write(args.out, text)
    _log(args, event="sweep", rows=len(rows),
         seconds=round(time.time() - t0, 3))
    return EXIT_BUDGET if any(r.agrees is None for r in rows) else 0


def _cmd_export(args) -> int:
    try:
        if args.to == "dimacs":
            G = Graph.from_json(_read(args.infile))
            _write(args.out, G.to_dimacs())
        elif args.to == "graph-json":
            G = Graph.from_dimacs(_read(args.infile))
            _write(args.out, G.to_json())
        elif args.to == "coloring-json":
            if not args.graph:
                raise _CliError("matrix conversion needs --graph", EXIT_PARSE)
            G = Graph.from_json(_read(args.graph))
            M = ColorMatrix.from_csv(_read(args.infile))
            _write(args.out, matrix_to_coloring(G, M).to_json(G.n))
        elif args.to == "matrix-csv":
            if not args.graph:
                raise _CliError("matrix conversion needs --graph", EXIT_PARSE)
            G = Graph.from_json(_read(args.graph))
            c = TotalColoring.from_json(_read(args.infile))
            _write(args.out, coloring_to_matrix(G, c).to_csv())
        else:
            raise _CliError(f"unknown target format {args.to!r}", EXIT_PARSE)
    except ValueError as exc:
        raise _CliError(str(exc), EXIT_PRECONDITION)
    return 0


# ---------------------------------------------------------------------------

def _add_family_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--family", choices=["poc", "circulant", "unitary",
                                        "complete", "kneser", "odd",
                                        "mock-threshold"])
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--distances", help="comma separated, for --family circulant")
    p.add_argument("--script", help="mock threshold script JSON file")
    p.add_argument("--random-n", type=int,
                   help="generate a random mock threshold script with <= N vertices")
    p.add_argument("--seed", type=int, default=0)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="totalcoloring",
        description="Total coloring constructions, verification and exact oracles.")
    parser.add_argument("--verbose", action="store_true",
                        help="stream statistics as JSON lines on stderr")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("build", help="write a graph as JSON")
    _add_family_flags(p)
    p.add_argument("--out", default=None)
    p.add_argument("--emit-script", default=None,
                   help="also write the mock threshold script JSON here")
    p.set_defaults(func=_cmd_build)

    p = sub.add_parser("color", help="run a construction and write its coloring")
    _add_family_flags(p)
    p.add_argument("--method", help=f"for --family poc: {', '.join(_POC_METHODS)}")
    p.add_argument("--out-prefix", default=None,
                   help="write PREFIX.matrix.csv, PREFIX.coloring.json, "
                        "PREFIX.envelope.json")
    p.set_defaults(func=_cmd_color)

    p = sub.add_parser("verify", help="check a coloring against a graph")
    p.add_argument("--graph", required=True)
    p.add_argument("--coloring", help="TotalColoring JSON file")
    p.add_argument("--matrix", help="ColorMatrix CSV file")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("oracle", help="exact chromatic search")
    _add_family_flags(p)
    p.add_argument("--graph", help="graph JSON file (overrides family flags)")
    p.add_argument("--kind", choices=["total", "edge"], default="total")
    p.add_argument("--budget", type=int, default=None)
    p.set_defaults(func=_cmd_oracle)

    p = sub.add_parser("sweep", help="compare oracle values with the "
                                     "power-of-cycle prediction")
    p.add_argument("--nmax", type=int, default=13)
    p.add_argument("--budget", type=int, default=None)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--json", action="store_true")
    p.add_argument("--out", default=None)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_sweep)

    p = sub.add_parser("export", help="convert between file formats")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--to", required=True,
                   choices=["dimacs", "graph-json", "coloring-json", "matrix-csv"])
    p.add_argument("--graph", help="graph JSON, needed for matrix conversions")
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_export)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (ValueError, ConstructionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
