"""Command-line front end.

Exit codes: 0 success, 1 usage error, 2 contract or resource error,
3 structural-property violation. Machine-readable results go to stdout,
prose to stderr.
"""

from __future__ import annotations

import argparse
import sys

from .conflict import build_conflict_graph
from .errors import ConalignError, StructuralViolation
from .generate import GenParams, generate_text
from .model import parse_instance, serialize_alignment
from .oracle import OracleLimit, brute_force_best
from .solvers import (
    DEFAULT_BUDGET,
    bounded_search_fpt,
    chain_approx,
    exact_mis,
    greedy_clawfree,
    kfree_fpt,
    ramsey_clique_removal,
)
from .structure import check_all
from .validate import PRESETS

EXIT_OK, EXIT_USAGE, EXIT_ERROR, EXIT_VIOLATION = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def _solver(value: str) -> tuple[str, int | None]:
    name, _, arg = value.partition("=")
    if name in ("exact", "chain", "ramsey", "greedy") and not arg:
        return name, None
    if name in ("fpt", "kfree") and arg.isdigit():
        return name, int(arg)
    raise argparse.ArgumentTypeError(
        f"unknown solver {value!r}; use exact, fpt=<k>, kfree=<k>, chain, ramsey or greedy"
    )


def cmd_align(args) -> int:
    inst = parse_instance(_read(args.file))
    cg = build_conflict_graph(inst)
    name, k = args.solver
    if name == "exact":
        res = exact_mis(cg, args.budget)
    elif name == "chain":
        res = chain_approx(inst, cg, extend=not args.no_extend)
    elif name == "ramsey":
        res, _ = ramsey_clique_removal(cg)
    elif name == "greedy":
        res = greedy_clawfree(cg)
    elif name == "fpt":
        res = bounded_search_fpt(cg, k)
    else:
        res = kfree_fpt(cg, k, inst.m1 ** 2 + 1)
    if res is None:
        print(f"method {name}")
        print(f"notfound {k}")
        print(f"no independent set of size {k} in the conflict graph", file=sys.stderr)
        return EXIT_OK
    print(f"method {res.method}")
    print(serialize_alignment(res.alignment, inst))
    print(f"{res.size} c4s chosen from {cg.n}", file=sys.stderr)
    return EXIT_OK


def cmd_oracle(args) -> int:
    inst = parse_instance(_read(args.file))
    best = brute_force_best(inst, OracleLimit(args.limit))
    print(serialize_alignment(best, inst))
    return EXIT_OK


def cmd_check(args) -> int:
    inst = parse_instance(_read(args.file))
    report = check_all(inst)
    print(report.to_kv() if args.format == "kv" else report.to_text())
    if report.violations:
        print("structural violation; instance and witnesses follow", file=sys.stderr)
        print(report.bug_report(), file=sys.stderr)
        return EXIT_VIOLATION
    return EXIT_OK


def cmd_gen(args) -> int:
    params = GenParams(
        n1=args.n1,
        n2=args.n2,
        p1=args.p1,
        p2=args.p2,
        m1_cap=args.m1,
        m2_cap=args.m2,
        g1_acyclic=args.acyclic_g1,
        max_degree_cap=args.max_degree,
        seed=args.seed,
        p_sim=args.p_sim,
        sim_limit=args.sim_limit,
    )
    sys.stdout.write(generate_text(params))
    return EXIT_OK


def cmd_conflict(args) -> int:
    cg = build_conflict_graph(parse_instance(_read(args.file)))
    if args.dot:
        print(cg.to_dot())
    else:
        print(f"c4s {cg.n}")
        print(f"conflicts {cg.m}")
        print(f"max_degree {cg.max_degree}")
    return EXIT_OK


def cmd_corpus(args) -> int:
    names = list(PRESETS) if args.preset == "all" else [args.preset]
    ok = True
    for name in names:
        fn, default = PRESETS[name]
        res = fn(args.count or default, args.seed)
        print(f"{name} {'pass' if res.passed else 'fail'} {res.checked} {len(res.failures)}")
        print(res.summary(), file=sys.stderr)
        for msg in res.failures:
            print(f"  {msg}", file=sys.stderr)
        ok &= res.passed
    return EXIT_OK if ok else EXIT_VIOLATION


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="conalign", description="Constrained graph alignment via conflict graphs.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    a = sub.add_parser("align", help="solve an instance")
    a.add_argument("file", help="instance file or '-' for stdin")
    a.add_argument("--solver", type=_solver, default=("exact", None),
                   help="exact | fpt=<k> | kfree=<k> | chain | ramsey | greedy")
    a.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="node budget for exact")
    a.add_argument("--no-extend", action="store_true", help="chain: skip greedy extension")
    a.set_defaults(func=cmd_align)

    o = sub.add_parser("oracle", help="brute-force optimum")
    o.add_argument("file")
    o.add_argument("--limit", type=int, default=OracleLimit().max_sim_edges)
    o.set_defaults(func=cmd_oracle)

    c = sub.add_parser("check", help="structural report")
    c.add_argument("file")
    c.add_argument("--format", choices=("text", "kv"), default="text")
    c.set_defaults(func=cmd_check)

    g = sub.add_parser("gen", help="seeded random instance")
    g.add_argument("--n1", type=int, required=True)
    g.add_argument("--n2", type=int, required=True)
    g.add_argument("--p1", type=float, required=True)
    g.add_argument("--p2", type=float, required=True)
    g.add_argument("--m1", type=int, required=True, help="similarity-degree cap on V1")
    g.add_argument("--m2", type=int, required=True, help="similarity-degree cap on V2")
    g.add_argument("--acyclic-g1", action="store_true")
    g.add_argument("--max-degree", type=int, default=None)
    g.add_argument("--p-sim", type=float, default=1.0)
    g.add_argument("--sim-limit", type=int, default=None)
    g.add_argument("--seed", type=int, required=True)
    g.set_defaults(func=cmd_gen)

    f = sub.add_parser("conflict", help="conflict graph summary or DOT")
    f.add_argument("file")
    f.add_argument("--dot", action="store_true")
    f.set_defaults(func=cmd_conflict)

    r = sub.add_parser("corpus", help="run a seeded validation corpus")
    r.add_argument("--preset", required=True, choices=[*PRESETS, "all"])
    r.add_argument("--count", type=int, default=None)
    r.add_argument("--seed", type=int, default=1)
    r.set_defaults(func=cmd_corpus)
    return p


def run(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except StructuralViolation as exc:
        print(f"structural violation: {exc} witness={exc.witness}", file=sys.stderr)
        return EXIT_VIOLATION
    except (ConalignError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
