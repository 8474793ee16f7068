"""Command-line front end.

Exit codes: 10 yes, 20 no, 0 for successful ``check``/``gen``, 1 for parse
or usage errors, 2 when a resource guard aborts the run, 3 when ``check``
finds a disagreement.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass, field

from .branch import DEFAULT_NODE_BUDGET, NodeBudgetExceeded, solve
from .formula import CnfFormula, DimacsError, FormulaError, Instance, parse_dimacs
from .genoracle import FAMILIES, GenConfig, GenerationError, brute_maxsat, gen_random, hypergraph_to_cnf
from .hitset import GuardError, Hypergraph, HypergraphError, brute_decide, parse_hypergraph, solve_m_minus_k
from .incidence import matching_number

EXIT_YES = 10
EXIT_NO = 20
EXIT_USAGE = 1
EXIT_GUARD = 2
EXIT_DISAGREE = 3

CHECK_KS = (-1, 0, 1, 2, 3)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


@dataclass
class RunReport:
    answer: bool
    k: int
    nu: int
    alpha: int
    num_vars: int
    num_clauses: int
    stats: dict = field(default_factory=dict)
    rule_counts: dict = field(default_factory=dict)
    wall_time: float = 0.0

    def as_dict(self) -> dict:
        return {
            "answer": "yes" if self.answer else "no",
            "k": self.k,
            "nu": self.nu,
            "alpha": self.alpha,
            "num_vars": self.num_vars,
            "num_clauses": self.num_clauses,
            "stats": self.stats,
            "rule_counts": self.rule_counts,
            "wall_time": round(self.wall_time, 6),
        }


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _emit(report: dict, as_json: bool) -> None:
    if as_json:
        print(json.dumps(report, sort_keys=True))
        return
    for key, val in report.items():
        if isinstance(val, dict):
            val = " ".join(f"{k}={v}" for k, v in sorted(val.items())) or "-"
        print(f"{key}: {val}")


def cmd_solve(args) -> int:
    f = parse_dimacs(_read(args.file))
    nu = matching_number(f)
    alpha = args.alpha if args.alpha is not None else nu + args.k
    t0 = time.perf_counter()
    res = solve(
        Instance(f, alpha),
        mode=args.mode,
        seed=args.seed,
        node_budget=args.node_budget,
        parallel=args.parallel,
    )
    report = RunReport(
        answer=res.answer,
        k=res.k,
        nu=res.nu,
        alpha=alpha,
        num_vars=f.num_vars,
        num_clauses=f.m,
        stats=res.stats.as_dict(),
        rule_counts=dict(sorted(res.stats.rule_counts.items())),
        wall_time=time.perf_counter() - t0,
    )
    _emit(report.as_dict(), args.json)
    return EXIT_YES if res.answer else EXIT_NO


def cmd_hitting_set(args) -> int:
    h = parse_hypergraph(_read(args.file))
    t0 = time.perf_counter()
    res = solve_m_minus_k(h, args.k, mode=args.mode, seed=args.seed)
    report = {
        "answer": "yes" if res.answer else "no",
        "k": args.k,
        "num_vertices": h.num_vertices,
        "num_edges": h.m,
        "bound": h.m - args.k,
        "hitting_set": sorted(res.hitting_set) if res.hitting_set is not None else None,
        "method": res.method,
        "wall_time": round(time.perf_counter() - t0, 6),
    }
    _emit(report, args.json)
    return EXIT_YES if res.answer else EXIT_NO


def _check_formula(f: CnfFormula, args, label: str, failures: list) -> int:
    sat = brute_maxsat(f)
    nu = matching_number(f)
    for k in CHECK_KS:
        got = solve(Instance(f, nu + k), mode=args.mode, seed=args.seed).answer
        if got != (sat >= nu + k):
            failures.append(f"{label}: k={k} solver={got} oracle={sat >= nu + k}")
    return len(CHECK_KS)


def _check_hypergraph(h: Hypergraph, args, label: str, failures: list) -> int:
    f = hypergraph_to_cnf(h)
    n = h.num_vertices
    done = 0
    for k in range(0, 4):
        truth = brute_decide(h, k)
        via_hs = solve_m_minus_k(h, k, mode=args.mode, seed=args.seed).answer
        via_cnf = solve(Instance(f, n + k), mode=args.mode, seed=args.seed).answer
        if not truth == via_hs == via_cnf:
            failures.append(f"{label}: k={k} oracle={truth} hitting-set={via_hs} cnf={via_cnf}")
        done += 2
    return done


def cmd_check(args) -> int:
    failures: list[str] = []
    comparisons = 0
    instances = 0
    if args.file:
        text = _read(args.file)
        first = next((ln.split()[0] for ln in text.splitlines() if ln.strip() and not ln.startswith("c")), "")
        if first == "h":
            comparisons += _check_hypergraph(parse_hypergraph(text), args, args.file, failures)
        else:
            comparisons += _check_formula(parse_dimacs(text), args, args.file, failures)
        instances = 1
    else:
        for i in range(args.count):
            cfg = GenConfig(args.seed + i, args.n, args.m, (args.min_len, args.max_len), args.family)
            inst = gen_random(cfg)
            label = f"{args.family} seed={cfg.seed}"
            if isinstance(inst, Hypergraph):
                comparisons += _check_hypergraph(inst, args, label, failures)
            else:
                comparisons += _check_formula(inst, args, label, failures)
            instances += 1
    for line in failures:
        print(f"DISAGREE {line}", file=sys.stderr)
    report = {"instances": instances, "comparisons": comparisons, "disagreements": len(failures)}
    _emit(report, args.json)
    return EXIT_DISAGREE if failures else 0


def cmd_gen(args) -> int:
    cfg = GenConfig(args.seed, args.n, args.m, (args.min_len, args.max_len), args.family)
    inst = gen_random(cfg)
    text = inst.to_text() if isinstance(inst, Hypergraph) else inst.to_dimacs()
    if args.output in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="matchsat", description="MaxSat above the matching number: decide sat(F) >= alpha.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp, json_flag=True):
        sp.add_argument("--mode", choices=("randomized", "exact"), default="randomized")
        sp.add_argument("--seed", type=int, default=0)
        if json_flag:
            sp.add_argument("--json", action="store_true", help="print a JSON report")

    s = sub.add_parser("solve", help="decide sat(F) >= alpha for a DIMACS CNF file")
    s.add_argument("file")
    target = s.add_mutually_exclusive_group(required=True)
    target.add_argument("--alpha", type=int)
    target.add_argument("--k", type=int, help="alpha = nu(F) + K")
    common(s)
    s.add_argument("--parallel", action="store_true")
    s.add_argument("--node-budget", type=int, default=DEFAULT_NODE_BUDGET)
    s.set_defaults(func=cmd_solve)

    h = sub.add_parser("hitting-set", help="decide whether a hypergraph has a hitting set of size <= m - K")
    h.add_argument("file")
    h.add_argument("--k", type=int, required=True)
    common(h)
    h.set_defaults(func=cmd_hitting_set)

    def gen_args(sp):
        sp.add_argument("--family", choices=FAMILIES, default="uniform")
        sp.add_argument("--n", type=int, default=8, help="variables (vertices)")
        sp.add_argument("--m", type=int, default=16, help="clauses (edges)")
        sp.add_argument("--min-len", type=int, default=1)
        sp.add_argument("--max-len", type=int, default=4)

    c = sub.add_parser("check", help="cross-check the solver against brute force")
    src = c.add_mutually_exclusive_group(required=True)
    src.add_argument("--file")
    src.add_argument("--family", choices=FAMILIES)
    c.add_argument("--n", type=int, default=8)
    c.add_argument("--m", type=int, default=16)
    c.add_argument("--min-len", type=int, default=1)
    c.add_argument("--max-len", type=int, default=4)
    c.add_argument("--count", type=int, default=100)
    common(c)
    c.set_defaults(func=cmd_check)

    g = sub.add_parser("gen", help="emit a random instance")
    gen_args(g)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("-o", "--output")
    g.set_defaults(func=cmd_gen)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (DimacsError, FormulaError, HypergraphError, GenerationError, OSError) as exc:
        print(f"matchsat: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (NodeBudgetExceeded, GuardError) as exc:
        print(f"matchsat: aborted: {exc}", file=sys.stderr)
        return EXIT_GUARD


if __name__ == "__main__":
    sys.exit(main())
