"""Command-line front end: ``gen``, ``solve``, ``verify`` and ``bench``.

Every command writes one JSON record per line to stdout (``--csv`` switches
``solve`` and ``bench`` to CSV). Exit status is 0 on success, 1 when a
verification suite finds a violation, and 2 on usage or parse errors.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
import time
from pathlib import Path
from typing import Sequence

from . import suites
from .clique_solvers import EXACT_PARTITION_MAX_N, GuardExceeded, exact_partition
from .generators import (
    build_G_ell,
    fixture,
    random_cograph,
    random_graph,
    random_permutation,
)
from .graph_core import Graph, GraphFormatError, format_edge_list, parse_edge_list
from .partition_algs import ALGORITHMS, TIE_RULES, run_algorithm, verify_bound
from .perm_graph import Permutation, build_permutation_graph, format_permutation, parse_permutation

SCHEMA_VERSION = 1
FAMILIES = ("tight", "p4_path", "seven_vertex", "staircase", "zigzag", "random", "random-cograph",
            "random-perm")

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _emit(record: dict) -> None:
    sys.stdout.write(json.dumps(record, sort_keys=True) + "\n")


# -- gen -----------------------------------------------------------------------


def generate(args: argparse.Namespace) -> Graph | Permutation:
    fam = args.family
    if fam == "tight":
        if args.ell is None:
            raise UsageError("tight needs --ell")
        return build_G_ell(args.ell)
    if fam in ("staircase", "zigzag"):
        if args.k is None:
            raise UsageError(f"{fam} needs --k")
        return fixture(fam, args.k)
    if fam in ("p4_path", "seven_vertex"):
        return fixture(fam)
    if args.n is None:
        raise UsageError(f"{fam} needs --n")
    if fam == "random":
        return random_graph(args.n, args.density, args.seed)
    if fam == "random-cograph":
        return random_cograph(args.n, args.seed)
    if fam == "random-perm":
        return random_permutation(args.n, args.seed)
    raise UsageError(f"unknown family {fam!r}")


def cmd_gen(args: argparse.Namespace) -> int:
    inst = generate(args)
    if isinstance(inst, Permutation):
        text = format_permutation(inst) if args.as_perm else format_edge_list(build_permutation_graph(inst))
    else:
        if args.as_perm:
            raise UsageError(f"{args.family} is not a permutation family")
        text = format_edge_list(inst)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


# -- solve -----------------------------------------------------------------------


def read_instance(path: str) -> Graph:
    """Edge list, or a ``perm`` file which is turned into its value-labeled graph."""
    text = sys.stdin.read() if path == "-" else Path(path).read_text()
    if text.lstrip().startswith("perm"):
        return build_permutation_graph(parse_permutation(text))
    return parse_edge_list(text)


def solve_record(g: Graph, alg: str, tie: str, oracle: bool, instance: str) -> dict:
    t0 = time.perf_counter()
    if alg == "exact":
        p = exact_partition(g)
    else:
        p = run_algorithm(g, alg, tie)
    wall = time.perf_counter() - t0
    kept = p.edge_count()
    rec = {
        "schema": SCHEMA_VERSION,
        "instance": instance,
        "n": g.n,
        "m": g.m,
        "algorithm": alg,
        "tie": tie if alg != "exact" else None,
        "blocks": p.as_lists(),
        "edges_kept": kept,
        "edges_deleted": g.m - kept,
        "opt": None,
        "bound": None,
        "satisfied": None,
        "wall_time": round(wall, 6),
    }
    if oracle:
        if g.n > EXACT_PARTITION_MAX_N:
            raise GuardExceeded(f"oracle limited to n <= {EXACT_PARTITION_MAX_N}")
        rep = verify_bound(g, p)
        rec.update(opt=rep.opt_edges, bound=str(rep.bound), satisfied=rep.satisfied,
                   two_approx=rep.two_approx, deletion_two_approx=rep.deletion_two_approx)
    return rec


CSV_FIELDS = ("instance", "n", "m", "algorithm", "tie", "edges_kept", "edges_deleted", "opt", "bound",
              "satisfied", "wall_time")


def _write_csv(records: list[dict], fields: Sequence[str]) -> None:
    w = csv.DictWriter(sys.stdout, fieldnames=list(fields), extrasaction="ignore", lineterminator="\n")
    w.writeheader()
    w.writerows(records)


def cmd_solve(args: argparse.Namespace) -> int:
    records = []
    for path in args.paths:
        g = read_instance(path)
        records.append(solve_record(g, args.alg, args.tie, args.oracle, path))
    if args.csv:
        _write_csv(records, CSV_FIELDS)
    else:
        for r in records:
            _emit(r)
    if args.oracle and any(r["satisfied"] is False for r in records):
        return EXIT_VIOLATION
    return EXIT_OK


# -- verify -----------------------------------------------------------------------


def cmd_verify(args: argparse.Namespace) -> int:
    s = args.suite
    if s == "ineq":
        rep = suites.ineq(args.ell_max)
    elif s == "tight-family":
        rep = suites.tight_family(args.ell)
    else:
        kw = {"seed": args.seed, "workers": args.workers}
        if args.count is not None:
            kw["count"] = args.count
        if args.n is not None:
            kw["n_max"] = args.n
        rep = suites.SUITES[s](**kw)
    rec = rep.as_record()
    rec["schema"] = SCHEMA_VERSION
    _emit(rec)
    return EXIT_OK if rep.passed else EXIT_VIOLATION


# -- bench --------------------------------------------------------------------------


def cmd_bench(args: argparse.Namespace) -> int:
    records = []
    for n in args.sizes:
        for rep in range(args.repeat):
            seed = args.seed + rep
            if args.family == "perm":
                g = build_permutation_graph(random_permutation(n, seed))
            else:
                g = random_graph(n, args.density, seed)
            for alg in args.alg:
                t0 = time.perf_counter()
                p = run_algorithm(g, alg)
                records.append({
                    "schema": SCHEMA_VERSION,
                    "instance": f"{args.family}:n={n}:seed={seed}",
                    "n": n,
                    "m": g.m,
                    "algorithm": alg,
                    "tie": "lexicographic",
                    "edges_kept": p.edge_count(),
                    "edges_deleted": g.m - p.edge_count(),
                    "wall_time": round(time.perf_counter() - t0, 6),
                })
    if args.csv:
        _write_csv(records, CSV_FIELDS)
    else:
        for r in records:
            _emit(r)
    return EXIT_OK


# -- parser -------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cliquepart", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="write an instance file")
    gen.add_argument("family", choices=FAMILIES)
    gen.add_argument("--ell", type=int)
    gen.add_argument("--k", type=int)
    gen.add_argument("--n", type=int)
    gen.add_argument("--density", type=float, default=0.5)
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--as-perm", action="store_true", help="emit the permutation instead of its graph")
    gen.add_argument("-o", "--out")
    gen.set_defaults(func=cmd_gen)

    solve = sub.add_parser("solve", help="run an algorithm on instance files")
    solve.add_argument("paths", nargs="+", help="edge-list or perm files ('-' for stdin)")
    solve.add_argument("--alg", choices=ALGORITHMS + ("exact",), default="greedy_edmonds")
    solve.add_argument("--tie", choices=TIE_RULES, default="lexicographic")
    solve.add_argument("--oracle", action="store_true", help="compare against the exact optimum")
    solve.add_argument("--csv", action="store_true")
    solve.set_defaults(func=cmd_solve)

    verify = sub.add_parser("verify", help="run a property suite")
    verify.add_argument("suite", choices=tuple(suites.SUITES))
    verify.add_argument("--count", type=int)
    verify.add_argument("--n", type=int, help="largest instance size in the corpus")
    verify.add_argument("--seed", type=int, default=0)
    verify.add_argument("--ell-max", type=int, default=200)
    verify.add_argument("--ell", type=int, default=6)
    verify.add_argument("--workers", type=int, help=f"worker processes (default ${suites.WORKERS_ENV} or 1)")
    verify.set_defaults(func=cmd_verify)

    bench = sub.add_parser("bench", help="time algorithms on random instances")
    bench.add_argument("--sizes", type=int, nargs="+", default=[20, 40, 80])
    bench.add_argument("--alg", nargs="+", choices=ALGORITHMS, default=list(ALGORITHMS))
    bench.add_argument("--family", choices=("random", "perm"), default="perm")
    bench.add_argument("--density", type=float, default=0.3)
    bench.add_argument("--repeat", type=int, default=3)
    bench.add_argument("--seed", type=int, default=0)
    bench.add_argument("--csv", action="store_true")
    bench.set_defaults(func=cmd_bench)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    try:
        return args.func(args)
    except (UsageError, GraphFormatError, GuardExceeded, ValueError, OSError) as e:
        print(f"cliquepart: error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
