"""Seeded property suites over random corpora.

Each suite checks one guarantee on every instance of a reproducible corpus
and returns a :class:`SuiteReport`. The CLI ``verify`` command and the
acceptance tests both run these.

Instance ``i`` of a corpus depends only on ``(seed, i)``, so suites split
across worker processes (``CLIQUEPART_WORKERS``) give identical reports.
"""

from __future__ import annotations

import os
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Callable

from .analysis import verify_inequality_grid
from .clique_solvers import (
    brute_clique_number,
    check_removal_ordering,
    clique_number,
    exact_opt,
    lambda_min,
    lambda_witnesses,
)
from .cograph import is_preceq_greatest, is_preceq_maximal, partition_profiles
from .generators import (
    build_G_ell,
    k_clique_cells,
    k_sequence,
    random_cograph,
    random_graph,
    random_triangle_free_graph,
    tight_family_edges,
)
from .graph_core import CliquePartition, Graph, to_mask
from .matching import brute_matching, max_matching
from .partition_algs import all_executions, edmonds_bound, find_execution, greedy_edmonds, replay

DENSITIES = (0.2, 0.5, 0.8)
WORKERS_ENV = "CLIQUEPART_WORKERS"


@dataclass
class SuiteReport:
    suite: str
    params: dict
    checked: int = 0
    violations: list[dict] = field(default_factory=list)
    details: dict = field(default_factory=dict)
    wall_time: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.violations

    def as_record(self) -> dict:
        return {
            "suite": self.suite,
            "params": self.params,
            "checked": self.checked,
            "violations": self.violations[:20],
            "violation_count": len(self.violations),
            "details": self.details,
            "passed": self.passed,
            "wall_time": round(self.wall_time, 3),
        }


def worker_count() -> int:
    try:
        return max(1, int(os.environ.get(WORKERS_ENV, "1")))
    except ValueError:
        return 1


def _map(fn: Callable, args: list, workers: int | None) -> list:
    workers = worker_count() if workers is None else workers
    if workers <= 1 or len(args) < 2:
        return [fn(a) for a in args]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, args, chunksize=max(1, len(args) // (4 * workers))))


def _instance_rng(seed: int, i: int) -> random.Random:
    return random.Random(f"{seed}:{i}")


def _corpus_n(rng: random.Random, n_max: int) -> int:
    # half the corpus at the largest size, where violations would live
    return n_max if rng.random() < 0.5 else rng.randint(1, n_max)


def corpus_graph(seed: int, i: int, n_max: int, densities=DENSITIES) -> Graph:
    """Instance ``i``: ``n`` in ``1..n_max``, density cycling through ``densities``."""
    rng = _instance_rng(seed, i)
    n = _corpus_n(rng, n_max)
    return random_graph(n, densities[i % len(densities)], rng.randrange(2**32))


def _run_suite(name: str, params: dict, fn: Callable, args: list, workers: int | None) -> SuiteReport:
    t0 = time.perf_counter()
    rep = SuiteReport(name, params)
    for found in _map(fn, args, workers):
        rep.checked += 1
        rep.violations.extend(found)
    rep.wall_time = time.perf_counter() - t0
    return rep


# -- two-approximation of Greedy (both objectives) ----------------------------


def _check_two_approx(arg: tuple[int, int, int]) -> list[dict]:
    seed, i, n_max = arg
    g = corpus_graph(seed, i, n_max)
    opt = exact_opt(g)
    bad = []
    for o in all_executions(g, "greedy").outcomes:
        deleted = g.m - o.edges
        if 2 * o.edges < opt or deleted > 2 * (g.m - opt):
            bad.append({"instance": i, "n": g.n, "edges": g.edges(), "kept": o.edges, "opt": opt})
    return bad


def two_approx(count: int = 500, n_max: int = 10, seed: int = 0, workers: int | None = None) -> SuiteReport:
    args = [(seed, i, n_max) for i in range(count)]
    return _run_suite("two-approx", {"count": count, "n_max": n_max, "seed": seed},
                      _check_two_approx, args, workers)


# -- the 2w'/(w'+1) bound for Greedy Edmonds -------------------------------------


def _check_edmonds(arg: tuple[int, int, int]) -> list[dict]:
    seed, i, n_max = arg
    g = corpus_graph(seed, i, n_max)
    opt = exact_opt(g)
    bound = edmonds_bound(comb(clique_number(g), 2))
    bad = []
    for o in all_executions(g, "greedy_edmonds").outcomes:
        if not opt <= bound * o.edges:
            bad.append({"instance": i, "edges": g.edges(), "n": g.n, "kept": o.edges, "opt": opt,
                        "bound": str(bound)})
    return bad


def edmonds_bound_suite(count: int = 500, n_max: int = 10, seed: int = 0,
                        workers: int | None = None) -> SuiteReport:
    args = [(seed, i, n_max) for i in range(count)]
    return _run_suite("edmonds-bound", {"count": count, "n_max": n_max, "seed": seed},
                      _check_edmonds, args, workers)


# -- Greedy on cographs ----------------------------------------------------------


def corpus_cograph(seed: int, i: int, n_max: int) -> Graph:
    rng = _instance_rng(seed, i)
    return random_cograph(_corpus_n(rng, n_max), rng.randrange(2**32))


def _check_cograph(arg: tuple[int, int, int]) -> list[dict]:
    seed, i, n_max = arg
    g = corpus_cograph(seed, i, n_max)
    opt = exact_opt(g)
    profiles = partition_profiles(g)
    bad = []
    for o in all_executions(g, "greedy").outcomes:
        if o.edges != opt:
            bad.append({"instance": i, "edges": g.edges(), "n": g.n, "kept": o.edges, "opt": opt})
        elif not is_preceq_maximal(g, o.partition, profiles):
            bad.append({"instance": i, "edges": g.edges(), "n": g.n, "not_maximal": o.partition.sizes()})
        elif not is_preceq_greatest(g, o.partition, profiles):
            bad.append({"instance": i, "edges": g.edges(), "n": g.n, "not_greatest": o.partition.sizes()})
    return bad


def cograph_opt(count: int = 500, n_max: int = 9, seed: int = 0, workers: int | None = None) -> SuiteReport:
    args = [(seed, i, n_max) for i in range(count)]
    return _run_suite("cograph-opt", {"count": count, "n_max": n_max, "seed": seed},
                      _check_cograph, args, workers)


# -- Greedy Edmonds is exact without triangles -----------------------------------


def corpus_triangle_free(seed: int, i: int, n_max: int) -> Graph:
    rng = _instance_rng(seed, i)
    return random_triangle_free_graph(_corpus_n(rng, n_max), rng.choice(DENSITIES + (1.0,)),
                                      rng.randrange(2**32))


def _check_triangle_free(arg: tuple[int, int, int]) -> list[dict]:
    seed, i, n_max = arg
    g = corpus_triangle_free(seed, i, n_max)
    opt = exact_opt(g)
    kept = greedy_edmonds(g).edge_count()
    return [] if kept == opt else [{"instance": i, "edges": g.edges(), "n": g.n, "kept": kept, "opt": opt}]


def triangle_free(count: int = 200, n_max: int = 14, seed: int = 0, workers: int | None = None) -> SuiteReport:
    args = [(seed, i, n_max) for i in range(count)]
    return _run_suite("triangle-free", {"count": count, "n_max": n_max, "seed": seed},
                      _check_triangle_free, args, workers)


# -- oracle agreement ---------------------------------------------------------------


def _check_oracles(arg: tuple[int, int, int]) -> list[dict]:
    seed, i, n_max = arg
    densities = tuple(d / 10 for d in range(1, 10))
    g = corpus_graph(seed, i, n_max, densities)
    bad = []
    if len(max_matching(g)) != len(brute_matching(g)):
        bad.append({"instance": i, "check": "matching", "edges": g.edges(), "n": g.n})
    if clique_number(g) != brute_clique_number(g):
        bad.append({"instance": i, "check": "clique", "edges": g.edges(), "n": g.n})
    return bad


def oracles(count: int = 1000, n_max: int = 12, seed: int = 0, workers: int | None = None) -> SuiteReport:
    args = [(seed, i, n_max) for i in range(count)]
    return _run_suite("oracles", {"count": count, "n_max": n_max, "seed": seed},
                      _check_oracles, args, workers)


def random_partition(n: int, rng: random.Random) -> CliquePartition:
    """A random set partition of ``1..n`` (as blocks of some cluster graph)."""
    labels = [rng.randrange(max(1, n // 2) + 1) for _ in range(n)]
    groups: dict[int, list[int]] = {}
    for v, lab in zip(range(1, n + 1), labels):
        groups.setdefault(lab, []).append(v)
    return CliquePartition.of(groups.values(), n)


def _check_lambda(arg: tuple[int, int, int]) -> list[dict]:
    seed, i, n_max = arg
    rng = _instance_rng(seed, i)
    py = random_partition(_corpus_n(rng, n_max), rng)
    bad = []
    for k in range(py.graph_n + 1):
        if lambda_min(py, k, "brute") != lambda_min(py, k, "greedy"):
            bad.append({"instance": i, "check": "lambda", "blocks": py.as_lists(), "k": k})
        if py.graph_n <= 10:
            for c in lambda_witnesses(py, k):
                if not check_removal_ordering(py, c):
                    bad.append({"instance": i, "check": "ordering", "blocks": py.as_lists(),
                                "c": sorted(c)})
    return bad


def lambda_suite(count: int = 200, n_max: int = 12, seed: int = 0, workers: int | None = None) -> SuiteReport:
    args = [(seed, i, n_max) for i in range(count)]
    return _run_suite("lambda", {"count": count, "n_max": n_max, "seed": seed},
                      _check_lambda, args, workers)


# -- polynomial grid ------------------------------------------------------------------


def ineq(ell_max: int = 200) -> SuiteReport:
    t0 = time.perf_counter()
    res = verify_inequality_grid(ell_max)
    rep = SuiteReport("ineq", {"ell_max": ell_max}, checked=res.points, details=res.as_record())
    rep.violations = [{"i": i, "k": k, "ell": ell} for i, k, ell in res.violations]
    for flag in ("diagonal_ok", "root_ok", "concavity_ok", "leading_negative", "k2_ok"):
        if not getattr(res, flag):
            rep.violations.append({"check": flag})
    rep.wall_time = time.perf_counter() - t0
    return rep


# -- tight family -------------------------------------------------------------------------


def tight_family_check(ell: int, search: bool = True) -> dict:
    """Everything checkable about ``G_ell`` without an exponential oracle.

    Replays the packed cliques as Greedy Edmonds choices and compares the
    resulting edge count, and the matching size of the white remainder, with
    the closed forms.
    """
    g = build_G_ell(ell)
    fam_seq = k_sequence(ell)
    fam = tight_family_edges(ell)
    replayed = replay(g, "greedy_edmonds", k_clique_cells(ell))
    used = to_mask(v for c in k_clique_cells(ell) for v in c)
    matching = len(max_matching(g, g.full_mask & ~used))
    out = {
        "ell": ell,
        "n": g.n,
        "m": g.m,
        "k_seq": list(fam_seq.k_seq),
        "omega": clique_number(g),
        "opt": fam.opt,
        "f": fam.greedy_f,
        "ratio_product": str(fam.ratio_product),
        "replay_edges": replayed.edge_count(),
        "matching": matching,
        "matching_formula": ell * (ell - 1) - sum(fam_seq.k_seq),
    }
    if search:
        out["search_found"] = find_execution(g, "greedy_edmonds", fam.greedy_f) is not None
    if g.n <= 16:
        out["exact_opt"] = exact_opt(g)
    return out


def tight_family(ell: int = 6) -> SuiteReport:
    t0 = time.perf_counter()
    d = tight_family_check(ell)
    rep = SuiteReport("tight-family", {"ell": ell}, checked=1, details=d)
    problems = []
    if d["omega"] != ell:
        problems.append("omega")
    if d["replay_edges"] != d["f"]:
        problems.append("replay")
    if d["matching"] != d["matching_formula"]:
        problems.append("matching")
    if not d.get("search_found", True):
        problems.append("search")
    if d.get("exact_opt", d["opt"]) != d["opt"]:
        problems.append("opt")
    rep.violations = [{"check": p} for p in problems]
    rep.wall_time = time.perf_counter() - t0
    return rep


def ratio_band(ell_max: int = 100, tol: Fraction = Fraction(1, 50)) -> dict:
    """Where ``ratio_product`` enters and stays inside ``[1 - tol, 1]``."""
    values = {ell: tight_family_edges(ell).ratio_product for ell in range(3, ell_max + 1)}
    outside = [ell for ell, r in values.items() if not 1 - tol <= r <= 1]
    drops = [ell for ell in range(4, ell_max + 1) if values[ell] < values[ell - 1]]
    return {
        "ell_max": ell_max,
        "enters_band_at": (max(outside) + 1) if outside else 3,
        "last_outside": max(outside) if outside else None,
        "never_above_one": all(r <= 1 for r in values.values()),
        "final": values[ell_max],
        "pointwise_drops": drops,
    }


SUITES = {
    "two-approx": two_approx,
    "edmonds-bound": edmonds_bound_suite,
    "cograph-opt": cograph_opt,
    "triangle-free": triangle_free,
    "oracles": oracles,
    "lambda": lambda_suite,
    "ineq": ineq,
    "tight-family": tight_family,
}
