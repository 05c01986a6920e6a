"""Greedy clique-partition algorithms and tools for analysing them.

``greedy`` repeatedly removes a maximum clique. ``smart_greedy`` only
considers maximum cliques with the fewest edges leaving them. ``greedy_edmonds``
behaves like ``greedy`` while the residual clique number is at least 3 and
finishes with a maximum matching once it drops to 2 or below.

None of them fixes which maximum clique to take when several qualify. A
:data:`TieBreakRule` picks one for a single run; :func:`all_executions`
follows every choice.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Callable, Iterable, Literal, Sequence

from .clique_solvers import (
    GuardExceeded,
    clique_number,
    exact_opt,
    max_clique_mask,
    max_clique_masks,
)
from .graph_core import CliquePartition, Graph, bits, cut_size, to_mask, validate_partition
from .matching import max_matching
from .perm_graph import Labeling, Permutation, build_permutation_graph

TieBreakRule = Literal["lexicographic", "min_delta_then_lex", "branch_all"]
Algorithm = Literal["greedy", "smart_greedy", "greedy_edmonds"]

TIE_RULES = ("lexicographic", "min_delta_then_lex")
ALGORITHMS = ("greedy", "smart_greedy", "greedy_edmonds")
ALL_EXECUTIONS_MAX_N = 12


def _min_delta(g: Graph, masks: list[int], within: int) -> list[int]:
    cuts = [cut_size(g, m, within) for m in masks]
    low = min(cuts)
    return [m for m, c in zip(masks, cuts) if c == low]


def _pick(g: Graph, within: int, tie: str, smart: bool) -> int:
    if tie == "branch_all":
        raise ValueError("branch_all is not a single-run rule; use all_executions")
    if tie not in TIE_RULES:
        raise ValueError(f"unknown tie-break rule {tie!r}")
    if tie == "lexicographic" and not smart:
        return max_clique_mask(g, within)
    # max_clique_masks is already in lexicographic order
    return _min_delta(g, max_clique_masks(g, within), within)[0]


def _run(g: Graph, tie: str, smart: bool, matching_at_two: bool) -> CliquePartition:
    blocks: list[int] = []
    left = g.full_mask
    last_omega = None
    while left:
        omega = clique_number(g, left)
        assert last_omega is None or omega <= last_omega, "clique number went up"
        last_omega = omega
        if matching_at_two and omega <= 2:
            blocks.extend(_matching_finish(g, left))
            break
        x = _pick(g, left, tie, smart)
        blocks.append(x)
        left &= ~x
    return CliquePartition(tuple(frozenset(bits(b)) for b in blocks), g.n)


def _matching_finish(g: Graph, left: int) -> list[int]:
    pairs = sorted(max_matching(g, left))
    out = [1 << u | 1 << v for u, v in pairs]
    covered = to_mask(v for e in pairs for v in e)
    out.extend(1 << v for v in bits(left & ~covered))
    return out


def greedy(g: Graph, tie: TieBreakRule = "lexicographic") -> CliquePartition:
    """Remove maximum cliques until nothing is left; blocks in removal order."""
    return _run(g, tie, smart=False, matching_at_two=False)


def smart_greedy(g: Graph, tie: TieBreakRule = "lexicographic") -> CliquePartition:
    """Greedy restricted to maximum cliques with the smallest cut ``|δ(X)|``."""
    return _run(g, tie, smart=True, matching_at_two=False)


def greedy_edmonds(g: Graph, tie: TieBreakRule = "lexicographic") -> CliquePartition:
    """Greedy while the clique number is at least 3, then a maximum matching.

    Matching edges follow the cliques as 2-blocks, then the leftover vertices
    as singletons.
    """
    return _run(g, tie, smart=False, matching_at_two=True)


def run_algorithm(g: Graph, alg: str, tie: TieBreakRule = "lexicographic") -> CliquePartition:
    if alg == "greedy":
        return greedy(g, tie)
    if alg == "smart_greedy":
        return smart_greedy(g, tie)
    if alg == "greedy_edmonds":
        return greedy_edmonds(g, tie)
    raise ValueError(f"unknown algorithm {alg!r}")


# -- exploring every tie-break --------------------------------------------------


@dataclass(frozen=True)
class Outcome:
    partition: CliquePartition
    edges: int


@dataclass(frozen=True)
class Executions:
    outcomes: list[Outcome]

    @property
    def edge_counts(self) -> list[int]:
        return sorted({o.edges for o in self.outcomes})

    @property
    def worst(self) -> Outcome:
        return min(self.outcomes, key=lambda o: o.edges)

    @property
    def best(self) -> Outcome:
        return max(self.outcomes, key=lambda o: o.edges)


def _options(g: Graph, left: int, alg: str) -> list[int]:
    masks = max_clique_masks(g, left)
    if alg == "smart_greedy":
        masks = _min_delta(g, masks, left)
    return masks


def _explore(
    g: Graph,
    alg: str,
    accept: Callable[[CliquePartition], bool] | None = None,
) -> list[CliquePartition]:
    """Depth-first walk over every tie-break branch.

    States are identified by (residual vertex set, sorted block sizes so far):
    two branches that agree on both have the same futures and the same
    partition profile, so only the first is expanded. With ``accept`` the
    walk stops at the first finished partition it approves of.
    """
    if alg not in ALGORITHMS:
        raise ValueError(f"unknown algorithm {alg!r}")
    seen: set[tuple[int, tuple[int, ...]]] = set()
    results: list[CliquePartition] = []

    def finish(chosen: list[int]) -> bool:
        p = CliquePartition(tuple(frozenset(bits(b)) for b in chosen), g.n)
        if accept is None:
            results.append(p)
            return False
        if accept(p):
            results.append(p)
            return True
        return False

    def walk(left: int, chosen: list[int]) -> bool:
        key = (left, tuple(sorted((b.bit_count() for b in chosen), reverse=True)))
        if key in seen:
            return False
        seen.add(key)
        if not left:
            return finish(chosen)
        if alg == "greedy_edmonds" and clique_number(g, left) <= 2:
            return finish(chosen + _matching_finish(g, left))
        for x in _options(g, left, alg):
            if walk(left & ~x, chosen + [x]):
                return True
        return False

    walk(g.full_mask, [])
    return results


def all_executions(g: Graph, alg: Algorithm) -> Executions:
    """Every partition reachable by some sequence of tie-break choices.

    For ``greedy_edmonds`` the final matching is not branched on: any maximum
    matching gives the same edge count.
    """
    if g.n > ALL_EXECUTIONS_MAX_N:
        raise GuardExceeded(f"all_executions limited to n <= {ALL_EXECUTIONS_MAX_N}, got {g.n}")
    return Executions([Outcome(p, p.edge_count()) for p in _explore(g, alg)])


def find_execution(g: Graph, alg: Algorithm, edges: int) -> CliquePartition | None:
    """Some execution of ``alg`` ending with exactly ``edges`` kept, or ``None``.

    No size guard; the search stops at the first hit, so use it on
    structured instances where the branching is narrow.
    """
    found = _explore(g, alg, accept=lambda p: p.edge_count() == edges)
    return found[0] if found else None


def replay(g: Graph, alg: Algorithm, cliques: Iterable[Iterable[int]]) -> CliquePartition:
    """Run ``alg`` taking the given cliques, in order, as its tie-break choices.

    Raises ``ValueError`` if some clique is not an allowed choice at its
    step. Any steps left after the list runs out use the lexicographic rule.
    """
    chosen: list[int] = []
    left = g.full_mask
    for step, c in enumerate(cliques):
        x = to_mask(c)
        if alg == "greedy_edmonds" and clique_number(g, left) <= 2:
            raise ValueError(f"step {step}: residual clique number is at most 2, matching phase")
        if x & ~left or x not in _options(g, left, alg):
            raise ValueError(f"step {step}: {sorted(c)} is not an allowed choice")
        chosen.append(x)
        left &= ~x
    while left:
        if alg == "greedy_edmonds" and clique_number(g, left) <= 2:
            chosen.extend(_matching_finish(g, left))
            break
        x = _pick(g, left, "lexicographic", alg == "smart_greedy")
        chosen.append(x)
        left &= ~x
    return CliquePartition(tuple(frozenset(bits(b)) for b in chosen), g.n)


# -- the ordering heuristic on permutation graphs ------------------------------


def ordering_heuristic(
    p: Permutation | Sequence[int],
    order: Literal["index", "sequence"] = "index",
    labeling: Labeling = "value",
) -> CliquePartition:
    """Insert vertices one at a time into the largest block they fit.

    ``order="index"`` visits vertices ``1..n``; ``order="sequence"`` visits
    ``pi(1), ..., pi(n)``. A vertex joins the largest existing block all of
    whose members are its neighbours (earliest block on ties), otherwise it
    starts a new block.
    """
    p = p if isinstance(p, Permutation) else Permutation.of(p)
    g = build_permutation_graph(p, labeling)
    if order == "index":
        visit = list(range(1, p.n + 1))
    elif order == "sequence":
        visit = list(p.seq)
    else:
        raise ValueError(f"unknown order {order!r}")
    blocks: list[int] = []
    for v in visit:
        fits = [i for i, b in enumerate(blocks) if b & ~g.adj[v] == 0]
        if fits:
            i = max(fits, key=lambda i: (blocks[i].bit_count(), -i))
            blocks[i] |= 1 << v
        else:
            blocks.append(1 << v)
    return CliquePartition(tuple(frozenset(bits(b)) for b in blocks), p.n)


# -- bound verification -----------------------------------------------------------


@dataclass(frozen=True)
class RatioReport:
    opt_edges: int
    alg_edges: int
    omega_prime: int
    bound: Fraction
    satisfied: bool
    two_approx: bool
    deletion_two_approx: bool
    deleted: int

    @property
    def ratio(self) -> Fraction | None:
        return Fraction(self.opt_edges, self.alg_edges) if self.alg_edges else None


def edmonds_bound(omega_prime: int) -> Fraction:
    return Fraction(2 * omega_prime, omega_prime + 1)


def verify_bound(g: Graph, p: CliquePartition, opt: int | None = None) -> RatioReport:
    """Check ``p`` against the exact optimum.

    ``satisfied`` is ``OPT <= 2w'/(w'+1) * |E(p)|`` in exact rational
    arithmetic. ``two_approx`` is ``2|E(p)| >= OPT`` and
    ``deletion_two_approx`` is ``deleted(p) <= 2 * (m - OPT)``.
    """
    check = validate_partition(g, p)
    if not check:
        raise ValueError(f"invalid partition: {check.reason} {check.detail}")
    if opt is None:
        opt = exact_opt(g)
    alg = p.edge_count()
    wp = comb(clique_number(g), 2)
    bound = edmonds_bound(wp)
    deleted = g.m - alg
    return RatioReport(
        opt_edges=opt,
        alg_edges=alg,
        omega_prime=wp,
        bound=bound,
        satisfied=opt <= bound * alg,
        two_approx=2 * alg >= opt,
        deletion_two_approx=deleted <= 2 * (g.m - opt),
        deleted=deleted,
    )

