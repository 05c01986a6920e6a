"""Maximum cliques, clique enumeration, and the exact clique-partition oracle.

Every search here works on a *residual* vertex bitset (``within``) so the
greedy algorithms can call them on ``G - X`` without building a new graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Iterable

from .graph_core import CliquePartition, Graph, GuardExceeded, bits, lowest, to_mask
from .perm_graph import DEFAULT_CAP, CliqueList

EXACT_PARTITION_MAX_N = 20
LAMBDA_BRUTE_MAX_N = 18


@dataclass(frozen=True)
class CliqueStats:
    omega: int
    omega_prime: int

    @classmethod
    def of(cls, omega: int) -> CliqueStats:
        return cls(omega, comb(omega, 2))


def _color_bound(adj: tuple[int, ...], cand: int) -> int:
    """Number of colours used by a greedy sequential colouring of ``cand``."""
    colours = 0
    while cand:
        colours += 1
        q = cand
        while q:
            v = lowest(q)
            cand &= ~(1 << v)
            q &= ~(1 << v) & ~adj[v]
    return colours


def max_clique_mask(g: Graph, within: int | None = None) -> int:
    """Lexicographically least maximum clique of ``g[within]``, as a bitset.

    Depth-first search in ascending vertex order with a greedy-colouring
    bound. Because branches are visited in lexicographic order and a branch
    is only cut when it cannot beat the incumbent, the first clique of the
    final size to be reached is the lexicographically least one.
    """
    if within is None:
        within = g.full_mask
    if not within:
        return 0
    adj = g.adj
    best = lowest(within)
    best_mask = 1 << best
    best_size = 1

    def expand(clique: int, size: int, cand: int) -> None:
        nonlocal best_mask, best_size
        while cand:
            if size + cand.bit_count() <= best_size:
                return
            if size + _color_bound(adj, cand) <= best_size:
                return
            v = lowest(cand)
            cand ^= 1 << v
            grown = clique | 1 << v
            nxt = cand & adj[v]
            if nxt:
                expand(grown, size + 1, nxt)
            elif size + 1 > best_size:
                best_mask, best_size = grown, size + 1

    expand(0, 0, within)
    return best_mask


def max_clique(g: Graph, within: Iterable[int] | None = None) -> frozenset[int]:
    """A maximum clique of ``g`` (lexicographically least among maximum cliques)."""
    if g.n == 0:
        raise ValueError("max_clique of the empty graph")
    mask = g.full_mask if within is None else g.check_vertices(within)
    return frozenset(bits(max_clique_mask(g, mask)))


def clique_number(g: Graph, within: int | None = None) -> int:
    return max_clique_mask(g, within).bit_count()


def clique_stats(g: Graph) -> CliqueStats:
    return CliqueStats.of(clique_number(g))


def max_clique_masks(g: Graph, within: int | None = None, cap: int | None = None) -> list[int]:
    """All maximum cliques of ``g[within]`` as bitsets, in lexicographic order.

    Bron-Kerbosch with pivoting, pruned to branches that can still reach
    the clique number. ``cap`` stops the search after that many cliques.
    """
    if within is None:
        within = g.full_mask
    if not within:
        return []
    omega = clique_number(g, within)
    adj = g.adj
    found: list[int] = []

    def bk(r: int, size: int, p: int, x: int) -> bool:
        if not p and not x:
            if size == omega:
                found.append(r)
                return cap is None or len(found) < cap
            return True
        if size + p.bit_count() < omega:
            return True
        pivot = max(bits(p | x), key=lambda u: (adj[u] & p).bit_count())
        for v in bits(p & ~adj[pivot]):
            if not bk(r | 1 << v, size + 1, p & adj[v], x & adj[v]):
                return False
            p &= ~(1 << v)
            x |= 1 << v
        return True

    bk(0, 0, within, 0)
    found.sort(key=lambda m: list(bits(m)))
    return found


def enumerate_max_cliques(g: Graph, cap: int = DEFAULT_CAP, within: int | None = None) -> CliqueList:
    if cap < 1:
        raise ValueError("cap must be at least 1")
    masks = max_clique_masks(g, within, cap + 1)
    truncated = len(masks) > cap
    return CliqueList([frozenset(bits(m)) for m in masks[:cap]], truncated)


def _cliques_containing(adj: tuple[int, ...], v: int, pool: int) -> Iterable[int]:
    """Every clique inside ``pool | {v}`` that contains ``v``."""
    stack = [(1 << v, pool & adj[v])]
    while stack:
        clique, cand = stack.pop()
        yield clique
        while cand:
            u = lowest(cand)
            cand ^= 1 << u
            stack.append((clique | 1 << u, cand & adj[u]))


def exact_partition(g: Graph) -> CliquePartition:
    """An optimal clique partition, by memoised recursion over vertex subsets.

    ``OPT(S) = max over cliques K in S containing min(S) of C(|K|, 2) + OPT(S - K)``.
    """
    if g.n > EXACT_PARTITION_MAX_N:
        raise GuardExceeded(f"exact_partition limited to n <= {EXACT_PARTITION_MAX_N}, got {g.n}")
    adj = g.adj

    @lru_cache(maxsize=None)
    def opt(s: int) -> tuple[int, int]:
        if not s:
            return 0, 0
        v = lowest(s)
        best, choice = -1, 0
        for k in _cliques_containing(adj, v, s):
            value = comb(k.bit_count(), 2) + opt(s & ~k)[0]
            if value > best:
                best, choice = value, k
        return best, choice

    blocks = []
    s = g.full_mask
    while s:
        k = opt(s)[1]
        blocks.append(frozenset(bits(k)))
        s &= ~k
    return CliquePartition(tuple(blocks), g.n)


def exact_opt(g: Graph) -> int:
    return exact_partition(g).edge_count()


# -- lambda(k) and removal orderings --------------------------------------------


def residual_partition(py: CliquePartition, c: Iterable[int]) -> CliquePartition:
    """``Y - C``: the nonempty blocks ``Y \\ C``."""
    c = set(c)
    blocks = tuple(b - c for b in py.blocks if b - c)
    return CliquePartition(blocks, py.graph_n)


def _residual_edges(block_masks: list[int], cmask: int) -> int:
    return sum(comb((b & ~cmask).bit_count(), 2) for b in block_masks)


def lambda_min(py: CliquePartition, k: int, method: str = "brute") -> int:
    """``min |E(Y - C)|`` over all ``k``-subsets ``C`` of the vertex set.

    ``method="brute"`` scans every subset; ``method="greedy"`` removes one
    vertex from a largest remaining block ``k`` times.
    """
    n = py.graph_n
    if not 0 <= k <= n:
        raise ValueError(f"k must lie in 0..{n}")
    if method == "greedy":
        sizes = sorted(py.sizes(), reverse=True)
        for _ in range(k):
            sizes[0] -= 1
            sizes.sort(reverse=True)
        return sum(comb(s, 2) for s in sizes)
    if method != "brute":
        raise ValueError(f"unknown method {method!r}")
    if n > LAMBDA_BRUTE_MAX_N:
        raise GuardExceeded(f"brute lambda limited to n <= {LAMBDA_BRUTE_MAX_N}")
    masks = [to_mask(b) for b in py.blocks]
    return min(_residual_edges(masks, to_mask(c)) for c in combinations(range(1, n + 1), k))


def lambda_witnesses(py: CliquePartition, k: int) -> list[frozenset[int]]:
    """Every ``k``-subset attaining ``lambda_min(py, k)`` (brute force)."""
    n = py.graph_n
    if n > LAMBDA_BRUTE_MAX_N:
        raise GuardExceeded(f"brute lambda limited to n <= {LAMBDA_BRUTE_MAX_N}")
    masks = [to_mask(b) for b in py.blocks]
    scored = [(_residual_edges(masks, to_mask(c)), c) for c in combinations(range(1, n + 1), k)]
    best = min(s for s, _ in scored)
    return [frozenset(c) for s, c in scored if s == best]


def check_removal_ordering(py: CliquePartition, c: Iterable[int]) -> bool:
    """Can ``c`` be deleted one vertex at a time, each from a largest block?

    Greedy: at every step delete any remaining vertex of ``c`` that lies in a
    block of maximum current size.
    """
    left = set(c)
    blocks = [set(b) for b in py.blocks]
    while left:
        top = max(len(b) for b in blocks)
        pick = next((v for b in blocks if len(b) == top for v in sorted(b & left)), None)
        if pick is None:
            return False
        left.discard(pick)
        for b in blocks:
            b.discard(pick)
    return True


def brute_clique_number(g: Graph) -> int:
    """Largest clique by scanning all ``2^n`` vertex subsets; ``n <= 20``.

    ``is_clique[S]`` is built from ``S`` minus its lowest vertex, so the whole
    table costs one bitset test per subset.
    """
    if g.n > EXACT_PARTITION_MAX_N:
        raise GuardExceeded(f"brute clique scan limited to n <= {EXACT_PARTITION_MAX_N}")
    # subsets of {1..n} stored shifted down by one bit
    adj = [a >> 1 for a in g.adj[1:]]
    size = 1 << g.n
    ok = bytearray(size)
    ok[0] = 1
    best = 0
    for s in range(1, size):
        low = (s & -s).bit_length() - 1
        rest = s & (s - 1)
        if ok[rest] and rest & ~adj[low] == 0:
            ok[s] = 1
            c = s.bit_count()
            if c > best:
                best = c
    return best
