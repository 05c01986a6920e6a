"""Cographs: cotree decomposition, the dominance order on clique partitions,
and random cograph generation.

The dominance order compares the block sizes of two clique partitions sorted
from largest to smallest: ``X <= Y`` when every prefix sum of ``X`` is at most
the matching prefix sum of ``Y``. Past the last block a prefix sum stays at
``n``. The number of edges inside blocks is monotone in this order, so a
partition dominating every other one is optimal. A partition that is merely
undominated need not be (``(4, 3)`` against ``(5, 1, 1)`` on seven vertices
is incomparable). On a cograph every Greedy output dominates every other
partition.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import accumulate, combinations

from .graph_core import CliquePartition, Graph, lowest


@dataclass(frozen=True)
class Cotree:
    kind: str  # "leaf", "union" or "join"
    vertex: int = 0
    children: tuple[Cotree, ...] = field(default=())

    def leaves(self) -> list[int]:
        if self.kind == "leaf":
            return [self.vertex]
        return [v for c in self.children for v in c.leaves()]

    def __str__(self) -> str:
        if self.kind == "leaf":
            return str(self.vertex)
        op = " + " if self.kind == "union" else " * "
        return "(" + op.join(map(str, self.children)) + ")"


def _components(adj: tuple[int, ...], within: int, complement: bool) -> list[int]:
    """Connected components of ``g[within]`` or of its complement, as bitsets."""
    comps = []
    left = within
    while left:
        start = lowest(left)
        comp = 1 << start
        left &= ~comp
        frontier = comp
        while frontier:
            v = lowest(frontier)
            frontier &= ~(1 << v)
            reach = left & (~adj[v] if complement else adj[v])
            left &= ~reach
            comp |= reach
            frontier |= reach
        comps.append(comp)
    return comps


def decompose_cograph(g: Graph) -> Cotree | None:
    """The cotree of ``g``, or ``None`` if ``g`` is not a cograph."""
    adj = g.adj

    def build(s: int) -> Cotree | None:
        if s & (s - 1) == 0:
            return Cotree("leaf", lowest(s))
        for kind, complement in (("union", False), ("join", True)):
            parts = _components(adj, s, complement)
            if len(parts) > 1:
                kids = []
                for part in parts:
                    sub = build(part)
                    if sub is None:
                        return None
                    kids.append(sub)
                return Cotree(kind, children=tuple(kids))
        return None

    if g.n == 0:
        return None
    return build(g.full_mask)


def is_cograph(g: Graph) -> bool:
    return g.n == 0 or decompose_cograph(g) is not None


def has_induced_p4(g: Graph) -> bool:
    """Brute-force scan of every 4-subset for an induced path."""
    for quad in combinations(g.vertices, 4):
        degs = sorted(sum(g.has_edge(a, b) for b in quad if b != a) for a in quad)
        if degs == [1, 1, 2, 2]:
            # on four vertices only P4 has this degree sequence
            return True
    return False


# -- dominance order ----------------------------------------------------------


class Order(enum.Enum):
    LESS = "LESS"
    GREATER = "GREATER"
    EQUAL = "EQUAL"
    INCOMPARABLE = "INCOMPARABLE"


def prefix_profile(sizes: list[int], n: int, length: int) -> list[int]:
    """Prefix sums of ``sizes`` sorted largest first, padded with ``n`` to ``length``."""
    sums = list(accumulate(sorted(sizes, reverse=True)))
    return sums + [n] * (length - len(sums))


def compare_profiles(xs: list[int], ys: list[int], n: int) -> Order:
    length = max(len(xs), len(ys))
    px, py = prefix_profile(xs, n, length), prefix_profile(ys, n, length)
    le = all(a <= b for a, b in zip(px, py))
    ge = all(a >= b for a, b in zip(px, py))
    if le and ge:
        return Order.EQUAL
    if le:
        return Order.LESS
    if ge:
        return Order.GREATER
    return Order.INCOMPARABLE


def preceq_compare(px: CliquePartition, py: CliquePartition) -> Order:
    """How ``px`` relates to ``py`` in the dominance order."""
    if px.graph_n != py.graph_n:
        raise ValueError(f"partitions of different vertex counts ({px.graph_n} vs {py.graph_n})")
    return compare_profiles(px.sizes(), py.sizes(), px.graph_n)


def partition_profiles(g: Graph) -> set[tuple[int, ...]]:
    """Block-size profiles (sorted largest first) of every clique partition of ``g``.

    Exponential; intended for ``n`` up to about 10.
    """
    adj = g.adj

    @lru_cache(maxsize=None)
    def profiles(s: int) -> frozenset[tuple[int, ...]]:
        if not s:
            return frozenset({()})
        v = lowest(s)
        out = set()
        stack = [(1 << v, s & adj[v])]
        while stack:
            clique, cand = stack.pop()
            size = clique.bit_count()
            for rest in profiles(s & ~clique):
                out.add(tuple(sorted(rest + (size,), reverse=True)))
            while cand:
                u = lowest(cand)
                cand &= ~(1 << u)
                stack.append((clique | 1 << u, cand & adj[u]))
        return frozenset(out)

    return set(profiles(g.full_mask))


def maximal_profiles(profiles: set[tuple[int, ...]], n: int) -> set[tuple[int, ...]]:
    """Profiles not strictly dominated by any other profile."""
    return {
        p for p in profiles
        if not any(compare_profiles(list(q), list(p), n) is Order.GREATER for q in profiles)
    }


def is_preceq_maximal(g: Graph, p: CliquePartition, profiles: set[tuple[int, ...]] | None = None) -> bool:
    if profiles is None:
        profiles = partition_profiles(g)
    mine = p.sizes()
    return not any(compare_profiles(list(q), mine, g.n) is Order.GREATER for q in profiles)


def is_preceq_greatest(g: Graph, p: CliquePartition, profiles: set[tuple[int, ...]] | None = None) -> bool:
    """Does ``p`` dominate (or equal) every clique partition of ``g``?"""
    if profiles is None:
        profiles = partition_profiles(g)
    mine = p.sizes()
    return all(compare_profiles(list(q), mine, g.n) in (Order.LESS, Order.EQUAL) for q in profiles)


# -- random cographs ------------------------------------------------------------


def random_cotree(n: int, seed: int) -> Cotree:
    """A random cotree on leaves ``1..n``.

    The leaves are shuffled, then split recursively: each internal node
    cuts its leaf block into 2 or 3 random contiguous parts, and node kinds
    alternate between union and join from a random root kind.
    """
    if n < 1:
        raise ValueError("need at least one vertex")
    rng = random.Random(seed)
    vertices = list(range(1, n + 1))
    rng.shuffle(vertices)

    def grow(block: list[int], kind: str) -> Cotree:
        if len(block) == 1:
            return Cotree("leaf", block[0])
        parts = rng.randint(2, min(3, len(block)))
        cuts = sorted(rng.sample(range(1, len(block)), parts - 1))
        pieces = [block[a:b] for a, b in zip([0] + cuts, cuts + [len(block)])]
        other = "join" if kind == "union" else "union"
        return Cotree(kind, children=tuple(grow(piece, other) for piece in pieces))

    return grow(vertices, rng.choice(["union", "join"]))


def cotree_graph(tree: Cotree, n: int) -> Graph:
    """Realize a cotree over leaves ``1..n`` as a graph."""
    edges = []

    def walk(t: Cotree) -> list[int]:
        if t.kind == "leaf":
            return [t.vertex]
        groups = [walk(c) for c in t.children]
        if t.kind == "join":
            for i, a in enumerate(groups):
                for b in groups[i + 1:]:
                    edges.extend((u, v) for u in a for v in b)
        return [v for grp in groups for v in grp]

    walk(tree)
    return Graph.from_edges(n, edges)


def random_cotree_graph(n: int, seed: int) -> Graph:
    return cotree_graph(random_cotree(n, seed), n)

