"""Maximum cardinality matching in general graphs.

:func:`max_matching` is Edmonds' blossom algorithm: grow an alternating BFS
forest from a free root, contract odd cycles into their base when two outer
vertices meet, and augment along the first path found to another free vertex.
Roots and neighbours are scanned in ascending order so results are
reproducible. :func:`brute_matching` is an exhaustive oracle for small graphs.
"""

from __future__ import annotations

from collections import deque
from functools import lru_cache

from .graph_core import Edge, Graph, GuardExceeded, bits, lowest

BRUTE_MATCHING_MAX_N = 16


class _Blossom:
    def __init__(self, g: Graph, within: int) -> None:
        self.verts = list(bits(within))
        self.nbrs = {v: list(bits(g.adj[v] & within)) for v in self.verts}
        self.mate: dict[int, int] = {}

    def _lca(self, a: int, b: int) -> int:
        seen = set()
        while True:
            a = self.base[a]
            seen.add(a)
            if a not in self.mate:
                break
            a = self.parent[self.mate[a]]
        while True:
            b = self.base[b]
            if b in seen:
                return b
            b = self.parent[self.mate[b]]

    def _mark_path(self, v: int, b: int, child: int, in_blossom: set[int]) -> None:
        while self.base[v] != b:
            in_blossom.add(self.base[v])
            in_blossom.add(self.base[self.mate[v]])
            self.parent[v] = child
            child = self.mate[v]
            v = self.parent[child]

    def _find_path(self, root: int) -> int | None:
        self.parent: dict[int, int] = {}
        self.base = {v: v for v in self.verts}
        outer = {root}
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for u in self.nbrs[v]:
                if self.base[v] == self.base[u] or self.mate.get(v) == u:
                    continue
                if u == root or (u in self.mate and self.mate[u] in self.parent):
                    # u is outer as well: an odd cycle, contract it
                    b = self._lca(v, u)
                    in_blossom: set[int] = set()
                    self._mark_path(v, b, u, in_blossom)
                    self._mark_path(u, b, v, in_blossom)
                    for w in self.verts:
                        if self.base[w] in in_blossom:
                            self.base[w] = b
                            if w not in outer:
                                outer.add(w)
                                queue.append(w)
                elif u not in self.parent:
                    self.parent[u] = v
                    if u not in self.mate:
                        return u
                    w = self.mate[u]
                    outer.add(w)
                    queue.append(w)
        return None

    def _augment(self, end: int) -> None:
        v = end
        while v is not None:
            pv = self.parent[v]
            nxt = self.mate.get(pv)
            self.mate[v] = pv
            self.mate[pv] = v
            v = nxt

    def run(self) -> dict[int, int]:
        # cheap greedy start; the blossom phase fixes whatever it misses
        for v in self.verts:
            if v not in self.mate:
                for u in self.nbrs[v]:
                    if u not in self.mate:
                        self.mate[v] = u
                        self.mate[u] = v
                        break
        for v in self.verts:
            if v not in self.mate:
                end = self._find_path(v)
                if end is not None:
                    self._augment(end)
        return self.mate


def _pairs(mate: dict[int, int]) -> frozenset[Edge]:
    return frozenset((v, u) for v, u in mate.items() if v < u)


def max_matching(g: Graph, within: int | None = None) -> frozenset[Edge]:
    """A maximum matching of ``g[within]`` as a set of ``(u, v)`` pairs, ``u < v``."""
    if within is None:
        within = g.full_mask
    return _pairs(_Blossom(g, within).run())


def brute_matching(g: Graph) -> frozenset[Edge]:
    """Maximum matching by exhaustive search; ``n <= 16``."""
    if g.n > BRUTE_MATCHING_MAX_N:
        raise GuardExceeded(f"brute_matching limited to n <= {BRUTE_MATCHING_MAX_N}, got {g.n}")

    @lru_cache(maxsize=None)
    def best(free: int) -> tuple[Edge, ...]:
        if not free:
            return ()
        v = lowest(free)
        rest = free & ~(1 << v)
        top = best(rest)
        for u in bits(g.adj[v] & rest):
            cand = ((v, u),) + best(rest & ~(1 << u))
            if len(cand) > len(top):
                top = cand
        return top

    return frozenset(best(g.full_mask))


def is_matching(g: Graph, edges: frozenset[Edge]) -> bool:
    used: set[int] = set()
    for u, v in edges:
        if not g.has_edge(u, v) or u in used or v in used:
            return False
        used.update((u, v))
    return True
