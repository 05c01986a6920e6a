"""Instance factories: the tight family, the small named counterexamples,
the ordering-heuristic failure families, and seeded random corpora."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .cograph import random_cotree_graph
from .graph_core import Graph
from .perm_graph import Permutation, build_permutation_graph


@dataclass(frozen=True)
class TightFamilySpec:
    ell: int
    k_seq: tuple[int, ...]

    @property
    def t(self) -> int:
        return len(self.k_seq)


def k_sequence(ell: int) -> TightFamilySpec:
    """Clique sizes ``k_1 = ell`` and then the smallest ``k_i`` with
    ``ell^2 - (k_1 + ... + k_{i-1}) <= ell * k_i``, kept while ``k_i >= 3``.
    """
    if ell < 3:
        raise ValueError("ell must be at least 3")
    seq = [ell]
    used = ell
    while True:
        k = -(-(ell * ell - used) // ell)
        if k < 3:
            break
        seq.append(k)
        used += k
    return TightFamilySpec(ell, tuple(seq))


def cell(ell: int, row: int, col: int) -> int:
    """Vertex id of grid cell ``(row, col)``, both 1-based, row-major."""
    return (row - 1) * ell + col


def k_clique_cells(ell: int) -> list[list[int]]:
    """Vertex ids of each packed ``k_i``-clique.

    Cells are consumed in column-major order (down column 1, then column 2,
    ...), each clique taking the next ``k_i`` unused cells.
    """
    order = [cell(ell, r, c) for c in range(1, ell + 1) for r in range(1, ell + 1)]
    out, at = [], 0
    for k in k_sequence(ell).k_seq:
        out.append(order[at:at + k])
        at += k
    return out


def build_G_ell(ell: int) -> Graph:
    """``ell`` row cliques of size ``ell`` overlaid with the packed ``k_i``-cliques."""
    if ell < 3:
        raise ValueError("ell must be at least 3")
    edges = set()
    groups = [[cell(ell, r, c) for c in range(1, ell + 1)] for r in range(1, ell + 1)]
    groups += k_clique_cells(ell)
    for grp in groups:
        for i, u in enumerate(grp):
            for v in grp[i + 1:]:
                edges.add((min(u, v), max(u, v)))
    return Graph.from_edges(ell * ell, sorted(edges))


def row_partition_cells(ell: int) -> list[list[int]]:
    return [[cell(ell, r, c) for c in range(1, ell + 1)] for r in range(1, ell + 1)]


@dataclass(frozen=True)
class TightFamilyEdges:
    opt: int
    greedy_f: int
    ratio_product: Fraction


def tight_family_edges(ell: int) -> TightFamilyEdges:
    """Row-partition optimum, the adversarial Greedy Edmonds count, and the
    bound-normalised ratio ``(C(l,2)+1)/(2 C(l,2)) * opt / f``."""
    ks = k_sequence(ell).k_seq
    opt = ell * comb(ell, 2)
    f = sum(comb(k, 2) for k in ks) + ell * (ell - 1) - sum(ks)
    c = comb(ell, 2)
    return TightFamilyEdges(opt, f, Fraction(c + 1, 2 * c) * Fraction(opt, f))


# -- named small instances ------------------------------------------------------------


def staircase(k: int) -> Permutation:
    """``[2, 4, ..., 2k, 2k-1, ..., 3, 1]``."""
    if k < 1:
        raise ValueError("k must be at least 1")
    return Permutation.of(list(range(2, 2 * k + 1, 2)) + list(range(2 * k - 1, 0, -2)))


def zigzag(k: int) -> Permutation:
    """``[2k, 1, 2k-1, 2, ..., k+1, k]``."""
    if k < 1:
        raise ValueError("k must be at least 1")
    seq = []
    for i in range(k):
        seq += [2 * k - i, i + 1]
    return Permutation.of(seq)


FIXTURE_NAMES = ("p4_path", "seven_vertex", "staircase", "zigzag")


def fixture(name: str, k: int | None = None) -> Permutation:
    """One of the named small instances, as its defining permutation."""
    if name == "p4_path":
        return Permutation.of([3, 1, 4, 2])
    if name == "seven_vertex":
        return Permutation.of([2, 5, 4, 1, 7, 3, 6])
    if name in ("staircase", "zigzag"):
        if k is None:
            raise ValueError(f"{name} needs k")
        return staircase(k) if name == "staircase" else zigzag(k)
    raise ValueError(f"unknown fixture {name!r}")


def fixture_graph(name: str, k: int | None = None) -> Graph:
    """The value-labeled permutation graph of :func:`fixture`."""
    return build_permutation_graph(fixture(name, k), "value")


# -- random corpora --------------------------------------------------------------------


def random_graph(n: int, density: float, seed: int) -> Graph:
    """Each of the ``C(n, 2)`` pairs becomes an edge with probability ``density``."""
    if not 0 <= density <= 1:
        raise ValueError("density must lie in [0, 1]")
    rng = random.Random(seed)
    edges = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1) if rng.random() < density]
    return Graph.from_edges(n, edges)


def random_triangle_free_graph(n: int, density: float, seed: int) -> Graph:
    """Pairs visited in random order; each is kept with probability ``density``
    unless it would close a triangle."""
    rng = random.Random(seed)
    pairs = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)]
    rng.shuffle(pairs)
    adj = [0] * (n + 1)
    edges = []
    for u, v in pairs:
        if rng.random() < density and not adj[u] & adj[v]:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
            edges.append((u, v))
    return Graph.from_edges(n, edges)


def random_permutation(n: int, seed: int) -> Permutation:
    rng = random.Random(seed)
    seq = list(range(1, n + 1))
    rng.shuffle(seq)
    return Permutation.of(seq)


def random_cograph(n: int, seed: int) -> Graph:
    return random_cotree_graph(n, seed)
