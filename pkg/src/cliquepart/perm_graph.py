"""Permutation graphs and their maximum cliques.

A clique of a permutation graph is a strictly decreasing subsequence of the
permutation, so maximum cliques come from a longest-decreasing-subsequence
DP rather than a general clique search.

Two vertex labelings are supported. ``"position"`` puts vertex ``i`` at
position ``i`` and joins ``i < j`` when ``pi(i) > pi(j)``. ``"value"`` names
the vertex at position ``i`` by ``pi(i)`` instead; this is the labeling the
usual small drawings use, and it is the default.
"""

from __future__ import annotations

import bisect
from dataclasses import dataclass
from itertools import islice
from typing import Iterator, Literal, Sequence

from .graph_core import Graph, GraphFormatError

Labeling = Literal["position", "value"]

DEFAULT_CAP = 10**6


@dataclass(frozen=True)
class Permutation:
    seq: tuple[int, ...]

    def __post_init__(self) -> None:
        if sorted(self.seq) != list(range(1, len(self.seq) + 1)):
            raise ValueError(f"not a permutation of 1..{len(self.seq)}: {list(self.seq)}")

    @classmethod
    def of(cls, seq: Sequence[int]) -> Permutation:
        return cls(tuple(seq))

    @property
    def n(self) -> int:
        return len(self.seq)

    def __len__(self) -> int:
        return len(self.seq)

    def __getitem__(self, i: int) -> int:
        """1-indexed access: ``p[i] == pi(i)``."""
        return self.seq[i - 1]


def _as_perm(p: Permutation | Sequence[int]) -> Permutation:
    return p if isinstance(p, Permutation) else Permutation.of(p)


def _label(p: Permutation, positions: Sequence[int], labeling: Labeling) -> frozenset[int]:
    if labeling == "position":
        return frozenset(positions)
    if labeling == "value":
        return frozenset(p[i] for i in positions)
    raise ValueError(f"unknown labeling {labeling!r}")


def build_permutation_graph(p: Permutation | Sequence[int], labeling: Labeling = "value") -> Graph:
    p = _as_perm(p)
    if labeling not in ("position", "value"):
        raise ValueError(f"unknown labeling {labeling!r}")
    edges = []
    for i in range(1, p.n + 1):
        for j in range(i + 1, p.n + 1):
            if p[i] > p[j]:
                edges.append((i, j) if labeling == "position" else (p[i], p[j]))
    return Graph.from_edges(p.n, edges)


def _decreasing_lengths(p: Permutation) -> list[int]:
    """``length[i]`` = longest strictly decreasing subsequence ending at position i (1-indexed)."""
    length = [0] * (p.n + 1)
    for i in range(1, p.n + 1):
        length[i] = 1 + max(
            (length[j] for j in range(1, i) if p[j] > p[i]), default=0
        )
    return length


def max_clique_perm(p: Permutation | Sequence[int], labeling: Labeling = "value") -> frozenset[int]:
    """A maximum clique, i.e. a longest strictly decreasing subsequence.

    Patience sorting on negated values, ``O(n log n)``.
    """
    p = _as_perm(p)
    if p.n == 0:
        return frozenset()
    # tails[L] = position whose value is the largest possible last value of a
    # decreasing run of length L + 1; stored negated so bisect sees ascending keys
    tail_keys: list[int] = []
    tail_pos: list[int] = []
    prev = [0] * (p.n + 1)
    for i in range(1, p.n + 1):
        key = -p[i]
        at = bisect.bisect_left(tail_keys, key)
        prev[i] = tail_pos[at - 1] if at else 0
        if at == len(tail_keys):
            tail_keys.append(key)
            tail_pos.append(i)
        else:
            tail_keys[at] = key
            tail_pos[at] = i
    chain = []
    i = tail_pos[-1]
    while i:
        chain.append(i)
        i = prev[i]
    return _label(p, chain, labeling)


@dataclass(frozen=True)
class CliqueList:
    cliques: list[frozenset[int]]
    truncated: bool


def enumerate_max_cliques_perm(
    p: Permutation | Sequence[int], cap: int = DEFAULT_CAP, labeling: Labeling = "value"
) -> CliqueList:
    """All maximum cliques, sorted by their sorted vertex lists.

    Walks the predecessor links of the decreasing-subsequence DP from every
    position where a longest run ends. At most ``cap`` cliques are produced.
    """
    if cap < 1:
        raise ValueError("cap must be at least 1")
    p = _as_perm(p)
    if p.n == 0:
        return CliqueList([], False)
    length = _decreasing_lengths(p)
    omega = max(length)
    preds = [
        [j for j in range(1, i) if p[j] > p[i] and length[j] == length[i] - 1]
        for i in range(p.n + 1)
    ]

    def chains(i: int, suffix: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
        suffix = (i,) + suffix
        if length[i] == 1:
            yield suffix
        for j in preds[i]:
            yield from chains(j, suffix)

    every = (c for end in range(1, p.n + 1) if length[end] == omega for c in chains(end, ()))
    found = [_label(p, c, labeling) for c in islice(every, cap + 1)]
    truncated = len(found) > cap
    del found[cap:]
    found.sort(key=sorted)
    return CliqueList(found, truncated)


def parse_permutation(text: str) -> Permutation:
    """Parse ``perm n`` followed by a line of the ``n`` values."""
    tokens = text.split()
    if len(tokens) < 2 or tokens[0] != "perm":
        raise GraphFormatError("permutation file must start with 'perm n'")
    try:
        n = int(tokens[1])
        values = [int(t) for t in tokens[2:]]
    except ValueError as e:
        raise GraphFormatError("non-integer token in permutation file") from e
    if len(values) != n:
        raise GraphFormatError(f"expected {n} values, found {len(values)}")
    try:
        return Permutation.of(values)
    except ValueError as e:
        raise GraphFormatError(str(e)) from e


def format_permutation(p: Permutation) -> str:
    return f"perm {p.n}\n" + " ".join(map(str, p.seq)) + "\n"
