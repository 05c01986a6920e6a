"""Graph and clique-partition data model.

Vertices are labeled ``1..n``. Adjacency is kept as one Python ``int`` per
vertex, used as a bitset (bit ``v`` set means ``v`` is a neighbour), so that
clique tests and neighbourhood intersections are single integer operations.
Bit 0 is never set.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import Iterable, Iterator

Edge = tuple[int, int]


class GraphFormatError(ValueError):
    """Raised when an instance file or edge list is malformed."""


class GuardExceeded(ValueError):
    """Raised when an exponential oracle is asked for an instance too large."""


class InvalidPartitionError(ValueError):
    """Raised when a clique partition does not fit its graph."""


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def lowest(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``1..n``.

    Build one with :meth:`from_edges`; the constructor takes the raw
    bitset rows and trusts them.
    """

    n: int
    adj: tuple[int, ...]
    m: int = field(init=False)

    def __post_init__(self) -> None:
        if len(self.adj) != self.n + 1:
            raise ValueError("adjacency must have n + 1 rows")
        object.__setattr__(self, "m", sum(r.bit_count() for r in self.adj) // 2)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Edge]) -> Graph:
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        rows = [0] * (n + 1)
        for u, v in edges:
            if not (1 <= u <= n and 1 <= v <= n):
                raise ValueError(f"edge {{{u},{v}}} out of range 1..{n}")
            if u == v:
                raise ValueError(f"self-loop at {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    @property
    def full_mask(self) -> int:
        """Bitset of all vertices."""
        return ((1 << (self.n + 1)) - 1) ^ 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def edges(self) -> list[Edge]:
        """All edges as ``(u, v)`` with ``u < v``, sorted."""
        return [(u, v) for u in self.vertices for v in bits(self.adj[u] >> (u + 1) << (u + 1))]

    def edges_within(self, mask: int) -> int:
        """Number of edges of the subgraph induced by ``mask``."""
        return sum((self.adj[v] & mask).bit_count() for v in bits(mask)) // 2

    def check_vertices(self, vertices: Iterable[int]) -> int:
        mask = 0
        for v in vertices:
            if not 1 <= v <= self.n:
                raise ValueError(f"vertex {v} out of range 1..{self.n}")
            mask |= 1 << v
        return mask


def is_clique_mask(g: Graph, mask: int) -> bool:
    rest = mask
    while rest:
        v = lowest(rest)
        rest ^= 1 << v
        if rest & ~g.adj[v]:
            return False
    return True


def is_clique(g: Graph, s: Iterable[int]) -> bool:
    """True iff the vertices in ``s`` are pairwise adjacent."""
    return is_clique_mask(g, g.check_vertices(s))


def is_cluster_graph(g: Graph) -> bool:
    """True iff every connected component of ``g`` is complete (P3-free)."""
    for v in g.vertices:
        # closed neighbourhoods must coincide across every edge
        closed = g.adj[v] | 1 << v
        for u in bits(g.adj[v]):
            if g.adj[u] | 1 << u != closed:
                return False
    return True


@dataclass(frozen=True)
class CliquePartition:
    """Ordered list of vertex blocks, meant to cover ``1..graph_n``.

    Nothing is enforced on construction; use :func:`validate_partition`.
    """

    blocks: tuple[frozenset[int], ...]
    graph_n: int

    @classmethod
    def of(cls, blocks: Iterable[Iterable[int]], n: int) -> CliquePartition:
        return cls(tuple(frozenset(b) for b in blocks), n)

    def sizes(self) -> list[int]:
        return [len(b) for b in self.blocks]

    def edge_count(self) -> int:
        """Edges inside blocks, assuming the partition is valid."""
        return sum(comb(len(b), 2) for b in self.blocks)

    def as_lists(self) -> list[list[int]]:
        return [sorted(b) for b in self.blocks]

    def canonical(self) -> tuple[tuple[int, ...], ...]:
        """Order-independent form, handy for set membership."""
        return tuple(sorted(tuple(sorted(b)) for b in self.blocks))

    def __len__(self) -> int:
        return len(self.blocks)


@dataclass(frozen=True)
class PartitionCheck:
    """Result of :func:`validate_partition`; truthy iff valid."""

    ok: bool
    reason: str = "ok"
    detail: str = ""

    def __bool__(self) -> bool:
        return self.ok


def validate_partition(g: Graph, p: CliquePartition) -> PartitionCheck:
    """Check that ``p`` is a clique partition of ``g``.

    Reason codes: ``ok``, ``size_mismatch``, ``empty_block``,
    ``out_of_range``, ``overlap``, ``uncovered``, ``not_clique``.
    """
    if p.graph_n != g.n:
        return PartitionCheck(False, "size_mismatch", f"partition of {p.graph_n}, graph has {g.n}")
    seen = 0
    for block in p.blocks:
        if not block:
            return PartitionCheck(False, "empty_block")
        bad = [v for v in block if not 1 <= v <= g.n]
        if bad:
            return PartitionCheck(False, "out_of_range", f"vertex {bad[0]}")
        mask = to_mask(block)
        if seen & mask:
            return PartitionCheck(False, "overlap", f"vertex {lowest(seen & mask)}")
        seen |= mask
        if not is_clique_mask(g, mask):
            return PartitionCheck(False, "not_clique", str(sorted(block)))
    if seen != g.full_mask:
        return PartitionCheck(False, "uncovered", f"vertex {lowest(g.full_mask & ~seen)}")
    return PartitionCheck(True)


def _require_valid(g: Graph, p: CliquePartition) -> None:
    check = validate_partition(g, p)
    if not check:
        raise InvalidPartitionError(f"{check.reason}: {check.detail}")


def partition_edges(g: Graph, p: CliquePartition) -> int:
    """Number of edges kept inside the blocks of ``p``."""
    _require_valid(g, p)
    return p.edge_count()


def deleted_edges(g: Graph, p: CliquePartition) -> int:
    """Number of edges of ``g`` running between different blocks of ``p``."""
    return g.m - partition_edges(g, p)


def cut_edges(g: Graph, x: Iterable[int]) -> frozenset[Edge]:
    """Edges with exactly one end in ``x``."""
    mask = g.check_vertices(x)
    out = set()
    for v in bits(mask):
        for u in bits(g.adj[v] & ~mask):
            out.add((min(u, v), max(u, v)))
    return frozenset(out)


def cut_size(g: Graph, mask: int, within: int | None = None) -> int:
    """``|δ(X)|`` for ``X = mask`` in the subgraph induced by ``within``."""
    if within is None:
        within = g.full_mask
    outside = within & ~mask
    return sum((g.adj[v] & outside).bit_count() for v in bits(mask))


def remove_deleted(g: Graph, p: CliquePartition) -> Graph:
    """The spanning subgraph keeping only edges inside blocks of ``p``."""
    _require_valid(g, p)
    edges = []
    for block in p.blocks:
        b = sorted(block)
        edges.extend((u, v) for i, u in enumerate(b) for v in b[i + 1:])
    return Graph.from_edges(g.n, edges)


# -- text formats ----------------------------------------------------------


def parse_edge_list(text: str) -> Graph:
    """Parse ``n m`` followed by ``m`` lines ``u v``.

    Rejects out-of-range vertices, self-loops, duplicate edges and a wrong
    edge count. Blank lines and ``#`` comments are ignored.
    """
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise GraphFormatError("empty input")
    head = lines[0].split()
    if len(head) != 2:
        raise GraphFormatError("header must be 'n m'")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError as e:
        raise GraphFormatError(f"bad header: {lines[0]!r}") from e
    if n < 0 or m < 0:
        raise GraphFormatError("negative header value")
    if len(lines) - 1 != m:
        raise GraphFormatError(f"header says {m} edges, found {len(lines) - 1}")
    seen: set[Edge] = set()
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise GraphFormatError(f"bad edge line {ln!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError as e:
            raise GraphFormatError(f"bad edge line {ln!r}") from e
        if not (1 <= u <= n and 1 <= v <= n):
            raise GraphFormatError(f"vertex out of range in {ln!r}")
        if u == v:
            raise GraphFormatError(f"self-loop in {ln!r}")
        e = (min(u, v), max(u, v))
        if e in seen:
            raise GraphFormatError(f"duplicate edge {e}")
        seen.add(e)
    return Graph.from_edges(n, seen)


def format_edge_list(g: Graph) -> str:
    edges = g.edges()
    return "".join([f"{g.n} {len(edges)}\n"] + [f"{u} {v}\n" for u, v in edges])
