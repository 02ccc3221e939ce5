"""Simple undirected graphs and the structural metrics the bounds consume.

Adjacency is kept as one integer bitmask per vertex; vertices are the dense
labels ``0..n-1``.  Graphs are treated as immutable: edit operations return
new instances, and derived data (distance matrix, degrees, bipartition) is
cached on first use.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Optional, Sequence

import numpy as np


class GraphError(ValueError):
    """Invalid graph construction or a violated precondition."""


class DisconnectedGraphError(GraphError):
    def __init__(self, u: int, v: int):
        super().__init__(f"graph is disconnected: vertex {v} unreachable from {u}")
        self.pair = (u, v)


@dataclass(frozen=True)
class DistanceMatrix:
    d: np.ndarray
    row_sums: np.ndarray

    @property
    def n(self) -> int:
        return self.d.shape[0]

    @property
    def diameter(self) -> int:
        return int(self.d.max()) if self.n else 0

    @property
    def eccentricities(self) -> tuple[int, ...]:
        return tuple(int(x) for x in self.d.max(axis=1))


@dataclass(frozen=True)
class DegreeSummary:
    max1: int
    max2: int
    min1: int
    min2: int


@dataclass(frozen=True)
class Bipartition:
    side: tuple[int, ...]  # 0 for A, 1 for B
    p: int
    q: int
    max_a: int
    max_b: int
    min_a: int
    min_b: int

    @property
    def part_a(self) -> tuple[int, ...]:
        return tuple(v for v, s in enumerate(self.side) if s == 0)

    @property
    def part_b(self) -> tuple[int, ...]:
        return tuple(v for v, s in enumerate(self.side) if s == 1)


class Graph:
    """Simple undirected graph on vertices ``0..n-1``."""

    def __init__(self, n: int, masks: Sequence[int]):
        if n < 0 or len(masks) != n:
            raise GraphError(f"need {n} adjacency masks, got {len(masks)}")
        full = (1 << n) - 1
        for v, mask in enumerate(masks):
            if mask & ~full:
                raise GraphError(f"vertex {v} has neighbours outside 0..{n - 1}")
            if mask >> v & 1:
                raise GraphError(f"self-loop at vertex {v}")
            for u in _bits(mask):
                if not masks[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {v} and {u}")
        self.n = n
        self.masks = tuple(masks)
        # per-instance memo for derived data computed in other modules
        self.memo: dict = {}

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        masks = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) has a vertex outside 0..{n - 1}")
            if u == v:
                raise GraphError(f"self-loop ({u}, {v})")
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return cls(n, masks)

    @classmethod
    def from_adjacency(cls, a) -> "Graph":
        a = np.asarray(a)
        n = a.shape[0]
        if a.shape != (n, n) or (a != a.T).any():
            raise GraphError("adjacency matrix must be square and symmetric")
        return cls.from_edges(n, zip(*np.nonzero(np.triu(a, 1))))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.masks == other.masks

    def __hash__(self) -> int:
        return hash((self.n, self.masks))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.masks[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(_bits(self.masks[v]))

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            for v in _bits(self.masks[u] >> (u + 1)):
                yield u, u + 1 + v

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(bin(mask).count("1") for mask in self.masks)

    @cached_property
    def m(self) -> int:
        return sum(self.degrees) // 2

    @cached_property
    def adjacency(self) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=np.int64)
        for u, v in self.edges():
            a[u, v] = a[v, u] = 1
        a.setflags(write=False)
        return a

    @cached_property
    def connected(self) -> bool:
        if self.n <= 1:
            return True
        seen = 1
        frontier = 1
        while frontier:
            nxt = 0
            for v in _bits(frontier):
                nxt |= self.masks[v]
            frontier = nxt & ~seen
            seen |= frontier
        return seen == (1 << self.n) - 1

    @cached_property
    def distances(self) -> DistanceMatrix:
        n = self.n
        d = np.zeros((n, n), dtype=np.int64)
        for s in range(n):
            seen = 1 << s
            frontier = seen
            level = 0
            while frontier:
                level += 1
                nxt = 0
                for v in _bits(frontier):
                    nxt |= self.masks[v]
                frontier = nxt & ~seen
                seen |= frontier
                for v in _bits(frontier):
                    d[s, v] = level
            if seen != (1 << n) - 1:
                missing = next(v for v in range(n) if not seen >> v & 1)
                raise DisconnectedGraphError(s, missing)
        d.setflags(write=False)
        rs = d.sum(axis=1)
        rs.setflags(write=False)
        return DistanceMatrix(d, rs)

    @cached_property
    def bipartition(self) -> Optional[Bipartition]:
        if not self.connected:
            raise DisconnectedGraphError(*_unreached(self))
        if self.n < 2:
            return None
        side = [-1] * self.n
        side[0] = 0
        queue = deque([0])
        while queue:
            u = queue.popleft()
            for v in _bits(self.masks[u]):
                if side[v] < 0:
                    side[v] = 1 - side[u]
                    queue.append(v)
                elif side[v] == side[u]:
                    return None
        deg = self.degrees
        da = [deg[v] for v in range(self.n) if side[v] == 0]
        db = [deg[v] for v in range(self.n) if side[v] == 1]
        return Bipartition(tuple(side), len(da), len(db), max(da), max(db), min(da), min(db))


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _unreached(g: Graph) -> tuple[int, int]:
    seen = {0}
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for v in _bits(g.masks[u]):
            if v not in seen:
                seen.add(v)
                queue.append(v)
    return 0, next(v for v in range(g.n) if v not in seen)


def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    return Graph.from_edges(n, edges)


def is_connected(g: Graph) -> bool:
    return g.connected


def distance_matrix(g: Graph) -> DistanceMatrix:
    return g.distances


def diameter(g: Graph) -> int:
    return g.distances.diameter


def eccentricities(g: Graph) -> tuple[int, ...]:
    return g.distances.eccentricities


def degree_summary(g: Graph) -> DegreeSummary:
    """Largest two and smallest two degrees, taken as a multiset.

    Removing one vertex attaining the maximum leaves the second maximum, so
    ties give ``max2 == max1`` (likewise for the minima).
    """
    if g.n < 2:
        raise GraphError("second-order degrees need at least two vertices")
    deg = sorted(g.degrees)
    return DegreeSummary(deg[-1], deg[-2], deg[0], deg[1])


def bipartition(g: Graph) -> Optional[Bipartition]:
    return g.bipartition


def is_regular(g: Graph) -> bool:
    return len(set(g.degrees)) <= 1


def is_semiregular(g: Graph) -> bool:
    bp = g.bipartition
    return bp is not None and bp.max_a == bp.min_a and bp.max_b == bp.min_b


def wiener(g: Graph) -> int:
    return int(g.distances.row_sums.sum()) // 2


def zagreb_m1(g: Graph) -> int:
    return sum(x * x for x in g.degrees)


def is_triangle_and_quadrangle_free(g: Graph) -> bool:
    """True when ``g`` has no 3-cycle and no 4-cycle.

    A triangle shows up as two adjacent neighbours; a quadrangle as two
    vertices sharing two common neighbours.
    """
    for u in range(g.n):
        nu = g.masks[u]
        for v in _bits(nu):
            if g.masks[v] & nu:
                return False
        for v in range(u + 1, g.n):
            common = nu & g.masks[v]
            if common & (common - 1):
                return False
    return True


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, [full & ~mask & ~(1 << v) for v, mask in enumerate(g.masks)])


def delete_edge(g: Graph, u: int, v: int) -> Graph:
    if u == v or not g.has_edge(u, v):
        raise GraphError(f"({u}, {v}) is not an edge")
    masks = list(g.masks)
    masks[u] &= ~(1 << v)
    masks[v] &= ~(1 << u)
    return Graph(g.n, masks)


def add_edge(g: Graph, u: int, v: int) -> Graph:
    if u == v:
        raise GraphError(f"self-loop ({u}, {v})")
    if not (0 <= u < g.n and 0 <= v < g.n):
        raise GraphError(f"vertex out of range in ({u}, {v})")
    if g.has_edge(u, v):
        raise GraphError(f"({u}, {v}) is already an edge")
    masks = list(g.masks)
    masks[u] |= 1 << v
    masks[v] |= 1 << u
    return Graph(g.n, masks)


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Graph with vertex ``v`` renamed to ``perm[v]``."""
    return Graph.from_edges(g.n, ((perm[u], perm[v]) for u, v in g.edges()))


def disjoint_union(*graphs: Graph) -> Graph:
    edges = []
    offset = 0
    for h in graphs:
        edges.extend((u + offset, v + offset) for u, v in h.edges())
        offset += h.n
    return Graph.from_edges(offset, edges)
