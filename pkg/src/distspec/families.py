"""Named graph families and random test-input generators."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations
from typing import Optional, Sequence

from .graph import Graph, GraphError, disjoint_union


def complete(n: int) -> Graph:
    if n < 1:
        raise GraphError("complete graph needs n >= 1")
    return Graph.from_edges(n, combinations(range(n), 2))


def empty(n: int) -> Graph:
    return Graph(n, [0] * n)


def path(n: int) -> Graph:
    if n < 1:
        raise GraphError("path needs n >= 1")
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs n >= 3")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def complete_bipartite(p: int, q: int) -> Graph:
    """K_{p,q} with side A = ``0..p-1``."""
    if p < 1 or q < 1:
        raise GraphError("complete bipartite graph needs p, q >= 1")
    return Graph.from_edges(p + q, ((a, p + b) for a in range(p) for b in range(q)))


def star(n: int) -> Graph:
    return complete_bipartite(1, n - 1)


def broom(n: int, max_degree: int) -> Graph:
    """Path on ``n - max_degree + 1`` vertices with ``max_degree - 1`` pendants at vertex 0."""
    if not 2 <= max_degree <= n - 1:
        raise GraphError(f"broom needs 2 <= max_degree <= n - 1, got n={n}, max_degree={max_degree}")
    spine = n - max_degree + 1
    edges = [(i, i + 1) for i in range(spine - 1)]
    edges += [(0, v) for v in range(spine, n)]
    return Graph.from_edges(n, edges)


def cocktail_party(a: int) -> Graph:
    """K_{2a} minus the perfect matching {2i, 2i+1}."""
    if a < 1:
        raise GraphError("cocktail party graph needs a >= 1")
    n = 2 * a
    return Graph.from_edges(n, ((u, v) for u, v in combinations(range(n), 2) if u // 2 != v // 2))


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


def line_graph(g: Graph) -> Graph:
    """Vertices are the edges of ``g`` in lexicographic order."""
    edges = sorted(g.edges())
    if not edges:
        raise GraphError("line graph needs at least one edge")
    lg = [
        (i, j)
        for (i, e), (j, f) in combinations(enumerate(edges), 2)
        if set(e) & set(f)
    ]
    return Graph.from_edges(len(edges), lg)


def generalized_line_graph(g: Graph, a: Sequence[int]) -> Graph:
    """L(g; a_0, ..., a_{n-1}).

    The line graph block comes first, then one cocktail party block CP(a_v)
    per vertex of ``g`` in vertex order.  Each line-graph vertex {u, v} is
    joined to every vertex of CP(a_u) and CP(a_v).
    """
    if len(a) != g.n or any(x < 0 for x in a):
        raise GraphError("need one nonnegative multiplicity per vertex")
    edges = sorted(g.edges())
    if not edges:
        raise GraphError("generalized line graph needs at least one edge")
    blocks = [cocktail_party(x) if x else Graph(0, []) for x in a]
    base = line_graph(g)
    union = disjoint_union(base, *blocks)
    offsets = []
    offset = base.n
    for b in blocks:
        offsets.append(range(offset, offset + b.n))
        offset += b.n
    extra = [(i, w) for i, (u, v) in enumerate(edges) for w in (*offsets[u], *offsets[v])]
    return Graph.from_edges(union.n, list(union.edges()) + extra)


def random_tree(n: int, seed: Optional[int] = None) -> Graph:
    """Uniform labelled tree decoded from a random Pruefer sequence."""
    if n < 2:
        raise GraphError("random tree needs n >= 2")
    rng = random.Random(seed)
    if n == 2:
        return Graph.from_edges(2, [(0, 1)])
    return prufer_to_tree([rng.randrange(n) for _ in range(n - 2)])


def prufer_to_tree(seq: Sequence[int]) -> Graph:
    n = len(seq) + 2
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    edges = []
    for x in seq:
        leaf = next(v for v in range(n) if degree[v] == 1)
        edges.append((leaf, x))
        degree[leaf] -= 1
        degree[x] -= 1
    u, v = (w for w in range(n) if degree[w] == 1)
    edges.append((u, v))
    return Graph.from_edges(n, edges)


def random_connected(n: int, edge_prob: float, seed: Optional[int] = None, budget: int = 10_000) -> Graph:
    """G(n, p) sample, rejected until connected (not uniform over connected graphs)."""
    if n < 2 or not 0 < edge_prob <= 1:
        raise GraphError("random_connected needs n >= 2 and 0 < edge_prob <= 1")
    rng = random.Random(seed)
    pairs = list(combinations(range(n), 2))
    for _ in range(budget):
        g = Graph.from_edges(n, [e for e in pairs if rng.random() < edge_prob])
        if g.connected:
            return g
    raise GraphError(f"no connected sample after {budget} attempts (n={n}, p={edge_prob})")


def random_diameter2(n: int, edge_prob: float, seed: Optional[int] = None, budget: int = 10_000) -> Graph:
    rng = random.Random(seed)
    for _ in range(budget):
        g = random_connected(n, edge_prob, seed=rng.randrange(2**32), budget=budget)
        if g.distances.diameter == 2:
            return g
    raise GraphError(f"no diameter-2 sample after {budget} attempts")


# -- textual family specs ---------------------------------------------------

_ARITY = {
    "complete": 1,
    "path": 1,
    "cycle": 1,
    "kpq": 2,
    "star": 1,
    "broom": 2,
    "cp": 1,
    "petersen": 0,
    "random": 2,
    "tree": 1,
}
_ALIASES = {"complete_bipartite": "kpq", "cocktail_party": "cp", "random_connected": "random", "random_tree": "tree"}


@dataclass(frozen=True)
class FamilySpec:
    family: str
    params: tuple = ()
    seed: Optional[int] = None
    inner: Optional["FamilySpec"] = field(default=None)

    @classmethod
    def parse(cls, text: str) -> "FamilySpec":
        """Parse ``family:p1,p2[:seed]``; ``line:<spec>`` wraps another spec."""
        name, _, rest = text.strip().partition(":")
        name = _ALIASES.get(name, name)
        if name == "line":
            return cls("line", inner=cls.parse(rest))
        if name not in _ARITY:
            raise ValueError(f"unknown graph family {name!r}")
        parts = rest.split(":") if rest else []
        if len(parts) > 2:
            raise ValueError(f"malformed family spec {text!r}")
        raw = [x for x in parts[0].split(",") if x] if parts else []
        if len(raw) != _ARITY[name]:
            raise ValueError(f"{name} takes {_ARITY[name]} parameter(s), got {len(raw)}")
        params = tuple(float(x) if name == "random" and i == 1 else int(x) for i, x in enumerate(raw))
        seed = int(parts[1]) if len(parts) == 2 else None
        return cls(name, params, seed)

    def build(self) -> Graph:
        f, p = self.family, self.params
        if f == "line":
            return line_graph(self.inner.build())
        if f == "complete":
            return complete(*p)
        if f == "path":
            return path(*p)
        if f == "cycle":
            return cycle(*p)
        if f == "kpq":
            return complete_bipartite(*p)
        if f == "star":
            return star(*p)
        if f == "broom":
            return broom(*p)
        if f == "cp":
            return cocktail_party(*p)
        if f == "petersen":
            return petersen()
        if f == "random":
            return random_connected(p[0], p[1], self.seed)
        if f == "tree":
            return random_tree(p[0], self.seed)
        raise ValueError(f"unknown graph family {f!r}")

    def __str__(self) -> str:
        if self.family == "line":
            return f"line:{self.inner}"
        s = self.family
        if self.params:
            s += ":" + ",".join(str(x) for x in self.params)
        if self.seed is not None:
            s += f":{self.seed}"
        return s


def build(text: str) -> Graph:
    return FamilySpec.parse(text).build()
