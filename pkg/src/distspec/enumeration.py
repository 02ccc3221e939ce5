"""Canonical labelling and exhaustive enumeration of small graphs.

The canonical form is the lexicographically smallest relabelled adjacency
over the leaves of an individualisation-refinement search tree.  Vertices
that are twins inside the target cell (same neighbourhood up to each other)
generate isomorphic subtrees, so only one per twin class is expanded; this
keeps complete, empty and complete multipartite graphs cheap.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Callable, Iterator, Optional

from .graph import Graph, GraphError, _bits

MAX_GRAPH_ORDER = 8
MAX_TREE_ORDER = 12


def _refine(masks: tuple[int, ...], cells: list[list[int]]) -> list[list[int]]:
    while True:
        cell_masks = [sum(1 << v for v in c) for c in cells]
        out: list[list[int]] = []
        for c in cells:
            if len(c) == 1:
                out.append(c)
                continue
            sig = {v: tuple(bin(masks[v] & cm).count("1") for cm in cell_masks) for v in c}
            for key in sorted(set(sig.values())):
                out.append([v for v in c if sig[v] == key])
        if len(out) == len(cells):
            return out
        cells = out


def _relabelled(masks: tuple[int, ...], order: list[int]) -> tuple[int, ...]:
    pos = [0] * len(masks)
    for i, v in enumerate(order):
        pos[v] = i
    out = []
    for v in order:
        new = 0
        for u in _bits(masks[v]):
            new |= 1 << pos[u]
        out.append(new)
    return tuple(out)


def _search(masks: tuple[int, ...], cells: list[list[int]], best: list) -> None:
    cells = _refine(masks, cells)
    target = next((i for i, c in enumerate(cells) if len(c) > 1), None)
    if target is None:
        cert = _relabelled(masks, [c[0] for c in cells])
        if best[0] is None or cert < best[0]:
            best[0] = cert
        return
    cell = cells[target]
    tried: list[int] = []
    for v in cell:
        if any(masks[v] & ~(1 << u) == masks[u] & ~(1 << v) for u in tried):
            continue
        tried.append(v)
        rest = [u for u in cell if u != v]
        _search(masks, cells[:target] + [[v], rest] + cells[target + 1:], best)


def canonical_form(g: Graph) -> tuple[int, ...]:
    """Isomorphism-invariant certificate: relabelled adjacency masks."""
    if g.n == 0:
        return ()
    best: list = [None]
    _search(g.masks, [list(range(g.n))], best)
    return best[0]


def canonical_graph(g: Graph) -> Graph:
    return Graph(g.n, canonical_form(g))


def is_isomorphic(g: Graph, h: Graph) -> bool:
    return g.n == h.n and g.m == h.m and canonical_form(g) == canonical_form(h)


def _extend(graphs: list[Graph], keep: Optional[Callable[[Graph], bool]]) -> list[Graph]:
    seen: dict[tuple[int, ...], Graph] = {}
    for g in graphs:
        n = g.n
        for sub in range(1 << n):
            masks = [m | (1 << n) if sub >> v & 1 else m for v, m in enumerate(g.masks)]
            masks.append(sub)
            h = Graph(n + 1, masks)
            if keep is not None and not keep(h):
                continue
            cert = canonical_form(h)
            if cert not in seen:
                seen[cert] = Graph(n + 1, cert)
    return sorted(seen.values(), key=lambda h: (h.m, h.masks))


@lru_cache(maxsize=None)
def _all_graphs(n: int, bipartite: bool) -> tuple[Graph, ...]:
    if n == 1:
        return (Graph(1, [0]),)
    keep = _is_bipartite if bipartite else None
    return tuple(_extend(list(_all_graphs(n - 1, bipartite)), keep))


def _is_bipartite(g: Graph) -> bool:
    side = [-1] * g.n
    for s in range(g.n):
        if side[s] >= 0:
            continue
        side[s] = 0
        stack = [s]
        while stack:
            u = stack.pop()
            for v in _bits(g.masks[u]):
                if side[v] < 0:
                    side[v] = 1 - side[u]
                    stack.append(v)
                elif side[v] == side[u]:
                    return False
    return True


def _check_order(n: int, limit: int, what: str) -> None:
    if not 1 <= n <= limit:
        raise GraphError(f"{what} enumeration supports 1 <= n <= {limit}, got {n}")


def all_graphs(n: int, bipartite: bool = False) -> tuple[Graph, ...]:
    """One canonical representative per isomorphism class (connected or not)."""
    _check_order(n, MAX_GRAPH_ORDER, "graph")
    return _all_graphs(n, bipartite)


def all_connected_graphs(n: int, bipartite: bool = False) -> Iterator[Graph]:
    return (g for g in all_graphs(n, bipartite) if g.connected)


@lru_cache(maxsize=None)
def _all_trees(n: int) -> tuple[Graph, ...]:
    if n == 1:
        return (Graph(1, [0]),)
    seen: dict[tuple[int, ...], Graph] = {}
    for t in _all_trees(n - 1):
        for v in range(n - 1):
            masks = list(t.masks)
            masks[v] |= 1 << (n - 1)
            masks.append(1 << v)
            cert = canonical_form(Graph(n, masks))
            if cert not in seen:
                seen[cert] = Graph(n, cert)
    return tuple(sorted(seen.values(), key=lambda h: h.masks))


def all_trees(n: int) -> Iterator[Graph]:
    """Non-isomorphic trees, grown by attaching one leaf at a time."""
    _check_order(n, MAX_TREE_ORDER, "tree")
    return iter(_all_trees(n))
