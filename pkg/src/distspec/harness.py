"""Corpus scans and exhaustive extremal-graph verification."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from multiprocessing import Pool
from typing import Callable, Iterable, Iterator, Optional

from . import families, spectral
from .bounds import BoundCertificate, certify_all
from .enumeration import all_connected_graphs, all_trees, canonical_form
from .formats import CertifiedGraph, encode_graph6
from .graph import Graph, GraphError, is_regular, is_triangle_and_quadrangle_free

FILTERS: dict[str, Callable[[Graph], bool]] = {
    "bipartite": lambda g: g.bipartition is not None,
    "tqfree": is_triangle_and_quadrangle_free,
    "regular": is_regular,
}


@dataclass
class ScanSummary:
    records: list[CertifiedGraph] = field(default_factory=list)
    skipped: int = 0
    violations: list[tuple[str, BoundCertificate]] = field(default_factory=list)
    mismatches: list[tuple[str, BoundCertificate]] = field(default_factory=list)
    boundary: int = 0

    @property
    def graphs(self) -> int:
        return len(self.records)

    @property
    def ok(self) -> bool:
        return not self.violations and not self.mismatches

    def add(self, record: CertifiedGraph) -> None:
        self.records.append(record)
        for c in record.certificates:
            if c.violated:
                self.violations.append((record.graph_id, c))
            if c.mismatch:
                self.mismatches.append((record.graph_id, c))
            self.boundary += c.boundary


def _certify(item: tuple[str, Graph]) -> CertifiedGraph:
    graph_id, g = item
    return CertifiedGraph.of(graph_id, g, certify_all(g))


def scan(
    graphs: Iterable[tuple[str, Graph]],
    filters: Iterable[str] = (),
    jobs: int = 1,
) -> ScanSummary:
    """Certify every connected graph passing all ``filters``; input order is kept."""
    preds = [FILTERS[name] for name in filters]
    summary = ScanSummary()

    def selected() -> Iterator[tuple[str, Graph]]:
        for graph_id, g in graphs:
            if not g.connected or g.n < 2 or not all(p(g) for p in preds):
                summary.skipped += 1
                continue
            yield graph_id, g

    if jobs > 1:
        with Pool(jobs) as pool:
            for record in pool.imap(_certify, selected(), chunksize=16):
                summary.add(record)
    else:
        for item in selected():
            summary.add(_certify(item))
    return summary


# -- extremal claims -------------------------------------------------------------


@dataclass(frozen=True)
class ExtremalReport:
    claim_id: str
    n: int
    params: dict
    candidate_count: int
    extremal_value: float
    extremal_graphs: tuple[str, ...]
    expected_graph: str
    expected_value: Optional[float]
    claim_verified: bool
    runtime_ms: float


@dataclass(frozen=True)
class _Claim:
    description: str
    maximize: bool
    objective: Callable[[Graph], float]
    candidates: Callable[..., Iterable[Graph]]
    expected: Callable[..., Graph]
    expected_value: Optional[Callable[..., float]] = None


def _bounded_degree_trees(n: int, max_degree: int) -> Iterator[Graph]:
    return (t for t in all_trees(n) if max(t.degrees) == max_degree)


CLAIMS: dict[str, _Claim] = {
    "bipartite-min-rho": _Claim(
        "K_{floor(n/2),ceil(n/2)} uniquely minimises rho over connected bipartite graphs",
        False,
        spectral.rho,
        lambda n: all_connected_graphs(n, bipartite=True),
        lambda n: families.complete_bipartite(n // 2, n - n // 2),
        lambda n: n - 2 + (n * n - 3 * (n // 2) * (n - n // 2)) ** 0.5,
    ),
    "bipartite-max-rho": _Claim(
        "P_n uniquely maximises rho over connected bipartite graphs",
        True,
        spectral.rho,
        lambda n: all_connected_graphs(n, bipartite=True),
        families.path,
    ),
    "tree-max-rho": _Claim(
        "P_n uniquely maximises rho over trees",
        True,
        spectral.rho,
        all_trees,
        families.path,
    ),
    "tree-max-rho-degree": _Claim(
        "the broom B_{n,D} uniquely maximises rho over trees with maximum degree D",
        True,
        spectral.rho,
        _bounded_degree_trees,
        families.broom,
    ),
    "min-de": _Claim(
        "K_n uniquely minimises distance energy, with value 2(n-1)",
        False,
        spectral.distance_energy,
        all_connected_graphs,
        families.complete,
        lambda n: 2.0 * (n - 1),
    ),
}


def extremal(claim_id: str, n: int, max_degree: Optional[int] = None, rtol: float = 1e-9) -> ExtremalReport:
    try:
        claim = CLAIMS[claim_id]
    except KeyError:
        raise ValueError(f"unknown claim {claim_id!r}; choose from {sorted(CLAIMS)}") from None
    args: tuple = (n,)
    params: dict = {}
    if claim_id == "tree-max-rho-degree":
        if max_degree is None:
            raise ValueError("tree-max-rho-degree needs a maximum degree")
        args = (n, max_degree)
        params = {"max_degree": max_degree}
    start = time.perf_counter()
    best: Optional[float] = None
    attaining: list[Graph] = []
    count = 0
    for g in claim.candidates(*args):
        if g.n < 2:
            continue
        count += 1
        value = claim.objective(g)
        tol = rtol * max(1.0, abs(value))
        better = best is None or (value > best + tol if claim.maximize else value < best - tol)
        if better:
            best, attaining = value, [g]
        elif abs(value - best) <= tol:
            attaining.append(g)
    if best is None:
        raise GraphError(f"no candidates for {claim_id} at n={n}")
    expected = claim.expected(*args)
    verified = [canonical_form(g) for g in attaining] == [canonical_form(expected)]
    expected_value = claim.expected_value(*args) if claim.expected_value else None
    if expected_value is not None:
        verified = verified and abs(best - expected_value) <= rtol * max(1.0, expected_value)
    return ExtremalReport(
        claim_id,
        n,
        params,
        count,
        best,
        tuple(encode_graph6(g).decode() for g in attaining),
        encode_graph6(expected).decode(),
        expected_value,
        verified,
        (time.perf_counter() - start) * 1e3,
    )


def nordhaus(g: Graph) -> BoundCertificate:
    from .bounds import evaluate

    return evaluate("de_nordhaus_gaddum", g)
