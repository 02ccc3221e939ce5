"""Distance spectra, distance energy and certified spectral bounds for graphs."""

from .bounds import BOUNDS, BoundCertificate, certify_all, evaluate
from .graph import Graph, GraphError, complement, from_edges
from .spectral import distance_energy, distance_spectrum, graph_energy, rho

__all__ = [
    "BOUNDS",
    "BoundCertificate",
    "Graph",
    "GraphError",
    "certify_all",
    "complement",
    "distance_energy",
    "distance_spectrum",
    "evaluate",
    "from_edges",
    "graph_energy",
    "rho",
]
