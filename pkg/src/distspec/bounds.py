"""Distance spectral radius and distance energy bounds as checkable certificates.

Every bound is registered under a stable identifier.  Evaluating it on a
graph yields a :class:`BoundCertificate` holding both sides of the
inequality, the slack, whether the graph falls in the bound's equality class
(when the bound characterises one), and whether equality is observed
numerically.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass
from typing import Callable, Optional

import numpy as np

from . import spectral
from .graph import (
    Graph,
    complement,
    degree_summary,
    is_regular,
    is_semiregular,
    is_triangle_and_quadrangle_free,
    wiener,
    zagreb_m1,
)

EQUALITY_RTOL = 1e-7

LOWER_RHO = "lower-rho"
UPPER_RHO = "upper-rho"
LOWER_DE = "lower-DE"
UPPER_DE = "upper-DE"
PAIR_DE = "pair-DE"


@dataclass(frozen=True)
class BoundCertificate:
    bound_id: str
    kind: str
    applicable: bool
    observed_value: float
    bound_value: Optional[float] = None
    slack: Optional[float] = None
    equality_predicted: Optional[bool] = None
    equality_observed: Optional[bool] = None
    boundary: bool = False
    reason: str = ""

    @property
    def tolerance(self) -> float:
        return EQUALITY_RTOL * max(1.0, abs(self.observed_value))

    @property
    def violated(self) -> bool:
        return self.applicable and self.slack < -self.tolerance

    @property
    def mismatch(self) -> bool:
        """Predicted and observed equality disagree (never for uncharacterised bounds)."""
        return (
            self.applicable
            and self.equality_predicted is not None
            and not self.boundary
            and self.equality_predicted != self.equality_observed
        )

    def to_dict(self) -> dict:
        return asdict(self)


class Inapplicable(Exception):
    pass


@dataclass(frozen=True)
class _Outcome:
    bound: float
    predicted: Optional[bool] = None
    boundary: bool = False
    reason: str = ""


@dataclass(frozen=True)
class _Bound:
    bound_id: str
    kind: str
    evaluate: Callable[[Graph], _Outcome]


BOUNDS: dict[str, _Bound] = {}


def _register(bound_id: str, kind: str):
    def wrap(fn):
        BOUNDS[bound_id] = _Bound(bound_id, kind, fn)
        return fn

    return wrap


# -- graph facts shared by the characterisations ----------------------------


def _rho(g: Graph) -> float:
    return spectral.rho(g)


def _de(g: Graph) -> float:
    return spectral.distance_energy(g)


def _diam(g: Graph) -> int:
    return g.distances.diameter


def _one_positive(g: Graph) -> tuple[bool, bool]:
    sc = spectral.count_positive_d_eigenvalues(spectral.distance_spectrum(g))
    return sc.count == 1, sc.boundary


def _equal_row_sums(g: Graph) -> bool:
    rs = g.distances.row_sums
    return bool((rs == rs[0]).all())


def _regular_diam_le2(g: Graph) -> bool:
    return is_regular(g) and _diam(g) <= 2


def _is_complete(g: Graph) -> bool:
    return g.m == g.n * (g.n - 1) // 2


def _is_complete_bipartite(g: Graph) -> bool:
    bp = g.bipartition
    return bp is not None and g.m == bp.p * bp.q


def _semiregular_ecc3(g: Graph) -> bool:
    return is_semiregular(g) and all(e == 3 for e in g.distances.eccentricities)


def _same_side_distance_two(g: Graph) -> bool:
    bp = g.bipartition
    d = g.distances.d
    side = np.array(bp.side)
    same = (side[:, None] == side[None, :]) & ~np.eye(g.n, dtype=bool)
    return bool((d[same] == 2).all())


def _need_bipartite(g: Graph):
    bp = g.bipartition
    if bp is None:
        raise Inapplicable("graph is not bipartite")
    return bp


def _need_diam_le2(g: Graph) -> None:
    if _diam(g) > 2:
        raise Inapplicable(f"diameter {_diam(g)} exceeds 2")


def _need_tq_free(g: Graph) -> None:
    if not is_triangle_and_quadrangle_free(g):
        raise Inapplicable("graph contains a triangle or a quadrangle")


def _sqrt(x: float) -> float:
    if x < 0:
        raise Inapplicable(f"negative radicand {x:.6g}")
    return math.sqrt(x)


# -- spectral radius: general graphs ----------------------------------------


def _degree_product_bound(g: Graph) -> float:
    ds = degree_summary(g)
    n = g.n
    return math.sqrt((2 * n - 2 - ds.max1) * (2 * n - 2 - ds.max2))


@_register("rho_lower_degrees", LOWER_RHO)
def _rho_lower_degrees(g: Graph) -> _Outcome:
    return _Outcome(_degree_product_bound(g), _regular_diam_le2(g))


@_register("rho_upper_degrees_diameter", UPPER_RHO)
def _rho_upper_degrees_diameter(g: Graph) -> _Outcome:
    ds = degree_summary(g)
    n, d = g.n, _diam(g)
    base = d * n - d * (d - 1) / 2 - 1
    return _Outcome(_sqrt((base - ds.min1 * (d - 1)) * (base - ds.min2 * (d - 1))), _regular_diam_le2(g))


@_register("rho_lower_row_sums", LOWER_RHO)
def _rho_lower_row_sums(g: Graph) -> _Outcome:
    rs = g.distances.row_sums.astype(float)
    return _Outcome(math.sqrt(float(rs @ rs) / g.n), _equal_row_sums(g))


@_register("rho_lower_wiener", LOWER_RHO)
def _rho_lower_wiener(g: Graph) -> _Outcome:
    return _Outcome(2 * wiener(g) / g.n, _equal_row_sums(g))


@_register("rho_lower_edges", LOWER_RHO)
def _rho_lower_edges(g: Graph) -> _Outcome:
    return _Outcome(2 * (g.n - 1) - 2 * g.m / g.n, _regular_diam_le2(g))


def _tq_free_value(g: Graph) -> float:
    n = g.n
    return 3 * (n - 1) - 2 * g.m / n - zagreb_m1(g) / n


@_register("rho_lower_tq_free", LOWER_RHO)
def _rho_lower_tq_free(g: Graph) -> _Outcome:
    _need_tq_free(g)
    return _Outcome(_tq_free_value(g), _equal_row_sums(g) and _diam(g) <= 3)


# -- spectral radius: bipartite graphs --------------------------------------


@_register("rho_lower_bipartite_das", LOWER_RHO)
def _rho_lower_bipartite_das(g: Graph) -> _Outcome:
    """n - 2 + sqrt(n^2 - 3pq): the complete bipartite radius for the same parts."""
    bp = _need_bipartite(g)
    n = g.n
    return _Outcome(n - 2 + math.sqrt(n * n - 3 * bp.p * bp.q), _is_complete_bipartite(g))


@_register("rho_lower_bipartite", LOWER_RHO)
def _rho_lower_bipartite(g: Graph) -> _Outcome:
    bp = _need_bipartite(g)
    n, p, q = g.n, bp.p, bp.q
    value = n - 2 + _sqrt(n * n - 4 * p * q + (3 * q - 2 * bp.max_a) * (3 * p - 2 * bp.max_b))
    return _Outcome(value, _is_complete_bipartite(g) or _semiregular_ecc3(g))


def _need_parity(g: Graph, even: bool) -> int:
    d = _diam(g)
    if (d % 2 == 0) != even:
        raise Inapplicable(f"diameter {d} is {'odd' if even else 'even'}")
    return d


def _upper_even(n: int, d: int, p: int, q: int, da: int, db: int) -> float:
    rad = (
        d * d * n * n
        + 4 * da * db * (d - 2) ** 2
        - 4 * p * q * (2 * d - 1)
        - 4 * (d - 1) * (d - 2) * (p * da + q * db)
    )
    return d / 2 * (n - 1 - d / 2) + _sqrt(rad) / 2


def _upper_odd(n: int, d: int, p: int, q: int, da: int, db: int) -> float:
    rad = (
        (d - 1) ** 2 * n * n
        + 4 * da * db * (d - 1) ** 2
        + 4 * p * q * (2 * d - 1)
        - 4 * d * (d - 1) * (p * da + q * db)
    )
    return (2 * (d - 1) * n + 1 - d * d) / 4 + _sqrt(rad) / 2


@_register("rho_upper_bipartite_even", UPPER_RHO)
def _rho_upper_bipartite_even(g: Graph) -> _Outcome:
    bp = _need_bipartite(g)
    d = _need_parity(g, even=True)
    value = _upper_even(g.n, d, bp.p, bp.q, bp.min_a, bp.min_b)
    return _Outcome(value, d == 2 and _is_complete_bipartite(g))


@_register("rho_upper_bipartite_odd", UPPER_RHO)
def _rho_upper_bipartite_odd(g: Graph) -> _Outcome:
    bp = _need_bipartite(g)
    d = _need_parity(g, even=False)
    value = _upper_odd(g.n, d, bp.p, bp.q, bp.min_a, bp.min_b)
    predicted = g.n == 2 or (
        d == 3
        and is_semiregular(g)
        and _same_side_distance_two(g)
        and all(e == 3 for e in g.distances.eccentricities)
    )
    return _Outcome(value, predicted)


@_register("rho_upper_bipartite_min_degree_even", UPPER_RHO)
def _rho_upper_bipartite_min_degree_even(g: Graph) -> _Outcome:
    bp = _need_bipartite(g)
    d = _need_parity(g, even=True)
    delta = min(bp.min_a, bp.min_b)
    return _Outcome(_upper_even(g.n, d, bp.p, bp.q, delta, delta))


@_register("rho_upper_bipartite_min_degree_odd", UPPER_RHO)
def _rho_upper_bipartite_min_degree_odd(g: Graph) -> _Outcome:
    bp = _need_bipartite(g)
    d = _need_parity(g, even=False)
    delta = min(bp.min_a, bp.min_b)
    return _Outcome(_upper_odd(g.n, d, bp.p, bp.q, delta, delta))


@_register("rho_upper_das_even", UPPER_RHO)
def _rho_upper_das_even(g: Graph) -> _Outcome:
    bp = _need_bipartite(g)
    d = _need_parity(g, even=True)
    n = g.n
    return _Outcome((d * (n - 2) + _sqrt(d * d * n * n - 4 * bp.p * bp.q * (2 * d - 1))) / 2)


@_register("rho_upper_das_odd", UPPER_RHO)
def _rho_upper_das_odd(g: Graph) -> _Outcome:
    # pq term taken with a plus sign; the minus-sign reading has a negative
    # radicand already on P_4 and C_6.
    bp = _need_bipartite(g)
    d = _need_parity(g, even=False)
    n = g.n
    delta = min(g.degrees)
    rad = (
        (d - 1) ** 2 * n * n
        + 4 * delta * delta * (d - 1) ** 2
        + 4 * bp.p * bp.q * (2 * d - 1)
        - 4 * d * (d - 1) * delta * n
    )
    return _Outcome((d - 1) * (n - 2) / 2 + _sqrt(rad) / 2)


# -- distance energy: lower bounds ------------------------------------------


def _and_one_positive(g: Graph, structural: bool) -> tuple[bool, bool]:
    if not structural:
        return False, False
    return _one_positive(g)


@_register("de_lower_two_rho", LOWER_DE)
def _de_lower_two_rho(g: Graph) -> _Outcome:
    pred, boundary = _one_positive(g)
    return _Outcome(2 * _rho(g), pred, boundary)


@_register("de_lower_row_sums", LOWER_DE)
def _de_lower_row_sums(g: Graph) -> _Outcome:
    pred, boundary = _and_one_positive(g, _equal_row_sums(g))
    return _Outcome(2 * _rho_lower_row_sums(g).bound, pred, boundary)


@_register("de_lower_wiener", LOWER_DE)
def _de_lower_wiener(g: Graph) -> _Outcome:
    pred, boundary = _and_one_positive(g, _equal_row_sums(g))
    return _Outcome(4 * wiener(g) / g.n, pred, boundary)


@_register("de_lower_edges", LOWER_DE)
def _de_lower_edges(g: Graph) -> _Outcome:
    pred, boundary = _and_one_positive(g, _regular_diam_le2(g))
    return _Outcome(4 * (g.n - 1) - 4 * g.m / g.n, pred, boundary)


def _complete_or_regular_diam2_class(g: Graph) -> tuple[bool, bool]:
    """K_n, or regular of diameter two with least adjacency eigenvalue >= -2."""
    if _is_complete(g):
        return True, False
    if not (is_regular(g) and _diam(g) == 2):
        return False, False
    return spectral.least_eigenvalue_at_least(g, -2)


@_register("de_lower_edges_characterized", LOWER_DE)
def _de_lower_edges_characterized(g: Graph) -> _Outcome:
    pred, boundary = _complete_or_regular_diam2_class(g)
    return _Outcome(4 * (g.n - 1) - 4 * g.m / g.n, pred, boundary)


@_register("de_lower_degrees", LOWER_DE)
def _de_lower_degrees(g: Graph) -> _Outcome:
    pred, boundary = _complete_or_regular_diam2_class(g)
    return _Outcome(2 * _degree_product_bound(g), pred, boundary)


@_register("de_lower_tq_free", LOWER_DE)
def _de_lower_tq_free(g: Graph) -> _Outcome:
    _need_tq_free(g)
    pred, boundary = _and_one_positive(g, _equal_row_sums(g) and _diam(g) <= 3)
    return _Outcome(2 * _tq_free_value(g), pred, boundary)


def _kpq_one_positive(p: int, q: int) -> bool:
    return 3 * p * q <= 4 * (p + q - 1)


@_register("de_lower_complete_bipartite", LOWER_DE)
def _de_lower_complete_bipartite(g: Graph) -> _Outcome:
    bp = _need_bipartite(g)
    p, q = bp.p, bp.q
    value = 2 * (p + q - 2 + math.sqrt(p * p + q * q - p * q))
    return _Outcome(value, _is_complete_bipartite(g) and _kpq_one_positive(p, q))


@_register("de_lower_balanced_bipartite", LOWER_DE)
def _de_lower_balanced_bipartite(g: Graph) -> _Outcome:
    bp = _need_bipartite(g)
    n = g.n
    lo, hi = n // 2, n - n // 2
    value = 2 * (n - 2 + math.sqrt(n * n - 3 * lo * hi))
    return _Outcome(value, _is_complete_bipartite(g) and {bp.p, bp.q} == {lo, hi} and n <= 4)


@_register("de_lower_bipartite_degrees", LOWER_DE)
def _de_lower_bipartite_degrees(g: Graph) -> _Outcome:
    outcome = _rho_lower_bipartite(g)
    pred, boundary = _and_one_positive(g, outcome.predicted)
    return _Outcome(2 * outcome.bound, pred, boundary)


# -- distance energy: complement pair and upper bounds ----------------------


def nordhaus_observed(g: Graph) -> float:
    h = complement(g)
    if not h.connected:
        return _de(g)
    return _de(g) + _de(h)


@_register("de_nordhaus_gaddum", PAIR_DE)
def _de_nordhaus_gaddum(g: Graph) -> _Outcome:
    h = complement(g)
    if not h.connected:
        raise Inapplicable("complement is disconnected")
    pred, boundary = False, False
    if is_regular(g) and _diam(g) == 2 and _diam(h) == 2:
        p1, b1 = _one_positive(g)
        p2, b2 = _one_positive(h)
        pred, boundary = p1 and p2, b1 or b2
    return _Outcome(6 * (g.n - 1), pred, boundary)


@_register("de_upper_complement_energy", UPPER_DE)
def _de_upper_complement_energy(g: Graph) -> _Outcome:
    _need_diam_le2(g)
    return _Outcome(2 * (g.n - 1) + spectral.complement_energy(g))


@_register("de_upper_koolen_shifted", UPPER_DE)
def _de_upper_koolen_shifted(g: Graph) -> _Outcome:
    _need_diam_le2(g)
    n = g.n
    return _Outcome(n / 2 * (math.sqrt(n) + 1) + 2 * (n - 1))


@_register("de_upper_igv_general", UPPER_DE)
def _de_upper_igv_general(g: Graph) -> _Outcome:
    # the closed form counts every non-adjacent pair at distance two
    _need_diam_le2(g)
    n = g.n
    return _Outcome(_sqrt(2 * n * (2 * n * n - 2 * n - 3 * g.m)))


@_register("de_upper_igv_diam2", UPPER_DE)
def _de_upper_igv_diam2(g: Graph) -> _Outcome:
    _need_diam_le2(g)
    n, m = g.n, g.m
    rad = (n - 1) * ((2 * n + m) * (2 * n * n - 4 * m) - 4 * n * n)
    value = (2 * n * n - 2 * n - 2 * m) / n + _sqrt(rad) / n
    note = "evaluated at diameter 1 by convention" if _diam(g) == 1 else ""
    return _Outcome(value, reason=note)


# -- evaluation -------------------------------------------------------------


def _observed(g: Graph, kind: str) -> float:
    if kind in (LOWER_RHO, UPPER_RHO):
        return _rho(g)
    if kind == PAIR_DE:
        return nordhaus_observed(g)
    return _de(g)


def evaluate(bound_id: str, g: Graph) -> BoundCertificate:
    spec = BOUNDS[bound_id]
    if g.n < 2:
        return BoundCertificate(bound_id, spec.kind, False, 0.0, reason="needs at least two vertices")
    observed = _observed(g, spec.kind)
    try:
        out = spec.evaluate(g)
    except Inapplicable as exc:
        return BoundCertificate(bound_id, spec.kind, False, observed, reason=str(exc))
    if spec.kind in (UPPER_RHO, UPPER_DE):
        slack = out.bound - observed
    else:
        slack = observed - out.bound
    tol = EQUALITY_RTOL * max(1.0, abs(observed))
    return BoundCertificate(
        bound_id,
        spec.kind,
        True,
        observed,
        bound_value=out.bound,
        slack=slack,
        equality_predicted=out.predicted,
        equality_observed=abs(slack) <= tol,
        boundary=out.boundary,
        reason=out.reason,
    )


def certify_all(g: Graph) -> list[BoundCertificate]:
    if not g.connected:
        g.distances  # raises with the unreachable pair
    return [evaluate(bid, g) for bid in sorted(BOUNDS)]


def _public(bound_id: str):
    def certificate(g: Graph) -> BoundCertificate:
        return evaluate(bound_id, g)

    certificate.__name__ = certificate.__qualname__ = bound_id
    certificate.__doc__ = f"Certificate for ``{bound_id}`` ({BOUNDS[bound_id].kind})."
    return certificate


for _bound_id in BOUNDS:
    globals()[_bound_id] = _public(_bound_id)
del _bound_id


def rho_bounds_das(g: Graph) -> tuple[BoundCertificate, BoundCertificate]:
    return evaluate("rho_upper_das_even", g), evaluate("rho_upper_das_odd", g)
