"""Distance and adjacency spectra, energies and closed-form spectrum shortcuts.

Two dense symmetric eigensolvers are available.  ``"lapack"`` (the default)
calls ``numpy.linalg.eigh``; ``"householder-ql"`` is a self-contained
Householder tridiagonalisation followed by implicit QL iterations, kept as an
independent cross-check of the library path.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

import numpy as np

from .graph import Graph, GraphError, complement, is_regular

SOLVER_RTOL = 1e-9
SIGN_RTOL = 1e-8


class ConvergenceError(ArithmeticError):
    pass


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalues sorted non-increasing.

    ``source`` optionally keeps the exact integer matrix the values came from,
    which lets sign queries certify numerically-zero eigenvalues exactly.
    """

    values: tuple[float, ...]
    tolerance: float
    source: Optional[np.ndarray] = field(default=None, compare=False, repr=False)

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def __getitem__(self, k):
        return self.values[k]

    @property
    def largest(self) -> float:
        return self.values[0]

    @property
    def smallest(self) -> float:
        return self.values[-1]

    @property
    def abs_sum(self) -> float:
        return math.fsum(abs(x) for x in self.values)

    def sign_tolerance(self) -> float:
        scale = max((abs(x) for x in self.values), default=0.0)
        return SIGN_RTOL * len(self.values) * max(scale, 1.0)

    def clustered(self, rtol: float = 1e-7) -> list[tuple[float, int]]:
        """(value, multiplicity) pairs for display; never used to classify."""
        out: list[tuple[float, int]] = []
        for x in self.values:
            if out and abs(out[-1][0] - x) <= rtol * max(1.0, abs(x)):
                out[-1] = (out[-1][0], out[-1][1] + 1)
            else:
                out.append((x, 1))
        return out


@dataclass(frozen=True)
class SignCount:
    count: int
    near_zero: int
    boundary: bool


def _as_matrix(m) -> np.ndarray:
    a = np.asarray(m, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    if not np.array_equal(a, a.T):
        raise ValueError("matrix is not symmetric")
    return a


def _spectrum(values: np.ndarray, a: np.ndarray, source=None) -> Spectrum:
    n = a.shape[0]
    scale = float(np.abs(a).max()) if n else 0.0
    vals = tuple(float(x) for x in sorted(values, reverse=True))
    return Spectrum(vals, SOLVER_RTOL * max(n, 1) * max(scale, 1.0), source)


def symmetric_eigenvalues(m, method: str = "lapack", source=None) -> Spectrum:
    a = _as_matrix(m)
    if a.shape[0] == 0:
        return Spectrum((), SOLVER_RTOL)
    if method == "lapack":
        values = np.linalg.eigvalsh(a)
    elif method == "householder-ql":
        values, _ = householder_ql(a, vectors=False)
    else:
        raise ValueError(f"unknown eigensolver {method!r}")
    return _spectrum(values, a, source)


def symmetric_eigh(m, method: str = "lapack") -> tuple[np.ndarray, np.ndarray]:
    """Ascending eigenvalues and matching column eigenvectors."""
    a = _as_matrix(m)
    if method == "lapack":
        return np.linalg.eigh(a)
    if method == "householder-ql":
        values, vectors = householder_ql(a, vectors=True)
        order = np.argsort(values, kind="stable")
        return values[order], vectors[:, order]
    raise ValueError(f"unknown eigensolver {method!r}")


def tridiagonalize(a: np.ndarray, vectors: bool = False):
    """Householder reduction of a symmetric matrix.

    Returns ``(diag, offdiag, q)`` with ``q.T @ a @ q`` tridiagonal; ``q`` is
    ``None`` unless ``vectors`` is set.
    """
    a = np.array(a, dtype=float)
    n = a.shape[0]
    q = np.eye(n) if vectors else None
    for k in range(n - 2):
        x = a[k + 1:, k].copy()
        norm = np.linalg.norm(x)
        if norm == 0.0:
            continue
        alpha = -math.copysign(norm, x[0])
        v = x
        v[0] -= alpha
        vnorm = np.linalg.norm(v)
        if vnorm == 0.0:
            continue
        v /= vnorm
        sub = a[k + 1:, k + 1:]
        w = sub @ v
        w -= (v @ w) * v
        sub -= 2.0 * (np.outer(v, w) + np.outer(w, v))
        a[k + 1:, k] = 0.0
        a[k, k + 1:] = 0.0
        a[k + 1, k] = a[k, k + 1] = alpha
        if q is not None:
            q[:, k + 1:] -= 2.0 * np.outer(q[:, k + 1:] @ v, v)
    diag = np.diag(a).copy()
    off = np.array([a[i + 1, i] for i in range(n - 1)])
    return diag, off, q


def tridiagonal_ql(diag, off, z: Optional[np.ndarray] = None, max_iter: int = 60):
    """Implicit-shift QL on a symmetric tridiagonal matrix.

    ``z`` (if given) is updated in place with the accumulated rotations.
    """
    d = [float(x) for x in diag]
    n = len(d)
    e = [float(x) for x in off] + [0.0]
    eps = np.finfo(float).eps
    for l in range(n):
        it = 0
        while True:
            m = l
            while m < n - 1:
                dd = abs(d[m]) + abs(d[m + 1])
                if abs(e[m]) <= eps * dd:
                    break
                m += 1
            if m == l:
                break
            it += 1
            if it > max_iter:
                raise ConvergenceError(f"QL failed to converge for eigenvalue {l}")
            g = (d[l + 1] - d[l]) / (2.0 * e[l])
            r = math.hypot(g, 1.0)
            g = d[m] - d[l] + e[l] / (g + math.copysign(r, g))
            s = c = 1.0
            p = 0.0
            i = m - 1
            deflated = False
            while i >= l:
                f = s * e[i]
                b = c * e[i]
                r = math.hypot(f, g)
                e[i + 1] = r
                if r == 0.0:
                    d[i + 1] -= p
                    e[m] = 0.0
                    deflated = True
                    break
                s = f / r
                c = g / r
                g = d[i + 1] - p
                r = (d[i] - g) * s + 2.0 * c * b
                p = s * r
                d[i + 1] = g + p
                g = c * r - b
                if z is not None:
                    zi = z[:, i].copy()
                    z[:, i] = c * zi - s * z[:, i + 1]
                    z[:, i + 1] = s * zi + c * z[:, i + 1]
                i -= 1
            if deflated:
                continue
            d[l] -= p
            e[l] = g
            e[m] = 0.0
    return np.array(d)


def householder_ql(a: np.ndarray, vectors: bool = False):
    diag, off, q = tridiagonalize(a, vectors=vectors)
    values = tridiagonal_ql(diag, off, q)
    return values, q


# -- graph spectra ----------------------------------------------------------


def _memo(g: Graph, key, compute):
    try:
        return g.memo[key]
    except KeyError:
        value = g.memo[key] = compute()
        return value


def distance_spectrum(g: Graph, method: str = "lapack") -> Spectrum:
    def compute():
        d = g.distances.d
        return symmetric_eigenvalues(d, method=method, source=d)

    return _memo(g, ("dspec", method), compute)


def rho(g: Graph) -> float:
    if g.n == 1:
        g.distances  # connectivity check
        return 0.0
    return distance_spectrum(g).largest


def distance_energy(g: Graph) -> float:
    return distance_spectrum(g).abs_sum


def adjacency_spectrum(g: Graph, method: str = "lapack") -> Spectrum:
    def compute():
        a = g.adjacency
        return symmetric_eigenvalues(a, method=method, source=a)

    return _memo(g, ("aspec", method), compute)


def graph_energy(g: Graph) -> float:
    return adjacency_spectrum(g).abs_sum


def integer_rank(m) -> int:
    """Exact rank of an integer matrix by Gaussian elimination over the rationals."""
    rows = [[Fraction(int(x)) for x in row] for row in np.asarray(m)]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][col] != 0), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        pr = rows[rank]
        for r in range(rank + 1, len(rows)):
            factor = rows[r][col] / pr[col]
            if factor:
                rows[r] = [x - factor * y for x, y in zip(rows[r], pr)]
        rank += 1
    return rank


def count_positive_d_eigenvalues(s: Spectrum) -> SignCount:
    """Count eigenvalues above the sign tolerance.

    Values within the tolerance of zero are accepted as exact zeros only when
    their number equals the exact nullity of ``s.source``; otherwise the
    result is flagged as a boundary case.
    """
    tol = s.sign_tolerance()
    positive = sum(1 for x in s.values if x > tol)
    near = sum(1 for x in s.values if abs(x) <= tol)
    boundary = False
    if near:
        if s.source is None:
            boundary = True
        else:
            boundary = len(s) - integer_rank(s.source) != near
    return SignCount(positive, near, boundary)


def least_eigenvalue_at_least(g: Graph, bound: int) -> tuple[bool, bool]:
    """Decide ``lambda_min(A(g)) >= bound`` for an integer ``bound``.

    Returns ``(holds, boundary)``.  Eigenvalues numerically equal to ``bound``
    are confirmed exactly through the nullity of ``A - bound*I``.
    """
    spec = adjacency_spectrum(g)
    tol = spec.sign_tolerance()
    near = sum(1 for x in spec.values if abs(x - bound) <= tol)
    below = any(x < bound - tol for x in spec.values)
    if below:
        return False, False
    if not near:
        return True, False
    shifted = np.asarray(g.adjacency) - bound * np.eye(g.n, dtype=np.int64)
    exact = g.n - integer_rank(shifted) == near
    return exact, not exact


def perron_vector(g: Graph) -> np.ndarray:
    if g.n < 2:
        raise GraphError("Perron vector needs at least two vertices")
    _, vecs = symmetric_eigh(g.distances.d)
    x = vecs[:, -1]
    if x.sum() < 0:
        x = -x
    if (x <= 0).any():
        raise ArithmeticError("Perron vector has a non-positive entry")
    return x / np.linalg.norm(x)


def regular_diam2_distance_spectrum(g: Graph) -> Spectrum:
    """D-spectrum of a regular graph of diameter at most two from its adjacency spectrum."""
    if not is_regular(g) or g.n < 2 or g.distances.diameter > 2:
        raise GraphError("shortcut needs a regular graph of diameter at most two")
    n, r = g.n, g.degrees[0]
    lam = adjacency_spectrum(g).values
    values = [2 * n - r - 2] + [-x - 2 for x in lam[1:]]
    tol = SOLVER_RTOL * n * max(2.0, 1.0)
    return Spectrum(tuple(sorted(values, reverse=True)), tol, g.distances.d)


def complete_bipartite_distance_spectrum(p: int, q: int) -> Spectrum:
    if p < 1 or q < 1:
        raise ValueError("complete bipartite graph needs p, q >= 1")
    root = math.sqrt(p * p - p * q + q * q)
    values = [p + q - 2 + root, p + q - 2 - root] + [-2.0] * (p + q - 2)
    return Spectrum(tuple(sorted(values, reverse=True)), SOLVER_RTOL * (p + q) * 2)


def singular_value_sum(m) -> float:
    """Sum of singular values; for a symmetric matrix the absolute eigenvalues."""
    a = np.asarray(m, dtype=float)
    if a.ndim == 2 and a.shape[0] == a.shape[1] and np.array_equal(a, a.T):
        return symmetric_eigenvalues(a).abs_sum
    return math.fsum(np.linalg.svd(a, compute_uv=False))


def complement_energy(g: Graph) -> float:
    return _memo(g, "complement_energy", lambda: graph_energy(complement(g)))

