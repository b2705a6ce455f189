"""Dense symmetric eigen-machinery and algebraic connectivity.

The eigensolver is a cyclic Jacobi sweep over the strict upper triangle in
lexicographic order, rotating until the off-diagonal Frobenius mass drops
below 1e-14 of the input norm.  A numba-compiled kernel is used when
available; the NumPy fallback applies the identical rotation schedule.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import ConvergenceError, DisconnectedGraphError, GraphError
from .families import FamilySpec
from .graph import Graph

OFF_DIAGONAL_TOL = 1e-14
MULTIPLICITY_TOL = 1e-9
DISCONNECT_TOL = 1e-9
MAX_SWEEPS = 100


@dataclass(frozen=True)
class SymMatrix:
    """Dense symmetric matrix; symmetry is forced from the upper triangle."""

    order: int
    entries: np.ndarray

    @classmethod
    def from_array(cls, a: np.ndarray) -> "SymMatrix":
        a = np.asarray(a, dtype=np.float64)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise ValueError(f"expected a square matrix, got shape {a.shape}")
        sym = np.triu(a) + np.triu(a, 1).T
        sym.setflags(write=False)
        return cls(order=a.shape[0], entries=sym)


@dataclass(frozen=True)
class Spectrum:
    """Eigendecomposition of a symmetric matrix, eigenvalues ascending."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray
    mu: Optional[float]
    mu_multiplicity: int
    fiedler: Optional[np.ndarray]


def laplacian(g: Graph) -> SymMatrix:
    """Degree matrix minus adjacency matrix."""
    n = g.n
    a = np.zeros((n, n), dtype=np.float64)
    for u, v in g.edges:
        a[u, v] = a[v, u] = -1.0
    for v in range(n):
        a[v, v] = g.degree(v)
    return SymMatrix.from_array(a)


def _jacobi_python(a: np.ndarray, v: np.ndarray, tol_off: float, max_sweeps: int) -> int:
    n = a.shape[0]
    thresh = tol_off / (2.0 * n)
    for sweep in range(max_sweeps):
        off = math.sqrt(2.0 * float(np.sum(np.triu(a, 1) ** 2)))
        if off <= tol_off:
            return sweep
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) <= thresh:
                    continue
                app = a[p, p]
                aqq = a[q, q]
                theta = (aqq - app) / (2.0 * apq)
                t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                cp = a[:, p].copy()
                cq = a[:, q].copy()
                a[:, p] = c * cp - s * cq
                a[:, q] = s * cp + c * cq
                rp = a[p, :].copy()
                rq = a[q, :].copy()
                a[p, :] = c * rp - s * rq
                a[q, :] = s * rp + c * rq
                a[p, p] = app - t * apq
                a[q, q] = aqq + t * apq
                a[p, q] = a[q, p] = 0.0
                vp = v[:, p].copy()
                vq = v[:, q].copy()
                v[:, p] = c * vp - s * vq
                v[:, q] = s * vp + c * vq
    return -1


def _jacobi_scalar(a, v, tol_off, max_sweeps):  # pragma: no cover - numba source
    n = a.shape[0]
    thresh = tol_off / (2.0 * n)
    for sweep in range(max_sweeps):
        off = 0.0
        for i in range(n - 1):
            for j in range(i + 1, n):
                off += a[i, j] * a[i, j]
        if math.sqrt(2.0 * off) <= tol_off:
            return sweep
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) <= thresh:
                    continue
                app = a[p, p]
                aqq = a[q, q]
                theta = (aqq - app) / (2.0 * apq)
                if theta >= 0.0:
                    t = 1.0 / (theta + math.sqrt(theta * theta + 1.0))
                else:
                    t = -1.0 / (-theta + math.sqrt(theta * theta + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                for i in range(n):
                    if i != p and i != q:
                        aip = a[i, p]
                        aiq = a[i, q]
                        a[i, p] = c * aip - s * aiq
                        a[p, i] = a[i, p]
                        a[i, q] = s * aip + c * aiq
                        a[q, i] = a[i, q]
                a[p, p] = app - t * apq
                a[q, q] = aqq + t * apq
                a[p, q] = 0.0
                a[q, p] = 0.0
                for i in range(n):
                    vip = v[i, p]
                    viq = v[i, q]
                    v[i, p] = c * vip - s * viq
                    v[i, q] = s * vip + c * viq
    return -1


try:  # optional compiled kernel; the fallback runs the same schedule
    from numba import njit

    _jacobi_kernel = njit(cache=True)(_jacobi_scalar)
except ImportError:  # pragma: no cover
    _jacobi_kernel = _jacobi_python


def eigen_sym(m: SymMatrix, *, mult_tol: float = MULTIPLICITY_TOL) -> Spectrum:
    """Full eigendecomposition by cyclic Jacobi rotations."""
    n = m.order
    if n == 0:
        raise ValueError("cannot decompose an empty matrix")
    a = np.array(m.entries, dtype=np.float64)
    v = np.eye(n)
    if n > 1:
        tol_off = OFF_DIAGONAL_TOL * math.sqrt(float(np.sum(a * a)))
        if tol_off > 0.0:
            sweeps = _jacobi_kernel(a, v, tol_off, MAX_SWEEPS)
            if sweeps < 0:
                raise ConvergenceError(
                    f"Jacobi failed to converge in {MAX_SWEEPS} sweeps (n={n})"
                )
    w = np.diag(a).copy()
    order = np.argsort(w, kind="stable")
    w = w[order]
    v = v[:, order]
    if n >= 2:
        mu = float(w[1])
        mult = int(np.sum(np.abs(w - mu) <= mult_tol))
        fiedler = _sign_normalize(v[:, 1].copy())
    else:
        mu = None
        mult = 0
        fiedler = None
    w.setflags(write=False)
    v.setflags(write=False)
    return Spectrum(
        eigenvalues=w, eigenvectors=v, mu=mu, mu_multiplicity=mult, fiedler=fiedler
    )


def _sign_normalize(y: np.ndarray) -> np.ndarray:
    scale = np.max(np.abs(y))
    if scale > 0.0:
        for val in y:
            if abs(val) > 1e-12 * scale:
                if val < 0.0:
                    y = -y
                break
    y.setflags(write=False)
    return y


def lambda_max(a: np.ndarray) -> float:
    """Largest eigenvalue of a symmetric matrix via the Jacobi kernel."""
    return float(eigen_sym(SymMatrix.from_array(a)).eigenvalues[-1])


def algebraic_connectivity(
    g: Graph, *, mult_tol: float = MULTIPLICITY_TOL
) -> tuple[float, int, np.ndarray]:
    """Second-smallest Laplacian eigenvalue with multiplicity and Fiedler vector.

    The Fiedler vector is unit length with its first nonzero coordinate
    positive.  Disconnected graphs (lambda_2 below the disconnect threshold)
    are rejected.
    """
    if g.n < 2:
        raise GraphError("algebraic connectivity needs at least two vertices")
    spec = eigen_sym(laplacian(g), mult_tol=mult_tol)
    assert spec.mu is not None and spec.fiedler is not None
    if spec.mu < DISCONNECT_TOL:
        raise DisconnectedGraphError(
            f"graph is disconnected (lambda_2 = {spec.mu:.3e})"
        )
    return spec.mu, spec.mu_multiplicity, spec.fiedler


def mu_value(g: Graph) -> float:
    """Shorthand for the algebraic connectivity value alone."""
    return algebraic_connectivity(g)[0]


def mu_closed_form(spec: FamilySpec) -> Optional[float]:
    """Exact algebraic connectivity where a closed form exists.

    Covers paths, cycles, stars and complete graphs; other families return
    None.
    """
    fid = spec.family_id
    p = spec.params
    if fid == "path" and p[0] >= 2:
        return 2.0 * (1.0 - math.cos(math.pi / p[0]))
    if fid == "cycle" and p[0] >= 3:
        return 2.0 * (1.0 - math.cos(2.0 * math.pi / p[0]))
    if fid == "star":
        if p[0] >= 3:
            return 1.0
        if p[0] == 2:
            return 2.0
        return None
    if fid == "complete" and p[0] >= 2:
        return float(p[0])
    return None


def diameter_bound(d: int) -> float:
    """Upper bound on tree algebraic connectivity for a given diameter."""
    if d < 1:
        raise ValueError(f"diameter must be >= 1, got {d}")
    return 2.0 * (1.0 - math.cos(math.pi / (d + 1)))
