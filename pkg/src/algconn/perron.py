"""Bottleneck matrices, Perron components and characteristic sets.

A bottleneck matrix is the inverse of the principal Laplacian submatrix on
one component at a vertex; it is entrywise positive, so it has a simple
dominant eigenvalue (the Perron value) with a positive eigenvector.  The
balance solvers locate the algebraic connectivity from these matrices by
bisection at cut vertices and bridges.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import (
    BalanceError,
    ConvergenceError,
    GraphError,
    NotABridgeError,
    NotACutVertexError,
    NotAFiedlerVectorError,
    NotATreeError,
)
from .graph import ComponentDecomposition, Graph, components_at, is_bridge, is_tree
from .spectral import algebraic_connectivity, eigen_sym, lambda_max, laplacian

PERRON_TIE_TOL = 1e-9
ZERO_COORD_TOL = 1e-8
BALANCE_X_TOL = 1e-12
RAYLEIGH_TOL = 1e-13
POWER_MAX_ITER = 100_000


@dataclass(frozen=True)
class BottleneckMatrix:
    """Inverse Laplacian block for one component at a base vertex.

    vertices fixes the row/column order of matrix (ascending labels).
    """

    base_vertex: int
    component: frozenset[int]
    vertices: tuple[int, ...]
    matrix: np.ndarray
    perron_value: float
    perron_vector: np.ndarray


@dataclass(frozen=True)
class PerronComponent:
    vertices: frozenset[int]
    perron_value: float
    is_perron: bool


@dataclass(frozen=True)
class PerronDecomposition:
    base_vertex: int
    components: tuple[PerronComponent, ...]

    def perron_components(self) -> tuple[PerronComponent, ...]:
        return tuple(c for c in self.components if c.is_perron)


@dataclass(frozen=True)
class CharacteristicSet:
    """Zero vertices and sign-change edges of a Fiedler vector."""

    vertices: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]
    fiedler_used: np.ndarray
    mu_multiplicity: int

    def __len__(self) -> int:
        return len(self.vertices) + len(self.edges)


def _power_iteration(m: np.ndarray) -> tuple[float, np.ndarray]:
    """Dominant eigenpair of a positive matrix, all-ones start vector."""
    n = m.shape[0]
    x = np.full(n, 1.0 / math.sqrt(n))
    lam = float(x @ (m @ x))
    for _ in range(POWER_MAX_ITER):
        y = m @ x
        norm = float(np.linalg.norm(y))
        if norm == 0.0:
            raise ConvergenceError("power iteration hit the zero vector")
        x = y / norm
        lam_new = float(x @ (m @ x))
        if abs(lam_new - lam) <= RAYLEIGH_TOL:
            return lam_new, x
        lam = lam_new
    raise ConvergenceError(f"power iteration exceeded {POWER_MAX_ITER} iterations")


def _component_of(decomp: ComponentDecomposition, c: frozenset[int]) -> frozenset[int]:
    for comp in decomp.components:
        if comp == c:
            return comp
    raise GraphError(
        f"{sorted(c)} is not a component at vertex {decomp.base_vertex}"
    )


def _laplacian_block(g: Graph, vertices: tuple[int, ...]) -> np.ndarray:
    lap = laplacian(g).entries
    idx = np.array(vertices, dtype=np.intp)
    return lap[np.ix_(idx, idx)].copy()


def bottleneck(g: Graph, v: int, component: frozenset[int]) -> BottleneckMatrix:
    """Bottleneck matrix of a component at v, by LU inversion of the block."""
    decomp = components_at(g, v)
    comp = _component_of(decomp, frozenset(component))
    vertices = tuple(sorted(comp))
    block = _laplacian_block(g, vertices)
    inv = np.linalg.inv(block)
    if not np.all(inv > 0.0):
        raise BalanceError("bottleneck matrix has a non-positive entry")
    rho, vec = _power_iteration(inv)
    inv.setflags(write=False)
    vec.setflags(write=False)
    return BottleneckMatrix(
        base_vertex=v,
        component=comp,
        vertices=vertices,
        matrix=inv,
        perron_value=rho,
        perron_vector=vec,
    )


def bottleneck_tree(t: Graph, v: int, component: frozenset[int]) -> BottleneckMatrix:
    """Tree bottleneck matrix built combinatorially, without inversion.

    Entry (i, j) counts the edges shared by the v-to-i and v-to-j paths,
    which equals the depth of their meeting point in the tree rooted at v.
    """
    if not is_tree(t):
        raise NotATreeError("bottleneck_tree requires a tree")
    decomp = components_at(t, v)
    comp = _component_of(decomp, frozenset(component))
    vertices = tuple(sorted(comp))
    parent = {v: v}
    depth = {v: 0}
    queue = deque([v])
    while queue:
        u = queue.popleft()
        for w in t.neighbors(u):
            if w not in depth and w in comp:
                parent[w] = u
                depth[w] = depth[u] + 1
                queue.append(w)

    def shared_depth(i: int, j: int) -> int:
        while i != j:
            if depth[i] >= depth[j]:
                i = parent[i]
            else:
                j = parent[j]
        return depth[i]

    k = len(vertices)
    m = np.zeros((k, k))
    for a in range(k):
        m[a, a] = depth[vertices[a]]
        for b in range(a + 1, k):
            m[a, b] = m[b, a] = shared_depth(vertices[a], vertices[b])
    rho, vec = _power_iteration(m)
    m.setflags(write=False)
    vec.setflags(write=False)
    return BottleneckMatrix(
        base_vertex=v,
        component=comp,
        vertices=vertices,
        matrix=m,
        perron_value=rho,
        perron_vector=vec,
    )


def perron_components_at(
    g: Graph, v: int, *, tie_tol: float = PERRON_TIE_TOL
) -> PerronDecomposition:
    """Components at v annotated with Perron values; maximal ones flagged."""
    decomp = components_at(g, v)
    values = [bottleneck(g, v, c).perron_value for c in decomp.components]
    top = max(values)
    comps = tuple(
        PerronComponent(
            vertices=c,
            perron_value=rho,
            is_perron=(top - rho) <= tie_tol * top,
        )
        for c, rho in zip(decomp.components, values)
    )
    return PerronDecomposition(base_vertex=v, components=comps)


def characteristic_set(
    g: Graph, y: np.ndarray, *, zero_tol: float = ZERO_COORD_TOL
) -> CharacteristicSet:
    """Characteristic vertices and edges of g for the Fiedler vector y.

    A vertex is characteristic when its coordinate vanishes but a neighbor's
    does not; an edge is characteristic when its endpoint coordinates have
    opposite signs.  y must pass the eigen-residual check for mu.
    """
    y = np.asarray(y, dtype=np.float64)
    if y.shape != (g.n,):
        raise NotAFiedlerVectorError(f"vector length {y.shape} != order {g.n}")
    mu, mult, _ = algebraic_connectivity(g)
    lap = laplacian(g).entries
    scale = float(np.linalg.norm(lap)) * float(np.linalg.norm(y))
    residual = float(np.linalg.norm(lap @ y - mu * y))
    if residual > 1e-8 * max(scale, 1.0):
        raise NotAFiedlerVectorError(
            f"residual {residual:.3e} too large for an eigenvector of mu"
        )
    eps = zero_tol * float(np.max(np.abs(y)))
    zero = np.abs(y) <= eps
    verts = [
        v
        for v in range(g.n)
        if zero[v] and any(not zero[w] for w in g.neighbors(v))
    ]
    edges = [
        (u, w)
        for u, w in g.edge_list()
        if not zero[u] and not zero[w] and y[u] * y[w] < 0.0
    ]
    return CharacteristicSet(
        vertices=tuple(verts),
        edges=tuple(edges),
        fiedler_used=y,
        mu_multiplicity=mult,
    )


def _direct_sum_rest(
    g: Graph, v: int, rest: tuple[frozenset[int], ...]
) -> np.ndarray:
    """Direct sum of the remaining bottleneck matrices plus a zero block."""
    size = sum(len(c) for c in rest) + 1
    d = np.zeros((size, size))
    at = 0
    for c in rest:
        b = bottleneck(g, v, c).matrix
        k = b.shape[0]
        d[at : at + k, at : at + k] = b
        at += k
    return d


def _pick_leading_perron(decomp: PerronDecomposition) -> int:
    for i, comp in enumerate(decomp.components):
        if comp.is_perron:
            return i
    raise BalanceError("no Perron component flagged")


def solve_balance(
    g: Graph, v: int, *, x_tol: float = BALANCE_X_TOL
) -> tuple[float, float]:
    """Balance the leading Perron component against the rest at a cut vertex.

    Finds the unique x >= 0 where the largest eigenvalue of the Perron
    component's bottleneck matrix minus x*J meets the Perron value of the
    direct sum of the remaining bottleneck matrices (plus a zero block)
    shifted by x*J.  Returns (x, mu_estimate) with mu_estimate the
    reciprocal of the meeting value.
    """
    decomp = perron_components_at(g, v)
    if len(decomp.components) < 2:
        raise NotACutVertexError(f"vertex {v} is not a cut vertex")
    lead = _pick_leading_perron(decomp)
    comp_sets = [c.vertices for c in decomp.components]
    a = bottleneck(g, v, comp_sets[lead]).matrix
    rest = tuple(comp_sets[:lead] + comp_sets[lead + 1 :])
    d = _direct_sum_rest(g, v, rest)
    ja = np.ones_like(a)
    jd = np.ones_like(d)

    def left(x: float) -> float:
        return lambda_max(a - x * ja)

    def right(x: float) -> float:
        return lambda_max(d + x * jd)

    lo = 0.0
    hi = left(0.0)
    if hi - right(0.0) <= 0.0:
        # Tied Perron components: the balance point is x = 0 exactly.
        return 0.0, 1.0 / right(0.0)
    if left(hi) - right(hi) > 0.0:
        raise BalanceError("no sign change on the bisection bracket")
    while hi - lo > x_tol:
        mid = 0.5 * (lo + hi)
        if left(mid) - right(mid) > 0.0:
            lo = mid
        else:
            hi = mid
    x = 0.5 * (lo + hi)
    common = 0.5 * (left(x) + right(x))
    return x, 1.0 / common


def check_balance(g: Graph, v: int, x: float) -> Optional[float]:
    """Evaluate the balance equation at a given x.

    When the two sides agree to 1e-9 the common value's reciprocal is an
    eigenvalue of the Laplacian; that is asserted and the value returned.
    Otherwise None.
    """
    if x < 0.0:
        raise GraphError(f"x must be non-negative, got {x}")
    decomp = perron_components_at(g, v)
    if len(decomp.components) < 2:
        raise NotACutVertexError(f"vertex {v} is not a cut vertex")
    lead = _pick_leading_perron(decomp)
    comp_sets = [c.vertices for c in decomp.components]
    a = bottleneck(g, v, comp_sets[lead]).matrix
    d = _direct_sum_rest(g, v, tuple(comp_sets[:lead] + comp_sets[lead + 1 :]))
    left = lambda_max(a - x * np.ones_like(a))
    right = lambda_max(d + x * np.ones_like(d))
    if abs(left - right) > 1e-9:
        return None
    common = 0.5 * (left + right)
    alpha = 1.0 / common
    spec = eigen_sym(laplacian(g))
    if float(np.min(np.abs(spec.eigenvalues - alpha))) > 1e-8:
        raise BalanceError(
            f"balanced value {alpha} is not a Laplacian eigenvalue"
        )
    return alpha


def solve_edge_gamma(
    g: Graph, edge: tuple[int, int], *, x_tol: float = BALANCE_X_TOL
) -> Optional[tuple[float, float]]:
    """Split weight gamma balancing the two sides of a bridge.

    Returns (gamma, mu_estimate) when each side is the Perron component at
    the opposite endpoint, in which case mu is simple and the bridge is the
    unique characteristic edge; returns None otherwise.
    """
    u, w = edge
    if not g.has_edge(u, w):
        raise NotABridgeError(f"{{{u},{w}}} is not an edge")
    if not is_bridge(g, u, w):
        raise NotABridgeError(f"edge {{{u},{w}}} lies on a cycle")
    side_u = next(c for c in components_at(g, w).components if u in c)
    side_w = next(c for c in components_at(g, u).components if w in c)
    at_w = perron_components_at(g, w)
    at_u = perron_components_at(g, u)
    flag_u = next(c for c in at_w.components if c.vertices == side_u).is_perron
    flag_w = next(c for c in at_u.components if c.vertices == side_w).is_perron
    if not (flag_u and flag_w):
        return None
    a = bottleneck(g, w, side_u).matrix
    b = bottleneck(g, u, side_w).matrix
    ja = np.ones_like(a)
    jb = np.ones_like(b)

    def gap(gamma: float) -> float:
        return lambda_max(a - gamma * ja) - lambda_max(b - (1.0 - gamma) * jb)

    lo, hi = 1e-9, 1.0 - 1e-9
    if gap(lo) < 0.0 or gap(hi) > 0.0:
        return None
    while hi - lo > x_tol:
        mid = 0.5 * (lo + hi)
        if gap(mid) > 0.0:
            lo = mid
        else:
            hi = mid
    gamma = 0.5 * (lo + hi)
    common = lambda_max(a - gamma * ja)
    mu_est = 1.0 / common
    mu, mult, y = algebraic_connectivity(g)
    if mult == 1:
        # The split certifies a simple mu whose characteristic edge is here.
        if abs(mu_est - mu) > 1e-8:
            raise BalanceError(
                f"edge balance gives {mu_est}, eigensolver gives {mu}"
            )
        charset = characteristic_set(g, y)
        if charset.vertices or charset.edges != ((min(u, w), max(u, w)),):
            raise BalanceError("balanced bridge is not the characteristic edge")
    return gamma, mu_est


def cut_vertex_characteristic(
    g: Graph, v: int, *, tie_tol: float = PERRON_TIE_TOL
) -> tuple[bool, Optional[float]]:
    """Whether a cut vertex is characteristic, plus the implied mu.

    The vertex is characteristic exactly when two or more components at it
    share the maximal Perron value; then mu equals the reciprocal of that
    value.
    """
    decomp = perron_components_at(g, v, tie_tol=tie_tol)
    if len(decomp.components) < 2:
        raise NotACutVertexError(f"vertex {v} is not a cut vertex")
    flagged = decomp.perron_components()
    if len(flagged) >= 2:
        return True, 1.0 / flagged[0].perron_value
    return False, None
