"""Deterministic constructors for the named graph families.

Each constructor documents its labeling so emitted edge lists are stable.
Parameters are validated against the family's domain; violations raise
ParameterError.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ParameterError
from .graph import Graph


@dataclass(frozen=True)
class FamilySpec:
    """A family identifier plus its integer parameters."""

    family_id: str
    params: tuple[int, ...]

    def __str__(self) -> str:
        return f"{self.family_id}({', '.join(map(str, self.params))})"


def path(n: int) -> Graph:
    """Path 0-1-...-(n-1)."""
    if n < 1:
        raise ParameterError(f"path needs n >= 1, got {n}")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    """Cycle 0-1-...-(n-1)-0."""
    if n < 3:
        raise ParameterError(f"cycle needs n >= 3, got {n}")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def star(n: int) -> Graph:
    """Star with center 0 and leaves 1..n-1."""
    if n < 1:
        raise ParameterError(f"star needs n >= 1, got {n}")
    return Graph(n, [(0, i) for i in range(1, n)])


def complete(n: int) -> Graph:
    """Complete graph on n vertices."""
    if n < 1:
        raise ParameterError(f"complete needs n >= 1, got {n}")
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def t_kld(k: int, l: int, d: int) -> Graph:
    """Double broom: a d-vertex path with k pendants at one end, l at the other.

    Labels: path 0..d-1, the k pendants d..d+k-1 attach at 0, the l pendants
    d+k..d+k+l-1 attach at d-1.  Order k+l+d; diameter d+1.
    """
    if k < 1 or l < 1 or d < 1:
        raise ParameterError(f"t_kld needs k,l,d >= 1, got ({k},{l},{d})")
    edges = [(i, i + 1) for i in range(d - 1)]
    edges += [(0, d + i) for i in range(k)]
    edges += [(d - 1, d + k + i) for i in range(l)]
    return Graph(k + l + d, edges)


def t_broom(n: int, d: int) -> Graph:
    """A d-vertex path with n-d extra pendants at its middle vertex.

    Labels: path 0..d-1, pendants d..n-1 attach at index (d-1)//2.
    Order n; diameter d-1.
    """
    if d < 3:
        raise ParameterError(f"t_broom needs d >= 3, got {d}")
    if n <= d:
        raise ParameterError(f"t_broom needs n > d, got n={n}, d={d}")
    hub = (d - 1) // 2
    edges = [(i, i + 1) for i in range(d - 1)]
    edges += [(hub, i) for i in range(d, n)]
    return Graph(n, edges)


def p_n_k(n: int, k: int) -> Graph:
    """Clique with a pendant fan: k pendants on one vertex of K_{n-k}.

    For k = n-2 the clique degenerates and the graph is instead a 3-vertex
    path with n-3 pendants on one of its endpoints.  Labels: core vertices
    first (pendant carrier is 0), pendants take the highest labels.
    """
    if n < 3:
        raise ParameterError(f"p_n_k needs n >= 3, got {n}")
    if not 1 <= k <= n - 1:
        raise ParameterError(f"p_n_k needs 1 <= k <= n-1, got k={k}")
    if (n, k) == (3, 1):
        raise ParameterError("no graph of order 3 has exactly one pendant vertex")
    if k == n - 2:
        edges = [(0, 1), (1, 2)]
        edges += [(0, i) for i in range(3, n)]
        return Graph(n, edges)
    core = n - k
    edges = [(i, j) for i in range(core) for j in range(i + 1, core)]
    edges += [(0, core + i) for i in range(k)]
    return Graph(n, edges)


def c3_tail(n: int) -> Graph:
    """Triangle {0,1,2} with the path 0-3-4-...-(n-1) as a tail."""
    if n < 4:
        raise ParameterError(f"c3_tail needs n >= 4, got {n}")
    edges = [(0, 1), (0, 2), (1, 2), (0, 3)]
    edges += [(i, i + 1) for i in range(3, n - 1)]
    return Graph(n, edges)


def t_spider(n: int, k: int) -> Graph:
    """Balanced spider: k nearly equal legs radiating from a center.

    With q = (n-1)//k and r = n-1-k*q, r legs have q+1 vertices and k-r
    legs have q.  Labels: center 0, then each leg consecutively, long legs
    first, innermost vertex first.
    """
    if k < 2:
        raise ParameterError(f"t_spider needs k >= 2, got {k}")
    if k > n - 1:
        raise ParameterError(f"t_spider needs k <= n-1, got n={n}, k={k}")
    q, r = divmod(n - 1, k)
    edges = []
    nxt = 1
    for leg in range(k):
        length = q + 1 if leg < r else q
        prev = 0
        for _ in range(length):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return Graph(n, edges)


def two_cycles(n: int) -> Graph:
    """Two cycles of nearly equal length sharing exactly the vertex 0.

    The cycles have floor((n+1)/2) and ceil((n+1)/2) vertices; labels run
    around the first cycle 0..a-1 and then the second 0,a,..,n-1.
    """
    if n < 5:
        raise ParameterError(f"two_cycles needs n >= 5, got {n}")
    a = (n + 1) // 2
    edges = [(i, i + 1) for i in range(a - 1)] + [(a - 1, 0)]
    edges += [(0, a)] + [(i, i + 1) for i in range(a, n - 1)] + [(n - 1, 0)]
    return Graph(n, edges)


def dumbbell(n: int) -> Graph:
    """Two disjoint triangles joined through a path, no pendant vertices.

    Triangles {0,1,2} and {3,4,5}; for n > 6 the connecting path uses
    labels 6..n-1 between vertices 0 and 3, for n = 6 the triangles are
    joined by the single edge {0,3}.
    """
    if n < 6:
        raise ParameterError(f"dumbbell needs n >= 6, got {n}")
    edges = [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5)]
    if n == 6:
        edges.append((0, 3))
    else:
        chain = [0] + list(range(6, n)) + [3]
        edges += list(zip(chain, chain[1:]))
    return Graph(n, edges)


def t22(n: int) -> Graph:
    """Double broom with two pendants at each end of an (n-4)-vertex path."""
    if n < 6:
        raise ParameterError(f"t22 needs n >= 6, got {n}")
    return t_kld(2, 2, n - 4)


CONSTRUCTORS = {
    "path": (path, 1),
    "cycle": (cycle, 1),
    "star": (star, 1),
    "complete": (complete, 1),
    "t_kld": (t_kld, 3),
    "t_broom": (t_broom, 2),
    "p_n_k": (p_n_k, 2),
    "c3_tail": (c3_tail, 1),
    "t_spider": (t_spider, 2),
    "two_cycles": (two_cycles, 1),
    "dumbbell": (dumbbell, 1),
    "t22": (t22, 1),
}


def build_family(spec: FamilySpec) -> Graph:
    if spec.family_id not in CONSTRUCTORS:
        raise ParameterError(f"unknown family id {spec.family_id!r}")
    fn, arity = CONSTRUCTORS[spec.family_id]
    if len(spec.params) != arity:
        raise ParameterError(
            f"{spec.family_id} takes {arity} parameter(s), got {len(spec.params)}"
        )
    return fn(*spec.params)
