"""Immutable simple undirected graphs and the structural queries on them.

Vertices are always the dense integers 0..n-1.  Graph values never change
after construction, so every function here is pure and safe to call from
concurrent workers.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Optional

from .errors import (
    CapExceededError,
    DisconnectedGraphError,
    GraftError,
    GraphError,
    InvalidVertexError,
)

# Brute-force canonical labeling stays tractable only at desk scale.
CANONICAL_CAP = 10
CANONICAL_CAP_FOREST = 12


class Graph:
    """Simple undirected graph on vertices 0..n-1 with a fixed edge set."""

    __slots__ = ("n", "edges", "_adj", "_masks", "_canon")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise GraphError(f"vertex count must be non-negative, got {n}")
        norm = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidVertexError(f"edge ({u},{v}) outside 0..{n - 1}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            norm.add((u, v) if u < v else (v, u))
        self.n = n
        self.edges = frozenset(norm)
        adj = [[] for _ in range(n)]
        masks = [0] * n
        for u, v in norm:
            adj[u].append(v)
            adj[v].append(u)
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        self._adj = tuple(tuple(sorted(a)) for a in adj)
        self._masks = tuple(masks)
        self._canon = None

    @property
    def m(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> tuple[int, ...]:
        self._check_vertex(v)
        return self._adj[v]

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    def edge_list(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def with_edge(self, u: int, v: int) -> "Graph":
        return Graph(self.n, list(self.edges) + [(u, v)])

    def without_edge(self, u: int, v: int) -> "Graph":
        e = (min(u, v), max(u, v))
        if e not in self.edges:
            raise GraphError(f"edge {e} not present")
        return Graph(self.n, self.edges - {e})

    def _check_vertex(self, v: int) -> None:
        if not (0 <= v < self.n):
            raise InvalidVertexError(f"vertex {v} outside 0..{self.n - 1}")

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Graph) and self.n == other.n and self.edges == other.edges
        )

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class ComponentDecomposition:
    """Connected components of a graph at a vertex, in canonical order.

    The components partition V minus the base vertex and are sorted by their
    smallest contained label.
    """

    base_vertex: int
    components: tuple[frozenset[int], ...]

    def __len__(self) -> int:
        return len(self.components)


def is_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    seen = _bfs_reach(g, 0, skip=None)
    return len(seen) == g.n


def is_tree(g: Graph) -> bool:
    return g.m == g.n - 1 and is_connected(g)


def is_forest(g: Graph) -> bool:
    return girth(g) is None


def _bfs_reach(g: Graph, start: int, skip: Optional[int]) -> set[int]:
    seen = {start}
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for w in g._adj[u]:
            if w != skip and w not in seen:
                seen.add(w)
                queue.append(w)
    return seen


def components_at(g: Graph, v: int) -> ComponentDecomposition:
    """Connected components of g - v, sorted by smallest contained label."""
    g._check_vertex(v)
    if not is_connected(g):
        raise DisconnectedGraphError("components_at requires a connected graph")
    remaining = set(range(g.n)) - {v}
    comps = []
    while remaining:
        start = min(remaining)
        comp = _bfs_reach(g, start, skip=v)
        comps.append(frozenset(comp))
        remaining -= comp
    comps.sort(key=min)
    return ComponentDecomposition(base_vertex=v, components=tuple(comps))


def is_cut_vertex(g: Graph, v: int) -> bool:
    return len(components_at(g, v)) >= 2


def pendant_vertices(g: Graph) -> frozenset[int]:
    """Vertices of degree one."""
    return frozenset(v for v in range(g.n) if len(g._adj[v]) == 1)


def bfs_distances(g: Graph, start: int) -> list[int]:
    """Shortest-path distances from start; -1 marks unreachable vertices."""
    g._check_vertex(start)
    dist = [-1] * g.n
    dist[start] = 0
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for w in g._adj[u]:
            if dist[w] < 0:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def diameter(g: Graph) -> int:
    """Largest shortest-path distance over all vertex pairs."""
    if g.n == 0:
        raise GraphError("diameter of the empty graph is undefined")
    best = 0
    for v in range(g.n):
        dist = bfs_distances(g, v)
        far = max(dist)
        if min(dist) < 0:
            raise DisconnectedGraphError("diameter requires a connected graph")
        best = max(best, far)
    return best


def girth(g: Graph) -> Optional[int]:
    """Length of a shortest cycle, or None when the graph is a forest."""
    best: Optional[int] = None
    for root in range(g.n):
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            if best is not None and 2 * dist[u] >= best:
                continue
            for w in g._adj[u]:
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    cycle = dist[u] + dist[w] + 1
                    if best is None or cycle < best:
                        best = cycle
    return best


def is_bridge(g: Graph, u: int, v: int) -> bool:
    """True when {u,v} is an edge lying on no cycle."""
    if not g.has_edge(u, v):
        return False
    reach = _bfs_reach(g.without_edge(u, v), u, skip=None)
    return v not in reach


@dataclass(frozen=True)
class PathAttachment:
    """A graph with two tagged paths hanging from a base vertex.

    first_path and second_path list the new vertices in order of increasing
    distance from the base, so grafting knows which edge to move.
    """

    graph: Graph
    base: int
    first_path: tuple[int, ...]
    second_path: tuple[int, ...]


def attach_paths(g: Graph, v: int, k: int, l: int) -> PathAttachment:
    """Attach two disjoint new paths of k and l vertices at v."""
    g._check_vertex(v)
    if k < 1 or l < 1:
        raise GraphError(f"path lengths must be >= 1, got k={k}, l={l}")
    n = g.n
    first = tuple(range(n, n + k))
    second = tuple(range(n + k, n + k + l))
    edges = list(g.edges)
    for path in (first, second):
        prev = v
        for w in path:
            edges.append((prev, w))
            prev = w
    return PathAttachment(Graph(n + k + l, edges), v, first, second)


def graft(att: PathAttachment) -> PathAttachment:
    """Move the last edge of the first path onto the end of the second.

    Detaches the first path's outermost vertex and re-attaches it past the
    second path's tip; the result is the same graph family with the first
    path one shorter and the second one longer.  Order and edge count are
    preserved.
    """
    if not att.first_path:
        raise GraftError("first path is empty; nothing to graft")
    if not att.second_path:
        raise GraftError("second path tag is empty")
    moved = att.first_path[-1]
    anchor = att.first_path[-2] if len(att.first_path) >= 2 else att.base
    tip = att.second_path[-1]
    g = att.graph.without_edge(anchor, moved).with_edge(tip, moved)
    return PathAttachment(
        g, att.base, att.first_path[:-1], att.second_path + (moved,)
    )


# ---------------------------------------------------------------------------
# Canonical form
# ---------------------------------------------------------------------------


def _refine(masks: tuple[int, ...], colors: list[int]) -> list[int]:
    """Neighbor-color refinement to a stable, canonically numbered partition."""
    n = len(masks)
    while True:
        ncolors = len(set(colors))
        sigs = []
        for v in range(n):
            m = masks[v]
            nbr = []
            while m:
                low = m & -m
                nbr.append(colors[low.bit_length() - 1])
                m ^= low
            nbr.sort()
            sigs.append((colors[v], tuple(nbr)))
        order = {s: i for i, s in enumerate(sorted(set(sigs)))}
        colors = [order[s] for s in sigs]
        if len(order) == ncolors:
            return colors


def _encode(masks: tuple[int, ...], perm: list[int]) -> bytes:
    """Upper-triangle adjacency bits under the given vertex order, packed."""
    n = len(perm)
    bits = 0
    count = 0
    for i in range(n):
        mi = masks[perm[i]]
        for j in range(i + 1, n):
            bits = (bits << 1) | ((mi >> perm[j]) & 1)
            count += 1
    pad = (-count) % 8
    bits <<= pad
    return bits.to_bytes((count + pad) // 8 or 1, "big")


def _canonical_bytes(masks: tuple[int, ...]) -> bytes:
    """Label-invariant encoding of the graph given as adjacency bitmasks."""
    n = len(masks)
    if n == 0:
        return b"\x00"
    best: Optional[bytes] = None

    def search(colors: list[int]) -> None:
        nonlocal best
        cells: dict[int, list[int]] = {}
        for v, c in enumerate(colors):
            cells.setdefault(c, []).append(v)
        target = None
        for c in sorted(cells):
            if len(cells[c]) > 1:
                target = cells[c]
                break
        if target is None:
            perm = sorted(range(n), key=colors.__getitem__)
            enc = _encode(masks, perm)
            if best is None or enc < best:
                best = enc
            return
        tried: list[int] = []
        for v in target:
            vb = 1 << v
            skip = False
            for u in tried:
                strip = ~(vb | (1 << u))
                if masks[u] & strip == masks[v] & strip:
                    skip = True  # swapping u and v is an automorphism
                    break
            if skip:
                continue
            tried.append(v)
            split = [2 * c for c in colors]
            split[v] -= 1
            search(_refine(masks, split))

    search(_refine(masks, [0] * n))
    assert best is not None
    return bytes([n]) + best


def canonical_form(g: Graph) -> bytes:
    """Byte-string equal for two graphs exactly when they are isomorphic.

    Minimizes the adjacency encoding over vertex orderings, pruned by
    iterated color refinement and by skipping vertices interchangeable
    with an already-explored twin.  Exponential in the worst case, hence
    the order caps.
    """
    if g._canon is not None:
        return g._canon
    cap = CANONICAL_CAP_FOREST if is_forest(g) else CANONICAL_CAP
    if g.n > cap:
        raise CapExceededError(
            f"canonical_form supports n <= {cap} for this graph kind, got {g.n}"
        )
    canon = _canonical_bytes(g._masks)
    g._canon = canon
    return canon


def are_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.m != h.m:
        return False
    return canonical_form(g) == canonical_form(h)
