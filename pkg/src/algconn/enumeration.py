"""Isomorph-free enumeration of small trees, connected and unicyclic graphs.

Trees grow by attaching a leaf to every vertex of every smaller
representative; connected graphs grow edge by edge starting from the
spanning trees.  Duplicates are rejected through the canonical form, so
each isomorphism class appears exactly once, and results stream in
canonical-form order for reproducibility.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator

from .errors import CapExceededError
from .graph import Graph, _canonical_bytes

TREE_CAP = 12
CONNECTED_CAP = 9
UNICYCLIC_CAP = 10


def _graph_from_masks(masks: tuple[int, ...]) -> Graph:
    n = len(masks)
    edges = []
    for u in range(n):
        m = masks[u] >> (u + 1)
        v = u + 1
        while m:
            if m & 1:
                edges.append((u, v))
            m >>= 1
            v += 1
    return Graph(n, edges)


@lru_cache(maxsize=None)
def _tree_masks(n: int) -> tuple[tuple[int, ...], ...]:
    """One adjacency-mask tuple per isomorphism class of n-vertex trees."""
    if n == 1:
        return ((0,),)
    reps: dict[bytes, tuple[int, ...]] = {}
    for smaller in _tree_masks(n - 1):
        new_bit = 1 << (n - 1)
        for v in range(n - 1):
            child = list(smaller) + [1 << v]
            child[v] |= new_bit
            key = _canonical_bytes(tuple(child))
            if key not in reps:
                reps[key] = tuple(child)
    return tuple(reps[key] for key in sorted(reps))


def enumerate_trees(n: int) -> Iterator[Graph]:
    """All trees on n vertices, one per isomorphism class."""
    if not 1 <= n <= TREE_CAP:
        raise CapExceededError(f"tree enumeration supports 1 <= n <= {TREE_CAP}")
    for masks in _tree_masks(n):
        yield _graph_from_masks(masks)


def _non_edges(masks: tuple[int, ...]) -> Iterator[tuple[int, int]]:
    n = len(masks)
    for u in range(n):
        for v in range(u + 1, n):
            if not (masks[u] >> v) & 1:
                yield u, v


def _add_edge(masks: tuple[int, ...], u: int, v: int) -> tuple[int, ...]:
    child = list(masks)
    child[u] |= 1 << v
    child[v] |= 1 << u
    return tuple(child)


@lru_cache(maxsize=None)
def _connected_masks(n: int) -> tuple[tuple[int, ...], ...]:
    """Every connected graph class on n vertices, grown edgewise from trees."""
    if n == 1:
        return ((0,),)
    level: dict[bytes, tuple[int, ...]] = {}
    for masks in _tree_masks(n):
        level[_canonical_bytes(masks)] = masks
    collected = dict(level)
    max_edges = n * (n - 1) // 2
    edges = n - 1
    while edges < max_edges:
        nxt: dict[bytes, tuple[int, ...]] = {}
        for masks in level.values():
            for u, v in _non_edges(masks):
                child = _add_edge(masks, u, v)
                key = _canonical_bytes(child)
                if key not in nxt:
                    nxt[key] = child
        level = nxt
        collected.update(nxt)
        edges += 1
    return tuple(collected[key] for key in sorted(collected))


def enumerate_connected(n: int) -> Iterator[Graph]:
    """All connected graphs on n vertices, one per isomorphism class.

    Complete up to the cap; n = 9 (261080 classes) takes far longer than
    the smaller orders and is never needed by the bundled certifications.
    """
    if not 1 <= n <= CONNECTED_CAP:
        raise CapExceededError(
            f"connected enumeration supports 1 <= n <= {CONNECTED_CAP}"
        )
    for masks in _connected_masks(n):
        yield _graph_from_masks(masks)


@lru_cache(maxsize=None)
def _unicyclic_masks(n: int) -> tuple[tuple[int, ...], ...]:
    reps: dict[bytes, tuple[int, ...]] = {}
    for masks in _tree_masks(n):
        for u, v in _non_edges(masks):
            child = _add_edge(masks, u, v)
            key = _canonical_bytes(child)
            if key not in reps:
                reps[key] = child
    return tuple(reps[key] for key in sorted(reps))


def enumerate_unicyclic(n: int) -> Iterator[Graph]:
    """All unicyclic graphs (connected, edge count n) on n vertices."""
    if not 3 <= n <= UNICYCLIC_CAP:
        raise CapExceededError(
            f"unicyclic enumeration supports 3 <= n <= {UNICYCLIC_CAP}"
        )
    for masks in _unicyclic_masks(n):
        yield _graph_from_masks(masks)
