"""Isomorph-free enumeration of small trees.

Trees are generated centroid-first: rooted shapes are built as
canonical multisets of smaller rooted shapes, and a free tree is
either a rooted tree at its unique centroid (every branch at most
half the rest) or two half-size rooted trees joined by the centroid
edge.  Each isomorphism class comes out exactly once, in a fixed
order, as a ready-to-use SimpleGraph.
"""

from __future__ import annotations

from functools import cache
from typing import Iterator

from .errors import CapExceededError, PreconditionError
from .graphs import TREE, SimpleGraph, tree_graph

TREE_ENUM_CAP = 10

__all__ = ["TREE_ENUM_CAP", "canonical_form", "enumerate_trees"]

# a rooted shape is a tuple of child shapes, ordered by descending
# (size, shape) key; the empty tuple is the single vertex
_Shape = tuple


@cache
def _shape_size(shape: _Shape) -> int:
    return 1 + sum(_shape_size(c) for c in shape)


@cache
def _rooted_shapes(n: int) -> tuple[_Shape, ...]:
    """All rooted trees on n vertices, canonical and deduplicated."""
    if n == 1:
        return ((),)
    found: list[_Shape] = []

    def extend(remaining: int, max_key, acc: list) -> None:
        if remaining == 0:
            found.append(tuple(acc))
            return
        for s in range(min(remaining, max_key[0] if max_key else remaining), 0, -1):
            for shape in _rooted_shapes(s):
                key = (s, shape)
                if max_key is not None and key > max_key:
                    continue
                acc.append(shape)
                extend(remaining - s, key, acc)
                acc.pop()

    extend(n - 1, None, [])
    return tuple(found)


def _shape_to_edges(shape: _Shape, root: int, counter: list[int],
                    edges: list[tuple[int, int]]) -> None:
    for child in shape:
        cid = counter[0]
        counter[0] += 1
        edges.append((root, cid))
        _shape_to_edges(child, cid, counter, edges)


def _graph_of(shape: _Shape, n: int) -> SimpleGraph:
    edges: list[tuple[int, int]] = []
    _shape_to_edges(shape, 0, [1], edges)
    return tree_graph(n, tuple(edges))


def _graph_of_pair(left: _Shape, right: _Shape, n: int) -> SimpleGraph:
    half = n // 2
    edges: list[tuple[int, int]] = []
    _shape_to_edges(left, 0, [1], edges)
    edges.append((0, half))
    _shape_to_edges(right, half, [half + 1], edges)
    return tree_graph(n, tuple(edges))


def enumerate_trees(n: int) -> Iterator[SimpleGraph]:
    """Yield one representative per isomorphism class of trees on n vertices."""
    if n < 1:
        raise PreconditionError("trees need at least one vertex")
    if n > TREE_ENUM_CAP:
        raise CapExceededError(
            f"tree enumeration is capped at {TREE_ENUM_CAP} vertices")
    if n == 1:
        yield SimpleGraph(1, (), TREE)
        return
    limit = (n - 1) // 2 if n % 2 == 1 else n // 2 - 1
    for shape in _rooted_shapes(n):
        if all(_shape_size(c) <= limit for c in shape):
            yield _graph_of(shape, n)
    if n % 2 == 0:
        halves = _rooted_shapes(n // 2)
        for i, left in enumerate(halves):
            for right in halves[i:]:
                yield _graph_of_pair(left, right, n)


def _rooted_encoding(graph: SimpleGraph, root: int, banned: int) -> _Shape:
    adj = graph.adjacency()

    def walk(v: int, parent: int) -> _Shape:
        subs = [walk(u, v) for u in adj[v] if u != parent and u != banned]
        subs.sort(key=lambda s: (_shape_size(s), s), reverse=True)
        return tuple(subs)

    return walk(root, -1)


def _centroids(graph: SimpleGraph) -> list[int]:
    n = graph.n
    if n == 1:
        return [0]
    adj = graph.adjacency()
    size = [1] * n
    order: list[int] = []
    parent = [-1] * n
    stack = [0]
    seen = [False] * n
    while stack:
        v = stack.pop()
        seen[v] = True
        order.append(v)
        for u in adj[v]:
            if not seen[u]:
                parent[u] = v
                stack.append(u)
    for v in reversed(order):
        if parent[v] >= 0:
            size[parent[v]] += size[v]
    best = n
    out: list[int] = []
    for v in range(n):
        heavy = n - size[v]
        for u in adj[v]:
            if u != parent[v]:
                heavy = max(heavy, size[u])
        if heavy < best:
            best = heavy
            out = [v]
        elif heavy == best:
            out.append(v)
    return out


def canonical_form(graph: SimpleGraph) -> tuple:
    """Labeling-independent fingerprint: equal iff the trees are isomorphic."""
    if len(graph.edges) != graph.n - 1 or not graph.is_connected():
        raise PreconditionError("canonical form is defined for trees")
    cents = _centroids(graph)
    if len(cents) == 1:
        return ("centroid", _rooted_encoding(graph, cents[0], -1))
    u, v = cents
    eu = _rooted_encoding(graph, u, v)
    ev = _rooted_encoding(graph, v, u)
    lo, hi = sorted((eu, ev))
    return ("bicentroid", lo, hi)
