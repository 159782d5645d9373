"""Small simple graphs with a declared shape kind.

Vertices are 0..n-1.  Edges are stored as an ordered tuple of (u, v) pairs;
the pair order is meaningful only as a storage order (labelings index edges
by position), the edge itself is undirected.  Paths store edges (0,1),
(1,2), ...; cycles append the closing edge (n-1, 0).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidGraphError

PATH = "path"
CYCLE = "cycle"
TREE = "tree"
GENERAL = "general"


@dataclass(frozen=True)
class SimpleGraph:
    n: int
    edges: tuple[tuple[int, int], ...]
    kind: str = GENERAL

    def __post_init__(self) -> None:
        if self.n < 1:
            raise InvalidGraphError("graphs need at least one vertex")
        if self.kind not in (PATH, CYCLE, TREE, GENERAL):
            raise InvalidGraphError(f"unknown graph kind {self.kind!r}")
        seen = set()
        for u, v in self.edges:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise InvalidGraphError(f"edge ({u},{v}) out of range")
            if u == v:
                raise InvalidGraphError(f"loop at vertex {u}")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise InvalidGraphError(f"duplicate edge ({u},{v})")
            seen.add(key)
        if self.kind == PATH:
            want = tuple((i, i + 1) for i in range(self.n - 1))
            if self.edges != want:
                raise InvalidGraphError("path edges must be (0,1), (1,2), ...")
        elif self.kind == CYCLE:
            if self.n < 3:
                raise InvalidGraphError("cycles need at least three vertices")
            want = tuple((i, i + 1) for i in range(self.n - 1)) + ((self.n - 1, 0),)
            if self.edges != want:
                raise InvalidGraphError("cycle edges must be the path edges plus (n-1,0)")
        elif self.kind == TREE:
            if len(self.edges) != self.n - 1 or not self.is_connected():
                raise InvalidGraphError("tree kind requires a connected graph on n-1 edges")

    def is_connected(self) -> bool:
        if self.n == 1:
            return True
        adj = self.adjacency()
        seen = {0}
        stack = [0]
        while stack:
            u = stack.pop()
            for v in adj[u]:
                if v not in seen:
                    seen.add(v)
                    stack.append(v)
        return len(seen) == self.n

    def adjacency(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return adj

    def incidence(self) -> list[list[int]]:
        """Per vertex, the storage indices of its incident edges."""
        inc: list[list[int]] = [[] for _ in range(self.n)]
        for i, (u, v) in enumerate(self.edges):
            inc[u].append(i)
            inc[v].append(i)
        return inc

    def degrees(self) -> list[int]:
        return [len(ids) for ids in self.incidence()]


def path_graph(n: int) -> SimpleGraph:
    """P_n on vertices 0..n-1."""
    if n < 2:
        raise InvalidGraphError("paths need at least two vertices")
    return SimpleGraph(n, tuple((i, i + 1) for i in range(n - 1)), PATH)


def cycle_graph(n: int) -> SimpleGraph:
    """C_n on vertices 0..n-1."""
    if n < 3:
        raise InvalidGraphError("cycles need at least three vertices")
    edges = tuple((i, i + 1) for i in range(n - 1)) + ((n - 1, 0),)
    return SimpleGraph(n, edges, CYCLE)


def tree_graph(n: int, edges: tuple[tuple[int, int], ...] | list) -> SimpleGraph:
    """A tree on vertices 0..n-1 with the given edge storage order."""
    return SimpleGraph(n, tuple((int(u), int(v)) for u, v in edges), TREE)


def star_graph(leaves: int) -> SimpleGraph:
    """The star with the given number of leaves; vertex 0 is the center."""
    if leaves < 1:
        raise InvalidGraphError("stars need at least one leaf")
    return tree_graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])
