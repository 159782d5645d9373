"""Edge and vertex labelings over a group, and the four verifiers.

A labeling pairs a group with a tuple of element labels indexed by edge
(or vertex) storage position.  Each labeling direction induces the other:
an edge labeling induces on every vertex the sum of its incident edge
labels, and a vertex labeling induces on every edge the sum of its two
endpoint labels.

The verifiers return a :class:`Verdict` rather than raising: it carries
both class-count maps and, when the labeling fails, the first violated
condition in the fixed order size-mismatch, zero-edge-forbidden, edge
conditions, vertex conditions.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidGraphError, InvalidLabelingError
from .graphs import PATH, TREE, SimpleGraph
from .groups import Element, GroupSpec, check_element, enumerate_elements, sum_elements

SIZE_MISMATCH = "size-mismatch"
ZERO_EDGE_FORBIDDEN = "zero-edge-forbidden"
EDGE_IMBALANCE = "edge-imbalance"
VERTEX_IMBALANCE = "vertex-imbalance"
EDGE_COLLISION = "edge-collision"
VERTEX_COLLISION = "vertex-collision"


@dataclass(frozen=True)
class EdgeLabeling:
    """Group labels on edges, indexed by edge storage position."""

    group: GroupSpec
    labels: tuple[Element, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "labels", tuple(tuple(a) for a in self.labels))
        for a in self.labels:
            check_element(self.group, a)


@dataclass(frozen=True)
class VertexLabeling:
    """Group labels on vertices, indexed by vertex number."""

    group: GroupSpec
    labels: tuple[Element, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "labels", tuple(tuple(a) for a in self.labels))
        for a in self.labels:
            check_element(self.group, a)


@dataclass(frozen=True)
class Verdict:
    """Verifier outcome with the class counts it was judged on.

    ``violation`` is None when ``ok`` and otherwise the first failed
    condition in the fixed checking order.
    """

    ok: bool
    edge_class_counts: dict[Element, int]
    vertex_class_counts: dict[Element, int]
    violation: str | None = None


def induce_vertex_labels(graph: SimpleGraph, f: EdgeLabeling) -> VertexLabeling:
    """Vertex label = sum of incident edge labels (zero on isolated vertices)."""
    _require_fit(graph, f.labels, len(graph.edges))
    out = []
    for ids in graph.incidence():
        out.append(sum_elements(f.group, (f.labels[i] for i in ids)))
    return VertexLabeling(f.group, tuple(out))


def induce_edge_labels(graph: SimpleGraph, c: VertexLabeling) -> EdgeLabeling:
    """Edge label = sum of the two endpoint labels.

    >>> from .graphs import cycle_graph
    >>> from .groups import GroupSpec
    >>> c = VertexLabeling(GroupSpec((4,)), ((0,), (1,), (2,), (3,)))
    >>> induce_edge_labels(cycle_graph(4), c).labels
    ((1,), (3,), (1,), (3,))
    """
    _require_fit(graph, c.labels, graph.n)
    out = []
    for u, v in graph.edges:
        out.append(sum_elements(c.group, (c.labels[u], c.labels[v])))
    return EdgeLabeling(c.group, tuple(out))


def class_counts(spec: GroupSpec, labels: tuple[Element, ...]) -> dict[Element, int]:
    """Occurrences of every group element among ``labels``, in enumeration order."""
    counts = {a: 0 for a in enumerate_elements(spec)}
    for a in labels:
        check_element(spec, a)
        counts[a] += 1
    return counts


def is_equitable(counts: dict[Element, int]) -> bool:
    """Max minus min class count at most one (vacuously true when empty)."""
    if not counts:
        return True
    values = counts.values()
    return max(values) - min(values) <= 1


def _require_fit(graph: SimpleGraph, labels: tuple, want: int) -> None:
    if len(labels) != want:
        raise InvalidLabelingError(
            f"labeling has {len(labels)} labels, graph needs {want}"
        )


def _counts_both(graph: SimpleGraph, f: EdgeLabeling):
    ec = class_counts(f.group, f.labels)
    vc = class_counts(f.group, induce_vertex_labels(graph, f).labels)
    return ec, vc


def verify_ea_cordial(graph: SimpleGraph, f: EdgeLabeling) -> Verdict:
    """Edge classes equitable and induced vertex-sum classes equitable."""
    if len(f.labels) != len(graph.edges):
        return Verdict(False, {}, {}, SIZE_MISMATCH)
    ec, vc = _counts_both(graph, f)
    if not is_equitable(ec):
        return Verdict(False, ec, vc, EDGE_IMBALANCE)
    if not is_equitable(vc):
        return Verdict(False, ec, vc, VERTEX_IMBALANCE)
    return Verdict(True, ec, vc)


def verify_a_cordial(graph: SimpleGraph, c: VertexLabeling) -> Verdict:
    """Vertex classes equitable and induced edge-sum classes equitable.

    The edge condition is still reported first, mirroring the edge-side
    verifier's fixed order.
    """
    if len(c.labels) != graph.n:
        return Verdict(False, {}, {}, SIZE_MISMATCH)
    ec = class_counts(c.group, induce_edge_labels(graph, c).labels)
    vc = class_counts(c.group, c.labels)
    if not is_equitable(ec):
        return Verdict(False, ec, vc, EDGE_IMBALANCE)
    if not is_equitable(vc):
        return Verdict(False, ec, vc, VERTEX_IMBALANCE)
    return Verdict(True, ec, vc)


def _require_tree(graph: SimpleGraph) -> None:
    if graph.kind not in (PATH, TREE):
        raise InvalidGraphError(f"expected a path or tree, got kind {graph.kind!r}")


def verify_a_antimagic(graph: SimpleGraph, f: EdgeLabeling) -> Verdict:
    """Injective edge labels and pairwise distinct vertex sums, |T| = |A|.

    The tree has |A| vertices and |A|-1 edges, so injectivity on both sides
    is the same as every class count being at most one.
    """
    _require_tree(graph)
    if graph.n != f.group.order or len(f.labels) != len(graph.edges):
        return Verdict(False, {}, {}, SIZE_MISMATCH)
    ec, vc = _counts_both(graph, f)
    if max(ec.values()) > 1:
        return Verdict(False, ec, vc, EDGE_COLLISION)
    if max(vc.values()) > 1:
        return Verdict(False, ec, vc, VERTEX_COLLISION)
    return Verdict(True, ec, vc)


def verify_a_star_antimagic(graph: SimpleGraph, f: EdgeLabeling) -> Verdict:
    """Edge labels a bijection onto the nonzero elements, vertex sums distinct."""
    _require_tree(graph)
    if graph.n != f.group.order or len(f.labels) != len(graph.edges):
        return Verdict(False, {}, {}, SIZE_MISMATCH)
    ec, vc = _counts_both(graph, f)
    zero = f.group.zero()
    if ec.get(zero, 0) > 0:
        return Verdict(False, ec, vc, ZERO_EDGE_FORBIDDEN)
    if max(ec.values()) > 1:
        return Verdict(False, ec, vc, EDGE_COLLISION)
    if max(vc.values()) > 1:
        return Verdict(False, ec, vc, VERTEX_COLLISION)
    return Verdict(True, ec, vc)
