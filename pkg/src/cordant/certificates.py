"""Machine-checkable labeling certificates with a stable JSON form.

A certificate bundles the group, the graph, both label families (the
assigned one and the induced one), and the verdict of the matching
verifier.  Serialization is deterministic: same certificate, same
bytes.  Deserialization re-runs the verifier and refuses documents
whose stored verdict does not match, so a loaded certificate is always
a checked one.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources

from .errors import InvalidLabelingError, InvalidSpecError
from .graphs import CYCLE, GENERAL, PATH, TREE, SimpleGraph, cycle_graph, path_graph
from .groups import Element, GroupSpec, enumerate_elements
from .labelings import (
    EdgeLabeling,
    Verdict,
    VertexLabeling,
    induce_edge_labels,
    induce_vertex_labels,
    verify_a_antimagic,
    verify_a_cordial,
    verify_a_star_antimagic,
    verify_ea_cordial,
)

NOTION_EA_CORDIAL = "ea-cordial"
NOTION_A_CORDIAL = "a-cordial"
NOTION_A_ANTIMAGIC = "a-antimagic"
NOTION_A_STAR_ANTIMAGIC = "a-star-antimagic"

NOTIONS = (
    NOTION_EA_CORDIAL,
    NOTION_A_CORDIAL,
    NOTION_A_ANTIMAGIC,
    NOTION_A_STAR_ANTIMAGIC,
)

_EDGE_VERIFIERS = {
    NOTION_EA_CORDIAL: verify_ea_cordial,
    NOTION_A_ANTIMAGIC: verify_a_antimagic,
    NOTION_A_STAR_ANTIMAGIC: verify_a_star_antimagic,
}

__all__ = [
    "Certificate",
    "NOTIONS",
    "NOTION_A_ANTIMAGIC",
    "NOTION_A_CORDIAL",
    "NOTION_A_STAR_ANTIMAGIC",
    "NOTION_EA_CORDIAL",
    "certificate_dumps",
    "certificate_loads",
    "load_demo_certificate",
    "make_edge_certificate",
    "make_vertex_certificate",
]


@dataclass(frozen=True)
class Certificate:
    """A labeling, its induced partner labels, and the checked verdict."""

    notion: str
    group: GroupSpec
    graph: SimpleGraph
    edge_labels: tuple[Element, ...]
    vertex_labels: tuple[Element, ...]
    verdict: Verdict


def make_edge_certificate(notion: str, graph: SimpleGraph,
                          f: EdgeLabeling) -> Certificate:
    """Certificate for an edge labeling; vertex labels are the sums."""
    if notion not in _EDGE_VERIFIERS:
        raise InvalidSpecError(f"not an edge-labeling notion: {notion!r}")
    verdict = _EDGE_VERIFIERS[notion](graph, f)
    vertex = induce_vertex_labels(graph, f).labels
    return Certificate(notion, f.group, graph, f.labels, vertex, verdict)


def make_vertex_certificate(graph: SimpleGraph,
                            c: VertexLabeling) -> Certificate:
    """Certificate for a vertex labeling; edge labels are endpoint sums."""
    verdict = verify_a_cordial(graph, c)
    edge = induce_edge_labels(graph, c).labels
    return Certificate(NOTION_A_CORDIAL, c.group, graph, edge, c.labels,
                       verdict)


# ---------------------------------------------------------------------------
# JSON form

def _graph_to_obj(graph: SimpleGraph) -> dict:
    obj: dict = {"kind": graph.kind, "n": graph.n}
    if graph.kind not in (PATH, CYCLE):
        obj["edges"] = [[u, v] for u, v in graph.edges]
    return obj


def _graph_from_obj(obj: dict) -> SimpleGraph:
    kind = obj["kind"]
    n = int(obj["n"])
    if kind == PATH:
        return path_graph(n)
    if kind == CYCLE:
        return cycle_graph(n)
    edges = tuple((int(u), int(v)) for u, v in obj["edges"])
    if kind == TREE:
        return SimpleGraph(n, edges, TREE)
    if kind == GENERAL:
        return SimpleGraph(n, edges, GENERAL)
    raise InvalidLabelingError(f"unknown graph kind {kind!r}")


def _counts_to_list(spec: GroupSpec, counts: dict[Element, int]) -> list[int]:
    # class counts are stored as a list in element enumeration order
    return [counts[a] for a in enumerate_elements(spec)]


def _counts_from_list(spec: GroupSpec, values: list[int]) -> dict[Element, int]:
    elems = enumerate_elements(spec)
    if len(values) != len(elems):
        raise InvalidLabelingError("class count list does not cover the group")
    return {a: int(v) for a, v in zip(elems, values)}


def certificate_to_obj(cert: Certificate) -> dict:
    return {
        "notion": cert.notion,
        "group": list(cert.group.factors),
        "graph": _graph_to_obj(cert.graph),
        "edge_labels": [list(a) for a in cert.edge_labels],
        "vertex_labels": [list(a) for a in cert.vertex_labels],
        "verdict": {
            "ok": cert.verdict.ok,
            "violation": cert.verdict.violation,
            "edge_class_counts": _counts_to_list(
                cert.group, cert.verdict.edge_class_counts),
            "vertex_class_counts": _counts_to_list(
                cert.group, cert.verdict.vertex_class_counts),
        },
    }


def certificate_dumps(cert: Certificate) -> str:
    """Deterministic JSON text for a certificate."""
    return json.dumps(certificate_to_obj(cert), indent=2)


def certificate_from_obj(obj: dict) -> Certificate:
    """Rebuild and re-check a certificate from its JSON object form.

    The verifier runs again on the rebuilt labeling; any disagreement
    with the stored verdict (or between stored and induced labels) is
    rejected as corruption.
    """
    try:
        notion = obj["notion"]
        spec = GroupSpec(tuple(int(d) for d in obj["group"]))
        graph = _graph_from_obj(obj["graph"])
        edge_labels = tuple(tuple(int(x) for x in a)
                            for a in obj["edge_labels"])
        vertex_labels = tuple(tuple(int(x) for x in a)
                              for a in obj["vertex_labels"])
        stored = obj["verdict"]
        stored_edge = _counts_from_list(spec, stored["edge_class_counts"])
        stored_vertex = _counts_from_list(spec, stored["vertex_class_counts"])
        stored_ok = bool(stored["ok"])
        stored_violation = stored["violation"]
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidLabelingError(f"malformed certificate: {exc}") from exc
    if notion == NOTION_A_CORDIAL:
        rebuilt = make_vertex_certificate(
            graph, VertexLabeling(spec, vertex_labels))
        if rebuilt.edge_labels != edge_labels:
            raise InvalidLabelingError(
                "stored edge labels are not the induced endpoint sums")
    else:
        rebuilt = make_edge_certificate(
            notion, graph, EdgeLabeling(spec, edge_labels))
        if rebuilt.vertex_labels != vertex_labels:
            raise InvalidLabelingError(
                "stored vertex labels are not the induced sums")
    v = rebuilt.verdict
    if (v.ok, v.violation, v.edge_class_counts, v.vertex_class_counts) != \
            (stored_ok, stored_violation, stored_edge, stored_vertex):
        raise InvalidLabelingError("stored verdict does not re-verify")
    return rebuilt


def certificate_loads(text: str) -> Certificate:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidLabelingError(f"not valid JSON: {exc}") from exc
    return certificate_from_obj(obj)


def load_demo_certificate(number: int) -> Certificate:
    """Load one of the four bundled example certificates (1 to 4)."""
    if number not in (1, 2, 3, 4):
        raise InvalidSpecError("demo certificates are numbered 1 to 4")
    text = (resources.files("cordant") / "fixtures" /
            f"demo{number}.json").read_text(encoding="utf-8")
    return certificate_loads(text)
