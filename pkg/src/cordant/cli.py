"""Command-line surface: construct, verify, decide, search, survey, demo.

Exit codes are uniform across subcommands: 0 for success / exists /
valid, 1 for not-exists / invalid / impossible, 2 for usage or input
errors, 3 when a search ran out of budget.  Budgets count explored
search nodes; a wall-clock budget is mapped to nodes with a deliberately
conservative constant so a time budget never under-delivers nodes.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .certificates import (
    Certificate,
    NOTION_A_ANTIMAGIC,
    NOTION_A_CORDIAL,
    NOTION_A_STAR_ANTIMAGIC,
    NOTION_EA_CORDIAL,
    NOTIONS,
    certificate_dumps,
    certificate_loads,
    load_demo_certificate,
    make_edge_certificate,
    make_vertex_certificate,
)
from .constructions import (
    STATUS_IMPOSSIBLE,
    construct_ant_path,
    construct_path_antimagic,
    construct_path_ek,
    decide_cycle_zk_cordial,
    decide_path_a_antimagic,
    decide_path_ek_cordial,
    decide_tree_2mod4_obstruction,
    sigma_max_formula,
)
from .errors import CordantError
from .graphs import SimpleGraph, TREE, cycle_graph, path_graph, tree_graph
from .groups import GroupSpec, format_group, parse_group
from .labelings import EdgeLabeling, VertexLabeling
from .search import (
    DEFAULT_BUDGET,
    STATUS_FOUND,
    STATUS_NOT_EXISTS,
    STATUS_UNKNOWN,
    compute_sigma_max,
    search_a_antimagic,
    search_a_cordial,
    search_a_star_antimagic,
    search_ea_cordial,
    search_rstar_sequence,
)
from .explore import explore_conjecture

EXIT_OK = 0
EXIT_NO = 1
EXIT_USAGE = 2
EXIT_UNKNOWN = 3

# node budget granted per second of --budget-seconds; deliberately below
# the kernel's measured nodes/second so time budgets finish early, not late
NODES_PER_SECOND = 500_000

BUDGET_ENV = "CORDANT_BUDGET"

__all__ = ["main"]


def _resolve_budget(args) -> int | None:
    if getattr(args, "budget", None) is not None:
        return None if args.budget < 0 else args.budget
    if getattr(args, "budget_seconds", None) is not None:
        return max(1, int(args.budget_seconds * NODES_PER_SECOND))
    env = os.environ.get(BUDGET_ENV)
    if env is not None:
        value = int(env)
        return None if value < 0 else value
    return DEFAULT_BUDGET


def _emit(args, text_lines: list[str], doc: dict | None) -> None:
    if args.format == "json" and doc is not None:
        print(json.dumps(doc, indent=2))
    else:
        for line in text_lines:
            print(line)
    if getattr(args, "output", None) and doc is not None:
        with open(args.output, "w", encoding="utf-8") as fh:
            json.dump(doc, fh, indent=2)
            fh.write("\n")


def _emit_certificate(args, cert: Certificate, extra: dict | None = None,
                      lines: list[str] | None = None) -> None:
    text = certificate_dumps(cert)
    doc = json.loads(text)
    if extra:
        doc.update(extra)
    shown = lines or []
    if args.format == "json":
        print(json.dumps(doc, indent=2))
    else:
        for line in shown:
            print(line)
        print(text)
    if getattr(args, "output", None):
        with open(args.output, "w", encoding="utf-8") as fh:
            json.dump(doc, fh, indent=2)
            fh.write("\n")


def _parse_elements(spec: GroupSpec, text: str) -> tuple:
    raw = json.loads(text)
    if not isinstance(raw, list):
        raise CordantError("labels must be a JSON array")
    out = []
    for item in raw:
        if isinstance(item, int):
            out.append((item,))
        else:
            out.append(tuple(int(x) for x in item))
    return tuple(out)


def _graph_from_args(args) -> SimpleGraph:
    if args.kind == "path":
        return path_graph(args.n)
    if args.kind == "cycle":
        return cycle_graph(args.n)
    if args.edges is None:
        raise CordantError("tree graphs need --edges")
    edges = tuple(tuple(int(x) for x in e) for e in json.loads(args.edges))
    n = args.n if args.n is not None else 1 + max(max(e) for e in edges)
    return tree_graph(n, edges)


# ---------------------------------------------------------------------------
# subcommand handlers

def _cmd_construct(args) -> int:
    budget = _resolve_budget(args)
    if args.target == "antimagic-path":
        spec = parse_group(args.group)
        result = construct_path_antimagic(spec, budget=budget,
                                          workers=args.workers)
        notion = NOTION_A_ANTIMAGIC
        graph = path_graph(spec.order)
    elif args.target == "ek-path":
        result = construct_path_ek(args.n, args.k, budget=budget,
                                   workers=args.workers)
        notion = NOTION_EA_CORDIAL
        graph = path_graph(args.n)
    else:  # ant-path
        spec = parse_group(args.group)
        f = construct_ant_path(spec)
        cert = make_edge_certificate(NOTION_EA_CORDIAL,
                                     path_graph(spec.order), f)
        _emit_certificate(args, cert, extra={"route": "block"},
                          lines=["status Found (route block)"])
        return EXIT_OK
    if result.status == STATUS_IMPOSSIBLE:
        _emit(args, ["impossible"],
              {"status": result.status, "route": result.route})
        return EXIT_NO
    if result.status == STATUS_UNKNOWN:
        _emit(args, [f"unknown (budget exhausted after "
                     f"{result.nodes_explored} nodes)"],
              {"status": result.status, "route": result.route,
               "nodes_explored": result.nodes_explored})
        return EXIT_UNKNOWN
    cert = make_edge_certificate(notion, graph, result.labeling)
    if not cert.verdict.ok:
        raise CordantError("constructed labeling failed re-verification")
    _emit_certificate(
        args, cert,
        extra={"route": result.route,
               "nodes_explored": result.nodes_explored},
        lines=[f"status Found (route {result.route}, "
               f"{result.nodes_explored} nodes)"])
    return EXIT_OK


def _cmd_verify(args) -> int:
    if args.certificate:
        with open(args.certificate, encoding="utf-8") as fh:
            cert = certificate_loads(fh.read())
    else:
        if not (args.notion and args.group and args.kind and args.labels):
            raise CordantError(
                "inline verification needs --notion, --group, --kind, --labels")
        spec = parse_group(args.group)
        graph = _graph_from_args(args)
        labels = _parse_elements(spec, args.labels)
        if args.notion == NOTION_A_CORDIAL:
            cert = make_vertex_certificate(graph, VertexLabeling(spec, labels))
        else:
            cert = make_edge_certificate(args.notion, graph,
                                         EdgeLabeling(spec, labels))
    verdict = cert.verdict
    line = "valid" if verdict.ok else f"invalid ({verdict.violation})"
    _emit_certificate(args, cert, lines=[line])
    return EXIT_OK if verdict.ok else EXIT_NO


def _cmd_decide(args) -> int:
    if args.question == "path-ek":
        answer = decide_path_ek_cordial(args.n, args.k)
        subject = f"equitable Z_{args.k} edge labeling of P_{args.n}"
    elif args.question == "cycle-zk":
        answer = decide_cycle_zk_cordial(args.n, args.k)
        subject = f"equitable Z_{args.k} vertex labeling of C_{args.n}"
    elif args.question == "path-antimagic":
        spec = parse_group(args.group)
        answer = decide_path_a_antimagic(spec)
        subject = (f"injective distinct-sum labeling of "
                   f"P_{spec.order} over {format_group(spec)}")
    else:  # tree-2mod4
        spec = parse_group(args.group)
        obstructed = decide_tree_2mod4_obstruction(args.n, spec)
        word = "obstructed" if obstructed else "unobstructed"
        _emit(args, [word], {"question": args.question, "n": args.n,
                             "group": list(spec.factors),
                             "obstructed": obstructed})
        return EXIT_NO if obstructed else EXIT_OK
    word = "possible" if answer else "impossible"
    _emit(args, [word], {"question": args.question, "decision": answer,
                         "subject": subject})
    return EXIT_OK if answer else EXIT_NO


def _outcome_doc(outcome, certificate_obj) -> dict:
    return {"status": outcome.status, "certificate": certificate_obj,
            "nodes_explored": outcome.nodes_explored}


def _cmd_search(args) -> int:
    budget = _resolve_budget(args)
    spec = parse_group(args.group)
    if args.notion == "rstar":
        outcome = search_rstar_sequence(spec, budget=budget,
                                        workers=args.workers)
        cert_obj = None
        if outcome.certificate is not None:
            cert_obj = {"seq": [list(a) for a in outcome.certificate.seq],
                        "star_index": outcome.certificate.star_index}
        doc = _outcome_doc(outcome, cert_obj)
        _emit(args, [f"{outcome.status} ({outcome.nodes_explored} nodes)"]
              + ([f"sequence {cert_obj['seq']} star {cert_obj['star_index']}"]
                 if cert_obj else []), doc)
    else:
        graph = _graph_from_args(args)
        runner = {
            "ea-cordial": search_ea_cordial,
            "a-cordial": search_a_cordial,
            "antimagic": search_a_antimagic,
            "astar-antimagic": search_a_star_antimagic,
        }[args.notion]
        outcome = runner(graph, spec, budget=budget, workers=args.workers)
        cert_obj = None
        lines = [f"{outcome.status} ({outcome.nodes_explored} nodes)"]
        if outcome.certificate is not None:
            notion = {
                "ea-cordial": NOTION_EA_CORDIAL,
                "antimagic": NOTION_A_ANTIMAGIC,
                "astar-antimagic": NOTION_A_STAR_ANTIMAGIC,
            }.get(args.notion)
            if notion is None:
                cert = make_vertex_certificate(graph, outcome.certificate)
            else:
                cert = make_edge_certificate(notion, graph,
                                             outcome.certificate)
            if not cert.verdict.ok:
                raise CordantError("search certificate failed re-verification")
            cert_obj = json.loads(certificate_dumps(cert))
            lines.append(certificate_dumps(cert))
        doc = _outcome_doc(outcome, cert_obj)
        _emit(args, lines, doc)
    if outcome.status == STATUS_FOUND:
        return EXIT_OK
    if outcome.status == STATUS_NOT_EXISTS:
        return EXIT_NO
    return EXIT_UNKNOWN


def _cmd_sigma_max(args) -> int:
    spec = parse_group(args.group)
    doc: dict = {"group": list(spec.factors), "mode": args.mode}
    lines: list[str] = []
    formula = searched = None
    if args.mode in ("formula", "both"):
        formula = sigma_max_formula(spec)
        doc["formula"] = formula
        lines.append(f"formula {formula}")
    if args.mode in ("search", "both"):
        result = compute_sigma_max(spec, budget=_resolve_budget(args))
        if result.status == STATUS_UNKNOWN:
            doc["search"] = None
            doc["status"] = result.status
            lines.append("search unknown (budget exhausted)")
            _emit(args, lines, doc)
            return EXIT_UNKNOWN
        searched = result.value
        doc["search"] = searched
        doc["witness"] = [list(a) for a in result.witness.order]
        doc["nodes_explored"] = result.nodes_explored
        lines.append(f"search {searched}")
        lines.append(f"witness {[list(a) for a in result.witness.order]}")
    if args.mode == "both":
        agree = formula == searched
        doc["agree"] = agree
        lines.append(f"agree {str(agree).lower()}")
        _emit(args, lines, doc)
        return EXIT_OK if agree else EXIT_NO
    _emit(args, lines, doc)
    return EXIT_OK


def _cmd_explore(args) -> int:
    report = explore_conjecture(args.n_max, budget=_resolve_budget(args),
                                workers=args.workers)
    doc = {
        "n_max": report.n_max,
        "rows": [{
            "n": r.n, "group": list(r.group.factors),
            "tree_index": r.tree_index,
            "edges": [list(e) for e in r.edges],
            "zero_allowed": r.antimagic_status,
            "zero_allowed_nodes": r.antimagic_nodes,
            "zero_allowed_labels": ([list(a) for a in r.antimagic_labels]
                                    if r.antimagic_labels else None),
            "zero_free": r.astar_status,
            "zero_free_nodes": r.astar_nodes,
            "violation": r.violates,
        } for r in report.rows],
        "violations": len(report.violations),
        "unknown": len(report.unknown_rows),
    }
    _emit(args, report.summary_lines(), doc)
    if report.violations:
        return EXIT_NO
    if report.unknown_rows:
        return EXIT_UNKNOWN
    return EXIT_OK


def _cmd_demo(args) -> int:
    cert = load_demo_certificate(args.number)
    extra = {}
    lines = [f"demo {args.number}: {cert.notion} on {cert.graph.kind} "
             f"n={cert.graph.n} over {format_group(cert.group)}"]
    if args.number in (2, 3):
        rebuilt = construct_ant_path(cert.group)
        if rebuilt.labels != cert.edge_labels:
            print("error: fixture does not match the regenerated labeling",
                  file=sys.stderr)
            return EXIT_USAGE
        extra["regenerated"] = "match"
        lines.append("regenerated labeling matches the fixture")
    _emit_certificate(args, cert, extra=extra, lines=lines)
    return EXIT_OK if cert.verdict.ok else EXIT_NO


# ---------------------------------------------------------------------------
# parser

def _add_common(sub, budget=True, workers=True, graph=False) -> None:
    sub.add_argument("--format", choices=("text", "json"), default="text")
    sub.add_argument("--output", help="also write the JSON document here")
    if budget:
        sub.add_argument("--budget", type=int, default=None,
                         help="search node budget; negative for unlimited "
                              f"(default {DEFAULT_BUDGET} or ${BUDGET_ENV})")
        sub.add_argument("--budget-seconds", type=float, default=None,
                         help="wall-clock budget, mapped to "
                              f"{NODES_PER_SECOND} nodes per second")
    if workers:
        sub.add_argument("--workers", type=int, default=1,
                         help="parallel branches; results are identical "
                              "for any value")
    if graph:
        sub.add_argument("--kind", choices=("path", "cycle", "tree"),
                         default="path")
        sub.add_argument("--n", type=int, default=None)
        sub.add_argument("--edges", default=None,
                         help='JSON edge list for --kind tree, e.g. "[[0,1],[1,2]]"')


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cordant",
        description="Equitable and distinct-sum group labelings of paths, "
                    "cycles, and trees: constructions, deciders, searches.")
    subs = parser.add_subparsers(dest="command", required=True)

    con = subs.add_parser("construct", help="build a certified labeling")
    con_subs = con.add_subparsers(dest="target", required=True)
    c1 = con_subs.add_parser("antimagic-path",
                             help="injective distinct-sum labeling of P_|A|")
    c1.add_argument("--group", required=True)
    _add_common(c1)
    c1.set_defaults(func=_cmd_construct)
    c2 = con_subs.add_parser("ek-path",
                             help="equitable Z_k edge labeling of P_n")
    c2.add_argument("--n", type=int, required=True)
    c2.add_argument("--k", type=int, required=True)
    _add_common(c2)
    c2.set_defaults(func=_cmd_construct)
    c3 = con_subs.add_parser("ant-path",
                             help="block construction for groups with a "
                                  "Z_4m factor, m > 1")
    c3.add_argument("--group", required=True)
    _add_common(c3, budget=False, workers=False)
    c3.set_defaults(func=_cmd_construct)

    ver = subs.add_parser("verify", help="check a labeling or a certificate")
    ver.add_argument("--certificate", help="certificate JSON file")
    ver.add_argument("--notion", choices=NOTIONS)
    ver.add_argument("--group")
    ver.add_argument("--labels", help="JSON label array")
    _add_common(ver, budget=False, workers=False, graph=True)
    ver.set_defaults(func=_cmd_verify)

    dec = subs.add_parser("decide", help="closed-form existence answers")
    dec_subs = dec.add_subparsers(dest="question", required=True)
    d1 = dec_subs.add_parser("path-ek")
    d1.add_argument("--n", type=int, required=True)
    d1.add_argument("--k", type=int, required=True)
    d2 = dec_subs.add_parser("cycle-zk")
    d2.add_argument("--n", type=int, required=True)
    d2.add_argument("--k", type=int, required=True)
    d3 = dec_subs.add_parser("tree-2mod4")
    d3.add_argument("--n", type=int, required=True)
    d3.add_argument("--group", required=True)
    d4 = dec_subs.add_parser("path-antimagic")
    d4.add_argument("--group", required=True)
    for d in (d1, d2, d3, d4):
        _add_common(d, budget=False, workers=False)
        d.set_defaults(func=_cmd_decide)

    sea = subs.add_parser("search", help="exhaustive backtracking searches")
    sea.add_argument("notion", choices=("ea-cordial", "a-cordial",
                                        "antimagic", "astar-antimagic",
                                        "rstar"))
    sea.add_argument("--group", required=True)
    _add_common(sea, graph=True)
    sea.set_defaults(func=_cmd_search)

    sig = subs.add_parser("sigma-max",
                          help="most distinct neighbour sums on an element "
                               "cycle")
    sig.add_argument("--group", required=True)
    sig.add_argument("--mode", choices=("formula", "search", "both"),
                     default="both")
    _add_common(sig, workers=False)
    sig.set_defaults(func=_cmd_sigma_max)

    exp = subs.add_parser("explore",
                          help="survey all groups and trees per order")
    exp.add_argument("--n-max", type=int, required=True)
    _add_common(exp)
    exp.set_defaults(func=_cmd_explore)

    dem = subs.add_parser("demo", help="print a bundled example certificate")
    dem.add_argument("number", type=int, choices=(1, 2, 3, 4))
    _add_common(dem, budget=False, workers=False)
    dem.set_defaults(func=_cmd_demo)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CordantError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (OSError, ValueError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
