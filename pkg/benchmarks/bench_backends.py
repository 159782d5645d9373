"""Timing comparison between the pure Python and compiled search kernels.

Each workload runs in a fresh subprocess with CORDANT_BACKEND pinned, so
the import-time backend choice is exercised exactly as users hit it.
Statuses and node counts must agree between backends; the table reports
wall time and speedup.

Usage:
    python benchmarks/bench_backends.py [--repeat N] [--large] [--json]
"""

import argparse
import json
import os
import subprocess
import sys

CHILD = r"""
import json, sys, time
task = json.loads(sys.argv[1])
from cordant.graphs import cycle_graph, path_graph
from cordant.groups import GroupSpec
import cordant.search as S
from cordant._kernel import backend_name

spec = GroupSpec(tuple(task["factors"]))
kind = task["kind"]
t0 = time.perf_counter()
if kind == "ea":
    graph = path_graph(task["n"]) if task["graph"] == "path" else cycle_graph(task["n"])
    out = S.search_ea_cordial(graph, spec, budget=None)
elif kind == "ac":
    graph = cycle_graph(task["n"])
    out = S.search_a_cordial(graph, spec, budget=None)
elif kind == "am":
    out = S.search_a_antimagic(path_graph(spec.order), spec, budget=None)
elif kind == "as":
    out = S.search_a_star_antimagic(path_graph(spec.order), spec, budget=None)
elif kind == "rstar":
    out = S.search_rstar_sequence(spec, budget=None)
elif kind == "sigma":
    out = S.compute_sigma_max(spec, budget=None)
else:
    raise SystemExit(f"unknown kind {kind}")
elapsed = time.perf_counter() - t0
print(json.dumps({
    "backend": backend_name(),
    "status": out.status,
    "nodes": out.nodes_explored,
    "seconds": elapsed,
}))
"""

WORKLOADS = [
    ("equitable exhaust, P6 over Z6",
     {"kind": "ea", "graph": "path", "n": 6, "factors": [6]}, False),
    ("vertex equitable exhaust, C12 over Z4",
     {"kind": "ac", "n": 12, "factors": [4]}, False),
    ("distinct-sum exhaust, P10 over Z2xZ5",
     {"kind": "am", "factors": [2, 5]}, False),
    ("zero-free exhaust, P8 over (Z2)^3",
     {"kind": "as", "factors": [2, 2, 2]}, False),
    ("difference sequence, (Z2)^4",
     {"kind": "rstar", "factors": [2, 2, 2, 2]}, False),
    ("neighbour-sum maximum, (Z2)^3",
     {"kind": "sigma", "factors": [2, 2, 2]}, False),
    ("equitable exhaust, P18 over Z6",
     {"kind": "ea", "graph": "path", "n": 18, "factors": [6]}, True),
    ("vertex equitable exhaust, C12 over Z12",
     {"kind": "ac", "n": 12, "factors": [12]}, True),
]


def run_child(backend: str, task: dict) -> dict:
    env = dict(os.environ, CORDANT_BACKEND=backend)
    proc = subprocess.run(
        [sys.executable, "-c", CHILD, json.dumps(task)],
        capture_output=True, text=True, env=env, check=False)
    if proc.returncode != 0:
        raise SystemExit(
            f"{backend} child failed for {task}:\n{proc.stderr}")
    return json.loads(proc.stdout)


def measure(backend: str, task: dict, repeat: int) -> dict:
    best = None
    for _ in range(repeat):
        result = run_child(backend, task)
        if best is None or result["seconds"] < best["seconds"]:
            best = result
    return best


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=1,
                        help="runs per cell, best time kept")
    parser.add_argument("--large", action="store_true",
                        help="include the multi-million-node workloads "
                             "(slow on the pure backend)")
    parser.add_argument("--json", action="store_true", dest="as_json",
                        help="machine-readable output")
    args = parser.parse_args(argv)

    probe = run_child("compiled", WORKLOADS[0][1]) if _have_compiled() else None
    if probe is None:
        print("compiled backend unavailable; nothing to compare",
              file=sys.stderr)
        return 1

    rows = []
    for name, task, large in WORKLOADS:
        if large and not args.large:
            continue
        pure = measure("pure", task, args.repeat)
        fast = measure("compiled", task, args.repeat)
        if (pure["status"], pure["nodes"]) != (fast["status"], fast["nodes"]):
            raise SystemExit(
                f"backend mismatch on {name}: "
                f"pure {pure['status']}/{pure['nodes']} vs "
                f"compiled {fast['status']}/{fast['nodes']}")
        rows.append({
            "workload": name,
            "status": pure["status"],
            "nodes": pure["nodes"],
            "pure_s": pure["seconds"],
            "compiled_s": fast["seconds"],
            "speedup": pure["seconds"] / max(fast["seconds"], 1e-9),
        })

    if args.as_json:
        print(json.dumps(rows, indent=2))
        return 0

    width = max(len(r["workload"]) for r in rows)
    header = (f"{'workload':<{width}}  {'status':<9} {'nodes':>10} "
              f"{'pure':>9} {'compiled':>9} {'speedup':>8}")
    print(header)
    print("-" * len(header))
    for r in rows:
        print(f"{r['workload']:<{width}}  {r['status']:<9} "
              f"{r['nodes']:>10} {r['pure_s']:>8.3f}s "
              f"{r['compiled_s']:>8.3f}s {r['speedup']:>7.1f}x")
    return 0


def _have_compiled() -> bool:
    env = dict(os.environ, CORDANT_BACKEND="compiled")
    proc = subprocess.run(
        [sys.executable, "-c", "import cordant._kernel"],
        capture_output=True, env=env, check=False)
    return proc.returncode == 0


if __name__ == "__main__":
    sys.exit(main())
