"""Exhaustive searches with certificates, budgets, and parallel splitting.

Every search enumerates labels in group enumeration order at each slot, so
a Found outcome always carries the lexicographically first solution, a
NotExists outcome means the pruned space was exhausted, and an Unknown
outcome means the node budget ran out first.  Node accounting is defined
by the kernels: one node per placement attempt.

Parallelism never changes results: the search is always split into one
branch per first-slot label with a fixed budget share each, branches are
merged in label order, and ``workers`` only decides how many branches run
concurrently.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from . import _kernel
from ._kernel import BUDGET, EXHAUSTED, FOUND
from .errors import InternalCheckError, InvalidGraphError, InvalidSpecError
from .graphs import CYCLE, PATH, TREE, SimpleGraph
from .groups import Element, GroupSpec, element_at, element_index, op_tables
from .labelings import (
    EdgeLabeling,
    Verdict,
    VertexLabeling,
    verify_a_antimagic,
    verify_a_cordial,
    verify_a_star_antimagic,
    verify_ea_cordial,
)

#: Default node budget for every search entry point.
DEFAULT_BUDGET = 10_000_000

STATUS_FOUND = "Found"
STATUS_NOT_EXISTS = "NotExists"
STATUS_UNKNOWN = "Unknown"


@dataclass(frozen=True)
class SearchOutcome:
    """Result of one search: status, certificate (when Found), and cost."""

    status: str
    certificate: object | None
    nodes_explored: int

    @property
    def budget_spent(self) -> int:
        """Spent budget in node units (same scale as ``nodes_explored``)."""
        return self.nodes_explored


@dataclass(frozen=True)
class RStarSequence:
    """An ordering of the nonzero elements whose cyclic consecutive
    differences are pairwise distinct, with a marked position equal to
    the sum of its two cyclic neighbours."""

    group: GroupSpec
    seq: tuple[Element, ...]
    star_index: int

    def __post_init__(self) -> None:
        from .groups import add, negate, check_element

        object.__setattr__(self, "seq", tuple(tuple(a) for a in self.seq))
        spec = self.group
        zero = spec.zero()
        if len(self.seq) != spec.order - 1:
            raise InvalidSpecError("sequence must list every nonzero element once")
        seen = set()
        for a in self.seq:
            check_element(spec, a)
            if a == zero or a in seen:
                raise InvalidSpecError("sequence must list every nonzero element once")
            seen.add(a)
        n = len(self.seq)
        diffs = set()
        for i in range(n):
            d = add(spec, self.seq[i], negate(spec, self.seq[i - 1]))
            if d in diffs:
                raise InvalidSpecError("cyclic consecutive differences collide")
            diffs.add(d)
        i = self.star_index
        if not 0 <= i < n:
            raise InvalidSpecError("star index out of range")
        if add(spec, self.seq[i - 1], self.seq[(i + 1) % n]) != self.seq[i]:
            raise InvalidSpecError("star position is not the sum of its neighbours")


@dataclass(frozen=True)
class HamiltonianCycle:
    """A cyclic ordering of all group elements, starting at zero."""

    group: GroupSpec
    order: tuple[Element, ...]
    distinct_sum_count: int = -1

    def __post_init__(self) -> None:
        from .groups import add, check_element

        object.__setattr__(self, "order", tuple(tuple(a) for a in self.order))
        if len(self.order) != self.group.order or len(set(self.order)) != len(self.order):
            raise InvalidSpecError("cycle must visit every element exactly once")
        for a in self.order:
            check_element(self.group, a)
        if self.order and self.order[0] != self.group.zero():
            raise InvalidSpecError("cycle must start at zero")
        n = len(self.order)
        sums = len({add(self.group, self.order[i - 1], self.order[i])
                    for i in range(n)})
        if self.distinct_sum_count == -1:
            object.__setattr__(self, "distinct_sum_count", sums)
        elif self.distinct_sum_count != sums:
            raise InvalidSpecError("stored sum count does not match the ordering")

    def distinct_sums(self) -> int:
        return self.distinct_sum_count


@dataclass(frozen=True)
class SigmaMaxResult:
    """Maximum number of distinct cyclic pair sums, with a witness cycle.

    ``status`` is Found when the value is exact (full exhaustion) and
    Unknown when the budget ran out (the value is then a lower bound).
    """

    status: str
    value: int
    witness: HamiltonianCycle | None
    nodes_explored: int


def _equitable_bounds(count: int, m: int) -> tuple[list[int], list[int]]:
    q, r = divmod(count, m)
    cap = q + (1 if r else 0)
    return [cap] * m, [q] * m


def _norm_budget(budget: int | None) -> int:
    if budget is None:
        return -1
    if budget < 0:
        raise ValueError("budget must be nonnegative (or None for unbounded)")
    return int(budget)


def _shares(budget: int, branches: int) -> list[int]:
    if budget < 0:
        return [-1] * branches
    base, rem = divmod(budget, branches)
    return [base + (1 if i < rem else 0) for i in range(branches)]


def _run_branch(task):
    kind, args = task
    kern = _kernel.active_backend()
    return getattr(kern, "solve_" + kind)(*args)


def _orchestrate(tasks: list, workers: int) -> list:
    """Run branch tasks, collecting results in branch order.

    Stops evaluating at the first branch that is not exhausted; with
    workers > 1 the later branches may still compute, but their results
    are discarded, so outcomes match the sequential run exactly.
    """
    results = []
    if workers <= 1:
        for t in tasks:
            r = _run_branch(t)
            results.append(r)
            if r[0] != EXHAUSTED:
                break
    else:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            futures = [ex.submit(_run_branch, t) for t in tasks]
            for f in futures:
                r = f.result()
                results.append(r)
                if r[0] != EXHAUSTED:
                    for g in futures:
                        g.cancel()
                    break
    return results


def _merge(results: list, nodes_index: int) -> tuple[int, object, int]:
    nodes = sum(r[nodes_index] for r in results)
    last = results[-1] if results else None
    if last is not None and last[0] == FOUND:
        return FOUND, last, nodes
    if last is not None and last[0] == BUDGET:
        return BUDGET, None, nodes
    return EXHAUSTED, None, nodes


def _split_solve(kind: str, fixed_args: tuple, prefix: list, tail_args: tuple,
                 num_labels: int, first_label: int, budget: int, workers: int,
                 slots_left: bool) -> tuple[int, object, int]:
    """Root-split a kernel call on the labels of the first free slot."""
    nodes_index = 2 if kind in ("chain", "generic") else 3
    if not slots_left:
        r = _run_branch((kind, fixed_args + (prefix, budget) + tail_args))
        return (r[0], r if r[0] == FOUND else None, r[nodes_index])
    labels = list(range(first_label, num_labels))
    shares = _shares(budget, len(labels))
    tasks = [
        (kind, fixed_args + (prefix + [x], shares[i]) + tail_args)
        for i, x in enumerate(labels)
    ]
    return _merge(_orchestrate(tasks, workers), nodes_index)


_STATUS_NAME = {FOUND: STATUS_FOUND, EXHAUSTED: STATUS_NOT_EXISTS, BUDGET: STATUS_UNKNOWN}


# ---------------------------------------------------------------------------
# instance builders


def _chain_shape(graph: SimpleGraph, slots_on_edges: bool):
    """(num_slots, start_singleton, end_singleton, cyclic) for path/cycle."""
    if graph.kind == PATH:
        if slots_on_edges:
            return len(graph.edges), True, True, False
        return graph.n, False, False, False
    if graph.kind == CYCLE:
        return (len(graph.edges) if slots_on_edges else graph.n), False, False, True
    raise InvalidGraphError("chain instances need a path or cycle")


def _generic_structures(graph: SimpleGraph, slots_on_edges: bool):
    """CSR structures mapping slots to the derived sums they feed."""
    if slots_on_edges:
        num_slots = len(graph.edges)
        members = graph.incidence()  # per vertex: incident edge slots
    else:
        num_slots = graph.n
        members = [[u, v] for u, v in graph.edges]  # per edge: endpoint slots
    num_derived = len(members)
    by_slot: list[list[int]] = [[] for _ in range(num_slots)]
    comp_at: list[list[int]] = [[] for _ in range(num_slots)]
    for d, slots in enumerate(members):
        for i in slots:
            by_slot[i].append(d)
        if slots:
            comp_at[max(slots)].append(d)
    sd_ptr, sd_ids = [0], []
    comp_ptr, comp_ids = [0], []
    for i in range(num_slots):
        sd_ids.extend(by_slot[i])
        sd_ptr.append(len(sd_ids))
        comp_ids.extend(comp_at[i])
        comp_ptr.append(len(comp_ids))
    return num_slots, num_derived, sd_ptr, sd_ids, comp_ptr, comp_ids


def _solve_assignment(graph: SimpleGraph, spec: GroupSpec, slots_on_edges: bool,
                      slot_cap, slot_floor, dcap, dfloor,
                      prefix: list, budget: int, workers: int):
    """Dispatch to the chain kernel on paths/cycles, generic otherwise."""
    m = spec.order
    add_t, neg_t = op_tables(spec)
    if graph.kind in (PATH, CYCLE):
        s, ss, es, cyc = _chain_shape(graph, slots_on_edges)
        fixed = (m, add_t, s, slot_cap, slot_floor, dcap, dfloor, ss, es, cyc)
        return _split_solve("chain", fixed, list(prefix), (), m, 0, budget,
                            workers, len(prefix) < s)
    s, nd, sd_ptr, sd_ids, comp_ptr, comp_ids = _generic_structures(
        graph, slots_on_edges)
    fixed = (m, add_t, neg_t, s, slot_cap, slot_floor, dcap, dfloor,
             nd, sd_ptr, sd_ids, comp_ptr, comp_ids)
    return _split_solve("generic", fixed, list(prefix), (), m, 0, budget,
                        workers, len(prefix) < s)


def _labels_from_indices(spec: GroupSpec, indices) -> tuple[Element, ...]:
    return tuple(element_at(spec, i) for i in indices)


def _check_searchable(spec: GroupSpec) -> None:
    if spec.order < 2:
        raise InvalidSpecError("searches need a group with at least two elements")


def _certify(verdict: Verdict, what: str) -> None:
    if not verdict.ok:
        raise InternalCheckError(f"search produced an invalid {what}: {verdict.violation}")


# ---------------------------------------------------------------------------
# search entry points


def search_ea_cordial(graph: SimpleGraph, spec: GroupSpec,
                      budget: int | None = DEFAULT_BUDGET, workers: int = 1,
                      prefix: tuple[Element, ...] = ()) -> SearchOutcome:
    """Lex-first edge labeling with equitable edge and vertex-sum classes.

    ``prefix`` pins the labels of the first edges (by storage order); the
    certificate, when Found, is the lexicographically first valid
    extension of it.
    """
    _check_searchable(spec)
    m = spec.order
    scap, sfloor = _equitable_bounds(len(graph.edges), m)
    dcap, dfloor = _equitable_bounds(graph.n, m)
    pfx = [element_index(spec, a) for a in prefix]
    status, payload, nodes = _solve_assignment(
        graph, spec, True, scap, sfloor, dcap, dfloor, pfx,
        _norm_budget(budget), workers)
    if status != FOUND:
        return SearchOutcome(_STATUS_NAME[status], None, nodes)
    labeling = EdgeLabeling(spec, _labels_from_indices(spec, payload[1]))
    _certify(verify_ea_cordial(graph, labeling), "edge labeling")
    return SearchOutcome(STATUS_FOUND, labeling, nodes)


def search_a_cordial(graph: SimpleGraph, spec: GroupSpec,
                     budget: int | None = DEFAULT_BUDGET, workers: int = 1,
                     prefix: tuple[Element, ...] = ()) -> SearchOutcome:
    """Lex-first vertex labeling with equitable vertex and edge-sum classes."""
    _check_searchable(spec)
    m = spec.order
    scap, sfloor = _equitable_bounds(graph.n, m)
    dcap, dfloor = _equitable_bounds(len(graph.edges), m)
    pfx = [element_index(spec, a) for a in prefix]
    status, payload, nodes = _solve_assignment(
        graph, spec, False, scap, sfloor, dcap, dfloor, pfx,
        _norm_budget(budget), workers)
    if status != FOUND:
        return SearchOutcome(_STATUS_NAME[status], None, nodes)
    labeling = VertexLabeling(spec, _labels_from_indices(spec, payload[1]))
    _certify(verify_a_cordial(graph, labeling), "vertex labeling")
    return SearchOutcome(STATUS_FOUND, labeling, nodes)


def _check_tree_order(graph: SimpleGraph, spec: GroupSpec) -> None:
    if graph.kind not in (PATH, TREE):
        raise InvalidGraphError("antimagic searches need a path or tree")
    if graph.n != spec.order:
        raise InvalidSpecError(
            f"tree order {graph.n} must equal group order {spec.order}")


def search_a_antimagic(graph: SimpleGraph, spec: GroupSpec,
                       budget: int | None = DEFAULT_BUDGET,
                       workers: int = 1) -> SearchOutcome:
    """Injective edge labels with pairwise distinct vertex sums, |T| = |A|.

    On a tree of group order this coincides with the equitable search (all
    class bounds collapse to one), so the certificate is still lex-first.
    """
    _check_searchable(spec)
    _check_tree_order(graph, spec)
    outcome = search_ea_cordial(graph, spec, budget, workers)
    if outcome.status != STATUS_FOUND:
        return outcome
    _certify(verify_a_antimagic(graph, outcome.certificate), "antimagic labeling")
    return outcome


def search_a_star_antimagic(graph: SimpleGraph, spec: GroupSpec,
                            budget: int | None = DEFAULT_BUDGET,
                            workers: int = 1) -> SearchOutcome:
    """Bijective nonzero edge labels with pairwise distinct vertex sums."""
    _check_searchable(spec)
    _check_tree_order(graph, spec)
    m = spec.order
    scap = [0] + [1] * (m - 1)
    sfloor = [0] + [1] * (m - 1)
    dcap = [1] * m
    dfloor = [1] * m
    status, payload, nodes = _solve_assignment(
        graph, spec, True, scap, sfloor, dcap, dfloor, [],
        _norm_budget(budget), workers)
    if status != FOUND:
        return SearchOutcome(_STATUS_NAME[status], None, nodes)
    labeling = EdgeLabeling(spec, _labels_from_indices(spec, payload[1]))
    _certify(verify_a_star_antimagic(graph, labeling), "nonzero labeling")
    return SearchOutcome(STATUS_FOUND, labeling, nodes)


def search_rstar_sequence(spec: GroupSpec, budget: int | None = DEFAULT_BUDGET,
                          workers: int = 1) -> SearchOutcome:
    """Lex-first difference-distinct ordering of the nonzero elements with
    a star position (one term the sum of its cyclic neighbours).

    Degenerate below three nonzero elements: NotExists without a search.
    """
    _check_searchable(spec)
    m = spec.order
    if m - 1 < 3:
        return SearchOutcome(STATUS_NOT_EXISTS, None, 0)
    add_t, neg_t = op_tables(spec)
    fixed = (m, add_t, neg_t)
    status, payload, nodes = _split_solve(
        "rstar", fixed, [], (), m, 1, _norm_budget(budget), workers, True)
    if status != FOUND:
        return SearchOutcome(_STATUS_NAME[status], None, nodes)
    seq = _labels_from_indices(spec, payload[1])
    cert = RStarSequence(spec, seq, payload[2])
    return SearchOutcome(STATUS_FOUND, cert, nodes)


def compute_sigma_max(spec: GroupSpec,
                      budget: int | None = None) -> SigmaMaxResult:
    """Exact maximum of distinct cyclic pair sums over all element cycles.

    Exhaustive branch-and-bound with the start pinned at zero and mirror
    orderings skipped; unbounded by default (the instances are tiny).
    """
    _check_searchable(spec)
    add_t, _ = op_tables(spec)
    kern = _kernel.active_backend()
    status, value, cycle, nodes = kern.solve_sigma(
        spec.order, add_t, _norm_budget(budget))
    witness = None
    if cycle is not None:
        witness = HamiltonianCycle(spec, _labels_from_indices(spec, cycle))
        if witness.distinct_sums() != value:
            raise InternalCheckError("witness cycle does not attain the reported value")
    name = STATUS_FOUND if status == FOUND else STATUS_UNKNOWN
    return SigmaMaxResult(name, value, witness, nodes)
