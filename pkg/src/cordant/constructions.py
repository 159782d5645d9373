"""Explicit constructions and closed-form deciders for path labelings.

Everything here either transfers one kind of labeling into another
(cycle to path, vertex side to edge side, big group to quotient view),
builds a labeling outright (block construction over a group with a
cyclic part of order 4m, sequence-based construction for elementary
2-groups), or answers existence questions by formula.  Every
constructor re-checks its own output through the verifiers and raises
InternalCheckError on any mismatch, so a returned labeling is always a
certified one.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import ceil

from .errors import (
    InapplicableGroupError,
    InternalCheckError,
    PreconditionError,
)
from .graphs import CYCLE, SimpleGraph, cycle_graph, path_graph
from .groups import (
    Element,
    GroupSpec,
    add,
    ant_decomposition,
    check_element,
    enumerate_elements,
    group,
    involution_count,
    is_elementary_two,
    isomorphism,
    negate,
)
from .labelings import (
    EdgeLabeling,
    VertexLabeling,
    class_counts,
    induce_vertex_labels,
    verify_a_antimagic,
    verify_a_cordial,
    verify_ea_cordial,
)
from .search import (
    DEFAULT_BUDGET,
    RStarSequence,
    STATUS_FOUND,
    STATUS_NOT_EXISTS,
    STATUS_UNKNOWN,
    search_a_cordial,
    search_ea_cordial,
    search_rstar_sequence,
)

STATUS_IMPOSSIBLE = "Impossible"

__all__ = [
    "AntLayout",
    "ConstructionResult",
    "STATUS_IMPOSSIBLE",
    "ant_layout",
    "construct_ant_path",
    "construct_path_antimagic",
    "construct_path_ek",
    "cycle_to_path",
    "cycle_vertex_to_edge",
    "decide_cycle_zk_cordial",
    "decide_path_a_antimagic",
    "decide_path_ek_cordial",
    "decide_tree_2mod4_obstruction",
    "project_labeling",
    "rotate_to_star",
    "rstar_to_path_antimagic",
    "shift_labeling",
    "sigma_max_formula",
]


@dataclass(frozen=True)
class ConstructionResult:
    """Outcome of a dispatching constructor.

    ``status`` is Found (labeling attached), Impossible (no labeling
    exists, by a decider), or Unknown (a search route ran out of
    budget).  ``route`` names the branch that produced the outcome and
    ``nodes_explored`` counts search work, 0 for formula routes.
    """

    status: str
    labeling: EdgeLabeling | None
    route: str
    nodes_explored: int = 0


# ---------------------------------------------------------------------------
# transfer maps

def cycle_vertex_to_edge(cycle: SimpleGraph, c: VertexLabeling,
                         permissive: bool = False) -> EdgeLabeling:
    """Copy cycle vertex labels onto the edges: edge (v_i, v_i+1) gets c(v_i).

    For an equitable vertex labeling the result is an equitable edge
    labeling with the same class structure shifted one notch: the new
    induced vertex labels are the old induced edge labels.  Requires the
    input to pass the vertex-side verifier unless ``permissive``.
    """
    if cycle.kind != CYCLE:
        raise PreconditionError("vertex-to-edge transfer is defined on cycles")
    if len(c.labels) != cycle.n:
        raise PreconditionError("vertex labeling does not fit the cycle")
    if not permissive:
        verdict = verify_a_cordial(cycle, c)
        if not verdict.ok:
            raise PreconditionError(
                f"input labeling is not equitable ({verdict.violation})")
    # edge i of a cycle is (i, i+1 mod n), so the label list carries over
    return EdgeLabeling(c.group, c.labels)


def shift_labeling(f: EdgeLabeling, g: Element) -> EdgeLabeling:
    """Subtract the constant ``g`` from every edge label."""
    check_element(f.group, g)
    neg = negate(f.group, g)
    return EdgeLabeling(f.group, tuple(add(f.group, a, neg) for a in f.labels))


def cycle_to_path(cycle: SimpleGraph, f: EdgeLabeling
                  ) -> tuple[SimpleGraph, EdgeLabeling]:
    """Open an equitably edge-labeled cycle into an equitably labeled path.

    Shifts all labels by the first element whose class is full (count
    equal to ceil(n/|A|)), deletes the first edge now labeled zero, and
    renumbers vertices starting just past the deleted edge.  Deleting a
    zero edge changes no vertex sum, and the shrunken zero class stays
    within the equitable band, so the result verifies again.
    """
    if cycle.kind != CYCLE:
        raise PreconditionError("input must be a cycle")
    verdict = verify_ea_cordial(cycle, f)
    if not verdict.ok:
        raise PreconditionError(
            f"cycle labeling is not equitable ({verdict.violation})")
    spec = f.group
    n = cycle.n
    target = ceil(n / spec.order)
    counts = class_counts(spec, f.labels)
    shift = next(g for g in enumerate_elements(spec) if counts[g] == target)
    shifted = shift_labeling(f, shift)
    zero = spec.zero()
    cut = shifted.labels.index(zero)
    path_labels = tuple(shifted.labels[(cut + 1 + j) % n] for j in range(n - 1))
    path = path_graph(n)
    f_path = EdgeLabeling(spec, path_labels)
    out = verify_ea_cordial(path, f_path)
    if not out.ok:
        raise InternalCheckError(
            f"opened cycle lost equitability ({out.violation})")
    return path, f_path


def project_labeling(graph: SimpleGraph, f: EdgeLabeling, keep: int,
                     permissive: bool = False) -> EdgeLabeling:
    """Drop all but the first ``keep`` coordinates of every edge label.

    Coordinate dropping is a homomorphism, so induced vertex labels
    project the same way.  On a tree whose order equals the group order
    this keeps both count families equitable; that case is enforced
    unless ``permissive``, and the output is re-verified.
    """
    spec = f.group
    if not 0 <= keep <= spec.rank:
        raise PreconditionError("keep must select a prefix of the factors")
    sub = GroupSpec(spec.factors[:keep])
    if not permissive:
        if len(graph.edges) != graph.n - 1 or not graph.is_connected():
            raise PreconditionError("projection guarantee needs a tree")
        if graph.n != spec.order:
            raise PreconditionError("projection guarantee needs order |A|")
        verdict = verify_ea_cordial(graph, f)
        if not verdict.ok:
            raise PreconditionError(
                f"input labeling is not equitable ({verdict.violation})")
    out = EdgeLabeling(sub, tuple(a[:keep] for a in f.labels))
    if not permissive:
        verdict = verify_ea_cordial(graph, out)
        if not verdict.ok:
            raise InternalCheckError(
                f"projection lost equitability ({verdict.violation})")
    return out


# ---------------------------------------------------------------------------
# closed-form deciders

def decide_cycle_zk_cordial(n: int, k: int) -> bool:
    """Whether the cycle C_n admits an equitable Z_k vertex labeling.

    True exactly when k is odd or n is not an odd multiple of k.
    """
    if n < 3:
        raise PreconditionError("cycles need n >= 3")
    if k < 2:
        raise PreconditionError("modulus must be at least 2")
    q, r = divmod(n, k)
    return k % 2 == 1 or not (r == 0 and q % 2 == 1)


def decide_path_ek_cordial(n: int, k: int) -> bool:
    """Whether the path P_n admits an equitable Z_k edge labeling.

    For n >= 3 this holds exactly when k is not 2 mod 4 or n is not an
    odd multiple of k.  P_2 is a special case: its single edge label is
    both vertex sums, so one class holds every vertex and no k >= 2
    balances.
    """
    if n < 2:
        raise PreconditionError("paths need n >= 2")
    if k < 2:
        raise PreconditionError("modulus must be at least 2")
    if n == 2:
        return False
    q, r = divmod(n, k)
    return k % 4 != 2 or not (r == 0 and q % 2 == 1)


def decide_tree_2mod4_obstruction(n: int, spec) -> bool:
    """Parity obstruction for trees: order 2 mod 4 against |A| 2 mod 4.

    Returns True when the obstruction applies, meaning no tree on n
    vertices has an equitable edge labeling over the group.
    """
    spec = group(spec)
    return n % 4 == 2 and spec.order % 4 == 2


def decide_path_a_antimagic(spec) -> bool:
    """Whether P_|A| has an injective edge labeling with distinct sums."""
    spec = group(spec)
    if spec.order < 2:
        raise PreconditionError("need a group of order at least 2")
    return spec.order % 4 != 2


def sigma_max_formula(spec) -> int:
    """Most distinct neighbour sums any cyclic ordering of A achieves.

    |A| - 1 with exactly one involution, |A| - 2 for elementary
    2-groups of order above 2, |A| otherwise.
    """
    spec = group(spec)
    if spec.order < 2:
        raise PreconditionError("need a group of order at least 2")
    if involution_count(spec) == 1:
        return spec.order - 1
    if is_elementary_two(spec):
        return spec.order - 2
    return spec.order


# ---------------------------------------------------------------------------
# block construction: Z_4m (+ odd part H) in k blocks of 4m vertices

@dataclass(frozen=True)
class AntLayout:
    """Shape data for the block construction on a group of order 4mk.

    ``work`` presents the group as Z_4m then the odd factors; labels
    are computed there and carried to ``spec`` by coordinate
    isomorphism.  ``base_cycle`` is the pinned equitable edge labeling
    of C_k over the odd part (lexicographically first with leading
    zero); it is empty when k == 1 and the odd part plays no role.
    """

    spec: GroupSpec
    work: GroupSpec
    m: int
    k: int
    base_cycle: tuple[Element, ...]

    def __post_init__(self) -> None:
        if self.m < 2:
            raise PreconditionError("block construction needs m > 1")
        if self.k % 2 == 0 or self.k < 1:
            raise PreconditionError("block count must be odd")
        if 4 * self.m * self.k != self.spec.order:
            raise PreconditionError("layout does not cover the group")
        if self.k == 1:
            if self.base_cycle != ():
                raise PreconditionError("single block takes no base cycle")
        else:
            odd = GroupSpec(self.work.factors[1:])
            if len(self.base_cycle) != self.k:
                raise PreconditionError("base cycle must have k edges")
            if self.base_cycle[0] != odd.zero():
                raise PreconditionError("base cycle must start at zero")
            verdict = verify_ea_cordial(
                cycle_graph(self.k), EdgeLabeling(odd, self.base_cycle))
            if not verdict.ok:
                raise PreconditionError("base cycle labeling is not equitable")


def ant_layout(spec) -> AntLayout:
    """Build the block layout for a group with a Z_4m piece, m > 1."""
    spec = group(spec)
    dec = ant_decomposition(spec)
    if dec is None:
        raise InapplicableGroupError(
            f"{spec} has no cyclic direct factor of order 4m with m > 1")
    four_m = dec.four_m
    odd = dec.odd_part
    k = odd.order
    work = GroupSpec((four_m,) + odd.factors)
    if k == 1:
        base: tuple[Element, ...] = ()
    else:
        # k = |H| is odd, so the equitable cycle labeling always exists
        out = search_ea_cordial(cycle_graph(k), odd, budget=None,
                                prefix=(odd.zero(),))
        if out.status != STATUS_FOUND:
            raise InternalCheckError(
                f"no equitable base cycle over {odd} (status {out.status})")
        base = out.certificate.labels
    return AntLayout(spec=spec, work=work, m=four_m // 4, k=k,
                     base_cycle=base)


def _block_coordinate(j: int, i: int, m: int) -> int:
    """Z_4m coordinate of edge i (0-based) inside block j.

    Each block alternates a low run with a high run, skipping one value
    so that exactly one residue is missing overall: 3m in block 0, 0 in
    odd blocks, 2m in later even blocks.
    """
    if j == 0:
        if i % 2 == 0:
            return i // 2
        if i <= 2 * m - 1:
            return 2 * m + (i - 1) // 2
        return 2 * m + 1 + (i - 1) // 2
    if j % 2 == 1:
        if i % 2 == 0:
            return 2 * m + i // 2
        return 1 + (i - 1) // 2
    if i % 2 == 0:
        return i // 2
    return 2 * m + 1 + (i - 1) // 2


def construct_ant_path(spec) -> EdgeLabeling:
    """Equitable edge labeling of P_|A| for groups with a Z_4m piece, m > 1.

    Lays the path out as k blocks of 4m vertices joined by connector
    edges.  Within block j every edge carries the block's base-cycle
    element in the odd coordinates; the Z_4m coordinates run through an
    interleaved low/high pattern that makes consecutive sums sweep all
    residues.  Every vertex sum is distinct, so the output is also an
    injective-distinct-sum labeling whenever anyone asks.
    """
    layout = ant_layout(spec)
    m, k = layout.m, layout.k
    four_m = 4 * m
    zero_odd = GroupSpec(layout.work.factors[1:]).zero()
    labels_work: list[Element] = []
    for j in range(k):
        h = layout.base_cycle[j] if k > 1 else zero_odd
        for i in range(four_m - 1):
            labels_work.append((_block_coordinate(j, i, m),) + h)
        if j < k - 1:
            x = 0 if j % 2 == 0 else 2 * m
            labels_work.append((x,) + layout.base_cycle[j + 1])
    carry = isomorphism(layout.work, layout.spec)
    f = EdgeLabeling(layout.spec, tuple(carry(a) for a in labels_work))
    path = path_graph(layout.spec.order)
    verdict = verify_ea_cordial(path, f)
    if not verdict.ok:
        raise InternalCheckError(
            f"block construction failed verification ({verdict.violation})")
    sums = induce_vertex_labels(path, f).labels
    if len(set(sums)) != len(sums):
        raise InternalCheckError("block construction repeated a vertex sum")
    return f


# ---------------------------------------------------------------------------
# dispatcher: equitable Z_k edge labelings of paths

def construct_path_ek(n: int, k: int, budget: int | None = DEFAULT_BUDGET,
                      workers: int = 1) -> ConstructionResult:
    """Equitable Z_k edge labeling of P_n, or Impossible/Unknown.

    Routes, tried in order: the pinned P_4 base labeling; the block
    construction over Z_k + Z_{n/k} projected back to Z_k (odd
    multiples of k with k divisible by 4); otherwise search an
    equitable cycle labeling and open it into a path.
    """
    if n < 2:
        raise PreconditionError("paths need n >= 2")
    if k < 2:
        raise PreconditionError("modulus must be at least 2")
    if not decide_path_ek_cordial(n, k):
        return ConstructionResult(STATUS_IMPOSSIBLE, None, "decided-impossible")
    spec = GroupSpec((k,))
    if n == 4 and k == 4:
        f = EdgeLabeling(spec, ((0,), (1,), (2,)))
        route = "base-p4"
    elif n % k == 0 and (n // k) % 2 == 1 and k % 4 == 0 and n > 4:
        work = spec if n == k else GroupSpec((k, n // k))
        big = construct_ant_path(work)
        f = project_labeling(path_graph(n), big, 1)
        route = "block-project"
    else:
        out = search_ea_cordial(cycle_graph(n), spec, budget=budget,
                                workers=workers)
        if out.status == STATUS_UNKNOWN:
            return ConstructionResult(STATUS_UNKNOWN, None, "cycle-search",
                                      out.nodes_explored)
        if out.status == STATUS_NOT_EXISTS:
            raise InternalCheckError(
                f"decider promised a cycle labeling for C_{n} over Z_{k}")
        _, f = cycle_to_path(cycle_graph(n), out.certificate)
        return ConstructionResult(STATUS_FOUND, f, "cycle-search",
                                  out.nodes_explored)
    verdict = verify_ea_cordial(path_graph(n), f)
    if not verdict.ok:
        raise InternalCheckError(
            f"route {route} failed verification ({verdict.violation})")
    return ConstructionResult(STATUS_FOUND, f, route)


# ---------------------------------------------------------------------------
# sequence route for elementary 2-groups

def rotate_to_star(rs: RStarSequence) -> RStarSequence:
    """Rotate the sequence so entry 1 is the sum of entries 0 and -1.

    For elementary 2-groups the rotation moving the starred entry to
    the front always works; the scan keeps the operation meaningful for
    any group that happens to admit such a rotation.
    """
    spec = rs.group
    length = len(rs.seq)
    for r in range(length):
        turned = tuple(rs.seq[(j + r) % length] for j in range(length))
        if turned[1] == add(spec, turned[0], turned[-1]):
            for i in range(length):
                neighbours = add(spec, turned[i - 1], turned[(i + 1) % length])
                if neighbours == turned[i]:
                    return RStarSequence(spec, turned, i)
    raise PreconditionError("no rotation places the star at the front")


def rstar_to_path_antimagic(rs: RStarSequence) -> EdgeLabeling:
    """Path labeling from a star-fronted difference sequence.

    Edges get 0 then entries 1..n-2 of the sequence.  In an elementary
    2-group the n vertex sums are 0, the n-2 consecutive-pair sums
    skipping the first, and the last entry; the star condition routes
    the last entry to the one unused pair sum, so the sums are exactly
    the whole group.
    """
    spec = rs.group
    if not is_elementary_two(spec):
        raise PreconditionError("sequence route needs an elementary 2-group")
    if rs.seq[1] != add(spec, rs.seq[0], rs.seq[-1]):
        raise PreconditionError("rotate the sequence to star-front form first")
    labels = (spec.zero(),) + rs.seq[1:]
    path = path_graph(spec.order)
    f = EdgeLabeling(spec, labels)
    verdict = verify_a_antimagic(path, f)
    if not verdict.ok:
        raise InternalCheckError(
            f"sequence route failed verification ({verdict.violation})")
    return f


# ---------------------------------------------------------------------------
# dispatcher: injective distinct-sum labelings of P_|A|

# pinned labeling of P_8 over (Z2)^3, the one elementary 2-group with no
# usable difference sequence; shipped also as demo fixture 4
_E2_CUBE_LABELS: tuple[Element, ...] = (
    (0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1),
    (1, 1, 0), (1, 1, 1), (1, 0, 1),
)


def construct_path_antimagic(spec, budget: int | None = DEFAULT_BUDGET,
                             workers: int = 1) -> ConstructionResult:
    """Injective edge labeling of P_|A| with all vertex sums distinct.

    Impossible exactly when |A| is 2 mod 4.  Otherwise one of: open a
    searched equitable cycle (odd orders); the pinned P_4 labeling
    (Z_4); the block construction (cyclic part of order 4m, m > 1);
    open a searched all-distinct-sums cycle (remaining non-elementary
    groups); the pinned P_8 labeling ((Z2)^3); or the difference
    sequence route (other elementary 2-groups).
    """
    spec = group(spec)
    n = spec.order
    if n < 2:
        raise PreconditionError("need a group of order at least 2")
    if not decide_path_a_antimagic(spec):
        return ConstructionResult(STATUS_IMPOSSIBLE, None, "order-2-mod-4")
    nodes = 0
    if n % 2 == 1:
        out = search_ea_cordial(cycle_graph(n), spec, budget=budget,
                                workers=workers)
        if out.status == STATUS_UNKNOWN:
            return ConstructionResult(STATUS_UNKNOWN, None, "odd-cycle-search",
                                      out.nodes_explored)
        if out.status == STATUS_NOT_EXISTS:
            raise InternalCheckError(
                f"odd-order cycle C_{n} over {spec} must be labelable")
        _, f = cycle_to_path(cycle_graph(n), out.certificate)
        route = "odd-cycle-search"
        nodes = out.nodes_explored
    elif n == 4 and spec.factors == (4,):
        f = EdgeLabeling(spec, ((0,), (1,), (2,)))
        route = "base-p4"
    elif ant_decomposition(spec) is not None:
        f = construct_ant_path(spec)
        route = "block"
    elif not is_elementary_two(spec):
        # noncyclic 2-part and a non-involution element: a cyclic ordering
        # of A with every neighbour sum distinct exists, and with n = |A|
        # the equitable vertex search demands exactly that
        out = search_a_cordial(cycle_graph(n), spec, budget=budget,
                               workers=workers)
        if out.status == STATUS_UNKNOWN:
            return ConstructionResult(STATUS_UNKNOWN, None, "rainbow-cycle",
                                      out.nodes_explored)
        if out.status == STATUS_NOT_EXISTS:
            raise InternalCheckError(
                f"no all-distinct-sums cycle over {spec}; formula says one exists")
        edge_side = cycle_vertex_to_edge(cycle_graph(n), out.certificate)
        _, f = cycle_to_path(cycle_graph(n), edge_side)
        route = "rainbow-cycle"
        nodes = out.nodes_explored
    elif n == 8:
        f = EdgeLabeling(spec, _E2_CUBE_LABELS)
        route = "pinned-cube"
    else:
        out = search_rstar_sequence(spec, budget=budget, workers=workers)
        if out.status == STATUS_UNKNOWN:
            return ConstructionResult(STATUS_UNKNOWN, None, "sequence",
                                      out.nodes_explored)
        if out.status == STATUS_NOT_EXISTS:
            raise InternalCheckError(
                f"no difference sequence over {spec}; one is guaranteed")
        f = rstar_to_path_antimagic(rotate_to_star(out.certificate))
        route = "sequence"
        nodes = out.nodes_explored
    verdict = verify_a_antimagic(path_graph(n), f)
    if not verdict.ok:
        raise InternalCheckError(
            f"route {route} failed verification ({verdict.violation})")
    return ConstructionResult(STATUS_FOUND, f, route, nodes)
