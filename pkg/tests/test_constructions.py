"""Deciders, transfer operations, block construction, and dispatchers."""

import pytest

from cordant import (
    induce_edge_labels,
    ConstructionResult,
    EdgeLabeling,
    GroupSpec,
    InapplicableGroupError,
    InternalCheckError,
    PreconditionError,
    STATUS_FOUND,
    STATUS_IMPOSSIBLE,
    STATUS_NOT_EXISTS,
    STATUS_UNKNOWN,
    VertexLabeling,
    abelian_groups_of_order,
    ant_layout,
    construct_ant_path,
    construct_path_antimagic,
    construct_path_ek,
    cycle_graph,
    cycle_to_path,
    cycle_vertex_to_edge,
    decide_cycle_zk_cordial,
    decide_path_a_antimagic,
    decide_path_ek_cordial,
    decide_tree_2mod4_obstruction,
    induce_vertex_labels,
    load_demo_certificate,
    path_graph,
    project_labeling,
    rotate_to_star,
    rstar_to_path_antimagic,
    search_a_antimagic,
    search_rstar_sequence,
    shift_labeling,
    sigma_max_formula,
    verify_a_antimagic,
    verify_ea_cordial,
)

Z3 = GroupSpec((3,))


# ---------------------------------------------------------------------------
# closed-form deciders

def test_cycle_decider():
    assert decide_cycle_zk_cordial(9, 3)
    assert decide_cycle_zk_cordial(5, 5)
    assert decide_cycle_zk_cordial(10, 5)
    assert decide_cycle_zk_cordial(12, 2)
    assert not decide_cycle_zk_cordial(6, 2)
    assert not decide_cycle_zk_cordial(12, 4)
    assert not decide_cycle_zk_cordial(12, 12)
    with pytest.raises(PreconditionError):
        decide_cycle_zk_cordial(2, 3)
    with pytest.raises(PreconditionError):
        decide_cycle_zk_cordial(5, 1)


def test_path_decider():
    assert not decide_path_ek_cordial(2, 2)
    assert not decide_path_ek_cordial(2, 5)
    assert decide_path_ek_cordial(9, 3)
    assert decide_path_ek_cordial(3, 6)
    assert decide_path_ek_cordial(12, 6)
    assert decide_path_ek_cordial(12, 2)
    assert decide_path_ek_cordial(17, 6)
    assert not decide_path_ek_cordial(6, 6)
    assert not decide_path_ek_cordial(18, 6)
    assert not decide_path_ek_cordial(10, 2)


def test_tree_obstruction_decider():
    assert decide_tree_2mod4_obstruction(6, GroupSpec((6,)))
    assert decide_tree_2mod4_obstruction(10, GroupSpec((2,)))
    assert not decide_tree_2mod4_obstruction(8, GroupSpec((8,)))
    assert not decide_tree_2mod4_obstruction(6, GroupSpec((2, 2, 3)))
    assert not decide_tree_2mod4_obstruction(7, GroupSpec((6,)))


def test_antimagic_path_decider_matches_search_up_to_order_8():
    for n in range(2, 9):
        for spec in abelian_groups_of_order(n):
            decided = decide_path_a_antimagic(spec)
            assert decided == (n % 4 != 2)
            searched = search_a_antimagic(path_graph(n), spec, budget=None)
            assert decided == (searched.status == STATUS_FOUND), spec


def test_sigma_max_formula_branches():
    assert sigma_max_formula(GroupSpec((2,))) == 1      # one involution
    assert sigma_max_formula(GroupSpec((6,))) == 5
    assert sigma_max_formula(GroupSpec((8,))) == 7
    assert sigma_max_formula(GroupSpec((2, 2))) == 2    # involutions only
    assert sigma_max_formula(GroupSpec((2, 2, 2, 2))) == 14
    assert sigma_max_formula(GroupSpec((3,))) == 3      # no involution
    assert sigma_max_formula(GroupSpec((2, 4))) == 8    # three involutions
    with pytest.raises(PreconditionError):
        sigma_max_formula(GroupSpec(()))


# ---------------------------------------------------------------------------
# transfer operations

def test_cycle_vertex_to_edge_carries_labels():
    c = VertexLabeling(Z3, ((0,), (1,), (2,)))
    f = cycle_vertex_to_edge(cycle_graph(3), c)
    assert f.labels == c.labels
    # new induced vertex-label multiset equals the old induced edge-label one
    new_sums = induce_vertex_labels(cycle_graph(3), f).labels
    old_sums = induce_edge_labels(cycle_graph(3), c).labels
    assert sorted(new_sums) == sorted(old_sums)


def test_cycle_vertex_to_edge_preconditions():
    c = VertexLabeling(Z3, ((0,), (0,), (0,)))
    with pytest.raises(PreconditionError):
        cycle_vertex_to_edge(cycle_graph(3), c)
    assert cycle_vertex_to_edge(cycle_graph(3), c, permissive=True).labels
    with pytest.raises(PreconditionError):
        cycle_vertex_to_edge(path_graph(3), VertexLabeling(Z3, ((0,), (1,), (2,))))


def test_shift_labeling_subtracts_constant():
    f = EdgeLabeling(GroupSpec((4,)), ((0,), (1,), (3,)))
    assert shift_labeling(f, (1,)).labels == ((3,), (0,), (2,))


def test_cycle_to_path_examples():
    path, f = cycle_to_path(cycle_graph(3), EdgeLabeling(Z3, ((0,), (1,), (2,))))
    assert f.labels == ((1,), (2,))
    assert induce_vertex_labels(path, f).labels == ((1,), (0,), (2,))
    z2 = GroupSpec((2,))
    path, f = cycle_to_path(cycle_graph(4), EdgeLabeling(z2, ((0,), (0,), (1,), (1,))))
    assert f.labels == ((0,), (1,), (1,))
    v = verify_ea_cordial(path, f)
    assert v.ok
    assert v.edge_class_counts == {(0,): 1, (1,): 2}
    assert v.vertex_class_counts == {(0,): 2, (1,): 2}


def test_cycle_to_path_rejects_inequitable_input():
    with pytest.raises(PreconditionError):
        cycle_to_path(cycle_graph(3), EdgeLabeling(Z3, ((0,), (0,), (0,))))


def test_projection_examples():
    fig2 = load_demo_certificate(2)
    f = EdgeLabeling(fig2.group, fig2.edge_labels)
    small = project_labeling(path_graph(24), f, 1)
    assert small.group == GroupSpec((8,))
    assert verify_ea_cordial(path_graph(24), small).ok
    fig4 = load_demo_certificate(4)
    f = EdgeLabeling(fig4.group, fig4.edge_labels)
    small = project_labeling(path_graph(8), f, 2)
    assert small.group == GroupSpec((2, 2))
    assert verify_ea_cordial(path_graph(8), small).ok


def test_projection_preconditions():
    fig4 = load_demo_certificate(4)
    f = EdgeLabeling(fig4.group, fig4.edge_labels)
    with pytest.raises(PreconditionError):
        project_labeling(path_graph(8), f, 5)
    with pytest.raises(PreconditionError):
        project_labeling(cycle_graph(8), f, 1)
    bad = EdgeLabeling(GroupSpec((2, 2, 2)), ((0, 0, 0),) * 7)
    with pytest.raises(PreconditionError):
        project_labeling(path_graph(8), bad, 1)
    assert project_labeling(cycle_graph(8), f, 1, permissive=True).group == GroupSpec((2,))


# ---------------------------------------------------------------------------
# block construction

def test_ant_layout_small_cases():
    layout = ant_layout(GroupSpec((8, 3)))
    assert (layout.m, layout.k) == (2, 3)
    assert layout.base_cycle == ((0,), (1,), (2,))
    layout = ant_layout(GroupSpec((24,)))
    assert (layout.m, layout.k) == (6, 1)
    assert layout.base_cycle == ()


def test_ant_layout_rejects_inapplicable_groups():
    for fac in ((2, 2), (4,), (2, 3), (15,)):
        with pytest.raises(InapplicableGroupError):
            ant_layout(GroupSpec(fac))


FIG2_LABELS = (
    (0, 0), (4, 0), (1, 0), (5, 0), (2, 0), (7, 0), (3, 0),
    (0, 1), (4, 1), (1, 1), (5, 1), (2, 1), (6, 1), (3, 1), (7, 1),
    (4, 2), (0, 2), (5, 2), (1, 2), (6, 2), (2, 2), (7, 2), (3, 2),
)

FIG3_LABELS = (
    (0,), (12,), (1,), (13,), (2,), (14,), (3,), (15,), (4,), (16,), (5,),
    (17,), (6,), (19,), (7,), (20,), (8,), (21,), (9,), (22,), (10,), (23,), (11,),
)


def test_block_construction_frozen_outputs():
    f = construct_ant_path(GroupSpec((8, 3)))
    assert f.labels == FIG2_LABELS
    f = construct_ant_path(GroupSpec((24,)))
    assert f.labels == FIG3_LABELS


def test_block_construction_verifies_with_distinct_sums():
    for fac in ((8, 3), (24,), (4, 3), (16,), (12,), (4, 3, 3)):
        spec = GroupSpec(fac)
        f = construct_ant_path(spec)
        path = path_graph(spec.order)
        assert verify_ea_cordial(path, f).ok
        sums = induce_vertex_labels(path, f).labels
        assert len(set(sums)) == spec.order


# ---------------------------------------------------------------------------
# equitable path dispatcher

def test_path_ek_dispatcher_routes_and_counts():
    cases = {
        (4, 4): ("base-p4", 0),
        (12, 12): ("block-project", 0),
        (9, 3): ("cycle-search", 17),
        (18, 5): ("cycle-search", 50),
        (3, 6): ("cycle-search", 5),
        (12, 2): ("cycle-search", 43),
        (17, 6): ("cycle-search", 57),
    }
    for (n, k), (route, nodes) in cases.items():
        res = construct_path_ek(n, k)
        assert res.status == STATUS_FOUND, (n, k)
        assert (res.route, res.nodes_explored) == (route, nodes), (n, k)
        assert verify_ea_cordial(path_graph(n), res.labeling).ok


def test_path_ek_dispatcher_block_route_at_36():
    res = construct_path_ek(36, 12)
    assert res.status == STATUS_FOUND and res.route == "block-project"
    assert res.labeling.group == GroupSpec((12,))
    assert verify_ea_cordial(path_graph(36), res.labeling).ok


def test_path_ek_dispatcher_impossible_and_unknown():
    for n, k in ((6, 6), (18, 6), (10, 2), (2, 5)):
        res = construct_path_ek(n, k)
        assert res.status == STATUS_IMPOSSIBLE
        assert res.route == "decided-impossible" and res.labeling is None
    res = construct_path_ek(18, 5, budget=10)
    assert res.status == STATUS_UNKNOWN and res.route == "cycle-search"
    with pytest.raises(PreconditionError):
        construct_path_ek(1, 3)
    with pytest.raises(PreconditionError):
        construct_path_ek(5, 1)


# ---------------------------------------------------------------------------
# difference-sequence route

def test_rotate_to_star_fronts_the_star():
    rs = search_rstar_sequence(GroupSpec((2, 2, 2, 2))).certificate
    turned = rotate_to_star(rs)
    spec = turned.group
    assert sorted(turned.seq) == sorted(rs.seq)
    first, last = turned.seq[0], turned.seq[-1]
    assert turned.seq[1] == tuple((a + b) % 2 for a, b in zip(first, last))


def test_rstar_path_labels_and_verification():
    rs = rotate_to_star(search_rstar_sequence(GroupSpec((2, 2))).certificate)
    f = rstar_to_path_antimagic(rs)
    assert f.labels[0] == (0, 0)
    assert f.labels[1:] == rs.seq[1:]
    assert verify_a_antimagic(path_graph(4), f).ok


def test_rstar_path_rejects_non_elementary_groups():
    rs = rotate_to_star(search_rstar_sequence(GroupSpec((7,))).certificate)
    with pytest.raises(PreconditionError):
        rstar_to_path_antimagic(rs)


# ---------------------------------------------------------------------------
# antimagic path dispatcher

DISPATCH_CASES = {
    (4,): ("base-p4", 0),
    (2, 2): ("sequence", 5),
    (5,): ("odd-cycle-search", 14),
    (7,): ("odd-cycle-search", 27),
    (2, 4): ("rainbow-cycle", 67),
    (8,): ("block", 0),
    (2, 2, 2): ("pinned-cube", 0),
    (9,): ("odd-cycle-search", 44),
    (3, 3): ("odd-cycle-search", 44),
    (11,): ("odd-cycle-search", 65),
    (4, 3): ("block", 0),
    (2, 2, 3): ("rainbow-cycle", 2657),
    (13,): ("odd-cycle-search", 90),
    (15,): ("odd-cycle-search", 119),
    (16,): ("block", 0),
    (2, 8): ("rainbow-cycle", 97127),
    (4, 4): ("rainbow-cycle", 1463),
    (2, 2, 4): ("rainbow-cycle", 121863),
    (2, 2, 2, 2): ("sequence", 161219),
}


def test_antimagic_path_dispatcher_routes_and_counts():
    for fac, (route, nodes) in DISPATCH_CASES.items():
        spec = GroupSpec(fac)
        res = construct_path_antimagic(spec)
        assert res.status == STATUS_FOUND, fac
        assert (res.route, res.nodes_explored) == (route, nodes), fac
        assert verify_a_antimagic(path_graph(spec.order), res.labeling).ok


def test_antimagic_path_dispatcher_impossible_orders():
    for fac in ((2,), (6,), (2, 3), (2, 5), (2, 7)):
        res = construct_path_antimagic(GroupSpec(fac))
        assert res.status == STATUS_IMPOSSIBLE
        assert res.route == "order-2-mod-4" and res.labeling is None


def test_antimagic_path_dispatcher_budget_unknown():
    res = construct_path_antimagic(GroupSpec((2, 2, 2, 2)), budget=100)
    assert res.status == STATUS_UNKNOWN and res.route == "sequence"
    assert 0 < res.nodes_explored <= 100


def test_construction_results_are_frozen():
    res = construct_path_antimagic(GroupSpec((4,)))
    assert isinstance(res, ConstructionResult)
    with pytest.raises(AttributeError):
        res.route = "other"
