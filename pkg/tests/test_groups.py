"""Group core: canonical forms, arithmetic, decompositions, isomorphisms."""

import pytest

from cordant import (
    GroupSpec,
    InapplicableGroupError,
    InvalidElementError,
    InvalidSpecError,
    abelian_groups_of_order,
    add,
    ant_decomposition,
    canonicalize_spec,
    element_at,
    element_index,
    enumerate_elements,
    format_group,
    group,
    involution_count,
    is_elementary_two,
    isomorphism,
    negate,
    parse_group,
    sylow_split,
)


# ---------------------------------------------------------------------------
# canonical form

def test_canonicalize_merges_coprime_factors():
    assert canonicalize_spec([24]).factors == (8, 3)


def test_canonicalize_sorts_prime_power_factors():
    assert canonicalize_spec([4, 2, 3]).factors == (2, 4, 3)


def test_canonicalize_splits_composite_factors():
    assert canonicalize_spec([6, 6]).factors == (2, 2, 3, 3)


def test_canonicalize_idempotent_samples():
    for fac in [(24,), (4, 2, 3), (6, 6), (2,), (12, 10)]:
        once = canonicalize_spec(fac)
        assert canonicalize_spec(once) == once


def test_trivial_and_invalid_specs():
    assert GroupSpec(()).order == 1
    assert GroupSpec(()).is_trivial
    with pytest.raises(InvalidSpecError):
        GroupSpec((1,))
    with pytest.raises(InvalidSpecError):
        GroupSpec((0, 3))
    with pytest.raises(InvalidSpecError):
        GroupSpec((-2,))


# ---------------------------------------------------------------------------
# arithmetic

def test_add_and_negate_componentwise():
    z8z3 = GroupSpec((8, 3))
    assert add(z8z3, (7, 2), (1, 1)) == (0, 0)
    assert negate(z8z3, (3, 1)) == (5, 2)


def test_element_validation():
    z6 = GroupSpec((6,))
    with pytest.raises(InvalidElementError):
        add(z6, (6,), (0,))
    with pytest.raises(InvalidElementError):
        add(z6, (1, 0), (0,))


def test_enumeration_order_last_coordinate_fastest():
    z2z2 = GroupSpec((2, 2))
    assert enumerate_elements(z2z2) == [(0, 0), (0, 1), (1, 0), (1, 1)]


def test_element_index_round_trip():
    spec = GroupSpec((4, 3))
    for idx, a in enumerate(enumerate_elements(spec)):
        assert element_at(spec, idx) == a
        assert element_index(spec, a) == idx


# ---------------------------------------------------------------------------
# structure queries

def test_involution_counts():
    assert involution_count(GroupSpec((4,))) == 1
    assert involution_count(GroupSpec((2, 2, 2))) == 7
    assert involution_count(GroupSpec((15,))) == 0


def test_involution_count_matches_enumeration_up_to_64():
    for n in range(1, 65):
        for spec in abelian_groups_of_order(n):
            zero = spec.zero()
            brute = sum(
                1
                for a in enumerate_elements(spec)
                if a != zero and add(spec, a, a) == zero
            )
            assert involution_count(spec) == brute, spec


def test_is_elementary_two():
    assert is_elementary_two(GroupSpec((2, 2, 2)))
    assert is_elementary_two(GroupSpec((2,)))
    assert not is_elementary_two(GroupSpec((4, 2)))
    assert not is_elementary_two(GroupSpec((3,)))


def test_sylow_split_examples():
    two, odd = sylow_split(GroupSpec((24,)))
    assert two.factors == (8,) and odd.factors == (3,)
    two, odd = sylow_split(GroupSpec((15,)))
    assert two.is_trivial and odd.factors == (3, 5)
    two, odd = sylow_split(GroupSpec((2, 4, 9)))
    assert two.factors == (2, 4) and odd.factors == (9,)


def test_sylow_concatenation_is_isomorphic_to_input():
    for n in range(1, 49):
        for spec in abelian_groups_of_order(n):
            two, odd = sylow_split(spec)
            joined = canonicalize_spec(tuple(two.factors) + tuple(odd.factors))
            assert joined == canonicalize_spec(spec)


# ---------------------------------------------------------------------------
# block decomposition: cyclic factor of order 4m (m > 1) plus odd rest

def test_ant_decomposition_cases():
    cases = {
        (8, 3): (8, (3,)),
        (24,): (24, ()),
        (4,): None,
        (4, 3): (12, ()),
        (2, 2, 3): None,
        (16, 3): (16, (3,)),
        (4, 3, 3): (12, (3,)),
        (12,): (12, ()),
        (4, 9): (36, ()),
        (24, 5): (8, (3, 5)),
        (8,): (8, ()),
        (2,): None,
        (4, 2): None,
        (4, 3, 5): (60, ()),
    }
    for fac, want in cases.items():
        got = ant_decomposition(GroupSpec(fac))
        norm = None if got is None else (got.four_m, got.odd_part.factors)
        assert norm == want, fac


def test_ant_decomposition_structural_invariants():
    for n in range(2, 49):
        for spec in abelian_groups_of_order(n):
            dec = ant_decomposition(spec)
            if dec is None:
                continue
            assert dec.four_m % 4 == 0 and dec.four_m > 4
            assert dec.odd_part.order % 2 == 1
            assert dec.four_m * dec.odd_part.order == spec.order
            joined = canonicalize_spec(
                (dec.four_m,) + tuple(dec.odd_part.factors))
            assert joined == canonicalize_spec(spec)


# ---------------------------------------------------------------------------
# isomorphisms

def test_isomorphism_is_bijective_homomorphism():
    for src_fac, dst_fac in [((24,), (8, 3)), ((12,), (4, 3)),
                             ((4, 3, 3), (12, 3))]:
        src, dst = GroupSpec(src_fac), GroupSpec(dst_fac)
        phi = isomorphism(src, dst)
        image = [phi(a) for a in enumerate_elements(src)]
        assert sorted(image) == sorted(enumerate_elements(dst))
        for a in enumerate_elements(src):
            for b in enumerate_elements(src)[:6]:
                assert phi(add(src, a, b)) == add(dst, phi(a), phi(b))


def test_isomorphism_rejects_nonisomorphic_pairs():
    with pytest.raises(InvalidSpecError):
        isomorphism(GroupSpec((4,)), GroupSpec((2, 2)))


# ---------------------------------------------------------------------------
# enumeration of groups and text syntax

def test_abelian_groups_of_order_counts():
    assert [g.factors for g in abelian_groups_of_order(1)] == [()]
    assert len(abelian_groups_of_order(8)) == 3
    assert len(abelian_groups_of_order(16)) == 5
    assert len(abelian_groups_of_order(36)) == 4
    for spec in abelian_groups_of_order(24):
        assert spec == canonicalize_spec(spec)


def test_parse_and_format_round_trip():
    assert parse_group("Z8xZ3").factors == (8, 3)
    assert parse_group("z2Xz2").factors == (2, 2)
    assert parse_group("[8, 3]").factors == (8, 3)
    spec = GroupSpec((2, 4, 3))
    assert parse_group(format_group(spec)) == spec
    with pytest.raises(InvalidSpecError):
        parse_group("Zfour")


def test_group_constructor_accepts_spec_or_factors():
    assert group((8, 3)) == GroupSpec((8, 3))
    assert group(GroupSpec((8, 3))) == GroupSpec((8, 3))


def test_rank_counts_factors():
    assert GroupSpec((8, 3)).rank == 2
    assert GroupSpec(()).rank == 0
