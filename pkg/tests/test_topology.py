"""Topology axioms, generation, atoms, counting, and the size-up embedding."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from topcube import (
    Family,
    GroundSet,
    PointSet,
    Topology,
    all_topologies,
    are_disjoint,
    atoms_of,
    count_topologies,
    embedding_check,
    enumerate_families,
    inject_topology,
    is_bounded_sublattice,
    is_topology,
    top_generate,
)
from topcube.oracles import (
    count_preorders,
    count_topologies_by_filter,
    family_is_topology,
    generated_topology,
    powerset,
)

U1 = GroundSet(1)
U2 = GroundSet(2)
U3 = GroundSet(3)


def fam(universe, *masks):
    return Family.from_masks(universe, masks)


def as_frozensets(universe, family):
    return frozenset(frozenset(s.points()) for s in family.members())


# ----------------------------------------------------------------- axioms


def test_point_topology():
    assert is_topology(fam(U2, 0, 1, 3))


def test_missing_empty_set():
    assert not is_topology(fam(U2, 1, 3))


def test_powerset_is_discrete():
    assert is_topology(Family(U2, 15))
    assert Topology.discrete(U2).family.word == 15


def test_topology_wrapper_validates():
    with pytest.raises(ValueError):
        Topology(fam(U3, 0, 1, 2, 7))  # {0} | {1} = {0,1} missing
    # over two points the same pick happens to be all of P(X), hence fine
    assert Topology(fam(U2, 0, 1, 2, 3)) == Topology.discrete(U2)


def test_topology_json_round_trip():
    t = top_generate(U3, [PointSet.from_points(U3, [0])])
    data = t.to_json()
    assert data["topology"] is True
    assert Topology.from_json(data) == t
    with pytest.raises(ValueError):
        Topology.from_json(t.family.to_json())


@given(st.integers(0, 2**16 - 1))
def test_axioms_agree_with_reference(word):
    f = Family(U2, word % 16)
    assert is_topology(f) == family_is_topology(2, as_frozensets(U2, f))


# ------------------------------------------------------------- generation


def test_generate_from_nothing_is_trivial():
    assert top_generate(U2, []).family.word == (1 | (1 << 3))


def test_generate_single_point_open():
    t = top_generate(U2, [PointSet.from_points(U2, [0])])
    assert sorted(t.open_masks()) == [0, 1, 3]


def test_generate_all_singletons_is_discrete():
    subbase = [PointSet.from_points(U3, [i]) for i in range(3)]
    assert top_generate(U3, subbase) == Topology.discrete(U3)


def test_generate_idempotent():
    t = top_generate(U3, [0b011, 0b101])
    assert top_generate(U3, t.open_masks()) == t


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(0, 7), max_size=4))
def test_generate_agrees_with_reference(subbase):
    t = top_generate(U3, subbase)
    sets = [frozenset(p for p in range(3) if (m >> p) & 1) for m in subbase]
    assert as_frozensets(U3, t.family) == generated_topology(3, sets)


# ------------------------------------------------------------------ atoms


def test_atom_counts():
    assert len(atoms_of(U2)) == 2
    assert len(atoms_of(U3)) == 6
    assert all(len(t) == 3 for t in atoms_of(U3))


def test_atoms_are_pairwise_disjoint():
    atoms = list(atoms_of(U3))
    for i, s in enumerate(atoms):
        for t in atoms[i + 1:]:
            assert are_disjoint(s, t)


def test_atoms_need_two_points():
    with pytest.raises(ValueError):
        atoms_of(U1)


# ------------------------------------------------------------ disjointness


def test_distinct_point_topologies_are_disjoint():
    s = Topology(fam(U2, 0, 1, 3))
    t = Topology(fam(U2, 0, 2, 3))
    assert are_disjoint(s, t)
    assert not are_disjoint(s, s)


def test_disjoint_chain_pair():
    s = Topology(fam(U3, 0, 1, 3, 7))
    t = Topology(fam(U3, 0, 4, 6, 7))
    assert are_disjoint(s, t)


def test_trivial_is_disjoint_from_itself():
    i = Topology.trivial(U3)
    assert are_disjoint(i, i)


# --------------------------------------------------------------- counting


def test_frozen_counts():
    assert [count_topologies(GroundSet(n)) for n in (1, 2, 3, 4)] == [1, 4, 29, 355]


def test_counts_match_filter_oracle():
    for n in (1, 2, 3):
        assert count_topologies(GroundSet(n)) == count_topologies_by_filter(n)


def test_counts_match_preorder_oracle():
    for n in (1, 2, 3):
        assert count_topologies(GroundSet(n)) == count_preorders(n)


def test_counting_capped():
    with pytest.raises(ValueError):
        count_topologies(GroundSet(5))


def test_all_topologies_lists_them():
    tops = all_topologies(U2)
    assert len(tops) == 4
    assert Topology.trivial(U2) in tops and Topology.discrete(U2) in tops


# ---------------------------------------------------------------- embedding


def test_inject_point_map_example():
    img = inject_topology(Topology.trivial(U1), U2, mapping=[1])
    assert img == Topology.discrete(U2)


def test_inject_identity_keeps_discrete():
    assert inject_topology(Topology.discrete(U2), U2) == Topology.discrete(U2)


def test_inject_image_is_topology():
    for t in all_topologies(U2):
        img = inject_topology(t, U3)
        assert is_topology(img.family)


def test_inject_is_injective():
    images = {inject_topology(t, U3) for t in all_topologies(U2)}
    assert len(images) == 4


def test_inject_rejects_bad_maps():
    with pytest.raises(ValueError):
        inject_topology(Topology.discrete(U2), U1)
    with pytest.raises(ValueError):
        inject_topology(Topology.discrete(U2), U3, mapping=[1, 1])
    with pytest.raises(ValueError):
        inject_topology(Topology.discrete(U2), U3, mapping=[0, 3])


def test_embedding_check_small():
    assert embedding_check(U2).passed
    report = embedding_check(U3)
    assert report.passed
    assert "29 topologies" in report.notes[0]


# ------------------------------------------------------- bounded sublattices


def test_topologies_are_bounded_sublattices():
    for t in all_topologies(U3):
        assert is_bounded_sublattice(t.family)


def test_join_escape_is_not_bounded():
    assert not is_bounded_sublattice(fam(U3, 0, 1, 2, 7))


def test_bounds_and_pairwise_closure_suffice():
    assert is_bounded_sublattice(fam(U3, 0, 1, 3, 7))


def test_bounded_sublattice_is_topology_extensionally():
    # finiteness collapses arbitrary unions to pairwise ones, so the two
    # predicates coincide on every family of the sweep
    for universe in (U2, U3):
        for f in enumerate_families(universe):
            assert is_bounded_sublattice(f) == is_topology(f)
