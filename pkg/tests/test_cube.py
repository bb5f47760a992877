"""Ground sets, point sets, and families as points of the big lattice."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from topcube import Family, GroundSet, PointSet, enumerate_families
from topcube import family_join, family_leq, family_meet

U2 = GroundSet(2)
U3 = GroundSet(3)

words3 = st.integers(min_value=0, max_value=(1 << 8) - 1)


def fam(universe, word):
    return Family(universe, word)


def test_ground_set_validation():
    with pytest.raises(ValueError):
        GroundSet(0)
    with pytest.raises(ValueError):
        GroundSet(6)
    assert GroundSet(5).num_subsets == 32
    with pytest.raises(ValueError):
        GroundSet(5).require_sweepable()


def test_point_set_basics():
    a = PointSet.from_points(U3, [0, 2])
    b = PointSet.from_points(U3, [1, 2])
    assert len(a) == 2 and 2 in a and 1 not in a
    assert (a & b).points() == [2]
    assert (a | b).points() == [0, 1, 2]
    assert a.complement().points() == [1]
    assert repr(a) == "{0, 2}"
    assert not a <= b
    assert PointSet.from_points(U3, []).is_empty
    assert PointSet.from_points(U3, [0, 1, 2]).is_full
    with pytest.raises(ValueError):
        PointSet.from_points(U3, [3])


def test_family_membership():
    f = Family.from_masks(U2, [0b00, 0b11])
    assert f.contains_mask(0) and f.contains_mask(3)
    assert not f.contains_mask(1)
    assert PointSet.from_points(U2, [0, 1]) in f
    assert len(f) == 2
    assert f.member_masks() == [0, 3]


def test_family_from_pointsets():
    f = Family.from_pointsets(U2, [PointSet.from_points(U2, [0])])
    assert f.member_masks() == [1]


@given(words3, words3)
def test_meet_join_are_intersection_union(a, b):
    fa, fb = fam(U3, a), fam(U3, b)
    assert set(family_meet(fa, fb).member_masks()) == set(fa.member_masks()) & set(
        fb.member_masks()
    )
    assert set(family_join(fa, fb).member_masks()) == set(fa.member_masks()) | set(
        fb.member_masks()
    )


@given(words3, words3)
def test_leq_meet_join_agree(a, b):
    fa, fb = fam(U3, a), fam(U3, b)
    assert family_leq(fa, fb) == (family_meet(fa, fb) == fa)
    assert family_leq(fa, fb) == (family_join(fa, fb) == fb)
    assert (fa <= fb) == family_leq(fa, fb)


@given(words3, words3, words3)
def test_lattice_laws(a, b, c):
    fa, fb, fc = fam(U3, a), fam(U3, b), fam(U3, c)
    assert (fa & fb) == (fb & fa)
    assert (fa | (fb | fc)) == ((fa | fb) | fc)
    assert (fa & (fa | fb)) == fa
    assert (fa | (fa & fb)) == fa
    # distributivity, since members are just sets
    assert (fa & (fb | fc)) == ((fa & fb) | (fa & fc))


def test_mixed_universe_rejected():
    with pytest.raises(ValueError):
        family_meet(fam(U2, 1), fam(U3, 1))


def test_enumerate_families_small():
    fams = list(enumerate_families(U2))
    assert len(fams) == 1 << 4
    assert len(set(fams)) == len(fams)
    with pytest.raises(ValueError):
        list(enumerate_families(GroundSet(5)))


def test_with_without():
    f = fam(U2, 0)
    g = f.with_mask(2)
    assert g.member_masks() == [2]
    assert g.without_mask(2) == f


def test_family_json_roundtrip():
    f = Family.from_masks(U3, [0, 0b101, 0b111])
    data = f.to_json()
    assert data == {"n": 3, "sets": [[], [0, 2], [0, 1, 2]]}
    assert Family.from_json(data) == f


def test_family_json_rejections():
    with pytest.raises(ValueError):
        Family.from_json({"n": 2, "sets": [[0], [0]]})  # duplicate member
    with pytest.raises(ValueError):
        Family.from_json({"n": 2, "sets": [[2]]})  # point out of range
    with pytest.raises(ValueError):
        Family.from_json({"n": 2, "sets": [[1, 0]]})  # not sorted
    with pytest.raises(ValueError):
        Family.from_json({"n": 2, "sets": [[0, 0]]})  # repeated point
    with pytest.raises(ValueError):
        Family.from_json({"sets": []})
    with pytest.raises(ValueError):
        Family.from_json({"n": 2, "sets": [[0]], "stray": 1})
