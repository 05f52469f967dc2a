import numpy as np
import pytest

from basepoly.cdindex import cd_index
from basepoly.errors import NotComparable, NotFaceLattice, NotGraded
from basepoly.matroid import disjoint_sum, rank2_from_composition, uniform
from basepoly.polytope import face_lattice
from basepoly.poset import (
    FinitePoset,
    GradedPoset,
    bipyramid,
    boolean_lattice,
    cartesian_product,
    chain,
    isomorphic,
    poset_product,
    prism,
    pyramid,
)


def test_chain_and_boolean():
    assert chain(3).rank_counts() == [1, 1, 1, 1]
    assert boolean_lattice(3).rank_counts() == [1, 3, 3, 1]


def test_from_covers_validates():
    with pytest.raises(NotGraded):
        # 0 < a < b < 1 and 0 < c < 1: maximal chains of different lengths
        GradedPoset.from_covers(["0", "a", "b", "c", "1"],
                                [("0", "a"), ("a", "b"), ("b", "1"), ("0", "c"), ("c", "1")])


def test_interval_and_dual():
    b3 = boolean_lattice(3)
    iv = b3.interval(0b001, 0b111)
    assert iv.rank_counts() == [1, 2, 1]
    assert b3.interval(0b011, 0b011).rank == 0
    with pytest.raises(NotComparable):
        b3.interval(0b001, 0b010)
    d = face_lattice(uniform(2, 4)).poset.dual()
    assert d.rank_counts() == [1, 8, 12, 6, 1]


def test_json_roundtrip():
    q = face_lattice(uniform(2, 3)).poset
    back = GradedPoset.from_json(q.to_json())
    assert back.rank_counts() == q.rank_counts()
    assert isomorphic(back, q)


def test_products_match_matroid_lattices():
    seg = face_lattice(uniform(1, 2)).poset
    square = poset_product(seg, seg)
    assert isomorphic(square, face_lattice(disjoint_sum(uniform(1, 2), uniform(1, 2))).poset)
    point = face_lattice(uniform(1, 1)).poset
    tri = face_lattice(uniform(1, 3)).poset
    assert isomorphic(poset_product(point, tri), tri)
    b2 = boolean_lattice(2)
    assert isomorphic(poset_product(b2, b2), square)
    with pytest.raises(NotFaceLattice):
        poset_product(GradedPoset(["x"], np.ones((1, 1), dtype=np.uint8), [0]), seg)


def test_constructions_shapes():
    sq = face_lattice(disjoint_sum(uniform(1, 2), uniform(1, 2))).poset
    assert pyramid(sq).rank_counts() == [1, 5, 8, 5, 1]
    assert prism(sq).rank_counts() == [1, 8, 12, 6, 1]
    assert bipyramid(sq).rank_counts() == [1, 6, 12, 8, 1]
    assert isomorphic(bipyramid(sq), face_lattice(uniform(2, 4)).poset)
    assert isomorphic(pyramid(sq), face_lattice(rank2_from_composition((2, 1, 1))).poset)
    assert isomorphic(cartesian_product(boolean_lattice(2), chain(1)), boolean_lattice(3))


def test_isomorphic_negative():
    assert not isomorphic(boolean_lattice(3), face_lattice(disjoint_sum(uniform(1, 2), uniform(1, 2))).poset)


def test_finite_poset_ideals():
    p = FinitePoset.from_relations(["a", "b", "c"], [("a", "c"), ("b", "c")])
    ideals = p.order_ideals()
    assert len(ideals) == 5
    assert frozenset({"c"}) not in ideals
    assert p.cover_relations() == [("a", "c"), ("b", "c")]


def test_segment_cd():
    assert str(cd_index(face_lattice(uniform(1, 2)).poset)) == "c"
