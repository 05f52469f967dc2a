from math import comb, prod

import pytest

from basepoly.cdindex import cd_index
from basepoly.errors import BadM, IndexOutOfRange
from basepoly.matroid import composition_blocks, compositions, full_set, rank2_from_composition, submasks
from basepoly.ncpoly import cd
from basepoly.polytope import face_lattice
from basepoly.rank2 import (
    cd_index_rank2,
    rank2_split_criterion,
    lambda_comp,
    mu_comp,
    parallel_classes,
    rank2_crossing_subsets,
    rank2_split,
    table1,
    zero_deletion,
)
from basepoly.split import SplitSpec, crossing_faces, hyperplane_split


def test_notation_examples():
    assert lambda_comp((2, 4, 0, 6, 7), 4) == (6, 6, 7)
    assert mu_comp((2, 4, 0, 6, 7), 4) == (12, 7)
    assert mu_comp((3, 5), 1) == (3, 5)
    assert zero_deletion((1, 3, 0, 6, 3)) == (1, 3, 6, 3)
    assert zero_deletion((0, 0, 5)) == (5,)
    assert zero_deletion((2, 1)) == (2, 1)
    with pytest.raises(IndexOutOfRange):
        lambda_comp((1, 2, 3), 1)
    with pytest.raises(IndexOutOfRange):
        mu_comp((1, 2), 2)


def test_rank2_split_examples():
    m1, m2 = rank2_split((1, 1, 1, 1), 2)
    assert m1 == rank2_from_composition((2, 1, 1))
    assert m2 == rank2_from_composition((1, 1, 2))
    m1, m2 = rank2_split((2, 1, 1, 1), 2)
    assert m1 == rank2_from_composition((3, 1, 1))
    assert m2 == rank2_from_composition((2, 1, 2))
    with pytest.raises(BadM):
        rank2_split((1, 1, 1, 1), 1)
    with pytest.raises(BadM):
        rank2_split((1, 1, 1), 1)


def test_recursion_examples():
    assert cd_index_rank2((1, 1, 1)) == cd("c^2 + d")
    assert cd_index_rank2((2, 2, 1)) == cd("c^4 + 5c^2d + 10cdc + 6dc^2 + 10d^2")
    assert cd_index_rank2((4, 1, 1)) == cd("c^5 + 5c^3d + 13c^2dc + 15cdc^2 + 20cd^2 + 7dc^3 + 18dcd + 22d^2c")
    assert cd_index_rank2((1, 1, 1, 1), method="both") == cd("c^3 + 6cd + 4dc")
    assert str(cd_index_rank2((1, 1))) == "1"


def test_table1_rows():
    rows = table1()
    assert len(rows) == 11
    assert rows[0][0] == (1, 1, 1) and rows[-1][0] == (3, 2, 2)
    lookup = dict(rows)
    assert lookup[(3, 1, 1)] == cd("c^4 + 4c^2d + 8cdc + 5dc^2 + 7d^2")
    for alpha, poly in rows:
        assert cd_index(face_lattice(rank2_from_composition(alpha)).poset) == poly


@pytest.mark.parametrize("alpha", [(1, 1, 1, 1, 1, 1, 1, 1, 1), (2, 2, 2, 3), (1, 2, 1, 2, 1, 2)])
def test_recursion_beyond_check_range(alpha):
    assert cd_index_rank2(alpha, method="both") == cd_index_rank2(alpha, method="direct")


def test_parallel_classes():
    m = rank2_from_composition((2, 1, 3))
    assert parallel_classes(m) == composition_blocks((2, 1, 3))


@pytest.mark.parametrize("n", range(2, 9))
def test_split_criterion_vs_general(n):
    for alpha in compositions(n, 2):
        m = rank2_from_composition(alpha)
        for s in submasks(m.ground):
            if s in (0, m.ground):
                continue
            assert rank2_split_criterion(m, s) == hyperplane_split(m, SplitSpec(s, 1)).is_split


@pytest.mark.parametrize("n", range(4, 8))
def test_crossing_subsets(n):
    for alpha in compositions(n, 4):
        m = rank2_from_composition(alpha)
        blocks = composition_blocks(alpha)
        for cut in range(2, len(alpha) - 1):
            s = sum(blocks[:cut])
            found = set()
            for face in crossing_faces(m, SplitSpec(s, 1)):
                union = 0
                for b in face.vertex_bases:
                    union |= b
                assert face.vertex_bases == frozenset(b for b in m.bases if b & ~union == 0)
                found.add(union)
            assert found == rank2_crossing_subsets(alpha, cut)


@pytest.mark.parametrize("n", range(2, 8))
def test_multiplicities(n):
    for alpha in compositions(n, 2):
        blocks = composition_blocks(alpha)
        counts = {}
        for t in submasks(full_set(n)):
            beta = tuple((t & b).bit_count() for b in blocks)
            counts[beta] = counts.get(beta, 0) + 1
        for beta, c in counts.items():
            assert c == prod(comb(a, b) for a, b in zip(alpha, beta))


@pytest.mark.parametrize("alpha", [(1, 2, 1, 3), (3, 1, 2), (1, 1, 3, 1, 1)])
def test_class_order_does_not_matter(alpha):
    # the memo keys on sorted alpha; check the unsorted lattice directly
    direct = cd_index(face_lattice(rank2_from_composition(alpha)).poset)
    assert direct == cd_index_rank2(tuple(sorted(alpha)), method="direct")
    assert cd_index_rank2(alpha) == direct
