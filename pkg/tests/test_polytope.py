import random
from fractions import Fraction

import pytest

from basepoly.corpus import standard_corpus
from basepoly.errors import NotABasis, NotAFace, NotFactorConnected
from basepoly.matroid import full_set, submasks, to_mask, uniform
from basepoly.polytope import (
    Flag,
    L_sigma,
    P_B,
    P_sigma,
    adjacent_flag,
    face_in_hyperplane,
    face_lattice,
    factor_connected_flags,
    flags_by_face,
    flags_equivalent,
    in_hyperplane,
    is_factor_connected,
    matroid_of_flag,
    minimizing_face,
    order_ideal_unions,
    polytope_dimension,
    vertex_face,
)
from conftest import masks

CORPUS6 = standard_corpus(6)


def test_dimension_examples(m211, square):
    assert polytope_dimension(uniform(2, 3)) == 2
    assert polytope_dimension(m211) == 3
    assert polytope_dimension(square) == 2


def test_matroid_of_flag_examples(m211, u24):
    assert matroid_of_flag(m211, Flag.of([], [1, 2, 3, 4])) == m211
    assert matroid_of_flag(m211, Flag.of([], [1, 2], [1, 2, 3, 4])).bases == masks([1, 3], [1, 4], [2, 3], [2, 4])
    assert matroid_of_flag(u24, Flag.of([], [1], [1, 2, 3, 4])).bases == masks([1, 2], [1, 3], [1, 4])


def test_factor_connected_examples(m211, u24):
    assert is_factor_connected(m211, Flag.of([], [1, 2], [1, 2, 3, 4]))
    assert not is_factor_connected(u24, Flag.of([], [1, 2], [1, 2, 3, 4]))
    assert is_factor_connected(u24, Flag.of([], [1, 2, 3, 4]))
    assert not is_factor_connected(m211.__class__(2, masks([1, 2])), Flag.of([], [1, 2]))


def test_flag_equivalence_examples(m211, square):
    f1 = Flag.of([], [1, 2], [1, 2, 3, 4])
    f2 = Flag.of([], [3, 4], [1, 2, 3, 4])
    assert flags_equivalent(square, f1, f2)
    assert adjacent_flag(square, f1, 1) == f2
    assert not flags_equivalent(m211, f1, Flag.of([], [3], [1, 2, 3, 4]))
    assert flags_equivalent(m211, f1, f1)
    with pytest.raises(NotFactorConnected):
        flags_equivalent(uniform(2, 4), f1, f1)


def test_bad_flag():
    with pytest.raises(Exception):
        Flag.of([], [1, 2], [1])


@pytest.mark.parametrize("name", ["U23", "M211", "U12+U12", "U24", "U13", "M1111"])
def test_pairwise_flag_equivalence(name):
    # literal pairwise check with the built-in cross-check enabled
    m = CORPUS6[name]
    flags = factor_connected_flags(m)
    for a in flags:
        for b in flags:
            assert flags_equivalent(m, a, b) == (matroid_of_flag(m, a).bases == matroid_of_flag(m, b).bases)


def test_face_lattice_examples(m211, square):
    assert face_lattice(uniform(2, 3)).poset.rank_counts() == [1, 3, 3, 1]
    assert face_lattice(m211).f_vector() == [5, 8, 5, 1]
    assert face_lattice(square).f_vector() == [4, 4, 1]
    assert face_lattice(uniform(2, 4)).f_vector() == [6, 12, 8, 1]
    assert face_lattice(uniform(1, 1)).f_vector() == [1]


@pytest.mark.parametrize("name", sorted(CORPUS6))
def test_faces_match_flags(name):
    m = CORPUS6[name]
    lat = face_lattice(m)
    from_flags = set(flags_by_face(m))
    assert from_flags == {f.vertex_bases for f in lat.faces[1:]}


@pytest.mark.parametrize("name", sorted(CORPUS6))
def test_hyperplane_sets_closed_under_meet_join(name):
    m = CORPUS6[name]
    for face in face_lattice(m).faces[1:]:
        inside = [s for s in submasks(m.ground) if in_hyperplane(m, face.vertex_bases, s)]
        for s in inside:
            for t in inside:
                assert in_hyperplane(m, face.vertex_bases, s & t)
                assert in_hyperplane(m, face.vertex_bases, s | t)


@pytest.mark.parametrize("name", ["M211", "U24", "U36", "M1212", "U12+U23"])
def test_hyperplane_vs_flags(name):
    m = CORPUS6[name]
    for face in face_lattice(m).faces[1:]:
        for s in submasks(m.ground):
            face_in_hyperplane(m, face, s, check=True)
        assert L_sigma(m, face, prune=False) == L_sigma(m, face)


def test_minimizing_face_examples(m211):
    u23 = uniform(2, 3)
    assert minimizing_face(u23, [0, 0, 0]).vertex_bases == u23.bases
    assert minimizing_face(m211, [0, 0, 1, 0]).vertex_bases == masks([1, 4], [2, 4])
    assert minimizing_face(u23, [0, 1, 2]).vertex_bases == masks([1, 2])


@pytest.mark.parametrize("name", ["M211", "U24", "U36", "M123", "bin5_n6_r3", "U12+U24"])
def test_minimizing_face_random_weights(name):
    m = CORPUS6[name]
    lat = face_lattice(m)
    rng = random.Random(7)
    for _ in range(200):
        w = [Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(m.n)]
        face = minimizing_face(m, w)  # cross-checks against the level-set flag
        assert face.vertex_bases in lat


def test_face_in_hyperplane_examples(m211):
    edge = face_lattice(m211).face(masks([1, 4], [2, 4]))
    assert face_in_hyperplane(m211, edge, to_mask([1, 2]), check=True)
    assert not face_in_hyperplane(m211, face_lattice(m211).top, to_mask([1, 2]))
    assert face_in_hyperplane(m211, edge, full_set(4))


def test_psigma_examples(m211):
    edge = face_lattice(m211).face(masks([1, 4], [2, 4]))
    p = P_sigma(m211, edge)
    rel = {(a, b) for a, b in p.relations() if a != b}
    assert rel == {(to_mask([1, 2]), to_mask([3])), (to_mask([4]), to_mask([3]))}
    top = P_sigma(uniform(2, 4), face_lattice(uniform(2, 4)).top)
    assert len(top) == 1
    assert order_ideal_unions(p) == L_sigma(m211, edge)


def test_pb_examples(m211):
    rel = lambda p: {(a, b) for a, b in p.relations() if a != b}
    assert rel(P_B(m211, to_mask([1, 4]))) == {(1, 2), (1, 3), (4, 3)}
    assert rel(P_B(uniform(2, 3), to_mask([1, 2]))) == {(1, 3), (2, 3)}
    assert len(P_B(uniform(1, 1), to_mask([1]))) == 1
    with pytest.raises(NotABasis):
        P_B(m211, to_mask([1, 2]))


def test_not_a_face(m211):
    with pytest.raises(NotAFace):
        face_lattice(m211).index_of(masks([1, 3], [2, 4]))
    with pytest.raises(NotABasis):
        vertex_face(m211, to_mask([1, 2]))


def test_face_matroids_and_lattice_eulerian():
    from basepoly.cdindex import is_eulerian
    from basepoly.matroid import is_basis_family
    for name, m in standard_corpus(7).items():
        lat = face_lattice(m)
        assert is_eulerian(lat.poset), name
        for f in lat.faces[1:]:
            assert is_basis_family(m.n, f.vertex_bases)
            assert f.dim == f.matroid.size - len(f.matroid.components)
