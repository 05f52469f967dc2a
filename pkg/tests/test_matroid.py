from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from basepoly.corpus import random_binary_matroids, rank2_corpus, standard_corpus
from basepoly.errors import (
    BadParameters,
    EmptyFamily,
    ExchangeAxiomViolated,
    GroundSetTooLarge,
    LabelCollision,
    UnequalSizes,
)
from basepoly.matroid import (
    compositions,
    connected_components,
    contraction,
    deletion,
    direct_sum,
    disjoint_sum,
    full_set,
    is_basis_family,
    labels,
    matroid_from_bases,
    minor,
    parse_composition,
    rank,
    rank2_from_composition,
    restriction,
    shifted,
    submasks,
    to_mask,
    uniform,
)
from conftest import masks


def test_from_bases_examples():
    assert matroid_from_bases(3, [[1, 2], [1, 3], [2, 3]]) == uniform(2, 3)
    m = matroid_from_bases(4, [[1, 3], [1, 4], [2, 3], [2, 4], [3, 4]])
    assert m == rank2_from_composition((2, 1, 1))
    with pytest.raises(UnequalSizes):
        matroid_from_bases(3, [[1, 2], [3]])
    with pytest.raises(EmptyFamily):
        matroid_from_bases(3, [])
    with pytest.raises(BadParameters):
        matroid_from_bases(2, [[1, 3]])


def test_exchange_violation_reports_witness():
    with pytest.raises(ExchangeAxiomViolated) as info:
        matroid_from_bases(4, [[1, 2], [3, 4]])
    err = info.value
    assert {tuple(err.b1), tuple(err.b2)} == {(1, 2), (3, 4)}
    assert err.x in err.b1


def test_is_basis_family():
    assert is_basis_family(4, masks([1, 3], [1, 4], [2, 3], [2, 4], [3, 4]))
    assert not is_basis_family(4, masks([1, 2], [3, 4]))
    assert not is_basis_family(4, set())


def test_rank_examples(m211):
    assert rank(uniform(2, 3), to_mask([1, 2])) == 2
    assert rank(m211, to_mask([1, 2])) == 1
    assert rank(m211, 0) == 0


def test_minor_examples(m211, u24):
    r = restriction(u24, to_mask([1, 2]))
    assert r.bases == masks([1, 2]) and r.ground == to_mask([1, 2])
    c = contraction(u24, to_mask([1]))
    assert c.bases == masks([2], [3], [4]) and c.ground == to_mask([2, 3, 4])
    c = contraction(m211, to_mask([1, 2]))
    assert c.bases == masks([3], [4])
    assert deletion(u24, to_mask([4])).bases == masks([1, 2], [1, 3], [2, 3])


def test_direct_sum_examples():
    u12 = uniform(1, 2)
    assert disjoint_sum(u12, u12).bases == masks([1, 3], [1, 4], [2, 3], [2, 4])
    assert disjoint_sum(uniform(1, 1), uniform(1, 1)).bases == masks([1, 2])
    assert len(disjoint_sum(u12, uniform(1, 3)).bases) == 6
    with pytest.raises(LabelCollision):
        direct_sum(u12, u12)


def test_components_examples(m211):
    m = disjoint_sum(uniform(1, 2), uniform(1, 3))
    assert connected_components(m) == [to_mask([1, 2]), to_mask([3, 4, 5])]
    sigma = type(m211)(4, masks([1, 4], [2, 4]))
    assert connected_components(sigma) == [to_mask([1, 2]), to_mask([3]), to_mask([4])]
    assert connected_components(uniform(2, 4)) == [full_set(4)]


def test_components_of_sums():
    a, b = uniform(2, 3), rank2_from_composition((1, 2))
    s = disjoint_sum(a, b)
    expected = list(a.components) + [c << a.n for c in b.components]
    assert sorted(s.components) == sorted(expected)


def test_rank2_builder():
    assert rank2_from_composition((1, 1, 1)) == uniform(2, 3)
    assert to_mask([1, 2]) not in rank2_from_composition((2, 1, 1)).bases
    assert len(uniform(2, 4).bases) == 6
    with pytest.raises(BadParameters):
        rank2_from_composition((3,))
    with pytest.raises(BadParameters):
        uniform(3, 2)


def test_rank2_connectivity():
    for alpha_m in rank2_corpus(7).items():
        alpha = tuple(int(ch) for ch in alpha_m[0][1:])
        m = alpha_m[1]
        if len(alpha) == 2:
            assert len(m.components) == 2
        else:
            assert m.is_connected


def test_size_cap(monkeypatch):
    monkeypatch.setenv("MATROID_MAX_N", "5")
    with pytest.raises(GroundSetTooLarge):
        uniform(2, 6)
    monkeypatch.setenv("MATROID_MAX_N", "20")
    assert len(uniform(1, 13).bases) == 13


def test_compositions():
    assert sorted(compositions(3)) == [(1, 1, 1), (1, 2), (2, 1), (3,)]
    assert len(list(compositions(6, 2))) == 2 ** 5 - 1
    assert parse_composition("2, 1,1") == (2, 1, 1)
    assert parse_composition("2,0,1", weak=True) == (2, 0, 1)
    with pytest.raises(BadParameters):
        parse_composition("2,0,1")


def test_labels_roundtrip():
    assert labels(to_mask([5, 1, 3])) == [1, 3, 5]
    assert sorted(submasks(0b101)) == [0, 1, 4, 5]
    assert shifted(uniform(1, 2), 2).bases == masks([3], [4])


SMALL = {k: v for k, v in standard_corpus(6).items()}


@pytest.mark.parametrize("name", sorted(SMALL))
def test_rank_submodular(name):
    m = SMALL[name]
    subsets = list(submasks(m.ground))
    r = {s: m.rank_of(s) for s in subsets}
    for s in subsets:
        for t in subsets:
            assert r[s | t] + r[s & t] <= r[s] + r[t]
            if s & t == s:
                assert r[s] <= r[t]


@pytest.mark.parametrize("name", sorted(SMALL))
def test_minors_are_matroids(name):
    m = SMALL[name]
    for s in submasks(m.ground):
        for piece in (restriction(m, s), contraction(m, s)):
            assert is_basis_family(m.n, piece.bases)


def test_minor_two_ways():
    # (M|S2)/S1 equals (M/S1)|(S2 - S1)
    for m in list(random_binary_matroids(4).values()) + [uniform(3, 6), rank2_from_composition((2, 1, 2))]:
        for s2 in submasks(m.ground):
            for s1 in submasks(s2):
                a = minor(m, s2, s1)
                b = restriction(contraction(m, s1), s2 & ~s1)
                assert a.bases == b.bases and a.ground == b.ground


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 7), st.data())
def test_uniform_properties(n, data):
    r = data.draw(st.integers(0, n))
    m = uniform(r, n)
    assert len(m.bases) == len(list(combinations(range(n), r)))
    assert is_basis_family(n, m.bases)
    if 0 < r < n:
        assert m.is_connected
