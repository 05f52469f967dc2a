import pytest

from basepoly.corpus import direct_sum_corpus, random_binary_matroids, standard_corpus
from basepoly.errors import InvalidSplitSpec
from basepoly.matroid import full_set, is_basis_family, rank2_from_composition, to_mask, uniform
from basepoly.ncpoly import cd
from basepoly.polytope import polytope_dimension
from basepoly.split import (
    COND_I,
    SplitSpec,
    all_split_specs,
    brute_force_split_oracle,
    check_condition_i,
    check_condition_ii,
    check_condition_ii_dual,
    hyperplane_split,
    verify_split_identity,
)
from conftest import masks


def spec(s, k):
    return SplitSpec.of(s, k)


def test_condition_i_examples(u24, m211):
    assert check_condition_i(u24, spec([1, 2], 1))
    assert not check_condition_i(m211, spec([1, 2], 1))
    assert not check_condition_i(u24, spec([1], 1))


def test_condition_ii_examples(u24):
    assert check_condition_ii(u24, spec([1, 2], 1))
    assert check_condition_ii(uniform(2, 5), spec([1, 2], 1))
    assert check_condition_ii_dual(u24, spec([1, 2], 1))


def test_spec_validation(u24):
    for bad in (spec([1, 2], 0), spec([1, 2], 2), spec([], 1), spec([1, 2, 3, 4], 1), spec([5], 1)):
        with pytest.raises(InvalidSplitSpec):
            hyperplane_split(u24, bad)


def test_octahedron_split(u24):
    res = hyperplane_split(u24, spec([1, 2], 1))
    assert res.is_split
    assert res.m_minus.bases == u24.bases - masks([1, 2])
    assert res.m_minus.bases == rank2_from_composition((2, 1, 1)).bases
    assert res.m_hat.bases == masks([1, 3], [1, 4], [2, 3], [2, 4])
    rep = verify_split_identity(u24, spec([1, 2], 1), res)
    assert rep.lhs == rep.rhs == cd("c^3 + 6cd + 4dc")
    assert rep.crossers == []
    assert rep.to_json()["equal"] is True


def test_non_splits(m211, u24):
    res = hyperplane_split(m211, spec([1, 2], 1))
    assert not res.is_split and res.reason == COND_I
    assert not brute_force_split_oracle(u24, spec([1, 2, 3], 1))
    assert not hyperplane_split(u24, spec([1, 2, 3], 1)).is_split
    with pytest.raises(InvalidSplitSpec):
        verify_split_identity(m211, spec([1, 2], 1))


def test_rank2_criterion_example():
    assert hyperplane_split(uniform(2, 5), spec([1, 2, 3], 1)).is_split
    assert brute_force_split_oracle(uniform(2, 5), spec([1, 2, 3], 1))


def test_u36_split():
    m = uniform(3, 6)
    for k in (1, 2):
        s = spec([1, 2, 3], k)
        res = hyperplane_split(m, s)
        assert res.is_split == brute_force_split_oracle(m, s)
        if res.is_split:
            rep = verify_split_identity(m, s, res)
            assert rep.equal


EXTRA = {**direct_sum_corpus(6), **random_binary_matroids(6, seed=11)}


@pytest.mark.parametrize("name", sorted(EXTRA))
def test_split_test_vs_oracle_extra_corpus(name):
    m = EXTRA[name]
    for s in all_split_specs(m):
        res = hyperplane_split(m, s)
        assert res.is_split == brute_force_split_oracle(m, s), s
        assert check_condition_ii(m, s) == check_condition_ii_dual(m, s)
        if res.is_split:
            assert res.m_plus.bases | res.m_minus.bases == m.bases
            assert res.m_plus.bases & res.m_minus.bases == res.m_hat.bases
            assert polytope_dimension(res.m_hat) == polytope_dimension(m) - 1
            for piece in (res.m_plus, res.m_minus, res.m_hat):
                assert is_basis_family(m.n, piece.bases)
            verify_split_identity(m, s, res)


def test_split_json(u24):
    data = hyperplane_split(u24, spec([1, 2], 1)).to_json()
    assert data["is_split"] and data["failed_condition"] is None
    assert data["m_hat"]["bases"] == [[1, 3], [1, 4], [2, 3], [2, 4]]


def test_all_specs_count(u24):
    specs = all_split_specs(u24)
    assert len(specs) == 14
    assert all(0 < s.s < full_set(4) for s in specs)
