import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from basepoly.cdindex import (
    ab_index,
    ab_to_cd,
    bipyramid_cd,
    cd_index,
    cd_words,
    expand,
    expand_cd_monomial,
    flag_f_vector,
    flag_h_vector,
    interval_index,
    is_eulerian,
    mobius,
    prism_cd,
    pyramid_cd,
    reverse,
    split_rhs,
)
from basepoly.corpus import standard_corpus
from basepoly.errors import NotEulerian, NotGraded, NotHomogeneous, NotRepresentable, RankMismatch
from basepoly.matroid import disjoint_sum, rank2_from_composition, uniform
from basepoly.ncpoly import NCPolynomial, ab, cd
from basepoly.polytope import face_lattice
from basepoly.poset import GradedPoset, bipyramid, boolean_lattice, chain, poset_product, pyramid


def lattice(m):
    return face_lattice(m).poset


TRIANGLE = lambda: lattice(uniform(2, 3))
SEGMENT = lambda: lattice(uniform(1, 2))
SQUARE = lambda: lattice(disjoint_sum(uniform(1, 2), uniform(1, 2)))
OCTA = lambda: lattice(uniform(2, 4))


def test_flag_vectors_triangle():
    f, h = flag_f_vector(TRIANGLE()), flag_h_vector(TRIANGLE())
    assert f[[1]] == 3 and f[[2]] == 3 and f[[1, 2]] == 6 and f[[]] == 1
    assert h[[1]] == 2 and h[[2]] == 2 and h[[1, 2]] == 1 and h[[]] == 1
    assert f.to_json() == {"": 1, "1": 3, "2": 3, "1,2": 6}


def test_ab_index_examples():
    assert ab_index(SEGMENT()) == ab("a + b")
    assert ab_index(TRIANGLE()) == ab("a^2 + 2ab + 2ba + b^2")
    assert ab_index(boolean_lattice(1)) == NCPolynomial.one()
    with pytest.raises(NotGraded):
        flag_f_vector(GradedPoset(["x"], np.ones((1, 1), dtype=np.uint8), [0]))


def test_eulerian_examples():
    assert is_eulerian(OCTA())
    assert not is_eulerian(chain(3))
    assert is_eulerian(boolean_lattice(3))
    with pytest.raises(NotEulerian):
        cd_index(chain(3))


def test_mobius():
    b3 = boolean_lattice(3)
    assert mobius(b3, 0, 0b111) == -1
    assert mobius(chain(3), 0, 3) == 0


def test_expand_and_convert():
    assert expand_cd_monomial("d") == ab("ab + ba")
    assert expand_cd_monomial("c") == ab("a + b")
    assert ab_to_cd(ab("a^2 + 2ab + 2ba + b^2")) == cd("c^2 + d")
    with pytest.raises(NotRepresentable):
        ab_to_cd(ab("a"))
    with pytest.raises(NotHomogeneous):
        ab_to_cd(ab("a + ab"))


def test_cd_index_examples():
    assert cd_index(TRIANGLE()) == cd("c^2 + d")
    assert cd_index(lattice(rank2_from_composition((2, 1, 1)))) == cd("c^3 + 3cd + 3dc")
    assert cd_index(OCTA()) == cd("c^3 + 6cd + 4dc")
    assert cd_index(lattice(uniform(1, 1))) == NCPolynomial.one()


def test_reverse_examples():
    assert reverse(cd("cd")) == cd("dc")
    assert reverse(cd("c^2 + d")) == cd("c^2 + d")
    q = lattice(rank2_from_composition((2, 1, 1)))
    assert cd_index(q.dual()) == reverse(cd_index(q)) == cd("c^3 + 3cd + 3dc")


def test_interval_examples():
    sq = SQUARE()
    vertex = sq.layers[1][0]
    assert interval_index(sq, vertex, sq.top) == cd("c")
    octa = OCTA()
    facet = octa.elements[octa.layers[3][0]]
    assert interval_index(octa, octa.bottom, facet) == cd("c^2 + d")
    assert interval_index(octa, facet, facet) == NCPolynomial.one()


def test_poset_product_examples():
    assert cd_index(poset_product(SEGMENT(), SEGMENT())) == cd("c^2 + 2d")


def test_cone_formula_examples():
    assert prism_cd(SEGMENT()) == cd("c^2 + 2d")
    assert pyramid_cd(SQUARE()) == cd("c^3 + 3cd + 3dc")
    assert bipyramid_cd(SQUARE()) == cd("c^3 + 6cd + 4dc")


def test_split_rhs_examples():
    # Bipyr(square) cut along the square: both halves are Pyr(square), nothing crosses
    sq = SQUARE()
    pyr = pyramid(sq)
    rhs = split_rhs(pyr, pyr, sq, [])
    assert rhs == cd_index(bipyramid(sq)) == cd("c^3 + 6cd + 4dc")
    # the unit square cut at mid-height: two squares, the edges x2 = 0, 1 do not cross,
    # the two vertical edges cross at the midpoints of the segment
    seg = SEGMENT()
    mids = [seg.elements[i] for i in seg.layers[1]]
    assert split_rhs(sq, sq, seg, mids) == cd_index(sq)
    with pytest.raises(RankMismatch):
        split_rhs(sq, OCTA(), seg, [])


@pytest.mark.parametrize("name", sorted(standard_corpus(6)))
def test_corpus_invariants(name):
    q = lattice(standard_corpus(6)[name])
    psi = cd_index(q)
    n = q.rank - 1
    assert psi["c" * n] == 1
    assert psi.nonnegative()
    assert psi.is_homogeneous() and (not psi or psi.degree == n)
    assert cd_index(q.dual()) == psi.reverse()
    assert expand(psi) == ab_index(q)


def test_ab_to_cd_inverts_expand():
    for deg in range(9):
        for w in cd_words(deg):
            assert ab_to_cd(expand_cd_monomial(w)) == NCPolynomial({w: 1})
    assert len(cd_words(8)) == 34


@settings(max_examples=50, deadline=None)
@given(st.integers(1, 7), st.data())
def test_random_cd_polys_roundtrip(deg, data):
    ws = cd_words(deg)
    coeffs = data.draw(st.lists(st.integers(-20, 20), min_size=len(ws), max_size=len(ws)))
    p = NCPolynomial(dict(zip(ws, coeffs)))
    assert ab_to_cd(expand(p)) == p


@pytest.mark.parametrize("m", [2, 3, 4, 5])
def test_simplex_pyramid(m):
    assert pyramid_cd(boolean_lattice(m)) == cd_index(boolean_lattice(m + 1))
