"""Flag vectors, ab-indices and cd-indices of graded posets.

Everything is exact integer arithmetic.  The ab-index is computed twice, from
the flag h-vector and from chain weights, and the two must agree; the
cd-index is then read off by triangular elimination against the expanded
cd-monomials.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

from . import kernels
from .errors import (
    DefinitionMismatch,
    NotEulerian,
    NotGraded,
    NotHomogeneous,
    NotRepresentable,
    OddCoefficients,
    RankMismatch,
)
from .ncpoly import AB, CD, NCPolynomial
from .poset import (
    GradedPoset,
    bipyramid,
    boolean_lattice,
    cartesian_product,
    poset_product,
    prism,
    pyramid,
)

C = NCPolynomial({"c": 1}, CD)
D = NCPolynomial({"d": 1}, CD)


class FlagVector:
    """Map from rank sets ``S`` (subsets of ``1..n``) to integers."""

    def __init__(self, n: int, values: np.ndarray):
        self.n = n
        self.values = np.asarray(values, dtype=np.int64)

    @staticmethod
    def _mask(ranks: Iterable[int]) -> int:
        m = 0
        for r in ranks:
            m |= 1 << (r - 1)
        return m

    def __getitem__(self, ranks: Iterable[int]) -> int:
        return int(self.values[self._mask(ranks)])

    def __eq__(self, other):
        return isinstance(other, FlagVector) and self.n == other.n and np.array_equal(self.values, other.values)

    def items(self):
        for mask in range(1 << self.n):
            yield tuple(r + 1 for r in range(self.n) if mask >> r & 1), int(self.values[mask])

    def to_json(self) -> dict[str, int]:
        return {",".join(map(str, key)): v for key, v in self.items()}

    def __repr__(self):
        return f"FlagVector({self.to_json()})"


def _require_graded(p: GradedPoset) -> int:
    if not isinstance(p, GradedPoset):
        raise NotGraded("expected a GradedPoset")
    if p.rank < 1:
        raise NotGraded("need a poset of rank at least 1")
    return p.rank - 1


def flag_f_vector(p: GradedPoset) -> FlagVector:
    n = _require_graded(p)
    return FlagVector(n, kernels.flag_f_vector(p.leq, p.ranks, n))


def _mobius_transform(v: np.ndarray, n: int, sign: int) -> np.ndarray:
    out = v.copy()
    for i in range(n):
        bit = 1 << i
        idx = np.arange(1 << n)
        hi = idx[(idx & bit) != 0]
        out[hi] += sign * out[hi ^ bit]
    return out


def flag_h_vector(p: GradedPoset) -> FlagVector:
    """Flag h-vector by inclusion-exclusion; the inverse transform is checked."""
    f = flag_f_vector(p)
    h = _mobius_transform(f.values, f.n, -1)
    if not np.array_equal(_mobius_transform(h, f.n, 1), f.values):  # pragma: no cover
        raise DefinitionMismatch("flag h-vector does not sum back to the flag f-vector")
    return FlagVector(f.n, h)


def _word_index_from_rank_mask(n: int) -> np.ndarray:
    """Permutation taking rank-set masks (bit i-1 = rank i) to dense word indices."""
    masks = np.arange(1 << n)
    out = np.zeros(1 << n, dtype=np.int64)
    for i in range(1, n + 1):
        out |= ((masks >> (i - 1)) & 1) << (n - i)
    return out


def _ab_from_h(p: GradedPoset, n: int) -> np.ndarray:
    h = flag_h_vector(p).values
    v = np.zeros(1 << n, dtype=np.int64)
    v[_word_index_from_rank_mask(n)] = h
    return v


_A_MINUS_B = np.array([1, -1], dtype=np.int64)
_B = np.array([0, 1], dtype=np.int64)


def _power(vec: np.ndarray, k: int) -> np.ndarray:
    out = np.ones(1, dtype=np.int64)
    for _ in range(k):
        out = np.kron(out, vec)
    return out


def _ab_from_chains(p: GradedPoset, n: int) -> np.ndarray:
    """Sum of chain weights, accumulated rank by rank.

    ``w[j]`` holds, for each element ``y`` of rank ``j``, the total weight of
    chains ``0 < x_1 < ... < y`` as a dense word vector of length ``2**j``.
    """
    leq = p.leq.astype(np.int64)
    layers = p.layers
    w = {0: np.ones((1, 1), dtype=np.int64)}
    for j in range(1, n + 1):
        ys = layers[j]
        acc = np.zeros((len(ys), 1 << j), dtype=np.int64)
        for i in range(j):
            arrived = leq[np.ix_(layers[i], ys)].T @ w[i]
            z = np.kron(_power(_A_MINUS_B, j - i - 1), _B)
            acc += np.einsum("ra,b->rab", arrived, z).reshape(len(ys), 1 << j)
        w[j] = acc
    total = np.zeros(1 << n, dtype=np.int64)
    for i in range(n + 1):
        total += np.kron(w[i].sum(axis=0), _power(_A_MINUS_B, n - i))
    return total


def _trivial(p) -> bool:
    # a one-element interval [x, x] gets index 1
    return isinstance(p, GradedPoset) and len(p) == 1


def ab_index(p: GradedPoset) -> NCPolynomial:
    if _trivial(p):
        return NCPolynomial.one(AB)
    n = _require_graded(p)
    via_h = _ab_from_h(p, n)
    via_chains = _ab_from_chains(p, n)
    if not np.array_equal(via_h, via_chains):
        raise DefinitionMismatch("flag h-vector and chain-weight ab-indices differ")
    return NCPolynomial.from_dense(via_h, n)


def is_eulerian(p: GradedPoset) -> bool:
    return kernels.eulerian_violation(p.leq, p.ranks) is None


def mobius(p: GradedPoset, x, y) -> int:
    """Moebius function of a single interval by the defining recursion."""
    q = p.interval(x, y)
    mu = [0] * len(q)
    mu[0] = 1
    for t in range(1, len(q)):
        mu[t] = -sum(mu[s] for s in range(t) if q.leq[s, t])
    return mu[-1]


# ---------------------------------------------------------------------------
# ab <-> cd


@lru_cache(maxsize=None)
def cd_words(degree: int) -> tuple[str, ...]:
    """All cd-words of the given degree, in graded-lex order (c < d)."""
    if degree < 0:
        return ()
    if degree == 0:
        return ("",)
    out = ["c" + w for w in cd_words(degree - 1)] + ["d" + w for w in cd_words(degree - 2)]
    return tuple(sorted(out))


_C_DENSE = np.array([1, 1], dtype=np.int64)
_D_DENSE = np.array([0, 1, 1, 0], dtype=np.int64)


@lru_cache(maxsize=4096)
def _expand_dense(word: str) -> np.ndarray:
    out = np.ones(1, dtype=np.int64)
    for ch in word:
        out = np.kron(out, _C_DENSE if ch == "c" else _D_DENSE)
    out.setflags(write=False)
    return out


def expand_cd_monomial(word: str) -> NCPolynomial:
    """Substitute ``c = a + b`` and ``d = ab + ba`` and multiply out."""
    if any(ch not in "cd" for ch in word):
        raise NotRepresentable(f"{word!r} is not a cd-word")
    n = sum(1 if ch == "c" else 2 for ch in word)
    return NCPolynomial.from_dense(_expand_dense(word), n)


def expand(p: NCPolynomial) -> NCPolynomial:
    out = NCPolynomial.zero(AB)
    for w, c in p.items():
        out = out + expand_cd_monomial(w) * c
    return out


def _leading_cd_word(index: int, n: int) -> str | None:
    """Invert ``c -> b, d -> ba``: the lex-largest ab-word in each expansion."""
    word = format(index, f"0{n}b") if n else ""
    out, i = [], 0
    while i < n:
        if word[i] == "0":
            return None
        if i + 1 < n and word[i + 1] == "0":
            out.append("d")
            i += 2
        else:
            out.append("c")
            i += 1
    return "".join(out)


def ab_to_cd(p: NCPolynomial) -> NCPolynomial:
    """Rewrite a homogeneous ab-polynomial in ``c`` and ``d``.

    Each cd-monomial's expansion has a distinct lex-largest word (``b > a``),
    so repeatedly clearing the largest remaining word is an exact triangular
    solve.  Raises :class:`NotRepresentable` if the polynomial is outside the
    span.
    """
    if p.alphabet != AB and not p._is_scalar():
        raise NotRepresentable("expected an ab-polynomial")
    if not p:
        return NCPolynomial.zero(CD)
    if not p.is_homogeneous():
        raise NotHomogeneous(f"{p} is not homogeneous")
    n = p.degree
    rest = p.to_dense(n)
    terms = {}
    while True:
        nz = np.flatnonzero(rest)
        if not len(nz):
            break
        top = int(nz[-1])
        w = _leading_cd_word(top, n)
        if w is None:
            raise NotRepresentable(f"{p} is not a polynomial in c and d")
        coeff = int(rest[top])
        terms[w] = coeff
        rest = rest - coeff * _expand_dense(w)
    return NCPolynomial(terms, CD)


def cd_index(p: GradedPoset) -> NCPolynomial:
    if _trivial(p):
        return NCPolynomial.one(CD)
    if not is_eulerian(p):
        raise NotEulerian("the cd-index is only defined for Eulerian posets")
    out = ab_to_cd(ab_index(p))
    if out and out.degree != p.rank - 1:  # pragma: no cover
        raise DefinitionMismatch(f"cd-index has degree {out.degree}, expected {p.rank - 1}")
    return out


def reverse(p: NCPolynomial) -> NCPolynomial:
    return p.reverse()


def dual(p: GradedPoset) -> GradedPoset:
    return p.dual()


def interval_index(p: GradedPoset, x, y) -> NCPolynomial:
    """cd-index of the interval ``[x, y]``, memoized on the poset."""
    cache = p.__dict__.setdefault("_interval_cd", {})
    key = (x, y)
    if key not in cache:
        cache[key] = cd_index(p.interval(x, y))
    return cache[key]


def simplex_cd(m: int) -> NCPolynomial:
    """cd-index of the simplex with ``m`` vertices (Boolean lattice ``B_m``)."""
    return _simplex_cd(m)


@lru_cache(maxsize=None)
def _simplex_cd(m: int) -> NCPolynomial:
    return cd_index(boolean_lattice(m))


@lru_cache(maxsize=None)
def simplex_product_cd(a: int, b: int) -> NCPolynomial:
    """cd-index of the product of simplices with ``a`` and ``b`` vertices."""
    return cd_index(poset_product(boolean_lattice(a), boolean_lattice(b)))


# ---------------------------------------------------------------------------
# pyramid, prism, bipyramid and the split identity


def _face_figure_sum(q: GradedPoset, faces: Sequence | None = None) -> NCPolynomial:
    """Sum over faces of ``Psi([0, s]) * d * Psi([s, 1])``.

    By default ``faces`` is every nonempty proper face; a vertex contributes
    ``Psi = 1`` on its lower side.
    """
    if faces is None:
        faces = q.elements[1:-1]
    total = NCPolynomial.zero(CD)
    for s in faces:
        total = total + interval_index(q, q.bottom, s) * D * interval_index(q, s, q.top)
    return total


def pyramid_cd(q: GradedPoset) -> NCPolynomial:
    psi = cd_index(q)
    twice = psi * C + C * psi + _face_figure_sum(q)
    try:
        return twice.exact_div(2)
    except ValueError as exc:
        raise OddCoefficients(str(exc)) from None


def prism_cd(q: GradedPoset) -> NCPolynomial:
    return cd_index(q) * C + _face_figure_sum(q)


def bipyramid_cd(q: GradedPoset) -> NCPolynomial:
    return C * cd_index(q) + _face_figure_sum(q)


def split_rhs(q_plus: GradedPoset, q_minus: GradedPoset, q_hat: GradedPoset, crossers: Sequence) -> NCPolynomial:
    """Right side of the hyperplane-split identity.

    ``crossers`` lists, for each proper face meeting both open half-spaces,
    its slice as an element of ``q_hat`` (repeats allowed).
    """
    if q_plus.rank != q_minus.rank or q_hat.rank != q_plus.rank - 1:
        raise RankMismatch(f"ranks {q_plus.rank}, {q_minus.rank}, {q_hat.rank} are incompatible")
    return cd_index(q_plus) + cd_index(q_minus) - cd_index(q_hat) * C - _face_figure_sum(q_hat, crossers)


__all__ = [
    "FlagVector",
    "ab_index",
    "ab_to_cd",
    "bipyramid",
    "bipyramid_cd",
    "cartesian_product",
    "cd_index",
    "cd_words",
    "dual",
    "expand",
    "expand_cd_monomial",
    "flag_f_vector",
    "flag_h_vector",
    "interval_index",
    "is_eulerian",
    "mobius",
    "poset_product",
    "prism",
    "prism_cd",
    "pyramid",
    "pyramid_cd",
    "reverse",
    "simplex_cd",
    "simplex_product_cd",
    "split_rhs",
]
