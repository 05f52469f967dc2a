"""Rank-2 matroids ``M_alpha``: splits, the cd-index recursion, the three-part table.

``M_alpha`` has parallelism classes ``P_1, ..., P_k`` of sizes
``alpha_1, ..., alpha_k``, laid out as consecutive label blocks.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product
from math import comb, prod
from typing import Sequence

from .cdindex import C, D, cd_index, simplex_cd, simplex_product_cd
from .errors import BadM, DefinitionMismatch, IndexOutOfRange, InputError, InvariantViolation
from .matroid import (
    ElementSet,
    Matroid,
    check_composition,
    composition_blocks,
    full_set,
    labels,
    rank2_from_composition,
    submasks,
)
from .ncpoly import NCPolynomial, cd
from .polytope import face_lattice
from .split import SplitSpec, hyperplane_split

CROSS_CHECK_MAX_N = 8


def lambda_comp(alpha: Sequence[int], i: int) -> tuple[int, int, int]:
    """``(alpha_1 + ... + alpha_{i-1}, alpha_i, alpha_{i+1} + ...)`` for ``2 <= i <= len-1``."""
    if not 2 <= i <= len(alpha) - 1:
        raise IndexOutOfRange(f"lambda needs 2 <= i <= {len(alpha) - 1}, got {i}")
    return (sum(alpha[: i - 1]), alpha[i - 1], sum(alpha[i:]))


def mu_comp(alpha: Sequence[int], i: int) -> tuple[int, int]:
    """``(alpha_1 + ... + alpha_i, alpha_{i+1} + ...)`` for ``1 <= i <= len-1``."""
    if not 1 <= i <= len(alpha) - 1:
        raise IndexOutOfRange(f"mu needs 1 <= i <= {len(alpha) - 1}, got {i}")
    return (sum(alpha[:i]), sum(alpha[i:]))


def zero_deletion(beta: Sequence[int]) -> tuple[int, ...]:
    return tuple(b for b in beta if b)


def parallel_classes(m: Matroid) -> list[ElementSet]:
    """Parallelism classes of a loopless rank-2 matroid."""
    if m.rank != 2:
        raise InputError("parallelism classes are only used for rank 2")
    remaining = labels(m.ground)
    out = []
    while remaining:
        x = remaining[0]
        cls = 1 << (x - 1)
        for y in remaining[1:]:
            if (1 << (x - 1)) | (1 << (y - 1)) not in m.bases:
                cls |= 1 << (y - 1)
        out.append(cls)
        remaining = [e for e in remaining if not cls >> (e - 1) & 1]
    return out


def rank2_split_criterion(m: Matroid, s: ElementSet) -> bool:
    """Rank-2 split criterion: ``S`` and its complement are each unions of
    at least two parallelism classes."""
    comp = m.ground & ~s
    inside = outside = 0
    for p in parallel_classes(m):
        if p & s == p:
            inside += 1
        elif p & comp == p:
            outside += 1
        else:
            return False
    return inside >= 2 and outside >= 2


def rank2_split(alpha: Sequence[int], m: int) -> tuple[Matroid, Matroid]:
    """The two pieces of ``Q(M_alpha)`` cut by ``sum_{P_1..P_m} x_e = 1``.

    ``M1`` merges ``P_1..P_m`` into one class, ``M2`` merges ``P_{m+1}..P_k``.
    """
    alpha = tuple(alpha)
    check_composition(alpha)
    k = len(alpha)
    if k < 4 or not 2 <= m <= k - 2:
        raise BadM(f"need 2 <= m <= {k - 2} with at least four parts, got m={m} for {alpha}")
    m1 = rank2_from_composition((sum(alpha[:m]),) + alpha[m:])
    m2 = rank2_from_composition(alpha[:m] + (sum(alpha[m:]),))
    whole = rank2_from_composition(alpha)
    s = 0
    for block in composition_blocks(alpha)[:m]:
        s |= block
    res = hyperplane_split(whole, SplitSpec(s, 1))
    if not res.is_split or res.m_minus != m1 or res.m_plus != m2:
        raise InvariantViolation(f"rank-2 split of {alpha} at m={m} disagrees with the general test")
    return m1, m2


def rank2_crossing_subsets(alpha: Sequence[int], m: int) -> set[ElementSet]:
    """Proper ``T`` with ``M|T`` having at least four classes, at least two
    inside ``S = P_1 u ... u P_m`` and two outside."""
    blocks = composition_blocks(alpha)
    n = sum(alpha)
    out = set()
    for t in submasks(full_set(n)):
        if t == full_set(n):
            continue
        inside = sum(1 for b in blocks[:m] if b & t)
        outside = sum(1 for b in blocks[m:] if b & t)
        if inside >= 2 and outside >= 2:
            out.add(t)
    return out


def _direct(alpha: tuple[int, ...]) -> NCPolynomial:
    return _direct_sorted(tuple(sorted(alpha)))


@lru_cache(maxsize=None)
def _direct_sorted(alpha: tuple[int, ...]) -> NCPolynomial:
    # reordering the classes is a relabeling, so sorted alpha is a safe key
    return cd_index(face_lattice(rank2_from_composition(alpha)).poset)


def _two_block_sum(parts: Sequence[int]) -> NCPolynomial:
    total = NCPolynomial.zero()
    for i in range(2, len(parts) - 1):
        total = total + simplex_product_cd(*mu_comp(parts, i))
    return total


def _recursive(alpha: tuple[int, ...]) -> NCPolynomial:
    return _recursive_sorted(tuple(sorted(alpha)))


@lru_cache(maxsize=None)
def _recursive_sorted(alpha: tuple[int, ...]) -> NCPolynomial:
    k = len(alpha)
    if k == 2:
        return simplex_product_cd(*alpha)
    if k == 3:
        return _direct(alpha)
    n = sum(alpha)
    total = NCPolynomial.zero()
    for i in range(2, k):
        total = total + _direct(lambda_comp(alpha, i))
    total = total - _two_block_sum(alpha) * C
    for beta in product(*(range(a + 1) for a in alpha)):
        if beta == alpha:
            continue
        bar = zero_deletion(beta)
        if len(bar) < 4:
            continue
        weight = prod(comb(a, b) for a, b in zip(alpha, beta))
        total = total - (_two_block_sum(bar) * D * simplex_cd(n - sum(bar))) * weight
    return total


def cd_index_rank2(alpha: Sequence[int], method: str = "recursive") -> NCPolynomial:
    """cd-index of ``Q(M_alpha)``.

    ``direct`` uses the face lattice, ``recursive`` the splitting recursion
    (checked against the face lattice when ``n <= 8``), ``both`` always
    computes and compares both.
    """
    alpha = tuple(alpha)
    check_composition(alpha)
    if len(alpha) < 2:
        raise InputError(f"need at least two parts, got {alpha}")
    if method == "direct":
        return _direct(alpha)
    if method not in ("recursive", "both"):
        raise InputError(f"unknown method {method!r}")
    rec = _recursive(alpha)
    if method == "both" or sum(alpha) <= CROSS_CHECK_MAX_N:
        direct = _direct(alpha)
        if direct != rec:
            raise DefinitionMismatch(f"recursion gives {rec}, face lattice gives {direct} for {alpha}")
    return rec


_TABLE1 = [
    ((1, 1, 1), "c^2 + d"),
    ((2, 1, 1), "c^3 + 3cd + 3dc"),
    ((3, 1, 1), "c^4 + 4c^2d + 8cdc + 5dc^2 + 7d^2"),
    ((2, 2, 1), "c^4 + 5c^2d + 10cdc + 6dc^2 + 10d^2"),
    ((4, 1, 1), "c^5 + 5c^3d + 13c^2dc + 15cdc^2 + 20cd^2 + 7dc^3 + 18dcd + 22d^2c"),
    ((3, 2, 1), "c^5 + 6c^3d + 17c^2dc + 20cdc^2 + 28cd^2 + 9dc^3 + 26dcd + 33d^2c"),
    ((2, 2, 2), "c^5 + 7c^3d + 21c^2dc + 24cdc^2 + 36cd^2 + 10dc^3 + 34dcd + 42d^2c"),
    ((5, 1, 1), "c^6 + 6c^4d + 19c^3dc + 29c^2dc^2 + 38c^2d^2 + 24cdc^3 + 60cdcd + 72cd^2c"
                " + 9dc^4 + 33dc^2d + 65dcdc + 47d^2c^2 + 64d^3"),
    ((4, 2, 1), "c^6 + 7c^4d + 24c^3dc + 39c^2dc^2 + 52c^2d^2 + 33cdc^3 + 86cdcd + 104cd^2c"
                " + 12dc^4 + 48dc^2d + 98dcdc + 72d^2c^2 + 100d^3"),
    ((3, 3, 1), "c^6 + 7c^4d + 25c^3dc + 42c^2dc^2 + 55c^2d^2 + 36cdc^3 + 93cdcd + 114cd^2c"
                " + 13dc^4 + 52dc^2d + 109dcdc + 81d^2c^2 + 112d^3"),
    ((3, 2, 2), "c^6 + 8c^4d + 30c^3dc + 51c^2dc^2 + 69c^2d^2 + 42cdc^3 + 116cdcd + 142cd^2c"
                " + 14dc^4 + 64dc^2d + 136dcdc + 98d^2c^2 + 142d^3"),
]


def table1() -> list[tuple[tuple[int, ...], NCPolynomial]]:
    """Published cd-indices of ``Q(M_alpha)`` for three-part ``alpha``."""
    return [(alpha, cd(text)) for alpha, text in _TABLE1]


__all__ = [
    "cd_index_rank2",
    "rank2_split_criterion",
    "lambda_comp",
    "mu_comp",
    "parallel_classes",
    "rank2_crossing_subsets",
    "rank2_split",
    "table1",
    "zero_deletion",
]
