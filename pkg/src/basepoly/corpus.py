"""Named test matroids used by the verification suite and the tests."""

from __future__ import annotations

from itertools import combinations

import numpy as np

from .matroid import (
    Matroid,
    compositions,
    disjoint_sum,
    matroid_from_bases,
    rank2_from_composition,
    to_mask,
    uniform,
)


def rank2_corpus(max_n: int) -> dict[str, Matroid]:
    out = {}
    for n in range(2, max_n + 1):
        for alpha in compositions(n, 2):
            out["M" + "".join(map(str, alpha))] = rank2_from_composition(alpha)
    return out


def uniform_corpus(max_n: int, proper: bool = True) -> dict[str, Matroid]:
    """``U_{r,n}``; with ``proper`` only ``0 < r < n``."""
    out = {}
    for n in range(1, max_n + 1):
        lo, hi = (1, n - 1) if proper else (0, n)
        for r in range(lo, hi + 1):
            out[f"U{r}{n}"] = uniform(r, n)
    return out


def direct_sum_corpus(max_n: int = 6) -> dict[str, Matroid]:
    pieces = {
        "U12+U12": (uniform(1, 2), uniform(1, 2)),
        "U12+U13": (uniform(1, 2), uniform(1, 3)),
        "U12+U23": (uniform(1, 2), uniform(2, 3)),
        "U12+U12+U12": (uniform(1, 2), uniform(1, 2), uniform(1, 2)),
        "U12+U24": (uniform(1, 2), uniform(2, 4)),
        "M211+U12": (rank2_from_composition((2, 1, 1)), uniform(1, 2)),
        "U11+U23": (uniform(1, 1), uniform(2, 3)),
        "U01+U13+U11": (uniform(0, 1), uniform(1, 3), uniform(1, 1)),
    }
    out = {}
    for name, ms in pieces.items():
        m = disjoint_sum(*ms)
        if m.n <= max_n:
            out[name] = m
    return out


def _gf2_rank(cols: list[int]) -> int:
    basis: list[int] = []
    for v in cols:
        for b in basis:
            v = min(v, v ^ b)
        if v:
            basis.append(v)
    return len(basis)


def binary_matroid(matrix) -> Matroid:
    """Column matroid of a 0/1 matrix over GF(2)."""
    a = np.asarray(matrix, dtype=np.uint8) & 1
    rows, n = a.shape
    cols = [int("".join(map(str, a[:, j])) or "0", 2) for j in range(n)]
    r = _gf2_rank(cols)
    bases = [to_mask(c) for c in combinations(range(1, n + 1), r)
             if _gf2_rank([cols[j - 1] for j in c]) == r]
    return matroid_from_bases(n, bases)


def random_binary_matroids(count: int = 8, seed: int = 2024, min_n: int = 4, max_n: int = 6) -> dict[str, Matroid]:
    """Seeded random GF(2) column matroids of rank at least 2."""
    rng = np.random.default_rng(seed)
    out = {}
    while len(out) < count:
        n = int(rng.integers(min_n, max_n + 1))
        rows = int(rng.integers(2, n))
        m = binary_matroid(rng.integers(0, 2, size=(rows, n)))
        if m.rank < 2:
            continue
        out[f"bin{len(out)}_n{n}_r{m.rank}"] = m
    return out


def standard_corpus(max_n: int = 6) -> dict[str, Matroid]:
    """Rank-2 ``M_alpha``, proper uniform matroids, direct sums and random binary matroids."""
    out = {}
    out.update(rank2_corpus(max_n))
    out.update(uniform_corpus(max_n))
    out.update(direct_sum_corpus(max_n))
    out.update(random_binary_matroids(max_n=min(max_n, 6)))
    return out


def split_corpus() -> dict[str, Matroid]:
    """Rank-2 ``M_alpha`` with ``n <= 7`` and ``U_{r,n}`` with ``n <= 6``."""
    out = rank2_corpus(7)
    out.update(uniform_corpus(6))
    return out


def named(name: str) -> Matroid:
    """Look up small named examples: ``U24``, ``M211``, ``U12+U12`` and so on."""
    for table in (uniform_corpus(8, proper=False), rank2_corpus(8), direct_sum_corpus(8)):
        if name in table:
            return table[name]
    raise KeyError(name)
