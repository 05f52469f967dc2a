"""Finite posets and graded posets with a bottom and a top.

Orders are stored as a dense ``uint8`` matrix ``leq``.  Graded posets keep
their elements sorted by rank, with the bottom first and the top last; the
kernels in :mod:`basepoly.kernels` rely on that ordering.
"""

from __future__ import annotations

from functools import cached_property
from typing import Hashable, Iterable, Sequence

import numpy as np

from .errors import InputError, NotComparable, NotFaceLattice, NotGraded


def _closure_from_covers(k: int, covers: Iterable[tuple[int, int]]) -> np.ndarray:
    """Reflexive-transitive closure of a cover relation given by index pairs."""
    up_adj = [[] for _ in range(k)]
    indeg = [0] * k
    for a, b in covers:
        up_adj[a].append(b)
        indeg[b] += 1
    order, stack = [], [i for i in range(k) if indeg[i] == 0]
    indeg = list(indeg)
    while stack:
        v = stack.pop()
        order.append(v)
        for w in up_adj[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                stack.append(w)
    if len(order) != k:
        raise InputError("cover relation has a cycle")
    up = [0] * k
    for v in reversed(order):
        m = 1 << v
        for w in up_adj[v]:
            m |= up[w]
        up[v] = m
    leq = np.zeros((k, k), dtype=np.uint8)
    for v in range(k):
        m, j = up[v], 0
        while m:
            if m & 1:
                leq[v, j] = 1
            m >>= 1
            j += 1
    return leq


class FinitePoset:
    """A finite poset on labelled elements."""

    def __init__(self, elements: Sequence[Hashable], leq: np.ndarray):
        self.elements = list(elements)
        self.leq = np.asarray(leq, dtype=np.uint8)
        self.index = {e: i for i, e in enumerate(self.elements)}
        if len(self.index) != len(self.elements):
            raise InputError("poset elements must be distinct")

    @classmethod
    def from_relations(cls, elements, relations: Iterable[tuple]) -> "FinitePoset":
        """Poset generated by ``a <= b`` for each pair in ``relations``."""
        elements = list(elements)
        idx = {e: i for i, e in enumerate(elements)}
        pairs = [(idx[a], idx[b]) for a, b in relations if a != b]
        leq = _closure_from_covers(len(elements), pairs)
        return cls(elements, leq)

    def __len__(self):
        return len(self.elements)

    def le(self, a, b) -> bool:
        return bool(self.leq[self.index[a], self.index[b]])

    def lt(self, a, b) -> bool:
        return a != b and self.le(a, b)

    def relations(self) -> set[tuple]:
        """All strict relations ``a < b`` as label pairs."""
        ii, jj = np.nonzero(self.leq)
        return {(self.elements[i], self.elements[j]) for i, j in zip(ii, jj) if i != j}

    @cached_property
    def cover_indices(self) -> list[tuple[int, int]]:
        strict = self.leq.astype(np.float32) - np.eye(len(self), dtype=np.float32)
        between = (strict @ strict) > 0
        ii, jj = np.nonzero((strict > 0) & ~between)
        return sorted(zip(ii.tolist(), jj.tolist()))

    def cover_relations(self) -> list[tuple]:
        return [(self.elements[i], self.elements[j]) for i, j in self.cover_indices]

    def order_ideals(self) -> list[frozenset]:
        """All down-closed subsets, as frozensets of labels."""
        k = len(self)
        below = []
        for j in range(k):
            m = 0
            for i in np.flatnonzero(self.leq[:, j]):
                m |= 1 << int(i)
            below.append(m)
        ideals = []
        for s in range(1 << k):
            ok = True
            t = s
            while t:
                j = (t & -t).bit_length() - 1
                t &= t - 1
                if below[j] & ~s:
                    ok = False
                    break
            if ok:
                ideals.append(frozenset(self.elements[j] for j in range(k) if s >> j & 1))
        return ideals

    def same_order(self, other: "FinitePoset") -> bool:
        return set(self.elements) == set(other.elements) and self.relations() == other.relations()

    def to_json(self, name=str) -> dict:
        return {
            "elements": [name(e) for e in self.elements],
            "cover_relations": [[name(a), name(b)] for a, b in self.cover_relations()],
        }

    def __repr__(self):
        rel = ", ".join(f"{a}<{b}" for a, b in self.cover_relations())
        return f"{type(self).__name__}({len(self)} elements: {rel})"


class GradedPoset(FinitePoset):
    """Graded poset with a unique minimum (rank 0) and maximum.

    The constructor sorts elements by rank and checks that every cover
    relation raises the rank by exactly one.
    """

    def __init__(self, elements, leq, ranks, check: bool = True):
        elements = list(elements)
        ranks = np.asarray(ranks, dtype=np.int64)
        leq = np.asarray(leq, dtype=np.uint8)
        order = np.argsort(ranks, kind="stable")
        if not np.array_equal(order, np.arange(len(order))):
            elements = [elements[i] for i in order]
            ranks = ranks[order]
            leq = leq[np.ix_(order, order)]
        super().__init__(elements, leq)
        self.ranks = ranks
        if check:
            self._validate()

    def _validate(self):
        k = len(self)
        if k == 0:
            raise NotGraded("empty poset")
        if self.ranks[0] != 0 or (k > 1 and self.ranks[1] == 0):
            raise NotGraded("need a unique element of rank 0")
        if k > 1 and self.ranks[-2] == self.ranks[-1]:
            raise NotGraded("need a unique element of maximal rank")
        if not (self.leq[0].all() and self.leq[:, -1].all()):
            raise NotGraded("rank-0 element must be the bottom and the top must be maximal")
        strict = self.leq.copy()
        np.fill_diagonal(strict, 0)
        ii, jj = np.nonzero(strict)
        if np.any(self.ranks[jj] <= self.ranks[ii]):
            raise NotGraded("order relation does not increase rank")
        # every x < y two or more ranks apart must pass through rank(x) + 1
        layers = self.layers
        for r in range(len(layers) - 2):
            lo, mid = layers[r], layers[r + 1]
            hi = np.flatnonzero(self.ranks >= r + 2)
            if not len(lo) or not len(hi):
                continue
            if not len(mid):
                raise NotGraded(f"no elements of rank {r + 1}")
            direct = self.leq[np.ix_(lo, hi)].astype(bool)
            via = (self.leq[np.ix_(lo, mid)].astype(np.float32) @ self.leq[np.ix_(mid, hi)].astype(np.float32)) > 0
            if np.any(direct & ~via):
                raise NotGraded("some cover relation skips a rank")

    @classmethod
    def from_covers(cls, elements, covers: Iterable[tuple], ranks=None) -> "GradedPoset":
        elements = list(elements)
        idx = {e: i for i, e in enumerate(elements)}
        pairs = [(idx[a], idx[b]) for a, b in covers]
        leq = _closure_from_covers(len(elements), pairs)
        if ranks is None:
            ranks = [0] * len(elements)
            below = [[] for _ in elements]
            for a, b in pairs:
                below[b].append(a)
            done = [False] * len(elements)

            def depth(v):
                if not done[v]:
                    ds = {depth(u) + 1 for u in below[v]} or {0}
                    if len(ds) != 1:
                        raise NotGraded(f"element {elements[v]!r} has maximal chains of different lengths")
                    ranks[v] = ds.pop()
                    done[v] = True
                return ranks[v]

            for v in range(len(elements)):
                depth(v)
        return cls(elements, leq, ranks)

    @cached_property
    def layers(self) -> list[np.ndarray]:
        return [np.flatnonzero(self.ranks == r) for r in range(self.rank + 1)]

    @property
    def rank(self) -> int:
        """Rank of the top element."""
        return int(self.ranks[-1])

    @property
    def bottom(self):
        return self.elements[0]

    @property
    def top(self):
        return self.elements[-1]

    def rank_of(self, e) -> int:
        return int(self.ranks[self.index[e]])

    @cached_property
    def cover_indices(self) -> list[tuple[int, int]]:
        strict = self.leq.copy()
        np.fill_diagonal(strict, 0)
        ii, jj = np.nonzero(strict)
        keep = self.ranks[jj] == self.ranks[ii] + 1
        return sorted(zip(ii[keep].tolist(), jj[keep].tolist()))

    def rank_counts(self) -> list[int]:
        return [len(layer) for layer in self.layers]

    def interval(self, x, y) -> "GradedPoset":
        i, j = self.index[x], self.index[y]
        if not self.leq[i, j]:
            raise NotComparable(f"{x!r} is not below {y!r}")
        keep = np.flatnonzero(self.leq[i] & self.leq[:, j])
        return GradedPoset(
            [self.elements[t] for t in keep],
            self.leq[np.ix_(keep, keep)],
            self.ranks[keep] - self.ranks[i],
            check=False,
        )

    def dual(self) -> "GradedPoset":
        rev = np.arange(len(self))[::-1]
        return GradedPoset(
            [self.elements[t] for t in rev],
            self.leq.T[np.ix_(rev, rev)],
            self.rank - self.ranks[rev],
            check=False,
        )

    def relabel(self, fn) -> "GradedPoset":
        return GradedPoset([fn(e) for e in self.elements], self.leq, self.ranks, check=False)

    def to_json(self, name=str) -> dict:
        out = super().to_json(name)
        out["ranks"] = [int(r) for r in self.ranks]
        return out

    @classmethod
    def from_json(cls, data: dict) -> "GradedPoset":
        elements = list(data["elements"])
        covers = [tuple(c) for c in data["cover_relations"]]
        ranks = data.get("ranks")
        return cls.from_covers(elements, covers, ranks)

    def hasse_text(self, name=str) -> str:
        """Text Hasse diagram, top rank first, each element with its lower covers."""
        below = {i: [] for i in range(len(self))}
        for a, b in self.cover_indices:
            below[b].append(a)
        lines = []
        for r in range(self.rank, -1, -1):
            for t in self.layers[r]:
                down = ", ".join(name(self.elements[a]) for a in below[int(t)])
                lines.append(f"[{r}] {name(self.elements[int(t)])}" + (f"  > {down}" if down else ""))
        return "\n".join(lines)


# ---------------------------------------------------------------------------
# standard constructions


def chain(length: int) -> GradedPoset:
    """Chain 0 < 1 < ... < length."""
    k = length + 1
    leq = np.triu(np.ones((k, k), dtype=np.uint8))
    return GradedPoset(list(range(k)), leq, list(range(k)))


def boolean_lattice(m: int) -> GradedPoset:
    """Subsets of ``{1..m}`` as bit masks; the face lattice of a simplex with ``m`` vertices."""
    masks = list(range(1 << m))
    ranks = [s.bit_count() for s in masks]
    arr = np.array(masks, dtype=np.int64)
    leq = ((arr[:, None] & ~arr[None, :]) == 0).astype(np.uint8)
    return GradedPoset(masks, leq, ranks)


def cartesian_product(p: GradedPoset, q: GradedPoset) -> GradedPoset:
    """Componentwise order on pairs, ranks added."""
    elements = [(a, b) for a in p.elements for b in q.elements]
    leq = np.kron(p.leq, q.leq)
    ranks = (p.ranks[:, None] + q.ranks[None, :]).ravel()
    return GradedPoset(elements, leq, ranks, check=False)


def _require_face_lattice(p: GradedPoset):
    if not isinstance(p, GradedPoset) or len(p) < 2:
        raise NotFaceLattice("a face lattice has at least the empty face and the polytope")


def poset_product(p: GradedPoset, q: GradedPoset) -> GradedPoset:
    """Face lattice of the product polytope.

    Nonempty faces are pairs of nonempty faces, ranked so the result is again
    a face lattice; a new bottom ``None`` plays the empty face.
    """
    _require_face_lattice(p)
    _require_face_lattice(q)
    ps, qs = np.arange(1, len(p)), np.arange(1, len(q))
    elements = [None] + [(p.elements[a], q.elements[b]) for a in ps for b in qs]
    k = len(elements)
    leq = np.zeros((k, k), dtype=np.uint8)
    leq[0, :] = 1
    leq[1:, 1:] = np.kron(p.leq[np.ix_(ps, ps)], q.leq[np.ix_(qs, qs)])
    ranks = np.concatenate([[0], (p.ranks[ps][:, None] + q.ranks[qs][None, :] - 1).ravel()])
    return GradedPoset(elements, leq, ranks, check=False)


def pyramid(p: GradedPoset) -> GradedPoset:
    """Face lattice of the pyramid: each face ``F`` gives ``(F, 0)`` and its cone ``(F, 1)``."""
    _require_face_lattice(p)
    return cartesian_product(p, chain(1))


def prism(p: GradedPoset) -> GradedPoset:
    _require_face_lattice(p)
    return poset_product(p, boolean_lattice(2))


def bipyramid(p: GradedPoset) -> GradedPoset:
    """Face lattice of the bipyramid over a polytope with face lattice ``p``.

    Proper faces ``F`` of the base appear as ``(F, 0)``, ``(F, '+')`` and
    ``(F, '-')``; the whole bipyramid is the new top ``'top'``.
    """
    _require_face_lattice(p)
    proper = np.arange(len(p) - 1)
    sub = p.leq[np.ix_(proper, proper)]
    m = len(proper)
    elements = [(p.elements[i], tag) for tag in (0, "+", "-") for i in proper] + ["top"]
    k = 3 * m + 1
    leq = np.zeros((k, k), dtype=np.uint8)
    for a in range(3):
        for b in range(3):
            if a == b or a == 0:
                leq[a * m:(a + 1) * m, b * m:(b + 1) * m] = sub
    leq[:, -1] = 1
    ranks = np.concatenate([p.ranks[proper], p.ranks[proper] + 1, p.ranks[proper] + 1, [p.rank + 1]])
    return GradedPoset(elements, leq, ranks, check=False)


def isomorphic(p: GradedPoset, q: GradedPoset) -> bool:
    """Exact isomorphism test for small graded posets (backtracking by rank)."""
    if p.rank_counts() != q.rank_counts() or len(p.cover_indices) != len(q.cover_indices):
        return False
    k = len(p)
    pl, ql = p.leq.astype(bool), q.leq.astype(bool)
    pdeg = [(int(pl[i].sum()), int(pl[:, i].sum())) for i in range(k)]
    qdeg = [(int(ql[i].sum()), int(ql[:, i].sum())) for i in range(k)]
    cand = [[j for j in range(k) if q.ranks[j] == p.ranks[i] and qdeg[j] == pdeg[i]] for i in range(k)]
    assign = [-1] * k
    used = [False] * k

    def extend(i):
        if i == k:
            return True
        for j in cand[i]:
            if used[j]:
                continue
            if all(pl[i, t] == ql[j, assign[t]] and pl[t, i] == ql[assign[t], j] for t in range(i)):
                assign[i], used[j] = j, True
                if extend(i + 1):
                    return True
                used[j] = False
        assign[i] = -1
        return False

    return extend(0)


__all__ = [
    "FinitePoset",
    "GradedPoset",
    "chain",
    "boolean_lattice",
    "cartesian_product",
    "poset_product",
    "pyramid",
    "prism",
    "bipyramid",
    "isomorphic",
]
