"""Matroids given by an explicit family of bases.

Element sets are plain ``int`` bit masks: label ``i`` (1-based, as at every
user-facing boundary) is bit ``i - 1``.  A :class:`Matroid` keeps its own
ground set as a mask, so minors retain the original labels of the parent.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

from . import kernels
from .errors import (
    BadParameters,
    ContractNonexistent,
    EmptyFamily,
    ExchangeAxiomViolated,
    GroundSetTooLarge,
    InputError,
    LabelCollision,
    UnequalSizes,
)

ElementSet = int

DEFAULT_MAX_N = 12


def max_ground_size() -> int:
    """Ground-set cap; ``MATROID_MAX_N`` in the environment overrides it."""
    value = os.environ.get("MATROID_MAX_N")
    if value is None:
        return DEFAULT_MAX_N
    try:
        return int(value)
    except ValueError:
        raise InputError(f"MATROID_MAX_N must be an integer, got {value!r}") from None


def check_size(n: int) -> None:
    cap = max_ground_size()
    if n > cap:
        raise GroundSetTooLarge(f"ground set of size {n} exceeds the cap {cap} (set MATROID_MAX_N)")


# ---------------------------------------------------------------------------
# element sets


def to_mask(labels: Iterable[int]) -> ElementSet:
    mask = 0
    for e in labels:
        if e < 1:
            raise InputError(f"element labels are 1-based, got {e}")
        mask |= 1 << (e - 1)
    return mask


def labels(mask: ElementSet) -> list[int]:
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def full_set(n: int) -> ElementSet:
    return (1 << n) - 1


def popcount(mask: ElementSet) -> int:
    return mask.bit_count()


def format_set(mask: ElementSet) -> str:
    """Compact label string, e.g. ``{1,2}`` -> ``"12"`` (commas once labels exceed 9)."""
    ls = labels(mask)
    if not ls:
        return "{}"
    if ls[-1] <= 9:
        return "".join(map(str, ls))
    return "{" + ",".join(map(str, ls)) + "}"


def submasks(mask: ElementSet) -> Iterable[ElementSet]:
    """All subsets of ``mask``, including 0 and ``mask`` itself."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


# ---------------------------------------------------------------------------
# the matroid type


@dataclass(frozen=True)
class Matroid:
    """A matroid on the ground set ``ground`` (a subset of ``[n]``).

    ``bases`` is trusted here; use :func:`matroid_from_bases` to validate
    external input.
    """

    n: int
    bases: frozenset[ElementSet]
    ground: ElementSet = field(default=-1)

    def __post_init__(self):
        if self.ground == -1:
            object.__setattr__(self, "ground", full_set(self.n))

    @cached_property
    def rank(self) -> int:
        return next(iter(self.bases)).bit_count()

    @cached_property
    def sorted_bases(self) -> tuple[ElementSet, ...]:
        return tuple(sorted(self.bases, key=lambda b: labels(b)))

    def rank_of(self, s: ElementSet) -> int:
        return max((b & s).bit_count() for b in self.bases)

    @cached_property
    def components(self) -> tuple[ElementSet, ...]:
        return tuple(connected_components(self))

    @property
    def is_connected(self) -> bool:
        return len(self.components) == 1

    @property
    def size(self) -> int:
        return self.ground.bit_count()

    def __repr__(self):
        bs = ",".join(format_set(b) for b in self.sorted_bases)
        return f"Matroid(n={self.n}, ground={format_set(self.ground)}, bases=[{bs}])"

    def to_json(self) -> dict:
        return {"n": self.n, "bases": [labels(b) for b in self.sorted_bases]}


def _exchange_witness(bases: Sequence[ElementSet]):
    return kernels.exchange_violation(list(bases))


def is_basis_family(n: int, sets: Iterable[ElementSet]) -> bool:
    """True iff ``sets`` is a nonempty equal-size family satisfying basis exchange."""
    family = set(sets)
    if not family:
        return False
    if any(s >> n for s in family):
        return False
    if len({s.bit_count() for s in family}) != 1:
        return False
    return _exchange_witness(sorted(family)) is None


def matroid_from_bases(n: int, bases: Iterable[ElementSet | Iterable[int]]) -> Matroid:
    """Validate a basis family and build a :class:`Matroid` on ``[n]``.

    Bases may be given as masks or as iterables of 1-based labels.
    """
    if n < 1:
        raise BadParameters(f"ground set size must be >= 1, got {n}")
    check_size(n)
    family = set()
    for b in bases:
        mask = b if isinstance(b, int) else to_mask(b)
        if mask >> n:
            raise BadParameters(f"basis {labels(mask)} is not a subset of [{n}]")
        family.add(mask)
    if not family:
        raise EmptyFamily("a matroid needs at least one basis")
    sizes = {b.bit_count() for b in family}
    if len(sizes) != 1:
        raise UnequalSizes(f"bases have different sizes {sorted(sizes)}")
    witness = _exchange_witness(sorted(family))
    if witness is not None:
        b1, b2, x = witness
        raise ExchangeAxiomViolated(
            labels(b1), labels(b2), x.bit_length(),
            f"no y in {labels(b2 & ~b1)} exchanges {x.bit_length()} out of {labels(b1)}",
        )
    return Matroid(n, frozenset(family))


def uniform(r: int, n: int) -> Matroid:
    if not 0 <= r <= n or n < 1:
        raise BadParameters(f"uniform matroid needs 0 <= r <= n and n >= 1, got r={r}, n={n}")
    check_size(n)
    bases = frozenset(to_mask(c) for c in combinations(range(1, n + 1), r))
    return Matroid(n, bases)


def composition_blocks(alpha: Sequence[int]) -> list[ElementSet]:
    """Consecutive label blocks of sizes ``alpha`` (zero parts give empty blocks)."""
    blocks, start = [], 0
    for a in alpha:
        blocks.append(((1 << a) - 1) << start)
        start += a
    return blocks


def rank2_from_composition(alpha: Sequence[int]) -> Matroid:
    """Loopless rank-2 matroid whose parallelism classes have sizes ``alpha``."""
    alpha = tuple(alpha)
    if len(alpha) < 2 or any(a < 1 for a in alpha):
        raise BadParameters(f"need a strict composition with at least 2 parts, got {alpha}")
    n = sum(alpha)
    check_size(n)
    blocks = composition_blocks(alpha)
    bases = set()
    for p, q in combinations(blocks, 2):
        for x in labels(p):
            for y in labels(q):
                bases.add(to_mask((x, y)))
    return Matroid(n, frozenset(bases))


# ---------------------------------------------------------------------------
# minors and sums


def rank(m: Matroid, s: ElementSet) -> int:
    return m.rank_of(s)


def restriction(m: Matroid, s: ElementSet) -> Matroid:
    s &= m.ground
    rs = m.rank_of(s)
    bases = frozenset(b & s for b in m.bases if (b & s).bit_count() == rs)
    return Matroid(m.n, bases, s)


def contraction(m: Matroid, s: ElementSet) -> Matroid:
    s &= m.ground
    rs = m.rank_of(s)
    bases = frozenset(b & ~s for b in m.bases if (b & s).bit_count() == rs)
    if not bases:  # pragma: no cover - unreachable for a valid basis family
        raise ContractNonexistent(f"contracting {labels(s)} leaves no bases")
    return Matroid(m.n, bases, m.ground & ~s)


def deletion(m: Matroid, s: ElementSet) -> Matroid:
    return restriction(m, m.ground & ~s)


def minor(m: Matroid, upper: ElementSet, lower: ElementSet) -> Matroid:
    """``(M|upper)/lower`` for ``lower`` a subset of ``upper``."""
    return contraction(restriction(m, upper), lower)


def direct_sum(m1: Matroid, m2: Matroid) -> Matroid:
    """Direct sum of matroids on disjoint ground sets (labels are kept)."""
    if m1.ground & m2.ground:
        raise LabelCollision(f"ground sets overlap in {labels(m1.ground & m2.ground)}")
    bases = frozenset(b1 | b2 for b1 in m1.bases for b2 in m2.bases)
    return Matroid(max(m1.n, m2.n), bases, m1.ground | m2.ground)


def shifted(m: Matroid, offset: int) -> Matroid:
    """Relabel every element ``e`` as ``e + offset``."""
    if offset < 0:
        raise BadParameters("offset must be nonnegative")
    return Matroid(m.n + offset, frozenset(b << offset for b in m.bases), m.ground << offset)


def disjoint_sum(*ms: Matroid) -> Matroid:
    """Direct sum after relabeling each summand past the previous ones."""
    out = ms[0]
    for m in ms[1:]:
        out = direct_sum(out, shifted(m, out.n))
    return out


def connected_components(m: Matroid) -> list[ElementSet]:
    """Classes of the ground set under single-element basis exchange, sorted."""
    parent = {e: e for e in labels(m.ground)}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    bases = m.bases
    for b in bases:
        for x in labels(b):
            rest = b & ~(1 << (x - 1))
            for y in labels(m.ground & ~b):
                if rest | (1 << (y - 1)) in bases:
                    rx, ry = find(x), find(y)
                    if rx != ry:
                        parent[rx] = ry
    classes: dict[int, int] = {}
    for e in parent:
        r = find(e)
        classes[r] = classes.get(r, 0) | (1 << (e - 1))
    return sorted(classes.values(), key=lambda c: (c & -c))


# ---------------------------------------------------------------------------
# compositions


def parse_composition(text: str, weak: bool = False) -> tuple[int, ...]:
    try:
        parts = tuple(int(t) for t in text.replace(" ", "").split(",") if t != "")
    except ValueError:
        raise InputError(f"bad composition {text!r}") from None
    check_composition(parts, weak=weak)
    return parts


def check_composition(parts: Sequence[int], n: int | None = None, weak: bool = False) -> None:
    lo = 0 if weak else 1
    if not parts or any(p < lo for p in parts):
        kind = "weak composition" if weak else "composition"
        raise BadParameters(f"{tuple(parts)} is not a {kind}")
    if n is not None and sum(parts) != n:
        raise BadParameters(f"{tuple(parts)} does not sum to {n}")


def compositions(n: int, min_parts: int = 1):
    """All strict compositions of ``n`` with at least ``min_parts`` parts."""
    if n == 0:
        return
    for cuts in range(1 << (n - 1)):
        parts, run = [], 1
        for i in range(n - 1):
            if cuts >> i & 1:
                parts.append(run)
                run = 1
            else:
                run += 1
        parts.append(run)
        if len(parts) >= min_parts:
            yield tuple(parts)
