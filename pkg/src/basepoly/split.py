"""Hyperplane splits of matroid base polytopes.

A split is given by ``S`` and ``k`` and cuts ``Q(M)`` along
``sum_{e in S} x_e = k``.  :func:`hyperplane_split` decides it from rank and
minor conditions; :func:`brute_force_split_oracle` decides it directly from
the three basis families, and :func:`verify_split_identity` checks the
cd-index identity on the pieces.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .cdindex import cd_index, split_rhs
from .errors import IdentityFailed, InvalidSplitSpec, InvariantViolation
from .matroid import (
    ElementSet,
    Matroid,
    contraction,
    format_set,
    is_basis_family,
    labels,
    restriction,
    to_mask,
)
from .ncpoly import NCPolynomial
from .polytope import face_lattice, polytope_dimension

COND_I = "condition (i)"
COND_II = "condition (ii)"


@dataclass(frozen=True)
class SplitSpec:
    """The hyperplane ``sum_{e in s} x_e = k``."""

    s: ElementSet
    k: int

    @classmethod
    def of(cls, s, k: int) -> "SplitSpec":
        return cls(s if isinstance(s, int) else to_mask(s), k)

    def validate(self, m: Matroid) -> None:
        if not 1 <= self.k <= m.rank - 1:
            raise InvalidSplitSpec(f"k must satisfy 1 <= k <= r-1 = {m.rank - 1}, got {self.k}")
        if self.s & ~m.ground:
            raise InvalidSplitSpec(f"S = {labels(self.s)} is not inside the ground set")
        if self.s == 0 or self.s == m.ground:
            raise InvalidSplitSpec("S must be a nonempty proper subset of the ground set")

    def __repr__(self):
        return f"SplitSpec(S={format_set(self.s)}, k={self.k})"


@dataclass
class SplitResult:
    is_split: bool
    reason: str | None = None
    m_plus: Matroid | None = None
    m_minus: Matroid | None = None
    m_hat: Matroid | None = None

    def to_json(self) -> dict:
        out = {"is_split": self.is_split, "failed_condition": self.reason}
        for name in ("m_plus", "m_minus", "m_hat"):
            m = getattr(self, name)
            out[name] = m.to_json() if m is not None else None
        return out


def _counts(m: Matroid, s: ElementSet) -> dict[ElementSet, int]:
    return {b: (b & s).bit_count() for b in m.bases}


def check_condition_i(m: Matroid, spec: SplitSpec) -> bool:
    spec.validate(m)
    comp = m.ground & ~spec.s
    return m.rank_of(spec.s) > spec.k and m.rank_of(comp) > m.rank - spec.k


def _independent(m: Matroid, i: ElementSet) -> bool:
    return any(b & i == i for b in m.bases)


def _minors_agree(m: Matroid, side: ElementSet, size: int, other: ElementSet) -> bool:
    """All ``(M/I)|other`` agree over independent ``I`` in ``side`` of ``size``
    elements whose contraction leaves ``other`` with full remaining rank."""
    want = m.rank - size
    seen = None
    for combo in combinations(labels(side), size):
        i = to_mask(combo)
        if not _independent(m, i):
            continue
        piece = restriction(contraction(m, i), other)
        if piece.rank != want:
            continue
        if seen is None:
            seen = piece.bases
        elif piece.bases != seen:
            return False
    return True


def check_condition_ii(m: Matroid, spec: SplitSpec) -> bool:
    spec.validate(m)
    return _minors_agree(m, spec.s, spec.k, m.ground & ~spec.s)


def check_condition_ii_dual(m: Matroid, spec: SplitSpec) -> bool:
    spec.validate(m)
    comp = m.ground & ~spec.s
    return _minors_agree(m, comp, m.rank - spec.k, spec.s)


def _pieces(m: Matroid, spec: SplitSpec):
    counts = _counts(m, spec.s)
    k = spec.k
    plus = frozenset(b for b, c in counts.items() if c >= k)
    minus = frozenset(b for b, c in counts.items() if c <= k)
    hat = frozenset(b for b, c in counts.items() if c == k)
    return plus, minus, hat


def hyperplane_split(m: Matroid, spec: SplitSpec) -> SplitResult:
    spec.validate(m)
    ii = check_condition_ii(m, spec)
    if ii != check_condition_ii_dual(m, spec):
        raise InvariantViolation(f"(ii) and its dual disagree on {m!r}, {spec!r}")
    if not check_condition_i(m, spec):
        return SplitResult(False, COND_I)
    if not ii:
        return SplitResult(False, COND_II)

    plus, minus, hat = _pieces(m, spec)
    for name, fam in (("M+", plus), ("M-", minus), ("M^", hat)):
        if not is_basis_family(m.n, fam):
            raise InvariantViolation(f"{name} is not a matroid for {m!r}, {spec!r}")
    if plus | minus != m.bases or plus & minus != hat:
        raise InvariantViolation(f"pieces do not partition the bases for {spec!r}")
    pieces = [Matroid(m.n, fam, m.ground) for fam in (plus, minus, hat)]
    if polytope_dimension(pieces[2]) != polytope_dimension(m) - 1:
        raise InvariantViolation(f"the slice is not a facet of the pieces for {spec!r}")
    return SplitResult(True, None, *pieces)


def brute_force_split_oracle(m: Matroid, spec: SplitSpec) -> bool:
    """Split test straight from the basis families, without the rank and minor conditions."""
    spec.validate(m)
    counts = _counts(m, spec.s).values()
    if not (any(c > spec.k for c in counts) and any(c < spec.k for c in counts)):
        return False
    return all(is_basis_family(m.n, fam) for fam in _pieces(m, spec))


@dataclass
class SplitIdentityReport:
    lhs: NCPolynomial
    rhs: NCPolynomial
    crossers: list = field(default_factory=list)

    @property
    def equal(self) -> bool:
        return self.lhs == self.rhs

    def to_json(self) -> dict:
        return {"lhs": str(self.lhs), "rhs": str(self.rhs), "equal": self.equal}


def crossing_faces(m: Matroid, spec: SplitSpec):
    """Proper faces with vertices strictly on both sides of the hyperplane."""
    out = []
    for face in face_lattice(m).proper_faces():
        counts = {(b & spec.s).bit_count() for b in face.vertex_bases}
        if max(counts) > spec.k and min(counts) < spec.k:
            out.append(face)
    return out


def verify_split_identity(m: Matroid, spec: SplitSpec, result: SplitResult | None = None,
                          raise_on_failure: bool = True) -> SplitIdentityReport:
    if result is None:
        result = hyperplane_split(m, spec)
    if not result.is_split:
        raise InvalidSplitSpec(f"{spec!r} does not split Q(M): {result.reason} fails")
    lat_plus = face_lattice(result.m_plus)
    lat_minus = face_lattice(result.m_minus)
    lat_hat = face_lattice(result.m_hat)
    crossers = crossing_faces(m, spec)
    slices = []
    for face in crossers:
        cut = [b for b in face.vertex_bases if (b & spec.s).bit_count() == spec.k]
        slices.append(lat_hat.poset.elements[lat_hat.index_of(cut)])
    lhs = cd_index(face_lattice(m).poset)
    rhs = split_rhs(lat_plus.poset, lat_minus.poset, lat_hat.poset, slices)
    report = SplitIdentityReport(lhs, rhs, crossers)
    if raise_on_failure and not report.equal:
        raise IdentityFailed(report)
    return report


def all_split_specs(m: Matroid):
    """Every admissible ``(S, k)`` on ``m``."""
    g = m.ground
    s = (g - 1) & g
    out = []
    while s:
        for k in range(1, m.rank):
            out.append(SplitSpec(s, k))
        s = (s - 1) & g
    return sorted(out, key=lambda sp: (labels(sp.s), sp.k))


__all__ = [
    "COND_I",
    "COND_II",
    "SplitIdentityReport",
    "SplitResult",
    "SplitSpec",
    "all_split_specs",
    "brute_force_split_oracle",
    "check_condition_i",
    "check_condition_ii",
    "check_condition_ii_dual",
    "crossing_faces",
    "hyperplane_split",
    "verify_split_identity",
]
