"""Faces of matroid base polytopes.

A face is identified with its set of vertex bases; every face is itself the
base polytope of a matroid on the same ground set.  Faces are reached three
ways that are cross-checked against each other: intersection closure of
facets (:func:`face_lattice`), factor-connected flags
(:func:`matroid_of_flag`), and weight minimization (:func:`minimizing_face`).
"""

from __future__ import annotations

from collections import defaultdict, deque
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, reduce
from itertools import product
from typing import Iterable, Sequence

from . import kernels
from .errors import ConsistencyError, InputError, NotABasis, NotAFace, NotFactorConnected
from .matroid import (
    ElementSet,
    Matroid,
    check_size,
    contraction,
    direct_sum,
    format_set,
    labels,
    minor,
    restriction,
    submasks,
)
from .poset import FinitePoset, GradedPoset


def polytope_dimension(m: Matroid) -> int:
    return m.size - len(m.components)


# ---------------------------------------------------------------------------
# flags


@dataclass(frozen=True)
class Flag:
    """Chain ``0 = S_0 < S_1 < ... < S_{k+1} = ground`` of element sets."""

    sets: tuple[ElementSet, ...]

    def __post_init__(self):
        s = self.sets
        if len(s) < 2 or s[0] != 0:
            raise InputError("a flag starts at the empty set and has at least two members")
        for a, b in zip(s, s[1:]):
            if a & ~b or a == b:
                raise InputError(f"flag is not strictly increasing at {format_set(a)} < {format_set(b)}")

    @classmethod
    def of(cls, *sets: Iterable[int]) -> "Flag":
        """Build from label iterables, adding the empty set if omitted."""
        from .matroid import to_mask

        masks = [to_mask(x) if not isinstance(x, int) else x for x in sets]
        if masks[0] != 0:
            masks.insert(0, 0)
        return cls(tuple(masks))

    @property
    def length(self) -> int:
        """Number of proper intermediate sets ``k``."""
        return len(self.sets) - 2

    @property
    def top(self) -> ElementSet:
        return self.sets[-1]

    def steps(self) -> list[ElementSet]:
        return [b & ~a for a, b in zip(self.sets, self.sets[1:])]

    def __contains__(self, s: ElementSet) -> bool:
        return s in self.sets

    def __repr__(self):
        return "Flag(" + " < ".join(format_set(s) if s else "{}" for s in self.sets) + ")"


def _check_flag(m: Matroid, f: Flag):
    if f.top != m.ground:
        raise InputError(f"flag ends at {format_set(f.top)}, not at the ground set {format_set(m.ground)}")


def flag_factors(m: Matroid, f: Flag) -> list[Matroid]:
    _check_flag(m, f)
    return [minor(m, b, a) for a, b in zip(f.sets, f.sets[1:])]


def matroid_of_flag(m: Matroid, f: Flag) -> Matroid:
    """Direct sum of the minors ``(M|S_i)/S_{i-1}``, on the original labels."""
    return reduce(direct_sum, flag_factors(m, f))


def is_factor_connected(m: Matroid, f: Flag) -> bool:
    return all(x.is_connected for x in flag_factors(m, f))


def adjacent_flag(m: Matroid, f: Flag, j: int) -> Flag | None:
    """Swap the blocks around position ``j`` when that is possible.

    Returns the flag with ``S_j`` replaced by ``S_{j-1} | (S_{j+1} - S_j)``
    if ``(M|S_{j+1})/S_{j-1}`` splits into two components, else ``None``.
    """
    if not is_factor_connected(m, f):
        raise NotFactorConnected(f"{f!r} is not factor-connected")
    if not 1 <= j <= f.length:
        raise InputError(f"position {j} out of range 1..{f.length}")
    lo, mid, hi = f.sets[j - 1], f.sets[j], f.sets[j + 1]
    comps = minor(m, hi, lo).components
    if len(comps) == 1:
        return None
    if len(comps) != 2 or set(comps) != {mid & ~lo, hi & ~mid}:  # pragma: no cover
        raise ConsistencyError(f"unexpected components {comps} around position {j} of {f!r}")
    sets = list(f.sets)
    sets[j] = lo | (hi & ~mid)
    return Flag(tuple(sets))


def adjacent_flags(m: Matroid, f: Flag) -> list[Flag]:
    out = []
    for j in range(1, f.length + 1):
        g = adjacent_flag(m, f, j)
        if g is not None:
            out.append(g)
    return out


def flags_equivalent(m: Matroid, f1: Flag, f2: Flag, check: bool = True) -> bool:
    """Breadth-first search over adjacency moves from ``f1`` looking for ``f2``.

    With ``check`` the answer is compared against equality of the flag
    matroids and a disagreement raises :class:`ConsistencyError`.
    """
    for f in (f1, f2):
        if not is_factor_connected(m, f):
            raise NotFactorConnected(f"{f!r} is not factor-connected")
    found = False
    if f1.length == f2.length:
        seen = {f1}
        queue = deque([f1])
        while queue:
            cur = queue.popleft()
            if cur == f2:
                found = True
                break
            for g in adjacent_flags(m, cur):
                if g not in seen:
                    seen.add(g)
                    queue.append(g)
    if check:
        same = matroid_of_flag(m, f1).bases == matroid_of_flag(m, f2).bases
        if same != found:
            raise ConsistencyError(f"adjacency search says {found}, flag matroids say {same} for {f1!r}, {f2!r}")
    return found


@lru_cache(maxsize=512)
def factor_connected_flags(m: Matroid) -> tuple[Flag, ...]:
    """Every factor-connected flag of ``m``.

    Built block by block: the next block ``T`` must make ``(M/S)|T`` connected.
    """
    out = []

    def extend(prefix: list[ElementSet], rest: Matroid):
        if rest.ground == 0:
            out.append(Flag(tuple(prefix)))
            return
        for t in submasks(rest.ground):
            if t == 0:
                continue
            if restriction(rest, t).is_connected:
                extend(prefix + [prefix[-1] | t], contraction(rest, t))

    extend([0], m)
    return tuple(sorted(out, key=lambda f: (f.length, f.sets)))


def flag_classes(m: Matroid) -> list[list[Flag]]:
    """Partition of the factor-connected flags into adjacency classes."""
    flags = factor_connected_flags(m)
    seen: dict[Flag, int] = {}
    classes: list[list[Flag]] = []
    for f in flags:
        if f in seen:
            continue
        cls = []
        queue = deque([f])
        seen[f] = len(classes)
        while queue:
            cur = queue.popleft()
            cls.append(cur)
            for g in adjacent_flags(m, cur):
                if g not in seen:
                    seen[g] = len(classes)
                    queue.append(g)
        classes.append(cls)
    return classes


@lru_cache(maxsize=512)
def flags_by_face(m: Matroid) -> dict[frozenset, tuple[Flag, ...]]:
    """Factor-connected flags grouped by the vertex family of their face."""
    groups: dict[frozenset, list[Flag]] = defaultdict(list)
    for f in factor_connected_flags(m):
        groups[matroid_of_flag(m, f).bases].append(f)
    return {k: tuple(v) for k, v in groups.items()}


# ---------------------------------------------------------------------------
# faces


@dataclass(frozen=True)
class Face:
    """A face of ``Q(M)``: its vertex bases and the matroid they form."""

    vertex_bases: frozenset[ElementSet]
    matroid: Matroid | None
    dim: int

    @classmethod
    def of(cls, m: Matroid) -> "Face":
        return cls(m.bases, m, polytope_dimension(m))

    @classmethod
    def empty(cls) -> "Face":
        return cls(frozenset(), None, -1)

    @property
    def is_empty(self) -> bool:
        return not self.vertex_bases

    @property
    def components(self) -> tuple[ElementSet, ...]:
        return self.matroid.components if self.matroid is not None else ()

    def sorted_vertices(self) -> list[list[int]]:
        return sorted(labels(b) for b in self.vertex_bases)

    def label(self) -> str:
        if self.is_empty:
            return "{}"
        return "{" + ",".join(format_set(b) for b in sorted(self.vertex_bases, key=labels)) + "}"

    def __repr__(self):
        return f"Face(dim={self.dim}, vertices={self.label()})"


class FaceLattice:
    """Face lattice of ``Q(M)``.

    ``faces[i]`` is the face whose poset element is ``i``; element 0 is the
    empty face and the last element is ``Q(M)`` itself.
    """

    def __init__(self, matroid: Matroid, faces: list[Face], poset: GradedPoset):
        self.matroid = matroid
        self.faces = faces
        self.poset = poset
        self._index = {f.vertex_bases: i for i, f in enumerate(faces)}

    def __len__(self):
        return len(self.faces)

    def index_of(self, vertex_bases: Iterable[ElementSet]) -> int:
        key = frozenset(vertex_bases)
        try:
            return self._index[key]
        except KeyError:
            raise NotAFace(f"{sorted(labels(b) for b in key)} is not a face of {self.matroid!r}") from None

    def face(self, vertex_bases) -> Face:
        return self.faces[self.index_of(vertex_bases)]

    def __contains__(self, vertex_bases) -> bool:
        return frozenset(vertex_bases) in self._index

    @property
    def top(self) -> Face:
        return self.faces[-1]

    def f_vector(self) -> list[int]:
        """Face counts by dimension, vertices first (the empty face is omitted)."""
        return self.poset.rank_counts()[1:]

    def faces_of_dim(self, d: int) -> list[Face]:
        return [f for f in self.faces if f.dim == d]

    def proper_faces(self) -> list[Face]:
        return self.faces[1:-1]


def _facet_families(m: Matroid) -> list[frozenset]:
    """Vertex families of the facets of a connected ``m``.

    Facets are the sets ``S`` with ``M|S`` and ``M/S`` both connected.
    """
    out = []
    g = m.ground
    for s in submasks(g):
        if s == 0 or s == g:
            continue
        if restriction(m, s).is_connected and contraction(m, s).is_connected:
            rs = m.rank_of(s)
            out.append(frozenset(b for b in m.bases if (b & s).bit_count() == rs))
    return out


def _connected_face_families(m: Matroid) -> list[frozenset]:
    """Nonempty faces of ``Q(m)`` for connected ``m``, as vertex families."""
    if m.size <= 1:
        return [m.bases]
    bases = m.sorted_bases
    pos = {b: i for i, b in enumerate(bases)}
    gens = []
    for fam in _facet_families(m):
        mask = 0
        for b in fam:
            mask |= 1 << pos[b]
        gens.append(mask)
    closed = kernels.intersection_closure(gens)
    full = (1 << len(bases)) - 1
    fams = {full}
    fams.update(closed)
    out = []
    for mask in fams:
        out.append(frozenset(bases[i] for i in range(len(bases)) if mask >> i & 1))
    return out


@lru_cache(maxsize=1024)
def face_lattice(m: Matroid) -> FaceLattice:
    """All faces of ``Q(M)``, ranked by dimension plus one.

    Faces of each connected component come from intersections of its facets;
    faces of ``M`` are products of component faces.
    """
    check_size(m.n)
    per_comp = [_connected_face_families(restriction(m, c)) for c in m.components]
    families = [frozenset(reduce(lambda acc, fam: {a | b for a in acc for b in fam}, combo, {0}))
                for combo in product(*per_comp)]
    faces = [Face.empty()]
    for fam in families:
        fm = Matroid(m.n, fam, m.ground)
        faces.append(Face(fam, fm, polytope_dimension(fm)))
    faces[1:] = sorted(faces[1:], key=lambda f: (f.dim, f.sorted_vertices()))

    bases = m.sorted_bases
    pos = {b: i for i, b in enumerate(bases)}
    masks = []
    for f in faces:
        mask = 0
        for b in f.vertex_bases:
            mask |= 1 << pos[b]
        masks.append(mask)
    leq = kernels.subset_matrix(masks)
    ranks = [f.dim + 1 for f in faces]
    poset = GradedPoset(list(range(len(faces))), leq, ranks)
    return FaceLattice(m, faces, poset)


def face_from_bases(m: Matroid, vertex_bases: Iterable[ElementSet]) -> Face:
    lat = face_lattice(m)
    return lat.face(vertex_bases)


def vertex_face(m: Matroid, b: ElementSet) -> Face:
    if b not in m.bases:
        raise NotABasis(f"{labels(b)} is not a basis")
    return Face.of(Matroid(m.n, frozenset([b]), m.ground))


# ---------------------------------------------------------------------------
# weights


def level_set_flag(m: Matroid, w: Sequence) -> Flag:
    """Flag of sublevel sets ``{e : w_e <= v}`` over the distinct weight values."""
    if len(w) != m.n:
        raise InputError(f"weight vector has length {len(w)}, expected {m.n}")
    ws = {e: Fraction(w[e - 1]) for e in labels(m.ground)}
    sets = [0]
    for v in sorted(set(ws.values())):
        sets.append(sets[-1] | sum(1 << (e - 1) for e, x in ws.items() if x == v))
    return Flag(tuple(sets))


def minimizing_face(m: Matroid, w: Sequence) -> Face:
    """Face of ``Q(M)`` on which ``sum w_i x_i`` is minimal.

    Computed by direct minimization over bases and compared with the flag
    matroid of the level-set flag of ``w``.
    """
    if len(w) != m.n:
        raise InputError(f"weight vector has length {len(w)}, expected {m.n}")
    ws = [Fraction(x) for x in w]

    def weight(b):
        return sum(ws[e - 1] for e in labels(b))

    values = {b: weight(b) for b in m.bases}
    low = min(values.values())
    fam = frozenset(b for b, v in values.items() if v == low)
    via_flag = matroid_of_flag(m, level_set_flag(m, w)).bases
    if via_flag != fam:
        raise ConsistencyError(f"minimal bases {fam} differ from level-set flag matroid {via_flag}")
    return Face.of(Matroid(m.n, fam, m.ground))


# ---------------------------------------------------------------------------
# hyperplanes, L_sigma, P_sigma, P_B


def in_hyperplane(m: Matroid, vertex_bases: Iterable[ElementSet], s: ElementSet) -> bool:
    rs = m.rank_of(s)
    return all((b & s).bit_count() == rs for b in vertex_bases)


def face_in_hyperplane(m: Matroid, sigma: Face, s: ElementSet, check: bool = False) -> bool:
    """Whether ``sigma`` lies in ``H_S = {sum_{e in S} x_e = r(S)}``.

    With ``check`` the answer is compared with the flag criterion: some
    factor-connected flag through ``S`` realizes ``sigma``.
    """
    ans = in_hyperplane(m, sigma.vertex_bases, s)
    if check:
        flags = flags_by_face(m).get(sigma.vertex_bases, ())
        if not flags:
            raise NotAFace(f"{sigma!r} is not realized by any factor-connected flag")
        via = any(s in f for f in flags)
        if via != ans:
            raise ConsistencyError(f"hyperplane test {ans} but flag test {via} for S={format_set(s)}")
    return ans


def _component_unions(comps: Sequence[ElementSet]) -> list[ElementSet]:
    out = []
    for pick in range(1 << len(comps)):
        u = 0
        for i, c in enumerate(comps):
            if pick >> i & 1:
                u |= c
        out.append(u)
    return out


def _require_face(m: Matroid, sigma: Face):
    if sigma.is_empty or sigma.matroid is None:
        raise NotAFace("the empty face has no matroid")
    if not sigma.vertex_bases <= m.bases:
        raise NotAFace(f"{sigma!r} has vertices that are not bases")


def L_sigma(m: Matroid, sigma: Face, prune: bool = True) -> set[ElementSet]:
    """Sets ``S`` with ``sigma`` inside ``H_S``; with ``prune`` only unions of components are scanned."""
    _require_face(m, sigma)
    candidates = _component_unions(sigma.components) if prune else list(submasks(m.ground))
    return {s for s in candidates if in_hyperplane(m, sigma.vertex_bases, s)}


def L_sigma_from_flags(m: Matroid, sigma: Face) -> set[ElementSet]:
    """Members of the factor-connected flags realizing ``sigma`` (the definition)."""
    _require_face(m, sigma)
    flags = flags_by_face(m).get(sigma.vertex_bases)
    if not flags:
        raise NotAFace(f"{sigma!r} is not realized by any factor-connected flag")
    return {s for f in flags for s in f.sets}


def P_sigma(m: Matroid, sigma: Face) -> FinitePoset:
    """Poset on the components of ``M_sigma``.

    ``C1 < C2`` iff every ``S`` containing ``C2`` with ``sigma`` in ``H_S``
    also contains ``C1``.
    """
    comps = list(sigma.components)
    lattice = L_sigma(m, sigma)
    rel = []
    for c2 in comps:
        above = [s for s in lattice if c2 & ~s == 0]
        for c1 in comps:
            if c1 != c2 and all(c1 & ~s == 0 for s in above):
                rel.append((c1, c2))
    return FinitePoset.from_relations(comps, rel)


def P_B(m: Matroid, b: ElementSet) -> FinitePoset:
    """Poset on element labels: ``e < e'`` iff ``e'`` lies in the basic bond of ``e`` in ``B``."""
    if b not in m.bases:
        raise NotABasis(f"{labels(b)} is not a basis")
    rel = []
    for e in labels(b):
        rest = b & ~(1 << (e - 1))
        for f in labels(m.ground & ~b):
            if rest | (1 << (f - 1)) in m.bases:
                rel.append((e, f))
    return FinitePoset.from_relations(labels(m.ground), rel)


def poset_on_labels(p: FinitePoset) -> FinitePoset:
    """Relabel a poset on singleton masks by the element labels."""
    if any(c.bit_count() != 1 for c in p.elements):
        raise InputError("poset elements are not singletons")
    return FinitePoset([c.bit_length() for c in p.elements], p.leq)


def order_ideal_unions(p: FinitePoset) -> set[ElementSet]:
    """Order ideals of a poset on disjoint masks, each flattened to its union."""
    return {reduce(lambda a, c: a | c, ideal, 0) for ideal in p.order_ideals()}


__all__ = [
    "Face",
    "FaceLattice",
    "Flag",
    "L_sigma",
    "L_sigma_from_flags",
    "P_B",
    "P_sigma",
    "adjacent_flag",
    "face_in_hyperplane",
    "face_lattice",
    "factor_connected_flags",
    "flag_classes",
    "flags_by_face",
    "flags_equivalent",
    "is_factor_connected",
    "level_set_flag",
    "matroid_of_flag",
    "minimizing_face",
    "order_ideal_unions",
    "poset_on_labels",
    "polytope_dimension",
    "vertex_face",
]
