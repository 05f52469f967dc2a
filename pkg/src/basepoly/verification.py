"""The acceptance suite as plain functions.

Each criterion returns a :class:`CriterionResult`; ``basepoly verify`` and the
acceptance test both run :data:`CRITERIA`.  Every comparison is exact integer
equality; the only budgets are wall-clock limits where one is stated.
"""

from __future__ import annotations

import time
from collections import defaultdict
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

import numpy as np

from .cdindex import (
    ab_index,
    ab_to_cd,
    bipyramid,
    bipyramid_cd,
    cd_index,
    cd_words,
    expand_cd_monomial,
    flag_f_vector,
    flag_h_vector,
    is_eulerian,
    prism,
    prism_cd,
    pyramid,
    pyramid_cd,
)
from .corpus import direct_sum_corpus, split_corpus, standard_corpus
from .errors import BasePolyError
from .matroid import compositions, is_basis_family, rank2_from_composition, to_mask, uniform
from .ncpoly import NCPolynomial, cd
from .polytope import (
    L_sigma,
    L_sigma_from_flags,
    P_B,
    P_sigma,
    face_lattice,
    factor_connected_flags,
    flag_classes,
    matroid_of_flag,
    order_ideal_unions,
    poset_on_labels,
    vertex_face,
)
from .rank2 import _direct, _recursive, table1
from .split import SplitSpec, all_split_specs, brute_force_split_oracle, hyperplane_split, verify_split_identity


@dataclass
class CriterionResult:
    number: int
    name: str
    passed: bool
    detail: str
    seconds: float

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"[{status}] {self.number}. {self.name}: {self.detail} ({self.seconds:.2f}s)"

    def to_json(self) -> dict:
        return {"number": self.number, "name": self.name, "passed": self.passed,
                "detail": self.detail, "seconds": round(self.seconds, 3)}


def _timed(number: int, name: str, budget: float | None):
    def wrap(fn: Callable[[], tuple[bool, str]]):
        def run() -> CriterionResult:
            t0 = time.perf_counter()
            try:
                ok, detail = fn()
            except BasePolyError as exc:
                ok, detail = False, f"{type(exc).__name__}: {exc}"
            dt = time.perf_counter() - t0
            if budget is not None:
                detail += f"; budget {budget:g}s"
                if dt > budget:
                    ok = False
                    detail += " EXCEEDED"
            return CriterionResult(number, name, ok, detail + "; tolerance exact", dt)
        run.__name__ = fn.__name__
        run.__doc__ = fn.__doc__
        return run
    return wrap


@_timed(1, "three-part composition table", 10)
def criterion_three_part_table():
    bad = []
    rows = table1()
    for alpha, expected in rows:
        got = cd_index(face_lattice(rank2_from_composition(alpha)).poset)
        if got != expected:
            bad.append(f"{alpha}: got {got}")
    return not bad, f"{len(rows) - len(bad)}/{len(rows)} rows equal" + (f"; {bad}" if bad else "")


@_timed(2, "rank-2 recursion vs face lattice, n <= 8", 120)
def criterion_recursion():
    bad, count = [], 0
    for n in range(2, 9):
        for alpha in compositions(n, 2):
            count += 1
            if _recursive(alpha) != _direct(alpha):
                bad.append(alpha)
    return not bad, f"{count - len(bad)}/{count} compositions agree" + (f"; mismatches {bad[:5]}" if bad else "")


@lru_cache(maxsize=1)
def split_sweep():
    """Every ``(M, S, k)`` over the split corpus: (name, spec, criterion, oracle, identity ok)."""
    rows = []
    for name, m in split_corpus().items():
        for spec in all_split_specs(m):
            res = hyperplane_split(m, spec)
            oracle = brute_force_split_oracle(m, spec)
            ident = None
            if res.is_split:
                ident = verify_split_identity(m, spec, res, raise_on_failure=False).equal
            rows.append((name, spec, res.is_split, oracle, ident))
    return tuple(rows)


@_timed(3, "split identity on every hyperplane split", 300)
def criterion_split_identity():
    rows = split_sweep()
    splits = [r for r in rows if r[2]]
    bad = [(r[0], r[1]) for r in splits if not r[4]]
    octa = verify_split_identity(uniform(2, 4), SplitSpec.of([1, 2], 1), raise_on_failure=False)
    target = cd("c^3 + 6cd + 4dc")
    octa_ok = octa.lhs == target and octa.rhs == target
    detail = (f"{len(splits) - len(bad)}/{len(splits)} splits satisfy the identity "
              f"({len(rows)} (M,S,k) scanned); octahedron lhs={octa.lhs}, rhs={octa.rhs}")
    if bad:
        detail += f"; failures {bad[:5]}"
    return not bad and octa_ok and bool(splits), detail


@_timed(4, "split criterion vs brute-force oracle", None)
def criterion_split_oracle():
    rows = split_sweep()
    bad = [(r[0], r[1]) for r in rows if r[2] != r[3]]
    return not bad, f"{len(bad)} disagreements over {len(rows)} (M,S,k)" + (f"; e.g. {bad[:5]}" if bad else "")


CONE_TEST_POLYTOPES = {
    "segment": uniform(1, 2),
    "triangle": uniform(1, 3),
    "square": direct_sum_corpus()["U12+U12"],
    "square pyramid": rank2_from_composition((2, 1, 1)),
    "octahedron": uniform(2, 4),
    "cube": direct_sum_corpus()["U12+U12+U12"],
}


@_timed(5, "pyramid/prism/bipyramid formulas", None)
def criterion_cone_constructions():
    bad, checks = [], 0
    for name, m in CONE_TEST_POLYTOPES.items():
        q = face_lattice(m).poset
        for label, formula, build in (("Pyr", pyramid_cd, pyramid), ("Prism", prism_cd, prism),
                                      ("Bipyr", bipyramid_cd, bipyramid)):
            checks += 1
            if formula(q) != cd_index(build(q)):
                bad.append(f"{label}({name})")
    square = face_lattice(CONE_TEST_POLYTOPES["square"]).poset
    pyr_sq = pyramid_cd(square)
    row = dict(table1())[(2, 1, 1)]
    ok = not bad and pyr_sq == row
    return ok, f"{checks - len(bad)}/{checks} formulas match; Pyr(square) = {pyr_sq}" + (f"; bad {bad}" if bad else "")


@_timed(6, "flag adjacency classes vs flag matroids, n <= 6", None)
def criterion_flag_equivalence():
    corpus = standard_corpus(6)
    bad, flags, pairs = [], 0, 0
    for name, m in corpus.items():
        fl = factor_connected_flags(m)
        flags += len(fl)
        pairs += len(fl) * (len(fl) - 1) // 2
        by_adjacency = {frozenset(c) for c in flag_classes(m)}
        groups = defaultdict(set)
        for f in fl:
            groups[matroid_of_flag(m, f).bases].add(f)
        if by_adjacency != {frozenset(g) for g in groups.values()}:
            bad.append(name)
    return not bad, (f"{len(corpus) - len(bad)}/{len(corpus)} matroids agree "
                     f"({flags} flags, {pairs} pairs decided)") + (f"; bad {bad}" if bad else "")


@_timed(7, "L_sigma, P_sigma and P_B, n <= 6", None)
def criterion_face_posets():
    corpus = standard_corpus(6)
    bad, faces, verts = [], 0, 0
    for name, m in corpus.items():
        for face in face_lattice(m).faces[1:]:
            faces += 1
            lat = L_sigma(m, face)
            if lat != order_ideal_unions(P_sigma(m, face)) or lat != L_sigma_from_flags(m, face):
                bad.append((name, face.label()))
        for b in m.bases:
            verts += 1
            if not poset_on_labels(P_sigma(m, vertex_face(m, b))).same_order(P_B(m, b)):
                bad.append((name, b))
    m = rank2_from_composition((2, 1, 1))
    edge = face_lattice(m).face([to_mask([1, 4]), to_mask([2, 4])])
    p = P_sigma(m, edge)
    fig = set(p.relations()) - {(x, x) for x in p.elements}
    want = {(to_mask([1, 2]), to_mask([3])), (to_mask([4]), to_mask([3]))}
    ok = not bad and fig == want
    return ok, (f"{faces} faces and {verts} vertices checked, {len(bad)} failures; "
                f"edge {{e14,e24}} relations {sorted(_fmt_rel(r) for r in fig)}")


def _fmt_rel(r):
    from .matroid import format_set
    return f"{format_set(r[0])}<{format_set(r[1])}"


def _affine_dim(m) -> int:
    pts = np.array([[b >> i & 1 for i in range(m.n)] for b in m.sorted_bases], dtype=float)
    return int(np.linalg.matrix_rank(pts[1:] - pts[0])) if len(pts) > 1 else 0


@_timed(8, "structural suites", 60)
def criterion_structural():
    corpus = standard_corpus(6)
    problems = []
    faces = lattices = 0
    for name, m in corpus.items():
        lat = face_lattice(m)
        for face in lat.faces[1:]:
            faces += 1
            fm = face.matroid
            if not is_basis_family(m.n, face.vertex_bases):
                problems.append(f"{name}: face {face.label()} is not a matroid")
            if face.dim != fm.size - len(fm.components) or face.dim != _affine_dim(fm):
                problems.append(f"{name}: dimension of {face.label()}")
        q = lat.poset
        lattices += 1
        if not is_eulerian(q):
            problems.append(f"{name}: not Eulerian")
            continue
        ab_index(q)  # raises if the two definitions disagree
        f, h = flag_f_vector(q), flag_h_vector(q)
        n = f.n
        back = {key: sum(v for k2, v in h.items() if set(k2) <= set(key)) for key, _ in f.items()}
        if any(back[key] != val for key, val in f.items()):
            problems.append(f"{name}: f/h round trip")
        psi = cd_index(q)
        if psi["c" * n] != 1 or not psi.nonnegative():
            problems.append(f"{name}: cd-index {psi}")
        if cd_index(q.dual()) != psi.reverse():
            problems.append(f"{name}: dual vs reverse")
    words = 0
    for deg in range(0, 9):
        for w in cd_words(deg):
            words += 1
            if ab_to_cd(expand_cd_monomial(w)) != NCPolynomial({w: 1}):
                problems.append(f"ab_to_cd(expand({w}))")
    detail = (f"{faces} faces, {lattices} lattices, {words} cd-words checked; "
              f"{len(problems)} problems" + (f": {problems[:5]}" if problems else ""))
    return not problems, detail


CRITERIA = [
    criterion_three_part_table,
    criterion_recursion,
    criterion_split_identity,
    criterion_split_oracle,
    criterion_cone_constructions,
    criterion_flag_equivalence,
    criterion_face_posets,
    criterion_structural,
]


def run_all(select: list[int] | None = None) -> list[CriterionResult]:
    out = []
    for i, fn in enumerate(CRITERIA, start=1):
        if select and i not in select:
            continue
        out.append(fn())
    return out
