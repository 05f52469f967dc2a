"""Command-line interface: ``basepoly <command> ...``.

Exit codes: 0 on success, 1 when a verification fails, 2 on bad input.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .cdindex import cd_index
from .errors import BasePolyError, ConsistencyError, InputError
from .matroid import (
    Matroid,
    format_set,
    labels,
    matroid_from_bases,
    parse_composition,
    rank2_from_composition,
    to_mask,
)
from .ncpoly import NCPolynomial
from .polytope import P_B, P_sigma, L_sigma, face_lattice, minimizing_face, vertex_face
from .poset import GradedPoset

EXIT_OK, EXIT_MISMATCH, EXIT_INPUT = 0, 1, 2


def _read_json(path: str):
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text(encoding="utf-8")
        return json.loads(text)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc}") from None


def _int_list(text: str, what: str) -> list[int]:
    try:
        return [int(t) for t in text.replace(" ", "").split(",") if t]
    except ValueError:
        raise InputError(f"bad {what} {text!r}") from None


def matroid_from_json(data) -> Matroid:
    if not isinstance(data, dict) or "bases" not in data:
        raise InputError('matroid JSON needs a "bases" list (and optionally "n")')
    bases = [list(b) for b in data["bases"]]
    n = data.get("n")
    if n is None:
        n = max((max(b) for b in bases if b), default=0)
    if not isinstance(n, int):
        raise InputError('"n" must be an integer')
    return matroid_from_bases(n, bases)


def parse_bases(text: str, n: int | None = None) -> Matroid:
    """Inline bases: ``"12,13,23"`` (single-digit labels) or ``"1 2;1 3"``."""
    if ";" in text or " " in text.strip():
        groups = [g for g in text.split(";") if g.strip()]
        bases = [_int_list(g.replace(" ", ","), "basis") for g in groups]
    else:
        bases = []
        for tok in text.split(","):
            tok = tok.strip()
            if not tok.isdigit():
                raise InputError(f"bad basis {tok!r}")
            bases.append([int(ch) for ch in tok])
    if n is None:
        n = max((max(b) for b in bases if b), default=0)
    return matroid_from_bases(n, bases)


def _matroid_arg(args) -> Matroid:
    if getattr(args, "matroid", None):
        return matroid_from_json(_read_json(args.matroid))
    if getattr(args, "alpha", None):
        return rank2_from_composition(parse_composition(args.alpha))
    if getattr(args, "bases", None):
        return parse_bases(args.bases, args.n)
    raise InputError("give one of --matroid, --alpha or --bases")


def _add_inputs(p: argparse.ArgumentParser, poset: bool = False):
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--matroid", metavar="FILE", help='matroid JSON {"n": 4, "bases": [[1,2],...]}')
    g.add_argument("--alpha", metavar="A1,A2,...", help="rank-2 matroid from a composition")
    g.add_argument("--bases", metavar="LIST", help='inline bases, e.g. "12,13,23"')
    if poset:
        g.add_argument("--poset", metavar="FILE", help="graded poset JSON (elements, cover_relations, ranks)")
    p.add_argument("--n", type=int, help="ground set size for --bases (default: largest label)")


def _add_format(p: argparse.ArgumentParser):
    p.add_argument("--format", choices=("text", "json"), default="text")


def _emit(args, text: str, data) -> None:
    if args.format == "json":
        print(json.dumps(data, indent=2, sort_keys=False))
    else:
        print(text)


def _poly_out(p: NCPolynomial):
    return p.to_json()


# ---------------------------------------------------------------------------
# commands


def cmd_cdindex(args) -> int:
    if args.poset:
        data = _read_json(args.poset)
        if isinstance(data, dict) and "poset" in data:
            data = data["poset"]
        try:
            q = GradedPoset.from_json(data)
        except (KeyError, TypeError) as exc:
            raise InputError(f"bad poset JSON: {exc}") from None
    else:
        q = face_lattice(_matroid_arg(args)).poset
    psi = cd_index(q)
    _emit(args, str(psi), _poly_out(psi))
    if args.expect:
        want = NCPolynomial.from_json(_read_json(args.expect), "cd")
        if want != psi:
            print(f"mismatch: expected {want}, got {psi}", file=sys.stderr)
            return EXIT_MISMATCH
    return EXIT_OK


def _face_record(i: int, face) -> dict:
    return {
        "index": i,
        "dim": face.dim,
        "vertices": face.sorted_vertices(),
        "components": [labels(c) for c in face.components],
        "matroid": face.matroid.to_json() if face.matroid is not None else None,
    }


def cmd_faces(args) -> int:
    m = _matroid_arg(args)
    lat = face_lattice(m)
    records = [_face_record(i, f) for i, f in enumerate(lat.faces)]
    lines = [f"Q(M) for {m!r}", f"f-vector (vertices first): {lat.f_vector()}"]
    for r in records[1:]:
        face = lat.faces[r["index"]]
        comps = " ".join(format_set(c) for c in face.components)
        lines.append(f"  #{r['index']} dim {r['dim']}: {face.label()}  components {comps}")
    data = {"matroid": m.to_json(), "f_vector": lat.f_vector(), "faces": records, "poset": lat.poset.to_json()}
    _emit(args, "\n".join(lines), data)
    return EXIT_OK


def _poset_lines(p, name) -> list[str]:
    rel = [f"{name(a)} < {name(b)}" for a, b in p.cover_relations()]
    return rel or ["(antichain)"]


def cmd_psigma(args) -> int:
    m = _matroid_arg(args)
    if bool(args.weight) == bool(args.basis):
        raise InputError("give exactly one of --weight or --basis")
    if args.weight:
        face = minimizing_face(m, _int_list(args.weight, "weight vector"))
        pb = None
    else:
        b = to_mask(_int_list(args.basis, "basis"))
        face = vertex_face(m, b)
        pb = P_B(m, b)
    ps = P_sigma(m, face)
    lattice = sorted(L_sigma(m, face), key=lambda s: (s.bit_count(), labels(s)))
    lines = [f"face {face.label()} (dim {face.dim})", "P_sigma cover relations:"]
    lines += ["  " + s for s in _poset_lines(ps, format_set)]
    lines.append("L_sigma: " + " ".join(format_set(s) or "{}" for s in lattice))
    data = {
        "face": face.sorted_vertices(),
        "dim": face.dim,
        "p_sigma": ps.to_json(name=lambda c: labels(c)),
        "l_sigma": [labels(s) for s in lattice],
    }
    if pb is not None:
        lines.append("P_B cover relations:")
        lines += ["  " + s for s in _poset_lines(pb, str)]
        data["p_b"] = pb.to_json(name=int)
    _emit(args, "\n".join(lines), data)
    return EXIT_OK


def cmd_split_check(args) -> int:
    from .split import SplitSpec, hyperplane_split, verify_split_identity

    m = _matroid_arg(args)
    spec = SplitSpec.of(_int_list(args.set, "element set"), args.k)
    res = hyperplane_split(m, spec)
    data = res.to_json()
    lines = [f"S = {format_set(spec.s)}, k = {spec.k}: " + ("split" if res.is_split else f"no split ({res.reason})")]
    if res.is_split:
        for name in ("m_plus", "m_minus", "m_hat"):
            lines.append(f"  {name}: {getattr(res, name)!r}")
    code = EXIT_OK
    if args.verify_cd:
        if not res.is_split:
            data["cd_identity"] = None
            lines.append("  cd identity: not applicable")
        else:
            rep = verify_split_identity(m, spec, res, raise_on_failure=False)
            data["cd_identity"] = rep.to_json()
            lines.append(f"  lhs = {rep.lhs}\n  rhs = {rep.rhs}\n  equal = {rep.equal}")
            if not rep.equal:
                code = EXIT_MISMATCH
    _emit(args, "\n".join(lines), data)
    return code


def cmd_rank2(args) -> int:
    from .rank2 import cd_index_rank2

    alpha = parse_composition(args.alpha)
    psi = cd_index_rank2(alpha, method=args.method)
    _emit(args, str(psi), _poly_out(psi))
    return EXIT_OK


def cmd_table1(args) -> int:
    from .rank2 import table1

    rows = table1()
    lines, data, bad = [], [], 0
    for alpha, poly in rows:
        entry = {"alpha": list(alpha), "cd_index": _poly_out(poly)}
        line = f"{','.join(map(str, alpha))}: {poly}"
        if args.verify:
            got = cd_index(face_lattice(rank2_from_composition(alpha)).poset)
            entry["computed"] = _poly_out(got)
            entry["equal"] = got == poly
            if got != poly:
                bad += 1
                diff = got - poly
                line += f"\n  MISMATCH computed {got}\n  difference {diff}"
            else:
                line += "  [ok]"
        lines.append(line)
        data.append(entry)
    _emit(args, "\n".join(lines), data)
    return EXIT_MISMATCH if bad else EXIT_OK


def cmd_verify(args) -> int:
    from .verification import run_all

    only = _int_list(args.only, "criterion list") if args.only else None
    results = run_all(only)
    _emit(args, "\n".join(r.line() for r in results), [r.to_json() for r in results])
    return EXIT_OK if all(r.passed for r in results) else EXIT_MISMATCH


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="basepoly", description="Face lattices and cd-indices of matroid base polytopes.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("cdindex", help="cd-index of Q(M) or of a graded poset")
    _add_inputs(p, poset=True)
    p.add_argument("--expect", metavar="FILE", help="polynomial JSON to compare against (exit 1 on mismatch)")
    _add_format(p)
    p.set_defaults(func=cmd_cdindex)

    p = sub.add_parser("faces", help="face lattice with per-face matroids and dimensions")
    _add_inputs(p)
    _add_format(p)
    p.set_defaults(func=cmd_faces)

    p = sub.add_parser("psigma", help="P_sigma of a face chosen by a weight vector or a basis")
    _add_inputs(p)
    p.add_argument("--weight", metavar="W1,...,Wn")
    p.add_argument("--basis", metavar="E1,E2,...")
    _add_format(p)
    p.set_defaults(func=cmd_psigma)

    p = sub.add_parser("split-check", help="test the hyperplane sum_{e in S} x_e = k")
    _add_inputs(p)
    p.add_argument("--set", required=True, metavar="E1,E2,...")
    p.add_argument("--k", required=True, type=int)
    p.add_argument("--verify-cd", action="store_true", help="also check the cd-index identity")
    _add_format(p)
    p.set_defaults(func=cmd_split_check)

    p = sub.add_parser("rank2", help="cd-index of a rank-2 matroid M_alpha")
    p.add_argument("--alpha", required=True)
    p.add_argument("--method", choices=("direct", "recursive", "both"), default="recursive")
    _add_format(p)
    p.set_defaults(func=cmd_rank2)

    p = sub.add_parser("table1", help="cd-indices for three-part compositions")
    p.add_argument("--verify", action="store_true", help="recompute each row and diff")
    _add_format(p)
    p.set_defaults(func=cmd_table1)

    p = sub.add_parser("verify", help="run the acceptance suite")
    p.add_argument("--only", metavar="N1,N2,...", help="run only these criteria")
    _add_format(p)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ConsistencyError as exc:
        print(f"verification failed: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    except BasePolyError as exc:  # pragma: no cover
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
