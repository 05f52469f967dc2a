"""Time the compiled kernels against the numpy fallback.

    python benchmarks/bench_kernels.py [--repeat 5] [--json]

Each workload is run on both backends; the results are compared for equality
before any timing is reported.
"""

import argparse
import json
import sys
import timeit

import numpy as np

from basepoly import kernels
from basepoly.matroid import rank2_from_composition, uniform
from basepoly.polytope import _facet_families, face_lattice


def _facet_masks(m):
    pos = {b: i for i, b in enumerate(m.sorted_bases)}
    out = []
    for fam in _facet_families(m):
        mask = 0
        for b in fam:
            mask |= 1 << pos[b]
        out.append(mask)
    return out


def _face_masks(lat):
    pos = {b: i for i, b in enumerate(lat.matroid.sorted_bases)}
    out = []
    for f in lat.faces:
        mask = 0
        for b in f.vertex_bases:
            mask |= 1 << pos[b]
        out.append(mask)
    return out


def workloads():
    big = [("U37", uniform(3, 7)), ("U28", uniform(2, 8)), ("M322", rank2_from_composition((3, 2, 2))),
           ("U48", uniform(4, 8))]
    out = []
    for name, m in big:
        out.append((f"exchange_violation {name} ({len(m.bases)} bases)", "exchange_violation", (sorted(m.bases),)))
    for name, m in big[:3]:
        lat = face_lattice(m)
        q = lat.poset
        tag = f"{name} ({len(lat)} faces)"
        out.append((f"intersection_closure {tag}", "intersection_closure", (_facet_masks(m),)))
        out.append((f"subset_matrix {tag}", "subset_matrix", (_face_masks(lat),)))
        out.append((f"flag_f_vector {tag}", "flag_f_vector", (q.leq, q.ranks, q.rank - 1)))
        out.append((f"eulerian_violation {tag}", "eulerian_violation", (q.leq, q.ranks)))
    return out


def _same(a, b):
    if isinstance(a, np.ndarray) or isinstance(b, np.ndarray):
        return np.array_equal(np.asarray(a), np.asarray(b))
    return a == b


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args(argv)

    impls = kernels.IMPLEMENTATIONS
    if "cython" not in impls:
        print("compiled extension not available; nothing to compare", file=sys.stderr)
        return 1
    rows = []
    for label, fn, fargs in workloads():
        py, cy = getattr(impls["python"], fn), getattr(impls["cython"], fn)
        if not _same(py(*fargs), cy(*fargs)):
            print(f"results differ on {label}", file=sys.stderr)
            return 1
        t_py = min(timeit.repeat(lambda: py(*fargs), number=1, repeat=args.repeat))
        t_cy = min(timeit.repeat(lambda: cy(*fargs), number=1, repeat=args.repeat))
        rows.append({"workload": label, "python_s": t_py, "cython_s": t_cy, "speedup": t_py / t_cy})
    if args.json:
        print(json.dumps(rows, indent=2))
    else:
        width = max(len(r["workload"]) for r in rows)
        print(f"{'workload':<{width}}  {'python':>10}  {'cython':>10}  speedup")
        for r in rows:
            print(f"{r['workload']:<{width}}  {r['python_s'] * 1e3:8.2f}ms  {r['cython_s'] * 1e3:8.2f}ms  {r['speedup']:6.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
