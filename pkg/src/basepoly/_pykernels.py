"""numpy/pure-Python implementations of the hot kernels.

Same signatures as the Cython module ``_ckernels``.  Posets are passed as a
dense ``uint8`` order matrix ``leq`` (``leq[i, j] == 1`` iff ``i <= j``) with
elements sorted by nondecreasing rank.
"""

from __future__ import annotations

import numpy as np


def exchange_violation(bases):
    """First ``(B1, B2, x)`` breaking basis exchange, or ``None``."""
    family = set(bases)
    for b1 in bases:
        for b2 in bases:
            diff = b1 & ~b2
            if not diff:
                continue
            cand = b2 & ~b1
            while diff:
                x = diff & -diff
                diff ^= x
                rest = b1 ^ x
                c = cand
                while c:
                    y = c & -c
                    if rest | y in family:
                        break
                    c ^= y
                else:
                    return (b1, b2, x)
    return None


def intersection_closure(generators):
    """All nonzero intersections of nonempty subfamilies of ``generators``."""
    gens = sorted(set(g for g in generators if g))
    seen = set(gens)
    queue = list(gens)
    while queue:
        cur = queue.pop()
        for g in gens:
            x = cur & g
            if x and x not in seen:
                seen.add(x)
                queue.append(x)
    return sorted(seen)


def subset_matrix(masks):
    """``out[i, j] = 1`` iff ``masks[i]`` is a subset of ``masks[j]``."""
    k = len(masks)
    if k and max(masks).bit_length() <= 64:
        m = np.array(masks, dtype=np.uint64)
        return ((m[:, None] & ~m[None, :]) == 0).astype(np.uint8)
    out = np.zeros((k, k), dtype=np.uint8)
    for i, a in enumerate(masks):
        for j, b in enumerate(masks):
            if a & ~b == 0:
                out[i, j] = 1
    return out


def _layers(ranks):
    ranks = np.asarray(ranks)
    top = int(ranks.max()) if len(ranks) else 0
    return [np.flatnonzero(ranks == r) for r in range(top + 1)]


def flag_f_vector(leq, ranks, n):
    """Flag f-vector as an ``int64`` array indexed by rank-set bit masks.

    Bit ``i - 1`` of the index stands for rank ``i``; only ranks ``1..n`` occur.
    """
    leq = np.asarray(leq, dtype=np.int64)
    layers = _layers(ranks)
    f = np.zeros(1 << n, dtype=np.int64)
    f[0] = 1
    # g[j]: rows = elements of rank j, column s = chains 0 < ... < y with
    # intermediate rank set s (a subset of 1..j-1).
    g = {}
    for j in range(1, n + 1):
        ys = layers[j] if j < len(layers) else np.array([], dtype=int)
        gj = np.zeros((len(ys), 1 << (j - 1)), dtype=np.int64)
        if len(ys):
            gj[:, 0] = 1
            for i in range(1, j):
                xs = layers[i]
                if len(xs):
                    gj[:, 1 << (i - 1):1 << i] = leq[np.ix_(xs, ys)].T @ g[i]
        g[j] = gj
        f[1 << (j - 1):1 << j] = gj.sum(axis=0)
    return f


def eulerian_violation(leq, ranks):
    """First interval ``(x, y)`` with ``mu(x, y) != (-1)**(rank y - rank x)``."""
    leq = np.asarray(leq, dtype=np.int64)
    ranks = np.asarray(ranks, dtype=np.int64)
    for x in range(len(ranks)):
        up = np.flatnonzero(leq[x])
        sub = leq[np.ix_(up, up)]
        r = ranks[up]
        mu = np.zeros(len(up), dtype=np.int64)
        mu[0] = 1  # x itself is the first element of its up-set
        for rk in range(int(r[0]) + 1, int(r.max()) + 1 if len(r) else 0):
            layer = np.flatnonzero(r == rk)
            if len(layer):
                mu[layer] = -(mu @ sub[:, layer])
        expected = np.where((r - r[0]) % 2 == 0, 1, -1)
        bad = np.flatnonzero(mu != expected)
        if len(bad):
            return (x, int(up[bad[0]]))
    return None
