# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
# distutils: language = c++
"""Compiled versions of the kernels in ``_pykernels``.

Bit-mask kernels work on ``uint64``; wider masks are delegated to the Python
implementation.
"""

import numpy as np
cimport numpy as cnp
from libc.stdint cimport uint64_t, int64_t, uint8_t
from libcpp.unordered_set cimport unordered_set
from libcpp.vector cimport vector

from . import _pykernels

cnp.import_array()


cdef bint _fits(masks):
    for m in masks:
        if m < 0 or m.bit_length() > 64:
            return False
    return True


def exchange_violation(bases):
    if not _fits(bases):
        return _pykernels.exchange_violation(bases)
    cdef vector[uint64_t] bs
    cdef unordered_set[uint64_t] family
    for b in bases:
        bs.push_back(<uint64_t>b)
        family.insert(<uint64_t>b)
    cdef size_t i, j, k = bs.size()
    cdef uint64_t b1, b2, diff, cand, x, y, rest, c
    cdef bint found
    for i in range(k):
        b1 = bs[i]
        for j in range(k):
            b2 = bs[j]
            diff = b1 & ~b2
            cand = b2 & ~b1
            while diff:
                x = diff & (~diff + 1)
                diff ^= x
                rest = b1 ^ x
                c = cand
                found = False
                while c:
                    y = c & (~c + 1)
                    if family.count(rest | y):
                        found = True
                        break
                    c ^= y
                if not found:
                    return (int(b1), int(b2), int(x))
    return None


def intersection_closure(generators):
    gens_py = sorted(set(g for g in generators if g))
    if not _fits(gens_py):
        return _pykernels.intersection_closure(gens_py)
    cdef vector[uint64_t] gens
    cdef vector[uint64_t] queue
    cdef unordered_set[uint64_t] seen
    for g in gens_py:
        gens.push_back(<uint64_t>g)
        queue.push_back(<uint64_t>g)
        seen.insert(<uint64_t>g)
    cdef uint64_t cur, x
    cdef size_t i
    while queue.size():
        cur = queue.back()
        queue.pop_back()
        for i in range(gens.size()):
            x = cur & gens[i]
            if x and not seen.count(x):
                seen.insert(x)
                queue.push_back(x)
    return sorted(int(v) for v in seen)


def subset_matrix(masks):
    cdef Py_ssize_t k = len(masks), i, j
    if not _fits(masks):
        return _pykernels.subset_matrix(masks)
    cdef cnp.ndarray[cnp.uint64_t, ndim=1] m = np.array(masks, dtype=np.uint64)
    cdef cnp.ndarray[cnp.uint8_t, ndim=2] out = np.zeros((k, k), dtype=np.uint8)
    cdef uint64_t a
    for i in range(k):
        a = m[i]
        for j in range(k):
            if a & ~m[j] == 0:
                out[i, j] = 1
    return out


def flag_f_vector(leq_in, ranks_in, int n):
    cdef cnp.ndarray[cnp.uint8_t, ndim=2] leq = np.ascontiguousarray(leq_in, dtype=np.uint8)
    cdef cnp.ndarray[cnp.int64_t, ndim=1] ranks = np.ascontiguousarray(ranks_in, dtype=np.int64)
    cdef Py_ssize_t F = ranks.shape[0], x, y, s
    cdef Py_ssize_t width = 1 << n
    cdef cnp.ndarray[cnp.int64_t, ndim=2] g = np.zeros((F, max(width // 2, 1)), dtype=np.int64)
    cdef cnp.ndarray[cnp.int64_t, ndim=1] f = np.zeros(width, dtype=np.int64)
    cdef int64_t ry, rx, lo, hi
    f[0] = 1
    for y in range(F):
        ry = ranks[y]
        if ry < 1 or ry > n:
            continue
        g[y, 0] = 1
        for x in range(y):
            rx = ranks[x]
            if rx < 1 or rx >= ry or not leq[x, y]:
                continue
            lo = 1 << (rx - 1)
            for s in range(lo):
                g[y, lo + s] += g[x, s]
        lo = 1 << (ry - 1)
        for s in range(lo):
            f[lo + s] += g[y, s]
    return f


def eulerian_violation(leq_in, ranks_in):
    cdef cnp.ndarray[cnp.uint8_t, ndim=2] leq = np.ascontiguousarray(leq_in, dtype=np.uint8)
    cdef cnp.ndarray[cnp.int64_t, ndim=1] ranks = np.ascontiguousarray(ranks_in, dtype=np.int64)
    cdef Py_ssize_t F = ranks.shape[0], x, a, b, u
    cdef vector[Py_ssize_t] up
    cdef vector[int64_t] mu
    cdef int64_t s, expected
    for x in range(F):
        up.clear()
        for a in range(x, F):
            if leq[x, a]:
                up.push_back(a)
        u = up.size()
        mu.assign(u, 0)
        mu[0] = 1
        for b in range(1, u):
            s = 0
            for a in range(b):
                if leq[up[a], up[b]]:
                    s += mu[a]
            mu[b] = -s
            expected = 1 if (ranks[up[b]] - ranks[x]) % 2 == 0 else -1
            if mu[b] != expected:
                return (int(x), int(up[b]))
    return None
