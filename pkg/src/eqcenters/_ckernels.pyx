# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled versions of the hot kernels; same contracts as ``_pykernels``."""
import numpy as np
cimport numpy as cnp
from libc.math cimport fabs

from . import _pykernels
from ._pykernels import MAX_TABLE_M

cnp.import_array()


def match_permutations(double[:, ::1] ds, double[:, ::1] dt, compat,
                       order, double tol_abs, double tol_rel, Py_ssize_t limit=0):
    cdef Py_ssize_t m = ds.shape[0]
    cdef cnp.uint8_t[:, ::1] cm = np.ascontiguousarray(compat, dtype=np.uint8)
    cdef Py_ssize_t[::1] ordv = np.ascontiguousarray(order, dtype=np.intp)
    cdef Py_ssize_t[::1] perm = np.full(m, -1, dtype=np.intp)
    cdef Py_ssize_t[::1] nxt = np.zeros(m + 1, dtype=np.intp)
    cdef cnp.uint8_t[::1] used = np.zeros(m, dtype=np.uint8)
    cdef Py_ssize_t depth = 0, src, t, e, s2
    cdef double a, b, hi
    cdef bint ok
    found = []

    if m == 0:
        return np.zeros((1, 0), dtype=np.int64)

    while depth >= 0:
        if depth == m:
            found.append(np.asarray(perm).copy())
            if limit > 0 and len(found) >= limit:
                break
            depth -= 1
            src = ordv[depth]
            used[perm[src]] = 0
            perm[src] = -1
            continue
        src = ordv[depth]
        t = nxt[depth]
        ok = False
        while t < m:
            if not used[t] and cm[src, t]:
                ok = True
                for e in range(depth):
                    s2 = ordv[e]
                    a = ds[src, s2]
                    b = dt[t, perm[s2]]
                    hi = fabs(a) if fabs(a) > fabs(b) else fabs(b)
                    if fabs(a - b) > tol_abs + tol_rel * hi:
                        ok = False
                        break
                if ok:
                    break
            t += 1
        if ok:
            perm[src] = t
            used[t] = 1
            nxt[depth] = t + 1
            depth += 1
            nxt[depth] = 0
        else:
            nxt[depth] = 0
            depth -= 1
            if depth >= 0:
                src = ordv[depth]
                used[perm[src]] = 0
                perm[src] = -1

    if not found:
        return np.zeros((0, m), dtype=np.int64)
    return np.array(found, dtype=np.int64)


cdef bint _closed(cnp.int64_t[:, ::1] p, cnp.int64_t[::1] w, cnp.uint8_t[::1] table,
                  cnp.int64_t[::1] inv) noexcept nogil:
    cdef Py_ssize_t k = p.shape[0], m = p.shape[1], i, j, r
    cdef long long c
    for i in range(k):
        c = 0
        for r in range(m):
            c += p[i, r] * w[r]
        if table[c]:
            return False
        table[c] = 1
    c = 0
    for r in range(m):
        c += r * w[r]
    if not table[c]:
        return False
    for i in range(k):
        for r in range(m):
            inv[p[i, r]] = r
        c = 0
        for r in range(m):
            c += inv[r] * w[r]
        if not table[c]:
            return False
        for j in range(k):
            c = 0
            for r in range(m):
                c += p[i, p[j, r]] * w[r]
            if not table[c]:
                return False
    return True


def perm_group_closed(perms):
    arr = np.ascontiguousarray(perms, dtype=np.int64)
    if arr.ndim != 2 or arr.shape[0] == 0:
        return False
    cdef cnp.int64_t[:, ::1] p = arr
    cdef Py_ssize_t k = p.shape[0], m = p.shape[1]
    cdef bint res
    if m == 0:
        return True
    if m > MAX_TABLE_M or arr.min() < 0 or arr.max() >= m:
        return _pykernels.perm_group_closed(arr)
    cdef cnp.int64_t[::1] w = int(m) ** np.arange(m, dtype=np.int64)
    cdef cnp.uint8_t[::1] table = np.zeros(int(m) ** int(m), dtype=np.uint8)
    cdef cnp.int64_t[::1] inv = np.empty(m, dtype=np.int64)
    with nogil:
        res = _closed(p, w, table, inv)
    return res
