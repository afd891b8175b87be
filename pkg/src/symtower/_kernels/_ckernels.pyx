# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=False
"""Compiled versions of the hot kernels (see ``_fallback`` for the contract)."""

import numpy as np
cimport numpy as cnp

cnp.import_array()

BACKEND = "cython"

ctypedef long long i64

cdef i64 SAFE = 1LL << 31


def map_encode(rows, flat_table, offsets, i64 radix, bint sort_rows):
    cdef i64[:, :] r = np.ascontiguousarray(rows, dtype=np.int64)
    cdef i64[:] tab = np.ascontiguousarray(flat_table, dtype=np.int64)
    cdef i64[:] off = np.ascontiguousarray(offsets, dtype=np.int64)
    cdef Py_ssize_t n = r.shape[0]
    cdef Py_ssize_t k = r.shape[1] if r.ndim == 2 else 0
    out = np.zeros(n, dtype=np.int64)
    cdef i64[:] keys = out
    cdef i64 buf[64]
    cdef Py_ssize_t a, b, c
    cdef i64 v, key
    cdef bint zero
    if k > 64:
        raise ValueError("at most 64 tuple columns supported")
    for a in range(n):
        zero = False
        for c in range(k):
            v = tab[off[c] + r[a, c]]
            if v == 0:
                zero = True
                break
            buf[c] = v
        if zero:
            keys[a] = 0
            continue
        if sort_rows:
            for b in range(1, k):
                v = buf[b]
                c = b - 1
                while c >= 0 and buf[c] > v:
                    buf[c + 1] = buf[c]
                    c -= 1
                buf[c + 1] = v
        key = 0
        for c in range(k):
            key = key * radix + buf[c]
        keys[a] = key
    return out


cdef inline i64 _abs(i64 v):
    return -v if v < 0 else v


# cdivision=False: // and % follow Python (floor) semantics
cdef inline i64 _floordiv(i64 a, i64 b):
    return a // b


cdef inline i64 _mod(i64 a, i64 b):
    return a % b


cdef bint _min_entry(i64[:, :] a, Py_ssize_t t, Py_ssize_t m, Py_ssize_t n,
                     Py_ssize_t *pi, Py_ssize_t *pj):
    cdef i64 best = 0
    cdef i64 av
    cdef Py_ssize_t i, j
    cdef bint found = False
    for i in range(t, m):
        for j in range(t, n):
            if a[i, j] != 0:
                av = _abs(a[i, j])
                if not found or av < best:
                    best = av
                    pi[0] = i
                    pj[0] = j
                    found = True
                    if av == 1:
                        return True
    return found


cdef inline i64 _checked_sub_mul(i64 x, i64 q, i64 y) except? -1:
    if _abs(q) >= SAFE or _abs(y) >= SAFE or _abs(x) >= (SAFE << 30):
        raise OverflowError("int64 Smith elimination overflow")
    return x - q * y


cdef inline i64 _checked_add(i64 x, i64 y) except? -1:
    if _abs(x) >= (SAFE << 30) or _abs(y) >= (SAFE << 30):
        raise OverflowError("int64 Smith elimination overflow")
    return x + y


def smith_diagonal(matrix):
    arr = np.array(matrix, dtype=np.int64, copy=True)
    if arr.ndim != 2:
        arr = arr.reshape(0, 0)
    cdef i64[:, :] a = arr
    cdef Py_ssize_t m = a.shape[0]
    cdef Py_ssize_t n = a.shape[1]
    cdef Py_ssize_t t = 0, i, j, pi = 0, pj = 0, bad
    cdef i64 p, q, tmp
    cdef bint clean
    diag = []
    while t < m and t < n:
        if not _min_entry(a, t, m, n, &pi, &pj):
            break
        while True:
            if pi != t:
                for j in range(n):
                    tmp = a[t, j]
                    a[t, j] = a[pi, j]
                    a[pi, j] = tmp
            if pj != t:
                for i in range(t, m):
                    tmp = a[i, t]
                    a[i, t] = a[i, pj]
                    a[i, pj] = tmp
            p = a[t, t]
            for i in range(t + 1, m):
                q = _floordiv(a[i, t], p)
                if q != 0:
                    for j in range(t, n):
                        if a[t, j] != 0:
                            a[i, j] = _checked_sub_mul(a[i, j], q, a[t, j])
            for j in range(t + 1, n):
                q = _floordiv(a[t, j], p)
                if q != 0:
                    for i in range(t, m):
                        if a[i, t] != 0:
                            a[i, j] = _checked_sub_mul(a[i, j], q, a[i, t])
            clean = True
            for i in range(t + 1, m):
                if a[i, t] != 0:
                    clean = False
                    break
            if clean:
                for j in range(t + 1, n):
                    if a[t, j] != 0:
                        clean = False
                        break
            if clean:
                bad = -1
                for i in range(t + 1, m):
                    for j in range(t + 1, n):
                        if _mod(a[i, j], p) != 0:
                            bad = i
                            break
                    if bad >= 0:
                        break
                if bad < 0:
                    break
                for j in range(t, n):
                    a[t, j] = _checked_add(a[t, j], a[bad, j])
            _min_entry(a, t, m, n, &pi, &pj)
        diag.append(int(_abs(a[t, t])))
        t += 1
    return diag
