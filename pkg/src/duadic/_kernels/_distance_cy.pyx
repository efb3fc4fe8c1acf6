# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled exhaustive minimum-weight enumeration.

Same contract as _distance_py (bit-identical results); the odometer loop
runs with the GIL released so table verification can thread entries.
"""

import numpy as np


def min_weight_prime(rows, long long p, long long total, long long stop_at=0):
    """(best weight, messages visited) over ``total`` odometer steps in GF(p)."""
    cdef long long[:, ::1] r = np.ascontiguousarray(rows, dtype=np.int64)
    cdef Py_ssize_t k = r.shape[0], n = r.shape[1]
    cdef long long[::1] c = np.zeros(n, dtype=np.int64)
    cdef long long[::1] digits = np.zeros(k, dtype=np.int64)
    cdef long long best = n + 1, w = 0, cnt = 0
    cdef long long old, new
    cdef Py_ssize_t i, j
    with nogil:
        while cnt < total:
            cnt += 1
            i = 0
            while True:
                for j in range(n):
                    old = c[j]
                    new = old + r[i, j]
                    if new >= p:
                        new -= p
                    if old == 0:
                        if new != 0:
                            w += 1
                    elif new == 0:
                        w -= 1
                    c[j] = new
                digits[i] += 1
                if digits[i] == p:
                    digits[i] = 0
                    i += 1
                else:
                    break
            if w < best:
                best = w
                if best <= stop_at:
                    break
    return int(best), int(cnt)


def min_weight_table(steps, add_table, long long total, long long stop_at=0):
    """(best weight, messages visited) using a dense (q, q) addition table."""
    cdef int[:, :, ::1] s = np.ascontiguousarray(steps, dtype=np.int32)
    cdef int[:, ::1] tab = np.ascontiguousarray(add_table, dtype=np.int32)
    cdef Py_ssize_t k = s.shape[0], q = s.shape[1], n = s.shape[2]
    cdef int[::1] c = np.zeros(n, dtype=np.int32)
    cdef long long[::1] digits = np.zeros(k, dtype=np.int64)
    cdef long long best = n + 1, w = 0, cnt = 0
    cdef int old, new
    cdef Py_ssize_t i, j
    cdef long long v
    with nogil:
        while cnt < total:
            cnt += 1
            i = 0
            while True:
                v = digits[i]
                for j in range(n):
                    old = c[j]
                    new = tab[old, s[i, v, j]]
                    if old == 0:
                        if new != 0:
                            w += 1
                    elif new == 0:
                        w -= 1
                    c[j] = new
                if v + 1 == q:
                    digits[i] = 0
                    i += 1
                else:
                    digits[i] = v + 1
                    break
            if w < best:
                best = w
                if best <= stop_at:
                    break
    return int(best), int(cnt)
