# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled inner loops. Fixed-width; callers guarantee no int64 overflow."""

import numpy as np


def dp_step(const long long[::1] f, const long long[:, ::1] table):
    """out[w] = sum_j f[table[w, j]]."""
    cdef Py_ssize_t n = table.shape[0], k = table.shape[1], i, j
    cdef long long s
    out = np.empty(n, dtype=np.int64)
    cdef long long[::1] o = out
    for i in range(n):
        s = 0
        for j in range(k):
            s += f[table[i, j]]
        o[i] = s
    return out


def lehmer_rank(const long long[:, ::1] perms):
    """Lexicographic rank of each row permutation of 0..n-1."""
    cdef Py_ssize_t m = perms.shape[0], n = perms.shape[1], a, i, j
    cdef long long code, c
    out = np.empty(m, dtype=np.int64)
    cdef long long[::1] o = out
    for a in range(m):
        code = 0
        for i in range(n):
            c = 0
            for j in range(i + 1, n):
                if perms[a, j] < perms[a, i]:
                    c += 1
            code = code * (n - i) + c
        o[a] = code
    return out
