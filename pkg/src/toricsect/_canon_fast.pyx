# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled canonical-form kernel; same contract as ``_canon_py.canonical_key``.

Coordinates must fit in 31 bits (checked by the Python dispatcher) so every
intermediate product fits in a signed 64-bit integer.
"""
from libc.stdlib cimport malloc, free


cdef long long _lift(long long *va, long long *vb, Py_ssize_t n) except? -9:
    cdef Py_ssize_t i
    cdef long long p
    for i in range(1, n):
        p = va[i - 1] * vb[i] - vb[i - 1] * va[i]
        if p == -1:
            va[i] = -va[i]
            vb[i] = -vb[i]
        elif p != 1:
            raise ValueError(i)
    return va[n - 1] * vb[0] - vb[n - 1] * va[0]


cdef bint _scan(long long *va, long long *vb, Py_ssize_t n, long long wrap,
                long long *best, bint have_best, long long *cand):
    cdef Py_ssize_t r, j, jj, k, m = 2 * (n - 2)
    cdef long long u1a, u1b, u2a, u2b, x, y, ca, cb, s
    cdef bint better, worse
    for r in range(n):
        u1a = va[r]
        u1b = vb[r]
        if r + 1 < n:
            u2a = va[r + 1]
            u2b = vb[r + 1]
        else:
            u2a = wrap * va[0]
            u2b = wrap * vb[0]
        better = not have_best
        worse = False
        for j in range(r + 2, r + n):
            if j < n:
                jj = j
                s = 1
            else:
                jj = j - n
                s = wrap
            x = s * va[jj]
            y = s * vb[jj]
            ca = u2b * x - u2a * y
            cb = u1a * y - u1b * x
            k = 2 * (j - r - 2)
            if not better:
                if ca > best[k] or (ca == best[k] and cb > best[k + 1]):
                    worse = True
                    break
                if ca < best[k] or cb < best[k + 1]:
                    better = True
            cand[k] = ca
            cand[k + 1] = cb
        if not worse and better:
            for k in range(m):
                best[k] = cand[k]
            have_best = True
    return have_best


def canonical_key(reps, bint dihedral):
    cdef Py_ssize_t n = len(reps), i, m = 2 * (len(reps) - 2)
    cdef long long wrap
    cdef bint have = False
    if n < 2:
        raise ValueError(n)
    cdef long long *buf = <long long *> malloc(sizeof(long long) * (4 * n + 2 * m + 2))
    if buf == NULL:
        raise MemoryError()
    cdef long long *va = buf
    cdef long long *vb = buf + n
    cdef long long *best = buf + 2 * n
    cdef long long *cand = buf + 2 * n + m + 1
    try:
        for i in range(n):
            va[i] = reps[i][0]
            vb[i] = reps[i][1]
        wrap = _lift(va, vb, n)
        if wrap != 1 and wrap != -1:
            raise ValueError(n)
        have = _scan(va, vb, n, wrap, best, have, cand)
        if dihedral:
            for i in range(n):
                va[i] = reps[n - 1 - i][0]
                vb[i] = -reps[n - 1 - i][1]
            wrap = _lift(va, vb, n)
            have = _scan(va, vb, n, wrap, best, have, cand)
        return tuple([best[i] for i in range(m)])
    finally:
        free(buf)
