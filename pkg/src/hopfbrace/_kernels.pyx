# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled integer kernels; see _kernels_py.py for the reference semantics."""

from libc.stdlib cimport malloc, free


def assoc_violation(const long long[:] t, Py_ssize_t n):
    cdef Py_ssize_t a, b, c
    cdef long long ab
    for a in range(n):
        for b in range(n):
            ab = t[a * n + b]
            for c in range(n):
                if t[ab * n + c] != t[a * n + t[b * n + c]]:
                    return (a, b, c)
    return None


def is_latin(const long long[:] t, Py_ssize_t n):
    cdef Py_ssize_t a, b
    cdef char *row = <char *> malloc(n)
    cdef char *col = <char *> malloc(n)
    try:
        for a in range(n):
            for b in range(n):
                row[b] = 0
                col[b] = 0
            for b in range(n):
                row[t[a * n + b]] = 1
                col[t[b * n + a]] = 1
            for b in range(n):
                if not row[b] or not col[b]:
                    return False
        return True
    finally:
        free(row)
        free(col)


def brace_violation(const long long[:] dot, const long long[:] dia,
                    const long long[:] inv, Py_ssize_t n):
    cdef Py_ssize_t a, b, c
    cdef long long ia, ab, left, lhs, rhs
    for a in range(n):
        ia = inv[a]
        for b in range(n):
            ab = dia[a * n + b]
            left = dot[ab * n + ia]
            for c in range(n):
                lhs = dia[a * n + dot[b * n + c]]
                rhs = dot[left * n + dia[a * n + c]]
                if lhs != rhs:
                    return (a, b, c)
    return None


def canonical_pair(const long long[:] dot, const long long[:] dia, Py_ssize_t n,
                   const long long[:] perms, Py_ssize_t nperms):
    cdef Py_ssize_t nn = n * n
    cdef Py_ssize_t k, a, i, j, pos
    cdef long long v
    cdef int state  # -1 smaller, 0 equal so far, 1 larger
    cdef long long *best = <long long *> malloc(2 * nn * sizeof(long long))
    cdef long long *inv = <long long *> malloc(n * sizeof(long long))
    cdef int have = 0
    try:
        for k in range(nperms):
            for a in range(n):
                inv[perms[k * n + a]] = a
            state = 0 if have else -1
            for pos in range(2 * nn):
                i = (pos % nn) // n
                j = pos % n
                if pos < nn:
                    v = perms[k * n + dot[inv[i] * n + inv[j]]]
                else:
                    v = perms[k * n + dia[inv[i] * n + inv[j]]]
                if state == 0:
                    if v < best[pos]:
                        state = -1
                    elif v > best[pos]:
                        state = 1
                        break
                if state == -1:
                    best[pos] = v
            if state == -1:
                have = 1
        return tuple([best[pos] for pos in range(2 * nn)])
    finally:
        free(best)
        free(inv)


def set_braid_violation(const long long[:] r1, const long long[:] r2, Py_ssize_t n):
    cdef Py_ssize_t a, b, c
    cdef long long x, y, z, x2, y2, z2, t
    for a in range(n):
        for b in range(n):
            for c in range(n):
                x = r1[a * n + b]; y = r2[a * n + b]; z = c
                t = r1[y * n + z]; z = r2[y * n + z]; y = t
                t = r1[x * n + y]; y = r2[x * n + y]; x = t
                x2 = a
                y2 = r1[b * n + c]; z2 = r2[b * n + c]
                t = r1[x2 * n + y2]; y2 = r2[x2 * n + y2]; x2 = t
                t = r1[y2 * n + z2]; z2 = r2[y2 * n + z2]; y2 = t
                if x != x2 or y != y2 or z != z2:
                    return (a, b, c)
    return None


cdef long long _powmod(long long b, long long e, long long p):
    cdef long long r = 1
    b %= p
    while e > 0:
        if e & 1:
            r = (r * b) % p
        b = (b * b) % p
        e >>= 1
    return r


def gfp_rref(long long[:] m, Py_ssize_t nrows, Py_ssize_t ncols, long long p):
    cdef Py_ssize_t r = 0, c, i, j, piv
    cdef long long inv, f, tmp
    pivots = []
    for i in range(nrows * ncols):
        m[i] %= p
        if m[i] < 0:
            m[i] += p
    for c in range(ncols):
        if r == nrows:
            break
        piv = -1
        for i in range(r, nrows):
            if m[i * ncols + c] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            for j in range(ncols):
                tmp = m[r * ncols + j]
                m[r * ncols + j] = m[piv * ncols + j]
                m[piv * ncols + j] = tmp
        inv = _powmod(m[r * ncols + c], p - 2, p)
        for j in range(ncols):
            m[r * ncols + j] = (m[r * ncols + j] * inv) % p
        for i in range(nrows):
            if i == r:
                continue
            f = m[i * ncols + c]
            if f != 0:
                for j in range(ncols):
                    m[i * ncols + j] = (m[i * ncols + j] - f * m[r * ncols + j]) % p
                    if m[i * ncols + j] < 0:
                        m[i * ncols + j] += p
        pivots.append(c)
        r += 1
    for i in range(r * ncols, nrows * ncols):
        m[i] = 0
    return pivots
