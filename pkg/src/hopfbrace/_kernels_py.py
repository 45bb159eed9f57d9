"""Pure-Python reference implementation of the integer kernels.

Every function here has an identically named twin in ``_kernels.pyx``.
Tables are flat row-major buffers of length n*n (``array('q')`` or list);
``t[a*n + b]`` is the product of elements a and b.
"""

from __future__ import annotations


def assoc_violation(t, n):
    for a in range(n):
        for b in range(n):
            ab = t[a * n + b]
            for c in range(n):
                if t[ab * n + c] != t[a * n + t[b * n + c]]:
                    return (a, b, c)
    return None


def is_latin(t, n):
    for a in range(n):
        seen_row = set()
        seen_col = set()
        for b in range(n):
            seen_row.add(t[a * n + b])
            seen_col.add(t[b * n + a])
        if len(seen_row) != n or len(seen_col) != n:
            return False
    return True


def brace_violation(dot, dia, inv, n):
    """First triple with a<>(b.c) != (a<>b) . a^-1 . (a<>c), or None."""
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


def canonical_pair(dot, dia, n, perms, nperms):
    """Lexicographically least simultaneous relabelling of two tables.

    ``perms`` is a flat buffer of ``nperms`` permutations of range(n); the
    relabelled table is T'[s(a), s(b)] = s(T[a, b]).
    """
    best = None
    nn = n * n
    inv = [0] * n
    for k in range(nperms):
        s = perms[k * n:(k + 1) * n]
        for a in range(n):
            inv[s[a]] = a
        cand = [0] * (2 * nn)
        for i in range(n):
            ii = inv[i]
            for j in range(n):
                jj = inv[j]
                cand[i * n + j] = s[dot[ii * n + jj]]
                cand[nn + i * n + j] = s[dia[ii * n + jj]]
        if best is None or cand < best:
            best = cand
    return tuple(best)


def set_braid_violation(r1, r2, n):
    """Check r12 r23 r12 == r23 r12 r23 for r(a, b) = (r1[a,b], r2[a,b])."""
    for a in range(n):
        for b in range(n):
            for c in range(n):
                # left: r12, then r23, then r12
                x, y = r1[a * n + b], r2[a * n + b]
                z = c
                y, z = r1[y * n + z], r2[y * n + z]
                x, y = r1[x * n + y], r2[x * n + y]
                left = (x, y, z)
                # right: r23, then r12, then r23
                x = a
                y, z = r1[b * n + c], r2[b * n + c]
                x, y = r1[x * n + y], r2[x * n + y]
                y, z = r1[y * n + z], r2[y * n + z]
                if left != (x, y, z):
                    return (a, b, c)
    return None


def gfp_rref(m, nrows, ncols, p):
    """Reduced row echelon form over GF(p), in place on a flat row-major buffer.

    Returns the list of pivot columns; the first len(pivots) rows of ``m``
    hold the reduced basis afterwards.
    """
    for i in range(nrows * ncols):
        m[i] %= p
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        piv = -1
        for i in range(r, nrows):
            if m[i * ncols + c] % p:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            for j in range(ncols):
                m[r * ncols + j], m[piv * ncols + j] = m[piv * ncols + j], m[r * ncols + j]
        inv = pow(m[r * ncols + c] % p, p - 2, p)
        for j in range(ncols):
            m[r * ncols + j] = (m[r * ncols + j] * inv) % p
        for i in range(nrows):
            if i == r:
                continue
            f = m[i * ncols + c] % p
            if f:
                for j in range(ncols):
                    m[i * ncols + j] = (m[i * ncols + j] - f * m[r * ncols + j]) % p
        pivots.append(c)
        r += 1
    for i in range(r, nrows):
        for j in range(ncols):
            m[i * ncols + j] = 0
    return pivots
