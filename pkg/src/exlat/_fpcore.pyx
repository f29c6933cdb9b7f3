# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled elimination kernels over F_p; twin of exlat._fppure."""

BACKEND = "compiled"


def rref(data, Py_ssize_t rows, Py_ssize_t cols, int p, inv):
    """In-place reduced row echelon form; returns pivot column list."""
    cdef unsigned char[::1] d = data
    cdef const unsigned char[::1] iv = inv
    cdef Py_ssize_t r = 0, c, i, j, pr, base, row
    cdef int v, f, tmp
    pivots = []
    for c in range(cols):
        if r == rows:
            break
        pr = -1
        for i in range(r, rows):
            if d[i * cols + c]:
                pr = i
                break
        if pr < 0:
            continue
        if pr != r:
            for j in range(c, cols):
                tmp = d[pr * cols + j]
                d[pr * cols + j] = d[r * cols + j]
                d[r * cols + j] = <unsigned char> tmp
        base = r * cols
        v = d[base + c]
        if v != 1:
            v = iv[v]
            for j in range(c, cols):
                d[base + j] = <unsigned char> ((d[base + j] * v) % p)
        for i in range(rows):
            if i == r:
                continue
            f = d[i * cols + c]
            if f:
                row = i * cols
                for j in range(c, cols):
                    tmp = d[row + j] - f * d[base + j]
                    tmp %= p
                    if tmp < 0:
                        tmp += p
                    d[row + j] = <unsigned char> tmp
        pivots.append(c)
        r += 1
    return pivots


def matmul(a, Py_ssize_t m, Py_ssize_t n, b, Py_ssize_t n2, Py_ssize_t k, int p):
    """Return the m*k product of row-major a (m*n) and b (n*k) mod p."""
    if n != n2:
        raise ValueError(f"matmul shape mismatch: {m}x{n} @ {n2}x{k}")
    cdef const unsigned char[::1] av = a
    cdef const unsigned char[::1] bv = b
    out = bytearray(m * k)
    cdef unsigned char[::1] o = out
    cdef Py_ssize_t i, j, t, arow, orow, brow
    cdef int x
    for i in range(m):
        arow = i * n
        orow = i * k
        for t in range(n):
            x = av[arow + t]
            if x:
                brow = t * k
                for j in range(k):
                    if bv[brow + j]:
                        o[orow + j] = <unsigned char> ((o[orow + j] + x * bv[brow + j]) % p)
    return out
