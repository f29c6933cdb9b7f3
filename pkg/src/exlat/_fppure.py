"""Pure-Python elimination kernels over F_p.

Same call surface as the compiled twin in ``_fpcore.pyx``; `exlat.fp`
picks whichever is importable.  Matrices are flat row-major bytearrays
with entries already reduced mod p.
"""

BACKEND = "pure"


def rref(data, rows, cols, p, inv):
    """Reduce `data` (in place) to reduced row echelon form.

    Pivoting is deterministic: leftmost pivot column, first nonzero row.
    `inv` is a lookup table with inv[a] * a == 1 mod p.  Returns the list
    of pivot columns.
    """
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        pr = -1
        for i in range(r, rows):
            if data[i * cols + c]:
                pr = i
                break
        if pr < 0:
            continue
        if pr != r:
            a, b = pr * cols, r * cols
            for j in range(c, cols):
                data[a + j], data[b + j] = data[b + j], data[a + j]
        base = r * cols
        v = data[base + c]
        if v != 1:
            iv = inv[v]
            for j in range(c, cols):
                data[base + j] = data[base + j] * iv % p
        for i in range(rows):
            if i == r:
                continue
            f = data[i * cols + c]
            if f:
                row = i * cols
                for j in range(c, cols):
                    data[row + j] = (data[row + j] - f * data[base + j]) % p
        pivots.append(c)
        r += 1
    return pivots


def matmul(a, m, n, b, n2, k, p):
    """Return the m*k product of row-major a (m*n) and b (n*k) mod p."""
    if n != n2:
        raise ValueError(f"matmul shape mismatch: {m}x{n} @ {n2}x{k}")
    out = bytearray(m * k)
    for i in range(m):
        arow = i * n
        orow = i * k
        for t in range(n):
            av = a[arow + t]
            if av:
                brow = t * k
                for j in range(k):
                    bv = b[brow + j]
                    if bv:
                        out[orow + j] = (out[orow + j] + av * bv) % p
    return out
