"""Exact dense linear algebra over a prime field F_p.

This is the computational substrate for everything else: representations,
Hom spaces, Ext groups and all invariants reduce to rank / solve / kernel
computations on small dense matrices over F_p.  Entries are ints in
[0, p), stored row-major in bytes, so p must be < 256 (enumeration of Hom
spaces downstream is only feasible for tiny p anyway).

Elimination is deterministic (leftmost pivot column, first nonzero row),
so all bases, solutions and projections are reproducible bit-for-bit.

The inner loops live in a compiled Cython kernel (`exlat._fpcore`) with a
pure-Python fallback (`exlat._fppure`); set EXLAT_PURE=1 to force the
fallback.
"""

from __future__ import annotations

import os

if os.environ.get("EXLAT_PURE"):
    from . import _fppure as _kernels
else:
    try:
        from . import _fpcore as _kernels  # type: ignore[attr-defined]
    except ImportError:
        from . import _fppure as _kernels

BACKEND = _kernels.BACKEND

_INV_TABLES: dict[int, bytes] = {}


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def inverse_table(p: int) -> bytes:
    """Table of multiplicative inverses mod p (index 0 unused)."""
    tab = _INV_TABLES.get(p)
    if tab is None:
        tab = bytes([0] + [pow(a, p - 2, p) for a in range(1, p)])
        _INV_TABLES[p] = tab
    return tab


class PrimeField:
    """The field F_p for a fixed prime p < 256."""

    __slots__ = ("p", "inv")

    def __init__(self, p: int):
        if not is_prime(p):
            raise ValueError(f"field characteristic must be prime, got {p}")
        if p >= 256:
            raise ValueError(f"characteristic {p} too large (must be < 256)")
        self.p = p
        self.inv = inverse_table(p)

    def __repr__(self):
        return f"PrimeField({self.p})"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("PrimeField", self.p))

    def element(self, value: int) -> int:
        """Canonical residue of an integer in [0, p)."""
        return value % self.p


class Matrix:
    """Immutable dense matrix over F_p (rows x cols, row-major bytes)."""

    __slots__ = ("p", "rows", "cols", "data")

    def __init__(self, p: int, rows: int, cols: int, data=None):
        if rows < 0 or cols < 0:
            raise ValueError("negative matrix dimensions")
        self.p = p
        self.rows = rows
        self.cols = cols
        if data is None:
            self.data = bytes(rows * cols)
        else:
            buf = bytes(v % p for v in data) if not isinstance(data, (bytes, bytearray)) else bytes(data)
            if len(buf) != rows * cols:
                raise ValueError(f"expected {rows * cols} entries, got {len(buf)}")
            self.data = buf

    # -- constructors ---------------------------------------------------

    @classmethod
    def zeros(cls, p: int, rows: int, cols: int) -> "Matrix":
        return cls(p, rows, cols)

    @classmethod
    def identity(cls, p: int, n: int) -> "Matrix":
        buf = bytearray(n * n)
        for i in range(n):
            buf[i * n + i] = 1
        return cls(p, n, n, bytes(buf))

    @classmethod
    def from_rows(cls, p: int, rows_list) -> "Matrix":
        rows_list = [list(r) for r in rows_list]
        rows = len(rows_list)
        cols = len(rows_list[0]) if rows else 0
        flat = []
        for r in rows_list:
            if len(r) != cols:
                raise ValueError("ragged rows")
            flat.extend(v % p for v in r)
        return cls(p, rows, cols, flat)

    @classmethod
    def column(cls, p: int, entries) -> "Matrix":
        entries = list(entries)
        return cls(p, len(entries), 1, [v % p for v in entries])

    # -- basics ----------------------------------------------------------

    def entry(self, i: int, j: int) -> int:
        return self.data[i * self.cols + j]

    def row(self, i: int) -> list[int]:
        return list(self.data[i * self.cols : (i + 1) * self.cols])

    def col(self, j: int) -> list[int]:
        return [self.data[i * self.cols + j] for i in range(self.rows)]

    def tolist(self) -> list[list[int]]:
        return [self.row(i) for i in range(self.rows)]

    def is_zero(self) -> bool:
        return not any(self.data)

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and other.p == self.p
            and other.rows == self.rows
            and other.cols == self.cols
            and other.data == self.data
        )

    def __hash__(self):
        return hash((self.p, self.rows, self.cols, self.data))

    def __repr__(self):
        return f"Matrix(p={self.p}, {self.rows}x{self.cols}, {self.tolist()})"

    # -- arithmetic -------------------------------------------------------

    def _check_same_shape(self, other: "Matrix"):
        if self.p != other.p or self.rows != other.rows or self.cols != other.cols:
            raise ValueError("matrix shape/field mismatch")

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_same_shape(other)
        p = self.p
        return Matrix(p, self.rows, self.cols, bytes((a + b) % p for a, b in zip(self.data, other.data)))

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check_same_shape(other)
        p = self.p
        return Matrix(p, self.rows, self.cols, bytes((a - b) % p for a, b in zip(self.data, other.data)))

    def __neg__(self) -> "Matrix":
        p = self.p
        return Matrix(p, self.rows, self.cols, bytes((-a) % p for a in self.data))

    def scale(self, c: int) -> "Matrix":
        p = self.p
        c %= p
        return Matrix(p, self.rows, self.cols, bytes(a * c % p for a in self.data))

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.p != other.p:
            raise ValueError("field mismatch")
        if self.cols != other.rows:
            raise ValueError(f"matmul shape mismatch: {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        out = _kernels.matmul(self.data, self.rows, self.cols, other.data, other.rows, other.cols, self.p)
        return Matrix(self.p, self.rows, other.cols, bytes(out))

    def transpose(self) -> "Matrix":
        buf = bytearray(self.rows * self.cols)
        for i in range(self.rows):
            base = i * self.cols
            for j in range(self.cols):
                buf[j * self.rows + i] = self.data[base + j]
        return Matrix(self.p, self.cols, self.rows, bytes(buf))

    def hstack(self, other: "Matrix") -> "Matrix":
        if self.p != other.p or self.rows != other.rows:
            raise ValueError("hstack shape mismatch")
        buf = bytearray()
        for i in range(self.rows):
            buf += self.data[i * self.cols : (i + 1) * self.cols]
            buf += other.data[i * other.cols : (i + 1) * other.cols]
        return Matrix(self.p, self.rows, self.cols + other.cols, bytes(buf))

    def vstack(self, other: "Matrix") -> "Matrix":
        if self.p != other.p or self.cols != other.cols:
            raise ValueError("vstack shape mismatch")
        return Matrix(self.p, self.rows + other.rows, self.cols, self.data + other.data)

    # -- elimination -------------------------------------------------------

    def rref(self) -> tuple["Matrix", tuple[int, ...]]:
        """Reduced row echelon form and its pivot columns."""
        buf = bytearray(self.data)
        pivots = _kernels.rref(buf, self.rows, self.cols, self.p, inverse_table(self.p))
        return Matrix(self.p, self.rows, self.cols, bytes(buf)), tuple(pivots)

    def rank(self) -> int:
        buf = bytearray(self.data)
        return len(_kernels.rref(buf, self.rows, self.cols, self.p, inverse_table(self.p)))

    def solve(self, b: "Matrix") -> "Matrix | None":
        """Some x with self @ x == b (free variables 0), or None if inconsistent."""
        if self.p != b.p or self.rows != b.rows:
            raise ValueError(f"solve shape mismatch: {self.rows}x{self.cols} vs rhs {b.rows}x{b.cols}")
        n = self.cols
        aug, pivots = self.hstack(b).rref()
        for pc in pivots:
            if pc >= n:
                return None
        out = bytearray(n * b.cols)
        for r, pc in enumerate(pivots):
            base = r * aug.cols + n
            out[pc * b.cols : (pc + 1) * b.cols] = aug.data[base : base + b.cols]
        return Matrix(self.p, n, b.cols, bytes(out))

    def kernel_basis(self) -> "Matrix":
        """Matrix whose columns form a basis of the null space (cols - rank of them)."""
        red, pivots = self.rref()
        free = [c for c in range(self.cols) if c not in pivots]
        buf = bytearray(self.cols * len(free))
        w = len(free)
        p = self.p
        for idx, fc in enumerate(free):
            buf[fc * w + idx] = 1
            for r, pc in enumerate(pivots):
                v = red.entry(r, fc)
                if v:
                    buf[pc * w + idx] = (-v) % p
        return Matrix(self.p, self.cols, w, bytes(buf))

    def cokernel_projection(self) -> tuple["Matrix", int]:
        """Projection of the codomain onto a complement of the column space.

        Returns (proj, dim) with proj of shape dim x rows, full row rank,
        proj @ self == 0 and dim == rows - rank.
        """
        proj = self.transpose().kernel_basis().transpose()
        return proj, proj.rows


def block_diag(mats: list[Matrix], p: int) -> Matrix:
    rows = sum(m.rows for m in mats)
    cols = sum(m.cols for m in mats)
    buf = bytearray(rows * cols)
    r0 = c0 = 0
    for m in mats:
        for i in range(m.rows):
            base = (r0 + i) * cols + c0
            buf[base : base + m.cols] = m.data[i * m.cols : (i + 1) * m.cols]
        r0 += m.rows
        c0 += m.cols
    return Matrix(p, rows, cols, bytes(buf))
