"""Quiver representations, morphism spaces and Krull-Schmidt splitting.

A representation assigns a vector space over F_p to every vertex and a
matrix to every arrow (rows indexed by the target, columns by the
source).  Morphisms are vertexwise matrices satisfying the intertwining
condition component_t o map(a) = map'(a) o component_s for every arrow
a: s -> t.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .fp import Matrix, block_diag
from .quiver import Quiver

# Hom spaces bigger than this are never enumerated elementwise.
ENUMERATION_LIMIT = 2 ** 22


@dataclass(frozen=True)
class Representation:
    quiver: Quiver
    p: int
    dim: tuple[int, ...]
    maps: tuple[Matrix, ...]

    def __post_init__(self):
        if len(self.dim) != len(self.quiver.vertices):
            raise ValueError("dimension vector length != number of vertices")
        if len(self.maps) != len(self.quiver.arrows):
            raise ValueError("one matrix per arrow required")
        for a, m in zip(self.quiver.arrows, self.maps):
            s = self.dim[self.quiver.vertex_index(a.source)]
            t = self.dim[self.quiver.vertex_index(a.target)]
            if m.p != self.p or (m.rows, m.cols) != (t, s):
                raise ValueError(f"map for arrow {a.name} must be {t}x{s} over F_{self.p}")

    @classmethod
    def build(cls, quiver: Quiver, p: int, dims: dict[str, int], maps: dict[str, Matrix] | None = None) -> "Representation":
        """Construct from vertex->dim and arrow-name->matrix dicts (missing maps are zero)."""
        maps = maps or {}
        dim = tuple(dims.get(v, 0) for v in quiver.vertices)
        mats = []
        for a in quiver.arrows:
            t = dim[quiver.vertex_index(a.target)]
            s = dim[quiver.vertex_index(a.source)]
            mats.append(maps.get(a.name, Matrix.zeros(p, t, s)))
        return cls(quiver, p, dim, tuple(mats))

    @classmethod
    def zero(cls, quiver: Quiver, p: int) -> "Representation":
        return cls.build(quiver, p, {})

    @classmethod
    def simple(cls, quiver: Quiver, p: int, v: str) -> "Representation":
        return cls.build(quiver, p, {v: 1})

    @property
    def total_dim(self) -> int:
        return sum(self.dim)

    def is_zero(self) -> bool:
        return self.total_dim == 0

    def map(self, arrow_name: str) -> Matrix:
        return self.maps[self.quiver.arrow_index(arrow_name)]

    def dim_at(self, v: str) -> int:
        return self.dim[self.quiver.vertex_index(v)]

    def restrict(self, sub: Quiver) -> "Representation":
        """Restriction to a subquiver (the exact functor of a reduction step)."""
        if not self.quiver.contains_subquiver(sub):
            raise ValueError("not a subquiver")
        dims = {v: self.dim_at(v) for v in sub.vertices}
        maps = {a.name: self.map(a.name) for a in sub.arrows}
        return Representation.build(sub, self.p, dims, maps)

    def dual(self) -> "Representation":
        """Vertexwise dual over the opposite quiver (reverse arrows, transpose maps)."""
        op = self.quiver.opposite()
        mats = {a.name: self.map(a.name).transpose() for a in self.quiver.arrows}
        dims = {v: self.dim_at(v) for v in self.quiver.vertices}
        return Representation.build(op, self.p, dims, mats)

    def path_matrix(self, path: tuple[str, ...], source: str) -> Matrix:
        """Composite of arrow maps along a path starting at `source`."""
        m = Matrix.identity(self.p, self.dim_at(source))
        for name in path:
            m = self.map(name) @ m
        return m

    def __repr__(self):
        return f"Representation(dim={self.dim})"


@dataclass(frozen=True)
class Morphism:
    source: Representation
    target: Representation
    components: tuple[Matrix, ...]
    check: bool = field(default=True, repr=False, compare=False)

    def __post_init__(self):
        if self.source.quiver != self.target.quiver or self.source.p != self.target.p:
            raise ValueError("morphism endpoints live over different quivers/fields")
        q = self.source.quiver
        for i, v in enumerate(q.vertices):
            c = self.components[i]
            if (c.rows, c.cols) != (self.target.dim[i], self.source.dim[i]):
                raise ValueError(f"component at vertex {v} has wrong shape")
        if self.check:
            for a in q.arrows:
                s, t = q.vertex_index(a.source), q.vertex_index(a.target)
                if self.components[t] @ self.source.maps[q.arrow_index(a.name)] != self.target.maps[q.arrow_index(a.name)] @ self.components[s]:
                    raise ValueError(f"components do not intertwine at arrow {a.name}")

    @classmethod
    def zero_map(cls, x: Representation, y: Representation) -> "Morphism":
        comps = tuple(Matrix.zeros(x.p, y.dim[i], x.dim[i]) for i in range(len(x.dim)))
        return cls(x, y, comps, check=False)

    @classmethod
    def identity(cls, x: Representation) -> "Morphism":
        comps = tuple(Matrix.identity(x.p, d) for d in x.dim)
        return cls(x, x, comps, check=False)

    def component(self, v: str) -> Matrix:
        return self.components[self.source.quiver.vertex_index(v)]

    def then(self, other: "Morphism") -> "Morphism":
        """Composite self followed by other (other o self)."""
        if other.source.dim != self.target.dim:
            raise ValueError("morphisms not composable")
        comps = tuple(b @ a for a, b in zip(self.components, other.components))
        return Morphism(self.source, other.target, comps, check=False)

    def __add__(self, other: "Morphism") -> "Morphism":
        comps = tuple(a + b for a, b in zip(self.components, other.components))
        return Morphism(self.source, self.target, comps, check=False)

    def __sub__(self, other: "Morphism") -> "Morphism":
        comps = tuple(a - b for a, b in zip(self.components, other.components))
        return Morphism(self.source, self.target, comps, check=False)

    def scale(self, c: int) -> "Morphism":
        return Morphism(self.source, self.target, tuple(m.scale(c) for m in self.components), check=False)

    def is_zero(self) -> bool:
        return all(m.is_zero() for m in self.components)

    def is_mono(self) -> bool:
        return all(m.rank() == m.cols for m in self.components)

    def is_epi(self) -> bool:
        return all(m.rank() == m.rows for m in self.components)

    def is_iso(self) -> bool:
        return self.source.dim == self.target.dim and self.is_mono()

    def restrict(self, sub: Quiver) -> "Morphism":
        src, tgt = self.source.restrict(sub), self.target.restrict(sub)
        comps = tuple(self.component(v) for v in sub.vertices)
        return Morphism(src, tgt, comps, check=False)

    def __repr__(self):
        return f"Morphism({self.source.dim} -> {self.target.dim})"


# -- Hom spaces --------------------------------------------------------------


def _intertwining_system(x: Representation, y: Representation) -> Matrix:
    """Coefficient matrix whose kernel is Hom(x, y) in vectorised coordinates.

    Unknowns are the entries of the components phi_v (row-major), vertex
    blocks in quiver order; one equation block per arrow.
    """
    q = x.quiver
    p = x.p
    offs = []
    total = 0
    for i in range(len(q.vertices)):
        offs.append(total)
        total += y.dim[i] * x.dim[i]
    n_rows = sum(
        y.dim[q.vertex_index(a.target)] * x.dim[q.vertex_index(a.source)] for a in q.arrows
    )
    buf = bytearray(n_rows * total)
    pos = 0
    for ai, a in enumerate(q.arrows):
        s, t = q.vertex_index(a.source), q.vertex_index(a.target)
        xa = x.maps[ai].data
        ya = y.maps[ai].data
        xdt, xds, yds = x.dim[t], x.dim[s], y.dim[s]
        # phi_t @ xa - ya @ phi_s = 0, entrywise (r, c) with r < y.dim[t], c < x.dim[s]
        for r in range(y.dim[t]):
            for c in range(xds):
                base = pos * total
                off_t = base + offs[t] + r * xdt
                for k in range(xdt):
                    v = xa[k * xds + c]
                    if v:
                        buf[off_t + k] = v
                off_s = base + offs[s]
                for k in range(yds):
                    v = ya[r * yds + k]
                    if v:
                        idx = off_s + k * xds + c
                        buf[idx] = (buf[idx] - v) % p
                pos += 1
    return Matrix(p, n_rows, total, bytes(buf))


def _morphism_from_vec(x: Representation, y: Representation, vec: list[int]) -> Morphism:
    comps = []
    pos = 0
    for i in range(len(x.quiver.vertices)):
        n = y.dim[i] * x.dim[i]
        comps.append(Matrix(x.p, y.dim[i], x.dim[i], bytes(v % x.p for v in vec[pos : pos + n])))
        pos += n
    return Morphism(x, y, tuple(comps), check=False)


def morphism_vec(f: Morphism) -> list[int]:
    out: list[int] = []
    for m in f.components:
        out.extend(m.data)
    return out


def hom_basis(x: Representation, y: Representation) -> list[Morphism]:
    """Deterministic basis of the intertwiner space Hom(x, y)."""
    if x.quiver != y.quiver or x.p != y.p:
        raise ValueError("Hom requires representations of the same quiver over the same field")
    system = _intertwining_system(x, y)
    ker = system.kernel_basis()
    return [_morphism_from_vec(x, y, ker.col(j)) for j in range(ker.cols)]


def hom_dim(x: Representation, y: Representation) -> int:
    system = _intertwining_system(x, y)
    return system.cols - system.rank()


def coords_in_hom_basis(f: Morphism, basis: list[Morphism]) -> list[int] | None:
    """Coordinates of f in the given Hom basis, or None if outside the span."""
    p = f.source.p
    if not basis:
        return [] if f.is_zero() else None
    vecs = [morphism_vec(b) for b in basis]
    n = len(vecs[0])
    flat = []
    for i in range(n):
        flat.extend(v[i] for v in vecs)
    cols = Matrix(p, n, len(basis), flat)
    rhs = Matrix.column(p, morphism_vec(f))
    sol = cols.solve(rhs)
    if sol is None:
        return None
    residual = cols @ sol - rhs
    if not residual.is_zero():
        return None
    return sol.col(0)


def enumerate_homs(x: Representation, y: Representation, include_zero: bool = True):
    """Yield every element of Hom(x, y) over F_p (small spaces only)."""
    basis = hom_basis(x, y)
    p = x.p
    if p ** len(basis) > ENUMERATION_LIMIT:
        raise ValueError(f"Hom space too large to enumerate: dim {len(basis)} over F_{p}")
    for coeffs in itertools.product(range(p), repeat=len(basis)):
        if not include_zero and not any(coeffs):
            continue
        f = Morphism.zero_map(x, y)
        for c, b in zip(coeffs, basis):
            if c:
                f = f + b.scale(c)
        yield f


# -- kernels, cokernels, direct sums ------------------------------------------


def kernel_rep(f: Morphism) -> tuple[Representation, Morphism]:
    """Vertexwise kernel with induced arrow maps and its canonical inclusion."""
    x = f.source
    q = x.quiver
    bases = [f.components[i].kernel_basis() for i in range(len(q.vertices))]
    dims = {v: bases[i].cols for i, v in enumerate(q.vertices)}
    maps = {}
    for a in q.arrows:
        s, t = q.vertex_index(a.source), q.vertex_index(a.target)
        rhs = x.maps[q.arrow_index(a.name)] @ bases[s]
        sol = bases[t].solve(rhs)
        if sol is None:
            raise AssertionError("kernel is not arrow-stable (bug)")
        maps[a.name] = sol
    ker = Representation.build(q, x.p, dims, maps)
    incl = Morphism(ker, x, tuple(bases), check=False)
    return ker, incl


def cokernel_rep(f: Morphism) -> tuple[Representation, Morphism]:
    """Vertexwise cokernel with induced arrow maps and its canonical projection."""
    y = f.target
    q = y.quiver
    projs = []
    for i in range(len(q.vertices)):
        proj, _ = f.components[i].cokernel_projection()
        projs.append(proj)
    dims = {v: projs[i].rows for i, v in enumerate(q.vertices)}
    maps = {}
    for a in q.arrows:
        s, t = q.vertex_index(a.source), q.vertex_index(a.target)
        # solve C_a @ proj_s = proj_t @ y_a; proj_s has full row rank
        lhs = projs[s].transpose()
        rhs = (projs[t] @ y.maps[q.arrow_index(a.name)]).transpose()
        sol = lhs.solve(rhs)
        if sol is None:
            raise AssertionError("cokernel maps are not induced (bug)")
        maps[a.name] = sol.transpose()
    cok = Representation.build(q, y.p, dims, maps)
    proj = Morphism(y, cok, tuple(projs), check=False)
    return cok, proj


def direct_sum(reps: list[Representation]) -> Representation:
    if not reps:
        raise ValueError("direct_sum of an empty list needs an explicit zero; use Representation.zero")
    q, p = reps[0].quiver, reps[0].p
    dims = {v: sum(r.dim_at(v) for r in reps) for v in q.vertices}
    maps = {a.name: block_diag([r.map(a.name) for r in reps], p) for a in q.arrows}
    return Representation.build(q, p, dims, maps)


def sum_inclusion(reps: list[Representation], i: int, total: Representation | None = None) -> Morphism:
    """Canonical inclusion of the i-th summand into the direct sum."""
    total = total or direct_sum(reps)
    q, p = reps[0].quiver, reps[0].p
    comps = []
    for vi, v in enumerate(q.vertices):
        rows = total.dim[vi]
        cols = reps[i].dim[vi]
        off = sum(r.dim[vi] for r in reps[:i])
        buf = bytearray(rows * cols)
        for c in range(cols):
            buf[(off + c) * cols + c] = 1
        comps.append(Matrix(p, rows, cols, bytes(buf)))
    return Morphism(reps[i], total, tuple(comps), check=False)


def sum_projection(reps: list[Representation], i: int, total: Representation | None = None) -> Morphism:
    """Canonical projection of the direct sum onto the i-th summand."""
    total = total or direct_sum(reps)
    q, p = reps[0].quiver, reps[0].p
    comps = []
    for vi, v in enumerate(q.vertices):
        cols = total.dim[vi]
        rows = reps[i].dim[vi]
        off = sum(r.dim[vi] for r in reps[:i])
        buf = bytearray(rows * cols)
        for r in range(rows):
            buf[r * cols + off + r] = 1
        comps.append(Matrix(p, rows, cols, bytes(buf)))
    return Morphism(total, reps[i], tuple(comps), check=False)


def stack_morphisms_to_sum(fs: list[Morphism], total: Representation) -> Morphism:
    """(f_1; ...; f_n): X -> Y_1 + ... + Y_n from a common source."""
    x = fs[0].source
    comps = []
    for vi in range(len(x.quiver.vertices)):
        col = fs[0].components[vi]
        for f in fs[1:]:
            col = col.vstack(f.components[vi])
        comps.append(col)
    return Morphism(x, total, tuple(comps), check=False)


def glue_morphisms_from_sum(fs: list[Morphism], total: Representation) -> Morphism:
    """[f_1 ... f_n]: Y_1 + ... + Y_n -> X into a common target."""
    x = fs[0].target
    comps = []
    for vi in range(len(x.quiver.vertices)):
        row = fs[0].components[vi]
        for f in fs[1:]:
            row = row.hstack(f.components[vi])
        comps.append(row)
    return Morphism(total, x, tuple(comps), check=False)


# -- splitting off direct summands -------------------------------------------


def _retraction_for(f: Morphism) -> Morphism | None:
    """Solve r o f = id for a mono f: I -> X, vertexwise-consistently.

    The unknown r must also intertwine, so we solve the combined linear
    system over the coordinates of Hom(X, I).
    """
    x, i_rep = f.target, f.source
    basis = hom_basis(x, i_rep)
    if not basis:
        return None
    p = x.p
    # columns: coordinates of basis_j o f, stacked over vertices
    cols = []
    for b in basis:
        comp = f.then(b)
        cols.append(morphism_vec(comp))
    target = morphism_vec(Morphism.identity(i_rep))
    n = len(target)
    flat = []
    for r in range(n):
        flat.extend(c[r] for c in cols)
    system = Matrix(p, n, len(cols), flat)
    sol = system.solve(Matrix.column(p, target))
    if sol is None:
        return None
    if not (system @ sol - Matrix.column(p, target)).is_zero():
        return None
    r = Morphism.zero_map(x, i_rep)
    for c, b in zip(sol.col(0), basis):
        if c:
            r = r + b.scale(c)
    return r


def split_summands(x: Representation, candidates: list[Representation]) -> list[tuple[int, Morphism]]:
    """Split x into candidate summands; returns (candidate index, split mono) pairs.

    Candidates are tried in decreasing total dimension (ties by dim-vector,
    descending lexicographically) for determinism.  For each candidate I we
    look for a mono f: I -> x admitting a retraction r; then x = im(f o r)
    + ker(f o r) and we recurse on the complement.  The returned monos
    assemble to an isomorphism +I_k -> x.  Raises if a nonzero remainder
    matches no candidate (impossible for representation-finite input).
    """
    order = sorted(range(len(candidates)), key=lambda i: (candidates[i].total_dim, candidates[i].dim), reverse=True)

    def rec(rem: Representation, embed: Morphism) -> list[tuple[int, Morphism]]:
        if rem.is_zero():
            return []
        for ci in order:
            cand = candidates[ci]
            if cand.total_dim > rem.total_dim:
                continue
            if any(cd > rd for cd, rd in zip(cand.dim, rem.dim)):
                continue
            if hom_dim(cand, rem) == 0:
                continue
            for f in enumerate_homs(cand, rem, include_zero=False):
                if not f.is_mono():
                    continue
                r = _retraction_for(f)
                if r is None:
                    continue
                idem = r.then(f)  # f o r as endo of rem, written source-first
                comp, incl = kernel_rep(idem)
                return [(ci, f.then(embed))] + rec(comp, incl.then(embed))
        raise ValueError(f"indecomposable summand of dimension vector {rem.dim} matches no candidate; catalog incomplete?")

    return rec(x, Morphism.identity(x))


def iso_test(x: Representation, y: Representation) -> bool:
    """True iff x and y are isomorphic (searches Hom(x, y) for an iso)."""
    if x.quiver != y.quiver or x.p != y.p:
        raise ValueError("iso_test requires the same quiver and field")
    if x.dim != y.dim:
        return False
    if x.total_dim == 0:
        return True
    for f in enumerate_homs(x, y, include_zero=False):
        if f.is_iso():
            return True
    return False
