"""Projective covers, minimal presentations and the AR translate.

Indecomposable projectives are realised on path bases: P(v) has at vertex
w the span of all paths v -> w, with arrows acting by post-composition.
The translate of a non-projective M is computed from its minimal
projective presentation P1 -> P0 -> M by transposing the presentation map
into the opposite quiver (path coefficients act on the other side) and
dualising back; the inverse translate is the dual composite.
"""

from __future__ import annotations

from dataclasses import dataclass

from .fp import Matrix
from .quiver import Quiver
from .rep import Morphism, Representation, cokernel_rep, kernel_rep


class ProjSum:
    """An explicit direct sum of indecomposable projectives +_i P(tops[i]).

    Keeps the path basis: the coordinates at vertex w are indexed by pairs
    (summand i, path tops[i] -> w), summand-major in path order.
    """

    def __init__(self, quiver: Quiver, p: int, tops: tuple[str, ...]):
        self.quiver = quiver
        self.p = p
        self.tops = tuple(tops)
        paths = quiver.paths()
        self.basis: dict[str, list[tuple[int, tuple[str, ...]]]] = {}
        for w in quiver.vertices:
            self.basis[w] = [(i, path) for i, v in enumerate(self.tops) for path in paths[(v, w)]]
        dims = {w: len(self.basis[w]) for w in quiver.vertices}
        maps = {}
        for a in quiver.arrows:
            rows = self.basis[a.target]
            cols = self.basis[a.source]
            buf = bytearray(len(rows) * len(cols))
            index = {key: r for r, key in enumerate(rows)}
            for c, (i, path) in enumerate(cols):
                r = index[(i, path + (a.name,))]
                buf[r * len(cols) + c] = 1
            maps[a.name] = Matrix(p, len(rows), len(cols), bytes(buf))
        self.rep = Representation.build(quiver, p, dims, maps)

    def generator_position(self, i: int) -> tuple[str, int]:
        """Vertex and coordinate of the i-th summand's generator (trivial path)."""
        v = self.tops[i]
        return v, self.basis[v].index((i, ()))

    def hom_to(self, target: Representation, gen_images: list[Matrix]) -> Morphism:
        """The morphism sending each summand generator to the given column vector."""
        comps = []
        for w in self.quiver.vertices:
            wi = self.quiver.vertex_index(w)
            cols = []
            for (i, path) in self.basis[w]:
                cols.append(target.path_matrix(path, self.tops[i]) @ gen_images[i])
            buf = bytearray(target.dim[wi] * len(self.basis[w]))
            for c, colvec in enumerate(cols):
                for r in range(target.dim[wi]):
                    buf[r * len(self.basis[w]) + c] = colvec.entry(r, 0)
            comps.append(Matrix(self.p, target.dim[wi], len(self.basis[w]), bytes(buf)))
        return Morphism(self.rep, target, tuple(comps), check=False)


def projective_rep(quiver: Quiver, p: int, v: str) -> Representation:
    return ProjSum(quiver, p, (v,)).rep


def injective_rep(quiver: Quiver, p: int, v: str) -> Representation:
    """I(v): dual of the opposite projective at v."""
    return projective_rep(quiver.opposite(), p, v).dual()


@dataclass
class Presentation:
    """Minimal projective presentation P1 -f-> P0 -eps->> M (P1 may be zero)."""

    module: Representation
    p0: ProjSum
    p1: ProjSum
    f: Morphism
    eps: Morphism


def top_generators(m: Representation) -> list[tuple[str, Matrix]]:
    """Vertex/column-vector pairs projecting to a basis of top(M) = M / rad M.

    Deterministic: at each vertex the radical subspace (sum of incoming
    images) is extended to a basis by greedily adding standard vectors.
    """
    q, p = m.quiver, m.p
    out = []
    for v in q.vertices:
        vi = q.vertex_index(v)
        d = m.dim[vi]
        if d == 0:
            continue
        incoming = [m.maps[q.arrow_index(a.name)] for a in q.arrows_into(v)]
        rad = Matrix.zeros(p, d, 0)
        for im in incoming:
            rad = rad.hstack(im)
        r = rad.rank()
        span = rad
        for j in range(d):
            if span.rank() == d:
                break
            ej = Matrix.zeros(p, d, 1)
            ej = Matrix(p, d, 1, bytes(1 if i == j else 0 for i in range(d)))
            cand = span.hstack(ej)
            if cand.rank() > span.rank():
                span = cand
                out.append((v, ej))
    return out


def minimal_presentation(m: Representation) -> Presentation:
    q, p = m.quiver, m.p
    gens = top_generators(m)
    p0 = ProjSum(q, p, tuple(v for v, _ in gens))
    eps = p0.hom_to(m, [vec for _, vec in gens])
    if not eps.is_epi():
        raise AssertionError("projective cover failed to surject (bug)")
    ker, incl = kernel_rep(eps)
    if ker.is_zero():
        p1 = ProjSum(q, p, ())
        f = Morphism.zero_map(p1.rep, p0.rep)
        return Presentation(m, p0, p1, f, eps)
    # hereditary input: the kernel is projective, so its own projective
    # cover is an isomorphism and exhibits it as an explicit sum of P(v)
    kgens = top_generators(ker)
    p1 = ProjSum(q, p, tuple(v for v, _ in kgens))
    cover = p1.hom_to(ker, [vec for _, vec in kgens])
    if p1.rep.dim != ker.dim or not cover.is_mono():
        raise ValueError("presentation kernel is not projective; input algebra must be hereditary")
    f = cover.then(incl)
    return Presentation(m, p0, p1, f, eps)


def _path_coefficients(pres: Presentation) -> dict[tuple[int, int], dict[tuple[str, ...], int]]:
    """Coefficients c[i, j][path] of f as combinations of paths v_i -> u_j.

    f's component P(u_j) -> P(v_i) is right multiplication by an element of
    the path algebra supported on paths v_i -> u_j; read off at vertex u_j.
    """
    coeffs: dict[tuple[int, int], dict[tuple[str, ...], int]] = {}
    p0, p1, f = pres.p0, pres.p1, pres.f
    q = p0.quiver
    for j in range(len(p1.tops)):
        u, col = p1.generator_position(j)
        ui = q.vertex_index(u)
        vec = f.components[ui].col(col)
        for r, (i, path) in enumerate(p0.basis[u]):
            if vec[r]:
                coeffs.setdefault((i, j), {})[path] = vec[r]
    return coeffs


def transpose_presentation(pres: Presentation) -> Morphism:
    """Tr f over the opposite quiver: +_i P_op(v_i) -> +_j P_op(u_j)."""
    q = pres.p0.quiver
    p = pres.p0.p
    op = q.opposite()
    coeffs = _path_coefficients(pres)
    a = ProjSum(op, p, pres.p0.tops)
    b = ProjSum(op, p, pres.p1.tops)
    gen_images = []
    for i in range(len(a.tops)):
        v = a.tops[i]
        vi = op.vertex_index(v)
        col = [0] * b.rep.dim[vi]
        for r, (j, path_op) in enumerate(b.basis[v]):
            c = coeffs.get((i, j))
            if c:
                col[r] = c.get(tuple(reversed(path_op)), 0)
        gen_images.append(Matrix.column(p, col))
    return a.hom_to(b.rep, gen_images)


def transpose(m: Representation) -> Representation:
    """Tr M over the opposite quiver (zero if M is projective)."""
    pres = minimal_presentation(m)
    if not pres.p1.tops:
        return Representation.zero(m.quiver.opposite(), m.p)
    trf = transpose_presentation(pres)
    cok, _ = cokernel_rep(trf)
    return cok


def tau(m: Representation) -> Representation | None:
    """The AR translate D Tr M; None when M is projective."""
    tr = transpose(m)
    if tr.is_zero():
        return None
    return tr.dual()


def tau_minus(n: Representation) -> Representation | None:
    """The inverse translate Tr D N; None when N is injective."""
    tr = transpose(n.dual())
    if tr.is_zero():
        return None
    return tr
