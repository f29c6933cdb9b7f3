"""Ext spaces, their linear actions, and the defect of a sequence.

Ext^1(Z, X) is computed from the minimal projective presentation
P1 >-> P0 ->> Z as the cokernel of Hom(P0, X) -> Hom(P1, X); a class is a
coset representative phi: P1 -> X and is materialised as a short exact
sequence by pushing the presentation sequence out along phi.  Pullback
and pushout of classes stay at the matrix level (lifted presentations),
which keeps membership tests linear-algebraic.

The defect of a sequence X >-> Y ->> Z at an indecomposable M is
dim coker(Hom(M, Y) -> Hom(M, Z)); its support over the non-projective
indecomposables is the coordinate that decides membership in an exact
structure.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .catalog import ARCatalog
from .fp import Matrix
from .projectives import Presentation, minimal_presentation
from .rep import (
    Morphism,
    Representation,
    _retraction_for,
    coords_in_hom_basis,
    direct_sum,
    hom_basis,
    stack_morphisms_to_sum,
    sum_inclusion,
)


@dataclass
class SES:
    """A concrete kernel-cokernel pair left >-incl-> middle ->proj-> right."""

    left: Representation
    middle: Representation
    right: Representation
    incl: Morphism
    proj: Morphism

    def validate(self):
        if not self.incl.is_mono():
            raise ValueError("incl is not mono")
        if not self.proj.is_epi():
            raise ValueError("proj is not epi")
        if not self.incl.then(self.proj).is_zero():
            raise ValueError("proj o incl != 0")
        for i in range(len(self.left.dim)):
            if self.left.dim[i] + self.right.dim[i] != self.middle.dim[i]:
                raise ValueError("middle dimensions are not additive; sequence not exact")
        return self

    def splits(self) -> bool:
        return _retraction_for(self.incl) is not None


@dataclass
class SESClass:
    """A short exact sequence with its cached defect fingerprint."""

    left: Representation
    middle: Representation
    right: Representation
    incl: Morphism
    proj: Morphism
    defect_vector: tuple[int, ...]
    left_class: tuple[int, ...] = field(default=())
    right_class: tuple[int, ...] = field(default=())
    middle_class: tuple[int, ...] = field(default=())

    def splits(self) -> bool:
        return _retraction_for(self.incl) is not None

    def support(self) -> frozenset[int]:
        """AR-sequence positions (by non-projective order) with nonzero defect."""
        return frozenset(k for k, d in enumerate(self.defect_vector) if d)


def _hom_composition_matrix(pre: list[Morphism], post: Morphism, target_basis: list[Morphism]) -> Matrix:
    """Matrix of h |-> h o ... composition: columns are coords of pre[k].then(post)."""
    p = post.source.p
    cols = []
    for h in pre:
        comp = h.then(post)
        coords = coords_in_hom_basis(comp, target_basis)
        if coords is None:
            raise AssertionError("composition left the Hom space (bug)")
        cols.append(coords)
    n = len(target_basis)
    flat = []
    for r in range(n):
        flat.extend(c[r] for c in cols)
    return Matrix(p, n, len(cols), flat)


def defect_of_maps(catalog: ARCatalog, middle: Representation, right: Representation, proj: Morphism, m_index: int) -> int:
    """dim coker(Hom(M, middle) -> Hom(M, right)) for the catalog indecomposable M."""
    m = catalog.indecomposables[m_index]
    hz = catalog.hom_of_reps(m, right)
    if not hz:
        return 0
    hy = catalog.hom_of_reps(m, middle)
    if not hy:
        return len(hz)
    mat = _hom_composition_matrix(hy, proj, hz)
    return len(hz) - mat.rank()


def defect(catalog: ARCatalog, s, m_index: int) -> int:
    """Defect of a sequence at a non-projective indecomposable, from the cache if present."""
    if isinstance(s, SESClass):
        if m_index in catalog.nonprojective:
            return s.defect_vector[catalog.nonprojective.index(m_index)]
    return defect_of_maps(catalog, s.middle, s.right, s.proj, m_index)


def ses_class(catalog: ARCatalog, incl: Morphism, proj: Morphism) -> SESClass:
    """Validated SESClass with defect fingerprint for a concrete kernel-cokernel pair."""
    raw = SES(incl.source, incl.target, proj.target, incl, proj).validate()
    dv = tuple(
        defect_of_maps(catalog, raw.middle, raw.right, raw.proj, m) for m in catalog.nonprojective
    )
    return SESClass(
        raw.left,
        raw.middle,
        raw.right,
        incl,
        proj,
        dv,
        left_class=catalog.identify(raw.left),
        right_class=catalog.identify(raw.right),
        middle_class=catalog.identify(raw.middle),
    )


def split_sequence(catalog: ARCatalog, x: Representation, z: Representation) -> SESClass:
    """The canonical split sequence x >-> x + z ->> z."""
    total = direct_sum([x, z])
    from .rep import sum_projection

    return ses_class(catalog, sum_inclusion([x, z], 0, total), sum_projection([x, z], 1, total))


class ExtSpace:
    """Ext^1(z, x) presented on Hom(P1, x) cosets for the presentation of z."""

    def __init__(self, z: Representation, x: Representation, pres: Presentation | None = None):
        if z.quiver != x.quiver or z.p != x.p:
            raise ValueError("Ext requires the same quiver and field")
        self.z = z
        self.x = x
        self.pres = pres if pres is not None and pres.module == z else minimal_presentation(z)
        p1, p0, f = self.pres.p1.rep, self.pres.p0.rep, self.pres.f
        self.hom_p1_x = hom_basis(p1, x)
        self.hom_p0_x = hom_basis(p0, x)
        n = len(self.hom_p1_x)
        if n == 0:
            self._image = Matrix.zeros(x.p, 0, len(self.hom_p0_x))
        else:
            cols = []
            for b in self.hom_p0_x:
                comp = f.then(b)
                coords = coords_in_hom_basis(comp, self.hom_p1_x)
                if coords is None:
                    raise AssertionError("presentation restriction left the Hom space (bug)")
                cols.append(coords)
            flat = []
            for r in range(n):
                flat.extend(c[r] for c in cols)
            self._image = Matrix(x.p, n, len(cols), flat)
        self._proj, self.dim = self._image.cokernel_projection()
        if self.dim:
            self._sect = self._proj.solve(Matrix.identity(x.p, self.dim))
        else:
            self._sect = Matrix.zeros(x.p, n, 0)
        self.basis: list[Morphism] = []
        for j in range(self.dim):
            rep = Morphism.zero_map(p1, x)
            for i, c in enumerate(self._sect.col(j)):
                if c:
                    rep = rep + self.hom_p1_x[i].scale(c)
            self.basis.append(rep)

    def coords_of_morphism(self, psi: Morphism) -> tuple[int, ...]:
        """Class coordinates of a representative psi: P1 -> x."""
        coords = coords_in_hom_basis(psi, self.hom_p1_x)
        if coords is None:
            raise ValueError("morphism is not in Hom(P1, x)")
        v = self._proj @ Matrix.column(self.x.p, coords)
        return tuple(v.col(0))

    def representative(self, coeffs) -> Morphism:
        coeffs = tuple(coeffs)
        if len(coeffs) != self.dim:
            raise ValueError(f"expected {self.dim} coefficients, got {len(coeffs)}")
        psi = Morphism.zero_map(self.pres.p1.rep, self.x)
        for c, b in zip(coeffs, self.basis):
            if c % self.x.p:
                psi = psi + b.scale(c)
        return psi

    def realize(self, coeffs) -> SES:
        """Materialise the class as x >-> Y ->> z by pushout of the presentation."""
        psi = self.representative(coeffs)
        p = self.x.p
        p0, f, eps = self.pres.p0.rep, self.pres.f, self.pres.eps
        total = direct_sum([self.x, p0])
        g = stack_morphisms_to_sum([psi, self.pres.f.scale(-1)], total)
        from .rep import cokernel_rep

        middle, can = cokernel_rep(g)
        incl = sum_inclusion([self.x, p0], 0, total).then(can)
        # induced projection: solve pi o can = (0 | eps) vertexwise (can is epi)
        comps = []
        q = self.z.quiver
        for vi in range(len(q.vertices)):
            zero_part = Matrix.zeros(p, self.z.dim[vi], self.x.dim[vi])
            h = zero_part.hstack(eps.components[vi])
            sol = can.components[vi].transpose().solve(h.transpose())
            if sol is None:
                raise AssertionError("projection does not descend to the pushout (bug)")
            comps.append(sol.transpose())
        proj = Morphism(middle, self.z, tuple(comps), check=False)
        return SES(self.x, middle, self.z, incl, proj).validate()

    def class_of_ses(self, s: SES) -> tuple[int, ...]:
        """Coordinates of a sequence with these exact end terms (linearize)."""
        if s.left != self.x or s.right != self.z:
            raise ValueError("sequence end terms do not match this Ext space")
        p0, f, eps = self.pres.p0.rep, self.pres.f, self.pres.eps
        hom_p0_y = hom_basis(p0, s.middle)
        hom_p0_z = hom_basis(p0, s.right)
        mat = _hom_composition_matrix(hom_p0_y, s.proj, hom_p0_z)
        target = coords_in_hom_basis(eps, hom_p0_z)
        if target is None:
            raise AssertionError("eps missing from Hom(P0, Z) (bug)")
        sol = mat.solve(Matrix.column(self.x.p, target))
        if sol is None:
            raise AssertionError("projective lift failed (bug)")
        lam = Morphism.zero_map(p0, s.middle)
        for c, b in zip(sol.col(0), hom_p0_y):
            if c:
                lam = lam + b.scale(c)
        e = f.then(lam)  # P1 -> middle, lands in the image of incl
        comps = []
        for vi in range(len(self.z.quiver.vertices)):
            sol_v = s.incl.components[vi].solve(e.components[vi])
            if sol_v is None:
                raise AssertionError("restriction does not factor through the kernel (bug)")
            comps.append(sol_v)
        mu = Morphism(self.pres.p1.rep, self.x, tuple(comps), check=False)
        return self.coords_of_morphism(mu)


@dataclass(frozen=True)
class ExtClass:
    space: ExtSpace
    coeffs: tuple[int, ...]

    def is_zero(self) -> bool:
        return not any(c % self.space.x.p for c in self.coeffs)


def ext_space(z: Representation, x: Representation, pres: Presentation | None = None) -> ExtSpace:
    return ExtSpace(z, x, pres)


def realize(e: ExtSpace, coeffs) -> SES:
    return e.realize(coeffs)


def pushout_action(e_class: ExtClass, g: Morphism, target: ExtSpace | None = None) -> ExtClass:
    """g_* xi in Ext(z, X') for g: x -> X'; linear in the class."""
    e = e_class.space
    if g.source != e.x:
        raise ValueError("pushout morphism must start at the class's left term")
    if target is None:
        target = ExtSpace(e.z, g.target, pres=e.pres)
    psi = e.representative(e_class.coeffs)
    return ExtClass(target, target.coords_of_morphism(psi.then(g)))


def lift_through_presentations(pres: Presentation, f: Morphism, pres2: Presentation) -> Morphism:
    """lambda1: P1' -> P1 lifting f: z' -> z through minimal presentations.

    pres presents z (the pullback source's target), pres2 presents z' = f's
    source; the lift satisfies pres.f o lambda1 = lambda0 o pres2.f where
    lambda0 lifts f through the covers.
    """
    z = pres.module
    p = z.p
    p0, p1 = pres.p0.rep, pres.p1.rep
    p0p, p1p = pres2.p0.rep, pres2.p1.rep
    hom00 = hom_basis(p0p, p0)
    hom0z = hom_basis(p0p, z)
    mat = _hom_composition_matrix(hom00, pres.eps, hom0z)
    target_coords = coords_in_hom_basis(pres2.eps.then(f), hom0z)
    if target_coords is None:
        raise AssertionError("composite missing from Hom (bug)")
    sol = mat.solve(Matrix.column(p, target_coords))
    if sol is None:
        raise AssertionError("projective lift failed (bug)")
    lam0 = Morphism.zero_map(p0p, p0)
    for c, b in zip(sol.col(0), hom00):
        if c:
            lam0 = lam0 + b.scale(c)
    e2 = pres2.f.then(lam0)  # P1' -> P0, lands in the image of pres.f
    comps = []
    for vi in range(len(z.quiver.vertices)):
        sol_v = pres.f.components[vi].solve(e2.components[vi])
        if sol_v is None:
            raise AssertionError("lift does not land in the presentation kernel (bug)")
        comps.append(sol_v)
    return Morphism(p1p, p1, tuple(comps), check=False)


def presentation_lift(e: ExtSpace, f: Morphism, target: ExtSpace) -> Morphism:
    """lambda1: P1' -> P1 lifting f: z' -> z through the two presentations."""
    return lift_through_presentations(e.pres, f, target.pres)


def pullback_action(e_class: ExtClass, f: Morphism, target: ExtSpace | None = None) -> ExtClass:
    """f^* xi in Ext(Z', x) for f: Z' -> z; linear in the class."""
    e = e_class.space
    if f.target != e.z:
        raise ValueError("pullback morphism must end at the class's right term")
    if target is None:
        target = ExtSpace(f.source, e.x)
    lam1 = presentation_lift(e, f, target)
    psi = e.representative(e_class.coeffs)
    return ExtClass(target, target.coords_of_morphism(lam1.then(psi)))
