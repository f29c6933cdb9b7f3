"""The Boolean lattice of exact structures and its membership oracle.

An exact structure on rep(Q) for representation-finite Q is determined by
the set of AR sequences it contains, so a structure is a bitmask over the
catalog's AR-sequence list.  A sequence belongs to the structure selecting
S iff its defect vanishes at the right term of every unselected AR
sequence (projective right terms never matter: their defect is
identically zero).  Meet, join and complement are bit operations.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .catalog import ARCatalog, ObjectClass
from .classtable import is_submask, mask_of
from .fp import Matrix
from .homology import SES, ExtClass, SESClass, pullback_action, pushout_action
from .quiver import Quiver
from .rep import (
    Morphism,
    _retraction_for,
    cokernel_rep,
    direct_sum,
    enumerate_homs,
    kernel_rep,
    stack_morphisms_to_sum,
    sum_inclusion,
    sum_projection,
)

DEFAULT_DIM_CAP = 12


@dataclass(frozen=True)
class ExactStructure:
    catalog: ARCatalog = field(compare=False)
    selected: frozenset[int]

    def __post_init__(self):
        n = len(self.catalog.ar_sequences)
        if any(k < 0 or k >= n for k in self.selected):
            raise ValueError("selected indices outside the AR-sequence range")

    @property
    def mask(self) -> int:
        return mask_of(self.selected)

    def name(self) -> str:
        if not self.selected:
            return "E_min"
        if len(self.selected) == len(self.catalog.ar_sequences):
            return "E_max"
        return "E{" + ",".join(str(k + 1) for k in sorted(self.selected)) + "}"

    def is_minimal(self) -> bool:
        return not self.selected

    def is_maximal(self) -> bool:
        return len(self.selected) == len(self.catalog.ar_sequences)

    # -- membership -----------------------------------------------------------

    def contains(self, s: SESClass) -> bool:
        """Defect criterion: every unselected AR right term must have defect 0."""
        return is_submask(mask_of(s.support()), self.mask)

    def admissible_mono(self, f: Morphism) -> bool:
        if not f.is_mono():
            return False
        _, proj = cokernel_rep(f)
        return self._proj_admissible(proj)

    def admissible_epi(self, f: Morphism) -> bool:
        if not f.is_epi():
            return False
        return self._proj_admissible(f)

    def _proj_admissible(self, proj: Morphism) -> bool:
        """Defect criterion on the sequence (ker proj, proj), lazily evaluated."""
        from .homology import defect_of_maps

        for k, m_idx in enumerate(self.catalog.nonprojective):
            if not (self.mask >> k) & 1:
                if defect_of_maps(self.catalog, proj.source, proj.target, proj, m_idx):
                    return False
        return True

    def is_subobject(self, x: ObjectClass, y: ObjectClass, cap: int = DEFAULT_DIM_CAP) -> bool:
        """x <=_E y: some admissible monic from x into y exists."""
        x = tuple(sorted(x))
        y = tuple(sorted(y))
        if not x or x == y:
            return True
        c = self.catalog
        dx, dy = c.class_dim(x), c.class_dim(y)
        if dx > dy or any(a > b for a, b in zip(c.class_dim_vector(x), c.class_dim_vector(y))):
            return False
        if dy <= cap:
            return c.class_table(dy).is_proper_subobject(self.mask, x, y)
        return self.subobject_by_enumeration(x, y)

    def subobject_by_enumeration(self, x: ObjectClass, y: ObjectClass) -> bool:
        """Direct route: enumerate Hom(x, y), filter monos, test admissibility."""
        c = self.catalog
        xr, yr = c.rep_of(x), c.rep_of(y)
        for f in enumerate_homs(xr, yr, include_zero=False):
            if f.is_mono() and self.admissible_mono(f):
                return True
        return False

    # -- lattice operations -----------------------------------------------------

    def leq(self, other: "ExactStructure") -> bool:
        return self.selected <= other.selected

    def meet(self, other: "ExactStructure") -> "ExactStructure":
        return ExactStructure(self.catalog, self.selected & other.selected)

    def join(self, other: "ExactStructure") -> "ExactStructure":
        return ExactStructure(self.catalog, self.selected | other.selected)

    def complement(self) -> "ExactStructure":
        full = frozenset(range(len(self.catalog.ar_sequences)))
        return ExactStructure(self.catalog, full - self.selected)

    def __repr__(self):
        return f"ExactStructure({self.name()})"


def minimal_structure(catalog: ARCatalog) -> ExactStructure:
    return ExactStructure(catalog, frozenset())


def maximal_structure(catalog: ARCatalog) -> ExactStructure:
    return ExactStructure(catalog, frozenset(range(len(catalog.ar_sequences))))


def structure_by_right_terms(catalog: ARCatalog, *dim_vectors) -> ExactStructure:
    """Structure selecting the AR sequences whose right terms have these dims."""
    sel = set()
    for dv in dim_vectors:
        matches = [
            s.index
            for s in catalog.ar_sequences
            if catalog.indecomposables[s.right_index].dim == tuple(dv)
        ]
        if len(matches) != 1:
            raise ValueError(f"right term {dv} matched {len(matches)} AR sequences")
        sel.add(matches[0])
    return ExactStructure(catalog, frozenset(sel))


def generated_structure(catalog: ARCatalog, gens: list[SESClass]) -> ExactStructure:
    """Least structure containing the generators: union of defect supports."""
    sel: set[int] = set()
    for g in gens:
        sel |= g.support()
    return ExactStructure(catalog, frozenset(sel))


@dataclass
class ExLattice:
    catalog: ARCatalog

    @property
    def size(self) -> int:
        return 2 ** len(self.catalog.ar_sequences)

    def structures(self) -> list[ExactStructure]:
        n = len(self.catalog.ar_sequences)
        return [
            ExactStructure(self.catalog, frozenset(k for k in range(n) if bits >> k & 1))
            for bits in range(2**n)
        ]

    def hasse_edges(self) -> list[tuple[ExactStructure, ExactStructure]]:
        """Covering pairs (e, e'): selected sets differing by a single sequence."""
        n = len(self.catalog.ar_sequences)
        edges = []
        for e in self.structures():
            for k in range(n):
                if k not in e.selected:
                    edges.append((e, ExactStructure(self.catalog, e.selected | {k})))
        return edges

    def to_dot(self) -> str:
        lines = ["digraph ExLattice {", '  rankdir="BT";']
        for e in self.structures():
            lines.append(f'  "{e.name()}";')
        for a, b in self.hasse_edges():
            lines.append(f'  "{a.name()}" -> "{b.name()}";')
        lines.append("}")
        return "\n".join(lines)


def enumerate_lattice(catalog: ARCatalog) -> ExLattice:
    return ExLattice(catalog)


# -- reduction along exact functors -------------------------------------------


def restricted_split_structure(catalog: ARCatalog, subquiver: Quiver) -> ExactStructure:
    """E_F for F = restriction to a subquiver: sequences that split after F.

    Selected AR sequences are exactly those whose vertexwise restriction
    splits; splitting is decided by solving for a retraction of the
    restricted inclusion.
    """
    if not catalog.quiver.contains_subquiver(subquiver):
        raise ValueError("not a subquiver of the catalog's quiver")
    sel = set()
    for s in catalog.ar_sequences:
        if _retraction_for(s.incl.restrict(subquiver)) is not None:
            sel.add(s.index)
    return ExactStructure(catalog, frozenset(sel))


# -- axiom spot check ----------------------------------------------------------


@dataclass
class AxiomReport:
    structure: str
    dim_cap: int
    monos_checked: int
    compositions_checked: int
    pushouts_checked: int
    violations: list[str]

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        return {
            "structure": self.structure,
            "dim_cap": self.dim_cap,
            "monos_checked": self.monos_checked,
            "compositions_checked": self.compositions_checked,
            "pushouts_checked": self.pushouts_checked,
            "violations": list(self.violations),
        }


def axiom_spot_check(e: ExactStructure, dim_cap: int = 4) -> AxiomReport:
    """Exhaustively verify (E1) composition closure and (E2) pushouts.

    Over all admissible monics between catalog classes of total dim <=
    dim_cap: every composable pair must compose to an admissible monic,
    and every pushout along an arbitrary morphism into an indecomposable
    must exist and yield an admissible monic.  Any violation signals an
    implementation bug, since the AR-subset classification guarantees the
    axioms.
    """
    c = e.catalog
    classes = [cls for cls in c.class_table(dim_cap).classes if c.class_dim(cls) <= dim_cap]
    monos: dict[tuple[ObjectClass, ObjectClass], list[Morphism]] = {}
    n_monos = 0
    for x in classes:
        for y in classes:
            if c.class_dim(x) >= c.class_dim(y):
                continue
            found = [
                f
                for f in enumerate_homs(c.rep_of(x), c.rep_of(y), include_zero=False)
                if f.is_mono() and e.admissible_mono(f)
            ]
            if found:
                monos[(x, y)] = found
                n_monos += len(found)
    violations = []
    n_comp = 0
    for (x, y), fs in monos.items():
        for (y2, z), gs in monos.items():
            if y2 != y:
                continue
            for f in fs:
                for g in gs:
                    n_comp += 1
                    if not e.admissible_mono(f.then(g)):
                        violations.append(
                            f"(E1) failed: {c.class_label(x)} -> {c.class_label(y)} -> {c.class_label(z)}"
                        )
    n_push = 0
    for (x, y), fs in monos.items():
        for t_idx in range(len(c.indecomposables)):
            t_rep = c.indecomposables[t_idx]
            for f in fs:
                for t in enumerate_homs(c.rep_of(x), t_rep):
                    n_push += 1
                    if not e.admissible_mono(pushout_mono(f, t)):
                        violations.append(
                            f"(E2) failed: pushout of {c.class_label(x)} -> {c.class_label(y)} along a map to {c.label(t_idx)}"
                        )
    return AxiomReport(e.name(), dim_cap, n_monos, n_comp, n_push, violations)


def pushout_mono(i: Morphism, t: Morphism) -> Morphism:
    """The induced monic C -> (B + C)/A of the pushout of i: A >-> B along t: A -> C."""
    b, cc = i.target, t.target
    total = direct_sum([b, cc])
    g = stack_morphisms_to_sum([i, t.scale(-1)], total)
    _, can = cokernel_rep(g)
    return sum_inclusion([b, cc], 1, total).then(can)


# -- independent membership oracle: subfunctor closure --------------------------


def find_iso(a, b) -> Morphism | None:
    if a.dim != b.dim:
        return None
    if a.total_dim == 0:
        return Morphism.zero_map(a, b)
    for f in enumerate_homs(a, b, include_zero=False):
        if f.is_iso():
            return f
    return None


def inverse_iso(f: Morphism) -> Morphism:
    comps = []
    for m in f.components:
        inv = m.solve(Matrix.identity(m.p, m.rows))
        if inv is None:
            raise ValueError("morphism is not invertible")
        comps.append(inv)
    return Morphism(f.target, f.source, tuple(comps), check=False)


class SubfunctorClosure:
    """Smallest closed sub-bifunctor of Ext containing the selected AR classes.

    State: a subspace of Ext(Z, X) for every pair of indecomposables,
    grown to a fixpoint under (i) linear spans, (ii) pullback/pushout
    along Hom bases, and (iii) composition of admissible monos and epis of
    member sequences — the (E1) step that spans and actions alone provably
    cannot produce.  Membership of arbitrary classes follows by additivity
    in both arguments.  This is the brute-force oracle checked against the
    defect criterion.
    """

    def __init__(self, catalog: ARCatalog, selected: frozenset[int], dim_cap: int = 4):
        self.catalog = catalog
        self.selected = frozenset(selected)
        self.table = catalog.class_table(dim_cap)
        n = len(catalog.indecomposables)
        self.spans: dict[tuple[int, int], list[tuple[int, ...]]] = {
            (zi, xi): [] for zi in range(n) for xi in range(n)
        }
        for k in self.selected:
            seq = catalog.ar_sequences[k]
            key = (seq.right_index, seq.left_index)
            coords = self._ext(*key).class_of_ses(SES(seq.left, seq.middle, seq.right, seq.incl, seq.proj))
            self._add(key, coords)
        self._close()

    def _ext(self, zi: int, xi: int):
        return self.table.ext_of((zi,), (xi,))

    def _add(self, key, coords) -> bool:
        coords = tuple(coords)
        if self.member_coords(key, coords):
            return False
        self.spans[key].append(coords)
        return True

    def member_coords(self, key, coords) -> bool:
        coords = tuple(coords)
        if not any(coords):
            return True
        rows = self.spans[key]
        if not rows:
            return False
        p = self.catalog.p
        cols = len(coords)
        m = Matrix(p, len(rows), cols, [v for row in rows for v in row])
        aug = m.vstack(Matrix(p, 1, cols, list(coords)))
        return aug.rank() == m.rank()

    def _member_classes(self):
        """(key, coeffs) for every nonzero member class with indecomposable ends."""
        p = self.catalog.p
        out = []
        for key, rows in self.spans.items():
            if not rows:
                continue
            e = self._ext(*key)
            for coeffs in itertools.product(range(p), repeat=e.dim):
                if any(coeffs) and self.member_coords(key, coeffs):
                    out.append((key, coeffs))
        return out

    def _close(self):
        c = self.catalog
        n = len(c.indecomposables)
        changed = True
        while changed:
            changed = False
            for (zi, xi), rows in list(self.spans.items()):
                e = self._ext(zi, xi)
                for coords in list(rows):
                    xi_cls = ExtClass(e, coords)
                    for zj in range(n):
                        for f in c.hom(zj, zi):
                            out = pullback_action(xi_cls, f, target=self._ext(zj, xi))
                            changed |= self._add((zj, xi), out.coeffs)
                    for xj in range(n):
                        for g in c.hom(xi, xj):
                            out = pushout_action(xi_cls, g, target=self._ext(zi, xj))
                            changed |= self._add((zi, xj), out.coeffs)
            changed |= self._composition_step()

    def _composition_step(self) -> bool:
        """(E1): splice member sequences through indecomposable intermediates."""
        changed = False
        members = [(key, coeffs, self._ext(*key).realize(coeffs)) for key, coeffs in self._member_classes()]
        for (zi, xi), _, raw1 in members:
            for (zj, xj), _, raw2 in members:
                # admissible epis compose: Y1 ->> Z1 = mid(raw2) ->> Z2
                if raw2.middle.dim == raw1.right.dim:
                    iso = find_iso(raw1.right, raw2.middle)
                    if iso is not None:
                        comp = raw1.proj.then(iso).then(raw2.proj)
                        ker, incl = kernel_rep(comp)
                        changed |= self._admit(incl, comp)
                # admissible monos compose: X2 >-> mid(raw2) = Y1 ... via X1 >-> Y1
                if raw2.incl.source.dim == raw1.middle.dim:
                    iso = find_iso(raw1.middle, raw2.incl.source)
                    if iso is not None:
                        comp = raw1.incl.then(iso).then(raw2.incl)
                        cok, proj = cokernel_rep(comp)
                        changed |= self._admit(comp, proj)
        return changed

    def _admit(self, incl: Morphism, proj: Morphism) -> bool:
        """Add every indecomposable component of a concrete sequence's class."""
        c = self.catalog
        left_cls = c.identify(incl.source)
        right_cls = c.identify(proj.target)
        left_rep = c.rep_of(tuple(sorted(left_cls)))
        right_rep = c.rep_of(tuple(sorted(right_cls)))
        iso_l = find_iso(left_rep, incl.source)
        iso_r = find_iso(proj.target, right_rep)
        if iso_l is None or iso_r is None:
            raise AssertionError("end terms do not match their canonical forms (bug)")
        e_full = self.table.ext_of(tuple(sorted(right_cls)), tuple(sorted(left_cls)))
        transported = SES(left_rep, incl.target, right_rep, iso_l.then(incl), proj.then(iso_r))
        full = ExtClass(e_full, e_full.class_of_ses(transported))
        reps_r = [c.indecomposables[i] for i in tuple(sorted(right_cls))]
        reps_l = [c.indecomposables[i] for i in tuple(sorted(left_cls))]
        changed = False
        for rpos, ri in enumerate(tuple(sorted(right_cls))):
            pulled = pullback_action(
                full, sum_inclusion(reps_r, rpos), target=self.table.ext_of((ri,), tuple(sorted(left_cls)))
            )
            for lpos, li in enumerate(tuple(sorted(left_cls))):
                pushed = pushout_action(pulled, sum_projection(reps_l, lpos), target=self._ext(ri, li))
                changed |= self._add((ri, li), pushed.coeffs)
        return changed

    # -- queries ---------------------------------------------------------------

    def member(self, zi: int, xi: int, coeffs) -> bool:
        return self.member_coords((zi, xi), tuple(coeffs))
