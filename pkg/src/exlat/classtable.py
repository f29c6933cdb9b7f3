"""Precomputed short-exact-sequence data for bounded object classes.

For every ordered pair of nonzero classes (Z, X) with dim Z + dim X below
the cap, the table enumerates all of Ext^1(Z, X) over F_p and records for
each class its defect-support bitmask (over AR-sequence indices) and the
iso class of its middle term.  Everything downstream — subobject tests,
membership sweeps, length/measure recursions for all 2^n structures —
reads these tables instead of redoing linear algebra per structure.

Masks: bit k set <=> the defect at the right term of AR sequence k is
nonzero.  A sequence belongs to the structure selecting S iff its mask is
a submask of S's mask.
"""

from __future__ import annotations

import itertools

from .catalog import ARCatalog, ObjectClass
from .fp import Matrix
from .grorder import gr_compare, gr_max
from .homology import ExtSpace, ext_space, lift_through_presentations
from .projectives import minimal_presentation
from .rep import hom_basis


def mask_of(support) -> int:
    m = 0
    for k in support:
        m |= 1 << k
    return m


def is_submask(a: int, b: int) -> bool:
    return a & ~b == 0


class ClassTable:
    def __init__(self, catalog: ARCatalog, cap: int):
        self.catalog = catalog
        self.cap = cap
        self.p = catalog.p
        self.classes: list[ObjectClass] = self._enumerate_classes(cap)
        self.by_dim: dict[int, list[ObjectClass]] = {}
        for cls in self.classes:
            self.by_dim.setdefault(catalog.class_dim(cls), []).append(cls)
        # (left class, middle class) -> minimal antichain of defect masks
        self.sub_masks: dict[tuple[ObjectClass, ObjectClass], tuple[int, ...]] = {}
        # middle class -> list of (left class, masks)
        self.subs_of_middle: dict[ObjectClass, list[tuple[ObjectClass, tuple[int, ...]]]] = {}
        # (z_cls, x_cls) -> list of (coeffs, mask, middle class)
        self.seqs: dict[tuple[ObjectClass, ObjectClass], list[tuple[tuple[int, ...], int, ObjectClass]]] = {}
        self._ext_cache: dict[tuple[ObjectClass, ObjectClass], ExtSpace] = {}
        self._pres_cache: dict[ObjectClass, object] = {}
        self._indec_action_cache: dict[tuple[int, int], list] = {}
        self._length_memo: dict[tuple[int, ObjectClass], int] = {}
        self._mu_memo: dict[tuple[int, int], tuple[int, ...]] = {}
        self._build()

    # -- construction --------------------------------------------------------

    def _enumerate_classes(self, cap: int) -> list[ObjectClass]:
        catalog = self.catalog
        out: list[ObjectClass] = []

        def rec(start: int, acc: list[int], total: int):
            if acc:
                out.append(tuple(acc))
            for i in range(start, len(catalog.indecomposables)):
                d = catalog.indecomposables[i].total_dim
                if total + d <= cap:
                    acc.append(i)
                    rec(i, acc, total + d)
                    acc.pop()

        rec(0, [], 0)
        return sorted(set(out))

    def pres_of(self, cls: ObjectClass):
        if len(cls) == 1:
            return self.catalog.presentation(cls[0])
        if cls not in self._pres_cache:
            self._pres_cache[cls] = minimal_presentation(self.catalog.rep_of(cls))
        return self._pres_cache[cls]

    def ext_of(self, z_cls: ObjectClass, x_cls: ObjectClass) -> ExtSpace:
        key = (z_cls, x_cls)
        if key not in self._ext_cache:
            z = self.catalog.rep_of(z_cls)
            x = self.catalog.rep_of(x_cls)
            self._ext_cache[key] = ext_space(z, x, pres=self.pres_of(z_cls))
        return self._ext_cache[key]

    def _build(self):
        catalog = self.catalog
        p = self.p
        nonproj = catalog.nonprojective
        # Hom bases M -> Z and presentation lifts, shared across all x
        for z_cls in self.classes:
            dz = catalog.class_dim(z_cls)
            if dz + 1 > self.cap:
                continue
            z = catalog.rep_of(z_cls)
            z_pres = self.pres_of(z_cls)
            lifts: list[tuple[int, list]] = []
            for k, m_idx in enumerate(nonproj):
                m = catalog.indecomposables[m_idx]
                homs = hom_basis(m, z)
                if homs:
                    m_pres = catalog.presentation(m_idx)
                    lifts.append((k, [lift_through_presentations(z_pres, f, m_pres) for f in homs]))
            for x_cls in self.classes:
                if dz + catalog.class_dim(x_cls) > self.cap:
                    continue
                e = self.ext_of(z_cls, x_cls)
                action: list[tuple[int, Matrix]] = []
                if e.dim:
                    for k, lam1s in lifts:
                        m_idx = nonproj[k]
                        target = self.ext_of((m_idx,), x_cls)
                        mat = self._action_matrix(e, lam1s, target)
                        if mat.rows:
                            action.append((k, mat))
                entries = []
                for coeffs in itertools.product(range(p), repeat=e.dim):
                    if any(coeffs):
                        mask = 0
                        vec = Matrix.column(p, list(coeffs))
                        for k, mat in action:
                            if not (mat @ vec).is_zero():
                                mask |= 1 << k
                        raw = e.realize(coeffs)
                        middle = catalog.identify(raw.middle)
                    else:
                        mask = 0
                        middle = tuple(sorted(z_cls + x_cls))
                    entries.append((coeffs, mask, middle))
                    self._record_sub(x_cls, middle, mask)
                self.seqs[(z_cls, x_cls)] = entries
        for key, masks in list(self.sub_masks.items()):
            minimal = _antichain(masks)
            self.sub_masks[key] = minimal
            self.subs_of_middle.setdefault(key[1], []).append((key[0], minimal))
        for lst in self.subs_of_middle.values():
            lst.sort()

    def _action_matrix(self, e: ExtSpace, lam1s: list, target: ExtSpace) -> Matrix:
        """Stack of the linear maps xi -> coords(f^* xi) over the Hom basis of (M, Z)."""
        basis_reps = [e.representative(tuple(1 if t == c else 0 for t in range(e.dim))) for c in range(e.dim)]
        cols: list[list[int]] = [[] for _ in range(e.dim)]
        for lam1 in lam1s:
            for c, psi in enumerate(basis_reps):
                cols[c].extend(target.coords_of_morphism(lam1.then(psi)))
        rows = len(cols[0]) if cols else 0
        flat = []
        for r in range(rows):
            flat.extend(col[r] for col in cols)
        return Matrix(self.p, rows, e.dim, flat)

    def _record_sub(self, left: ObjectClass, middle: ObjectClass, mask: int):
        key = (tuple(sorted(left)), middle)
        cur = self.sub_masks.get(key, ())
        if mask not in cur:
            self.sub_masks[key] = cur + (mask,)

    # -- structure-independent queries ---------------------------------------

    def proper_sub_masks(self, y_cls: ObjectClass, m_cls: ObjectClass) -> tuple[int, ...]:
        """Masks of sequences exhibiting y as a proper subobject of m."""
        return self.sub_masks.get((tuple(sorted(y_cls)), tuple(sorted(m_cls))), ())

    def is_proper_subobject(self, sel_mask: int, y_cls, m_cls) -> bool:
        return any(is_submask(m, sel_mask) for m in self.proper_sub_masks(y_cls, m_cls))

    def proper_subobjects(self, sel_mask: int, m_cls: ObjectClass) -> list[ObjectClass]:
        """All nonzero proper subobject classes of m in the structure sel_mask."""
        out = []
        for y_cls, masks in self.subs_of_middle.get(tuple(sorted(m_cls)), []):
            if any(is_submask(m, sel_mask) for m in masks):
                out.append(y_cls)
        return out

    def proper_indec_subobjects(self, sel_mask: int, idx: int) -> list[int]:
        out = []
        for y_cls, masks in self.subs_of_middle.get((idx,), []):
            if len(y_cls) == 1 and any(is_submask(m, sel_mask) for m in masks):
                out.append(y_cls[0])
        return out

    # -- per-structure invariants ---------------------------------------------

    def length(self, sel_mask: int, cls: ObjectClass) -> int:
        """E-length: longest chain of proper admissible monos up to cls."""
        cls = tuple(sorted(cls))
        if not cls:
            return 0
        key = (sel_mask, cls)
        memo = self._length_memo
        if key not in memo:
            best = 0
            for y_cls in self.proper_subobjects(sel_mask, cls):
                ly = self.length(sel_mask, y_cls)
                if ly > best:
                    best = ly
            memo[key] = 1 + best
        return memo[key]

    def mu(self, sel_mask: int, idx: int) -> tuple[int, ...]:
        """Gabriel-Roiter measure of the indecomposable idx as a length word."""
        key = (sel_mask, idx)
        memo = self._mu_memo
        if key not in memo:
            subs = self.proper_indec_subobjects(sel_mask, idx)
            l_here = self.length(sel_mask, (idx,))
            if not subs:
                memo[key] = (l_here,)
            else:
                memo[key] = gr_max(self.mu(sel_mask, j) + (l_here,) for j in subs)
        return memo[key]

    def mu_maximizers(self, sel_mask: int, idx: int) -> list[int]:
        """Proper indecomposable subobjects attaining the measure maximum."""
        subs = self.proper_indec_subobjects(sel_mask, idx)
        if not subs:
            return []
        best = gr_max(self.mu(sel_mask, j) for j in subs)
        return sorted(j for j in subs if gr_compare(self.mu(sel_mask, j), best) == 0)

    def member_ext_dim(self, sel_mask: int, zi: int, xi: int) -> int:
        """Dimension of {xi in Ext(Z, X) : all defects outside sel vanish}."""
        e = self.ext_of((zi,), (xi,))
        if e.dim == 0:
            return 0
        key = (zi, xi)
        mats = self._indec_action_cache.get(key)
        if mats is None:
            mats = []
            z = self.catalog.rep_of((zi,))
            z_pres = self.pres_of((zi,))
            for k, m_idx in enumerate(self.catalog.nonprojective):
                m = self.catalog.indecomposables[m_idx]
                homs = hom_basis(m, z)
                if not homs:
                    continue
                m_pres = self.catalog.presentation(m_idx)
                lam1s = [lift_through_presentations(z_pres, f, m_pres) for f in homs]
                mat = self._action_matrix(e, lam1s, self.ext_of((m_idx,), (xi,)))
                if mat.rows:
                    mats.append((k, mat))
            self._indec_action_cache[key] = mats
        stacked = None
        for k, mat in mats:
            if not (sel_mask >> k) & 1:
                stacked = mat if stacked is None else stacked.vstack(mat)
        if stacked is None:
            return e.dim
        return e.dim - stacked.rank()


def _antichain(masks: tuple[int, ...]) -> tuple[int, ...]:
    """Minimal elements under the submask order (drop proper supersets)."""
    out = []
    for m in sorted(set(masks), key=lambda v: (bin(v).count("1"), v)):
        if not any(is_submask(k, m) for k in out):
            out.append(m)
    return tuple(out)
