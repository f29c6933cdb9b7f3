"""The complete catalog of indecomposables and almost split sequences.

Construction: start from the indecomposable projectives and apply the
inverse translate until exhaustion, which terminates exactly for
representation-finite hereditary input (a size cap guards everything
else).  The catalog fixes the coordinate system used by every other
module: exact structures are subsets of its AR-sequence list.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .projectives import minimal_presentation, tau, tau_minus
from .quiver import Quiver
from .rep import (
    Morphism,
    Representation,
    direct_sum,
    hom_basis,
    hom_dim,
    iso_test,
    split_summands,
)

DEFAULT_CATALOG_CAP = 200

# An iso class of objects: sorted tuple of catalog indices, with multiplicity.
ObjectClass = tuple[int, ...]


class NotRepresentationFinite(RuntimeError):
    pass


@dataclass(frozen=True)
class ARSequence:
    """A concrete almost split sequence left >-> middle ->> right."""

    index: int
    left: Representation
    middle: Representation
    right: Representation
    incl: Morphism
    proj: Morphism
    left_index: int
    right_index: int
    middle_class: ObjectClass


class ARCatalog:
    """Indecomposables, Hom-dimension table and AR sequences of rep(Q)."""

    def __init__(self, quiver: Quiver, p: int, indecomposables, projective, injective):
        self.quiver = quiver
        self.p = p
        self.indecomposables: list[Representation] = indecomposables
        self.projective: list[bool] = projective
        self.injective: list[bool] = injective
        self.hom_dims: list[list[int]] = [
            [hom_dim(a, b) for b in indecomposables] for a in indecomposables
        ]
        self.nonprojective: list[int] = [i for i, pr in enumerate(projective) if not pr]
        self.ar_sequences: list[ARSequence] = []
        self.ar_index_by_right: dict[int, int] = {}
        self._hom_cache: dict[tuple[int, int], list[Morphism]] = {}
        self._hom_rep_cache: dict[tuple[Representation, Representation], list[Morphism]] = {}
        self._presentations: dict[int, object] = {}
        self._rep_of_cache: dict[ObjectClass, Representation] = {}
        self._identify_solver = None
        self._class_tables: dict[int, object] = {}
        self._labels = self._make_labels()

    # -- identification ----------------------------------------------------

    def _make_labels(self) -> list[str]:
        labels = []
        for i, m in enumerate(self.indecomposables):
            simple_at = [v for vi, v in enumerate(self.quiver.vertices) if m.dim[vi] == 1]
            if m.total_dim == 1:
                labels.append(f"S{simple_at[0]}")
            elif self.projective[i]:
                top = [v for v, vec in _top_vertices(m)]
                labels.append(f"P{top[0]}" if len(top) == 1 else f"M{_dimstr(m.dim)}")
            elif self.injective[i]:
                soc = _socle_vertices(m)
                labels.append(f"I{soc[0]}" if len(soc) == 1 else f"M{_dimstr(m.dim)}")
            else:
                labels.append(f"M{_dimstr(m.dim)}")
        return labels

    def label(self, i: int) -> str:
        return self._labels[i]

    def class_label(self, cls: ObjectClass) -> str:
        if not cls:
            return "0"
        return "+".join(self.label(i) for i in cls)

    def index_of(self, rep: Representation) -> int | None:
        """Catalog index of an indecomposable representation, by isomorphism."""
        for i, m in enumerate(self.indecomposables):
            if m.dim == rep.dim and iso_test(m, rep):
                return i
        return None

    def hom(self, i: int, j: int) -> list[Morphism]:
        key = (i, j)
        if key not in self._hom_cache:
            self._hom_cache[key] = hom_basis(self.indecomposables[i], self.indecomposables[j])
        return self._hom_cache[key]

    def hom_of_reps(self, a: Representation, b: Representation) -> list[Morphism]:
        """hom_basis with memoisation keyed by the (hashable) representations."""
        key = (a, b)
        cached = self._hom_rep_cache.get(key)
        if cached is None:
            cached = hom_basis(a, b)
            self._hom_rep_cache[key] = cached
        return cached

    def presentation(self, i: int):
        if i not in self._presentations:
            self._presentations[i] = minimal_presentation(self.indecomposables[i])
        return self._presentations[i]

    # -- object classes -----------------------------------------------------

    def class_dim(self, cls: ObjectClass) -> int:
        return sum(self.indecomposables[i].total_dim for i in cls)

    def class_dim_vector(self, cls: ObjectClass) -> tuple[int, ...]:
        n = len(self.quiver.vertices)
        out = [0] * n
        for i in cls:
            for v in range(n):
                out[v] += self.indecomposables[i].dim[v]
        return tuple(out)

    def rep_of(self, cls: ObjectClass) -> Representation:
        cls = tuple(sorted(cls))
        if cls not in self._rep_of_cache:
            if not cls:
                self._rep_of_cache[cls] = Representation.zero(self.quiver, self.p)
            else:
                self._rep_of_cache[cls] = direct_sum([self.indecomposables[i] for i in cls])
        return self._rep_of_cache[cls]

    def decompose(self, x: Representation) -> ObjectClass:
        """Krull-Schmidt class of x as a sorted multiset of catalog indices."""
        parts = split_summands(x, self.indecomposables)
        return tuple(sorted(i for i, _ in parts))

    def split_monos(self, x: Representation) -> list[tuple[int, Morphism]]:
        return split_summands(x, self.indecomposables)

    def identify(self, x: Representation) -> ObjectClass:
        """Class of x via its Hom-dimension vector (fast; agrees with decompose).

        The matrix (dim Hom(X_i, X_j))_ij is invertible because the module
        category of a representation-finite hereditary algebra is directed,
        so multiplicities are recovered by one exact linear solve.
        """
        if x.total_dim == 0:
            return ()
        solver = self._identify_solver
        if solver is None:
            solver = _IntInverse(self.hom_dims)
            self._identify_solver = solver
        if solver.num is None:
            return self.decompose(x)
        h = [hom_dim(self.indecomposables[i], x) for i in range(len(self.indecomposables))]
        out = []
        for i, row in enumerate(solver.num):
            dot = sum(a * b for a, b in zip(row, h))
            q, r = divmod(dot, solver.den)
            if r or q < 0:
                return self.decompose(x)
            out.extend([i] * q)
        cls = tuple(sorted(out))
        if self.class_dim_vector(cls) != x.dim:
            return self.decompose(x)
        return cls

    def class_table(self, cap: int):
        from .classtable import ClassTable

        cap = max(cap, max((m.total_dim for m in self.indecomposables), default=0))
        bigger = [c for c in self._class_tables if c >= cap]
        if bigger:
            return self._class_tables[min(bigger)]
        self._class_tables[cap] = ClassTable(self, cap)
        return self._class_tables[cap]

    def __repr__(self):
        return f"ARCatalog({len(self.indecomposables)} indecomposables, {len(self.ar_sequences)} AR sequences)"


def _dimstr(dim: tuple[int, ...]) -> str:
    if all(d <= 9 for d in dim):
        return "".join(str(d) for d in dim)
    return "(" + ",".join(str(d) for d in dim) + ")"


def _top_vertices(m: Representation):
    from .projectives import top_generators

    return top_generators(m)


def _socle_vertices(m: Representation) -> list[str]:
    return [v for v, _ in _top_vertices(m.dual())]


class _IntInverse:
    """Integer-scaled inverse of the Hom-dimension matrix, computed once.

    Stores num/den with H^{-1} = num/den, so each identification is one
    integer mat-vec plus divisibility checks.  num is None when H is
    singular (never the case for directed module categories).
    """

    def __init__(self, table: list[list[int]]):
        n = len(table)
        self.den = 1
        self.num: list[list[int]] | None = None
        aug = [[Fraction(v) for v in row] + [Fraction(1 if j == i else 0) for j in range(n)] for i, row in enumerate(table)]
        r = 0
        for c in range(n):
            piv = next((i for i in range(r, n) if aug[i][c] != 0), None)
            if piv is None:
                return
            aug[r], aug[piv] = aug[piv], aug[r]
            inv = 1 / aug[r][c]
            aug[r] = [v * inv for v in aug[r]]
            for i in range(n):
                if i != r and aug[i][c] != 0:
                    f = aug[i][c]
                    aug[i] = [a - f * b for a, b in zip(aug[i], aug[r])]
            r += 1
        if r < n:
            return
        inv_frac = [row[n:] for row in aug]
        den = 1
        for row in inv_frac:
            for v in row:
                den = den * v.denominator // math.gcd(den, v.denominator)
        self.den = den
        self.num = [[int(v * den) for v in row] for row in inv_frac]


def build_catalog(quiver: Quiver, p: int = 2, cap: int = DEFAULT_CATALOG_CAP) -> ARCatalog:
    """Catalog of all indecomposables by inverse-translate sweeps from the projectives.

    Raises NotRepresentationFinite when more than `cap` indecomposables appear.
    """
    from .projectives import projective_rep

    indecs: list[Representation] = []
    injective_flags: list[bool] = []
    tau_minus_of: dict[int, int] = {}
    for v in quiver.vertices:
        indecs.append(projective_rep(quiver, p, v))
        injective_flags.append(False)
    n_proj = len(indecs)
    frontier = list(range(n_proj))
    while frontier:
        nxt = []
        for i in frontier:
            t = tau_minus(indecs[i])
            if t is None:
                injective_flags[i] = True
                continue
            found = None
            for j, m in enumerate(indecs):
                if m.dim == t.dim and iso_test(m, t):
                    found = j
                    break
            if found is None:
                indecs.append(t)
                injective_flags.append(False)
                found = len(indecs) - 1
                if len(indecs) > cap:
                    raise NotRepresentationFinite(
                        f"more than {cap} indecomposables; not representation-finite at this cap"
                    )
                nxt.append(found)
            tau_minus_of[i] = found
        frontier = nxt
    projective_flags = [i < n_proj for i in range(len(indecs))]
    catalog = ARCatalog(quiver, p, indecs, projective_flags, injective_flags)
    for m_idx in catalog.nonprojective:
        seq = ar_sequence_for(catalog, m_idx, index=len(catalog.ar_sequences))
        catalog.ar_sequences.append(seq)
        catalog.ar_index_by_right[m_idx] = seq.index
    return catalog


def translate(catalog: ARCatalog, m_index: int) -> int | None:
    """Catalog index of tau(X_m); None for projective X_m."""
    t = tau(catalog.indecomposables[m_index])
    if t is None:
        return None
    idx = catalog.index_of(t)
    if idx is None:
        raise AssertionError("translate left the catalog (bug)")
    return idx


def ar_sequence_for(catalog: ARCatalog, m_index: int, index: int | None = None) -> ARSequence:
    """The almost split sequence tau M >-> E ->> M for non-projective M."""
    from .homology import ext_space

    if catalog.projective[m_index]:
        raise ValueError(f"{catalog.label(m_index)} is projective; no AR sequence ends there")
    t_idx = translate(catalog, m_index)
    left = catalog.indecomposables[t_idx]
    right = catalog.indecomposables[m_index]
    ext = ext_space(right, left, pres=catalog.presentation(m_index))
    if ext.dim != 1:
        raise ValueError(
            f"Ext^1({catalog.label(m_index)}, tau {catalog.label(m_index)}) has dimension {ext.dim}, "
            "not 1; input outside the supported class"
        )
    ses = ext.realize((1,))
    if _splits(ses.incl):
        raise AssertionError("realized AR sequence splits (bug)")
    middle_class = catalog.identify(ses.middle)
    return ARSequence(
        index=index if index is not None else catalog.ar_index_by_right.get(m_index, -1),
        left=ses.left,
        middle=ses.middle,
        right=ses.right,
        incl=ses.incl,
        proj=ses.proj,
        left_index=t_idx,
        right_index=m_index,
        middle_class=middle_class,
    )


def _splits(incl: Morphism) -> bool:
    from .rep import _retraction_for

    return _retraction_for(incl) is not None
