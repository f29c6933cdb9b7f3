"""Invariants of an exact structure: simples, length, Gabriel-Roiter data,
the graded quiver, and the property-check suites.

Everything is computed against the catalog's precomputed class tables:
lengths by memoized recursion over proper admissible subobjects, measures
by the append-maximum recursion over proper indecomposable subobjects,
exact-quiver arrow counts from member-subspace dimensions and radical
quotients.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .catalog import ObjectClass
from .classtable import is_submask
from .fp import Matrix
from .grorder import GRVector, gr_compare, gr_max
from .rep import coords_in_hom_basis
from .structures import ExactStructure


def _table(e: ExactStructure, cap: int | None = None):
    c = e.catalog
    need = max((m.total_dim for m in c.indecomposables), default=1)
    return c.class_table(max(cap or 0, need))


# -- simples and length ---------------------------------------------------------


def e_simples(e: ExactStructure) -> list[int]:
    """Indecomposables with no proper nonzero admissible subobject."""
    t = _table(e)
    return [
        i
        for i in range(len(e.catalog.indecomposables))
        if not t.proper_subobjects(e.mask, (i,))
    ]


def length(e: ExactStructure, x: ObjectClass, cap: int | None = None) -> int:
    """Maximal length of a chain of proper admissible monos ending at x."""
    x = tuple(sorted(x))
    need = e.catalog.class_dim(x)
    if cap is not None and need > cap:
        raise ValueError(f"object of dimension {need} exceeds the cap {cap}")
    return _table(e, max(need, cap or 0)).length(e.mask, x)


@dataclass
class SubobjectPoset:
    nodes: list[ObjectClass]
    covers: list[tuple[ObjectClass, ObjectClass]]
    relation: dict[tuple[ObjectClass, ObjectClass], bool] = field(repr=False, default_factory=dict)

    def leq(self, x: ObjectClass, y: ObjectClass) -> bool:
        return x == y or self.relation.get((tuple(sorted(x)), tuple(sorted(y))), False)


def subobject_poset(e: ExactStructure, universe_cap: int) -> SubobjectPoset:
    """The poset of iso classes of total dim <= cap under <=_E, with covers."""
    t = _table(e, universe_cap)
    nodes: list[ObjectClass] = [()] + [cls for cls in t.classes if e.catalog.class_dim(cls) <= universe_cap]
    rel: dict[tuple[ObjectClass, ObjectClass], bool] = {}
    strict: dict[ObjectClass, list[ObjectClass]] = {n: [] for n in nodes}
    for y in nodes:
        for x in nodes:
            if x == y:
                continue
            ok = x == () or t.is_proper_subobject(e.mask, x, y)
            if ok:
                rel[(x, y)] = True
                strict[y].append(x)
    covers = []
    for y in nodes:
        for x in strict[y]:
            if not any(rel.get((x, z), False) for z in strict[y] if z != x):
                covers.append((x, y))
    return SubobjectPoset(nodes, sorted(covers), rel)


# -- Gabriel-Roiter measure -------------------------------------------------------


def gr_measure(e: ExactStructure, x: int) -> GRVector:
    """Measure of the indecomposable with catalog index x."""
    return GRVector(_table(e).mu(e.mask, x))


def gr_measure_extended(e: ExactStructure, x: ObjectClass) -> GRVector:
    """Extension to arbitrary classes: max over indecomposable subobjects."""
    x = tuple(sorted(x))
    if not x:
        raise ValueError("the Gabriel-Roiter measure of the zero object is undefined")
    t = _table(e, e.catalog.class_dim(x))
    candidates = set(x)
    for j in range(len(e.catalog.indecomposables)):
        if t.is_proper_subobject(e.mask, (j,), x):
            candidates.add(j)
    return GRVector(gr_max(t.mu(e.mask, j) for j in candidates))


@dataclass
class GRPredecessors:
    x: int
    is_simple: bool
    predecessors: list[int]


def gr_predecessors(e: ExactStructure, x: int) -> GRPredecessors:
    """All proper indecomposable subobjects attaining the measure maximum."""
    t = _table(e)
    maxi = t.mu_maximizers(e.mask, x)
    return GRPredecessors(x, is_simple=not t.proper_indec_subobjects(e.mask, x), predecessors=maxi)


def _chain_ok(e: ExactStructure, chain: list[int]) -> bool:
    t = _table(e)
    return all(t.is_proper_subobject(e.mask, (a,), (b,)) for a, b in zip(chain, chain[1:]))


def _validate_chain(e: ExactStructure, chain) -> list[int]:
    chain = list(chain)
    if not chain:
        raise ValueError("empty filtration chain")
    n = len(e.catalog.indecomposables)
    if any(not isinstance(i, int) or i < 0 or i >= n for i in chain):
        raise ValueError("chain entries must be catalog indices of indecomposables")
    return chain


def is_gr_filtration(e: ExactStructure, chain) -> bool:
    """X_1 is E-simple and each X_{i-1} is a GR predecessor of X_i."""
    chain = _validate_chain(e, chain)
    if not _chain_ok(e, chain):
        return False
    t = _table(e)
    if t.proper_indec_subobjects(e.mask, chain[0]):
        return False
    for a, b in zip(chain, chain[1:]):
        if a not in t.mu_maximizers(e.mask, b):
            return False
    return True


def is_mu_filtration(e: ExactStructure, chain) -> bool:
    """mu(X_i) is the length-i prefix of mu(X_n) for every i."""
    chain = _validate_chain(e, chain)
    if not _chain_ok(e, chain):
        return False
    t = _table(e)
    target = t.mu(e.mask, chain[-1])
    if len(target) != len(chain):
        return False
    for i, idx in enumerate(chain, start=1):
        if t.mu(e.mask, idx) != target[:i]:
            return False
    return True


# -- the graded quiver of (A, E) ---------------------------------------------------


@dataclass
class GradedQuiver:
    vertices: list[int]  # catalog indices of the E-simples
    labels: list[str]
    degree0: dict[tuple[int, int], int]  # (source, target) -> arrow count
    degree1: dict[tuple[int, int], int]

    def to_dot(self) -> str:
        lines = ["digraph ExactQuiver {"]
        for v, lab in zip(self.vertices, self.labels):
            lines.append(f'  "{lab}";')
        names = dict(zip(self.vertices, self.labels))
        for (a, b), n in sorted(self.degree0.items()):
            for _ in range(n):
                lines.append(f'  "{names[a]}" -> "{names[b]}" [style=dotted];')
        for (a, b), n in sorted(self.degree1.items()):
            for _ in range(n):
                lines.append(f'  "{names[a]}" -> "{names[b]}" [style=solid];')
        lines.append("}")
        return "\n".join(lines)


def _member_ext_dim(e: ExactStructure, zi: int, xi: int) -> int:
    """Dimension of the member subspace of Ext(Z, X)."""
    return _table(e).member_ext_dim(e.mask, zi, xi)


def _irr_dim(e: ExactStructure, xi: int, yi: int, middles: list[int]) -> int:
    """dim rad(X, Y) / rad^2(X, Y) with compositions through the given middles."""
    c = e.catalog
    basis = c.hom(xi, yi)
    if not basis:
        return 0
    composite_vecs: list[list[int]] = []
    for zi in middles:
        if zi == xi or zi == yi:
            continue  # bricks: rad(X, X) = 0 contributes nothing
        for f in c.hom(xi, zi):
            for g in c.hom(zi, yi):
                comp = f.then(g)
                coords = coords_in_hom_basis(comp, basis)
                if coords is None:
                    raise AssertionError("composite outside Hom (bug)")
                composite_vecs.append(coords)
    if not composite_vecs:
        return len(basis)
    m = Matrix(c.p, len(composite_vecs), len(basis), [v for row in composite_vecs for v in row])
    return len(basis) - m.rank()


def exact_quiver(e: ExactStructure, rad_mode: str = "subcategory") -> GradedQuiver:
    """Vertices: E-simples.  Degree-0 arrows X -> Y count irreducible maps,
    degree-1 arrows X -> Y count member classes Y >-> E ->> X.

    rad_mode picks where rad^2 is computed: "subcategory" factors only
    through E-simples (reproduces the worked figures), "ambient" uses the
    whole module category.
    """
    if rad_mode not in ("subcategory", "ambient"):
        raise ValueError(f"unknown rad mode {rad_mode!r}")
    c = e.catalog
    verts = e_simples(e)
    middles = verts if rad_mode == "subcategory" else list(range(len(c.indecomposables)))
    degree0 = {}
    degree1 = {}
    for x in verts:
        for y in verts:
            if x != y:
                n0 = _irr_dim(e, x, y, middles)
                if n0:
                    degree0[(x, y)] = n0
            n1 = _member_ext_dim(e, x, y)
            if n1:
                degree1[(x, y)] = n1
    return GradedQuiver(verts, [c.label(i) for i in verts], degree0, degree1)


# -- property-check reports ----------------------------------------------------------


@dataclass
class CheckReport:
    name: str
    structure: str
    checked: int
    violations: list[str]
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "structure": self.structure,
            "checked": self.checked,
            "violations": list(self.violations),
            "notes": list(self.notes),
        }


def check_superadditivity(e: ExactStructure, cap: int = 4) -> CheckReport:
    """l(Y) >= l(X) + l(Z) for every member sequence with dim(Y) <= cap."""
    t = _table(e, cap)
    c = e.catalog
    checked = 0
    strict = 0
    violations = []
    for (z_cls, x_cls), entries in t.seqs.items():
        if c.class_dim(z_cls) + c.class_dim(x_cls) > cap:
            continue
        for coeffs, mask, middle in entries:
            if not is_submask(mask, e.mask):
                continue
            checked += 1
            ly = t.length(e.mask, middle)
            lx = t.length(e.mask, x_cls)
            lz = t.length(e.mask, z_cls)
            if ly < lx + lz:
                violations.append(
                    f"l({c.class_label(middle)})={ly} < {lx}+{lz} for {c.class_label(x_cls)} >-> . ->> {c.class_label(z_cls)}"
                )
            elif ly > lx + lz:
                strict += 1
    return CheckReport(
        "superadditivity", e.name(), checked, violations, [f"strict inequalities: {strict}"]
    )


def check_gr_axioms(e: ExactStructure) -> CheckReport:
    """Exhaustive (GR1)-(GR7) over the catalog's indecomposables."""
    t = _table(e)
    c = e.catalog
    n = len(c.indecomposables)
    mu = {i: t.mu(e.mask, i) for i in range(n)}
    lng = {i: t.length(e.mask, (i,)) for i in range(n)}
    simples = set(e_simples(e))
    checked = 0
    violations = []

    def cx(tag, detail):
        violations.append(f"({tag}) {detail}")

    # GR1: mu is a poset morphism, strictly monotone on proper inclusions
    for x in range(n):
        for y in range(n):
            if x != y and t.is_proper_subobject(e.mask, (x,), (y,)):
                checked += 1
                if gr_compare(mu[x], mu[y]) >= 0:
                    cx("GR1", f"mu({c.label(x)}) !< mu({c.label(y)})")
    # GR2
    for x in range(n):
        for y in range(n):
            checked += 1
            if mu[x] == mu[y] and lng[x] != lng[y]:
                cx("GR2", f"{c.label(x)} vs {c.label(y)}")
    # GR3
    for x in range(n):
        for y in range(n):
            subs = t.proper_indec_subobjects(e.mask, x)
            if lng[x] >= lng[y] and all(gr_compare(mu[s], mu[y]) < 0 for s in subs):
                checked += 1
                if gr_compare(mu[x], mu[y]) > 0:
                    cx("GR3", f"{c.label(x)} vs {c.label(y)}")
    # GR4: totality of the order
    for x in range(n):
        for y in range(n):
            checked += 1
            if gr_compare(mu[x], mu[y]) not in (-1, 0, 1):
                cx("GR4", f"{c.label(x)} vs {c.label(y)}")
    # GR5: finitely many measures per length bound (trivial at catalog scale)
    for bound in range(1, max(lng.values(), default=1) + 1):
        vals = {mu[i] for i in range(n) if lng[i] <= bound}
        checked += 1
        if len(vals) > n:
            cx("GR5", f"bound {bound}")
    # GR6: simples are exactly the measure minima
    mu_min = gr_max(mu.values()) if n else ()
    for i in range(n):
        if gr_compare(mu[i], mu_min) < 0:
            mu_min = mu[i]
    for i in range(n):
        checked += 1
        if (mu[i] == mu_min) != (i in simples):
            cx("GR6", f"{c.label(i)}")
    # GR7
    for x in range(n):
        for y in range(n):
            if gr_compare(mu[x], mu[y]) >= 0:
                continue
            checked += 1
            found = False
            for y2 in range(n):
                if y2 != y and not t.is_proper_subobject(e.mask, (y2,), (y,)):
                    continue
                for y1 in t.mu_maximizers(e.mask, y2):
                    if (
                        gr_compare(mu[y1], mu[x]) <= 0
                        and gr_compare(mu[x], mu[y2]) < 0
                        and lng[y1] <= lng[x]
                    ):
                        found = True
                        break
                if found:
                    break
            if not found:
                cx("GR7", f"mu({c.label(x)}) < mu({c.label(y)}): no intermediate pair")
    return CheckReport("gr-axioms", e.name(), checked, violations)


@dataclass
class GR8Report:
    structure: str
    checked: int
    counterexamples: list[str]
    violations: list[str]

    @property
    def holds(self) -> bool:
        return not self.counterexamples and not self.violations

    def to_dict(self) -> dict:
        return {
            "structure": self.structure,
            "checked": self.checked,
            "counterexamples": list(self.counterexamples),
            "violations": list(self.violations),
        }


def check_gr8(e: ExactStructure, max_summands: int = 3, cap: int = 4) -> GR8Report:
    """Search for failures of the direct-summand property.

    For X indecomposable with an admissible mono into Y = +Y_i (at most
    max_summands summands, dim Y <= cap): the measure inequality
    mu(X) <= max mu(Y_i) must hold, and equality should force X to be a
    summand of Y.  Equality cases with X not a summand are recorded as
    counterexamples; failures of the inequality itself as violations.
    """
    t = _table(e, cap)
    c = e.catalog
    checked = 0
    counterexamples = []
    violations = []
    for y_cls in t.classes:
        if len(y_cls) > max_summands or c.class_dim(y_cls) > cap:
            continue
        for x in range(len(c.indecomposables)):
            proper = t.is_proper_subobject(e.mask, (x,), y_cls)
            trivial = y_cls == (x,)
            if not proper and not trivial:
                continue
            checked += 1
            mu_x = t.mu(e.mask, x)
            best = gr_max(t.mu(e.mask, i) for i in y_cls)
            cmp = gr_compare(mu_x, best)
            if cmp > 0:
                violations.append(f"mu({c.label(x)}) > max over {c.class_label(y_cls)}")
            elif cmp == 0 and x not in y_cls:
                counterexamples.append(
                    f"X={c.label(x)} <=_E Y={c.class_label(y_cls)}: equal measures {GRVector(mu_x)} but X is not a summand"
                )
    return GR8Report(e.name(), checked, counterexamples, violations)


@dataclass
class ReductionReport:
    structures: list[str]
    lengths: dict[ObjectClass, list[int]]
    measures: dict[int, list[tuple[int, ...]]]
    monotone: bool
    mu_increases: list[str]
    mu_decreases: list[str]

    def to_dict(self) -> dict:
        return {
            "structures": list(self.structures),
            "lengths": {"+".join(map(str, k)) if k else "0": v for k, v in self.lengths.items()},
            "measures": {str(k): [list(w) for w in v] for k, v in self.measures.items()},
            "monotone": self.monotone,
            "mu_increases": list(self.mu_increases),
            "mu_decreases": list(self.mu_decreases),
        }


def reduction_report(chain: list[ExactStructure], cap: int | None = None) -> ReductionReport:
    """Lengths and measures along an ascending chain of structures.

    Asserts length monotonicity (a reduction never increases any length)
    and flags the direction changes of the measure, which is not monotone.
    """
    if not chain:
        raise ValueError("empty chain of structures")
    c = chain[0].catalog
    for a, b in zip(chain, chain[1:]):
        if not a.leq(b):
            raise ValueError("structures must be totally ordered ascending in the lattice")
    t = _table(chain[0], cap)
    classes = [cls for cls in t.classes if cap is None or c.class_dim(cls) <= (cap or 0)] if cap else [
        (i,) for i in range(len(c.indecomposables))
    ]
    lengths = {cls: [t.length(e.mask, cls) for e in chain] for cls in classes}
    measures = {i: [t.mu(e.mask, i) for e in chain] for i in range(len(c.indecomposables))}
    monotone = all(all(a <= b for a, b in zip(v, v[1:])) for v in lengths.values())
    inc, dec = [], []
    for i, words in measures.items():
        for k, (a, b) in enumerate(zip(words, words[1:])):
            cmpv = gr_compare(a, b)
            if cmpv < 0:
                inc.append(f"{c.label(i)}: {GRVector(a)} -> {GRVector(b)} at step {k + 1}")
            elif cmpv > 0:
                dec.append(f"{c.label(i)}: {GRVector(a)} -> {GRVector(b)} at step {k + 1}")
    return ReductionReport([e.name() for e in chain], lengths, measures, monotone, inc, dec)
