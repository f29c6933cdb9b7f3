"""Two self-contained auxiliary models.

The numerical-monoid category: vector spaces whose dimension lies in an
additively closed S of naturals, with the split structure.  Everything
reduces to additive combinatorics of S (the category is not weakly
idempotent complete, so it stays out of the matrix machinery): simples
are the minimal generators, length is the longest factorization.

Poset representations: the graded quiver of the standard exact structure
on rep(S) is the Hasse quiver in degree zero plus one extra vertex s0
with a degree-one arrow to each element.
"""

from __future__ import annotations

from dataclasses import dataclass


class NumericalMonoid:
    """The submonoid of (N, +) generated by the given integers >= 2 (0 implicit)."""

    def __init__(self, generators):
        gens = sorted(set(int(g) for g in generators))
        if any(g < 1 for g in gens):
            raise ValueError("generators must be positive")
        if 1 in gens:
            gens = [1]
        self.generators = tuple(self._minimize(gens))

    @staticmethod
    def _minimize(gens: list[int]) -> list[int]:
        out = []
        for g in gens:
            others = [h for h in gens if h != g]
            if not _representable(g, others):
                out.append(g)
        return out

    def contains(self, n: int) -> bool:
        if n < 0:
            return False
        return _representable(n, list(self.generators))

    def simples(self) -> tuple[int, ...]:
        """Minimal generating set: the split-simple dimensions of the model."""
        return self.generators

    def length(self, n: int) -> int:
        """Max number of generator summands in a factorization of n."""
        if n == 0:
            return 0
        if not self.contains(n):
            raise ValueError(f"{n} is not in the monoid generated by {self.generators}")
        best = [-1] * (n + 1)
        best[0] = 0
        for m in range(1, n + 1):
            for g in self.generators:
                if g <= m and best[m - g] >= 0:
                    best[m] = max(best[m], best[m - g] + 1)
        return best[n]

    def factorization_lengths(self, n: int) -> set[int]:
        """All k such that n is a sum of exactly k generators."""
        if n == 0:
            return {0}
        if not self.contains(n):
            raise ValueError(f"{n} is not in the monoid generated by {self.generators}")
        reachable: list[set[int]] = [set() for _ in range(n + 1)]
        reachable[0] = {0}
        for m in range(1, n + 1):
            for g in self.generators:
                if g <= m:
                    reachable[m] |= {k + 1 for k in reachable[m - g]}
        return reachable[n]

    def __repr__(self):
        return f"NumericalMonoid{self.generators}"


def _representable(n: int, gens: list[int]) -> bool:
    if n == 0:
        return True
    if not gens:
        return False
    ok = [False] * (n + 1)
    ok[0] = True
    for m in range(1, n + 1):
        ok[m] = any(g <= m and ok[m - g] for g in gens)
    return ok[n]


class FinitePoset:
    """A finite poset given by its order relation (validated)."""

    def __init__(self, elements, leq: dict[tuple[str, str], bool]):
        self.elements = tuple(str(e) for e in elements)
        if len(set(self.elements)) != len(self.elements):
            raise ValueError("duplicate poset elements")
        self.leq = {}
        for a in self.elements:
            for b in self.elements:
                self.leq[(a, b)] = bool(leq.get((a, b), False)) or a == b
        for a in self.elements:
            for b in self.elements:
                if a != b and self.leq[(a, b)] and self.leq[(b, a)]:
                    raise ValueError(f"antisymmetry fails at {a}, {b}")
                for c in self.elements:
                    if self.leq[(a, b)] and self.leq[(b, c)] and not self.leq[(a, c)]:
                        raise ValueError(f"transitivity fails at {a}, {b}, {c}")

    @classmethod
    def from_covers(cls, elements, covers) -> "FinitePoset":
        """Build from covering pairs (a, b) meaning a < b, closing transitively."""
        elements = [str(e) for e in elements]
        leq = {(str(a), str(b)): True for a, b in covers}
        changed = True
        while changed:
            changed = False
            for (a, b) in list(leq):
                for (c, d) in list(leq):
                    if b == c and (a, d) not in leq:
                        leq[(a, d)] = True
                        changed = True
        return cls(elements, leq)

    def hasse_covers(self) -> list[tuple[str, str]]:
        """Covering pairs: a < b with nothing strictly between."""
        out = []
        for a in self.elements:
            for b in self.elements:
                if a == b or not self.leq[(a, b)]:
                    continue
                if not any(
                    c != a and c != b and self.leq[(a, c)] and self.leq[(c, b)]
                    for c in self.elements
                ):
                    out.append((a, b))
        return out


@dataclass
class PosetQuiver:
    """The graded quiver of the poset-representation model."""

    vertices: list[str]  # poset elements plus the extra vertex
    extra: str
    hasse_arrows: list[tuple[str, str]]  # degree 0 (dotted)
    extension_arrows: list[tuple[str, str]]  # degree 1 (solid)

    def to_dot(self) -> str:
        lines = ["digraph PosetQuiver {"]
        for v in self.vertices:
            lines.append(f'  "{v}";')
        for a, b in self.hasse_arrows:
            lines.append(f'  "{a}" -> "{b}" [style=dotted];')
        for a, b in self.extension_arrows:
            lines.append(f'  "{a}" -> "{b}" [style=solid];')
        lines.append("}")
        return "\n".join(lines)


def poset_exact_quiver(p: FinitePoset, extra: str = "s0") -> PosetQuiver:
    """Hasse quiver in degree zero, plus s0 sending a degree-one arrow
    to each element (dim Ext(s0, s_i) = 1, no other extensions)."""
    if extra in p.elements:
        raise ValueError(f"extra vertex name {extra!r} collides with a poset element")
    return PosetQuiver(
        vertices=list(p.elements) + [extra],
        extra=extra,
        hasse_arrows=p.hasse_covers(),
        extension_arrows=[(extra, e) for e in p.elements],
    )
