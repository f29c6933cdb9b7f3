"""Finite acyclic quivers and their path combinatorics."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple


class Arrow(NamedTuple):
    source: str
    target: str
    name: str


@dataclass(frozen=True)
class Quiver:
    """A finite acyclic quiver with uniquely named vertices and arrows."""

    vertices: tuple[str, ...]
    arrows: tuple[Arrow, ...]

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(str(v) for v in self.vertices))
        object.__setattr__(self, "arrows", tuple(Arrow(str(a[0]), str(a[1]), str(a[2])) for a in self.arrows))
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("duplicate vertex labels")
        names = [a.name for a in self.arrows]
        if len(set(names)) != len(names):
            raise ValueError("duplicate arrow names")
        vs = set(self.vertices)
        for a in self.arrows:
            if a.source not in vs or a.target not in vs:
                raise ValueError(f"arrow {a.name}: endpoint not a vertex")
        if self._has_cycle():
            raise ValueError("quiver has an oriented cycle")
        object.__setattr__(self, "_vidx", {v: i for i, v in enumerate(self.vertices)})
        object.__setattr__(self, "_aidx", {a.name: i for i, a in enumerate(self.arrows)})

    def _has_cycle(self) -> bool:
        indeg = {v: 0 for v in self.vertices}
        for a in self.arrows:
            indeg[a.target] += 1
        queue = [v for v in self.vertices if indeg[v] == 0]
        seen = 0
        while queue:
            v = queue.pop()
            seen += 1
            for a in self.arrows:
                if a.source == v:
                    indeg[a.target] -= 1
                    if indeg[a.target] == 0:
                        queue.append(a.target)
        return seen != len(self.vertices)

    # -- lookups -----------------------------------------------------------

    def vertex_index(self, v: str) -> int:
        return self._vidx[v]

    def arrow_index(self, name: str) -> int:
        try:
            return self._aidx[name]
        except KeyError:
            raise KeyError(f"no arrow named {name!r}")

    def arrow(self, name: str) -> Arrow:
        return self.arrows[self.arrow_index(name)]

    def arrows_from(self, v: str) -> list[Arrow]:
        return [a for a in self.arrows if a.source == v]

    def arrows_into(self, v: str) -> list[Arrow]:
        return [a for a in self.arrows if a.target == v]

    # -- constructions -------------------------------------------------------

    def opposite(self) -> "Quiver":
        """Same vertices and arrow names, all arrows reversed."""
        return Quiver(self.vertices, tuple(Arrow(a.target, a.source, a.name) for a in self.arrows))

    def subquiver(self, vertices=None, arrow_names=None) -> "Quiver":
        """Full or partial subquiver; defaults keep all vertices / no check on arrows."""
        verts = tuple(vertices) if vertices is not None else self.vertices
        for v in verts:
            if v not in self.vertices:
                raise ValueError(f"not a vertex of the quiver: {v!r}")
        if arrow_names is None:
            arrs = tuple(a for a in self.arrows if a.source in verts and a.target in verts)
        else:
            arrs = tuple(self.arrow(n) for n in arrow_names)
            for a in arrs:
                if a.source not in verts or a.target not in verts:
                    raise ValueError(f"arrow {a.name} leaves the chosen vertex set")
        return Quiver(verts, arrs)

    def contains_subquiver(self, other: "Quiver") -> bool:
        return set(other.vertices) <= set(self.vertices) and set(other.arrows) <= set(self.arrows)

    def paths(self) -> dict[tuple[str, str], list[tuple[str, ...]]]:
        """All directed paths (u, w) -> arrow-name tuples, trivial paths included."""
        return _all_paths(self)


@lru_cache(maxsize=None)
def _all_paths(quiver: Quiver) -> dict[tuple[str, str], list[tuple[str, ...]]]:
    paths: dict[tuple[str, str], list[tuple[str, ...]]] = {}
    for u in quiver.vertices:
        for w in quiver.vertices:
            paths[(u, w)] = []
    for v in quiver.vertices:
        paths[(v, v)].append(())
    frontier = [(v, v, ()) for v in quiver.vertices]
    while frontier:
        nxt = []
        for u, w, names in frontier:
            for a in quiver.arrows_from(w):
                ext = names + (a.name,)
                paths[(u, a.target)].append(ext)
                nxt.append((u, a.target, ext))
        frontier = nxt
    for key in paths:
        paths[key].sort(key=lambda t: (len(t), tuple(quiver.arrow_index(n) for n in t)))
    return paths


def linear_quiver(n: int) -> Quiver:
    """The A_n quiver 1 -> 2 -> ... -> n."""
    vertices = tuple(str(i) for i in range(1, n + 1))
    arrows = tuple(Arrow(str(i), str(i + 1), f"a{i}") for i in range(1, n))
    return Quiver(vertices, arrows)
