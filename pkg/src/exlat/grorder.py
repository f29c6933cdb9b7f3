"""The total order on finite strictly increasing length words.

Words are compared lexicographically with the natural order on N
reversed: at the first differing position the *larger* entry makes the
word *smaller*, and a proper prefix is smaller than the full word.  So
(1) < (1,3,4) < (1,2,4): denser beginnings win.
"""

from __future__ import annotations

from functools import total_ordering


def gr_compare(a, b) -> int:
    """-1, 0, 1 for a < b, a = b, a > b in the reversed-lexicographic order."""
    a = tuple(a)
    b = tuple(b)
    for x, y in zip(a, b):
        if x != y:
            return -1 if x > y else 1
    if len(a) == len(b):
        return 0
    return -1 if len(a) < len(b) else 1


def gr_max(words):
    best = None
    for w in words:
        w = tuple(w)
        if best is None or gr_compare(w, best) > 0:
            best = w
    if best is None:
        raise ValueError("gr_max of empty iterable")
    return best


@total_ordering
class GRVector:
    """A strictly increasing word of positive lengths, ordered as above."""

    __slots__ = ("entries",)

    def __init__(self, entries):
        entries = tuple(int(e) for e in entries)
        if not entries:
            raise ValueError("measure words of nonzero objects are nonempty")
        if any(e <= 0 for e in entries):
            raise ValueError("length entries must be positive")
        if any(a >= b for a, b in zip(entries, entries[1:])):
            raise ValueError(f"length word must be strictly increasing: {entries}")
        self.entries = entries

    def __eq__(self, other):
        other_entries = other.entries if isinstance(other, GRVector) else tuple(other)
        return self.entries == other_entries

    def __lt__(self, other):
        other_entries = other.entries if isinstance(other, GRVector) else tuple(other)
        return gr_compare(self.entries, other_entries) < 0

    def __hash__(self):
        return hash(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def __repr__(self):
        return "(" + ",".join(str(e) for e in self.entries) + ")"
