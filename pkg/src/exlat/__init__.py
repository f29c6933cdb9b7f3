"""exlat: exact structures on representation-finite quiver categories.

Computes the complete Boolean lattice of exact structures on rep(Q) for a
representation-finite acyclic quiver Q over a prime field, together with
the invariants attached to each structure: E-simple objects, E-length,
Gabriel-Roiter measures and filtrations, the graded quiver of an exact
category, and exact-functor reductions.
"""

__version__ = "0.1.0"

from .fp import BACKEND, Matrix, PrimeField
from .quiver import Arrow, Quiver

__all__ = ["Arrow", "BACKEND", "Matrix", "PrimeField", "Quiver", "__version__"]
