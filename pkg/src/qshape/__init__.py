"""Mesh categories of stable translation quivers, exactly.

Builds the mesh category of the double or repetitive quiver of a linear
A_n quiver over Z, Q, or Z/p^k, represents modules over it by exact
matrices, and decides the homological predicates that single out exact,
projective, and injective representations and the weak equivalences
between them.
"""

from .exactalg import QQ, ZZ, Matrix, ModuleMap, PresentedModule, Zmod
from .quiver import build_double_an, build_repetitive_an
from .meshcat import MeshCategory

__all__ = [
    "ZZ", "QQ", "Zmod", "Matrix", "PresentedModule", "ModuleMap",
    "build_double_an", "build_repetitive_an", "MeshCategory",
]

__version__ = "0.1.0"
