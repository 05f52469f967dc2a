"""Flag enumeration on matroid base polytopes.

The main entry points are :func:`face_lattice`, :func:`cd_index`,
:func:`hyperplane_split` and :func:`cd_index_rank2`; ``basepoly.kernels.BACKEND``
tells which kernel implementation was loaded.
"""

from .cdindex import ab_index, cd_index
from .matroid import Matroid, matroid_from_bases, rank2_from_composition, uniform
from .ncpoly import NCPolynomial
from .polytope import face_lattice
from .rank2 import cd_index_rank2
from .split import SplitSpec, hyperplane_split, verify_split_identity

__version__ = "0.1.0"

__all__ = [
    "Matroid",
    "NCPolynomial",
    "SplitSpec",
    "ab_index",
    "cd_index",
    "cd_index_rank2",
    "face_lattice",
    "hyperplane_split",
    "matroid_from_bases",
    "rank2_from_composition",
    "uniform",
    "verify_split_identity",
]
