"""Exact tools for doubly stochastic matrices with symmetry constraints."""

from .exact_matrix import ExactMatrix, Permutation, SymmetryClass, classify
from .extremality import ExtremeVerdict, enumerate_extreme, is_extreme
from .perm_classes import count_class, enumerate_class

__all__ = [
    "ExactMatrix",
    "ExtremeVerdict",
    "Permutation",
    "SymmetryClass",
    "classify",
    "count_class",
    "enumerate_class",
    "enumerate_extreme",
    "is_extreme",
]
__version__ = "0.1.0"
