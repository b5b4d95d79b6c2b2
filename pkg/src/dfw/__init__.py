"""Exact-arithmetic workbench for finitely generated abelian groups,
polynomial functors, and their derived functors."""

__version__ = "0.1.0"

from .linalg import IntMatrix, SmithDecomposition, kernel_basis, smith_normal_form, solve
from .abelian import CanonicalForm, Hom, PresentedGroup, canonical_form

__all__ = [
    "IntMatrix",
    "SmithDecomposition",
    "smith_normal_form",
    "kernel_basis",
    "solve",
    "PresentedGroup",
    "Hom",
    "CanonicalForm",
    "canonical_form",
    "__version__",
]
