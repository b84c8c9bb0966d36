"""Exact-arithmetic computational tools for parabolic subalgebras of
reductive Lie algebras over the rationals: recognition, nilradicals
and filtrations, restricted root data, Weyl combinatorics, chamber
systems, parabolic projection, and geometric configurations.
"""

from .errors import DomainError, InternalCheckError
from .liealg import Filtration, LieAlgebra, minimal_polynomial
from .parabolic import (
    ParabolicData,
    common_levi,
    is_costandard,
    is_opposite,
    is_parabolic,
    is_weakly_opposite,
    make_parabolic,
    opposite,
    project,
)
from .ratmat import BilinearForm, Matrix, Subspace

__version__ = "0.1.0"

__all__ = [
    "BilinearForm",
    "DomainError",
    "Filtration",
    "InternalCheckError",
    "LieAlgebra",
    "Matrix",
    "ParabolicData",
    "Subspace",
    "common_levi",
    "is_costandard",
    "is_opposite",
    "is_parabolic",
    "is_weakly_opposite",
    "make_parabolic",
    "minimal_polynomial",
    "opposite",
    "project",
]
