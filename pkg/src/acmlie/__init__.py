"""Exact computations for almost contact metric structures on Lie algebras."""

from .errors import ACMError
from .exact import Matrix
from .extension import SymplecticKahlerData, central_extend, kahler_quotient
from .forms import KForm, exterior_derivative
from .lie import LieAlgebra, parse_structure_equations
from .riemannian import MetricLieAlgebra, levi_civita, ricci
from .structures import AcmStructure, KahlerStructure, classify

__all__ = [
    "ACMError",
    "AcmStructure",
    "KForm",
    "KahlerStructure",
    "LieAlgebra",
    "Matrix",
    "MetricLieAlgebra",
    "SymplecticKahlerData",
    "central_extend",
    "classify",
    "exterior_derivative",
    "kahler_quotient",
    "levi_civita",
    "parse_structure_equations",
    "ricci",
]

__version__ = "0.1.0"
