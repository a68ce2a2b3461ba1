"""Exact computation and machine verification of Yablonskii-Vorob'ev polynomials."""

from .errors import YvlabError
from .polycore import Poly, PrimeField, RationalFunction
from .yv_engine import YvPolynomial, YvSequenceCache, yv_compute

__version__ = "0.1.0"

__all__ = [
    "Poly", "PrimeField", "RationalFunction",
    "YvPolynomial", "YvSequenceCache", "yv_compute",
    "YvlabError", "__version__",
]
