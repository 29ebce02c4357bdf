"""Exact graded commutative algebra over prime fields."""

from .errors import GradedRegError, ParseError
from .poly import PolyRing, SparsePoly
from .rings import RingPresentation, polynomial_ring, presentation

__version__ = "0.1.0"

__all__ = [
    "GradedRegError",
    "ParseError",
    "PolyRing",
    "SparsePoly",
    "RingPresentation",
    "polynomial_ring",
    "presentation",
]
