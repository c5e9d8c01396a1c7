"""Graded Betti tables of random canonical curves over small prime fields."""

from .betti import BettiTable
from .curves import CurveRecord, random_canonical_curve
from .field import PrimeField
from .groebner import Ideal
from .poly import Polynomial, PolyRing
from .resolution import canonical_resolution, free_resolution

__version__ = "0.1.0"

__all__ = [
    "BettiTable", "CurveRecord", "Ideal", "PolyRing", "Polynomial", "PrimeField",
    "canonical_resolution", "free_resolution", "random_canonical_curve",
]
