"""Variable-node quadrature for rational functions and sharp Nikolskii-type constants."""

from .errors import NotchQuadError
from .notches import NotchSet, notches, prescribe_phi
from .quadrature import QuadratureResult, integrate, norm_2m
from .ratfun import INF, Pole, PoleSet, RationalFunction, SimplePartialFraction

__all__ = [
    "INF", "NotchQuadError", "NotchSet", "Pole", "PoleSet", "QuadratureResult", "RationalFunction",
    "SimplePartialFraction", "integrate", "norm_2m", "notches", "prescribe_phi",
]
__version__ = "0.1.0"
