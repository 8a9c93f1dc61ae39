"""Polynomial group laws x (+) y = P(x, y) with prescribed 1 (+) 1 and 2 (+) 2."""

from .exactnum import DomainError, QuadExt
from .grouplaw import Affine, Bilinear, evaluate, is_true_over_Q, solve
from .pell import chakravala

__all__ = [
    "Affine",
    "Bilinear",
    "DomainError",
    "QuadExt",
    "chakravala",
    "evaluate",
    "is_true_over_Q",
    "solve",
]
