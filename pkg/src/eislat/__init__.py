"""Exact Eisenstein-lattice computations for the cubic-surface monodromy group."""

from .eisenstein import EisInt, OMEGA, OMEGA_BAR, THETA, UNITS, parse_eis
from .hermitian import DIAG5, HYP5, RHO, ROOTS, HermGram, Isometry, LatVec, inner

__version__ = "0.1.0"

__all__ = [
    "EisInt",
    "OMEGA",
    "OMEGA_BAR",
    "THETA",
    "UNITS",
    "parse_eis",
    "DIAG5",
    "HYP5",
    "RHO",
    "ROOTS",
    "HermGram",
    "Isometry",
    "LatVec",
    "inner",
]
