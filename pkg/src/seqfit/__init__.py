"""Exact polynomial-coefficient recovery from sequences of values.

Builds the difference table of a sequence, detects the generating
polynomial's degree from the constant row, and solves for the coefficients
by back-substitution against Worpitzky number triangles, all in exact
rational arithmetic.
"""

from .difftable import DegreeReport, DifferenceTable, build_table, detect_degree, diagonal_direct
from .numeric import Rational, binomial, format_scalar, parse_scalar
from .oracle import EfdtParams, efdt_sum, vandermonde_fit
from .solver import AffineMap, FitResult, Polynomial, compose_affine, fit, solve_start_one, solve_start_zero
from .triangles import Triangle, TriangleKind, awnt, build_triangle, mwnt, stirling2

__version__ = "0.1.0"

__all__ = [
    "AffineMap",
    "DegreeReport",
    "DifferenceTable",
    "EfdtParams",
    "FitResult",
    "Polynomial",
    "Rational",
    "Triangle",
    "TriangleKind",
    "awnt",
    "binomial",
    "build_table",
    "build_triangle",
    "compose_affine",
    "detect_degree",
    "diagonal_direct",
    "efdt_sum",
    "fit",
    "format_scalar",
    "mwnt",
    "parse_scalar",
    "solve_start_one",
    "solve_start_zero",
    "stirling2",
    "vandermonde_fit",
]
