"""Poncelet polygons for the special pencil of conics in PG(2,p).

Polygons are traced directly in the plane and predicted independently from
the integer polynomials P_n and from Cayley's Hankel-determinant criterion.
"""

__version__ = "0.1.0"

from .field import Fp, Fp2, legendre, sqrt, inv
from .projective import ConicMatrix, Collineation, ProjLine, ProjPoint
from .pencil import Pencil, RelationTable, diamond_relation, select_c
from .tracer import Polygon, census, trace, verify_porism
from .algebra import (
    IntPolynomial,
    RationalFunction,
    coefficients_by_iteration,
    coefficients_by_polynomial,
    cyclotomic,
    poncelet_polynomial,
)
from .cayley import CayleySeries, cayley_condition, expand_series

__all__ = [
    "Fp",
    "Fp2",
    "legendre",
    "sqrt",
    "inv",
    "ConicMatrix",
    "Collineation",
    "ProjLine",
    "ProjPoint",
    "Pencil",
    "RelationTable",
    "diamond_relation",
    "select_c",
    "Polygon",
    "census",
    "trace",
    "verify_porism",
    "IntPolynomial",
    "RationalFunction",
    "coefficients_by_iteration",
    "coefficients_by_polynomial",
    "cyclotomic",
    "poncelet_polynomial",
    "CayleySeries",
    "cayley_condition",
    "expand_series",
]
