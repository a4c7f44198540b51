"""Coxeter polynomials of tensor products of linearly oriented type A path algebras."""
from .core import (CYDimension, Weights, algebra_coxeter_poly, chi_cyclo, chi_factored,
                   chi_poly, cy_dimension, determinant_sign)
from .exactpoly import CycloExponents, FactoredRational, IntPoly, cyclotomic, expand
from .recovery import MultiplicityTable, RecoveredWeights, canonical_multiset, multiplicities, recover

__all__ = [
    "CYDimension", "CycloExponents", "FactoredRational", "IntPoly", "MultiplicityTable",
    "RecoveredWeights", "Weights", "algebra_coxeter_poly", "canonical_multiset", "chi_cyclo",
    "chi_factored", "chi_poly", "cy_dimension", "cyclotomic", "determinant_sign", "expand",
    "multiplicities", "recover",
]
