"""Exact-arithmetic verification of transvectant identities, covariants of
binary octavics, ternary-quartic concomitants, and plethysm characters.

The package computes its central constants by independent routes (symbolic
omega calculus, weighted graph enumeration, hypergeometric closed forms)
and asserts exact agreement; all arithmetic is over arbitrary-precision
rationals.
"""

from .poly import Poly, Rational, VarTable

__all__ = ["Poly", "Rational", "VarTable"]
__version__ = "0.1.0"
