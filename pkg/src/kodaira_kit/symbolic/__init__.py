"""Exact scalars, Laurent polynomials and rational functions."""

from .laurent import LaurentPoly
from .parser import parse_rational
from .rational import RationalFunc, formal_partial, normalize, substitute, univariate_parts
from .scalars import ExactScalar, GaussRat, format_scalar, to_scalar

__all__ = [
    "ExactScalar",
    "GaussRat",
    "LaurentPoly",
    "RationalFunc",
    "format_scalar",
    "formal_partial",
    "normalize",
    "parse_rational",
    "substitute",
    "to_scalar",
    "univariate_parts",
]
