"""Exact computation of crystals, canonical bases and decomposition matrices
for Ariki-Koike algebras at roots of unity, and of the canonical basic sets
for Hecke algebras of types A, B and D."""

from .combinat import ChargeParams, format_multipartition, parse_multipartition
from .errors import DomainError
from .exactmath import LaurentPolynomial
from .fock import FockVector, OrderKind

__all__ = [
    "ChargeParams",
    "DomainError",
    "FockVector",
    "LaurentPolynomial",
    "OrderKind",
    "format_multipartition",
    "parse_multipartition",
]

__version__ = "0.1.0"
