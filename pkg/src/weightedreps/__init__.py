"""Exact q-series engine for weighted representation counts by squares,
triangular numbers and generalized polygonal numbers."""

from .errors import (
    InputTooLarge,
    KOutOfRange,
    NonIntegralExponent,
    NonIntegralQuotient,
    ParamsOutOfRange,
    ZeroDivisor,
)
from .report import IdentityReport
from .series import Series
from .theta import ThetaParams

__version__ = "0.1.0"

__all__ = [
    "IdentityReport",
    "InputTooLarge",
    "KOutOfRange",
    "NonIntegralExponent",
    "NonIntegralQuotient",
    "ParamsOutOfRange",
    "Series",
    "ThetaParams",
    "ZeroDivisor",
]
