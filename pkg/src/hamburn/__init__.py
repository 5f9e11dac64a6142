"""Burning numbers of Hamming graphs: exact floating-variable rounding,
vector-coloring encoding, and brute-force verification at small scale."""

from hamburn.errors import (
    AlgorithmStateError,
    CapacityError,
    DimensionError,
    DomainError,
    HamburnError,
    NotACodewordError,
    UnsupportedError,
)

__version__ = "0.1.0"

__all__ = [
    "AlgorithmStateError",
    "CapacityError",
    "DimensionError",
    "DomainError",
    "HamburnError",
    "NotACodewordError",
    "UnsupportedError",
]
