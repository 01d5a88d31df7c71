"""Representation theory of finite G-hat-linear monoids over the field with one element."""

from .errors import CapExceeded, FoneRepError, ValidationError
from .fvect import Matrix, PointedGroup, Space, TRIVIAL
from .monoid import GLinearMonoid, null_monoid, path_monoid, symmetric_inverse_monoid

__version__ = "0.1.0"

__all__ = [
    "CapExceeded", "FoneRepError", "ValidationError",
    "Matrix", "PointedGroup", "Space", "TRIVIAL",
    "GLinearMonoid", "null_monoid", "path_monoid", "symmetric_inverse_monoid",
]
