"""Exact arithmetic and decision procedures for Z^n wr Z^m and the groups G_S."""
from .errors import DomainError
from .laurent import LaurentPoly, parse_poly, format_poly
from .wreath import GroupContext, WreathElement, mul, inv, comm

__all__ = ["DomainError", "LaurentPoly", "parse_poly", "format_poly", "GroupContext",
           "WreathElement", "mul", "inv", "comm"]
__version__ = "0.1.0"
