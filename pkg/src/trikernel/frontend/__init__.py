"""Text frontend: expression parser, canonical printer hooks, sessions, CLI."""

from .cli import main
from .parser import (
    elaborate,
    parse_expression,
    parse_graded_gens,
    parse_point,
    parse_poly,
    parse_poly_list,
    tokenize,
)
from .session import Session, parse_ring_descriptor

__all__ = [
    "tokenize",
    "parse_expression",
    "elaborate",
    "parse_poly",
    "parse_poly_list",
    "parse_graded_gens",
    "parse_point",
    "parse_ring_descriptor",
    "Session",
    "main",
]
