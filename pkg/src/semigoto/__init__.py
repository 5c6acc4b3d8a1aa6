"""Goto-rank classification of numerical semigroup rings k[[H]]."""

from .classify import GotoReport, classify, goto_rank, ring_hull
from .errors import SemigroupError
from .ideal import RelativeIdeal, canonical_ideal, colon, length_between, product
from .semigroup import NumericalSemigroup, from_generators

__all__ = [
    "GotoReport",
    "NumericalSemigroup",
    "RelativeIdeal",
    "SemigroupError",
    "canonical_ideal",
    "classify",
    "colon",
    "from_generators",
    "goto_rank",
    "length_between",
    "product",
    "ring_hull",
]
__version__ = "0.1.0"
