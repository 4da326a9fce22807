"""Exact classical umbral calculus and symbolic solutions of linear recurrences."""

from .bellpoly import MomentSeq, gf_from_moments, moments_from_gf, partial_bell, partition_poly
from .dsl import parse, to_source
from .series import DEFAULT_ORDER, Poly, Series
from .sheffer import ShefferUmbra, make_sheffer
from .umbra import Umbra, evaluate, special

__all__ = [
    "DEFAULT_ORDER",
    "MomentSeq",
    "Poly",
    "Series",
    "ShefferUmbra",
    "Umbra",
    "evaluate",
    "gf_from_moments",
    "make_sheffer",
    "moments_from_gf",
    "parse",
    "partial_bell",
    "partition_poly",
    "special",
    "to_source",
]
