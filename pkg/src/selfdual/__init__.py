"""Exact computations with binary self-dual codes.

Vectors are Python ints used as bitsets (bit i is coordinate i); all
enumerator arithmetic uses integers and fractions only.
"""

from .autom import AutType, CycleLayout, Permutation, aut_type
from .cases import CaseReport, resolve_shadow_cases
from .config import LIMITS, Limits
from .designs import Design, DesignParams, lambda_vector
from .gf2 import BitVector, LinearCode, dual, min_distance, weight_distribution
from .polyalg import GleasonCoeffs, WeightEnum, gleason_expand, shadow_enum, solve_gleason
from .shadowlab import CosetSplit, coset_split, shadow

__all__ = [
    "AutType",
    "BitVector",
    "CaseReport",
    "CosetSplit",
    "CycleLayout",
    "Design",
    "DesignParams",
    "GleasonCoeffs",
    "LIMITS",
    "Limits",
    "LinearCode",
    "Permutation",
    "WeightEnum",
    "aut_type",
    "coset_split",
    "dual",
    "gleason_expand",
    "lambda_vector",
    "min_distance",
    "resolve_shadow_cases",
    "shadow",
    "shadow_enum",
    "solve_gleason",
    "weight_distribution",
]
