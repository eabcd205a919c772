"""Process-wide limits for exhaustive computations."""

from dataclasses import dataclass


@dataclass
class Limits:
    # largest code dimension enumerated codeword by codeword
    enumeration_dim: int = 28
    # largest C(v, t) verified subset by subset in exact design mode
    design_exact_bound: int = 10**6


LIMITS = Limits()
