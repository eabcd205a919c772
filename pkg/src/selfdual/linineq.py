"""Exact linear inequality systems over the rationals (Fourier-Motzkin).

Small systems only: a handful of variables, at most a few hundred
constraints.  Every constraint reads ``coeffs . x + const >= 0`` (``> 0``
when strict) and carries a label used in infeasibility certificates.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence


@dataclass(frozen=True)
class Ineq:
    coeffs: tuple[Fraction, ...]
    const: Fraction
    strict: bool = False
    label: str = ""

    def value(self, x: Sequence[Fraction]) -> Fraction:
        return self.const + sum((c * v for c, v in zip(self.coeffs, x)), Fraction(0))


def _normalise(q: Ineq) -> tuple[tuple[Fraction, ...], Fraction, bool] | None:
    nz = [abs(c) for c in q.coeffs if c]
    if not nz:
        return None
    s = nz[0]
    return tuple(c / s for c in q.coeffs), q.const / s, q.strict


def _violated_constant(q: Ineq) -> bool:
    return q.const < 0 or (q.strict and q.const == 0)


def _prune(ineqs: list[Ineq]) -> tuple[list[Ineq], bool]:
    """Drop constant constraints and keep the tightest per direction.

    The flag reports a violated constant constraint (infeasible system).
    """
    best: dict[tuple[Fraction, ...], tuple[Fraction, bool]] = {}
    for q in ineqs:
        norm = _normalise(q)
        if norm is None:
            if _violated_constant(q):
                return [], True
            continue
        d, k, strict = norm
        cur = best.get(d)
        if cur is None or k < cur[0] or (k == cur[0] and strict and not cur[1]):
            best[d] = (k, strict)
    return [Ineq(d, k, s) for d, (k, s) in best.items()], False


def eliminate(ineqs: list[Ineq], var: int) -> list[Ineq]:
    pos, neg, rest = [], [], []
    for q in ineqs:
        c = q.coeffs[var]
        (pos if c > 0 else neg if c < 0 else rest).append(q)
    out = list(rest)
    for p in pos:
        for q in neg:
            a, b = p.coeffs[var], -q.coeffs[var]
            coeffs = tuple(b * x + a * y for x, y in zip(p.coeffs, q.coeffs))
            out.append(Ineq(coeffs, b * p.const + a * q.const, p.strict or q.strict))
    return out


def feasible(ineqs: Sequence[Ineq], nvars: int) -> bool:
    work, bad = _prune(list(ineqs))
    if bad:
        return False
    for v in range(nvars):
        work, bad = _prune(eliminate(work, v))
        if bad:
            return False
    return True


@dataclass(frozen=True)
class Bound:
    """Range of one variable: None means unbounded on that side."""

    lo: Fraction | None
    lo_strict: bool
    hi: Fraction | None
    hi_strict: bool

    @property
    def fixed(self) -> bool:
        return self.lo is not None and self.lo == self.hi and not (self.lo_strict or self.hi_strict)


def bounds(ineqs: Sequence[Ineq], nvars: int, var: int) -> Bound:
    """Projection of the (assumed feasible) system onto one variable."""
    work, bad = _prune(list(ineqs))
    if bad:
        raise ValueError("system is infeasible")
    for v in range(nvars):
        if v != var:
            work, bad = _prune(eliminate(work, v))
            if bad:
                raise ValueError("system is infeasible")
    lo, lo_s, hi, hi_s = None, False, None, False
    for q in work:
        c = q.coeffs[var]
        val = -q.const / c
        if c > 0:
            if lo is None or val > lo or (val == lo and q.strict):
                lo, lo_s = val, q.strict
        elif c < 0:
            if hi is None or val < hi or (val == hi and q.strict):
                hi, hi_s = val, q.strict
    return Bound(lo, lo_s, hi, hi_s)


def supremum(ineqs: Sequence[Ineq], nvars: int, coeffs: Sequence[Fraction],
             const: Fraction) -> tuple[Fraction | None, bool]:
    """Supremum of ``coeffs . x + const`` over the system.

    Returns (value, attained); value None means unbounded above.
    """
    ext = [Ineq(q.coeffs + (Fraction(0),), q.const, q.strict) for q in ineqs]
    # t <= expr
    ext.append(Ineq(tuple(coeffs) + (Fraction(-1),), const))
    b = bounds(ext, nvars + 1, nvars)
    if b.hi is None:
        return None, False
    return b.hi, not b.hi_strict


def irreducible_infeasible_subset(ineqs: Sequence[Ineq], nvars: int) -> list[Ineq]:
    """A minimal infeasible subset, preferring constraints early in the list.

    The shortest infeasible prefix fixes the last member; a deletion filter
    then removes every earlier constraint that is not needed.
    """
    ineqs = list(ineqs)
    if feasible(ineqs, nvars):
        raise ValueError("system is feasible")
    end = next(i for i in range(1, len(ineqs) + 1) if not feasible(ineqs[:i], nvars))
    core = ineqs[:end]
    i = 0
    while i < len(core) - 1:
        trial = core[:i] + core[i + 1:]
        if not feasible(trial, nvars):
            core = trial
        else:
            i += 1
    return core
