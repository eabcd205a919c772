"""Case analysis of the shadow of a putative [24m-2, 12m-1, 4m+2] Type I code.

Minimum distance 4m+2 fixes the even-basis coordinates a_0..a_2m; the
remaining a_j are free.  The shadow coefficients are affine in those free
coordinates.  The lowest admissible shadow weights (i = n/2 mod 4 and
i < (d+4)/2) can carry at most one nonzero coefficient, which gives a
finite list of patterns.  Each pattern pins some shadow coefficients,
the rest must be nonnegative, and a small exact Fourier-Motzkin run
decides what survives.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from . import linineq
from .polyalg import (
    GleasonCoeffs,
    WeightEnum,
    check_shadow_constraints,
    gleason_expand,
    shadow_basis,
    shadow_enum,
    solve_gleason,
)

MAX_M = 8


@dataclass(frozen=True)
class Affine:
    """const + sum coeffs[j] * a_j over named Gleason coordinates."""

    const: Fraction
    coeffs: tuple[tuple[int, Fraction], ...] = ()

    def __str__(self) -> str:
        parts = []
        if self.const or not self.coeffs:
            parts.append(_fmt(self.const))
        for j, c in self.coeffs:
            mag = abs(c)
            term = f"a_{j}" if mag == 1 else f"{_fmt(mag)}*a_{j}"
            sign = "-" if c < 0 else "+"
            if not parts:
                parts.append(term if c > 0 else f"-{term}")
            else:
                parts.append(f"{sign} {term}")
        return " ".join(parts)

    def coefficient(self, j: int) -> Fraction:
        return dict(self.coeffs).get(j, Fraction(0))


def _fmt(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


@dataclass
class Witness:
    """A shadow coefficient forced below zero by the other listed constraints."""

    target: str
    given: list[str]
    supremum: Fraction | None
    attained: bool

    def __str__(self) -> str:
        rel = "<=" if self.attained else "<"
        given = ", ".join(self.given) if self.given else "the case pattern"
        return f"{self.target} {rel} {_fmt(self.supremum)} under {given}"


@dataclass
class CaseResult:
    pattern: dict[int, str]
    verdict: str
    tail: dict[int, Fraction | None]
    forms: dict[str, Affine] = field(default_factory=dict)
    conflict: list[str] = field(default_factory=list)
    witness: Witness | None = None
    ranges: dict[int, linineq.Bound] = field(default_factory=dict)
    coeffs: GleasonCoeffs | None = None
    enumerator: WeightEnum | None = None
    shadow: WeightEnum | None = None

    @property
    def consistent(self) -> bool:
        return self.verdict == "consistent"

    def describe(self) -> str:
        pat = ", ".join(f"B_{w} > 0" if v == ">0" else f"B_{w} = {v}"
                        for w, v in sorted(self.pattern.items()))
        lines = [f"case [{pat}]: {self.verdict}"]
        for j in sorted(self.tail, reverse=True):
            val = self.tail[j]
            if val is not None:
                lines.append(f"  a_{j} = {_fmt(val)}")
        for name, form in self.forms.items():
            lines.append(f"  {name} = {form}")
        if self.conflict:
            lines.append("  infeasible: " + ", ".join(self.conflict))
        if self.witness is not None:
            lines.append(f"  witness: {self.witness}")
        for j, b in sorted(self.ranges.items()):
            if not b.fixed:
                lines.append(f"  a_{j} in {_range(b)}")
        if self.shadow is not None:
            lines.append(f"  shadow minimum weight {self.shadow.min_weight()}")
        return "\n".join(lines)


def _range(b: linineq.Bound) -> str:
    lo = "-inf" if b.lo is None else _fmt(b.lo)
    hi = "+inf" if b.hi is None else _fmt(b.hi)
    return f"{'(' if b.lo_strict or b.lo is None else '['}{lo}, {hi}{')' if b.hi_strict or b.hi is None else ']'}"


@dataclass
class CaseReport:
    m: int
    n: int
    d: int
    prefix: GleasonCoeffs
    cases: list[CaseResult]

    @property
    def consistent(self) -> list[CaseResult]:
        return [c for c in self.cases if c.consistent]

    def describe(self) -> str:
        head = [
            f"putative Type I [{self.n}, {self.n // 2}, {self.d}] code (m = {self.m})",
            "determined: " + ", ".join(
                f"a_{j} = {_fmt(a)}" for j, a in enumerate(self.prefix.a) if a is not None),
            "free: " + ", ".join(f"a_{j}" for j in self.prefix.free),
            f"{len(self.cases)} case(s), {len(self.consistent)} consistent",
        ]
        return "\n".join(head + [c.describe() for c in self.cases])


def low_shadow_weights(m: int) -> tuple[list[int], int, int]:
    """Admissible shadow weights below (d+4)/2, plus n and d."""
    n, d = 24 * m - 2, 4 * m + 2
    low = [w for w in range(1, n + 1) if (w - n // 2) % 4 == 0 and 2 * w < d + 4]
    return low, n, d


def _solve_equalities(eqs, nvars):
    """Row-reduce equalities (coeff vector, rhs) exactly.

    Returns (pivot map col -> (row coeffs, rhs), None) or (None, index of the
    first equality that makes the system inconsistent, forced value).
    """
    rows: list[tuple[list[Fraction], Fraction, int]] = []
    for idx, (vec, rhs) in enumerate(eqs):
        vec = list(vec)
        for pv, prhs, pcol in rows:
            if vec[pcol]:
                f = vec[pcol]
                vec = [x - f * y for x, y in zip(vec, pv)]
                rhs -= f * prhs
        col = next((c for c in range(nvars) if vec[c]), None)
        if col is None:
            if rhs:
                return None, (idx, rhs)
            continue
        pv = vec[col]
        vec = [x / pv for x in vec]
        rhs /= pv
        new_rows = []
        for ov, orhs, ocol in rows:
            if ov[col]:
                f = ov[col]
                ov = [x - f * y for x, y in zip(ov, vec)]
                orhs -= f * rhs
            new_rows.append((ov, orhs, ocol))
        rows = new_rows + [(vec, rhs, col)]
    return {col: (vec, rhs) for vec, rhs, col in rows}, None


def resolve_shadow_cases(m: int) -> CaseReport:
    """Enumerate the low-weight shadow patterns and decide each one exactly."""
    if not isinstance(m, int) or not 1 <= m <= MAX_M:
        raise ValueError(f"m must be an integer in 1..{MAX_M}, got {m!r}")
    low, n, d = low_shadow_weights(m)
    cons = [(0, 1)] + [(i, 0) for i in range(2, d, 2)]
    prefix = solve_gleason(n, "even", cons)
    free = prefix.free
    S = shadow_basis(n)
    # B_i = base[i] + sum_k lin[i][k] * a_free[k]
    base = [sum((a * S[j][i] for j, a in enumerate(prefix.a) if a is not None), Fraction(0))
            for i in range(n + 1)]
    lin = [[S[j][i] for j in free] for i in range(n + 1)]

    patterns: list[dict[int, str]] = []
    for w in low:
        pat = {x: "0" for x in low}
        pat[w] = "1" if 2 * w < d else ">0"
        patterns.append(pat)
    patterns.append({x: "0" for x in low})

    cases = [_decide(pat, prefix, free, base, lin, n, d) for pat in patterns]
    return CaseReport(m, n, d, prefix, cases)


def _decide(pattern, prefix, free, base, lin, n, d) -> CaseResult:
    nv = len(free)
    eq_weights = [w for w, v in sorted(pattern.items()) if v != ">0"]
    eqs = [(lin[w], Fraction(int(pattern[w])) - base[w]) for w in eq_weights]
    piv, bad = _solve_equalities(eqs, nv)
    if bad is not None:
        idx, resid = bad
        w = eq_weights[idx]
        forced = Fraction(int(pattern[w])) - resid
        others = [f"B_{x} = {pattern[x]}" for x in eq_weights[:idx]]
        return CaseResult(
            pattern, "contradiction", {j: None for j in free},
            conflict=others + [f"B_{w} = {pattern[w]}"],
            witness=Witness(f"B_{w}", others, forced, True),
        )

    # parametrise: x = x0 + N y over the non-pivot variables y
    rest = [k for k in range(nv) if k not in piv]
    x0 = [Fraction(0)] * nv
    N = [[Fraction(0)] * len(rest) for _ in range(nv)]
    for k, (vec, rhs) in piv.items():
        x0[k] = rhs
        for t, r in enumerate(rest):
            N[k][t] = -vec[r]
    for t, r in enumerate(rest):
        N[r][t] = Fraction(1)

    def form(i):
        c = base[i] + sum((lin[i][k] * x0[k] for k in range(nv)), Fraction(0))
        v = tuple(sum((lin[i][k] * N[k][t] for k in range(nv)), Fraction(0)) for t in range(len(rest)))
        return c, v

    def affine(i) -> Affine:
        c, v = form(i)
        return Affine(c, tuple((free[rest[t]], x) for t, x in enumerate(v) if x))

    tail = {}
    for k, j in enumerate(free):
        tail[j] = x0[k] if not any(N[k]) else None

    ineqs = []
    for w, v in sorted(pattern.items()):
        if v == ">0":
            c, vec = form(w)
            ineqs.append(linineq.Ineq(vec, c, True, f"B_{w} > 0"))
    for i in range(n + 1):
        c, vec = form(i)
        if not any(vec) and c == 0:
            continue
        ineqs.append(linineq.Ineq(vec, c, False, f"B_{i} >= 0"))
        if 2 * i < d:
            ineqs.append(linineq.Ineq(tuple(-x for x in vec), 1 - c, False, f"B_{i} <= 1"))

    nr = len(rest)
    if not linineq.feasible(ineqs, nr):
        core = linineq.irreducible_infeasible_subset(ineqs, nr)
        labels = [q.label for q in core]
        idx = _target_index(core)
        target = core[idx]
        others = core[:idx] + core[idx + 1:]
        sup, attained = linineq.supremum(others, nr, target.coeffs, target.const)
        name = target.label.split()[0]
        forms = {q.label.split()[0]: affine(int(q.label.split()[0][2:])) for q in core}
        return CaseResult(
            pattern, "contradiction", tail, forms=forms, conflict=labels,
            witness=Witness(name, [q.label for q in others], sup, attained),
        )

    ranges = {free[r]: linineq.bounds(ineqs, nr, t) for t, r in enumerate(rest)}
    result = CaseResult(pattern, "consistent", tail, ranges=ranges)
    if all(b.fixed for b in ranges.values()):
        y = [ranges[free[r]].lo for r in rest]
        vals = {j: x0[k] + sum((N[k][t] * y[t] for t in range(nr)), Fraction(0))
                for k, j in enumerate(free)}
        result.tail = vals
        gc = prefix.bind(vals)
        result.coeffs = gc
        result.enumerator = gleason_expand(gc)
        result.shadow = shadow_enum(gc)
        assert check_shadow_constraints(result.shadow, n, d).ok
    return result


def _target_index(core: list[linineq.Ineq]) -> int:
    """The nonnegativity constraint at the largest weight, else the last one."""
    best, best_w = len(core) - 1, -1
    for i, q in enumerate(core):
        if q.label.endswith(">= 0"):
            w = int(q.label.split()[0][2:])
            if w > best_w:
                best, best_w = i, w
    return best
