"""Exact weight-enumerator algebra.

Enumerators are dehomogenised at x = 1 and held as coefficient vectors
A_0..A_n of exact rationals.  Two invariant-ring bases are supported:

``even``
    g1^(n/2-4j) * g2^j with g1 = 1 + y^2 and g2 = y^2 (1 - y^2)^2.
``doubly_even``
    p8^(n/8-3j) * p24^j with p8 = 1 + 14y^4 + y^8 (the e8 enumerator) and
    p24 = y^4 (1 - y^4)^4.

In both bases element j starts at y^(2j) resp. y^(4j), so prescribing the
lowest coefficients of a code gives a triangular system for the a_j.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Mapping, Sequence

__all__ = [
    "WeightEnum",
    "GleasonCoeffs",
    "ShadowCheck",
    "gleason_basis",
    "shadow_basis",
    "gleason_expand",
    "solve_gleason",
    "shadow_enum",
    "check_shadow_constraints",
    "restrict_residue",
    "combine_cosets",
    "congruent_mod",
    "macwilliams",
    "poly_mul",
    "poly_pow",
]

BASES = ("even", "doubly_even")


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floating point coefficients are not accepted")
    if isinstance(x, str):
        return Fraction(x.strip())
    return Fraction(x)


def _fmt_frac(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class WeightEnum:
    """Coefficient vector of W(y) = sum A_i y^i, i = 0..n."""

    n: int
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        cs = tuple(_frac(c) for c in self.coeffs)
        if len(cs) != self.n + 1:
            raise ValueError(f"expected {self.n + 1} coefficients, got {len(cs)}")
        object.__setattr__(self, "coeffs", cs)

    @classmethod
    def from_ints(cls, n: int, values: Sequence[int]) -> "WeightEnum":
        return cls(n, tuple(values))

    @classmethod
    def from_dict(cls, n: int, values: Mapping[int, object]) -> "WeightEnum":
        cs = [Fraction(0)] * (n + 1)
        for i, v in values.items():
            i = int(i)
            if not 0 <= i <= n:
                raise ValueError(f"index {i} outside 0..{n}")
            cs[i] = _frac(v)
        return cls(n, tuple(cs))

    @classmethod
    def zero(cls, n: int) -> "WeightEnum":
        return cls(n, (0,) * (n + 1))

    def __getitem__(self, i: int) -> Fraction:
        if not 0 <= i <= self.n:
            raise IndexError(i)
        return self.coeffs[i]

    def get(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i <= self.n else Fraction(0)

    def nonzero(self) -> dict[int, Fraction]:
        return {i: c for i, c in enumerate(self.coeffs) if c}

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def is_nonnegative(self) -> bool:
        return all(c >= 0 for c in self.coeffs)

    def total(self) -> Fraction:
        return sum(self.coeffs, Fraction(0))

    def min_weight(self) -> int | None:
        """Smallest positive index with a nonzero coefficient."""
        for i in range(1, self.n + 1):
            if self.coeffs[i]:
                return i
        return None

    def as_ints(self) -> dict[int, int]:
        if not self.is_integral():
            raise ValueError("enumerator has non-integral coefficients")
        return {i: int(c) for i, c in self.nonzero().items()}

    def __add__(self, other: "WeightEnum") -> "WeightEnum":
        if self.n != other.n:
            raise ValueError("length mismatch")
        return WeightEnum(self.n, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def scale(self, factor) -> "WeightEnum":
        f = _frac(factor)
        return WeightEnum(self.n, tuple(c * f for c in self.coeffs))

    def to_json_obj(self) -> dict:
        return {"n": self.n, "coeffs": {str(i): _fmt_frac(c) for i, c in self.nonzero().items()}}

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), indent=1)

    @classmethod
    def from_json_obj(cls, obj: Mapping) -> "WeightEnum":
        try:
            n = int(obj["n"])
            raw = obj["coeffs"]
        except (KeyError, TypeError) as exc:
            raise ValueError("enumerator JSON needs 'n' and 'coeffs'") from exc
        for v in raw.values():
            if not isinstance(v, str):
                raise ValueError("coefficients must be decimal strings")
        return cls.from_dict(n, raw)

    @classmethod
    def from_json(cls, text: str) -> "WeightEnum":
        return cls.from_json_obj(json.loads(text))

    def __str__(self) -> str:
        terms = []
        for i, c in self.nonzero().items():
            cs = _fmt_frac(c)
            if i == 0:
                terms.append(cs)
            else:
                mono = "y" if i == 1 else f"y^{i}"
                terms.append(mono if c == 1 else f"{cs}{mono}")
        return " + ".join(terms).replace("+ -", "- ") if terms else "0"


# -- polynomial helpers -----------------------------------------------------------


def poly_mul(a: Sequence, b: Sequence) -> list:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if not x:
            continue
        for j, y in enumerate(b):
            if y:
                out[i + j] += x * y
    return out


def poly_pow(a: Sequence, e: int) -> list:
    result = [1]
    base = list(a)
    while e:
        if e & 1:
            result = poly_mul(result, base)
        e >>= 1
        if e:
            base = poly_mul(base, base)
    return result


G1 = (1, 0, 1)
G2 = (0, 0, 1, 0, -2, 0, 1)
P8 = (1, 0, 0, 0, 14, 0, 0, 0, 1)
P24 = tuple(poly_mul((0, 0, 0, 0, 1), poly_pow((1, 0, 0, 0, -1), 4)))


def _check_basis(n: int, basis: str) -> int:
    if basis not in BASES:
        raise ValueError(f"unknown basis {basis!r}; expected one of {BASES}")
    if n < 0 or n % 2:
        raise ValueError(f"length {n} must be even and nonnegative")
    if basis == "doubly_even":
        if n % 8:
            raise ValueError(f"doubly-even basis needs 8 | n, got n = {n}")
        return n // 24
    return n // 8


def _step(basis: str) -> int:
    return 2 if basis == "even" else 4


@lru_cache(maxsize=None)
def gleason_basis(n: int, basis: str) -> tuple[tuple[int, ...], ...]:
    """Basis polynomials (padded to length n+1) for the given invariant ring."""
    m = _check_basis(n, basis)
    out = []
    for j in range(m + 1):
        if basis == "even":
            p = poly_mul(poly_pow(G1, n // 2 - 4 * j), poly_pow(G2, j))
        else:
            p = poly_mul(poly_pow(P8, n // 8 - 3 * j), poly_pow(P24, j))
        p = list(p) + [0] * (n + 1 - len(p))
        out.append(tuple(p[: n + 1]))
    return tuple(out)


@lru_cache(maxsize=None)
def shadow_basis(n: int) -> tuple[tuple[Fraction, ...], ...]:
    """Shadow images of the even basis: (-1)^j 2^(n/2-6j) y^(n/2-4j) (1-y^4)^(2j)."""
    m = _check_basis(n, "even")
    h = n // 2
    out = []
    for j in range(m + 1):
        e = h - 6 * j
        scale = Fraction(2) ** e * (-1) ** j
        p = [0] * (h - 4 * j) + poly_pow((1, 0, 0, 0, -1), 2 * j)
        p = p + [0] * (n + 1 - len(p))
        out.append(tuple(scale * c for c in p[: n + 1]))
    return tuple(out)


# -- Gleason coefficients ----------------------------------------------------------


@dataclass(frozen=True)
class GleasonCoeffs:
    """Coordinates a_0..a_m of an enumerator in a Gleason basis; None marks a free entry."""

    basis: str
    n: int
    a: tuple[Fraction | None, ...]

    def __post_init__(self):
        m = _check_basis(self.n, self.basis)
        if len(self.a) != m + 1:
            raise ValueError(f"basis {self.basis} at n = {self.n} has {m + 1} coefficients")
        object.__setattr__(self, "a", tuple(None if x is None else _frac(x) for x in self.a))

    @property
    def free(self) -> list[int]:
        return [j for j, x in enumerate(self.a) if x is None]

    def is_complete(self) -> bool:
        return not self.free

    def bind(self, values: Mapping[int, object]) -> "GleasonCoeffs":
        a = list(self.a)
        for j, v in values.items():
            if a[j] is not None and a[j] != _frac(v):
                raise ValueError(f"a_{j} already set to {a[j]}")
            a[j] = _frac(v)
        return GleasonCoeffs(self.basis, self.n, tuple(a))

    def __str__(self) -> str:
        parts = [f"a_{j} = {'unset' if x is None else _fmt_frac(x)}" for j, x in enumerate(self.a)]
        return f"{self.basis} n={self.n}: " + ", ".join(parts)


def gleason_expand(gc: GleasonCoeffs) -> WeightEnum:
    if gc.free:
        raise ValueError(f"coefficients {gc.free} are unset")
    B = gleason_basis(gc.n, gc.basis)
    out = [Fraction(0)] * (gc.n + 1)
    for aj, p in zip(gc.a, B):
        if aj:
            for i, c in enumerate(p):
                if c:
                    out[i] += aj * c
    return WeightEnum(gc.n, tuple(out))


def _constraint_items(constraints) -> list[tuple[int, Fraction]]:
    if isinstance(constraints, Mapping):
        items = list(constraints.items())
    elif isinstance(constraints, WeightEnum):
        items = list(enumerate(constraints.coeffs))
    else:
        items = list(constraints)
    return [(int(i), _frac(v)) for i, v in items]


def solve_gleason(n: int, basis: str, constraints) -> GleasonCoeffs:
    """Gleason coordinates matching prescribed coefficients A_i.

    ``constraints`` is a mapping or iterable of (i, A_i), or a full
    :class:`WeightEnum`.  The system is solved by exact elimination; with the
    low-index constraints this is forward substitution.  Coordinates left
    undetermined are returned as None, provided the determined ones do not
    depend on them.
    """
    m = _check_basis(n, basis)
    B = gleason_basis(n, basis)
    rows = []
    for i, v in _constraint_items(constraints):
        if not 0 <= i <= n:
            raise ValueError(f"constraint index {i} outside 0..{n}")
        rows.append([Fraction(B[j][i]) for j in range(m + 1)] + [v])
    pivots: list[tuple[int, int]] = []  # (row, column)
    r = 0
    for col in range(m + 1):
        sel = next((i for i in range(r, len(rows)) if rows[i][col]), None)
        if sel is None:
            continue
        rows[r], rows[sel] = rows[sel], rows[r]
        pv = rows[r][col]
        rows[r] = [x / pv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col]:
                f = rows[i][col]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append((r, col))
        r += 1
    for row in rows[r:]:
        if row[-1]:
            raise ValueError("inconsistent constraints: no enumerator in the basis matches them")
    pivot_cols = {c for _, c in pivots}
    free = [c for c in range(m + 1) if c not in pivot_cols]
    a: list[Fraction | None] = [None] * (m + 1)
    for row_i, col in pivots:
        row = rows[row_i]
        tied = [c for c in free if row[c]]
        if tied:
            raise ValueError(
                f"a_{col} is not determined: it depends on free coefficients {tied}"
            )
        a[col] = row[-1]
    return GleasonCoeffs(basis, n, tuple(a))


def shadow_enum(gc: GleasonCoeffs) -> WeightEnum:
    """Shadow enumerator of a Type I code from its even-basis coordinates."""
    if gc.basis != "even":
        raise ValueError("shadow formula applies to the even basis")
    if gc.free:
        raise ValueError(f"coefficients {gc.free} are unset")
    S = shadow_basis(gc.n)
    out = [Fraction(0)] * (gc.n + 1)
    for aj, p in zip(gc.a, S):
        if aj:
            for i, c in enumerate(p):
                if c:
                    out[i] += aj * c
    return WeightEnum(gc.n, tuple(out))


# -- shadow constraints --------------------------------------------------------------


@dataclass
class ShadowCheck:
    n: int
    d: int
    violations: list[tuple[str, int, str]]

    @property
    def ok(self) -> bool:
        return not self.violations

    def __str__(self) -> str:
        if self.ok:
            return f"shadow constraints (n={self.n}, d={self.d}): all pass"
        lines = [f"shadow constraints (n={self.n}, d={self.d}): {len(self.violations)} violation(s)"]
        lines += [f"  [{rule}] B_{i}: {msg}" for rule, i, msg in self.violations]
        return "\n".join(lines)


def check_shadow_constraints(ws: WeightEnum, n: int, d: int) -> ShadowCheck:
    """Necessary conditions on a Type I shadow enumerator.

    Rules: ``symmetry`` B_i = B_(n-i); ``residue`` B_i = 0 unless
    i = n/2 mod 4; ``zero`` B_0 = 0; ``low`` B_i <= 1 for i < d/2;
    ``unique`` at most one nonzero B_i for i < (d+4)/2; ``nonnegative``
    every B_i is a nonnegative integer.
    """
    if ws.n != n:
        raise ValueError(f"enumerator length {ws.n} != {n}")
    v = []
    B = ws.coeffs
    for i in range(n + 1):
        if B[i] != B[n - i] and i < n - i:
            v.append(("symmetry", i, f"{_fmt_frac(B[i])} != B_{n - i} = {_fmt_frac(B[n - i])}"))
    for i in range(n + 1):
        if B[i] and (i - n // 2) % 4:
            v.append(("residue", i, f"{_fmt_frac(B[i])} at i not = {n // 2} mod 4"))
    if B[0]:
        v.append(("zero", 0, f"{_fmt_frac(B[0])} != 0"))
    for i in range(n + 1):
        if 2 * i < d and B[i] > 1:
            v.append(("low", i, f"{_fmt_frac(B[i])} > 1 below d/2"))
    low_nz = [i for i in range(n + 1) if 2 * i < d + 4 and B[i]]
    if len(low_nz) > 1:
        v.append(("unique", low_nz[1], f"nonzero entries at {low_nz} below (d+4)/2"))
    for i in range(n + 1):
        if B[i] < 0 or B[i].denominator != 1:
            v.append(("nonnegative", i, f"{_fmt_frac(B[i])} is not a nonnegative integer"))
    return ShadowCheck(n, d, v)


# -- residue splitting and the two-coordinate extension ---------------------------------


def restrict_residue(w: WeightEnum, r: int, mod: int) -> WeightEnum:
    if mod <= 0:
        raise ValueError("modulus must be positive")
    return WeightEnum(w.n, tuple(c if i % mod == r % mod else 0 for i, c in enumerate(w.coeffs)))


def combine_cosets(w0: WeightEnum, w1: WeightEnum, w2: WeightEnum, w3: WeightEnum) -> WeightEnum:
    """W0 + y (W1 + W2) + y^2 W3 as an enumerator of length n + 2."""
    n = w0.n
    if any(w.n != n for w in (w1, w2, w3)):
        raise ValueError("length mismatch among coset enumerators")
    out = [Fraction(0)] * (n + 3)
    for i in range(n + 1):
        out[i] += w0.coeffs[i]
        out[i + 1] += w1.coeffs[i] + w2.coeffs[i]
        out[i + 2] += w3.coeffs[i]
    return WeightEnum(n + 2, tuple(out))


def congruent_mod(w: WeightEnum, w2: WeightEnum, p: int) -> bool:
    """Coefficient-wise congruence of two integral enumerators modulo p."""
    if w.n != w2.n:
        raise ValueError("length mismatch")
    if not (w.is_integral() and w2.is_integral()):
        raise ValueError("congruence needs integral coefficients")
    return all((a - b) % p == 0 for a, b in zip(w.coeffs, w2.coeffs))


def macwilliams(w: WeightEnum, k: int) -> WeightEnum:
    """Dual enumerator: A'_j = 2^-k sum_i A_i K_j(i) with binary Krawtchouk K_j."""
    n = w.n
    out = []
    for j in range(n + 1):
        s = Fraction(0)
        for i, a in enumerate(w.coeffs):
            if a:
                kj = sum((-1) ** h * comb(i, h) * comb(n - i, j - h) for h in range(j + 1))
                s += a * kj
        out.append(s / 2 ** k)
    return WeightEnum(n, tuple(out))


def enumerator_from_json_file(path) -> WeightEnum:
    with open(path) as fh:
        return WeightEnum.from_json(fh.read())


def parse_constraints(spec: str) -> list[tuple[int, Fraction]]:
    """Parse ``"0:1,4:0,20:51359"`` into (index, value) pairs."""
    out = []
    for part in spec.split(","):
        part = part.strip()
        if not part:
            continue
        if ":" not in part:
            raise ValueError(f"constraint {part!r} must look like i:A_i")
        i, v = part.split(":", 1)
        out.append((int(i), _frac(v)))
    return out

