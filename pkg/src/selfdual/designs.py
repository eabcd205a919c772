"""t-designs: parameter arithmetic, extraction from codes and verification.

Blocks are stored as int bitmasks over the v points, sorted lexicographically
(coordinate 0 most significant, as in the text format).
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import comb, perm
from typing import Iterable

import numpy as np

from . import gf2
from .config import LIMITS
from .gf2 import LinearCode, lex_key, vec_to_str
from .polyalg import WeightEnum, macwilliams

__all__ = [
    "DesignParams",
    "Design",
    "DesignCheck",
    "lambda_vector",
    "block_lambda",
    "design_from_codewords",
    "verify_t_design",
    "incidence_matrix",
    "code_of_design",
    "AssmusMattson",
    "assmus_mattson",
    "assmus_mattson_enum",
    "shadow_divisibility",
    "parse_design",
    "format_design",
]


@dataclass(frozen=True)
class DesignParams:
    t: int
    v: int
    k: int
    lam: Fraction
    lambdas: tuple[Fraction, ...]

    @property
    def integral(self) -> bool:
        return all(x.denominator == 1 and x >= 0 for x in self.lambdas)

    def non_integral(self) -> list[int]:
        return [i for i, x in enumerate(self.lambdas) if x.denominator != 1]

    def __str__(self) -> str:
        vals = ", ".join(str(x) for x in self.lambdas)
        flag = "integral" if self.integral else f"non-integral at i = {self.non_integral()}"
        return f"{self.t}-({self.v}, {self.k}, {self.lam}): lambda_0..lambda_{self.t} = ({vals}) [{flag}]"


def _check_order(t: int, v: int, k: int) -> None:
    if not 0 <= t <= k <= v:
        raise ValueError(f"need 0 <= t <= k <= v, got t={t}, k={k}, v={v}")


def lambda_vector(t: int, v: int, k: int, lam) -> DesignParams:
    """lambda_i = lambda * C(v-i, t-i) / C(k-i, t-i) for i = 0..t."""
    _check_order(t, v, k)
    lam = Fraction(lam)
    if lam < 1:
        raise ValueError("lambda must be at least 1")
    vals = tuple(lam * comb(v - i, t - i) / comb(k - i, t - i) for i in range(t + 1))
    return DesignParams(t, v, k, lam, vals)


def block_lambda(b, v: int, k: int, t: int) -> Fraction:
    """lambda_t of a t-design with b blocks of size k on v points: b C(k,t) / C(v,t)."""
    _check_order(t, v, k)
    return Fraction(b) * comb(k, t) / comb(v, t)


@dataclass(frozen=True)
class Design:
    v: int
    blocks: tuple[int, ...]

    def __post_init__(self):
        blocks = sorted(set(self.blocks), key=lambda b: lex_key(b, self.v))
        if len(blocks) != len(self.blocks):
            raise ValueError("blocks must be distinct")
        sizes = {b.bit_count() for b in blocks}
        if len(sizes) > 1:
            raise ValueError(f"blocks have different sizes {sorted(sizes)}")
        if any(b >> self.v for b in blocks):
            raise ValueError("block outside the point set")
        object.__setattr__(self, "blocks", tuple(blocks))

    @property
    def b(self) -> int:
        return len(self.blocks)

    @property
    def k(self) -> int:
        return self.blocks[0].bit_count() if self.blocks else 0

    @classmethod
    def from_subsets(cls, v: int, subsets: Iterable[Iterable[int]]) -> "Design":
        return cls(v, tuple(sum(1 << x for x in s) for s in subsets))


def design_from_codewords(code: LinearCode, w: int, limit: int | None = None) -> Design:
    """Supports of all weight-w codewords."""
    gf2._check_limit(code.k, limit)
    en = gf2._Enumerator(code.rows, code.n)
    blocks = []
    for hi, weights in en.blocks():
        blocks.extend(en.vector(hi, i) for i in np.flatnonzero(weights == w))
    if not blocks:
        raise ValueError(f"the code has no codewords of weight {w}")
    return Design(code.n, tuple(blocks))


@dataclass
class DesignCheck:
    t: int
    mode: str
    checked: int
    lam: int | None
    certificate: tuple[tuple[int, ...], int, tuple[int, ...], int] | None = None
    seed: int | None = None

    @property
    def ok(self) -> bool:
        return self.certificate is None

    def describe(self) -> str:
        if self.ok:
            how = "all" if self.mode == "exact" else f"{self.checked} sampled (seed {self.seed})"
            return f"t={self.t}: lambda = {self.lam} on {how} {self.t}-subsets"
        a, ca, b, cb = self.certificate
        fa = "{" + ",".join(str(x + 1) for x in a) + "}"
        fb = "{" + ",".join(str(x + 1) for x in b) + "}"
        return f"t={self.t}: not a design: {fa} lies in {ca} blocks, {fb} in {cb}"


def _count_in(blocks: list[int], subset: tuple[int, ...]) -> int:
    m = sum(1 << x for x in subset)
    return sum(1 for b in blocks if b & m == m)


def verify_t_design(design: Design, t: int, mode: str = "exact", samples: int = 1000,
                    seed: int | None = None, bound: int | None = None) -> DesignCheck:
    """Check that every t-subset lies in the same number of blocks.

    ``exact`` visits all C(v, t) subsets (refused above ``bound``); ``sample``
    checks ``samples`` uniformly drawn subsets and needs an explicit seed.
    """
    v = design.v
    if not 0 <= t <= v:
        raise ValueError(f"t = {t} outside 0..{v}")
    blocks = list(design.blocks)
    if mode == "exact":
        bound = LIMITS.design_exact_bound if bound is None else bound
        total = comb(v, t)
        if total > bound:
            raise ValueError(f"C({v}, {t}) = {total} exceeds the exact bound {bound}; use sample mode")
        if comb(design.k, t) * len(blocks) <= 4 * bound:
            counts: Counter = Counter()
            for b in blocks:
                counts.update(combinations(gf2.support(b), t))
            count = lambda s: counts.get(s, 0)  # noqa: E731
        else:
            count = lambda s: _count_in(blocks, s)  # noqa: E731
        first = tuple(range(t))
        lam = count(first)
        for s in combinations(range(v), t):
            c = count(s)
            if c != lam:
                return DesignCheck(t, mode, total, None, (first, lam, s, c))
        return DesignCheck(t, mode, total, lam)
    if mode == "sample":
        if seed is None:
            raise ValueError("sample mode needs an explicit seed")
        rng = random.Random(seed)
        first = tuple(sorted(rng.sample(range(v), t)))
        lam = _count_in(blocks, first)
        for _ in range(samples - 1):
            s = tuple(sorted(rng.sample(range(v), t)))
            c = _count_in(blocks, s)
            if c != lam:
                return DesignCheck(t, mode, samples, None, (first, lam, s, c), seed)
        return DesignCheck(t, mode, samples, lam, seed=seed)
    raise ValueError(f"unknown mode {mode!r}; use 'exact' or 'sample'")


def incidence_matrix(design: Design) -> np.ndarray:
    out = np.zeros((design.b, design.v), dtype=np.uint8)
    for i, b in enumerate(design.blocks):
        out[i, gf2.support(b)] = 1
    return out


def code_of_design(design: Design) -> LinearCode:
    return LinearCode(design.v, design.blocks)


# -- Assmus-Mattson -----------------------------------------------------------------------


@dataclass
class AssmusMattson:
    n: int
    t: int
    d: int | None
    d_dual: int | None
    s: int
    applicable: bool
    code_weights: list[int] = field(default_factory=list)
    dual_weights: list[int] = field(default_factory=list)
    reason: str = ""

    def describe(self) -> str:
        head = f"t={self.t}: d={self.d}, dual d={self.d_dual}, s={self.s}"
        if not self.applicable:
            return f"{head}; not applicable ({self.reason})"
        return (f"{head} <= d - t = {self.d - self.t}; {self.t}-designs in the code at weights "
                f"{self.code_weights} and in the dual at weights {self.dual_weights}")


def assmus_mattson_enum(w: WeightEnum, w_dual: WeightEnum, t: int) -> AssmusMattson:
    """Applicability from the two weight distributions.

    s counts the nonzero dual coefficients at weights 1..n-t.
    """
    n = w.n
    if w_dual.n != n:
        raise ValueError("length mismatch between code and dual enumerators")
    d, dd = w.min_weight(), w_dual.min_weight()
    s = sum(1 for i in range(1, n - t + 1) if w_dual[i])
    if t < 1:
        return AssmusMattson(n, t, d, dd, s, False, reason="t must be positive")
    if d is None or t >= d:
        return AssmusMattson(n, t, d, dd, s, False, reason=f"t = {t} is not below d = {d}")
    if s > d - t:
        return AssmusMattson(n, t, d, dd, s, False, reason=f"s = {s} > d - t = {d - t}")
    cw = [i for i in range(d, n + 1) if w[i]]
    dw = [i for i in range(dd or n + 1, n - t + 1) if w_dual[i]]
    return AssmusMattson(n, t, d, dd, s, True, cw, dw)


def assmus_mattson(code: LinearCode, t: int, limit: int | None = None) -> AssmusMattson:
    w = gf2.weight_distribution(code, limit)
    return assmus_mattson_enum(w, macwilliams(w, code.k), t)


# -- divisibility of shadow designs ---------------------------------------------------------


@dataclass
class DivisibilityReport:
    v: int
    t: int
    rows: dict[int, tuple[Fraction, ...]]

    @property
    def failures(self) -> list[tuple[int, int]]:
        return [(k, i) for k, vals in self.rows.items() for i, x in enumerate(vals)
                if x.denominator != 1 or x < 0]

    @property
    def ok(self) -> bool:
        return not self.failures

    def describe(self) -> str:
        lines = [f"divisibility for v={self.v}, t={self.t}: "
                 f"{'all integral' if self.ok else f'{len(self.failures)} failure(s)'}"]
        for k, vals in self.rows.items():
            lines.append(f"  k={k}: " + " ".join(str(x) for x in vals))
        return "\n".join(lines)


def shadow_divisibility(ws: WeightEnum, v: int, t: int) -> DivisibilityReport:
    """lambda_i = B_k k!/(k-i)! (v-i)!/v! for every nonzero B_k and i <= t."""
    rows = {}
    for k, b in ws.nonzero().items():
        if k > v:
            raise ValueError(f"weight {k} exceeds v = {v}")
        rows[k] = tuple(b * perm(k, i) / perm(v, i) for i in range(t + 1))
    return DivisibilityReport(v, t, rows)


# -- text format ------------------------------------------------------------------------------


def parse_design(text: str) -> Design:
    lines = gf2._content_lines(text)
    if not lines:
        raise ValueError("empty design file")
    head = lines[0].split()
    if len(head) != 3:
        raise ValueError("design header must be 'v b k'")
    v, b, k = (int(x) for x in head)
    body = lines[1:]
    if len(body) != b:
        raise ValueError(f"header announces {b} blocks, found {len(body)}")
    blocks = []
    for line in body:
        if len(line) != v:
            raise ValueError(f"block line of length {len(line)}, expected {v}")
        vec = gf2.vec_from_str(line)
        if vec.bit_count() != k:
            raise ValueError(f"block {line} does not have size {k}")
        blocks.append(vec)
    return Design(v, tuple(blocks))


def format_design(design: Design) -> str:
    lines = [f"{design.v} {design.b} {design.k}"]
    lines += [vec_to_str(b, design.v) for b in design.blocks]
    return "\n".join(lines) + "\n"
