"""Coordinate permutations acting on codes.

A permutation is stored 0-indexed as the tuple of images, ``images[i] =
sigma(i)``.  Acting on a vector moves the entry at coordinate i to
coordinate sigma(i), and ``s * t`` applies s first, so ``(v s) t = v (s t)``.
Cycle notation in text is 1-indexed with fixed points omitted.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass, field
from math import gcd, lcm
from typing import Iterable, Sequence

from . import gf2
from .gf2 import LinearCode
from .polyalg import WeightEnum, congruent_mod

__all__ = [
    "Permutation",
    "AutType",
    "CycleLayout",
    "TypeVerdict",
    "aut_type",
    "parse_type",
    "check_type_allowed",
    "is_automorphism",
    "apply_code",
    "fixed_code",
    "project",
    "lift",
    "even_part",
    "maschke_verify",
    "congruence_check",
    "congruence_check_enum",
    "sylow_bound",
    "free_module_obstruction",
    "exclusion_pipeline",
]


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    f = 2
    while f * f <= n:
        if n % f == 0:
            return False
        f += 1
    return True


def _factor(n: int) -> list[int]:
    out, f = [], 2
    while f * f <= n:
        while n % f == 0:
            out.append(f)
            n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


# -- permutations ----------------------------------------------------------------


@dataclass(frozen=True)
class Permutation:
    images: tuple[int, ...]

    def __post_init__(self):
        imgs = tuple(int(x) for x in self.images)
        if sorted(imgs) != list(range(len(imgs))):
            raise ValueError("images do not form a permutation of 0..n-1")
        object.__setattr__(self, "images", imgs)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(n)))

    @classmethod
    def from_cycles(cls, text: str | Sequence[Sequence[int]], n: int) -> "Permutation":
        """Build from 1-indexed disjoint cycles, as text "(1,2,3)(4,5)" or lists."""
        cycles = _parse_cycles(text) if isinstance(text, str) else [list(c) for c in text]
        images = list(range(n))
        seen: set[int] = set()
        for cyc in cycles:
            for x in cyc:
                if not 1 <= x <= n:
                    raise ValueError(f"point {x} outside 1..{n}")
                if x in seen:
                    raise ValueError(f"point {x} appears twice; cycles must be disjoint")
                seen.add(x)
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                images[a - 1] = b - 1
        return cls(tuple(images))

    @classmethod
    def from_function(cls, n: int, f) -> "Permutation":
        return cls(tuple(f(i) for i in range(n)))

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if other.n != self.n:
            raise ValueError("degree mismatch")
        return Permutation(tuple(other.images[x] for x in self.images))

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, x in enumerate(self.images):
            inv[x] = i
        return Permutation(tuple(inv))

    def __pow__(self, e: int) -> "Permutation":
        base = self if e >= 0 else self.inverse()
        e = abs(e)
        out = Permutation.identity(self.n)
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, each starting at its smallest point, sorted by it."""
        seen = [False] * self.n
        out = []
        for i in range(self.n):
            if seen[i]:
                continue
            cyc = []
            j = i
            while not seen[j]:
                seen[j] = True
                cyc.append(j)
                j = self.images[j]
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def fixed_points(self) -> list[int]:
        return [i for i, x in enumerate(self.images) if i == x]

    def cycle_lengths(self) -> Counter:
        c = Counter(len(x) for x in self.cycles())
        f = len(self.fixed_points())
        if f:
            c[1] = f
        return c

    @property
    def order(self) -> int:
        return lcm(1, *(len(c) for c in self.cycles()))

    def apply(self, v: int) -> int:
        out = 0
        while v:
            low = v & -v
            out |= 1 << self.images[low.bit_length() - 1]
            v ^= low
        return out

    def __str__(self) -> str:
        cyc = self.cycles()
        if not cyc:
            return "()"
        return "".join("(" + ",".join(str(x + 1) for x in c) + ")" for c in cyc)


def _parse_cycles(text: str) -> list[list[int]]:
    text = text.strip()
    if text in ("", "()", "id", "1"):
        return []
    if not re.fullmatch(r"(\(\s*\d+(\s*,\s*\d+)*\s*\)\s*)+", text):
        raise ValueError(f"cannot parse cycle notation {text!r}")
    return [[int(x) for x in grp.split(",")] for grp in re.findall(r"\(([^)]*)\)", text)]


# -- cycle types -------------------------------------------------------------------------


@dataclass(frozen=True)
class AutType:
    """Cycle-structure classification.

    ``kind`` is one of ``identity``, ``prime``, ``composite``, ``mixed``,
    ``generic``.  For prime/composite, ``order``-(c; f) with all moved points
    in cycles of length ``order``.  For mixed, p*r-(s1, s2, s3; f) counts
    cycles of length p, r and p*r.  Generic keeps the raw cycle type.
    """

    kind: str
    n: int
    order: int
    c: int = 0
    f: int = 0
    primes: tuple[int, ...] = ()
    s: tuple[int, ...] = ()
    lengths: tuple[tuple[int, int], ...] = ()

    def __str__(self) -> str:
        if self.kind in ("identity", "prime", "composite"):
            return f"{self.order}-({self.c};{self.f})"
        if self.kind == "mixed":
            p, r = self.primes
            return f"{p}·{r}-({','.join(map(str, self.s))};{self.f})"
        body = " ".join(f"{ln}^{ct}" for ln, ct in self.lengths)
        return f"order {self.order}, cycle type {body}"


def aut_type(sigma: Permutation) -> AutType:
    lengths = sigma.cycle_lengths()
    f = lengths.get(1, 0)
    moved = {ln: ct for ln, ct in lengths.items() if ln > 1}
    order = sigma.order
    raw = tuple(sorted(lengths.items()))
    if not moved:
        return AutType("identity", sigma.n, 1, 0, f, lengths=raw)
    if len(moved) == 1:
        (r, c), = moved.items()
        return AutType("prime" if _is_prime(r) else "composite", sigma.n, r, c, f, lengths=raw)
    fac = _factor(order)
    if len(fac) == 2 and fac[0] != fac[1] and set(moved) <= {fac[0], fac[1], order}:
        p, r = fac
        s = (moved.get(p, 0), moved.get(r, 0), moved.get(order, 0))
        return AutType("mixed", sigma.n, order, f=f, primes=(p, r), s=s, lengths=raw)
    return AutType("generic", sigma.n, order, f=f, lengths=raw)


_TYPE_RE = re.compile(
    r"^\s*(\d+)(?:\s*[·*.x]\s*(\d+))?\s*-\s*\(\s*([\d\s,]+?)\s*;\s*(\d+)\s*\)\s*$")


def parse_type(text: str, n: int | None = None) -> AutType:
    """Parse "p-(c;f)", "r-(c;f)" or "p·r-(s1,s2,s3;f)" (also "p*r")."""
    m = _TYPE_RE.match(text)
    if not m:
        raise ValueError(f"cannot parse automorphism type {text!r}")
    a, b, body, f = m.group(1), m.group(2), m.group(3), int(m.group(4))
    nums = [int(x) for x in body.split(",")]
    if b is None:
        if len(nums) != 1:
            raise ValueError(f"type {text!r} needs exactly one cycle count")
        r, c = int(a), nums[0]
        deg = r * c + f
        if n is not None and deg != n:
            raise ValueError(f"type {text!r} has degree {deg}, expected {n}")
        if r == 1:
            return AutType("identity", deg, 1, 0, deg)
        kind = "prime" if _is_prime(r) else "composite"
        return AutType(kind, deg, r, c, f)
    p, r = sorted((int(a), int(b)))
    if not (_is_prime(p) and _is_prime(r) and p != r):
        raise ValueError("mixed types need two distinct primes")
    if len(nums) != 3:
        raise ValueError(f"type {text!r} needs three cycle counts")
    deg = p * nums[0] + r * nums[1] + p * r * nums[2] + f
    if n is not None and deg != n:
        raise ValueError(f"type {text!r} has degree {deg}, expected {n}")
    if nums[0] == nums[1] == 0:
        # only p*r-cycles: the same element as written by aut_type
        return AutType("composite", deg, p * r, nums[2], f)
    return AutType("mixed", deg, p * r, f=f, primes=(p, r), s=tuple(nums))


@dataclass(frozen=True)
class TypeVerdict:
    type: str
    allowed: bool
    reason: str

    def __str__(self) -> str:
        return f"{self.type}: {'allowed' if self.allowed else 'excluded'} ({self.reason})"


# Admissible cycle structures of automorphisms of a putative [120, 60, 24] code,
# under the hypothesis that involutions act fixed point freely where relevant.
_PRIME_120 = {
    2: {(48, 24), (60, 0)},
    3: {(40, 0)},
    5: {(24, 0)},
    7: {(17, 1)},
    19: {(6, 6)},
    23: {(5, 5)},
}
_ODD_COMPOSITE_120 = {"15-(8;0)", "5·23-(1,0,1;0)"}
_EVEN_COMPOSITE_120 = {"4-(30;0)", "6-(20;0)", "10-(12;0)", "12-(10;0)", "20-(6;0)"}


def check_type_allowed(t: AutType) -> TypeVerdict:
    """Compare a cycle type against the known admissible list at length 120."""
    if t.n != 120:
        raise ValueError(f"admissible types are tabulated for n = 120 only, got n = {t.n}")
    name = str(t)
    if t.kind == "identity":
        return TypeVerdict(name, True, "identity")
    if t.order % 57 == 0:
        return TypeVerdict(name, False, "no elements of order 57: every lifted fixed-code sum has "
                           "minimum distance below 24")
    if t.order % 30 == 0:
        return TypeVerdict(name, False, "no elements of order 30 (hence none of order 60): every "
                           "lifted fixed-code sum has minimum distance below 24")
    if t.kind == "composite" and t.order == 8 and t.f == 0:
        return TypeVerdict(name, False, "fixed point free order 8 would make the code a free "
                           "module over the cyclic group of order 8, but 8 does not divide 60")
    if t.kind == "prime":
        ok = (t.c, t.f) in _PRIME_120.get(t.order, set())
        why = "admissible prime-order cycle structure" if ok else \
            "cycle structure not admissible for this prime order"
        return TypeVerdict(name, ok, why)
    if name in _ODD_COMPOSITE_120:
        return TypeVerdict(name, True, "admissible odd composite cycle structure")
    if name in _EVEN_COMPOSITE_120:
        return TypeVerdict(name, True, "admissible even composite cycle structure "
                           "(fixed point free involutions)")
    return TypeVerdict(name, False, "cycle structure outside the admissible list")


# -- actions on codes ---------------------------------------------------------------------


def _check_degree(code: LinearCode, sigma: Permutation) -> None:
    if sigma.n != code.n:
        raise ValueError(f"permutation degree {sigma.n} != code length {code.n}")


def apply_code(code: LinearCode, sigma: Permutation) -> LinearCode:
    _check_degree(code, sigma)
    return LinearCode(code.n, tuple(sigma.apply(r) for r in code.rows))


def is_automorphism(code: LinearCode, sigma: Permutation) -> bool:
    _check_degree(code, sigma)
    return all(gf2.contains(code, sigma.apply(r)) for r in code.rows)


def _require_aut(code: LinearCode, sigma: Permutation) -> None:
    if not is_automorphism(code, sigma):
        raise ValueError(f"{sigma} is not an automorphism of the code")


def fixed_code(code: LinearCode, sigma: Permutation) -> LinearCode:
    """Codewords fixed by sigma: the kernel of v -> v + v sigma on the code."""
    _require_aut(code, sigma)
    return gf2.subcode_kernel(code, [r ^ sigma.apply(r) for r in code.rows])


@dataclass(frozen=True)
class CycleLayout:
    """Cycles (sorted by smallest point) followed by fixed points, all 0-indexed."""

    n: int
    cycles: tuple[tuple[int, ...], ...]
    fixed: tuple[int, ...]
    masks: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        cycles = tuple(sorted((tuple(c) for c in self.cycles), key=min))
        fixed = tuple(sorted(self.fixed))
        pts = [x for c in cycles for x in c] + list(fixed)
        if sorted(pts) != list(range(self.n)):
            raise ValueError("cycles and fixed points must partition 0..n-1")
        if any(len(c) < 2 for c in cycles):
            raise ValueError("cycles must have length at least 2")
        object.__setattr__(self, "cycles", cycles)
        object.__setattr__(self, "fixed", fixed)
        masks = [sum(1 << x for x in c) for c in cycles] + [1 << x for x in fixed]
        object.__setattr__(self, "masks", tuple(masks))

    @classmethod
    def of(cls, sigma: Permutation) -> "CycleLayout":
        return cls(sigma.n, tuple(sigma.cycles()), tuple(sigma.fixed_points()))

    @classmethod
    def parse(cls, text: str, n: int | None = None) -> "CycleLayout":
        """One cycle per line, 1-indexed, as "(1,2,3)" or "1 2 3".

        An optional first line "n N" fixes the degree; points not listed and
        one-point lines are fixed points.
        """
        cycles: list[list[int]] = []
        for line in gf2._content_lines(text):
            parts = line.split()
            if parts[0] == "n" and len(parts) == 2:
                n = int(parts[1])
                continue
            body = line.strip().strip("()")
            cycles.append([int(x) for x in re.split(r"[,\s]+", body) if x])
        pts = [x for c in cycles for x in c]
        if n is None:
            n = max(pts, default=0)
        if any(not 1 <= x <= n for x in pts) or len(set(pts)) != len(pts):
            raise ValueError("layout points must be distinct and in 1..n")
        moved = [tuple(x - 1 for x in c) for c in cycles if len(c) > 1]
        used = {x for c in moved for x in c}
        return cls(n, tuple(moved), tuple(x for x in range(n) if x not in used))

    def format(self) -> str:
        lines = [f"n {self.n}"]
        lines += ["(" + ",".join(str(x + 1) for x in c) + ")" for c in self.cycles]
        return "\n".join(lines) + "\n"

    @property
    def c(self) -> int:
        return len(self.cycles)

    @property
    def f(self) -> int:
        return len(self.fixed)

    @property
    def reps(self) -> tuple[int, ...]:
        """Projection coordinates: smallest point of each cycle, then fixed points."""
        return tuple(min(c) for c in self.cycles) + self.fixed

    def is_cycle_constant(self, v: int) -> bool:
        return all((v & m) in (0, m) for m in self.masks)


def project(code: LinearCode, layout: CycleLayout) -> LinearCode:
    """One coordinate per cycle (then per fixed point) of a cycle-constant code."""
    if code.n != layout.n:
        raise ValueError("layout degree does not match code length")
    reps = layout.reps
    rows = []
    for r in code.rows:
        if not layout.is_cycle_constant(r):
            raise ValueError("code is not constant on the cycles of the layout")
        rows.append(sum(1 << j for j, x in enumerate(reps) if r >> x & 1))
    return LinearCode(layout.c + layout.f, tuple(rows))


def lift(code: LinearCode, layout: CycleLayout) -> LinearCode:
    """Inverse of :func:`project`: spread each coordinate over its cycle."""
    if code.n != layout.c + layout.f:
        raise ValueError(f"code length {code.n} != c + f = {layout.c + layout.f}")
    rows = []
    for r in code.rows:
        rows.append(sum(m for j, m in enumerate(layout.masks) if r >> j & 1))
    return LinearCode(layout.n, tuple(rows))


def even_part(code: LinearCode, sigma: Permutation) -> LinearCode:
    """Codewords of even weight on every cycle and zero on the fixed points."""
    _require_aut(code, sigma)
    layout = CycleLayout.of(sigma)
    images = []
    for r in code.rows:
        images.append(sum(1 << j for j, m in enumerate(layout.masks) if (r & m).bit_count() & 1))
    return gf2.subcode_kernel(code, images)


def _odd_prime_order(sigma: Permutation) -> int:
    p = sigma.order
    if p % 2 == 0:
        raise ValueError(f"order {p} is even; the decomposition needs odd prime order")
    if not _is_prime(p):
        raise ValueError(f"order {p} is not prime")
    return p


@dataclass
class MaschkeReport:
    p: int
    c: int
    f: int
    dim_code: int
    dim_fixed: int
    dim_even: int
    expected_even: int
    trivial_intersection: bool
    spans_code: bool

    @property
    def ok(self) -> bool:
        return (self.trivial_intersection and self.spans_code
                and self.dim_even == self.expected_even)

    def __str__(self) -> str:
        return (f"p={self.p} c={self.c} f={self.f}: dim F = {self.dim_fixed}, dim E = "
                f"{self.dim_even} (expected {self.expected_even}), F & E = 0: "
                f"{self.trivial_intersection}, F + E = C: {self.spans_code} -> "
                f"{'pass' if self.ok else 'FAIL'}")


def maschke_verify(code: LinearCode, sigma: Permutation) -> MaschkeReport:
    p = _odd_prime_order(sigma)
    F = fixed_code(code, sigma)
    E = even_part(code, sigma)
    layout = CycleLayout.of(sigma)
    inter = gf2.intersect(F, E)
    total = gf2.code_sum(F, E)
    return MaschkeReport(p, layout.c, layout.f, code.k, F.k, E.k, (p - 1) * layout.c // 2,
                         inter.k == 0, total == code)


@dataclass
class CongruenceReport:
    p: int
    residues: dict[int, int]
    mismatches: dict[int, tuple[int, int]]

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def __str__(self) -> str:
        if self.ok:
            return f"all coefficients congruent mod {self.p}"
        bad = ", ".join(f"A_{i}: {a} vs {b}" for i, (a, b) in sorted(self.mismatches.items()))
        return f"mod {self.p} mismatches: {bad}"


def congruence_check(code: LinearCode, sigma: Permutation, p: int,
                     limit: int | None = None) -> CongruenceReport:
    """Compare the code's weight distribution with its fixed code's, modulo p."""
    if sigma.order != p or not _is_prime(p):
        raise ValueError(f"sigma must have prime order {p}, has order {sigma.order}")
    W = gf2.weight_distribution(code, limit)
    WF = gf2.weight_distribution(fixed_code(code, sigma), limit)
    res = {i: int(a) % p for i, a in W.nonzero().items()}
    bad = {i: (int(W[i]) % p, int(WF[i]) % p) for i in range(code.n + 1)
           if (W[i] - WF[i]) % p}
    assert (not bad) == congruent_mod(W, WF, p)
    return CongruenceReport(p, res, bad)


def congruence_check_enum(w: WeightEnum, p: int,
                          residues: dict[int, int] | None = None) -> CongruenceReport:
    """Residues A_i mod p of an enumerator, checked against expected fixed-code residues."""
    if not w.is_integral():
        raise ValueError("congruences need integral coefficients")
    res = {i: int(a) % p for i, a in w.nonzero().items()}
    bad = {}
    for i, r in (residues or {}).items():
        got = int(w[i]) % p
        if got != r % p:
            bad[i] = (got, r % p)
    return CongruenceReport(p, res, bad)


def sylow_bound(n: int, p: int) -> int:
    """Largest r with p^r dividing n."""
    if not _is_prime(p):
        raise ValueError(f"{p} is not prime")
    if n <= 0:
        raise ValueError("n must be positive")
    r = 0
    while n % p == 0:
        n //= p
        r += 1
    return r


def free_module_obstruction(order: int, dim: int) -> bool:
    """True when a free module over a group of this order cannot have this dimension."""
    if order <= 0 or dim <= 0:
        raise ValueError("order and dimension must be positive")
    return dim % order != 0


# -- lift-and-sum exclusion ------------------------------------------------------------------


@dataclass
class PairResult:
    d_index: int
    e_index: int
    dim: int
    witness: int | None

    @property
    def excluded(self) -> bool:
        return self.witness is not None


@dataclass
class PipelineReport:
    n: int
    threshold: int
    pairs: list[PairResult]

    @property
    def vacuous(self) -> bool:
        return not self.pairs

    @property
    def excluded(self) -> bool:
        return all(p.excluded for p in self.pairs)

    @property
    def verdict(self) -> str:
        if self.vacuous:
            return "excluded (vacuous: no candidate pairs)"
        return "excluded" if self.excluded else "not excluded"

    def describe(self) -> str:
        lines = [f"lift-and-sum at n={self.n}, threshold {self.threshold}: {self.verdict}"]
        for p in self.pairs:
            w = "none" if p.witness is None else \
                f"{gf2.vec_to_str(p.witness, self.n)} (weight {gf2.weight(p.witness)})"
            lines.append(f"  D[{p.d_index}] + E[{p.e_index}]: dim {p.dim}, witness {w}")
        return "\n".join(lines)


def exclusion_pipeline(layout_p: CycleLayout, candidates_d: Iterable[LinearCode],
                       layout_q: CycleLayout, candidates_e: Iterable[LinearCode],
                       threshold: int, limit: int | None = None) -> PipelineReport:
    """Lift every (D, E) pair, add them and look for a word of weight below threshold."""
    if layout_p.n != layout_q.n:
        raise ValueError(f"layouts have different degrees {layout_p.n} and {layout_q.n}")
    ds, es = list(candidates_d), list(candidates_e)
    for D in ds:
        if D.n != layout_p.c + layout_p.f:
            raise ValueError(f"candidate D of length {D.n} does not fit layout (c+f = "
                             f"{layout_p.c + layout_p.f})")
    for E in es:
        if E.n != layout_q.c + layout_q.f:
            raise ValueError(f"candidate E of length {E.n} does not fit layout (c+f = "
                             f"{layout_q.c + layout_q.f})")
    lifted_e = [lift(E, layout_q) for E in es]
    pairs = []
    for i, D in enumerate(ds):
        LD = lift(D, layout_p)
        for j, LE in enumerate(lifted_e):
            S = gf2.code_sum(LD, LE)
            wit = gf2.distance_below(S, threshold, limit) if S.k else None
            pairs.append(PairResult(i, j, S.k, wit))
    return PipelineReport(layout_p.n, threshold, pairs)


def commuting(a: Permutation, b: Permutation) -> bool:
    return a * b == b * a


def power_layouts(sigma: Permutation, p: int, q: int) -> tuple[CycleLayout, CycleLayout]:
    """Layouts of sigma^(ord/p) and sigma^(ord/q) for an element of order divisible by p*q."""
    o = sigma.order
    if o % p or o % q or gcd(p, q) != 1:
        raise ValueError(f"order {o} is not divisible by coprime {p} and {q}")
    return CycleLayout.of(sigma ** (o // p)), CycleLayout.of(sigma ** (o // q))
