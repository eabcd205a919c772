"""Codeword-level shadows, coset splits, children, parents and neighbors.

For a Type I self-dual code C with doubly-even subcode C0, the dual of C0 is
the union of four cosets of C0: C0 itself, C2 = C \\ C0 and the two shadow
cosets C1, C3 with C1 + C2 = C3.  Cosets are kept as (C0, representative)
pairs; vectors are only materialised under the enumeration limit.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import gf2
from .gf2 import LinearCode, lex_key, reduce_mod, vec_to_str
from .polyalg import WeightEnum, combine_cosets

__all__ = [
    "CosetSplit",
    "ShadowInfo",
    "coset_split",
    "shadow",
    "child",
    "extend_cosets",
    "parent",
    "neighbor",
    "neighbor_t33",
    "are_neighbors",
    "coset_neighbors",
    "format_split",
    "parse_split",
]


def _require_self_dual(code: LinearCode) -> None:
    if not gf2.is_self_dual(code):
        raise ValueError(f"code [{code.n}, {code.k}] is not self-dual")


@dataclass(frozen=True)
class CosetSplit:
    """C0 with lex-minimal representatives of C1, C2, C3 (None when Type II)."""

    code: LinearCode
    c0: LinearCode
    r1: int | None
    r2: int | None
    r3: int | None

    @property
    def degenerate(self) -> bool:
        return self.r2 is None

    @property
    def n(self) -> int:
        return self.code.n

    def reps(self) -> tuple[int, int | None, int | None, int | None]:
        return 0, self.r1, self.r2, self.r3

    def coset_of(self, v: int) -> int | None:
        """Index 0..3 of the coset containing v, or None if v is outside C0-dual."""
        red = reduce_mod(v, self.c0.rows)
        for i, r in enumerate(self.reps()):
            if r is not None and red == r:
                return i
        return None

    def enumerators(self, limit: int | None = None) -> tuple[WeightEnum, ...]:
        if self.degenerate:
            raise ValueError("Type II code: no proper coset split")
        n = self.n
        return tuple(
            WeightEnum.from_ints(n, gf2.enumerate_weights(self.c0.rows, n, r, limit))
            for r in self.reps()
        )


def coset_split(code: LinearCode) -> CosetSplit:
    """Split the dual of the doubly-even subcode into four cosets.

    C1 is the shadow coset whose lexicographically smallest vector is smaller
    than that of the other shadow coset.  For a Type II code the split is
    degenerate: C0 = C and no other cosets.
    """
    _require_self_dual(code)
    c0 = gf2.doubly_even_subcode(code)
    if c0 == code:
        return CosetSplit(code, c0, None, None, None)
    r2 = next(reduce_mod(r, c0.rows) for r in code.rows if not gf2.contains(c0, r))
    outside = next(r for r in gf2.dual(c0).rows if not gf2.contains(code, r))
    a = reduce_mod(outside, c0.rows)
    b = reduce_mod(outside ^ r2, c0.rows)
    if lex_key(b, code.n) < lex_key(a, code.n):
        a, b = b, a
    return CosetSplit(code, c0, a, r2, b)


@dataclass
class ShadowInfo:
    n: int
    enumerator: WeightEnum
    min_weight: int | None
    witnesses: list[int]
    split: CosetSplit
    coset_enumerators: tuple[WeightEnum, ...] | None

    def describe(self) -> str:
        lines = [f"shadow enumerator: {self.enumerator}",
                 f"shadow minimum weight: {self.min_weight}"]
        for w in self.witnesses:
            lines.append(f"  {vec_to_str(w, self.n)}")
        return "\n".join(lines)


def shadow(code: LinearCode, limit: int | None = None, max_witnesses: int = 8) -> ShadowInfo:
    """Shadow enumerator and minimum-weight shadow vectors by enumeration.

    For a Type II code the shadow is the code itself.
    """
    split = coset_split(code)
    n = code.n
    if split.degenerate:
        W = gf2.weight_distribution(code, limit)
        m, wit = gf2.min_weight_vectors(code.rows, n, 0, limit, max_witnesses)
        return ShadowInfo(n, W, m, wit, split, None)
    encs = split.enumerators(limit)
    W = encs[1] + encs[3]
    best, wit = None, []
    for r in (split.r1, split.r3):
        m, vs = gf2.min_weight_vectors(split.c0.rows, n, r, limit, None, skip_zero=False)
        if best is None or m < best:
            best, wit = m, vs
        elif m == best:
            wit = wit + vs
    wit.sort(key=lambda v: lex_key(v, n))
    return ShadowInfo(n, W, best, wit[:max_witnesses], split, encs)


def child(code: LinearCode, i: int, j: int) -> LinearCode:
    """Codewords equal at positions i and j, punctured there (0-indexed)."""
    _require_self_dual(code)
    if i == j:
        raise ValueError("child needs two distinct positions")
    for p in (i, j):
        if not 0 <= p < code.n:
            raise ValueError(f"position {p} out of range for length {code.n}")
    if gf2.distance_below(code, 3) is not None:
        raise ValueError("child needs minimum distance greater than 2")
    sub = gf2.subcode_kernel(code, [((r >> i) ^ (r >> j)) & 1 for r in code.rows])
    return gf2.puncture(sub, (i, j))


def _tagged(split: CosetSplit, tags: dict[int, int]) -> LinearCode:
    """Prefix coset i by the two-bit tag tags[i] (bit 0 = first new coordinate)."""
    n = split.n
    rows = [r << 2 for r in split.c0.rows]
    rows.append(tags[2] | split.r2 << 2)
    rows.append(tags[1] | split.r1 << 2)
    out = LinearCode(n + 2, tuple(rows))
    assert gf2.contains(out, tags[3] | split.r3 << 2)
    return out


def _split_for_extension(code: LinearCode) -> CosetSplit:
    if code.n % 4 != 2:
        raise ValueError(f"length {code.n} is not 2 mod 4")
    split = coset_split(code)
    if split.degenerate:
        raise ValueError("extension needs a Type I code")
    return split


def extend_cosets(code: LinearCode) -> LinearCode:
    """Tag the four cosets as (0,0,C0), (1,0,C2), (0,1,C1), (1,1,C3).

    Coset words of C1 and C2 gain one extra 1, words of C3 two, so the
    enumerator is W0 + y(W1 + W2) + y^2 W3.  The result is formally self-dual
    when W1 = W3 but has odd-weight words, so it is never self-dual.
    """
    split = _split_for_extension(code)
    return _tagged(split, {0: 0, 2: 0b01, 1: 0b10, 3: 0b11})


def extend_cosets_enumerator(code: LinearCode, limit: int | None = None) -> WeightEnum:
    return combine_cosets(*_split_for_extension(code).enumerators(limit))


def parent(code: LinearCode) -> LinearCode:
    """Self-dual extension: tags (0,0,C0), (1,1,C2), (1,0,C1), (0,1,C3).

    Shadow words have odd weight when n = 2 mod 4, so one tag bit makes them
    even; the result is doubly-even exactly when n = 6 mod 8.
    """
    split = _split_for_extension(code)
    out = _tagged(split, {0: 0, 2: 0b11, 1: 0b01, 3: 0b10})
    assert gf2.is_self_dual(out)
    return out


def neighbor(code: LinearCode, u: int) -> LinearCode:
    """<C & u^perp, u> for an even-weight u outside C."""
    _require_self_dual(code)
    u = gf2._as_int(u, code.n)
    if u.bit_count() & 1:
        raise ValueError("u must have even weight")
    if gf2.contains(code, u):
        raise ValueError("u lies in the code; the construction would return the code itself")
    D = gf2.subcode_kernel(code, [gf2.dot(r, u) for r in code.rows])
    return LinearCode(code.n, D.rows + (u,))


def neighbor_t33(code: LinearCode, u) -> LinearCode:
    """Neighbor through a vector of weight divisible by 4.

    Doubly-evenness is inherited when the input code is doubly-even.
    """
    uu = gf2._as_int(u, code.n)
    if uu.bit_count() % 4:
        raise ValueError(f"u has weight {uu.bit_count()}, not divisible by 4")
    N = neighbor(code, uu)
    if gf2.is_doubly_even(code):
        assert gf2.is_doubly_even(N)
    return N


def are_neighbors(a: LinearCode, b: LinearCode) -> bool:
    if a.n != b.n:
        raise ValueError(f"length mismatch: {a.n} != {b.n}")
    _require_self_dual(a)
    _require_self_dual(b)
    return gf2.intersect(a, b).k == a.n // 2 - 1


def coset_neighbors(code: LinearCode) -> tuple[LinearCode, LinearCode]:
    """C0 + C1 and C0 + C3: the two other self-dual codes through C0 (n = 0 mod 4)."""
    if code.n % 4:
        raise ValueError("shadow cosets are self-orthogonal only when 4 | n")
    split = coset_split(code)
    if split.degenerate:
        raise ValueError("needs a Type I code")
    c0 = split.c0.rows
    return (LinearCode(code.n, c0 + (split.r1,)), LinearCode(code.n, c0 + (split.r3,)))


# -- text format -------------------------------------------------------------------------


def format_split(split: CosetSplit) -> str:
    """Four blocks "coset i", then C0 in code-file format, then "rep <vector>"."""
    n = split.n
    out = []
    for i, r in enumerate(split.reps()):
        if r is None:
            continue
        out.append(f"coset {i}")
        out.append(gf2.format_code(split.c0).rstrip("\n"))
        out.append(f"rep {vec_to_str(r, n)}")
    return "\n".join(out) + "\n"


def parse_split(text: str) -> dict[int, tuple[LinearCode, int]]:
    blocks: dict[int, tuple[LinearCode, int]] = {}
    lines = gf2._content_lines(text)
    i = 0
    while i < len(lines):
        head = lines[i].split()
        if len(head) != 2 or head[0] != "coset":
            raise ValueError(f"expected 'coset <i>', got {lines[i]!r}")
        idx = int(head[1])
        n, k = (int(x) for x in lines[i + 1].split())
        body = "\n".join(lines[i + 1:i + 2 + k])
        code = gf2.parse_code(body)
        rep_line = lines[i + 2 + k].split()
        if len(rep_line) != 2 or rep_line[0] != "rep":
            raise ValueError("expected 'rep <vector>' after the generator block")
        rep = gf2.parse_vector(rep_line[1], n)
        blocks[idx] = (code, int(rep))
        i += 3 + k
    return blocks
