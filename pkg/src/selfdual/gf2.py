"""Linear algebra over GF(2) and elementary operations on binary linear codes.

Vectors are plain Python ints: bit ``i`` holds coordinate ``i`` (0-indexed).
A :class:`LinearCode` stores its generator matrix in reduced row-echelon form
where each pivot is the *leftmost* (lowest-index) coordinate of its row and
rows are sorted by pivot.  That form is unique, so dataclass equality is code
equality.

Codeword enumeration is vectorised with numpy (rows packed into uint64
words); everything else is exact integer bit arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator, Sequence

import numpy as np

from .config import LIMITS

__all__ = [
    "BitVector",
    "LinearCode",
    "EnumerationLimitError",
    "ZeroCodeError",
    "rref",
    "dual",
    "weight_distribution",
    "min_distance",
    "distance_below",
    "doubly_even_subcode",
    "intersect",
    "code_sum",
    "direct_sum",
    "puncture",
    "shorten",
    "contains",
    "reduce_mod",
    "is_self_orthogonal",
    "is_self_dual",
    "is_even",
    "is_doubly_even",
    "subcode_kernel",
    "weight",
    "dot",
    "lex_key",
    "vec_from_str",
    "vec_to_str",
    "parse_code",
    "format_code",
    "read_code",
    "write_code",
]


class EnumerationLimitError(ValueError):
    """Raised when exhaustive enumeration would exceed the configured dimension."""


class ZeroCodeError(ValueError):
    """Raised for quantities that are undefined on the zero code."""


# -- vectors -----------------------------------------------------------------


def weight(v: int) -> int:
    return v.bit_count()


def dot(u: int, v: int) -> int:
    return (u & v).bit_count() & 1


def lowest_bit(v: int) -> int:
    return (v & -v).bit_length() - 1


def vec_from_str(s: str) -> int:
    s = s.strip()
    if any(ch not in "01" for ch in s):
        raise ValueError(f"vector must consist of 0/1 characters: {s!r}")
    v = 0
    for i, ch in enumerate(s):
        if ch == "1":
            v |= 1 << i
    return v


def vec_to_str(v: int, n: int) -> str:
    return "".join("1" if v >> i & 1 else "0" for i in range(n))


def lex_key(v: int, n: int) -> str:
    """Sort key giving the lexicographic order of the 0/1 strings."""
    return vec_to_str(v, n)


def support(v: int) -> list[int]:
    out = []
    while v:
        low = v & -v
        out.append(low.bit_length() - 1)
        v ^= low
    return out


@dataclass(frozen=True)
class BitVector:
    length: int
    bits: int = 0

    def __post_init__(self):
        if self.length < 0:
            raise ValueError("length must be nonnegative")
        if self.bits >> self.length:
            raise ValueError("bits set beyond the vector length")

    @classmethod
    def from_str(cls, s: str) -> "BitVector":
        s = s.strip()
        return cls(len(s), vec_from_str(s))

    @classmethod
    def from_support(cls, length: int, positions: Iterable[int]) -> "BitVector":
        v = 0
        for p in positions:
            if not 0 <= p < length:
                raise ValueError(f"position {p} out of range")
            v |= 1 << p
        return cls(length, v)

    @property
    def weight(self) -> int:
        return self.bits.bit_count()

    def support(self) -> list[int]:
        return support(self.bits)

    def __str__(self) -> str:
        return vec_to_str(self.bits, self.length)

    def __int__(self) -> int:
        return self.bits


def _as_int(v: int | BitVector, n: int) -> int:
    if isinstance(v, BitVector):
        if v.length != n:
            raise ValueError(f"vector length {v.length} does not match code length {n}")
        return v.bits
    if v < 0 or v >> n:
        raise ValueError("vector does not fit the code length")
    return v


# -- row reduction -------------------------------------------------------------


def _rref_ints(rows: Iterable[int]) -> tuple[int, ...]:
    basis: dict[int, int] = {}
    for r in rows:
        for q, b in basis.items():
            if r >> q & 1:
                r ^= b
        if not r:
            continue
        q = lowest_bit(r)
        for key, b in basis.items():
            if b >> q & 1:
                basis[key] = b ^ r
        basis[q] = r
    return tuple(basis[q] for q in sorted(basis))


def rref(matrix: Sequence[Sequence[int]]) -> tuple[list[list[int]], int]:
    """Reduced row-echelon form over GF(2) of a 0/1 matrix.

    Returns the nonzero rows of the reduced matrix (pivots strictly increasing
    left to right) together with the rank.
    """
    rows = [list(r) for r in matrix]
    if not rows:
        return [], 0
    n = len(rows[0])
    packed = []
    for r in rows:
        if len(r) != n:
            raise ValueError("ragged matrix")
        v = 0
        for i, x in enumerate(r):
            if x not in (0, 1):
                raise ValueError("entries must be 0 or 1")
            if x:
                v |= 1 << i
        packed.append(v)
    red = _rref_ints(packed)
    return [[r >> i & 1 for i in range(n)] for r in red], len(red)


def reduce_mod(v: int, rows: Sequence[int]) -> int:
    """Reduce ``v`` by canonical rows; the result is the lexicographically
    smallest element of the coset ``v + span(rows)``."""
    for r in rows:
        if v >> lowest_bit(r) & 1:
            v ^= r
    return v


def _left_kernel(images: Sequence[int]) -> list[int]:
    """Masks ``m`` (bit ``i`` selects ``images[i]``) spanning {m : XOR images[m] = 0}."""
    k = len(images)
    pivots: dict[int, tuple[int, int]] = {}
    kernel = []
    for i, img in enumerate(images):
        mask = 1 << i
        for q, (pv, pm) in pivots.items():
            if img >> q & 1:
                img ^= pv
                mask ^= pm
        if img:
            q = lowest_bit(img)
            for key, (pv, pm) in list(pivots.items()):
                if pv >> q & 1:
                    pivots[key] = (pv ^ img, pm ^ mask)
            pivots[q] = (img, mask)
        else:
            kernel.append(mask)
    assert len(kernel) + len(pivots) == k
    return kernel


def _combine(rows: Sequence[int], mask: int) -> int:
    v = 0
    i = 0
    while mask:
        if mask & 1:
            v ^= rows[i]
        mask >>= 1
        i += 1
    return v


# -- codes ---------------------------------------------------------------------


@dataclass(frozen=True)
class LinearCode:
    """A binary linear code of length ``n`` held by its canonical generator rows."""

    n: int
    rows: tuple[int, ...] = field(default=())

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("length must be nonnegative")
        for r in self.rows:
            if r < 0 or r >> self.n:
                raise ValueError("generator row does not fit the code length")
        object.__setattr__(self, "rows", _rref_ints(self.rows))

    @classmethod
    def from_strings(cls, rows: Sequence[str], n: int | None = None) -> "LinearCode":
        rows = [r.strip() for r in rows]
        if n is None:
            if not rows:
                raise ValueError("length needed for an empty generator list")
            n = len(rows[0])
        if any(len(r) != n for r in rows):
            raise ValueError("all rows must have length n")
        return cls(n, tuple(vec_from_str(r) for r in rows))

    @classmethod
    def from_matrix(cls, matrix) -> "LinearCode":
        m = np.asarray(matrix, dtype=np.int64) % 2
        if m.ndim != 2:
            raise ValueError("generator matrix must be two-dimensional")
        rows = []
        for r in m:
            v = 0
            for i in np.flatnonzero(r):
                v |= 1 << int(i)
            rows.append(v)
        return cls(int(m.shape[1]), tuple(rows))

    @classmethod
    def full_space(cls, n: int) -> "LinearCode":
        return cls(n, tuple(1 << i for i in range(n)))

    @property
    def k(self) -> int:
        return len(self.rows)

    @property
    def pivots(self) -> tuple[int, ...]:
        return tuple(lowest_bit(r) for r in self.rows)

    def matrix(self) -> np.ndarray:
        out = np.zeros((self.k, self.n), dtype=np.uint8)
        for i, r in enumerate(self.rows):
            for j in support(r):
                out[i, j] = 1
        return out

    def row_strings(self) -> list[str]:
        return [vec_to_str(r, self.n) for r in self.rows]

    def __contains__(self, v) -> bool:
        return contains(self, v)

    def codewords(self) -> Iterator[int]:
        """All 2^k codewords in Gray-code order (small codes only)."""
        v = 0
        yield v
        for g in range(1, 1 << self.k):
            v ^= self.rows[lowest_bit(g)]
            yield v

    def __str__(self) -> str:
        return format_code(self)


def contains(code: LinearCode, v: int | BitVector) -> bool:
    return reduce_mod(_as_int(v, code.n), code.rows) == 0


def dual(code: LinearCode) -> LinearCode:
    piv = code.pivots
    pivset = set(piv)
    out = []
    for j in range(code.n):
        if j in pivset:
            continue
        v = 1 << j
        for p, r in zip(piv, code.rows):
            if r >> j & 1:
                v |= 1 << p
        out.append(v)
    return LinearCode(code.n, tuple(out))


def _check_len(a: LinearCode, b: LinearCode) -> None:
    if a.n != b.n:
        raise ValueError(f"length mismatch: {a.n} != {b.n}")


def code_sum(a: LinearCode, b: LinearCode) -> LinearCode:
    _check_len(a, b)
    return LinearCode(a.n, a.rows + b.rows)


def intersect(a: LinearCode, b: LinearCode) -> LinearCode:
    _check_len(a, b)
    return dual(code_sum(dual(a), dual(b)))


def direct_sum(*codes: LinearCode) -> LinearCode:
    rows = []
    shift = 0
    for c in codes:
        rows.extend(r << shift for r in c.rows)
        shift += c.n
    return LinearCode(shift, tuple(rows))


def _check_positions(n: int, positions: Iterable[int]) -> list[int]:
    pos = list(positions)
    if len(set(pos)) != len(pos):
        raise ValueError("positions must be distinct")
    for p in pos:
        if not 0 <= p < n:
            raise ValueError(f"position {p} out of range for length {n}")
    return sorted(pos)


def _delete_coords(v: int, positions: Sequence[int]) -> int:
    # positions sorted ascending
    for p in reversed(positions):
        low = v & ((1 << p) - 1)
        v = ((v >> (p + 1)) << p) | low
    return v


def puncture(code: LinearCode, positions: Iterable[int]) -> LinearCode:
    pos = _check_positions(code.n, positions)
    return LinearCode(code.n - len(pos), tuple(_delete_coords(r, pos) for r in code.rows))


def subcode_kernel(code: LinearCode, images: Sequence[int]) -> LinearCode:
    """Subcode of codewords annihilated by a linear map given on the basis rows.

    ``images[i]`` is the image (as a bit vector in any target space) of
    ``code.rows[i]``.
    """
    if len(images) != code.k:
        raise ValueError("one image per generator row required")
    masks = _left_kernel(images)
    return LinearCode(code.n, tuple(_combine(code.rows, m) for m in masks))


def shorten(code: LinearCode, positions: Iterable[int]) -> LinearCode:
    pos = _check_positions(code.n, positions)
    sel = 0
    for p in pos:
        sel |= 1 << p
    sub = subcode_kernel(code, [r & sel for r in code.rows])
    return puncture(sub, pos)


def is_self_orthogonal(code: LinearCode) -> bool:
    rows = code.rows
    for i, r in enumerate(rows):
        if r.bit_count() & 1:
            return False
        for s in rows[i + 1:]:
            if dot(r, s):
                return False
    return True


def is_self_dual(code: LinearCode) -> bool:
    return 2 * code.k == code.n and is_self_orthogonal(code)


def is_even(code: LinearCode) -> bool:
    return all(r.bit_count() % 2 == 0 for r in code.rows)


def is_doubly_even(code: LinearCode) -> bool:
    rows = code.rows
    if any(r.bit_count() % 4 for r in rows):
        return False
    return all(not dot(r, s) for i, r in enumerate(rows) for s in rows[i + 1:])


def doubly_even_subcode(code: LinearCode) -> LinearCode:
    """Codewords of weight divisible by 4.

    On a self-orthogonal code ``c -> wt(c)/2 mod 2`` is linear, so the result
    is the kernel of one functional: the whole code or an index-2 subcode.
    """
    if not is_self_dual(code):
        raise ValueError("doubly-even subcode requires a self-dual code")
    return subcode_kernel(code, [(r.bit_count() // 2) & 1 for r in code.rows])


# -- enumeration ---------------------------------------------------------------

_LOW_ROWS = 16


def _words(v: int, nwords: int) -> list[int]:
    return [(v >> (64 * i)) & 0xFFFFFFFFFFFFFFFF for i in range(nwords)]


class _Enumerator:
    """Enumerates ``offset + span(rows)`` in numpy blocks.

    Rows are split into a low table (materialised, up to 2^16 entries) and
    high rows walked in Gray-code order.
    """

    def __init__(self, rows: Sequence[int], n: int, offset: int = 0):
        self.n = n
        self.rows = list(rows)
        self.offset = offset
        self.nwords = max(1, (n + 63) // 64)
        nlow = min(len(self.rows), _LOW_ROWS)
        self.low = self.rows[:nlow]
        self.high = self.rows[nlow:]
        table = np.zeros((1, self.nwords), dtype=np.uint64)
        table[0] = _words(offset, self.nwords)
        for r in self.low:
            rw = np.array(_words(r, self.nwords), dtype=np.uint64)
            table = np.concatenate([table, table ^ rw])
        self.table = table
        self.high_words = [np.array(_words(r, self.nwords), dtype=np.uint64) for r in self.high]

    def blocks(self) -> Iterator[tuple[int, np.ndarray]]:
        """Yield (high combination as int, weights of the block)."""
        cur_int = 0
        cur = np.zeros(self.nwords, dtype=np.uint64)
        for g in range(1 << len(self.high)):
            if g:
                b = lowest_bit(g)
                cur_int ^= self.high[b]
                cur ^= self.high_words[b]
            block = self.table ^ cur if g else self.table
            weights = np.bitwise_count(block).sum(axis=1, dtype=np.int64)
            yield cur_int, weights

    def vector(self, high_int: int, index: int) -> int:
        return self.offset ^ high_int ^ _combine(self.low, int(index))


def _check_limit(k: int, limit: int | None) -> None:
    limit = LIMITS.enumeration_dim if limit is None else limit
    if k > limit:
        raise EnumerationLimitError(
            f"dimension {k} exceeds the enumeration limit {limit}"
        )


def enumerate_weights(rows: Sequence[int], n: int, offset: int = 0,
                      limit: int | None = None) -> list[int]:
    """Weight counts (index 0..n) of ``offset + span(rows)``; rows independent."""
    _check_limit(len(rows), limit)
    counts = np.zeros(n + 1, dtype=np.int64)
    for _, w in _Enumerator(rows, n, offset).blocks():
        counts += np.bincount(w, minlength=n + 1)
    return [int(x) for x in counts]


def min_weight_vectors(rows: Sequence[int], n: int, offset: int = 0,
                       limit: int | None = None, max_count: int | None = None,
                       skip_zero: bool = True) -> tuple[int | None, list[int]]:
    """Smallest weight in ``offset + span(rows)`` and the vectors attaining it.

    Witnesses come back in lexicographic order, truncated to ``max_count``.
    """
    _check_limit(len(rows), limit)
    en = _Enumerator(rows, n, offset)
    best = None
    found: list[int] = []
    for hi, w in en.blocks():
        if skip_zero:
            w = np.where(w == 0, n + 1, w)
        m = int(w.min())
        if m > n:
            continue
        if best is None or m < best:
            best, found = m, []
        if m == best:
            found.extend(en.vector(hi, i) for i in np.flatnonzero(w == m))
    found.sort(key=lambda v: lex_key(v, n))
    if max_count is not None:
        found = found[:max_count]
    return best, found


def weight_distribution(code: LinearCode, limit: int | None = None):
    """Exact weight enumerator of ``code`` by exhaustive enumeration."""
    from .polyalg import WeightEnum

    return WeightEnum.from_ints(code.n, enumerate_weights(code.rows, code.n, limit=limit))


# -- minimum distance -----------------------------------------------------------


def _exhaustive_below(code: LinearCode, w: int) -> int | None:
    en = _Enumerator(code.rows, code.n)
    for hi, weights in en.blocks():
        hit = np.flatnonzero((weights > 0) & (weights < w))
        if hit.size:
            return en.vector(hi, hit[0])
    return None


def _information_matrices(code: LinearCode) -> list[tuple[list[int], int]]:
    """Generator matrices systematic on disjoint information sets.

    Returns (rows, r) pairs where r counts the pivots taken from columns not
    used by earlier matrices.
    """
    n, k = code.n, code.k
    used: set[int] = set()
    mats = []
    while True:
        work = list(code.rows)
        pivoted = [False] * k
        fresh = 0
        order = [c for c in range(n) if c not in used] + sorted(used)
        new_cols = []
        for c in order:
            if all(pivoted):
                break
            sel = next((i for i in range(k) if not pivoted[i] and work[i] >> c & 1), None)
            if sel is None:
                continue
            for i in range(k):
                if i != sel and work[i] >> c & 1:
                    work[i] ^= work[sel]
            pivoted[sel] = True
            if c not in used:
                fresh += 1
                new_cols.append(c)
        if fresh == 0:
            break
        mats.append((work, fresh))
        used.update(new_cols)
        if len(used) >= n:
            break
    return mats


def _bz_search(code: LinearCode, threshold: int | None) -> tuple[int, int | None]:
    """Brouwer-Zimmermann enumeration.

    With ``threshold`` set, stops at the first codeword of weight below it or
    once the lower bound certifies that none exists.  Returns (best weight,
    witness); for a certified threshold search the witness is None.
    """
    k = code.k
    mats = _information_matrices(code)
    best = code.n + 1
    witness = None
    for w in range(1, k + 1):
        for rows, _ in mats:
            for combo in combinations(rows, w):
                v = 0
                for r in combo:
                    v ^= r
                wt = v.bit_count()
                if 0 < wt < best:
                    best, witness = wt, v
                    if threshold is not None and best < threshold:
                        return best, witness
        lower = sum(max(0, w + 1 - (k - r)) for _, r in mats)
        if threshold is not None and lower >= threshold:
            return best, None
        if best <= lower:
            return best, witness
    return best, witness


def min_distance(code: LinearCode, limit: int | None = None) -> int:
    """Exact minimum distance; exhaustive up to the limit, Brouwer-Zimmermann above."""
    if code.k == 0:
        raise ZeroCodeError("minimum distance of the zero code is undefined")
    lim = LIMITS.enumeration_dim if limit is None else limit
    if code.k <= lim:
        best, _ = min_weight_vectors(code.rows, code.n, limit=lim, max_count=1)
        return best
    best, _ = _bz_search(code, None)
    return best


def distance_below(code: LinearCode, w: int, limit: int | None = None) -> int | None:
    """A nonzero codeword of weight < ``w``, or None when provably there is none."""
    if code.k == 0:
        raise ZeroCodeError("zero code has no nonzero codewords")
    lim = LIMITS.enumeration_dim if limit is None else limit
    if code.k <= lim:
        return _exhaustive_below(code, w)
    best, witness = _bz_search(code, w)
    return witness if best < w else None


# -- text format -----------------------------------------------------------------


def _content_lines(text: str) -> list[str]:
    out = []
    for line in text.splitlines():
        s = line.strip()
        if not s or s.startswith("#"):
            continue
        out.append(s)
    return out


def parse_code(text: str) -> LinearCode:
    """Parse ``n k`` followed by k rows of n characters from {0,1}."""
    lines = _content_lines(text)
    if not lines:
        raise ValueError("empty code file")
    head = lines[0].split()
    if len(head) != 2 or not all(h.isdigit() for h in head):
        raise ValueError(f"bad header line {lines[0]!r}; expected 'n k'")
    n, k = int(head[0]), int(head[1])
    body = lines[1:]
    if len(body) != k:
        raise ValueError(f"expected {k} generator rows, found {len(body)}")
    for r in body:
        if len(r) != n:
            raise ValueError(f"row {r!r} does not have length {n}")
    code = LinearCode.from_strings(body, n)
    if code.k != k:
        raise ValueError(f"generator rows are dependent: rank {code.k} < {k}")
    return code


def format_code(code: LinearCode) -> str:
    lines = [f"{code.n} {code.k}"] + code.row_strings()
    return "\n".join(lines) + "\n"


def read_code(path) -> LinearCode:
    with open(path) as fh:
        return parse_code(fh.read())


def write_code(code: LinearCode, path) -> None:
    with open(path, "w") as fh:
        fh.write(format_code(code))


def parse_vector(text: str, n: int | None = None) -> BitVector:
    lines = _content_lines(text)
    if len(lines) != 1:
        raise ValueError("vector file must hold exactly one line")
    v = BitVector.from_str(lines[0])
    if n is not None and v.length != n:
        raise ValueError(f"vector length {v.length} != {n}")
    return v
