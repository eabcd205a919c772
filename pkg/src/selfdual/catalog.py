"""Reference codes and automorphisms used as fixtures.

Everything here is built from a construction rule, never pasted as a literal
generator matrix, and every stated property is re-derived by the tests.

Golay coordinates: 0..22 are the elements of F_23 and 23 is the point at
infinity, which doubles as the parity coordinate of the extended code.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable

from .autom import Permutation
from .gf2 import LinearCode, direct_sum

__all__ = [
    "golay24",
    "golay_child",
    "b12",
    "tenfive2",
    "e8",
    "i2",
    "i_n",
    "golay_translation",
    "golay_inversion",
    "golay_order3",
    "golay_cubing",
    "golay_order7",
    "golay_order6",
    "CatalogEntry",
    "CATALOG",
    "get",
]

P = 23
INF = 23
QR = frozenset((x * x) % P for x in range(1, P))
NQR = frozenset(range(1, P)) - QR


def _inv(x: int) -> int:
    return pow(x, P - 2, P)


@lru_cache(maxsize=None)
def golay24() -> LinearCode:
    """Extended quadratic-residue code of length 24.

    Rows are the 23 cyclic shifts of the non-residue indicator, each extended
    by a parity bit at infinity, plus the all-ones word.
    """
    rows = []
    for u in range(P):
        v = sum(1 << ((s + u) % P) for s in NQR)
        if v.bit_count() & 1:
            v |= 1 << INF
        rows.append(v)
    rows.append((1 << 24) - 1)
    return LinearCode(24, tuple(rows))


def _line_map(f: Callable[[int], int]) -> Permutation:
    return Permutation.from_function(24, f)


@lru_cache(maxsize=None)
def golay_translation() -> Permutation:
    """x -> x + 1; a 23-cycle fixing infinity."""
    return _line_map(lambda x: INF if x == INF else (x + 1) % P)


@lru_cache(maxsize=None)
def golay_inversion() -> Permutation:
    """x -> -1/x, swapping 0 and infinity."""
    def g(x):
        if x == INF:
            return 0
        if x == 0:
            return INF
        return (-_inv(x)) % P
    return _line_map(g)


@lru_cache(maxsize=None)
def golay_order3() -> Permutation:
    """x -> 1/(1 - x): order 3, no fixed point since x^2 - x + 1 has no root mod 23."""
    def z(x):
        if x == INF:
            return 0
        if x == 1:
            return INF
        return _inv((1 - x) % P)
    return _line_map(z)


@lru_cache(maxsize=None)
def golay_cubing() -> Permutation:
    """Cube map twisted by 9 on residues and non-residues, fixing 0 and infinity."""
    i9 = _inv(9)

    def d(x):
        if x in (0, INF):
            return x
        c = pow(x, 3, P)
        return (c * i9) % P if x in QR else (9 * c) % P
    return _line_map(d)


@lru_cache(maxsize=None)
def golay_order7() -> Permutation:
    """Translation twice followed by the cubing map; type 7-(3;3)."""
    a = golay_translation()
    return a * a * golay_cubing()


@lru_cache(maxsize=None)
def golay_order6() -> Permutation:
    """Square of translation * inversion * order-3 map; type 6-(4;0)."""
    g = golay_translation() * golay_inversion() * golay_order3()
    return g * g


@lru_cache(maxsize=None)
def golay_child() -> LinearCode:
    """The [22, 11, 6] child of the Golay code on its last two coordinates."""
    from .shadowlab import child
    return child(golay24(), 22, 23)


def b12() -> LinearCode:
    """[I_6 | J_6 - I_6]: self-dual [12, 6, 4], Type I."""
    rows = [(1 << i) | (((1 << 6) - 1) ^ (1 << i)) << 6 for i in range(6)]
    return LinearCode(12, tuple(rows))


def tenfive2() -> LinearCode:
    """[I_5 | I_5]: self-dual [10, 5, 2]."""
    return LinearCode(10, tuple((1 << i) | (1 << (i + 5)) for i in range(5)))


def e8() -> LinearCode:
    """Extended Hamming [8, 4, 4]: parity-extended span of 1101000 and its shifts."""
    rows = []
    for s in range(4):
        v = 0b1011 << s  # 1 + x + x^3 on 7 cyclic coordinates
        if v.bit_count() & 1:
            v |= 1 << 7
        rows.append(v)
    return LinearCode(8, tuple(rows))


def i2() -> LinearCode:
    return LinearCode(2, (0b11,))


def i_n(n: int) -> LinearCode:
    """Direct sum of n/2 copies of i2."""
    if n <= 0 or n % 2:
        raise ValueError("i_n needs a positive even length")
    return direct_sum(*[i2()] * (n // 2))


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    build: Callable[[], LinearCode]
    params: tuple[int, int, int]
    kind: str  # "I" or "II"
    automorphisms: tuple[tuple[str, Callable[[], Permutation], str], ...] = field(default=())

    def code(self) -> LinearCode:
        return self.build()


CATALOG: dict[str, CatalogEntry] = {
    e.name: e for e in [
        CatalogEntry("i2", i2, (2, 1, 2), "I"),
        CatalogEntry("i4", lambda: i_n(4), (4, 2, 2), "I"),
        CatalogEntry("i6", lambda: i_n(6), (6, 3, 2), "I"),
        CatalogEntry("e8", e8, (8, 4, 4), "II"),
        CatalogEntry("tenfive2", tenfive2, (10, 5, 2), "I"),
        CatalogEntry("b12", b12, (12, 6, 4), "I"),
        CatalogEntry("e8e8", lambda: direct_sum(e8(), e8()), (16, 8, 4), "II"),
        CatalogEntry("golay_child", golay_child, (22, 11, 6), "I"),
        CatalogEntry("golay24", golay24, (24, 12, 8), "II", (
            ("translation", golay_translation, "23-(1;1)"),
            ("order3", golay_order3, "3-(8;0)"),
            ("order7", golay_order7, "7-(3;3)"),
            ("order6", golay_order6, "6-(4;0)"),
            ("inversion", golay_inversion, "2-(12;0)"),
        )),
    ]
}


def get(name: str) -> CatalogEntry:
    try:
        return CATALOG[name]
    except KeyError:
        raise KeyError(f"unknown catalog code {name!r}; known: {', '.join(CATALOG)}") from None
