"""Named enumerator tables computed from first principles.

``eq1``  extremal [120, 60, 24] Type II enumerator.
``t1``   [118, 59, 22] Type I enumerator left by the m = 5 shadow analysis.
``t2``   its shadow enumerator.
``t3``   design divisibility of every shadow weight (v = 118, t = 3).
``t4``   two-coordinate extension enumerator of length 120.
``t5``   [120, 60, 4] doubly-even neighbor with A_4 = 1, A_20 = 51359.

Nothing here reads stored values; reference files are only compared against.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from pathlib import Path

from .cases import resolve_shadow_cases
from .designs import block_lambda, shadow_divisibility
from .polyalg import (
    WeightEnum,
    combine_cosets,
    gleason_expand,
    restrict_residue,
    solve_gleason,
)

TABLE_IDS = ("eq1", "t1", "t2", "t3", "t4", "t5")
# tables whose reference lists only leading terms
PREFIX_ONLY = frozenset({"eq1"})

Cells = dict[str, Fraction]


def extremal_constraints(n: int) -> list[tuple[int, int]]:
    """A_0 = 1 and A_i = 0 for 0 < i < 4 floor(n/24) + 4, i = 0 mod 4."""
    d = 4 * (n // 24) + 4
    return [(0, 1)] + [(i, 0) for i in range(4, d, 4)]


def type1_constraints(n: int, d: int) -> list[tuple[int, int]]:
    return [(0, 1)] + [(i, 0) for i in range(2, d, 2)]


@lru_cache(maxsize=None)
def eq1() -> WeightEnum:
    return gleason_expand(solve_gleason(120, "doubly_even", extremal_constraints(120)))


@lru_cache(maxsize=None)
def _m5_case():
    report = resolve_shadow_cases(5)
    (case,) = report.consistent
    return case


def t1() -> WeightEnum:
    return _m5_case().enumerator


def t2() -> WeightEnum:
    return _m5_case().shadow


def t3():
    return shadow_divisibility(t2(), 118, 3)


@lru_cache(maxsize=None)
def t4() -> WeightEnum:
    w, s = t1(), t2()
    half = s.scale(Fraction(1, 2))
    return combine_cosets(restrict_residue(w, 0, 4), half, restrict_residue(w, 2, 4), half)


@lru_cache(maxsize=None)
def t5() -> WeightEnum:
    cons = [(0, 1), (4, 1), (8, 0), (12, 0), (16, 0), (20, 51359)]
    return gleason_expand(solve_gleason(120, "doubly_even", cons))


def compute(which: str):
    if which not in TABLE_IDS:
        raise ValueError(f"unknown table {which!r}; choose from {', '.join(TABLE_IDS)}")
    return globals()[which]()


def cells(which: str, value=None) -> Cells:
    """Flatten a table to named cells: "A_i" for enumerators, "k=K,i=I" for t3."""
    value = compute(which) if value is None else value
    if which == "t3":
        return {f"k={k},i={i}": x for k, row in value.rows.items() for i, x in enumerate(row)}
    return {f"A_{i}": c for i, c in value.nonzero().items()}


def load_reference(which: str, path) -> Cells:
    obj = json.loads(Path(path).read_text())
    if which == "t3":
        return {f"k={k},i={i}": Fraction(x) for k, row in obj["rows"].items()
                for i, x in enumerate(row)}
    return {f"A_{i}": c for i, c in WeightEnum.from_json_obj(obj).nonzero().items()}


@dataclass(frozen=True)
class CellDiff:
    cell: str
    expected: Fraction
    computed: Fraction

    def __str__(self) -> str:
        return f"{self.cell}: expected {self.expected}, computed {self.computed}"


def _cell_order(name: str):
    if name.startswith("A_"):
        return (int(name[2:]), 0)
    k, i = name.split(",")
    return (int(k[2:]), int(i[2:]))


def compare(computed: Cells, expected: Cells, prefix_only: bool = False) -> list[CellDiff]:
    """Cell-by-cell differences over the union of cells (absent means zero).

    With ``prefix_only`` only the cells present in ``expected`` are checked.
    """
    out = []
    names = set(expected) if prefix_only else set(computed) | set(expected)
    for name in sorted(names, key=_cell_order):
        a, b = expected.get(name, Fraction(0)), computed.get(name, Fraction(0))
        if a != b:
            out.append(CellDiff(name, a, b))
    return out


def format_table(which: str, value=None) -> str:
    value = compute(which) if value is None else value
    if which == "t3":
        lines = ["k lambda_0 lambda_1 lambda_2 lambda_3"]
        for k, row in value.rows.items():
            lines.append(f"{k} " + " ".join(str(x) for x in row))
        lines.append(f"integral: {value.ok}")
        return "\n".join(lines) + "\n"
    lines = ["i A_i"] + [f"{i} {c}" for i, c in value.nonzero().items()]
    return "\n".join(lines) + "\n"


# -- disagreements with reference values ------------------------------------------------------


@dataclass(frozen=True)
class Discrepancy:
    where: str
    quantity: str
    reference: str
    derived: str
    derivation: str

    def __str__(self) -> str:
        return (f"{self.where}: {self.quantity} reference {self.reference}, derived "
                f"{self.derived} ({self.derivation})")


def child_parameters(n: int, d: int) -> tuple[int, int, int]:
    """[n-2, n/2-1, d-2] for the child of a self-dual [n, n/2, d] code."""
    return n - 2, n // 2 - 1, d - 2


def scalar_discrepancies() -> list[Discrepancy]:
    out = []
    lam = block_lambda(t1()[22], 118, 22, 3)
    out.append(Discrepancy(
        "3-design of the minimum-weight words of a self-dual [118, 59, 22] code",
        "lambda", "8885", str(lam), "A_22 C(22,3) / C(118,3) with A_22 from the solved enumerator"))
    n, k, d = child_parameters(120, 24)
    out.append(Discrepancy(
        "child of a self-dual [120, 60, 24] code", "parameters", "[112, 59, 22]",
        f"[{n}, {k}, {d}]", "length n - 2 and dimension n/2 - 1 of the punctured subcode"))
    case = resolve_shadow_cases(5).cases[0]
    coef = case.forms["B_19"].coefficient(11)
    out.append(Discrepancy(
        "m = 5 shadow analysis, case B_3 = 1", "coefficient of a_11 in B_19", "11/164",
        f"{coef.numerator}/{coef.denominator}", "exact shadow expansion with a_12..a_14 forced"))
    return out


def table_discrepancies(reference_dir) -> list[Discrepancy]:
    out = []
    for which in TABLE_IDS:
        path = Path(reference_dir) / f"{which}.json"
        if not path.exists():
            continue
        ref = load_reference(which, path)
        for diff in compare(cells(which), ref, which in PREFIX_ONLY):
            out.append(Discrepancy(f"table {which}", diff.cell, str(diff.expected),
                                   str(diff.computed), "first-principles recomputation"))
    return out
