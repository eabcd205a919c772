"""Command-line entry point.

Exit status: 0 on success, 1 when a checked property fails (a certificate is
printed), 2 on bad input or usage.  Output is deterministic; big integers are
always printed as decimal strings.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import autom, catalog, designs, gf2, shadowlab, tables
from .cases import MAX_M, resolve_shadow_cases
from .config import LIMITS
from .polyalg import gleason_expand, parse_constraints, solve_gleason

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class PropertyFailure(Exception):
    """A checked mathematical property does not hold."""


def _s(x) -> str:
    if isinstance(x, Fraction):
        return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    return str(x)


def _enum_json(w) -> dict:
    return w.to_json_obj()


def _read_code(path: str) -> gf2.LinearCode:
    return gf2.read_code(path)


def _emit(args, text: str, obj) -> None:
    if args.json:
        sys.stdout.write(json.dumps(obj, indent=1) + "\n")
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _code_kind(code: gf2.LinearCode) -> str:
    if gf2.is_self_dual(code):
        return "Type II" if gf2.is_doubly_even(code) else "Type I"
    return "not self-dual"


# -- commands ---------------------------------------------------------------------------------


def cmd_tables(args) -> int:
    value = tables.compute(args.which)
    cells = tables.cells(args.which, value)
    obj = {"table": args.which, "cells": {k: _s(v) for k, v in cells.items()}}
    text = tables.format_table(args.which, value)
    status = EXIT_OK
    if args.compare:
        ref = tables.load_reference(args.which, args.compare)
        diffs = tables.compare(cells, ref, args.which in tables.PREFIX_ONLY)
        obj["compare"] = {"file": str(args.compare), "differences": [
            {"cell": d.cell, "expected": _s(d.expected), "computed": _s(d.computed)} for d in diffs]}
        if diffs:
            text += f"compare: {len(diffs)} differing cell(s); first: {diffs[0]}\n"
            text += "".join(f"  {d}\n" for d in diffs)
            status = EXIT_FAIL
        else:
            text += f"compare: all {len(ref)} reference cells match\n"
    _emit(args, text, obj)
    return status


def cmd_shadow_cases(args) -> int:
    report = resolve_shadow_cases(args.m)
    obj = {
        "m": report.m, "n": report.n, "d": report.d,
        "prefix": [None if a is None else _s(a) for a in report.prefix.a],
        "cases": [],
    }
    for c in report.cases:
        entry = {
            "pattern": {f"B_{w}": v for w, v in sorted(c.pattern.items())},
            "verdict": c.verdict,
            "tail": {f"a_{j}": None if v is None else _s(v) for j, v in sorted(c.tail.items())},
            "forms": {k: str(v) for k, v in c.forms.items()},
            "conflict": c.conflict,
            "witness": None if c.witness is None else str(c.witness),
        }
        if c.shadow is not None:
            entry["enumerator"] = _enum_json(c.enumerator)
            entry["shadow"] = _enum_json(c.shadow)
            entry["shadow_min_weight"] = c.shadow.min_weight()
        obj["cases"].append(entry)
    _emit(args, report.describe(), obj)
    return EXIT_OK


def cmd_solve(args) -> int:
    gc = solve_gleason(args.n, args.basis, parse_constraints(args.constraints))
    obj = {"basis": gc.basis, "n": gc.n, "a": [None if a is None else _s(a) for a in gc.a]}
    text = str(gc)
    if not gc.free:
        w = gleason_expand(gc)
        obj["enumerator"] = _enum_json(w)
        text += f"\nW = {w}"
    _emit(args, text, obj)
    return EXIT_OK


def cmd_analyze(args) -> int:
    code = _read_code(args.code)
    kind = _code_kind(code)
    d = gf2.min_distance(code, args.limit) if code.k else None
    W = gf2.weight_distribution(code, args.limit)
    obj = {"n": code.n, "k": code.k, "d": d, "kind": kind, "enumerator": _enum_json(W)}
    parts = [("self-dual, " + kind) if kind != "not self-dual" else kind, f"W = {W}"]
    if kind != "not self-dual":
        info = shadowlab.shadow(code, args.limit)
        obj["shadow"] = _enum_json(info.enumerator)
        obj["shadow_min_weight"] = info.min_weight
        parts.append(f"shadow {info.enumerator}")
    text = ", ".join(parts) + f"\n[{code.n}, {code.k}, {d}]\n"
    _emit(args, text, obj)
    return EXIT_OK


def cmd_fixed(args) -> int:
    code = _read_code(args.code)
    sigma = autom.Permutation.from_cycles(args.perm, code.n)
    if not autom.is_automorphism(code, sigma):
        raise PropertyFailure(f"{sigma} is not an automorphism of the code")
    t = autom.aut_type(sigma)
    F = autom.fixed_code(code, sigma)
    layout = autom.CycleLayout.of(sigma)
    P = autom.project(F, layout)
    obj = {"type": str(t), "order": sigma.order, "dim_fixed": F.k,
           "projection": {"n": P.n, "k": P.k, "self_dual": gf2.is_self_dual(P),
                          "doubly_even": gf2.is_doubly_even(P)}}
    lines = [f"type {t}", f"dim F = {F.k}"]
    if sigma.order % 2 and sigma.order > 1 and autom._is_prime(sigma.order):
        rep = autom.maschke_verify(code, sigma)
        obj["dim_even"] = rep.dim_even
        obj["decomposition_ok"] = rep.ok
        lines[1] = f"dims (F, E) = ({F.k}, {rep.dim_even})"
        lines.append(str(rep))
        if not rep.ok:
            _emit(args, "\n".join(lines), obj)
            return EXIT_FAIL
    pd = gf2.min_distance(P, args.limit) if P.k else None
    obj["projection"]["d"] = pd
    lines.append(f"projection [{P.n},{P.k}" + (f",{pd}]" if pd is not None else "]")
                 + (" self-dual" if gf2.is_self_dual(P) else ""))
    _emit(args, "\n".join(lines), obj)
    return EXIT_OK


def cmd_design(args) -> int:
    code = _read_code(args.code)
    D = designs.design_from_codewords(code, args.weight, args.limit)
    pred = designs.block_lambda(D.b, code.n, args.weight, args.t)
    obj = {"v": D.v, "b": D.b, "k": D.k, "t": args.t, "predicted_lambda": _s(pred)}
    lines = [f"{D.b} blocks of size {D.k} on {D.v} points",
             f"predicted lambda_{args.t} = {_s(pred)}"]
    status = EXIT_OK
    if args.verify:
        if args.verify == "sample" and args.seed is None:
            raise ValueError("sample verification needs --seed")
        chk = designs.verify_t_design(D, args.t, args.verify, args.samples, args.seed)
        obj["verify"] = {"mode": chk.mode, "checked": chk.checked, "lambda": chk.lam,
                         "ok": chk.ok}
        if not chk.ok:
            a, ca, b, cb = chk.certificate
            obj["verify"]["certificate"] = [[x + 1 for x in a], ca, [x + 1 for x in b], cb]
            status = EXIT_FAIL
        lines.append(chk.describe())
        if chk.ok and chk.lam is not None:
            lines.append(f"lambda = {chk.lam}")
    _emit(args, "\n".join(lines), obj)
    return status


def _code_out(args, code: gf2.LinearCode, extra: dict | None = None) -> None:
    obj = {"n": code.n, "k": code.k, "rows": code.row_strings()}
    obj.update(extra or {})
    _emit(args, gf2.format_code(code), obj)


def cmd_child(args) -> int:
    code = _read_code(args.code)
    _code_out(args, shadowlab.child(code, args.i - 1, args.j - 1))
    return EXIT_OK


def cmd_extend(args) -> int:
    code = _read_code(args.code)
    out = shadowlab.parent(code) if args.parent else shadowlab.extend_cosets(code)
    _code_out(args, out)
    return EXIT_OK


def cmd_neighbor(args) -> int:
    code = _read_code(args.code)
    text = args.vector
    if Path(text).is_file():
        text = Path(text).read_text()
    u = gf2.parse_vector(text, code.n)
    N = shadowlab.neighbor_t33(code, u) if args.t33 else shadowlab.neighbor(code, u)
    _code_out(args, N, {"neighbors": shadowlab.are_neighbors(code, N)})
    return EXIT_OK


def _codes_in(path: str) -> list[gf2.LinearCode]:
    p = Path(path)
    files = sorted(p.iterdir()) if p.is_dir() else [p]
    return [gf2.read_code(f) for f in files if f.is_file()]


def cmd_exclude(args) -> int:
    lp = autom.CycleLayout.parse(Path(args.layout_p).read_text())
    lq = autom.CycleLayout.parse(Path(args.layout_q).read_text())
    if args.threshold is None:
        raise ValueError("exclude needs --threshold")
    rep = autom.exclusion_pipeline(lp, _codes_in(args.dset), lq, _codes_in(args.eset),
                                   args.threshold, args.limit)
    obj = {"n": rep.n, "threshold": rep.threshold, "verdict": rep.verdict,
           "vacuous": rep.vacuous, "pairs": [
               {"d": p.d_index, "e": p.e_index, "dim": p.dim,
                "witness": None if p.witness is None else gf2.vec_to_str(p.witness, rep.n)}
               for p in rep.pairs]}
    _emit(args, rep.describe(), obj)
    return EXIT_OK


def cmd_export(args) -> int:
    _code_out(args, catalog.get(args.name).code())
    return EXIT_OK


def cmd_discrepancies(args) -> int:
    items = tables.scalar_discrepancies()
    if args.reference:
        items += tables.table_discrepancies(args.reference)
    obj = [{"where": d.where, "quantity": d.quantity, "reference": d.reference,
            "derived": d.derived, "derivation": d.derivation} for d in items]
    _emit(args, "\n".join(str(d) for d in items), obj)
    return EXIT_OK


# -- parser -----------------------------------------------------------------------------------


def _m(text: str) -> int:
    m = int(text)
    if not 1 <= m <= MAX_M:
        raise argparse.ArgumentTypeError(f"m must be in 1..{MAX_M}")
    return m


_COMMON_DEFAULTS = {"json": False, "limit": None, "seed": None, "threshold": None}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="emit JSON instead of text")
    common.add_argument("--limit", type=int, default=argparse.SUPPRESS,
                        help="enumeration dimension limit")
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS)
    common.add_argument("--threshold", type=int, default=argparse.SUPPRESS)

    # the common actions are shared with every subparser, so their defaults stay
    # suppressed and main() fills in whatever neither level supplied
    p = argparse.ArgumentParser(prog="selfdual", description=__doc__.splitlines()[0],
                                parents=[common])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("tables", parents=[common], help="compute a named enumerator table")
    s.add_argument("which", choices=tables.TABLE_IDS)
    s.add_argument("--compare", help="reference JSON to diff against")
    s.set_defaults(func=cmd_tables)

    s = sub.add_parser("shadow-cases", parents=[common], help="shadow case analysis for m")
    s.add_argument("m", type=_m)
    s.set_defaults(func=cmd_shadow_cases)

    s = sub.add_parser("solve", parents=[common], help="solve Gleason coefficients")
    s.add_argument("n", type=int)
    s.add_argument("basis", choices=("even", "doubly_even"))
    s.add_argument("constraints", help='e.g. "0:1,4:0,8:0"')
    s.set_defaults(func=cmd_solve)

    s = sub.add_parser("analyze", parents=[common], help="parameters, type, enumerator, shadow")
    s.add_argument("code")
    s.set_defaults(func=cmd_analyze)

    s = sub.add_parser("fixed", parents=[common], help="fixed code of a permutation")
    s.add_argument("code")
    s.add_argument("perm", help='1-indexed cycles, e.g. "(1,2,3)(4,5)"')
    s.set_defaults(func=cmd_fixed)

    s = sub.add_parser("design", parents=[common], help="design of weight-w codewords")
    s.add_argument("code")
    s.add_argument("--weight", type=int, required=True)
    s.add_argument("--t", type=int, required=True)
    s.add_argument("--verify", choices=("exact", "sample"))
    s.add_argument("--samples", type=int, default=1000)
    s.set_defaults(func=cmd_design)

    s = sub.add_parser("child", parents=[common], help="child on two 1-indexed positions")
    s.add_argument("code")
    s.add_argument("i", type=int)
    s.add_argument("j", type=int)
    s.set_defaults(func=cmd_child)

    s = sub.add_parser("extend", parents=[common], help="two-coordinate coset extension")
    s.add_argument("code")
    s.add_argument("--parent", action="store_true", help="self-dual tagging instead")
    s.set_defaults(func=cmd_extend)

    s = sub.add_parser("neighbor", parents=[common], help="neighbor through a vector")
    s.add_argument("code")
    s.add_argument("vector", help="0/1 string or a file holding one")
    s.add_argument("--t33", action="store_true", help="require weight divisible by 4")
    s.set_defaults(func=cmd_neighbor)

    s = sub.add_parser("exclude", parents=[common], help="lift-and-sum exclusion")
    s.add_argument("--layout-p", required=True)
    s.add_argument("--layout-q", required=True)
    s.add_argument("--dset", required=True, help="code file or directory of code files")
    s.add_argument("--eset", required=True, help="code file or directory of code files")
    s.set_defaults(func=cmd_exclude)

    s = sub.add_parser("export", parents=[common], help="write a catalog code")
    s.add_argument("name", choices=sorted(catalog.CATALOG))
    s.set_defaults(func=cmd_export)

    s = sub.add_parser("discrepancies", parents=[common], help="derived vs reference values")
    s.add_argument("--reference", help="directory of reference table JSON files")
    s.set_defaults(func=cmd_discrepancies)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    for name, default in _COMMON_DEFAULTS.items():
        if not hasattr(args, name):
            setattr(args, name, default)
    saved = LIMITS.enumeration_dim
    if args.limit is not None:
        LIMITS.enumeration_dim = args.limit
    try:
        return args.func(args)
    except PropertyFailure as exc:
        sys.stdout.write(f"property failed: {exc}\n")
        return EXIT_FAIL
    except (ValueError, KeyError, OSError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    finally:
        LIMITS.enumeration_dim = saved


if __name__ == "__main__":
    sys.exit(main())
