"""Recompute every enumerator table and diff it against reference JSON files.

    python3 scripts/reproduce_tables.py --reference tests/golden --out results/tables
"""

import argparse
import json
import time
from dataclasses import dataclass
from pathlib import Path

from selfdual import tables


@dataclass
class Config:
    reference: Path = Path("tests/golden")
    out: Path | None = None
    which: tuple[str, ...] = tables.TABLE_IDS


def run(cfg: Config) -> dict:
    summary = {}
    for which in cfg.which:
        start = time.perf_counter()
        value = tables.compute(which)
        cells = tables.cells(which, value)
        elapsed = time.perf_counter() - start
        ref_path = cfg.reference / f"{which}.json"
        diffs = []
        if ref_path.exists():
            ref = tables.load_reference(which, ref_path)
            diffs = tables.compare(cells, ref, which in tables.PREFIX_ONLY)
        summary[which] = {"cells": len(cells), "seconds": round(elapsed, 3),
                          "differences": [str(d) for d in diffs]}
        if cfg.out is not None:
            cfg.out.mkdir(parents=True, exist_ok=True)
            (cfg.out / f"{which}.txt").write_text(tables.format_table(which, value))
    return summary


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--reference", type=Path, default=Config.reference)
    ap.add_argument("--out", type=Path)
    ap.add_argument("--which", nargs="*", default=list(Config.which))
    a = ap.parse_args()
    summary = run(Config(a.reference, a.out, tuple(a.which)))
    for which, row in summary.items():
        status = "match" if not row["differences"] else f"{len(row['differences'])} difference(s)"
        print(f"{which:4s} {row['cells']:4d} cells  {row['seconds']:.3f}s  {status}")
        for d in row["differences"]:
            print(f"     {d}")
    if a.out is not None:
        (a.out / "summary.json").write_text(json.dumps(summary, indent=1) + "\n")


if __name__ == "__main__":
    main()
