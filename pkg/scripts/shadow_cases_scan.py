"""Run the low-weight shadow case analysis for lengths 24m - 2 and tabulate it.

    python3 scripts/shadow_cases_scan.py --max-m 8
"""

import argparse
import time
from dataclasses import dataclass

from selfdual.cases import MAX_M, resolve_shadow_cases


@dataclass
class Config:
    min_m: int = 1
    max_m: int = MAX_M
    verbose: bool = False


def run(cfg: Config) -> list[tuple]:
    rows = []
    for m in range(cfg.min_m, cfg.max_m + 1):
        start = time.perf_counter()
        rep = resolve_shadow_cases(m)
        elapsed = time.perf_counter() - start
        survivors = rep.consistent
        smin = survivors[0].shadow.min_weight() if len(survivors) == 1 else None
        rows.append((m, rep.n, rep.d, len(rep.cases), len(survivors), smin, elapsed))
        if cfg.verbose:
            print(rep.describe())
            print()
    return rows


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--min-m", type=int, default=Config.min_m)
    ap.add_argument("--max-m", type=int, default=Config.max_m)
    ap.add_argument("-v", "--verbose", action="store_true")
    a = ap.parse_args()
    rows = run(Config(a.min_m, a.max_m, a.verbose))
    print(" m    n   d  cases  consistent  shadow d  seconds")
    for m, n, d, c, s, smin, t in rows:
        print(f"{m:2d} {n:4d} {d:3d} {c:6d} {s:11d} {str(smin):>9s} {t:8.3f}")


if __name__ == "__main__":
    main()
