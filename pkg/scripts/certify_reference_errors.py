"""Check reference tables against identities any correct table must satisfy.

Coefficient sums must equal 2^k, a formally self-dual enumerator must be fixed
by the MacWilliams transform, and the lambda_i of a t-design are fixed by
lambda_t through lambda_i = lambda_t C(v-i, t-i) / C(k-i, t-i).

    python3 scripts/certify_reference_errors.py --reference tests/golden
"""

import argparse
import json
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from pathlib import Path

from selfdual import tables
from selfdual.polyalg import WeightEnum, macwilliams


@dataclass
class Config:
    reference: Path = Path("tests/golden")


def _enum(path: Path) -> WeightEnum:
    return WeightEnum.from_json(path.read_text())


def run(cfg: Config) -> list[str]:
    out = []
    for which, k in (("t1", 59), ("t2", 59), ("t4", 60), ("t5", 60)):
        for label, w in (("reference", _enum(cfg.reference / f"{which}.json")),
                         ("computed", tables.compute(which))):
            total = w.total() - 2 ** k
            msg = f"{which} {label:9s}: sum - 2^{k} = {total}"
            if which in ("t4", "t5"):
                msg += f", MacWilliams-invariant {macwilliams(w, k) == w}"
            out.append(msg)
    obj = json.loads((cfg.reference / "t3.json").read_text())
    v = obj["v"]
    for k, row in obj["rows"].items():
        row = [Fraction(x) for x in row]
        t = len(row) - 1
        for i in range(t):
            want = row[t] * comb(v - i, t - i) / comb(int(k) - i, t - i)
            if row[i] != want:
                out.append(f"t3 reference k={k}: lambda_{i} = {row[i]} but lambda_{t} "
                           f"forces {want}")
    return out


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--reference", type=Path, default=Config.reference)
    for line in run(Config(ap.parse_args().reference)):
        print(line)


if __name__ == "__main__":
    main()
