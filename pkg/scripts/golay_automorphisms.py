"""Fixed codes, decompositions and weight congruences for the shipped Golay automorphisms.

    python3 scripts/golay_automorphisms.py
"""

import argparse
from dataclasses import dataclass

from selfdual import autom, catalog, gf2


@dataclass
class Config:
    names: tuple[str, ...] = ()  # empty means all shipped maps


def run(cfg: Config) -> list[str]:
    g = catalog.golay24()
    out = []
    for name, make, expected in catalog.get("golay24").automorphisms:
        if cfg.names and name not in cfg.names:
            continue
        s = make()
        t = autom.aut_type(s)
        layout = autom.CycleLayout.of(s)
        F = autom.fixed_code(g, s)
        P = autom.project(F, layout)
        pd = gf2.min_distance(P) if P.k else None
        line = (f"{name:12s} {str(t):10s} (expected {expected})  dim F = {F.k:2d}  "
                f"projection [{P.n},{P.k},{pd}] self-dual {gf2.is_self_dual(P)}, "
                f"doubly-even {gf2.is_doubly_even(P)}")
        if t.kind == "prime" and t.order % 2:
            line += f"\n{'':12s} {autom.maschke_verify(g, s)}"
        if t.kind == "prime":
            line += f"\n{'':12s} {autom.congruence_check(g, s, t.order)}"
        out.append(line)
    return out


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("names", nargs="*")
    a = ap.parse_args()
    for line in run(Config(tuple(a.names))):
        print(line)


if __name__ == "__main__":
    main()
