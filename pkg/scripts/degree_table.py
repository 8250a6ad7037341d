"""Measured degree of every basis vector in the level-k quotient.

    python3 scripts/degree_table.py --level 8 --max-degree 20
"""

from __future__ import annotations

import argparse
from dataclasses import dataclass

from selfsim_lie.lie import basis_up_to, degree, realize
from selfsim_lie.series import degree_in_quotient, jennings_series


@dataclass
class DegreeTableConfig:
    level: int = 8
    max_degree: int = 20


def main(cfg: DegreeTableConfig) -> int:
    s = jennings_series(cfg.level, cfg.max_degree + 12)
    mismatches = 0
    for v in basis_up_to(cfg.max_degree):
        d = degree(v)
        got = degree_in_quotient(realize(v), cfg.level, s)
        # a nontrivial image inside the last computed term has degree >= that term
        shown = f">={got}" if got == s[-1].n and s[-1].log2order else str(got)
        flag = "" if got == d else "  <- differs"
        mismatches += got != d
        print(f"{v.label:12s} closed form {d:3d}  level {cfg.level}: {shown}{flag}")
    print(f"{mismatches} mismatches")
    return mismatches


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--level", type=int, default=8)
    ap.add_argument("--max-degree", type=int, default=20)
    a = ap.parse_args()
    main(DegreeTableConfig(a.level, a.max_degree))
