"""Check every catalogued group identity and print the verdicts.

    python3 scripts/identity_report.py
"""

from __future__ import annotations

import argparse
from dataclasses import dataclass

from selfsim_lie.identities import FAMILIES


@dataclass
class IdentityReportConfig:
    families: tuple[str, ...] = tuple(FAMILIES)
    show_lengths: bool = False


def main(cfg: IdentityReportConfig) -> int:
    failures = 0
    for fam in cfg.families:
        for idn in FAMILIES[fam]():
            ok = idn.holds()
            failures += not ok
            extra = f"  |lhs|={len(idn.lhs)} |rhs|={len(idn.rhs)}" if cfg.show_lengths else ""
            print(f"{'holds ' if ok else 'FAILS '} {fam:16s} {idn.name}{extra}")
    print(f"{failures} failing")
    return failures


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--family", action="append", choices=sorted(FAMILIES))
    ap.add_argument("--lengths", action="store_true")
    a = ap.parse_args()
    main(IdentityReportConfig(tuple(a.family) if a.family else tuple(FAMILIES), a.lengths))
