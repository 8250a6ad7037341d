"""Rank sequences of the level-k quotients next to the closed form.

    python3 scripts/rank_table.py --levels 5 6 7 8 --max-n 32
"""

from __future__ import annotations

import argparse
import json
import time
from dataclasses import dataclass, field

from selfsim_lie.lie import theorem_ranks
from selfsim_lie.series import jennings_series, ranks


@dataclass
class RankTableConfig:
    levels: list[int] = field(default_factory=lambda: [5, 6, 7, 8])
    max_n: int = 32
    json_out: str | None = None


def main(cfg: RankTableConfig) -> dict:
    theorem = theorem_ranks(cfg.max_n).values
    rows, prev = {}, None
    for k in cfg.levels:
        t = time.perf_counter()
        s = jennings_series(k, cfg.max_n + 1)
        r = ranks(s, prev)
        prev = s if k + 1 in cfg.levels else None
        vals = (r.values + [0] * cfg.max_n)[: cfg.max_n]
        agree = next((i for i, (a, b) in enumerate(zip(vals, theorem)) if a != b), cfg.max_n)
        rows[k] = {"l": vals, "trustedPrefix": r.trusted_prefix, "agreesWithClosedForm": agree}
        print(f"level {k:2d} ({time.perf_counter() - t:6.1f}s) agree<={agree:3d} prefix={r.trusted_prefix}: {vals}")
    print(f"closed form               : {theorem}")
    if cfg.json_out:
        with open(cfg.json_out, "w") as fh:
            json.dump({"theorem": theorem, "levels": rows}, fh, indent=1)
    return rows


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--levels", type=int, nargs="+", default=[5, 6, 7, 8])
    ap.add_argument("--max-n", type=int, default=32)
    ap.add_argument("--json-out", default=None)
    a = ap.parse_args()
    main(RankTableConfig(a.levels, a.max_n, a.json_out))
