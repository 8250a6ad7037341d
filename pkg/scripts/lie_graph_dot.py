"""Write the beginning of the Lie graph as DOT and list its columns.

    python3 scripts/lie_graph_dot.py --max-degree 10 --out lie_graph.dot
    dot -Tpdf lie_graph.dot -o fig1.pdf   # if graphviz is available
"""

from __future__ import annotations

import argparse
from dataclasses import dataclass

from selfsim_lie.lie import lie_graph, to_dot


@dataclass
class GraphConfig:
    max_degree: int = 10
    out: str = "lie_graph.dot"


def main(cfg: GraphConfig) -> None:
    g = lie_graph(cfg.max_degree)
    for d, vs in sorted(g.columns().items()):
        print(f"{d:3d}: " + ", ".join(v.label for v in vs))
    with open(cfg.out, "w", encoding="utf-8") as fh:
        fh.write(to_dot(g))
    print(f"{len(g.vertices)} vertices, {len(g.edges)} edges, {len(g.dangling)} dangling -> {cfg.out}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-degree", type=int, default=10)
    ap.add_argument("--out", default="lie_graph.dot")
    a = ap.parse_args()
    main(GraphConfig(a.max_degree, a.out))
