"""Closed-form description of the restricted Lie algebra: basis, degrees,
rank formula, Lie graph and its DOT rendering."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator

from .series import RankSequence
from .tree import C, MU, TAU, TreeElement, delta, nabla, power

TAU_KIND, MU_KIND, WC_KIND = "tau", "mu", "wc"


@dataclass(frozen=True, order=True)
class BasisVector:
    """tau^(2^n), mu^(2^n) or W(c)^(2^n).

    ``word`` is a string over ``D`` (delta) and ``N`` (nabla), outermost
    symbol first, so ``"ND"`` is nabla(delta(c)).
    """

    kind: str
    n: int = 0
    word: str = ""

    def __post_init__(self):
        if self.kind not in (TAU_KIND, MU_KIND, WC_KIND):
            raise ValueError(f"unknown kind {self.kind!r}")
        if self.kind != WC_KIND and self.word:
            raise ValueError("only W(c) vectors carry a word")
        if set(self.word) - set("DN"):
            raise ValueError(f"bad word {self.word!r}")
        if self.n < 0:
            raise ValueError("negative squaring exponent")

    def squared(self) -> "BasisVector":
        return BasisVector(self.kind, self.n + 1, self.word)

    @property
    def label(self) -> str:
        if self.kind == WC_KIND:
            base = "".join("∂" if s == "D" else "∇" for s in self.word) + "(c)" if self.word else "c"
        else:
            base = "τ" if self.kind == TAU_KIND else "μ"
        if self.n == 0:
            return base
        return f"{base}^{1 << self.n}"

    @property
    def key(self) -> str:
        """ASCII identifier, e.g. ``tau^4``, ``ND(c)^2``, ``c``."""
        if self.kind == WC_KIND:
            base = f"{self.word}(c)" if self.word else "c"
        else:
            base = self.kind
        return base if self.n == 0 else f"{base}^{1 << self.n}"

    def __str__(self) -> str:
        return self.label


def word_value(word: str) -> int:
    """sum W_i 2^(i-1) with W_1 the outermost symbol and nabla = 1."""
    return sum(1 << i for i, s in enumerate(word) if s == "N")


def degree(v: BasisVector) -> int:
    if v.kind != WC_KIND:
        return 1 << v.n
    m = len(v.word)
    return (word_value(v.word) + (1 << m) + 1) << v.n


def word_of_degree(d: int) -> str:
    """The unique W with deg W(c) = d (d >= 2): the binary digits of d - 1
    below the leading one, least significant first."""
    if d < 2:
        raise ValueError("W(c) has degree at least 2")
    x = d - 1
    m = x.bit_length() - 1
    return "".join("N" if (x >> i) & 1 else "D" for i in range(m))


def basis_of_degree(d: int) -> list[BasisVector]:
    if d < 1:
        raise ValueError("degrees start at 1")
    out: list[BasisVector] = []
    v = (d & -d).bit_length() - 1
    if d == 1 << v:
        out += [BasisVector(TAU_KIND, v), BasisVector(MU_KIND, v)]
    for s in range(v + 1):
        base = d >> s
        if base >= 2:
            out.append(BasisVector(WC_KIND, s, word_of_degree(base)))
    return out


def basis_up_to(max_degree: int) -> Iterator[BasisVector]:
    for d in range(1, max_degree + 1):
        yield from basis_of_degree(d)


def theorem_rank(n: int) -> int:
    v = (n & -n).bit_length() - 1
    return v + 2 if n == 1 << v else v + 1


def theorem_ranks(max_n: int) -> RankSequence:
    if max_n < 1:
        raise ValueError("max_n must be positive")
    return RankSequence([theorem_rank(n) for n in range(1, max_n + 1)])


def realize(v: BasisVector) -> TreeElement:
    """The group element represented by ``v``."""
    if v.kind == TAU_KIND:
        return power(TAU, 1 << v.n)
    if v.kind == MU_KIND:
        return power(MU, 1 << v.n)
    g = C
    for s in reversed(v.word):
        g = delta(g) if s == "D" else nabla(g)
    return power(g, 1 << v.n)


@dataclass(frozen=True, order=True)
class Edge:
    source: BasisVector
    target: BasisVector
    label: str  # "τ", "μ" or "2"


def out_edges(v: BasisVector) -> list[Edge]:
    """Arrows leaving ``v``: the squaring arrow plus the tau/mu arrows."""
    edges = [Edge(v, v.squared(), "2")]
    if v.kind == TAU_KIND:
        edges.append(Edge(v, BasisVector(WC_KIND, 0, "D" * v.n), "μ"))
    elif v.kind == MU_KIND:
        edges.append(Edge(v, BasisVector(WC_KIND, 0, "D" * v.n), "τ"))
    elif v.n == 0:
        w = v.word
        k = len(w) - len(w.lstrip("N"))
        rest = w[k:]
        if not rest:
            target = "D" * (k + 1)
        else:
            # nabla^k delta W (c) -> delta^k nabla W (c)
            target = "D" * k + "N" + rest[1:]
        t = BasisVector(WC_KIND, 0, target)
        edges += [Edge(v, t, "τ"), Edge(v, t, "μ")]
    return edges


@dataclass
class LieGraph:
    max_degree: int
    vertices: list[BasisVector] = field(default_factory=list)
    edges: list[Edge] = field(default_factory=list)
    dangling: list[Edge] = field(default_factory=list)

    def degree_of(self, v: BasisVector) -> int:
        return degree(v)

    def columns(self) -> dict[int, list[BasisVector]]:
        cols: dict[int, list[BasisVector]] = {}
        for v in self.vertices:
            cols.setdefault(degree(v), []).append(v)
        return cols

    def to_json(self) -> dict:
        return {
            "maxDegree": self.max_degree,
            "vertices": [{"id": v.key, "label": v.label, "degree": degree(v)} for v in self.vertices],
            "edges": [{"source": e.source.key, "target": e.target.key, "label": e.label} for e in self.edges],
            "dangling": [{"source": e.source.key, "target": e.target.key, "label": e.label} for e in self.dangling],
        }


def _sort_key(v: BasisVector):
    return (degree(v), v.kind, v.n, v.word)


def lie_graph(max_degree: int) -> LieGraph:
    verts = sorted(basis_up_to(max_degree), key=_sort_key) if max_degree >= 1 else []
    g = LieGraph(max_degree, verts)
    for v in verts:
        for e in out_edges(v):
            (g.edges if degree(e.target) <= max_degree else g.dangling).append(e)
    return g


def _dot_id(v: BasisVector) -> str:
    return '"' + v.key + '"'


def to_dot(g: LieGraph, name: str = "lie_graph") -> str:
    lines = [f"digraph {name} {{", "  rankdir=LR;", "  node [shape=plaintext];"]
    cols = g.columns()
    for d in sorted(cols):
        lines.append(f'  "deg{d}" [label="{d}", shape=circle];')
    if len(cols) > 1:
        lines.append("  " + " -> ".join(f'"deg{d}"' for d in sorted(cols)) + " [style=invis];")
    for d in sorted(cols):
        members = " ".join([f'"deg{d}";'] + [_dot_id(v) + ";" for v in cols[d]])
        lines.append(f"  {{ rank=same; {members} }}")
    for v in g.vertices:
        lines.append(f'  {_dot_id(v)} [label="{v.label}"];')
    for e in g.edges:
        lines.append(f'  {_dot_id(e.source)} -> {_dot_id(e.target)} [label="{e.label}"];')
    for i, e in enumerate(g.dangling):
        stub = f'"stub{i}"'
        lines.append(f'  {stub} [label="", shape=point, style=invis];')
        lines.append(f'  {_dot_id(e.source)} -> {stub} [label="{e.label}", style=dotted];')
    lines.append("}")
    return "\n".join(lines) + "\n"
