"""Tree labellings of an element: the epsilon portrait over Z/2 and the
branch portrait (i, j, k_sigma) over Z.

Every g is tau^i mu^j g_0 with g_0 in the derived subgroup, and every
element h of the derived subgroup is c^k (h_0, h_1) with h_0, h_1 again in
it.  Since c = ((mu tau)^-1, mu tau), the right section of h abelianizes to
(k, k) and the left one to (-k, -k), which is how k is read off.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import DomainError
from .tree import (
    C,
    IDENTITY,
    MU,
    TAU,
    TreeElement,
    abelianization,
    delta,
    in_derived_subgroup,
    multiply,
    power,
    right_embed,
)


def vertices(depth: int) -> list[str]:
    """All tree words of length < depth, breadth first."""
    out = [""]
    level = [""]
    for _ in range(depth - 1):
        level = [v + x for v in level for x in "01"]
        out += level
    return out


@dataclass
class EpsilonPortrait:
    depth: int
    labels: dict[str, int] = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"depth": self.depth, "labels": dict(self.labels)}


@dataclass
class BranchPortrait:
    i: int
    j: int
    depth: int
    labels: dict[str, int] = field(default_factory=dict)
    remainder_certified: bool = False

    def to_json(self) -> dict:
        return {
            "i": self.i,
            "j": self.j,
            "labels": dict(self.labels),
            "depth": self.depth,
            "remainderCertified": self.remainder_certified,
        }

    @classmethod
    def from_json(cls, data: dict) -> "BranchPortrait":
        return cls(
            data["i"], data["j"], data["depth"], dict(data["labels"]), data.get("remainderCertified", False)
        )


def _check_depth(depth: int) -> None:
    if depth < 1:
        raise ValueError("depth must be at least 1")


def epsilon_portrait(g: TreeElement, depth: int) -> EpsilonPortrait:
    _check_depth(depth)
    labels: dict[str, int] = {}
    level = {"": g}
    for _ in range(depth):
        nxt = {}
        for v, h in level.items():
            labels[v] = h.root_swap
            nxt[v + "0"] = h.section(0)
            nxt[v + "1"] = h.section(1)
        level = nxt
    return EpsilonPortrait(depth, {v: labels[v] for v in vertices(depth)})


def _split(h: TreeElement, vertex: str) -> tuple[int, TreeElement, TreeElement]:
    """Write h = c^k (h0, h1) for h in the derived subgroup."""
    k = abelianization(h.section(1))[0]
    a0, a1 = abelianization(h.section(0)), abelianization(h.section(1))
    if a1 != (k, k) or a0 != (-k, -k):
        raise DomainError(f"section abelianizations {a0}, {a1} at vertex {vertex!r} are not of c-power shape")
    r = multiply(power(C, -k), h)
    r0, r1 = r.section(0), r.section(1)
    if r.root_swap or not (in_derived_subgroup(r0) and in_derived_subgroup(r1)):
        raise DomainError(f"remainder at vertex {vertex!r} left the derived subgroup")
    return k, r0, r1


def branch_portrait(g: TreeElement, depth: int) -> BranchPortrait:
    _check_depth(depth)
    i, j = abelianization(g)
    g0 = multiply(multiply(power(MU, -j), power(TAU, -i)), g)
    if not in_derived_subgroup(g0):
        raise DomainError("root remainder is not in the derived subgroup")
    labels: dict[str, int] = {}
    level = {"": g0}
    for _ in range(depth):
        nxt = {}
        for v, h in level.items():
            k, h0, h1 = _split(h, v)
            labels[v] = k
            nxt[v + "0"], nxt[v + "1"] = h0, h1
        level = nxt
    certified = all(in_derived_subgroup(h) for h in level.values())
    return BranchPortrait(i, j, depth, {v: labels[v] for v in vertices(depth)}, certified)


def reconstruct(p: BranchPortrait) -> TreeElement:
    """tau^i mu^j times the c-power tree, with trivial remainders at depth."""

    def build(v: str) -> TreeElement:
        if len(v) >= p.depth:
            return IDENTITY
        pair = multiply(delta(build(v + "0")), right_embed(build(v + "1")))
        return multiply(power(C, p.labels.get(v, 0)), pair)

    return multiply(multiply(power(TAU, p.i), power(MU, p.j)), build(""))
