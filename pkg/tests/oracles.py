"""Independent reference implementations used only by the tests.

Nothing here imports the package's action, section or BSGS code: the tree
action is re-derived from the defining recursions of tau and mu, and groups
are closed element by element.
"""

from __future__ import annotations

from itertools import product as iproduct
from typing import Iterable


def _tau(w: str) -> str:
    if not w:
        return w
    return ("1" + w[1:]) if w[0] == "0" else ("0" + _tau(w[1:]))


def _tau_inv(w: str) -> str:
    if not w:
        return w
    return ("0" + w[1:]) if w[0] == "1" else ("1" + _tau_inv(w[1:]))


def _mu(w: str) -> str:
    # (0 s)^mu = 1 s, (1 s)^mu = 0 s^(mu^-1)
    if not w:
        return w
    return ("1" + w[1:]) if w[0] == "0" else ("0" + _mu_inv(w[1:]))


def _mu_inv(w: str) -> str:
    if not w:
        return w
    return ("0" + w[1:]) if w[0] == "1" else ("1" + _mu(w[1:]))


_ACT = {"t": _tau, "T": _tau_inv, "m": _mu, "M": _mu_inv}


def act(word: str, w: str) -> str:
    """Right action of a generator word on a vertex, symbol by symbol."""
    for sym in word:
        w = _ACT[sym](w)
    return w


def vertices_at(depth: int) -> list[str]:
    return ["".join(p) for p in iproduct("01", repeat=depth)]


def same_action(a: str, b: str, depth: int) -> bool:
    return all(act(a, w) == act(b, w) for w in vertices_at(depth))


def first_difference(a: str, b: str, max_depth: int):
    for d in range(1, max_depth + 1):
        for w in vertices_at(d):
            if act(a, w) != act(b, w):
                return w
    return None


def perm_tuple(word: str, level: int) -> tuple[int, ...]:
    """Images of the leaves, first letter least significant."""
    out = []
    for i in range(1 << level):
        w = "".join(str((i >> j) & 1) for j in range(level))
        img = act(word, w)
        out.append(sum(int(ch) << j for j, ch in enumerate(img)))
    return tuple(out)


def compose(p: tuple, q: tuple) -> tuple:
    """First p, then q."""
    return tuple(q[x] for x in p)


def invert(p: tuple) -> tuple:
    inv = [0] * len(p)
    for i, x in enumerate(p):
        inv[x] = i
    return tuple(inv)


def closure(gens: Iterable[tuple], n: int) -> frozenset:
    ident = tuple(range(n))
    gens = [g for g in gens]
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = compose(x, g)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return frozenset(seen)


def comm(a: tuple, b: tuple) -> tuple:
    return compose(compose(invert(a), invert(b)), compose(a, b))


def dimension_series(level: int) -> list[frozenset]:
    """Gamma_n by the definition, element by element.

    [G, H] is generated by all commutators [g, h] with g in G and h in H,
    and H^2 by all squares of elements of H.
    """
    n = 1 << level
    G = closure([perm_tuple("t", level), perm_tuple("m", level)], n)
    terms = [G]
    while len(terms[-1]) > 1:
        prev = terms[-1]
        m = -(-(len(terms) + 1) // 2)
        H = terms[m - 1]
        gens = {comm(g, h) for g in G for h in prev} | {compose(h, h) for h in H}
        terms.append(closure(gens, n))
    return terms


def subgroup(gens: Iterable[tuple], n: int, conjugators: Iterable[tuple] = ()) -> frozenset:
    """Subgroup generated by ``gens`` and closed under conjugation by
    ``conjugators``; generators already inside are skipped."""
    conj = list(conjugators)
    kept: list[tuple] = []
    group = frozenset([tuple(range(n))])
    queue = list(gens)
    while queue:
        g = queue.pop()
        if g in group:
            continue
        kept.append(g)
        group = closure(kept, n)
        queue.extend(compose(compose(invert(c), g), c) for c in conj for g in kept)
    return group


def dimension_series_fast(level: int) -> list[frozenset]:
    """As :func:`dimension_series`, with [G, H] generated as a normal
    subgroup by [x, h] for generators x of G and all h in H."""
    n = 1 << level
    X = [perm_tuple("t", level), perm_tuple("m", level)]
    G = closure(X, n)
    terms = [G]
    while len(terms[-1]) > 1:
        prev = terms[-1]
        m = -(-(len(terms) + 1) // 2)
        H = terms[m - 1]
        gens = [comm(x, h) for x in X for h in prev] + [compose(h, h) for h in H]
        terms.append(subgroup(gens, n, X))
    return terms


def partition_count(n: int) -> int:
    """Number of partitions of n by explicit enumeration of non-increasing parts."""

    def count(rest: int, largest: int) -> int:
        if rest == 0:
            return 1
        return sum(count(rest - p, p) for p in range(min(rest, largest), 0, -1))

    return count(n, n)
