"""The 2-dimension series of the finite quotients G_k.

Gamma_1 = G_k and Gamma_n = [G_k, Gamma_{n-1}] Gamma_{ceil(n/2)}^2.  The
square subgroup H^2 of a normal subgroup H is computed as the normal closure
of the squares of a generating set together with their pairwise commutators:
modulo [H, H] the squares of generators generate all squares, and
[H, H] <= H^2 always.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .perm import BSGS, Permutation, bsgs_build, normal_closure, project
from .tree import MU, TAU, TreeElement


@dataclass
class SeriesTerm:
    n: int
    subgroup: BSGS

    @property
    def log2order(self) -> int:
        return self.subgroup.log2order


@dataclass
class RankSequence:
    values: list[int]
    level: Optional[int] = None
    trusted_prefix: Optional[int] = None

    def __getitem__(self, n: int) -> int:
        """1-based access: ``ranks[n]`` is l_n."""
        return self.values[n - 1]

    def __len__(self) -> int:
        return len(self.values)


def quotient_group(k: int) -> BSGS:
    return bsgs_build([project(TAU, k), project(MU, k)])


def _commutator(a: Permutation, b: Permutation) -> Permutation:
    return (~a) * (~b) * a * b


def _unique_rows(rows) -> list[np.ndarray]:
    seen: dict[bytes, np.ndarray] = {}
    for row in rows:
        seen.setdefault(row.tobytes(), row)
    return list(seen.values())


def square_subgroup(ambient: BSGS, h: BSGS) -> BSGS:
    """H^2 for a normal subgroup H of ``ambient``."""
    gens = h.strong_generators
    if not gens:
        return BSGS(ambient.level)
    P = np.stack([g.images for g in gens])
    Pinv = np.argsort(P, axis=1).astype(P.dtype)
    seeds = [P[i][P[i]] for i in range(len(gens))]
    for i in range(len(gens) - 1):
        a, a_inv = P[i], Pinv[i]
        # [a, b] = a^-1 b^-1 a b for all later b at once
        x = Pinv[i + 1:, a_inv]
        x = a[x]
        x = np.take_along_axis(P[i + 1:], x, axis=1)
        seeds.extend(x)
    seeds = _unique_rows(seeds)
    return normal_closure(ambient, [Permutation(row, ambient.level) for row in seeds])


def jennings_series(k: int, max_n: Optional[int] = None, ambient: Optional[BSGS] = None) -> list[SeriesTerm]:
    """Terms Gamma_1, ..., Gamma_N of the level-k quotient.

    Stops after ``max_n`` terms or once a term is trivial; the trivial term
    is included so that rank differences telescope.
    """
    G = ambient if ambient is not None else quotient_group(k)
    terms = [SeriesTerm(1, G)]
    squares: dict[int, BSGS] = {}
    n = 1
    while terms[-1].log2order > 0 and (max_n is None or n < max_n):
        n += 1
        m = math.ceil(n / 2)
        if m not in squares:
            squares[m] = square_subgroup(G, terms[m - 1].subgroup)
        prev = terms[-1].subgroup.strong_generators
        seeds = [_commutator(p, a) for p in prev for a in G.generators]
        terms.append(SeriesTerm(n, normal_closure(G, seeds, base=squares[m])))
    return terms


def ranks(series: Sequence[SeriesTerm], series_prev: Optional[Sequence[SeriesTerm]] = None) -> RankSequence:
    """l_n = log2|Gamma_n| - log2|Gamma_{n+1}|, tagged with the trusted prefix.

    The trusted prefix is the number of leading values on which the two
    consecutive-level computations agree.
    """
    vals = [a.log2order - b.log2order for a, b in zip(series, series[1:])]
    level = series[0].subgroup.level if series else None
    trusted = None
    if series_prev is not None:
        prev = [a.log2order - b.log2order for a, b in zip(series_prev, series_prev[1:])]
        trusted = 0
        for x, y in zip(vals, prev):
            if x != y:
                break
            trusted += 1
    return RankSequence(vals, level, trusted)


def degree_in_quotient(g: TreeElement, k: int, series: Sequence[SeriesTerm]) -> float:
    """Largest n with the image of g in Gamma_n; infinity for trivial images."""
    p = project(g, k)
    if p.is_identity():
        return math.inf
    deg = 0
    for term in series:
        if term.subgroup.contains(p):
            deg = term.n
        else:
            break
    return deg


def series_report(k: int, series: Sequence[SeriesTerm], series_prev: Optional[Sequence[SeriesTerm]] = None) -> dict:
    r = ranks(series, series_prev)
    return {
        "level": k,
        "l": r.values,
        "trustedPrefix": r.trusted_prefix,
        "log2orders": [t.log2order for t in series],
    }
