"""Finite quotients G_k: the action of the group on level k of the tree.

A leaf ``x_1 x_2 ... x_k`` is encoded as the integer ``sum x_j 2^(j-1)`` (first
letter least significant), so tau acts as ``i -> i + 1 mod 2^k``.

Subgroups are stored with a base and strong generating set for the action on
tree vertices.  The base lists the left children ``u0`` of the vertices ``u``
of levels 0..k-1 in breadth-first order.  Every basic orbit then has size 1
or 2, and the stabiliser of the base points up to ``u0`` is cut out by
vanishing swap bits.  On the level stabiliser St(L), the swap bits at level
L form a homomorphism to GF(2)^(2^L), so sifting is Gaussian elimination
level by level.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Optional, Sequence

import numpy as np

from .errors import LevelTooLarge
from .tree import TreeElement

MAX_LEVEL = 16


def _check_level(k: int) -> None:
    if not 1 <= k <= MAX_LEVEL:
        raise LevelTooLarge(f"level {k} outside 1..{MAX_LEVEL}")


@dataclass(frozen=True, eq=False)
class Permutation:
    images: np.ndarray
    level: int

    def __post_init__(self):
        self.images.setflags(write=False)

    @classmethod
    def identity(cls, level: int) -> "Permutation":
        return cls(np.arange(1 << level, dtype=np.int32), level)

    def __mul__(self, other: "Permutation") -> "Permutation":
        # right action: first self, then other
        return Permutation(other.images[self.images], self.level)

    def __invert__(self) -> "Permutation":
        inv = np.empty_like(self.images)
        inv[self.images] = np.arange(self.images.size, dtype=self.images.dtype)
        return Permutation(inv, self.level)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Permutation)
            and self.level == other.level
            and np.array_equal(self.images, other.images)
        )

    def __hash__(self) -> int:
        return hash((self.level, self.images.tobytes()))

    def is_identity(self) -> bool:
        return bool(np.array_equal(self.images, np.arange(self.images.size)))

    def restrict(self, level: int) -> "Permutation":
        """The induced permutation of a higher level (forget trailing letters)."""
        mask = (1 << level) - 1
        return Permutation((self.images[: 1 << level] & mask).astype(np.int32), level)

    def __repr__(self) -> str:
        return f"Permutation(level={self.level}, images={self.images.tolist()})"


def point_of(word: str) -> int:
    return sum(int(ch) << j for j, ch in enumerate(word))


def word_of(point: int, level: int) -> str:
    return "".join(str((point >> j) & 1) for j in range(level))


@lru_cache(maxsize=None)
def _symbol_images(sym: str, k: int) -> np.ndarray:
    n = 1 << k
    if sym == "t":
        return (np.arange(n, dtype=np.int32) + 1) % n
    if sym == "T":
        return (np.arange(n, dtype=np.int32) - 1) % n
    # mu = (1, mu^-1) eps, mu^-1 = (mu, 1) eps
    if k == 1:
        return np.array([1, 0], dtype=np.int32)
    rest = np.arange(n >> 1, dtype=np.int32)
    out = np.empty(n, dtype=np.int32)
    if sym == "m":
        out[0::2] = 1 + 2 * rest
        out[1::2] = 2 * _symbol_images("M", k - 1)
    else:
        out[0::2] = 1 + 2 * _symbol_images("m", k - 1)
        out[1::2] = 2 * rest
    out.setflags(write=False)
    return out


def project(g: TreeElement, k: int) -> Permutation:
    """The permutation induced by ``g`` on the 2^k leaves of level k."""
    _check_level(k)
    images = np.arange(1 << k, dtype=np.int32)
    word = g.word
    # tau powers collapse to a shift
    i = 0
    while i < len(word):
        sym = word[i]
        j = i
        while j < len(word) and word[j] == sym:
            j += 1
        run = j - i
        if sym in "tT":
            step = run if sym == "t" else -run
            images = (images + step) % (1 << k)
        else:
            table = _symbol_images(sym, k)
            # mu has order 2^k on level k
            for _ in range(run % (1 << k)):
                images = table[images]
        i = j
    return Permutation(images.astype(np.int32), k)


def _pack_bits(bits: np.ndarray) -> int:
    return int.from_bytes(np.packbits(bits.astype(np.uint8), bitorder="little").tobytes(), "little")


def level_bits(images: np.ndarray, level: int) -> int:
    """Swap bits of an element of St(level) at the vertices of that level."""
    return _pack_bits((images[: 1 << level] >> level) & 1)


def first_moved_level(images: np.ndarray) -> int:
    """Smallest L such that the element moves a vertex of level L+1, or -1."""
    diff = images ^ np.arange(images.size, dtype=images.dtype)
    diff = diff[diff != 0]
    if diff.size == 0:
        return -1
    return int((diff & -diff).min()).bit_length() - 1


@dataclass
class _Pivot:
    level: int
    column: int
    bits: int
    perm: np.ndarray
    inv: np.ndarray


@dataclass
class BSGS:
    """Base and strong generating set for a subgroup of the level-k quotient.

    ``generators`` keeps the generators the group was built from; the strong
    generators are the pivots, one per base point whose basic orbit has size 2.
    """

    level: int
    generators: list[Permutation] = field(default_factory=list)
    # per tree level, pivots sorted by column
    _pivots: dict[int, list[_Pivot]] = field(default_factory=dict, repr=False)

    @property
    def base(self) -> list[int]:
        """Base points as leaf indices of the vertices ``u0``, breadth first."""
        return [u for L in range(self.level) for u in range(1 << L)]

    @property
    def strong_generators(self) -> list[Permutation]:
        return [Permutation(p.perm, self.level) for p in self._ordered_pivots()]

    def _ordered_pivots(self) -> list[_Pivot]:
        return [p for L in sorted(self._pivots) for p in self._pivots[L]]

    @property
    def log2order(self) -> int:
        return sum(len(v) for v in self._pivots.values())

    @property
    def order(self) -> int:
        return 1 << self.log2order

    def basic_orbit_sizes(self) -> list[int]:
        cols = {(p.level, p.column) for p in self._ordered_pivots()}
        return [2 if (L, u) in cols else 1 for L in range(self.level) for u in range(1 << L)]

    def transversal(self, level: int, vertex: int) -> list[Permutation]:
        ident = Permutation.identity(self.level)
        for piv in self._pivots.get(level, []):
            if piv.column == vertex:
                return [ident, Permutation(piv.perm, self.level)]
        return [ident]

    def sift(self, images: np.ndarray) -> tuple[np.ndarray, int, int]:
        """Strip ``images`` through the chain.

        Returns the residue, the level where sifting stopped (``level`` when
        the residue is trivial) and the remaining swap bits there.
        """
        g = images
        while True:
            L = first_moved_level(g)
            if L < 0:
                return g, self.level, 0
            bits = level_bits(g, L)
            for piv in self._pivots.get(L, ()):
                if (bits >> piv.column) & 1:
                    bits ^= piv.bits
                    g = piv.inv[g]
            if bits:
                return g, L, bits

    def contains(self, p: Permutation) -> bool:
        _, L, _ = self.sift(p.images)
        return L == self.level

    def _insert(self, g: np.ndarray, L: int, bits: int) -> np.ndarray:
        col = (bits & -bits).bit_length() - 1
        inv = np.empty_like(g)
        inv[g] = np.arange(g.size, dtype=g.dtype)
        row = self._pivots.setdefault(L, [])
        row.append(_Pivot(L, col, bits, g, inv))
        row.sort(key=lambda p: p.column)
        return inv

    def _close(self, queue: list[np.ndarray], conjugators: Sequence[np.ndarray] = ()) -> None:
        """Sift the queue until every pivot square, pivot commutator and
        conjugate by ``conjugators`` sifts to the identity."""
        conj = [(c, np.argsort(c).astype(c.dtype)) for c in conjugators]
        while queue:
            g = queue.pop()
            r, L, bits = self.sift(g)
            if L == self.level:
                continue
            existing = self._ordered_pivots()
            r_inv = self._insert(r, L, bits)
            queue.append(r[r])
            for p in existing:
                # r^-1 p^-1 r p
                queue.append(p.perm[r[p.inv[r_inv]]])
            for c, c_inv in conj:
                queue.append(c[r[c_inv]])

    def copy(self) -> "BSGS":
        return BSGS(self.level, list(self.generators), {L: list(v) for L, v in self._pivots.items()})

    def describe(self) -> str:
        lines = [f"level {self.level}, |G| = 2^{self.log2order}"]
        for L in range(self.level):
            cols = [p.column for p in self._pivots.get(L, [])]
            lines.append(f"  level {L}: {len(cols)} pivots at vertices {cols}")
        return "\n".join(lines)


def bsgs_build(generators: Iterable[Permutation], level: Optional[int] = None) -> BSGS:
    gens = list(generators)
    if level is None:
        if not gens:
            raise ValueError("level required for an empty generating set")
        level = gens[0].level
    if any(g.level != level for g in gens):
        raise ValueError("generators live on different levels")
    b = BSGS(level, gens)
    b._close([g.images for g in gens])
    return b


def member(b: BSGS, p: Permutation) -> bool:
    if p.level != b.level:
        raise ValueError("level mismatch")
    return b.contains(p)


def normal_closure(ambient: BSGS, seeds: Iterable[Permutation], base: Optional[BSGS] = None) -> BSGS:
    """Smallest subgroup normal in ``ambient`` containing ``seeds`` (and ``base``).

    ``base`` must already be normal in ``ambient``; passing it lets callers
    grow an existing normal subgroup instead of starting from scratch.
    """
    seeds = list(seeds)
    b = base.copy() if base is not None else BSGS(ambient.level)
    b.generators = b.generators + seeds
    b._close([s.images for s in seeds], [g.images for g in ambient.generators])
    return b


def is_subgroup(h: BSGS, g: BSGS) -> bool:
    return all(g.contains(p) for p in h.strong_generators)
