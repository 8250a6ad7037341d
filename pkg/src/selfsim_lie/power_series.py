"""Exact truncated power series in hbar: the Jennings product, partition
numbers and the word-growth lower bound."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence, Union

from .lie import basis_up_to, degree, theorem_rank
from .series import RankSequence


@dataclass(frozen=True)
class IntSeries:
    """sum c_i hbar^i for i <= N, with Python (arbitrary precision) integers."""

    coefficients: tuple[int, ...]

    @classmethod
    def zero(cls, N: int) -> "IntSeries":
        return cls((0,) * (N + 1))

    @classmethod
    def one(cls, N: int) -> "IntSeries":
        return cls((1,) + (0,) * N)

    @classmethod
    def from_list(cls, coeffs: Iterable[int], N: int) -> "IntSeries":
        c = list(coeffs)[: N + 1]
        return cls(tuple(c + [0] * (N + 1 - len(c))))

    @property
    def N(self) -> int:
        return len(self.coefficients) - 1

    def __getitem__(self, i: int) -> int:
        return self.coefficients[i]

    def __add__(self, other: "IntSeries") -> "IntSeries":
        self._check(other)
        return IntSeries(tuple(a + b for a, b in zip(self.coefficients, other.coefficients)))

    def __mul__(self, other: "IntSeries") -> "IntSeries":
        self._check(other)
        a, b = self.coefficients, other.coefficients
        N = self.N
        out = [0] * (N + 1)
        for i, x in enumerate(a):
            if x:
                for j in range(N + 1 - i):
                    out[i + j] += x * b[j]
        return IntSeries(tuple(out))

    def _check(self, other: "IntSeries") -> None:
        if self.N != other.N:
            raise ValueError(f"truncation orders differ: {self.N} vs {other.N}")

    def times_one_plus(self, n: int, times: int = 1) -> "IntSeries":
        """Multiply by (1 + hbar^n)^times."""
        c = list(self.coefficients)
        for _ in range(times):
            for i in range(self.N, n - 1, -1):
                c[i] += c[i - n]
        return IntSeries(tuple(c))

    def cumulative(self) -> "IntSeries":
        """Multiply by 1 / (1 - hbar)."""
        out, acc = [], 0
        for x in self.coefficients:
            acc += x
            out.append(acc)
        return IntSeries(tuple(out))


def partitions(N: int) -> list[int]:
    """p(0), ..., p(N) by adding one part size at a time."""
    if N < 0:
        raise ValueError("N must be non-negative")
    p = [1] + [0] * N
    for part in range(1, N + 1):
        for i in range(part, N + 1):
            p[i] += p[i - part]
    return p


RankSource = Union[RankSequence, Sequence[int], Callable[[int], int], None]


def _rank_fn(ranks: RankSource) -> Callable[[int], int]:
    if ranks is None:
        return theorem_rank
    if callable(ranks):
        return ranks
    vals = ranks.values if isinstance(ranks, RankSequence) else list(ranks)

    def fn(n: int) -> int:
        if n > len(vals):
            raise ValueError(f"rank l_{n} not available (have {len(vals)})")
        return vals[n - 1]

    return fn


def jennings_product(ranks: RankSource, N: int) -> IntSeries:
    """prod_{n=1}^{N} (1 + hbar^n)^{l_n} truncated after hbar^N.

    ``ranks`` is a RankSequence, a list with ``ranks[0] = l_1``, a function
    ``n -> l_n``, or None for the closed-form ranks.
    """
    fn = _rank_fn(ranks)
    s = IntSeries.one(N)
    for n in range(1, N + 1):
        s = s.times_one_plus(n, fn(n))
    return s


def basis_product(N: int) -> IntSeries:
    """prod (1 + hbar^deg v) over all basis vectors of degree <= N."""
    s = IntSeries.one(N)
    for v in basis_up_to(N):
        s = s.times_one_plus(degree(v))
    return s


def partition_sums(N: int) -> IntSeries:
    return IntSeries(tuple(partitions(N))).cumulative()


def closed_form_check(N: int, ranks: RankSource = None) -> bool:
    """Three-way agreement of the dimension series up to hbar^N.

    Compares the product over basis vectors, the Jennings product of
    ``ranks`` (closed-form by default) and the cumulative partition numbers.
    """
    if N < 1:
        raise ValueError("N must be positive")
    a = basis_product(N)
    b = jennings_product(ranks, N)
    c = partition_sums(N)
    return a == b == c


def growth_bound(N: int) -> list[int]:
    """Lower bounds for the ball sizes f_0..f_N: sum_{i<=n} dim(w^i / w^(i+1))."""
    if N < 0:
        raise ValueError("N must be non-negative")
    return list(partition_sums(N).cumulative().coefficients)


def hardy_ramanujan(n: int) -> float:
    """exp(pi sqrt(2n/3)), reported for comparison only."""
    return math.exp(math.pi * math.sqrt(2 * n / 3))


def series_report(N: int, ranks: RankSource = None) -> dict:
    dims = jennings_product(ranks, N)
    return {
        "N": N,
        "dims": list(dims.coefficients),
        "cumulative": list(dims.cumulative().coefficients),
        "partitionSums": list(partition_sums(N).coefficients),
        "hardyRamanujan": [hardy_ramanujan(n) for n in range(N + 1)],
    }
