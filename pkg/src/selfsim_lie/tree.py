"""Automorphisms of the binary rooted tree generated by tau and mu.

Elements are freely reduced words over the alphabet ``t T m M`` (``T`` is
tau inverse, ``M`` is mu inverse).  The group acts on the right: in a product
``gh`` the element ``g`` acts first.  The generators decompose as

    tau = (1, tau) eps        mu = (1, mu^-1) eps

so every symbol swaps the root and contributes exactly one symbol to exactly
one of the two sections.  Equality is decided by a coinductive walk over
section words (see :func:`is_identity`).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Optional, Sequence, Tuple

import numpy as np

from .errors import DomainError

INVERSE = str.maketrans("tTmM", "TtMm")
# tau sections keep their symbol, mu sections invert it.
_SECTION_MAP = str.maketrans("mM", "Mm")
_NABLA_SUB = {"t": "tt", "T": "TT", "m": "MM", "M": "mm"}
_NUMPY_THRESHOLD = 256

# A term (x, y, s) stands for the conjugate ([x, tau]^s)^y; x and y are words.
Term = Tuple[str, str, int]


def reduce_word(word: str) -> str:
    out: list[str] = []
    for ch in word:
        if out and out[-1] == ch.swapcase():
            out.pop()
        else:
            out.append(ch)
    return "".join(out)


def invert_word(word: str) -> str:
    return word[::-1].translate(INVERSE)


def _sections_py(word: str) -> tuple[str, str]:
    s0: list[str] = []
    s1: list[str] = []
    for i, ch in enumerate(word):
        # at even positions the path from 0 reads letter 0: only T, M act there
        if ch.isupper() != bool(i & 1):
            s0.append(ch)
        else:
            s1.append(ch)
    return "".join(s0).translate(_SECTION_MAP), "".join(s1).translate(_SECTION_MAP)


def _sections_np(word: str) -> tuple[str, str]:
    arr = np.frombuffer(word.encode("ascii"), dtype=np.uint8)
    upper = arr < 97
    odd = (np.arange(arr.size) & 1).astype(bool)
    mask0 = upper != odd
    s0 = arr[mask0].tobytes().decode("ascii")
    s1 = arr[~mask0].tobytes().decode("ascii")
    return s0.translate(_SECTION_MAP), s1.translate(_SECTION_MAP)


def raw_sections(word: str) -> tuple[str, str]:
    """Unreduced sections at 0 and 1; their lengths sum to ``len(word)``."""
    if len(word) >= _NUMPY_THRESHOLD:
        return _sections_np(word)
    return _sections_py(word)


def sections(word: str) -> tuple[str, str]:
    s0, s1 = raw_sections(word)
    return reduce_word(s0), reduce_word(s1)


_PROVED_TRIVIAL: set[str] = set()
_PROVED_CACHE_LIMIT = 200_000


def is_identity(word: str, use_cache: bool = True) -> bool:
    """Decide whether a reduced word acts trivially on the whole tree.

    Words met during the walk are assumed trivial; the assumption set is a
    bisimulation once every reachable word has even length, which proves
    triviality.  Section words never exceed the parent length, so the walk is
    finite.
    """
    if not word:
        return True
    if use_cache and word in _PROVED_TRIVIAL:
        return True
    assumed = {word}
    stack = [word]
    while stack:
        u = stack.pop()
        if len(u) & 1:
            return False
        for s in sections(u):
            if s and s not in assumed and not (use_cache and s in _PROVED_TRIVIAL):
                assumed.add(s)
                stack.append(s)
    if use_cache:
        if len(_PROVED_TRIVIAL) + len(assumed) > _PROVED_CACHE_LIMIT:
            _PROVED_TRIVIAL.clear()
        _PROVED_TRIVIAL.update(assumed)
    return True


def _power_word(sym: str, k: int) -> str:
    if k >= 0:
        return sym * k
    return sym.swapcase() * (-k)


def _nabla_word(word: str) -> str:
    return "".join(_NABLA_SUB[ch] for ch in word)


def _term_word(term: Term) -> str:
    x, y, s = term
    comm = invert_word(x) + "T" + x + "t"
    if s < 0:
        comm = invert_word(comm)
    return invert_word(y) + comm + y


def _rs_terms(word: str) -> tuple[Term, ...]:
    """Rewrite a word with zero exponent sums as a product of terms.

    Reidemeister-Schreier with transversal tau^a mu^b: a ``t`` read at prefix
    exponents (a, b) contributes ([mu^-b, tau]^-1)^(tau^(-a-1)) and a ``T``
    contributes the inverse of the term for (a-1, b).
    """
    terms: list[Term] = []
    a = b = 0
    for ch in word:
        if ch == "t":
            if b:
                terms.append((_power_word("m", -b), _power_word("t", -a - 1), -1))
            a += 1
        elif ch == "T":
            if b:
                terms.append((_power_word("m", -b), _power_word("t", -a), 1))
            a -= 1
        elif ch == "m":
            b += 1
        else:
            b -= 1
    return tuple(terms)


@dataclass(frozen=True)
class TreeElement:
    """An element of the group, stored as a freely reduced generator word.

    ``terms`` optionally records a factorisation into conjugates of
    commutators with tau; it only speeds up :func:`delta` and is ignored by
    equality and hashing.
    """

    word: str = ""
    terms: Optional[Tuple[Term, ...]] = field(default=None, compare=False, repr=False)

    @classmethod
    def from_word(cls, word: str, terms: Optional[Sequence[Term]] = None) -> "TreeElement":
        bad = set(word) - set("tTmM")
        if bad:
            raise ValueError(f"unknown generator symbols {sorted(bad)}")
        return cls(reduce_word(word), None if terms is None else tuple(terms))

    @property
    def root_swap(self) -> int:
        return len(self.word) & 1

    @cached_property
    def _sections(self) -> tuple["TreeElement", "TreeElement"]:
        s0, s1 = sections(self.word)
        return TreeElement(s0), TreeElement(s1)

    def section(self, x: int) -> "TreeElement":
        return self._sections[x]

    def section_at(self, vertex: str) -> "TreeElement":
        g = self
        for letter in vertex:
            g = g.section(int(letter))
        return g

    def is_identity(self) -> bool:
        return is_identity(self.word)

    def __mul__(self, other: "TreeElement") -> "TreeElement":
        return multiply(self, other)

    def __invert__(self) -> "TreeElement":
        return inverse(self)

    def __pow__(self, k: int) -> "TreeElement":
        return power(self, k)

    def __len__(self) -> int:
        return len(self.word)

    def __str__(self) -> str:
        return self.word or "1"


IDENTITY = TreeElement("")
TAU = TreeElement("t")
MU = TreeElement("m")


@dataclass(frozen=True)
class WreathTriple:
    e: int
    g0: TreeElement
    g1: TreeElement


def multiply(a: TreeElement, b: TreeElement) -> TreeElement:
    return TreeElement(reduce_word(a.word + b.word))


def inverse(a: TreeElement) -> TreeElement:
    terms = None
    if a.terms is not None:
        terms = tuple((x, y, -s) for (x, y, s) in reversed(a.terms))
    return TreeElement(invert_word(a.word), terms)


def power(a: TreeElement, k: int) -> TreeElement:
    if k < 0:
        return power(inverse(a), -k)
    result, base = IDENTITY, a
    while k:
        if k & 1:
            result = multiply(result, base)
        k >>= 1
        if k:
            base = multiply(base, base)
    return result


def product(elements: Iterable[TreeElement]) -> TreeElement:
    return TreeElement(reduce_word("".join(g.word for g in elements)))


def commutator(a: TreeElement, b: TreeElement) -> TreeElement:
    """[a, b] = a^-1 b^-1 a b."""
    return TreeElement(reduce_word(invert_word(a.word) + invert_word(b.word) + a.word + b.word))


def conjugate(a: TreeElement, b: TreeElement) -> TreeElement:
    """a^b = b^-1 a b."""
    return TreeElement(reduce_word(invert_word(b.word) + a.word + b.word))


# Action of a single symbol: (section at letter 0, section at letter 1);
# every symbol swaps the root.
_SYMBOL_SECTIONS = {"t": ("", "t"), "T": ("T", ""), "m": ("", "M"), "M": ("m", "")}


def _apply_symbol(sym: str, letters: list[int]) -> None:
    cur = sym
    for i, x in enumerate(letters):
        letters[i] = 1 - x
        cur = _SYMBOL_SECTIONS[cur][x]
        if not cur:
            return


def apply(g: TreeElement, w: str) -> str:
    """Image of the vertex ``w`` (a string of 0/1) under ``g``."""
    letters = [int(ch) for ch in w]
    if letters:
        for sym in g.word:
            _apply_symbol(sym, letters)
    return "".join(map(str, letters))


def wreath(g: TreeElement) -> WreathTriple:
    return WreathTriple(g.root_swap, g.section(0), g.section(1))


def equals(a: TreeElement, b: TreeElement) -> bool:
    if a.word == b.word:
        return True
    return is_identity(reduce_word(a.word + invert_word(b.word)))


def abelianization(g: TreeElement) -> tuple[int, int]:
    w = g.word
    return w.count("t") - w.count("T"), w.count("m") - w.count("M")


def in_derived_subgroup(g: TreeElement) -> bool:
    return abelianization(g) == (0, 0)


def _require_derived(g: TreeElement, name: str) -> None:
    if not in_derived_subgroup(g):
        raise DomainError(
            f"{name} is only defined on the derived subgroup; "
            f"{g} abelianizes to {abelianization(g)}"
        )


def gamma_prime_terms(g: TreeElement) -> tuple[Term, ...]:
    _require_derived(g, "term decomposition")
    if g.terms is not None:
        return g.terms
    return _rs_terms(g.word)


def delta(g: TreeElement) -> TreeElement:
    """The element (g, 1), for g in the derived subgroup.

    Uses [nabla(x), tau] = ([x, tau], 1) and (z^y, 1) = (z, 1)^nabla(y).
    """
    _require_derived(g, "delta")
    terms = tuple((_nabla_word(x), _nabla_word(y), s) for (x, y, s) in gamma_prime_terms(g))
    return TreeElement(reduce_word("".join(_term_word(t) for t in terms)), terms)


def nabla_any(g: TreeElement) -> TreeElement:
    """The element (g, g); defined on the whole group by tau -> tau^2, mu -> mu^-2."""
    terms = None
    if g.terms is not None:
        split: list[Term] = []
        for x, y, s in g.terms:
            nx, ny = _nabla_word(x), _nabla_word(y)
            # [a, tau^2] = [a, tau] [a, tau]^tau
            pair = [(nx, ny, s), (nx, reduce_word("t" + ny), s)]
            split.extend(pair if s > 0 else pair[::-1])
        terms = tuple(split)
    return TreeElement(_nabla_word(g.word), terms)


def nabla(g: TreeElement) -> TreeElement:
    """The element (g, g), for g in the derived subgroup."""
    _require_derived(g, "nabla")
    return nabla_any(g)


def right_embed(g: TreeElement) -> TreeElement:
    """The element (1, g) = delta(g)^tau, for g in the derived subgroup."""
    return conjugate(delta(g), TAU)


def certify_wreath(g: TreeElement, e: int, g0: TreeElement, g1: TreeElement) -> bool:
    """Check that ``g`` has wreath form (g0, g1) eps^e exactly."""
    return g.root_swap == e and equals(g.section(0), g0) and equals(g.section(1), g1)


def random_word(rng, max_len: int) -> TreeElement:
    n = rng.randint(0, max_len)
    return TreeElement(reduce_word("".join(rng.choice("tTmM") for _ in range(n))))


C = commutator(TAU, MU)
