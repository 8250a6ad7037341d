"""A small expression language for group elements.

Grammar::

    expr    := term+                      juxtaposition is multiplication
    term    := atom postfix*
    postfix := '^' signed-int             power ('^-1' is the inverse)
             | '^' '(' expr ')'           conjugation x^y = y^-1 x y
    atom    := 't' | 'm' | 'c' | '(' expr ')' | '[' expr ',' expr ']'
             | 'D(' expr ')' | 'N(' expr ')'

Whitespace is ignored between tokens.  Exponents are nonzero with
absolute value at most 2^20.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .errors import ExprSyntaxError
from .tree import (
    C,
    MU,
    TAU,
    TreeElement,
    commutator,
    conjugate,
    delta,
    inverse,
    nabla,
    power,
    product,
)

MAX_EXPONENT = 1 << 20


@dataclass(frozen=True)
class Gen:
    name: str  # "t" or "m"


@dataclass(frozen=True)
class Const:
    name: str  # "c"


@dataclass(frozen=True)
class Inverse:
    arg: "Expr"


@dataclass(frozen=True)
class Power:
    base: "Expr"
    exponent: int


@dataclass(frozen=True)
class Product:
    factors: tuple["Expr", ...]


@dataclass(frozen=True)
class Commutator:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Conjugate:
    base: "Expr"
    by: "Expr"


@dataclass(frozen=True)
class Delta:
    arg: "Expr"


@dataclass(frozen=True)
class Nabla:
    arg: "Expr"


Expr = Union[Gen, Const, Inverse, Power, Product, Commutator, Conjugate, Delta, Nabla]


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, msg: str, pos: int | None = None) -> ExprSyntaxError:
        return ExprSyntaxError(msg, self.text, self.pos if pos is None else pos)

    def skip(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str) -> None:
        if self.peek() != ch:
            found = self.peek() or "end of input"
            raise self.error(f"expected {ch!r}, found {found!r}")
        self.pos += 1

    def parse(self) -> Expr:
        e = self.expr()
        if self.peek():
            raise self.error(f"unexpected {self.peek()!r}")
        return e

    def expr(self) -> Expr:
        factors = [self.term()]
        while self.peek() and self.peek() in "tmcDN([":
            factors.append(self.term())
        return factors[0] if len(factors) == 1 else Product(tuple(factors))

    def term(self) -> Expr:
        e = self.atom()
        while self.peek() == "^":
            self.pos += 1
            if self.peek() == "(":
                self.pos += 1
                by = self.expr()
                self.expect(")")
                e = Conjugate(e, by)
            else:
                k = self.integer()
                e = Inverse(e) if k == -1 else Power(e, k)
        return e

    def integer(self) -> int:
        self.skip()
        start = self.pos
        if self.pos < len(self.text) and self.text[self.pos] in "+-":
            self.pos += 1
        digits = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == digits:
            raise self.error("expected an integer exponent or '('")
        k = int(self.text[start:self.pos])
        if k == 0:
            raise self.error("exponent 0 is not allowed", start)
        if abs(k) > MAX_EXPONENT:
            raise self.error("exponent exceeds 2^20 in absolute value", start)
        return k

    def atom(self) -> Expr:
        ch = self.peek()
        if ch in ("t", "m"):
            self.pos += 1
            return Gen(ch)
        if ch == "c":
            self.pos += 1
            return Const("c")
        if ch == "(":
            self.pos += 1
            e = self.expr()
            self.expect(")")
            return e
        if ch == "[":
            self.pos += 1
            a = self.expr()
            self.expect(",")
            b = self.expr()
            self.expect("]")
            return Commutator(a, b)
        if ch in ("D", "N"):
            self.pos += 1
            self.expect("(")
            a = self.expr()
            self.expect(")")
            return Delta(a) if ch == "D" else Nabla(a)
        if not ch:
            raise self.error("unexpected end of input")
        raise self.error(f"unexpected {ch!r}")


def parse(text: str) -> Expr:
    return _Parser(text).parse()


def unparse(e: Expr) -> str:
    if isinstance(e, Gen):
        return e.name
    if isinstance(e, Const):
        return e.name
    if isinstance(e, Product):
        return " ".join(f"({unparse(f)})" if isinstance(f, Product) else unparse(f) for f in e.factors)
    if isinstance(e, Commutator):
        return f"[{unparse(e.left)},{unparse(e.right)}]"
    if isinstance(e, Delta):
        return f"D({unparse(e.arg)})"
    if isinstance(e, Nabla):
        return f"N({unparse(e.arg)})"
    if isinstance(e, Inverse):
        return f"{_base(e.arg)}^-1"
    if isinstance(e, Power):
        return f"{_base(e.base)}^{e.exponent}"
    if isinstance(e, Conjugate):
        return f"{_base(e.base)}^({unparse(e.by)})"
    raise TypeError(f"not an expression node: {e!r}")


def _base(e: Expr) -> str:
    s = unparse(e)
    return f"({s})" if isinstance(e, Product) else s


def evaluate(e: Expr) -> TreeElement:
    """The element named by ``e``; raises DomainError for D/N outside the
    derived subgroup."""
    if isinstance(e, Gen):
        return TAU if e.name == "t" else MU
    if isinstance(e, Const):
        return C
    if isinstance(e, Product):
        return product(evaluate(f) for f in e.factors)
    if isinstance(e, Inverse):
        return inverse(evaluate(e.arg))
    if isinstance(e, Power):
        return power(evaluate(e.base), e.exponent)
    if isinstance(e, Commutator):
        return commutator(evaluate(e.left), evaluate(e.right))
    if isinstance(e, Conjugate):
        return conjugate(evaluate(e.base), evaluate(e.by))
    if isinstance(e, Delta):
        return delta(evaluate(e.arg))
    if isinstance(e, Nabla):
        return nabla(evaluate(e.arg))
    raise TypeError(f"not an expression node: {e!r}")


def element(text: str) -> TreeElement:
    return evaluate(parse(text))
