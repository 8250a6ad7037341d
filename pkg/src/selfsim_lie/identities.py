"""Catalogue of exact group identities, each checked with :func:`equals`.

Families:

* ``wreath_c``: c = ((mu tau)^-1, mu tau).
* ``mu_power``: [mu^(2^n), tau] = delta^n(c)^((-1)^n), as printed; this holds
  only modulo higher degree (it already fails at n = 0, where [mu, tau] = c^-1).
* ``mu_power_exact``: [mu^(2^n), tau] = delta^n([mu^((-1)^n), tau]).
* ``nabla_tau``: [nabla^n(c), tau] = delta^(n+1)(c^(-tau^-1 mu^-2)) delta^n(c)^-2.
* ``nabla_delta_tau``: [nabla^n delta W(c), tau] = delta^n nabla W(c) delta^(n+1) W(c)^-2.
* ``mu_side``: the commutators of W(c) and of tau^(2^n) with mu, obtained by
  unrolling the rules

      [c, mu]          = c^-2 delta(c^(-mu^-1))
      [c, mu^-1]       = c^-2 rho(c^(-tau^-1 mu^-1))
      [nabla x, mu]    = delta([x, mu^-1])
      [nabla x, mu^-1] = rho([x, mu])
      [delta y, mu]    = nabla(y) delta(y)^-2
      [delta y, mu^-1] = delta(y)^-1 rho(y^mu)
      [tau, mu^-1]     = direct

  where rho(g) = (1, g).  Since nabla(tau) = tau^2 the nabla rules also cover
  tau^(2^n).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as iproduct
from typing import Callable, Iterator

from .tree import (
    C,
    MU,
    TAU,
    TreeElement,
    commutator,
    conjugate,
    delta,
    equals,
    inverse,
    multiply,
    nabla,
    nabla_any,
    power,
    right_embed,
)


@dataclass(frozen=True)
class Identity:
    family: str
    name: str
    lhs: TreeElement
    rhs: TreeElement
    exact_in_source: bool = True  # False for the printed form known to hold only up to higher degree

    def holds(self) -> bool:
        return equals(self.lhs, self.rhs)


def _iterate(f: Callable[[TreeElement], TreeElement], g: TreeElement, n: int) -> TreeElement:
    for _ in range(n):
        g = f(g)
    return g


def apply_word(word: str, g: TreeElement = C) -> TreeElement:
    """W(g) for W over D/N, outermost symbol first."""
    for s in reversed(word):
        g = delta(g) if s == "D" else nabla(g)
    return g


def _word_label(word: str) -> str:
    return "".join("∂" if s == "D" else "∇" for s in word)


def wreath_c() -> list[Identity]:
    # the root swap of c is 0 by word parity; the sections are the content
    mt = multiply(MU, TAU)
    return [
        Identity("wreath_c", "c_0 = (μτ)^-1", C.section(0), inverse(mt)),
        Identity("wreath_c", "c_1 = μτ", C.section(1), mt),
    ]


def mu_power(max_n: int = 4) -> list[Identity]:
    out = []
    for n in range(1, max_n + 1):
        lhs = commutator(power(MU, 1 << n), TAU)
        rhs = power(_iterate(delta, C, n), (-1) ** n)
        out.append(Identity("mu_power", f"[μ^{1 << n},τ] = ∂^{n}(c)^{(-1) ** n}", lhs, rhs, False))
    return out


def mu_power_exact(max_n: int = 4) -> list[Identity]:
    out = []
    for n in range(0, max_n + 1):
        lhs = commutator(power(MU, 1 << n), TAU)
        rhs = _iterate(delta, commutator(power(MU, (-1) ** n), TAU), n)
        out.append(Identity("mu_power_exact", f"[μ^{1 << n},τ] = ∂^{n}([μ^{(-1) ** n},τ])", lhs, rhs))
    return out


def nabla_tau(max_n: int = 3) -> list[Identity]:
    # c^(-tau^-1 mu^-2) = (c^-1)^(tau^-1 mu^-2)
    y = conjugate(inverse(C), TreeElement.from_word("TMM"))
    out = []
    for n in range(0, max_n + 1):
        lhs = commutator(_iterate(nabla, C, n), TAU)
        dn = _iterate(delta, C, n)
        rhs = multiply(_iterate(delta, y, n + 1), power(dn, -2))
        out.append(Identity("nabla_tau", f"[∇^{n}(c),τ] = ∂^{n + 1}(c^-τ⁻¹μ⁻²)·∂^{n}(c)^-2", lhs, rhs))
    return out


def words_up_to(max_len: int) -> Iterator[str]:
    for m in range(max_len + 1):
        for w in iproduct("DN", repeat=m):
            yield "".join(w)


def nabla_delta_tau(max_n: int = 2, max_w: int = 2) -> list[Identity]:
    out = []
    for w in words_up_to(max_w):
        wc = apply_word(w)
        for n in range(0, max_n + 1):
            lhs = commutator(apply_word("N" * n + "D" + w), TAU)
            rhs = multiply(apply_word("D" * n + "N" + w), power(apply_word("D" * (n + 1), wc), -2))
            lw = _word_label(w)
            out.append(
                Identity("nabla_delta_tau", f"[∇^{n}∂{lw}(c),τ] = ∂^{n}∇{lw}(c)·∂^{n + 1}{lw}(c)^-2", lhs, rhs)
            )
    return out


def mu_commutator_rhs(word: str, sign: int) -> TreeElement:
    """Right-hand side for [W(c), mu^sign] built from the mu-side rules."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    if not word:
        if sign > 0:
            return multiply(power(C, -2), delta(conjugate(inverse(C), TreeElement.from_word("M"))))
        return multiply(power(C, -2), right_embed(conjugate(inverse(C), TreeElement.from_word("TM"))))
    head, rest = word[0], word[1:]
    if head == "N":
        inner = mu_commutator_rhs(rest, -sign)
        return delta(inner) if sign > 0 else right_embed(inner)
    y = apply_word(rest)
    if sign > 0:
        return multiply(nabla(y), power(delta(y), -2))
    return multiply(inverse(delta(y)), right_embed(conjugate(y, MU)))


def tau_power_mu_rhs(n: int, sign: int) -> TreeElement:
    """Right-hand side for [tau^(2^n), mu^sign] via nabla(tau) = tau^2."""
    if n == 0:
        return commutator(TAU, power(MU, sign))
    inner = tau_power_mu_rhs(n - 1, -sign)
    return delta(inner) if sign > 0 else right_embed(inner)


def mu_side(max_n: int = 3, max_w: int = 2) -> list[Identity]:
    out = []
    for sign in (1, -1):
        m = power(MU, sign)
        ms = "μ" if sign > 0 else "μ^-1"
        for n in range(0, max_n + 1):
            w = "N" * n
            out.append(Identity("mu_side", f"[∇^{n}(c),{ms}]", commutator(apply_word(w), m), mu_commutator_rhs(w, sign)))
        for w in words_up_to(max_w):
            for n in range(0, min(max_n, 2) + 1):
                full = "N" * n + "D" + w
                out.append(
                    Identity(
                        "mu_side",
                        f"[∇^{n}∂{_word_label(w)}(c),{ms}]",
                        commutator(apply_word(full), m),
                        mu_commutator_rhs(full, sign),
                    )
                )
        for n in range(1, max_n + 1):
            out.append(
                Identity(
                    "mu_side",
                    f"[τ^{1 << n},{ms}]",
                    commutator(nabla_any(_iterate(nabla_any, TAU, n - 1)), m),
                    tau_power_mu_rhs(n, sign),
                )
            )
    return out


FAMILIES = {
    "wreath_c": wreath_c,
    "mu_power": mu_power,
    "mu_power_exact": mu_power_exact,
    "nabla_tau": nabla_tau,
    "nabla_delta_tau": nabla_delta_tau,
    "mu_side": mu_side,
}


def catalogue() -> list[Identity]:
    return [idn for f in FAMILIES.values() for idn in f()]
