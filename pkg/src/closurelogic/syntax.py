"""Formulas of the closed falsum/implication fragment.

A formula is either ``BOT`` or ``Imp(ante, cons)``; there are no variables.
Negation is the abbreviation ``neg(a) == Imp(a, BOT)``.

Surface syntax::

    F ::= 'bot' | '~' F | F '->' F | '(' F ')'

``->`` associates to the right and ``~`` binds tighter than ``->``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Union

__all__ = [
    "BOT",
    "ENUMERATION_CAP",
    "Falsum",
    "Formula",
    "Imp",
    "ParseError",
    "enumerate_formulas",
    "formulas_upto",
    "neg",
    "parse",
    "pretty",
    "size",
    "subterms",
]

ENUMERATION_CAP = 10


@dataclass(frozen=True)
class Falsum:
    def __repr__(self) -> str:
        return "BOT"


@dataclass(frozen=True)
class Imp:
    ante: "Formula"
    cons: "Formula"

    def __repr__(self) -> str:
        return f"Imp({self.ante!r}, {self.cons!r})"


Formula = Union[Falsum, Imp]

BOT = Falsum()


class ParseError(ValueError):
    """Malformed formula text. ``pos`` is the 0-based character offset."""

    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} at position {pos}")
        self.pos = pos


def neg(a: Formula) -> Formula:
    return Imp(a, BOT)


@lru_cache(maxsize=None)
def size(a: Formula) -> int:
    """Number of implication nodes."""
    if isinstance(a, Falsum):
        return 0
    return 1 + size(a.ante) + size(a.cons)


def subterms(a: Formula) -> Iterator[Formula]:
    """Yield ``a`` and all of its subterms, pre-order (duplicates included)."""
    stack = [a]
    while stack:
        f = stack.pop()
        yield f
        if isinstance(f, Imp):
            stack.append(f.cons)
            stack.append(f.ante)


# -- text ------------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(bot)|(->)|(~)|(\()|(\)))")


def _tokenize(text: str) -> list[tuple[str, int]]:
    tokens = []
    pos = 0
    n = len(text)
    while pos < n:
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if m is None:
            start = pos + (len(text[pos:]) - len(text[pos:].lstrip()))
            raise ParseError(f"unexpected character {text[start]!r}", start)
        kind = m.lastindex
        tokens.append((m.group(kind), m.start(kind)))
        pos = m.end()
    tokens.append(("<end>", n))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self) -> tuple[str, int]:
        return self.tokens[self.i]

    def take(self, expected: str | None = None) -> tuple[str, int]:
        tok = self.tokens[self.i]
        if expected is not None and tok[0] != expected:
            raise ParseError(f"expected {expected!r}, found {tok[0]!r}", tok[1])
        self.i += 1
        return tok

    def formula(self) -> Formula:
        left = self.unary()
        if self.peek()[0] == "->":
            self.take()
            return Imp(left, self.formula())
        return left

    def unary(self) -> Formula:
        tok, pos = self.peek()
        if tok == "~":
            self.take()
            return neg(self.unary())
        if tok == "bot":
            self.take()
            return BOT
        if tok == "(":
            self.take()
            inner = self.formula()
            self.take(")")
            return inner
        raise ParseError(f"expected formula, found {tok!r}", pos)


def parse(text: str) -> Formula:
    """Parse surface syntax; ``~F`` is expanded to ``F -> bot``."""
    p = _Parser(text)
    f = p.formula()
    tok, pos = p.peek()
    if tok != "<end>":
        raise ParseError(f"trailing input {tok!r}", pos)
    return f


def pretty(a: Formula) -> str:
    """Canonical text: minimal parentheses, no ``~`` sugar."""
    if isinstance(a, Falsum):
        return "bot"
    left = pretty(a.ante)
    if isinstance(a.ante, Imp):
        left = f"({left})"
    return f"{left} -> {pretty(a.cons)}"


# -- enumeration -----------------------------------------------------------

@lru_cache(maxsize=None)
def _enumerate(n: int) -> tuple[Formula, ...]:
    if n == 0:
        return (BOT,)
    out = []
    for k in range(n):
        for a in _enumerate(k):
            for b in _enumerate(n - 1 - k):
                out.append(Imp(a, b))
    return tuple(out)


def enumerate_formulas(n: int, cap: int = ENUMERATION_CAP) -> tuple[Formula, ...]:
    """Every formula with exactly ``n`` implication nodes, each once.

    Order: antecedent size ascending, then antecedent order, then consequent
    order.
    """
    if n < 0:
        raise ValueError("size must be non-negative")
    if n > cap:
        raise ValueError(f"enumeration size {n} exceeds cap {cap}")
    return _enumerate(n)


def formulas_upto(n: int, cap: int = ENUMERATION_CAP) -> tuple[Formula, ...]:
    """All formulas of size ``<= n``, smallest sizes first."""
    out: list[Formula] = []
    for k in range(n + 1):
        out.extend(enumerate_formulas(k, cap))
    return tuple(out)
