"""Minimal s-expression reader and the formula codec used by certificates.

Formulas are written ``bot`` or ``(imp F G)``. Output is bit-exact:
lowercase keywords, single spaces, no trailing whitespace.
"""

from __future__ import annotations

import re
from typing import Union

from .syntax import BOT, Falsum, Formula, Imp

SExp = Union[str, list]

_TOKEN = re.compile(r"\(|\)|[^\s()]+")


class SExpError(ValueError):
    pass


def read(text: str) -> SExp:
    """Read exactly one s-expression from ``text``."""
    tokens = _TOKEN.findall(text)
    if not tokens:
        raise SExpError("empty input")
    stack: list[list] = []
    result: SExp | None = None
    for i, tok in enumerate(tokens):
        if result is not None:
            raise SExpError(f"trailing input {tok!r}")
        if tok == "(":
            stack.append([])
        elif tok == ")":
            if not stack:
                raise SExpError("unbalanced ')'")
            done = stack.pop()
            if stack:
                stack[-1].append(done)
            else:
                result = done
        elif stack:
            stack[-1].append(tok)
        else:
            result = tok
    if stack:
        raise SExpError("unbalanced '('")
    return result


def write(e: SExp) -> str:
    if isinstance(e, str):
        return e
    return "(" + " ".join(write(x) for x in e) + ")"


def formula_to_sexp(a: Formula) -> SExp:
    if isinstance(a, Falsum):
        return "bot"
    return ["imp", formula_to_sexp(a.ante), formula_to_sexp(a.cons)]


def formula_from_sexp(e: SExp) -> Formula:
    if e == "bot":
        return BOT
    if isinstance(e, list) and len(e) == 3 and e[0] == "imp":
        return Imp(formula_from_sexp(e[1]), formula_from_sexp(e[2]))
    raise SExpError(f"not a formula: {write(e)}")


def dump_formula(a: Formula) -> str:
    return write(formula_to_sexp(a))


def load_formula(text: str) -> Formula:
    return formula_from_sexp(read(text))
