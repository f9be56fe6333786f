"""The two-valued valuation of the closed fragment.

With no variables there is exactly one valuation sending ``bot`` to false,
so truth is a plain recursive function.
"""

from __future__ import annotations

from functools import lru_cache

from .syntax import Falsum, Formula, Imp


@lru_cache(maxsize=None)
def truth(a: Formula) -> bool:
    if isinstance(a, Falsum):
        return False
    return (not truth(a.ante)) or truth(a.cons)


def taut_decide(a: Formula) -> bool:
    """Boolean classifier for the tautology regulator (True means tt)."""
    return truth(a)


def semantic_equiv(a: Formula, b: Formula) -> bool:
    """Both implications between ``a`` and ``b`` are tautologies."""
    return truth(Imp(a, b)) and truth(Imp(b, a))
