"""Closure predicates on the closed falsum/implication fragment.

Formulas, a K/S proof kernel, regulators with decidable acceptance,
evaluation frames and the collapse certificates that tie them together.
"""

from .syntax import BOT, Falsum, Formula, Imp, neg, parse, pretty, size

__version__ = "0.1.0"

__all__ = ["BOT", "Falsum", "Formula", "Imp", "neg", "parse", "pretty", "size"]
