"""Hilbert-style certificates over the K and S schemata with modus ponens.

A certificate is a tree whose conclusion is recomputed by :func:`conclusion`.
The kernel has no ex-falso and no classical axiom; on the closed fragment K
and S already suffice (see :func:`synth`).

Theories and contexts are plain sequences of formulas, indexed from zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence, Union

from . import sexp
from .semantics import truth
from .syntax import BOT, Falsum, Formula, Imp, neg

__all__ = [
    "Ax",
    "CheckResult",
    "Hyp",
    "Mp",
    "NegWitness",
    "PosWitness",
    "Proof",
    "ProofError",
    "SchemaK",
    "SchemaS",
    "check",
    "conclusion",
    "deduction",
    "dump_proof",
    "identity",
    "load_proof",
    "proof_size",
    "reductio",
    "synth",
    "uses_hyp",
    "witness_conclusions",
]


@dataclass(frozen=True)
class SchemaK:
    """``a -> (b -> a)``"""
    a: Formula
    b: Formula


@dataclass(frozen=True)
class SchemaS:
    """``(a -> (b -> c)) -> ((a -> b) -> (a -> c))``"""
    a: Formula
    b: Formula
    c: Formula


@dataclass(frozen=True)
class Ax:
    index: int


@dataclass(frozen=True)
class Hyp:
    index: int


@dataclass(frozen=True)
class Mp:
    major: "Proof"
    minor: "Proof"


Proof = Union[SchemaK, SchemaS, Ax, Hyp, Mp]


class ProofError(ValueError):
    pass


def conclusion(p: Proof, theory: Sequence[Formula] = (),
               context: Sequence[Formula] = ()) -> Formula:
    """Recompute what ``p`` proves, raising :class:`ProofError` if it is ill-formed."""
    return _conclusion(p, theory, context, {})


def _conclusion(p, theory, context, memo) -> Formula:
    key = id(p)
    if key in memo:
        return memo[key][1]
    if isinstance(p, SchemaK):
        out = Imp(p.a, Imp(p.b, p.a))
    elif isinstance(p, SchemaS):
        a, b, c = p.a, p.b, p.c
        out = Imp(Imp(a, Imp(b, c)), Imp(Imp(a, b), Imp(a, c)))
    elif isinstance(p, Ax):
        if not 0 <= p.index < len(theory):
            raise ProofError(f"axiom index {p.index} out of range ({len(theory)} axioms)")
        out = theory[p.index]
    elif isinstance(p, Hyp):
        if not 0 <= p.index < len(context):
            raise ProofError(f"hypothesis index {p.index} out of range ({len(context)} hypotheses)")
        out = context[p.index]
    elif isinstance(p, Mp):
        major = _conclusion(p.major, theory, context, memo)
        minor = _conclusion(p.minor, theory, context, memo)
        if not (isinstance(major, Imp) and major.ante == minor):
            raise ProofError(
                "modus ponens mismatch: major "
                f"{sexp.dump_formula(major)} does not apply to minor {sexp.dump_formula(minor)}")
        out = major.cons
    else:
        raise ProofError(f"not a proof node: {p!r}")
    # keep p alive so its id is not reused while memo lives
    memo[key] = (p, out)
    return out


@dataclass(frozen=True)
class CheckResult:
    accepted: bool
    reason: str = ""

    def __bool__(self) -> bool:
        return self.accepted

    def __str__(self) -> str:
        return "accept" if self.accepted else f"reject: {self.reason}"


def check(p: Proof, theory: Sequence[Formula], context: Sequence[Formula],
          goal: Formula) -> CheckResult:
    try:
        got = conclusion(p, theory, context)
    except ProofError as e:
        return CheckResult(False, str(e))
    if got != goal:
        return CheckResult(False, f"wrong conclusion: proved {sexp.dump_formula(got)}")
    return CheckResult(True)


def proof_size(p: Proof) -> int:
    n = 0
    stack = [p]
    while stack:
        q = stack.pop()
        n += 1
        if isinstance(q, Mp):
            stack.append(q.major)
            stack.append(q.minor)
    return n


def uses_hyp(p: Proof, index: int) -> bool:
    stack = [p]
    while stack:
        q = stack.pop()
        if isinstance(q, Hyp) and q.index == index:
            return True
        if isinstance(q, Mp):
            stack.append(q.major)
            stack.append(q.minor)
    return False


def identity(a: Formula) -> Proof:
    """The S K K derivation of ``a -> a``."""
    aa = Imp(a, a)
    return Mp(Mp(SchemaS(a, aa, a), SchemaK(a, aa)), SchemaK(a, a))


# -- transformers ------------------------------------------------------------

def deduction(p: Proof, theory: Sequence[Formula] = (),
              context: Sequence[Formula] = ()) -> Proof:
    """Discharge the last hypothesis by bracket abstraction.

    If ``p`` proves ``B`` under ``context = [..., A]``, the result proves
    ``A -> B`` under ``context[:-1]``.
    """
    if not context:
        raise ProofError("empty context: nothing to discharge")
    memo: dict = {}
    _conclusion(p, theory, context, memo)
    a = context[-1]
    h = len(context) - 1

    def concl(q):
        return _conclusion(q, theory, context, memo)

    def abstract(q: Proof) -> Proof:
        if isinstance(q, Hyp) and q.index == h:
            return identity(a)
        if not uses_hyp(q, h):
            return Mp(SchemaK(concl(q), a), q)
        x = concl(q.minor)
        y = concl(q)
        return Mp(Mp(SchemaS(a, x, y), abstract(q.major)), abstract(q.minor))

    return abstract(p)


def reductio(p: Proof, theory: Sequence[Formula] = (),
             context: Sequence[Formula] = ()) -> Proof:
    """From ``context, A |- bot`` build ``context |- A -> bot``."""
    if not context:
        raise ProofError("empty context: nothing to discharge")
    if conclusion(p, theory, context) != BOT:
        raise ProofError("conclusion is not falsum")
    return deduction(p, theory, context)


# -- synthesis ---------------------------------------------------------------

@dataclass(frozen=True)
class PosWitness:
    proof: Proof

    positive = True


@dataclass(frozen=True)
class NegWitness:
    """``refute`` proves ``a -> bot``; ``embed`` proves ``bot -> a``."""
    refute: Proof
    embed: Proof

    positive = False


@lru_cache(maxsize=None)
def synth(a: Formula) -> Union[PosWitness, NegWitness]:
    """Closed proof of ``a`` when true, else closed proofs of ``~a`` and ``bot -> a``.

    Every proof is checkable under an empty theory and context.
    """
    if isinstance(a, Falsum):
        i = identity(BOT)
        return NegWitness(i, i)
    x, y = a.ante, a.cons
    wy = synth(y)
    if isinstance(wy, PosWitness):
        return PosWitness(Mp(SchemaK(y, x), wy.proof))
    wx = synth(x)
    if isinstance(wx, PosWitness):
        # [x -> y] |- bot, by ~y applied to (hyp applied to x)
        ctx = (a,)
        refute = deduction(Mp(wy.refute, Mp(Hyp(0), wx.proof)), (), ctx)
        # [bot] |- x -> y, by K-lifting (bot -> y) applied to hyp
        embed = deduction(Mp(SchemaK(y, x), Mp(wy.embed, Hyp(0))), (), (BOT,))
        return NegWitness(refute, embed)
    # [x] |- y, by (bot -> y) applied to (~x applied to hyp)
    body = Mp(wy.embed, Mp(wx.refute, Hyp(0)))
    return PosWitness(deduction(body, (), (x,)))


def witness_conclusions(a: Formula) -> tuple[Formula, ...]:
    """Formulas the synthesized witness for ``a`` is meant to prove."""
    if truth(a):
        return (a,)
    return (neg(a), Imp(BOT, a))


# -- certificate text ----------------------------------------------------------

def proof_to_sexp(p: Proof) -> sexp.SExp:
    f = sexp.formula_to_sexp
    if isinstance(p, SchemaK):
        return ["k", f(p.a), f(p.b)]
    if isinstance(p, SchemaS):
        return ["s", f(p.a), f(p.b), f(p.c)]
    if isinstance(p, Ax):
        return ["ax", str(p.index)]
    if isinstance(p, Hyp):
        return ["hyp", str(p.index)]
    return ["mp", proof_to_sexp(p.major), proof_to_sexp(p.minor)]


def proof_from_sexp(e: sexp.SExp) -> Proof:
    if not isinstance(e, list) or not e or not isinstance(e[0], str):
        raise sexp.SExpError(f"not a proof: {sexp.write(e)}")
    head, args = e[0], e[1:]
    f = sexp.formula_from_sexp
    if head == "k" and len(args) == 2:
        return SchemaK(f(args[0]), f(args[1]))
    if head == "s" and len(args) == 3:
        return SchemaS(f(args[0]), f(args[1]), f(args[2]))
    if head in ("ax", "hyp") and len(args) == 1 and isinstance(args[0], str) \
            and args[0].isdigit():
        return (Ax if head == "ax" else Hyp)(int(args[0]))
    if head == "mp" and len(args) == 2:
        return Mp(proof_from_sexp(args[0]), proof_from_sexp(args[1]))
    raise sexp.SExpError(f"not a proof: {sexp.write(e)}")


def dump_proof(p: Proof) -> str:
    return sexp.write(proof_to_sexp(p))


def load_proof(text: str) -> Proof:
    return proof_from_sexp(sexp.read(text))
