"""Evaluation frames over bounded code spaces, and diagonal fixed points.

A frame pairs ``eval : Code x Code -> Formula`` (codes are ``0..code_bound``)
with the regulator against which it claims representation. Only the diagonal
behaviour ``x -> g(eval(x, x))`` is ever searched for: if some code ``c``
represents it up to the regulator's equivalence, self-application at ``c``
gives ``b = eval(c, c)`` equivalent to ``g(b)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .regulator import Classifier, PropertyReport, Regulator, dec_soundness, probe
from .syntax import BOT, Formula, Imp, neg, pretty

__all__ = [
    "AffineEval",
    "CodeFailure",
    "ConstantEval",
    "DiagonalReport",
    "EvalFrame",
    "FixedPointCert",
    "NoCode",
    "PreconditionError",
    "TableEval",
    "Transformer",
    "diag_refute",
    "fixed_point",
    "negfp",
]


# -- eval functions ------------------------------------------------------------

@dataclass(frozen=True)
class ConstantEval:
    value: Formula

    def __call__(self, c: int, x: int) -> Formula:
        return self.value


@dataclass(frozen=True)
class TableEval:
    entries: tuple[tuple[tuple[int, int], Formula], ...]
    default: Formula = BOT

    def __post_init__(self):
        object.__setattr__(self, "_lookup", dict(self.entries))

    def __call__(self, c: int, x: int) -> Formula:
        return self._lookup.get((c, x), self.default)


@dataclass(frozen=True)
class AffineEval:
    """``eval(c, x)`` is ``base`` under ``k`` negations, ``k`` affine in ``c, x``.

    ``k = (code_coef * c + arg_coef * x + offset) % modulus``, so result size
    is ``size(base) + k``.
    """
    code_coef: int = 1
    arg_coef: int = 0
    offset: int = 0
    modulus: int = 8
    base: Formula = BOT

    def __post_init__(self):
        if self.modulus < 1:
            raise ValueError("modulus must be positive")

    def __call__(self, c: int, x: int) -> Formula:
        k = (self.code_coef * c + self.arg_coef * x + self.offset) % self.modulus
        f = self.base
        for _ in range(k):
            f = neg(f)
        return f


EvalFn = Callable[[int, int], Formula]


@dataclass(frozen=True)
class EvalFrame:
    code_bound: int
    eval_fn: EvalFn
    regulator: Regulator

    def eval(self, c: int, x: int) -> Formula:
        return self.eval_fn(c, x)

    def codes(self) -> range:
        return range(self.code_bound + 1)

    def with_code_bound(self, n: int) -> "EvalFrame":
        return EvalFrame(n, self.eval_fn, self.regulator)


# -- transformers ----------------------------------------------------------------

@dataclass(frozen=True)
class Transformer:
    """``neg``, ``identity``, or ``goal`` (``a -> goal``)."""
    kind: str = "neg"
    goal: Formula = BOT

    def __call__(self, a: Formula) -> Formula:
        if self.kind == "neg":
            return neg(a)
        if self.kind == "identity":
            return a
        if self.kind == "goal":
            return Imp(a, self.goal)
        raise ValueError(f"unknown transformer {self.kind!r}")


NEGATION = Transformer("neg")
IDENTITY = Transformer("identity")


# -- fixed points ----------------------------------------------------------------

@dataclass(frozen=True)
class FixedPointCert:
    """``b = eval(code, code)`` with both ``b -> g(b)`` and ``g(b) -> b`` accepted.

    Representation of the diagonal behaviour by ``code`` was checked at every
    argument ``x <= verified_up_to``.
    """
    code: int
    b: Formula
    image: Formula
    verified_up_to: int

    @property
    def forward(self) -> Formula:
        return Imp(self.b, self.image)

    @property
    def backward(self) -> Formula:
        return Imp(self.image, self.b)

    def reverify(self, fr: EvalFrame, g: Transformer = NEGATION) -> bool:
        return (fr.eval(self.code, self.code) == self.b
                and g(self.b) == self.image
                and fr.regulator.accepts(self.forward)
                and fr.regulator.accepts(self.backward))

    def lines(self) -> list[str]:
        return [f"code={self.code}",
                f"b={pretty(self.b)}",
                f"negfp fwd={pretty(self.forward)} bwd={pretty(self.backward)}",
                f"verified_up_to={self.verified_up_to}"]


class NoCode(Exception):
    """No code in range represents the diagonal behaviour.

    ``failures`` holds ``(code, x)`` pairs: the first argument at which each
    code's row disagrees with the behaviour.
    """

    def __init__(self, failures: tuple[tuple[int, int], ...]):
        super().__init__(f"no code among {len(failures)} represents the diagonal behaviour")
        self.failures = failures

    @property
    def codes(self) -> tuple[int, ...]:
        return tuple(c for c, _ in self.failures)


def fixed_point(fr: EvalFrame, g: Transformer) -> FixedPointCert:
    """Search the smallest code representing ``x -> g(eval(x, x))``."""
    r = fr.regulator
    target = [g(fr.eval(x, x)) for x in fr.codes()]
    failures = []
    for c in fr.codes():
        bad = next((x for x in fr.codes() if not r.equiv(fr.eval(c, x), target[x])), None)
        if bad is None:
            b = fr.eval(c, c)
            cert = FixedPointCert(c, b, g(b), fr.code_bound)
            assert r.equiv(cert.b, cert.image)
            return cert
        failures.append((c, bad))
    raise NoCode(tuple(failures))


def negfp(fr: EvalFrame) -> FixedPointCert:
    """A formula ``b`` with ``b`` and ``~b`` equivalent under the frame's regulator."""
    return fixed_point(fr, NEGATION)


# -- diagonal refutation ---------------------------------------------------------

class PreconditionError(ValueError):
    def __init__(self, reports: list[PropertyReport]):
        super().__init__("precondition probes failed: " + "; ".join(str(r) for r in reports))
        self.reports = reports


@dataclass(frozen=True)
class CodeFailure:
    """Code ``code`` fails at self-application: ``rejected`` is not accepted."""
    code: int
    b: Formula
    rejected: tuple[Formula, ...]

    @property
    def direction(self) -> str:
        # "forward" is b -> ~b, "backward" is ~b -> b
        return "forward" if self.rejected[0] == Imp(self.b, neg(self.b)) else "backward"

    def __str__(self) -> str:
        return (f"code={self.code} b={pretty(self.b)} "
                f"rejected={pretty(self.rejected[0])}")


@dataclass(frozen=True)
class DiagonalReport:
    code_bound: int
    failures: tuple[CodeFailure, ...]
    passing: tuple[int, ...]
    preconditions: tuple[PropertyReport, ...] = ()

    @property
    def refuted(self) -> bool:
        """True when no code in range survives self-application."""
        return not self.passing

    def lines(self) -> list[str]:
        out = [str(f) for f in self.failures]
        if self.refuted:
            out.append("eval: refuted")
        else:
            out.append("eval: not refuted; passing codes " + " ".join(map(str, self.passing)))
        return out


def diagonal_scan(fr: EvalFrame) -> DiagonalReport:
    """Test every code at its own diagonal, without precondition probes."""
    r = fr.regulator
    failures, passing = [], []
    for c in fr.codes():
        b = fr.eval(c, c)
        rejected = tuple(f for f in (Imp(b, neg(b)), Imp(neg(b), b)) if not r.accepts(f))
        if rejected:
            failures.append(CodeFailure(c, b, rejected))
        else:
            passing.append(c)
    return DiagonalReport(fr.code_bound, tuple(failures), tuple(passing))


def diag_refute(fr: EvalFrame, classifier: Classifier | None = None,
                probe_bound: int = 5) -> DiagonalReport:
    """Certify that no code represents ``x -> ~eval(x, x)``.

    The regulator must first pass the ``mp``, ``cons`` and ``dec`` probes
    (the latter with ``classifier``, default the truth classifier) on the
    fragment of size ``<= probe_bound``; otherwise :class:`PreconditionError`.
    With those in place the only hypothesis left to fail is representation,
    and each code is refuted at ``x = c``.
    """
    d = classifier if classifier is not None else Classifier.taut()
    r = fr.regulator
    reports = (probe(r, "mp", probe_bound), probe(r, "cons", probe_bound),
               dec_soundness(d, r, probe_bound))
    bad = [rep for rep in reports if not rep.holds]
    if bad:
        raise PreconditionError(bad)
    report = diagonal_scan(fr)
    return DiagonalReport(report.code_bound, report.failures, report.passing, reports)
