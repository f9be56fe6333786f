"""Collapse certificates and obstruction verdicts.

Given ``b`` with both ``b -> ~b`` and ``~b -> b`` accepted, either accepted
disjunct ``b`` or ``~b`` detaches to ``bot`` in two modus ponens steps. A
:class:`CollapseCert` records the equivalence, the disjunct and the steps,
and can be re-checked against the regulator.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Sequence, Union

from .frame import (DiagonalReport, EvalFrame, FixedPointCert, NoCode,
                    diagonal_scan, negfp)
from .regulator import (Classifier, LemWitness, PropertyReport, Regulator,
                        dec_to_lem, describe, probe, ref_soundness,
                        refutation_trivial)
from .syntax import BOT, Formula, Imp, neg, pretty

__all__ = [
    "CollapseCert",
    "CollapseError",
    "MPGap",
    "MPStep",
    "MissingAcceptance",
    "ObstructionVerdict",
    "Profile",
    "adabs",
    "aporetic_check",
    "branch_collapse",
    "choose_left",
    "choose_right",
    "diagonal_collapse",
    "profile",
    "via_classifier",
]

HYPOTHESES = ("eval", "lem", "cons", "mp")


class CollapseError(ValueError):
    pass


class MissingAcceptance(CollapseError):
    def __init__(self, formula: Formula, what: str = ""):
        label = f"{what} " if what else ""
        super().__init__(f"missing acceptance: {label}{pretty(formula)}")
        self.formula = formula


class MPGap(CollapseError):
    """The regulator rejected the conclusion of a detachment."""

    def __init__(self, step: "MPStep"):
        super().__init__(f"regulator is not closed under modus ponens at {step}")
        self.step = step


@dataclass(frozen=True)
class MPStep:
    major: Formula
    minor: Formula
    concl: Formula

    def __str__(self) -> str:
        return (f"major={pretty(self.major)} minor={pretty(self.minor)} "
                f"concl={pretty(self.concl)}")


@dataclass(frozen=True)
class CollapseCert:
    b: Formula
    branch: str
    steps: tuple[MPStep, ...]
    regulator: Regulator = field(compare=False)

    @property
    def negfp_forward(self) -> Formula:
        return Imp(self.b, neg(self.b))

    @property
    def negfp_backward(self) -> Formula:
        return Imp(neg(self.b), self.b)

    @property
    def accepted(self) -> Formula:
        return self.b if self.branch == "left" else neg(self.b)

    def verify(self) -> bool:
        """Re-check every record and step against the regulator."""
        r = self.regulator
        known = {self.negfp_forward, self.negfp_backward, self.accepted}
        if not all(r.accepts(f) for f in known):
            return False
        for s in self.steps:
            if not (s.major in known and s.minor in known
                    and s.major == Imp(s.minor, s.concl) and r.accepts(s.concl)):
                return False
            known.add(s.concl)
        return bool(self.steps) and self.steps[-1].concl == BOT

    def lines(self) -> list[str]:
        out = [f"b={pretty(self.b)}",
               f"negfp fwd={pretty(self.negfp_forward)} bwd={pretty(self.negfp_backward)}",
               f"branch={self.branch} accepted={pretty(self.accepted)}"]
        out += [f"mp {i} {s}" for i, s in enumerate(self.steps)]
        if self.steps and self.steps[-1].concl == BOT:
            out.append("qed=bot")
        return out

    def __str__(self) -> str:
        return "\n".join(self.lines())


def _require(r: Regulator, f: Formula, what: str):
    if not r.accepts(f):
        raise MissingAcceptance(f, what)


def branch_collapse(r: Regulator, b: Formula, branch: str) -> CollapseCert:
    """Detach to ``bot`` from the NegFP records of ``b`` and one disjunct.

    ``left`` uses ``C(b)``: ``b -> ~b`` gives ``~b``, then ``~b`` with ``b``
    gives ``bot``. ``right`` uses ``C(~b)``: ``~b -> b`` gives ``b``, then
    the same final step.
    """
    nb = neg(b)
    _require(r, Imp(b, nb), "negfp forward")
    _require(r, Imp(nb, b), "negfp backward")
    if branch == "left":
        _require(r, b, "left disjunct")
        steps = (MPStep(Imp(b, nb), b, nb), MPStep(nb, b, BOT))
    elif branch == "right":
        _require(r, nb, "right disjunct")
        steps = (MPStep(Imp(nb, b), nb, b), MPStep(nb, b, BOT))
    else:
        raise ValueError(f"branch must be 'left' or 'right', not {branch!r}")
    for s in steps:
        if not r.accepts(s.concl):
            raise MPGap(s)
    return CollapseCert(b, branch, steps, r)


# -- excluded-middle providers ---------------------------------------------------

LemChoice = Callable[[Regulator, Formula], LemWitness]


def choose_left(r: Regulator, b: Formula) -> LemWitness:
    return LemWitness(b, "left")


def choose_right(r: Regulator, b: Formula) -> LemWitness:
    return LemWitness(b, "right")


def via_classifier(d: Classifier) -> LemChoice:
    """Excluded middle at ``b`` obtained by case analysis on ``d(b)``."""
    def choose(r: Regulator, b: Formula) -> LemWitness:
        return dec_to_lem(d, r, b)
    return choose


def _lem_at(r: Regulator, b: Formula) -> LemWitness | None:
    if r.accepts(b):
        return LemWitness(b, "left")
    if r.accepts(neg(b)):
        return LemWitness(b, "right")
    return None


def diagonal_collapse(fr: EvalFrame, lem_choice: LemChoice) -> CollapseCert:
    """NegFP from the frame, a disjunct from ``lem_choice``, then collapse.

    Raises :class:`~closurelogic.frame.NoCode` when the frame has no
    diagonal fixed point.
    """
    fp = negfp(fr)
    w = lem_choice(fr.regulator, fp.b)
    _require(fr.regulator, w.accepted, f"{w.side} disjunct")
    return branch_collapse(fr.regulator, fp.b, w.side)


def adabs(r: Regulator, b: Formula, d: Classifier) -> CollapseCert:
    """Collapse from an assumed NegFP(b) and a decision classifier, no frame."""
    _require(r, Imp(b, neg(b)), "negfp forward")
    _require(r, Imp(neg(b), b), "negfp backward")
    w = dec_to_lem(d, r, b)
    return branch_collapse(r, b, w.side)


# -- verdicts --------------------------------------------------------------------

Witness = Union[CollapseCert, DiagonalReport, Formula, None]


@dataclass(frozen=True)
class ObstructionVerdict:
    """Which of eval, lem, cons, mp hold for one regulator and frame.

    ``failing`` is the first failed hypothesis in the order eval, lem, cons,
    mp; ``all_failing`` lists every one.
    """
    regulator: Regulator
    bound: int
    holds: dict
    evidence: dict = field(compare=False)
    witness: Witness = field(compare=False)

    @property
    def all_failing(self) -> tuple[str, ...]:
        return tuple(h for h in HYPOTHESES if not self.holds[h])

    @property
    def failing(self) -> str | None:
        fails = self.all_failing
        return fails[0] if fails else None

    def witness_text(self) -> str:
        w = self.witness
        if isinstance(w, CollapseCert):
            return "collapse to bot via " + pretty(w.b)
        if isinstance(w, DiagonalReport):
            return f"{len(w.failures)} codes refuted at diagonal"
        if w is None:
            return "-"
        return pretty(w)

    def row(self) -> list[str]:
        flags = ["holds" if self.holds[h] else "fails" for h in HYPOTHESES]
        return [describe(self.regulator), *flags, self.failing or "none", self.witness_text()]


def aporetic_check(r: Regulator, fr: EvalFrame, n: int) -> ObstructionVerdict:
    """Probe the four hypotheses and name the one that gives way.

    ``eval`` means the frame represents the negated diagonal somewhere in its
    code range. When it does, excluded middle is tested at the fixed point
    itself, and if a disjunct is accepted the collapse certificate is built:
    it shows ``bot`` accepted, so ``cons`` fails.
    """
    if fr.regulator != r:
        raise ValueError("frame is over a different regulator")
    reports = {p: probe(r, p, n) for p in ("mp", "cons", "lem")}
    holds = {h: True for h in HYPOTHESES}
    evidence: dict = dict(reports)
    witnesses: dict = {}

    try:
        fp: FixedPointCert | None = negfp(fr)
        evidence["eval"] = fp
    except NoCode:
        fp = None
        diag = diagonal_scan(fr)
        evidence["eval"] = diag
        holds["eval"] = False
        witnesses["eval"] = diag

    lem = reports["lem"]
    if fp is not None and _lem_at(r, fp.b) is None:
        holds["lem"] = False
        witnesses["lem"] = fp.b
    elif not lem.holds:
        holds["lem"] = False
        witnesses["lem"] = lem.witness

    if not reports["mp"].holds:
        holds["mp"] = False
        witnesses["mp"] = reports["mp"].witness

    cert = None
    if fp is not None and holds["lem"]:
        w = _lem_at(r, fp.b)
        try:
            cert = branch_collapse(r, fp.b, w.side)
        except MPGap as e:
            holds["mp"] = False
            witnesses["mp"] = e.step.major
    if cert is not None:
        evidence["collapse"] = cert
        holds["cons"] = False
        witnesses["cons"] = cert
    elif not reports["cons"].holds:
        holds["cons"] = False
        witnesses["cons"] = BOT

    failing = next((h for h in HYPOTHESES if not holds[h]), None)
    return ObstructionVerdict(r, n, holds, evidence, witnesses.get(failing))


@dataclass(frozen=True)
class Profile:
    """Verdict table plus the unconditional refutation row."""
    verdicts: tuple[ObstructionVerdict, ...]
    ref_reports: tuple[PropertyReport, ...]
    bound: int

    @property
    def ref_holds(self) -> bool:
        return all(rep.holds for rep in self.ref_reports)

    def lines(self) -> list[str]:
        header = ["regulator", *HYPOTHESES, "failing", "witness"]
        rows = [v.row() for v in self.verdicts]
        widths = [max(len(r[i]) for r in [header, *rows]) for i in range(len(header))]
        fmt = lambda cells: "  ".join(c.ljust(w) for c, w in zip(cells, widths)).rstrip()
        out = [fmt(header)] + [fmt(r) for r in rows]
        n_ok = sum(rep.holds for rep in self.ref_reports)
        verdict = "holds" if self.ref_holds else "fails"
        out.append(f"ref: constant-ff refutation {verdict} "
                   f"({n_ok}/{len(self.ref_reports)} regulators, bound {self.bound})")
        return out


def profile(rows: Sequence[tuple[Regulator, EvalFrame]], n: int) -> Profile:
    verdicts = tuple(aporetic_check(r, fr, n) for r, fr in rows)
    rc = refutation_trivial()
    refs = tuple(ref_soundness(rc, r, n) for r, _ in rows)
    return Profile(verdicts, refs, n)
