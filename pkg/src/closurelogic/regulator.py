"""Closure predicates with decidable acceptance, and probes of their properties.

Four regulator families ship:

* :class:`Total` accepts everything.
* :class:`SemanticTaut` accepts exactly the tautologies.
* :class:`MPClosure` accepts the modus-ponens saturation of a finite base.
* :class:`HilbertTheory` accepts formulas for which it holds or can find a
  checked certificate.

Probes check ``mp``, ``cons`` and ``lem`` (and classifier soundness) on the
finite fragment of formulas up to a size bound.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Iterable, Mapping, Sequence

from . import hilbert
from .hilbert import Ax, Hyp, Mp, Proof
from .semantics import truth
from .syntax import BOT, ENUMERATION_CAP, Formula, Imp, formulas_upto, neg, pretty, size, subterms

__all__ = [
    "Classifier",
    "ClassifierUnsound",
    "ClosureSet",
    "HilbertTheory",
    "LemWitness",
    "MPClosure",
    "PropertyReport",
    "Regulator",
    "SemanticTaut",
    "Total",
    "dec_soundness",
    "dec_to_lem",
    "equiv",
    "mp_closure",
    "probe",
    "ref_soundness",
    "refutation_trivial",
]


# -- saturation --------------------------------------------------------------

@dataclass(frozen=True)
class ClosureSet:
    """Result of MP saturation.

    ``members`` is in derivation order. ``traces[i]`` is ``None`` for a base
    formula, or ``(major, minor)`` indices of the two earlier members that
    detached ``members[i]``.
    """
    members: tuple[Formula, ...]
    traces: tuple[tuple[int, int] | None, ...]
    index: Mapping[Formula, int] = field(repr=False, compare=False)

    def __contains__(self, a: Formula) -> bool:
        return a in self.index

    def __len__(self) -> int:
        return len(self.members)

    def trace(self, a: Formula) -> tuple[int, int] | None:
        return self.traces[self.index[a]]

    def mp_steps(self) -> list[tuple[Formula, Formula, Formula]]:
        """``(major, minor, conclusion)`` for each detached member, in order."""
        return [(self.members[t[0]], self.members[t[1]], m)
                for m, t in zip(self.members, self.traces) if t is not None]

    def replay(self) -> bool:
        """Re-run every recorded detachment and confirm it yields the member set."""
        seen: set[Formula] = set()
        for i, (m, t) in enumerate(zip(self.members, self.traces)):
            if t is not None:
                j, k = t
                if not (j < i and k < i):
                    return False
                major, minor = self.members[j], self.members[k]
                if major != Imp(minor, m):
                    return False
            seen.add(m)
        return seen == set(self.index) and len(seen) == len(self.members)


def mp_closure(base: Iterable[Formula]) -> ClosureSet:
    """Least superset of ``base`` closed under detachment.

    Members are processed in insertion order and the first derivation found
    is the one recorded. Every added member is a subterm of a base formula,
    so the loop terminates.
    """
    members: list[Formula] = []
    traces: list[tuple[int, int] | None] = []
    index: dict[Formula, int] = {}
    by_ante: dict[Formula, list[int]] = {}

    def add(f: Formula, trace):
        if f in index:
            return
        index[f] = len(members)
        members.append(f)
        traces.append(trace)

    for f in base:
        add(f, None)

    i = 0
    while i < len(members):
        m = members[i]
        # m as major premise, minor already processed
        if isinstance(m, Imp):
            j = index.get(m.ante)
            if j is not None and j <= i:
                add(m.cons, (i, j))
            by_ante.setdefault(m.ante, []).append(i)
        # m as minor premise against processed implications
        for j in by_ante.get(m, ()):
            add(members[j].cons, (j, i))
        i += 1
    return ClosureSet(tuple(members), tuple(traces), index)


# -- regulators --------------------------------------------------------------

class Regulator:
    """Base class: a decidable acceptance predicate on formulas."""

    name = "regulator"

    def accepts(self, a: Formula) -> bool:
        raise NotImplementedError

    def equiv(self, a: Formula, b: Formula) -> bool:
        return self.accepts(Imp(a, b)) and self.accepts(Imp(b, a))


@dataclass(frozen=True)
class Total(Regulator):
    name = "total"

    def accepts(self, a: Formula) -> bool:
        return True


@dataclass(frozen=True)
class SemanticTaut(Regulator):
    name = "taut"

    def accepts(self, a: Formula) -> bool:
        return truth(a)


@dataclass(frozen=True)
class MPClosure(Regulator):
    base: tuple[Formula, ...] = ()

    name = "closure"

    def __post_init__(self):
        object.__setattr__(self, "base", tuple(dict.fromkeys(self.base)))

    @cached_property
    def closure(self) -> ClosureSet:
        return mp_closure(self.base)

    def accepts(self, a: Formula) -> bool:
        return a in self.closure


@dataclass(frozen=True)
class HilbertTheory(Regulator):
    """Acceptance relative to certificates checked in the K/S kernel.

    ``a`` is accepted when some certificate for it checks under ``theory``
    and ``context``. Candidates, in order: direct axiom or hypothesis
    references; the attached ``store``; MP chains over those together with
    the tautological subterms of their formulas; closed synthesis for
    tautologies of size at most ``search_bound``. Nothing else is searched, so rejection means "no
    certificate found", not "underivable".
    """
    theory: tuple[Formula, ...] = ()
    context: tuple[Formula, ...] = ()
    search_bound: int = ENUMERATION_CAP
    store: Mapping[Formula, Proof] = field(default_factory=dict, compare=False)

    name = "theory"

    @cached_property
    def _seeds(self) -> dict[Formula, Proof]:
        seeds: dict[Formula, Proof] = {}
        for i, f in enumerate(self.theory):
            seeds.setdefault(f, Ax(i))
        for i, f in enumerate(self.context):
            seeds.setdefault(f, Hyp(i))
        for f, p in self.store.items():
            if hilbert.check(p, self.theory, self.context, f):
                seeds.setdefault(f, p)
        # tautological subterms can serve as minor premises
        for f in list(seeds):
            for t in subterms(f):
                if t not in seeds and size(t) <= self.search_bound and truth(t):
                    seeds[t] = hilbert.synth(t).proof
        return seeds

    @cached_property
    def _saturation(self) -> dict[Formula, Proof]:
        seeds = self._seeds
        closure = mp_closure(seeds)
        proofs: dict[Formula, Proof] = {}
        for m, t in zip(closure.members, closure.traces):
            if t is None:
                proofs[m] = seeds[m]
            else:
                major, minor = closure.members[t[0]], closure.members[t[1]]
                proofs[m] = Mp(proofs[major], proofs[minor])
        return proofs

    @cached_property
    def _found(self) -> dict[Formula, Proof | None]:
        return {}

    def certificate(self, a: Formula) -> Proof | None:
        if a in self._found:
            return self._found[a]
        p = self._saturation.get(a)
        if p is None and truth(a) and size(a) <= self.search_bound:
            p = hilbert.synth(a).proof
        if p is not None and not hilbert.check(p, self.theory, self.context, a):
            p = None
        self._found[a] = p
        return p

    def accepts(self, a: Formula) -> bool:
        return self.certificate(a) is not None


def equiv(r: Regulator, a: Formula, b: Formula) -> bool:
    return r.equiv(a, b)


def describe(r: Regulator) -> str:
    if isinstance(r, MPClosure):
        return "closure{" + ", ".join(pretty(f) for f in r.base) + "}"
    if isinstance(r, HilbertTheory):
        return f"theory[{len(r.theory)} axioms]"
    return r.name


# -- classifiers ---------------------------------------------------------------

@dataclass(frozen=True)
class Classifier:
    """A total Boolean classifier, finitely described.

    ``kind`` is ``taut`` (tt iff true), ``co-taut`` (tt iff false),
    ``const`` (always ``default``) or ``table`` (lookup, else ``default``).
    """
    kind: str
    default: bool = False
    table: tuple[tuple[Formula, bool], ...] = ()

    def __call__(self, a: Formula) -> bool:
        if self.kind == "taut":
            return truth(a)
        if self.kind == "co-taut":
            return not truth(a)
        if self.kind == "table":
            for f, v in self.table:
                if f == a:
                    return v
            return self.default
        if self.kind == "const":
            return self.default
        raise ValueError(f"unknown classifier kind {self.kind!r}")

    @classmethod
    def taut(cls) -> "Classifier":
        return cls("taut")

    @classmethod
    def co_taut(cls) -> "Classifier":
        return cls("co-taut")

    @classmethod
    def const(cls, value: bool) -> "Classifier":
        return cls("const", value)

    @classmethod
    def lookup(cls, entries: Mapping[Formula, bool] | Sequence[tuple[Formula, bool]],
               default: bool = False) -> "Classifier":
        items = entries.items() if isinstance(entries, Mapping) else entries
        return cls("table", default, tuple(items))


def refutation_trivial() -> Classifier:
    """The always-ff classifier; sound as a refutation for every regulator."""
    return Classifier.const(False)


# -- probes ------------------------------------------------------------------

PROPERTIES = ("mp", "cons", "lem", "dec", "ref")


@dataclass(frozen=True)
class PropertyReport:
    """Outcome of checking one property on the fragment of size ``<= bound``.

    ``witnesses`` lists every failing formula found, in enumeration order;
    ``witness`` is the first.
    """
    property: str
    bound: int
    holds: bool
    witnesses: tuple[Formula, ...] = ()

    @property
    def witness(self) -> Formula | None:
        return self.witnesses[0] if self.witnesses else None

    def __str__(self) -> str:
        verdict = "holds" if self.holds else "fails"
        line = f"property={self.property} bound={self.bound} verdict={verdict}"
        if self.witness is not None:
            line += f" witness={pretty(self.witness)}"
        return line


def _fragment(n: int, cap: int) -> tuple[Formula, ...]:
    return formulas_upto(n, cap)


def _report(tag: str, n: int, failures: list[Formula]) -> PropertyReport:
    return PropertyReport(tag, n, not failures, tuple(failures))


def probe(r: Regulator, prop: str, n: int, cap: int = ENUMERATION_CAP) -> PropertyReport:
    """Check ``mp``, ``cons`` or ``lem`` on formulas of size ``<= n``.

    ``mp`` failures are accepted implications ``u -> v`` with ``u`` accepted
    and ``v`` rejected; ``cons`` fails with witness ``bot``; ``lem``
    failures are formulas ``a`` with neither ``a`` nor ``~a`` accepted.
    """
    if prop == "cons":
        if n > cap:
            raise ValueError(f"enumeration size {n} exceeds cap {cap}")
        return _report("cons", n, [BOT] if r.accepts(BOT) else [])
    fragment = _fragment(n, cap)
    failures: list[Formula] = []
    if prop == "mp":
        for x in fragment:
            if isinstance(x, Imp) and r.accepts(x) and r.accepts(x.ante) \
                    and not r.accepts(x.cons):
                failures.append(x)
    elif prop == "lem":
        for a in fragment:
            if not (r.accepts(a) or r.accepts(neg(a))):
                failures.append(a)
    else:
        raise ValueError(f"unknown property {prop!r}")
    return _report(prop, n, failures)


def dec_soundness(d: Callable[[Formula], bool], r: Regulator, n: int,
                  cap: int = ENUMERATION_CAP) -> PropertyReport:
    """Both branches sound: tt implies ``C(a)``, ff implies ``C(~a)``."""
    failures = [a for a in _fragment(n, cap)
                if not (r.accepts(a) if d(a) else r.accepts(neg(a)))]
    return _report("dec", n, failures)


def ref_soundness(rc: Callable[[Formula], bool], r: Regulator, n: int,
                  cap: int = ENUMERATION_CAP) -> PropertyReport:
    """Only the tt branch is constrained: tt implies ``C(~a)``."""
    failures = [a for a in _fragment(n, cap) if rc(a) and not r.accepts(neg(a))]
    return _report("ref", n, failures)


# -- decision to excluded middle ---------------------------------------------------

class ClassifierUnsound(ValueError):
    def __init__(self, a: Formula, claimed: Formula):
        super().__init__(
            f"classifier unsound at {pretty(a)}: {pretty(claimed)} is not accepted")
        self.formula = a
        self.claimed = claimed


@dataclass(frozen=True)
class LemWitness:
    """One verified disjunct of excluded middle at ``formula``."""
    formula: Formula
    side: str  # "left": C(formula); "right": C(~formula)

    @property
    def accepted(self) -> Formula:
        return self.formula if self.side == "left" else neg(self.formula)


def dec_to_lem(d: Callable[[Formula], bool], r: Regulator, a: Formula) -> LemWitness:
    """Case-split on ``d(a)`` and verify the corresponding acceptance."""
    w = LemWitness(a, "left" if d(a) else "right")
    if not r.accepts(w.accepted):
        raise ClassifierUnsound(a, w.accepted)
    return w
