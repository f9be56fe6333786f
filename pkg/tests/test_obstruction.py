import pytest

from closurelogic.frame import (AffineEval, ConstantEval, DiagonalReport, EvalFrame,
                                NoCode, TableEval)
from closurelogic.obstruction import (CollapseCert, MPGap, MissingAcceptance, MPStep,
                                      adabs, aporetic_check, branch_collapse,
                                      choose_left, choose_right, diagonal_collapse,
                                      profile, via_classifier)
from closurelogic.regulator import (Classifier, ClassifierUnsound, MPClosure,
                                    SemanticTaut, Total)
from closurelogic.syntax import BOT, Imp, formulas_upto, neg

TOP = Imp(BOT, BOT)
B, NB = TOP, neg(TOP)
BARE = (Imp(B, NB), Imp(NB, B))


def shipped_rows(code_bound=6):
    evs = [ConstantEval(BOT), ConstantEval(TOP), AffineEval(3, 1, 1, 7),
           TableEval((((1, 1), TOP),), default=BOT)]
    regs = [Total(), SemanticTaut(), MPClosure(BARE), MPClosure(BARE + (B,)),
            MPClosure(BARE + (NB,))]
    return [(r, EvalFrame(code_bound, ev, r)) for r in regs for ev in evs]


def test_branch_collapse_examples():
    left = branch_collapse(MPClosure(BARE + (B,)), B, "left")
    assert left.steps == (MPStep(Imp(B, NB), B, NB), MPStep(NB, B, BOT))
    assert left.verify() and BOT in MPClosure(BARE + (B,)).closure

    right = branch_collapse(MPClosure(BARE + (NB,)), B, "right")
    assert right.steps == (MPStep(Imp(NB, B), NB, B), MPStep(NB, B, BOT))
    assert right.verify()

    with pytest.raises(MissingAcceptance) as info:
        branch_collapse(MPClosure(BARE), B, "left")
    assert info.value.formula == B


def test_branch_collapse_reports_missing_negfp_record():
    with pytest.raises(MissingAcceptance, match="negfp backward"):
        branch_collapse(MPClosure((Imp(B, NB), B)), B, "left")
    with pytest.raises(ValueError):
        branch_collapse(Total(), B, "middle")


def test_branch_collapse_detects_mp_gap():
    class Listed(MPClosure):
        def accepts(self, a):
            return a in self.base

    with pytest.raises(MPGap):
        branch_collapse(Listed(BARE + (B,)), B, "left")


def test_branch_symmetry_for_all_small_b():
    for b in formulas_upto(4):
        base = (Imp(b, neg(b)), Imp(neg(b), b))
        left = branch_collapse(MPClosure(base + (b,)), b, "left")
        right = branch_collapse(MPClosure(base + (neg(b),)), b, "right")
        assert len(left.steps) == len(right.steps) == 2
        assert left.verify() and right.verify()


def test_cert_verify_rejects_tampering():
    cert = branch_collapse(MPClosure(BARE + (B,)), B, "left")
    forged = CollapseCert(B, "left", (MPStep(NB, B, BOT),), MPClosure(BARE))
    assert not forged.verify()
    skipped = CollapseCert(B, "left", (MPStep(NB, B, BOT),), cert.regulator)
    assert not skipped.verify()  # ~B was never derived


def test_diagonal_collapse_examples():
    fr = EvalFrame(10, ConstantEval(BOT), Total())
    cert = diagonal_collapse(fr, choose_left)
    assert cert.b == BOT and cert.steps[-1].concl == BOT and cert.verify()
    cert2 = diagonal_collapse(fr, via_classifier(Classifier.const(True)))
    assert cert2.branch == "left" and cert2.steps == cert.steps
    assert diagonal_collapse(fr, choose_right).verify()
    with pytest.raises(NoCode):
        diagonal_collapse(EvalFrame(10, ConstantEval(BOT), SemanticTaut()), choose_left)


def test_diagonal_collapse_rejects_unverified_choice():
    fr = EvalFrame(4, ConstantEval(B), MPClosure(BARE))
    with pytest.raises(MissingAcceptance):
        diagonal_collapse(fr, choose_left)
    with pytest.raises(ClassifierUnsound):
        diagonal_collapse(fr, via_classifier(Classifier.const(False)))


def test_cert_lines():
    cert = diagonal_collapse(EvalFrame(0, ConstantEval(BOT), Total()), choose_left)
    assert cert.lines() == [
        "b=bot",
        "negfp fwd=bot -> bot -> bot bwd=(bot -> bot) -> bot",
        "branch=left accepted=bot",
        "mp 0 major=bot -> bot -> bot minor=bot concl=bot -> bot",
        "mp 1 major=bot -> bot minor=bot concl=bot",
        "qed=bot",
    ]


def test_aporetic_check_examples():
    v = aporetic_check(Total(), EvalFrame(6, ConstantEval(BOT), Total()), 4)
    assert v.failing == "cons" and v.all_failing == ("cons",)
    assert isinstance(v.witness, CollapseCert) and v.witness.steps[-1].concl == BOT

    taut = SemanticTaut()
    v = aporetic_check(taut, EvalFrame(6, ConstantEval(BOT), taut), 4)
    assert v.failing == "eval" and v.all_failing == ("eval",)
    assert isinstance(v.witness, DiagonalReport) and v.witness.refuted

    bare = MPClosure(BARE)
    v = aporetic_check(bare, EvalFrame(6, ConstantEval(B), bare), 2)
    assert v.failing == "lem" and v.all_failing == ("lem",)
    assert v.witness == B


def test_aporetic_check_requires_matching_regulator():
    with pytest.raises(ValueError):
        aporetic_check(Total(), EvalFrame(2, ConstantEval(BOT), SemanticTaut()), 2)


@pytest.mark.parametrize("n", [0, 2, 4])
def test_four_way_exclusion(n):
    for r, fr in shipped_rows():
        v = aporetic_check(r, fr, n)
        assert v.failing is not None, (r, fr)
        if isinstance(v.witness, CollapseCert):
            assert v.witness.verify()


def test_adabs_examples():
    cert = adabs(MPClosure(BARE + (B,)), B, Classifier.const(True))
    assert cert.branch == "left" and cert.verify()
    cert = adabs(MPClosure(BARE + (NB,)), B, Classifier.const(False))
    assert cert.branch == "right" and cert.verify()
    with pytest.raises(ClassifierUnsound):
        adabs(MPClosure(BARE), B, Classifier.const(True))
    with pytest.raises(MissingAcceptance):
        adabs(MPClosure((B,)), B, Classifier.const(True))


def test_profile_examples():
    rows = [(Total(), EvalFrame(5, ConstantEval(BOT), Total())),
            (SemanticTaut(), EvalFrame(5, ConstantEval(BOT), SemanticTaut())),
            (MPClosure(BARE), EvalFrame(5, ConstantEval(B), MPClosure(BARE)))]
    p = profile(rows, 3)
    assert [v.failing for v in p.verdicts] == ["cons", "eval", "lem"]
    assert p.ref_holds and len(p.ref_reports) == 3

    empty = profile([], 3)
    assert empty.verdicts == () and empty.ref_holds
    assert empty.lines()[-1].startswith("ref: constant-ff refutation holds (0/0")

    dup = profile([rows[0], rows[0]], 3)
    assert dup.verdicts[0] == dup.verdicts[1]
    assert dup.lines()[1] == dup.lines()[2]


def test_ref_row_unconditional():
    for n in range(6):
        p = profile(shipped_rows(3), n)
        assert p.ref_holds
