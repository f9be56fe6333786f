import pytest

from closurelogic.frame import (AffineEval, ConstantEval, EvalFrame, NoCode,
                                PreconditionError, TableEval, Transformer,
                                diag_refute, diagonal_scan, fixed_point, negfp)
from closurelogic.regulator import MPClosure, SemanticTaut, Total
from closurelogic.syntax import BOT, Imp, neg, parse, size

from oracles import eval_tree, tree_of

TOP = Imp(BOT, BOT)

MIXED = TableEval((((0, 0), TOP), ((1, 1), BOT), ((2, 2), parse("(bot -> bot) -> bot")),
                   ((3, 3), neg(neg(BOT))), ((0, 1), BOT), ((1, 0), neg(BOT))),
                  default=neg(neg(TOP)))
SHIPPED = [ConstantEval(BOT), ConstantEval(TOP), MIXED, AffineEval(3, 1, 1, 7)]


def test_eval_families():
    assert ConstantEval(TOP)(4, 9) == TOP
    assert MIXED(1, 0) == neg(BOT) and MIXED(9, 9) == neg(neg(TOP))
    f = AffineEval(code_coef=2, arg_coef=1, offset=0, modulus=5)
    assert size(f(1, 1)) == 3 and size(f(2, 2)) == 1
    with pytest.raises(ValueError):
        AffineEval(modulus=0)


def test_transformers():
    assert Transformer("neg")(TOP) == neg(TOP)
    assert Transformer("identity")(TOP) == TOP
    assert Transformer("goal", TOP)(BOT) == Imp(BOT, TOP)


def test_fixed_point_examples():
    total = EvalFrame(10, ConstantEval(BOT), Total())
    cert = fixed_point(total, Transformer("neg"))
    assert (cert.code, cert.b) == (0, BOT)
    assert total.regulator.accepts(cert.forward) and total.regulator.accepts(cert.backward)
    cert = fixed_point(total, Transformer("identity"))
    assert (cert.code, cert.b) == (0, BOT)
    with pytest.raises(NoCode):
        fixed_point(EvalFrame(10, ConstantEval(BOT), SemanticTaut()), Transformer("neg"))


def test_negfp_examples():
    cert = negfp(EvalFrame(10, ConstantEval(BOT), Total()))
    assert cert.b == BOT and cert.image == neg(BOT)
    cert = negfp(EvalFrame(5, TableEval((((1, 1), TOP),)), Total()))
    assert cert.code == 0
    for ev in SHIPPED:
        with pytest.raises(NoCode):
            negfp(EvalFrame(12, ev, SemanticTaut()))


@pytest.mark.parametrize("bound", [0, 1, 7, 25])
@pytest.mark.parametrize("ev", SHIPPED, ids=["bot", "top", "table", "affine"])
def test_total_frames_always_have_a_negfp(ev, bound):
    fr = EvalFrame(bound, ev, Total())
    cert = negfp(fr)
    assert cert.reverify(fr)
    assert cert.verified_up_to == bound


def test_goal_restricted_fixed_point():
    # a closure accepting both b -> (b -> G) and (b -> G) -> b for b = G = TOP
    g = Transformer("goal", TOP)
    b = TOP
    r = MPClosure((Imp(b, g(b)), Imp(g(b), b)))
    fr = EvalFrame(3, ConstantEval(b), r)
    cert = fixed_point(fr, g)
    assert cert.b == b and cert.reverify(fr, g)


def test_bare_closure_frame_has_negfp():
    b = TOP
    r = MPClosure((Imp(b, neg(b)), Imp(neg(b), b)))
    cert = negfp(EvalFrame(10, ConstantEval(b), r))
    assert cert.b == b


def expected_direction(b):
    # b true: b -> ~b is false; b false: ~b -> b is false
    return "forward" if eval_tree(tree_of(b)) else "backward"


def test_diag_refute_examples():
    taut = SemanticTaut()
    rep = diag_refute(EvalFrame(10, ConstantEval(BOT), taut))
    assert len(rep.failures) == 11 and rep.refuted
    assert all(f.direction == "backward" and f.rejected == (Imp(neg(BOT), BOT),)
               for f in rep.failures)
    rep = diag_refute(EvalFrame(10, ConstantEval(TOP), taut))
    assert len(rep.failures) == 11
    assert all(f.direction == "forward" for f in rep.failures)
    rep = diag_refute(EvalFrame(100, MIXED, taut))
    assert len(rep.failures) == 101 and not rep.passing


@pytest.mark.parametrize("ev", SHIPPED, ids=["bot", "top", "table", "affine"])
def test_diag_refute_directions_match_truth_oracle(ev):
    rep = diag_refute(EvalFrame(60, ev, SemanticTaut()))
    for f in rep.failures:
        assert f.b == ev(f.code, f.code)
        assert f.direction == expected_direction(f.b)
        assert len(f.rejected) == 1


@pytest.mark.parametrize("ev", SHIPPED, ids=["bot", "top", "table", "affine"])
def test_nocode_agrees_with_diag_refute(ev):
    fr = EvalFrame(30, ev, SemanticTaut())
    with pytest.raises(NoCode) as info:
        negfp(fr)
    rep = diag_refute(fr)
    assert info.value.codes == tuple(f.code for f in rep.failures)
    assert all(x <= c for c, x in info.value.failures)


def test_diag_refute_preconditions():
    with pytest.raises(PreconditionError, match="cons"):
        diag_refute(EvalFrame(3, ConstantEval(BOT), Total()))
    b = TOP
    bare = MPClosure((Imp(b, neg(b)), Imp(neg(b), b)))
    with pytest.raises(PreconditionError, match="dec"):
        diag_refute(EvalFrame(3, ConstantEval(b), bare))


def test_diagonal_scan_reports_passing_codes():
    rep = diagonal_scan(EvalFrame(4, ConstantEval(BOT), Total()))
    assert rep.passing == (0, 1, 2, 3, 4) and not rep.refuted
    assert rep.lines()[-1].startswith("eval: not refuted")
