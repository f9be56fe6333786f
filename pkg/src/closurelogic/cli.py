"""Command-line front end.

Exit status: 0 on success, 1 on a verified negative result (rejected proof,
failed probe, no representing code, refuted diagonal), 2 on usage or input
errors.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import hilbert, sexp, textio
from .frame import NoCode, PreconditionError, diag_refute, negfp
from .obstruction import (CollapseError, choose_left, choose_right,
                          diagonal_collapse, profile, via_classifier)
from .regulator import (ClassifierUnsound, Classifier, dec_soundness, mp_closure,
                        probe, ref_soundness)
from .semantics import truth
from .syntax import ENUMERATION_CAP, ParseError, parse, pretty

OK, NEGATIVE, USAGE = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(USAGE)


def _formula_arg(text: str):
    try:
        return parse(text)
    except ParseError as e:
        raise argparse.ArgumentTypeError(str(e))


def _emit(lines):
    for line in lines:
        print(line)


def cmd_parse(args):
    print(pretty(args.formula))
    return OK


def cmd_eval(args):
    print("true" if truth(args.formula) else "false")
    return OK


def _load_lists(args):
    theory = textio.load_formula_lines(args.theory) if args.theory else []
    context = textio.load_formula_lines(args.context) if args.context else []
    return theory, context


def cmd_check(args):
    proof = hilbert.load_proof(Path(args.prooffile).read_text())
    theory, context = _load_lists(args)
    result = hilbert.check(proof, theory, context, args.goal)
    print(result)
    return OK if result else NEGATIVE


def _write_or_print(text: str, out):
    if out:
        Path(out).write_text(text + "\n")
    else:
        print(text)


def cmd_synth(args):
    w = hilbert.synth(args.formula)
    if w.positive:
        print("positive")
        _write_or_print(hilbert.dump_proof(w.proof), args.out)
    else:
        print("negative")
        _write_or_print(hilbert.dump_proof(w.refute), args.out)
        if not args.out:
            print(hilbert.dump_proof(w.embed))
    return OK


def cmd_deduce(args):
    proof = hilbert.load_proof(Path(args.prooffile).read_text())
    theory, context = _load_lists(args)
    out = hilbert.deduction(proof, theory, context)
    _write_or_print(hilbert.dump_proof(out), args.out)
    print("concl=" + pretty(hilbert.conclusion(out, theory, context[:-1])))
    return OK


def cmd_closure(args):
    c = mp_closure(textio.load_formula_lines(args.basefile))
    for i, (m, t) in enumerate(zip(c.members, c.traces)):
        how = "base" if t is None else f"mp {t[0]} {t[1]}"
        print(f"{i} {pretty(m)} {how}")
    return OK


def _frame(args):
    fr = textio.load_frame(args.frame)
    if getattr(args, "max_codes", None) is not None:
        fr = fr.with_code_bound(args.max_codes)
    return fr


def cmd_negfp(args):
    fr = _frame(args)
    try:
        cert = negfp(fr)
    except NoCode as e:
        _emit(f"code={c} fails at x={x}" for c, x in e.failures)
        print("negfp: no code")
        return NEGATIVE
    _emit(cert.lines())
    return OK


def cmd_collapse(args):
    fr = _frame(args)
    branch = args.branch
    if branch == "left":
        choice = choose_left
    elif branch == "right":
        choice = choose_right
    elif branch.startswith("classifier:"):
        choice = via_classifier(textio.classifier_from_spec(branch[len("classifier:"):]))
    else:
        raise ValueError(f"bad --branch {branch!r}")
    try:
        cert = diagonal_collapse(fr, choice)
    except NoCode:
        print("collapse: no code (eval fails)")
        return NEGATIVE
    except (CollapseError, ClassifierUnsound) as e:
        print(f"collapse: {e}")
        return NEGATIVE
    _emit(cert.lines())
    return OK


def cmd_diag_check(args):
    fr = _frame(args)
    d = textio.classifier_from_spec(args.classifier)
    report = diag_refute(fr, d, args.probe_bound)
    _emit(report.lines())
    return NEGATIVE if report.refuted else OK


def cmd_probe(args):
    if args.max_size > ENUMERATION_CAP:
        raise ValueError(f"--max-size {args.max_size} exceeds cap {ENUMERATION_CAP}")
    r = textio.regulator_from_spec(args.regulator)
    if args.property in ("dec", "ref"):
        default = "taut" if args.property == "dec" else "const-ff"
        d: Classifier = textio.classifier_from_spec(args.classifier or default)
        check = dec_soundness if args.property == "dec" else ref_soundness
        report = check(d, r, args.max_size)
    else:
        report = probe(r, args.property, args.max_size)
    print(report)
    return OK if report.holds else NEGATIVE


def cmd_profile(args):
    bound, frames = textio.load_profile(args.config)
    _emit(profile([(fr.regulator, fr) for fr in frames], bound).lines())
    return OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="closurelogic", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("parse", help="print the canonical form of a formula")
    s.add_argument("formula", type=_formula_arg)
    s.set_defaults(func=cmd_parse)

    s = sub.add_parser("eval", help="truth value of a closed formula")
    s.add_argument("formula", type=_formula_arg)
    s.set_defaults(func=cmd_eval)

    s = sub.add_parser("check", help="check a proof certificate against a goal")
    s.add_argument("prooffile")
    s.add_argument("--theory")
    s.add_argument("--context")
    s.add_argument("--goal", type=_formula_arg, required=True)
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("synth", help="synthesize a K/S proof or refutation")
    s.add_argument("formula", type=_formula_arg)
    s.add_argument("--out")
    s.set_defaults(func=cmd_synth)

    s = sub.add_parser("deduce", help="discharge the last context hypothesis")
    s.add_argument("prooffile")
    s.add_argument("--context", required=True)
    s.add_argument("--theory")
    s.add_argument("--out")
    s.set_defaults(func=cmd_deduce)

    s = sub.add_parser("closure", help="modus-ponens saturation of a base file")
    s.add_argument("basefile")
    s.set_defaults(func=cmd_closure)

    s = sub.add_parser("negfp", help="search a negation fixed point in a frame")
    s.add_argument("--frame", required=True)
    s.add_argument("--max-codes", type=int)
    s.set_defaults(func=cmd_negfp)

    s = sub.add_parser("collapse", help="emit a collapse certificate for a frame")
    s.add_argument("--frame", required=True)
    s.add_argument("--branch", required=True)
    s.set_defaults(func=cmd_collapse)

    s = sub.add_parser("diag-check", help="refute the negated diagonal code by code")
    s.add_argument("--frame", required=True)
    s.add_argument("--max-codes", type=int, required=True)
    s.add_argument("--classifier", default="taut")
    s.add_argument("--probe-bound", type=int, default=5)
    s.set_defaults(func=cmd_diag_check)

    s = sub.add_parser("probe", help="check a structural property on a fragment")
    s.add_argument("property", choices=["mp", "cons", "lem", "dec", "ref"])
    s.add_argument("--regulator", required=True)
    s.add_argument("--max-size", type=int, required=True)
    s.add_argument("--classifier")
    s.set_defaults(func=cmd_probe)

    s = sub.add_parser("profile", help="obstruction verdict table")
    s.add_argument("--config", required=True)
    s.set_defaults(func=cmd_profile)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code) if isinstance(e.code, int) else USAGE
    try:
        return args.func(args)
    except (OSError, ValueError, hilbert.ProofError, sexp.SExpError,
            PreconditionError, textio.FormatError) as e:
        print(f"closurelogic {args.command}: error: {e}", file=sys.stderr)
        return USAGE


def run(argv) -> int:
    """Entry point for tests: same as :func:`main`."""
    return main(argv)


if __name__ == "__main__":
    sys.exit(main())
