"""Line-oriented input files: formula lists, frames, classifier tables, profiles.

All formats ignore blank lines and ``#`` comments. Formulas are given in
surface syntax; formula lists also accept the ``(imp F G)`` s-expression form
so that theory and context files written by the certificate tools load back.
"""

from __future__ import annotations

from pathlib import Path

from . import sexp
from .frame import AffineEval, ConstantEval, EvalFrame, TableEval
from .regulator import Classifier, HilbertTheory, MPClosure, Regulator, SemanticTaut, Total
from .syntax import BOT, Formula, ParseError, parse

__all__ = [
    "FormatError",
    "classifier_from_spec",
    "dump_formula_lines",
    "load_classifier_table",
    "load_formula_lines",
    "load_frame",
    "load_profile",
    "parse_formula_line",
    "regulator_from_spec",
]


class FormatError(ValueError):
    def __init__(self, where: str, message: str):
        super().__init__(f"{where}: {message}")


def _lines(path: Path):
    for n, raw in enumerate(Path(path).read_text().splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield f"{path}:{n}", line


def parse_formula_line(text: str) -> Formula:
    """Surface syntax, falling back to the certificate s-expression form."""
    try:
        return parse(text)
    except ParseError as e:
        if text.lstrip().startswith("("):
            try:
                return sexp.load_formula(text)
            except sexp.SExpError:
                pass
        raise e


def _formula(where: str, text: str) -> Formula:
    try:
        return parse_formula_line(text)
    except ParseError as e:
        raise FormatError(where, str(e)) from None


def load_formula_lines(path) -> list[Formula]:
    return [_formula(where, line) for where, line in _lines(Path(path))]


def dump_formula_lines(formulas) -> str:
    """Certificate-style list: one s-expression per line."""
    return "".join(sexp.dump_formula(f) + "\n" for f in formulas)


def regulator_from_spec(spec: str, base_dir: Path | str = ".") -> Regulator:
    """``total``, ``taut``, ``closure:<basefile>`` or ``theory:<axiomfile>``."""
    kind, _, arg = spec.partition(":")
    if kind == "total" and not arg:
        return Total()
    if kind == "taut" and not arg:
        return SemanticTaut()
    if kind in ("closure", "theory") and arg:
        formulas = tuple(load_formula_lines(Path(base_dir) / arg))
        return MPClosure(formulas) if kind == "closure" else HilbertTheory(formulas)
    raise ValueError(f"unknown regulator spec {spec!r}")


def load_classifier_table(path) -> Classifier:
    """Rows ``tt <formula>`` / ``ff <formula>``, optional ``default tt|ff``."""
    entries = []
    default = False
    for where, line in _lines(Path(path)):
        head, _, rest = line.partition(" ")
        if head == "default" and rest.strip() in ("tt", "ff"):
            default = rest.strip() == "tt"
        elif head in ("tt", "ff") and rest:
            entries.append((_formula(where, rest), head == "tt"))
        else:
            raise FormatError(where, f"bad classifier row {line!r}")
    return Classifier.lookup(entries, default)


def classifier_from_spec(spec: str, base_dir: Path | str = ".") -> Classifier:
    """``taut``, ``co-taut``, ``const-tt``, ``const-ff`` or ``table:<file>``."""
    if spec == "taut":
        return Classifier.taut()
    if spec == "co-taut":
        return Classifier.co_taut()
    if spec in ("const-tt", "const-ff"):
        return Classifier.const(spec == "const-tt")
    if spec.startswith("table:") and len(spec) > 6:
        return load_classifier_table(Path(base_dir) / spec[6:])
    raise ValueError(f"unknown classifier spec {spec!r}")


def _int(where: str, text: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise FormatError(where, f"expected an integer, found {text!r}") from None


def load_frame(path) -> EvalFrame:
    """Read a frame description.

    ::

        codebound N
        regulator total | taut | closure <basefile> | theory <axiomfile>
        eval constant <formula>
        eval affine <code_coef> <arg_coef> <offset> <modulus> [<formula>]
        eval table
        <c> <x> <formula>
        default <formula>

    Base and axiom paths are relative to the frame file.
    """
    path = Path(path)
    code_bound = None
    regulator = None
    eval_fn = None
    table: list | None = None
    default = BOT
    for where, line in _lines(path):
        words = line.split()
        head = words[0]
        if head == "codebound" and len(words) == 2:
            code_bound = _int(where, words[1])
        elif head == "regulator" and len(words) in (2, 3):
            spec = words[1] if len(words) == 2 else f"{words[1]}:{words[2]}"
            try:
                regulator = regulator_from_spec(spec, path.parent)
            except ValueError as e:
                raise FormatError(where, str(e)) from None
        elif head == "eval" and len(words) >= 2:
            rest = line.split(None, 2)[2] if len(words) > 2 else ""
            if words[1] == "constant" and rest:
                eval_fn = ConstantEval(_formula(where, rest))
            elif words[1] == "table" and not rest:
                table = []
            elif words[1] == "affine" and len(words) >= 6:
                nums = [_int(where, w) for w in words[2:6]]
                tail = line.split(None, 6)[6] if len(words) > 6 else "bot"
                try:
                    eval_fn = AffineEval(*nums, base=_formula(where, tail))
                except ValueError as e:
                    raise FormatError(where, str(e)) from None
            else:
                raise FormatError(where, f"bad eval line {line!r}")
        elif head == "default" and len(words) >= 2:
            default = _formula(where, line.split(None, 1)[1])
        elif head.isdigit() and len(words) >= 3 and table is not None:
            c, x = _int(where, words[0]), _int(where, words[1])
            table.append(((c, x), _formula(where, line.split(None, 2)[2])))
        else:
            raise FormatError(where, f"unrecognized line {line!r}")
    if table is not None:
        eval_fn = TableEval(tuple(table), default)
    missing = [name for name, v in (("codebound", code_bound), ("regulator", regulator),
                                    ("eval", eval_fn)) if v is None]
    if missing:
        raise FormatError(str(path), "missing " + ", ".join(missing))
    return EvalFrame(code_bound, eval_fn, regulator)


def load_profile(path) -> tuple[int, list[EvalFrame]]:
    """``bound N`` plus one ``frame <framefile>`` line per row."""
    path = Path(path)
    bound = 4
    frames = []
    for where, line in _lines(path):
        words = line.split()
        if words[0] == "bound" and len(words) == 2:
            bound = _int(where, words[1])
        elif words[0] == "frame" and len(words) == 2:
            frames.append(load_frame(path.parent / words[1]))
        else:
            raise FormatError(where, f"unrecognized line {line!r}")
    return bound, frames
