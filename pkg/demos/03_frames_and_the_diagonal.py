# %% [markdown]
# # Evaluation frames and the negated diagonal
#
# A frame pairs a regulator with a code-indexed evaluation `eval(c, x)` over
# a bounded range of codes. A negation fixed point is a code `c` with
# `b = eval(c, c)` such that the regulator accepts both `b -> ~b` and
# `~b -> b`.

# %%
from pathlib import Path

from closurelogic.frame import NoCode, diag_refute, negfp
from closurelogic.regulator import Classifier
from closurelogic.textio import load_frame

DATA = Path(__file__).resolve().parent.parent / "data"

# %% [markdown]
# Under the total regulator every code works, so the search stops at 0.

# %%
fr = load_frame(DATA / "total_const_bot.frame")
print("\n".join(negfp(fr).lines()))

# %% [markdown]
# Under the tautology regulator no code can work: `b -> ~b` and `~b -> b`
# are never both true. The diagonal scan names, for every code, the record
# that was rejected.

# %%
fr = load_frame(DATA / "taut_affine.frame").with_code_bound(12)
try:
    negfp(fr)
except NoCode as e:
    print("no code among", len(e.codes))

report = diag_refute(fr, Classifier.taut(), probe_bound=5)
for line in report.lines()[:4] + report.lines()[-1:]:
    print(line)
