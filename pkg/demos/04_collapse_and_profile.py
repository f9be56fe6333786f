# %% [markdown]
# # From a fixed point to a collapse
#
# If a regulator accepts both fixed-point records for `b` and one of `b`,
# `~b`, two detachments yield `bot`. The certificate keeps every step so it
# can be re-checked independently.

# %%
from pathlib import Path

from closurelogic.frame import EvalFrame
from closurelogic.obstruction import aporetic_check, choose_left, diagonal_collapse, profile
from closurelogic.regulator import MPClosure
from closurelogic.textio import load_formula_lines, load_frame, load_profile

DATA = Path(__file__).resolve().parent.parent / "data"

fr = load_frame(DATA / "total_const_bot.frame")
cert = diagonal_collapse(fr, choose_left)
print("\n".join(cert.lines()))
print("re-checked:", cert.verify())

# %% [markdown]
# The same argument over a closure base. With only the two records the
# regulator stays consistent, because excluded middle is missing at `b`.
# Adding `b` itself restores that instance and `bot` becomes accepted. A
# finite closure still lacks excluded middle elsewhere, so both rows list
# `lem`, but only the second loses `cons`.

# %%
bare = MPClosure(tuple(load_formula_lines(DATA / "bare_negfp.base")))
left = MPClosure(tuple(load_formula_lines(DATA / "negfp_left.base")))
eval_fn = load_frame(DATA / "bare_negfp.frame").eval_fn
for name, r in (("bare", bare), ("with b", left)):
    v = aporetic_check(r, EvalFrame(10, eval_fn, r), 3)
    print(f"{name:7} failing={','.join(v.all_failing)}")

# %% [markdown]
# ## Profile
#
# One row per frame: which of the four hypotheses survive, which one gives
# way first, and what shows it. The last line is the refutation check,
# which holds everywhere.

# %%
bound, frames = load_profile(DATA / "profile.cfg")
print("\n".join(profile([(f.regulator, f) for f in frames], bound).lines()))
