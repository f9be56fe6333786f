# %% [markdown]
# # Regulators, saturation and structural probes
#
# A regulator is any predicate on formulas. The library ships four: accept
# everything, accept tautologies, accept the modus ponens closure of a base,
# and accept whatever a finite Hilbert theory proves.

# %%
from closurelogic import BOT, Imp, neg, pretty
from closurelogic.regulator import (Classifier, HilbertTheory, MPClosure, SemanticTaut,
                                    Total, dec_soundness, mp_closure, probe,
                                    ref_soundness, refutation_trivial)

B = Imp(BOT, BOT)
bare = (Imp(B, neg(B)), Imp(neg(B), B))

# %% [markdown]
# The two fixed-point records on their own never reach `bot`. Add `B` and
# two detachments get there; the trace says which members were combined.

# %%
for base in (bare, bare + (B,)):
    c = mp_closure(base)
    print(len(c.members), "members, bot" , "reached" if BOT in c else "absent")
    for i, (m, t) in enumerate(zip(c.members, c.traces)):
        print(f"  {i} {pretty(m):24} {'base' if t is None else f'mp {t[0]} {t[1]}'}")

# %% [markdown]
# ## Probes
#
# A probe checks one property on every formula up to a size bound and
# reports the counterexamples it finds.

# %%
regs = {"total": Total(), "taut": SemanticTaut(), "bare": MPClosure(bare),
        "theory": HilbertTheory((neg(B),))}
for name, r in regs.items():
    print(name)
    for prop in ("mp", "cons", "lem"):
        print("  ", probe(r, prop, 3))

# %% [markdown]
# The truth-table classifier is a sound decision procedure for the
# tautology regulator. Refutation is a different story: the classifier that
# answers "no" to everything never wrongly refutes an accepted formula, so
# it is sound for every regulator, consistent or not.

# %%
print(dec_soundness(Classifier.taut(), SemanticTaut(), 5))
for name, r in regs.items():
    print(name, ref_soundness(refutation_trivial(), r, 5))
