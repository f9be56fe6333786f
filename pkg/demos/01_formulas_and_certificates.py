# %% [markdown]
# # Formulas and proof certificates
#
# The object language has one constant, `bot`, and one connective, `->`.
# Negation `~a` abbreviates `a -> bot`. Every formula is closed, so
# classical truth is decided by plain evaluation.

# %%
from closurelogic import BOT, Imp, neg, parse, pretty, size
from closurelogic.hilbert import check, deduction, dump_proof, proof_size, synth
from closurelogic.hilbert import Hyp, Mp
from closurelogic.semantics import truth
from closurelogic.syntax import enumerate_formulas

peirce_like = parse("((bot -> bot) -> bot) -> bot")
print(pretty(peirce_like), "size", size(peirce_like), "true" if truth(peirce_like) else "false")

# %% [markdown]
# Formulas of size n are full binary trees with n internal nodes, so the
# counts follow the Catalan numbers.

# %%
print([len(enumerate_formulas(n)) for n in range(8)])

# %% [markdown]
# ## Synthesis
#
# For each formula the synthesizer returns either a K/S proof of it, or a
# pair: a proof of its negation and a proof that `bot` implies it. Both
# halves are always checked by the kernel.

# %%
for text in ["bot -> bot", "~~(bot -> bot)", "(bot -> bot) -> bot"]:
    a = parse(text)
    w = synth(a)
    if w.positive:
        print(f"{text:22} proved      size {proof_size(w.proof):4}  {check(w.proof, (), (), a)}")
    else:
        ok = check(w.refute, (), (), neg(a))
        print(f"{text:22} refuted     size {proof_size(w.refute):4}  {ok}")

print(dump_proof(synth(parse("bot -> bot")).proof))

# %% [markdown]
# ## Discharging a hypothesis
#
# With context `[a, a -> b]` the certificate `mp (hyp 1) (hyp 0)` proves `b`.
# Deduction turns it into a proof of `(a -> b) -> b` under `[a]` alone.

# %%
a, b = Imp(BOT, BOT), neg(Imp(BOT, BOT))
ctx = (a, Imp(a, b))
p = Mp(Hyp(1), Hyp(0))
q = deduction(p, (), ctx)
print(check(q, (), ctx[:1], Imp(Imp(a, b), b)), "size", proof_size(q))
