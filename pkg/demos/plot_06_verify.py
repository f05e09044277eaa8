"""
Checking the lift identities
============================

verify() builds both sides of an identity at a requested precision and
reports the first index where they differ.  Hypotheses (eigenform,
squarefree t, coprimality, levels) are checked before anything is built.
"""

# %%
from shimlift import verify

worked = dict(f="builtin:f4l5", N=5, chi="trivial:5", psi="kronecker:12", t=1, w=1)
print(verify("thm1", worked, 20).format())

# %%
# A deliberately wrong right-hand side is caught at the first nonzero index
print(verify("thm1", dict(worked, fault_scale=2), 20).format())

# %%
# Other statements
print(verify("thm2", dict(f="builtin:f4l5", N=5, D=5, w=1), 20).format())
print(verify("thm3", dict(f="builtin:delta", N=1, r=2, t=1, w=0, M=8), 15).format())
print(verify("selberg", dict(f="builtin:delta"), 25).format())

# %%
# Hypothesis failures are reported, not raised
print(verify("thm1", dict(f="builtin:delta", N=2, psi="trivial:2", r=2, t=2), 10).format())
