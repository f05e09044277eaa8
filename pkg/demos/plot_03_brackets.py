"""
Rankin-Cohen brackets
=====================

[f, g]_w = sum_j (-1)^j C(k+w-1, w-j) C(l+w-1, j) D^j f D^(w-j) g with
D = q d/dq.  Half-integral weights use generalized binomials.
"""

# %%
from shimlift import bracket, eta_quotient
from shimlift import forms as fm
from shimlift import qseries as qs
from shimlift.rankin_cohen import lemma1_check

f = eta_quotient([(1, 4), (5, 4)], 20)

# the order-0 bracket is the product, odd brackets of f with itself vanish
print(bracket(f, f, 0).series)
print(bracket(f, f, 1).series)

# %%
# A weight 12 form of level 60
# ----------------------------
# 2[f(z), f(12z)]_2 - 2[f(3z), f(4z)]_2 is sparse: only seven coefficients
# below q^20 survive.
a = bracket(f, fm.dilate(f, 12), 2).series.truncate(20)
b = bracket(fm.dilate(f, 3), fm.dilate(f, 4), 2).series.truncate(20)
g = qs.linear_combine(2, a, -2, b)
print(g)

# %%
# The binomial identity behind the lift formula holds on a grid
print(all(lemma1_check(k, w, v) for k in range(1, 9) for w in range(1, 7) for v in (0, 1)))
