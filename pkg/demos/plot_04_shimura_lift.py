"""
Shimura lifts
=============

S_t sends a weight K + 1/2 form to weight 2K through a divisor convolution.
It needs the input to precision t (P - 1)^2 + 1 for P output coefficients,
which is by far the dominant cost.
"""

# %%
from shimlift import bracket, eta_quotient, shimura_lift, theta_series, make_trivial
from shimlift import forms as fm
from shimlift import qseries as qs
from shimlift.errors import InsufficientPrecision
from shimlift.shimura import required_input_precision

P = 16
need = required_input_precision(1, P)
print("input precision needed:", need)

# %%
# Selberg's identity
# ------------------
# S_1(Delta(4z) theta(z)) = Delta^2 - 2^11 Delta^2(2z)
delta = eta_quotient([(1, 24)], need)
F = bracket(fm.dilate(delta, 4), theta_series(make_trivial(1), 1, need), 0)
lift = shimura_lift(F, 1, P)
d2 = qs.multiply(delta.series, delta.series).truncate(P)
print(lift.series)
print(lift.series == qs.linear_combine(1, d2, -2**11, qs.dilate(d2, 2)).truncate(P))

# %%
# Asking for too much
# -------------------
try:
    shimura_lift(F.with_series(F.series.truncate(50)), 1, P)
except InsufficientPrecision as exc:
    print("refused:", exc)
