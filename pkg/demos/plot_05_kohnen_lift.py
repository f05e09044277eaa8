"""
Kohnen lifts
============

On the plus space the D-th lift for a fundamental discriminant D is the
same convolution with X chi_D, divided by a normalizer.  By default the
normalizer is the input's own a(D); when that vanishes pass one explicitly.
"""

# %%
from shimlift import bracket, eta_quotient, kohnen_lift, theta_series
from shimlift import forms as fm
from shimlift import qseries as qs
from shimlift.characters import make_kronecker, make_trivial
from shimlift.errors import VanishingNormalizer

f = eta_quotient([(1, 4), (5, 4)], 460)
F = bracket(fm.dilate(f, 4), theta_series(make_trivial(1), 5, 1840), 0)
F = F.with_character(make_kronecker(5))

# a(5) of f(4z) theta(5z) only sees the constant term of f, which is 0
try:
    kohnen_lift(F, 5, 20)
except VanishingNormalizer as exc:
    print("default normalizer fails:", exc)

# %%
# Normalizing by the eigenvalue a_f(5) = -5 recovers f^2
lift = kohnen_lift(F, 5, 20, normalizer=f.coefficient(5))
print(lift.series)
print(lift.series == qs.multiply(f.series, f.series).truncate(20))
