"""
Building q-expansions
=====================

Eta quotients, theta series and Eisenstein series are the raw material for
everything else.  All coefficients are exact rationals.
"""

# %%
# An eta quotient
# ---------------
# eta(z)^4 eta(5z)^4 is the weight 4 newform of level 5.  A spec is a list
# of (scale, exponent) pairs.
from shimlift import eta_quotient, theta_series, eisenstein, make_kronecker, make_trivial

f = eta_quotient([(1, 4), (5, 4)], 15)
print("weight", f.weight, "level", f.level)
print(f.series)

# %%
# Theta series
# ------------
# theta_psi(z) = sum over all integers n of n^v psi(n) q^(n^2).  For the even
# character (12/.) this is twice eta(24z).
th = theta_series(make_kronecker(12), 1, 60)
print(th.series)
print("equals 2 eta(24z):", th.series == eta_quotient([(24, 1)], 60).series.scale(2))

# the plain theta function has constant term 1
print(theta_series(make_trivial(1), 1, 20).series)

# %%
# Eisenstein series
# -----------------
# G_k = -B_k/(2k) + sum sigma_{k-1}(n) q^n
print(eisenstein(4, 6).series)
print(eisenstein(12, 4).series)
