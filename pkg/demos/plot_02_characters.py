"""
Dirichlet characters
====================

Characters are stored by the images of unit-group generators, one block per
prime power.  Real characters take values in {-1, 0, 1}; others produce
exact cyclotomic numbers.
"""

# %%
from shimlift.characters import (
    DirichletCharacter,
    component_psi_d,
    decompose,
    make_kronecker,
    multiply,
    parse_character,
)

psi = make_kronecker(12)
print([psi(n) for n in range(1, 25)])
print("parity:", psi.parity)

# %%
# Splitting into prime-power parts
# --------------------------------
# (12/.) is chi_{-4} times chi_{-3}; the unitary-divisor component psi_4 is odd.
for q, part in decompose(psi):
    print(q, [part(n) for n in range(1, q + 1)])
print("psi_4(-1) =", component_psi_d(psi, 4)(-1))
print(multiply(make_kronecker(-4), make_kronecker(-3)) == psi)

# %%
# A complex character
# -------------------
# The quartic character mod 5 sending 2 to i.  Values print as coordinates
# in the power basis of Q(zeta_4).
chi = DirichletCharacter.from_images(5, {5: ["1/4"]})
print([chi(n) for n in range(1, 6)])
print(chi.label, parse_character(chi.label) == chi)
