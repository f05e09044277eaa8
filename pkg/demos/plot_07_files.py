"""
The q-expansion file format
===========================

A small text format with a header and one ``n value`` line per nonzero
coefficient.  Cyclotomic values are written as ``[c0,c1,...]@m``.  The
command line tool reads and writes the same files.
"""

# %%
from shimlift import parse_qexp, theta_series, write_qexp
from shimlift.characters import DirichletCharacter

chi = DirichletCharacter.from_images(5, {5: ["1/4"]})
th = theta_series(chi, 1, 30)
text = write_qexp(th)
print(text)
print("round trip:", parse_qexp(text) == th)

# %%
# The same thing from a shell:
#
#   shimlift eta --spec "1:4,5:4" --prec 10
#   shimlift eta --spec 4:24 --prec 82 --out d4.q
#   shimlift theta --prec 82 --out th.q
#   shimlift bracket --f d4.q --g th.q --w 0 | shimlift lift --in - --t 1 --prec 10
