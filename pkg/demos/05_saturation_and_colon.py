"""Asymptotic multiplier ideals, the saturated sequence and colon ideals.

Run: python demos/05_saturation_and_colon.py
"""

from asymideal import GradedSequence, MonomialIdeal, colon_sequence, multiplicity, saturate
from asymideal.sequences import Asymptotic

# A family that is not graded: a_m = (x^m, y^m). Its multiplier ideals are
# still easy to describe; b_m turns out to be a power of the maximal ideal.
family = GradedSequence(2, lambda m: MonomialIdeal.pure_powers([m, m]), "x^m, y^m")
b = Asymptotic(family, 8)
for m in range(1, 5):
    print(f"b_{m} = {b[m]}")

# For this family the colon ideals (a_m : b_m) stay large.
c = colon_sequence(family, b)
for p in range(4):
    m = 2 * p + 1
    print(f"e(a_{m} : b_{m}) = {multiplicity(c[m])} >= {(p + 1) ** 2}")

# Saturating a genuinely graded sequence fills in every lattice point of the
# scaled Newton polyhedra. Powers of (x^2, y^2) miss the monomial xy, which
# the saturation restores. Afterwards X^e = xy lies in every colon ideal.
seq = GradedSequence.powers(MonomialIdeal.pure_powers([2, 2]))
sat = saturate(seq, 16)
bsat = Asymptotic(sat, 16)
csat = colon_sequence(sat, bsat)
for m in (1, 2, 3):
    print(f"m={m}: a_m = {seq[m]}")
    print(f"      a'_m = {sat[m]} (witness r={sat.witness_r[m]})")
    print(f"      xy in (a'_m : b'_m): {(1, 1) in csat[m]}")
