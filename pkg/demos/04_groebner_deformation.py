"""Bounding the multiplicity of a non-monomial ideal through initial ideals.

For I = (x^2 + y^2, xy) the initial ideal has multiplicity 5, larger than the
true value 4. Passing to powers I^m and normalizing by m^2 shrinks the gap.

Run: python demos/04_groebner_deformation.py
"""

from asymideal import colength_poly, initial_ideal, samuel_multiplicity
from asymideal.textio import format_rational, parse_ideal

I = parse_ideal("x^2 + y^2, x*y")
print("I =", I)
for g in I.groebner_basis():
    print("  basis element:", g)
print("in(I) =", initial_ideal(I))
print("len(R/I) =", colength_poly(I))

# The two generators form a system of parameters, so e(I) equals len(R/I) = 4.
est = samuel_multiplicity(I, indices=[1, 2, 4, 8])
for m, v in est.samples:
    print(f"m={m}: e(in(I^m))/m^2 = {format_rational(v)}")
print("best upper bound:", format_rational(est.best_bound))
