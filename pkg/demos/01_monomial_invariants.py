"""Multiplicity, colength and log canonical threshold of a single monomial ideal.

Run: python demos/01_monomial_invariants.py
"""

from asymideal import build_polyhedron, colength, lct, multiplicity
from asymideal.textio import format_rational, parse_monomial_ideal

# A staircase ideal in two variables. Its Newton polyhedron has two compact
# facets, and the region Q under them is a pentagon-like shape of area 5.
a = parse_monomial_ideal("x^4, x^2*y, y^3")
P = build_polyhedron(a)
print("ideal:", a)
for w, c in P.facets:
    print(f"  facet {w[0]}u + {w[1]}v >= {c}")

# The multiplicity is twice the area of Q, while the colength just counts the
# monomials outside the ideal. For a monomial ideal these differ in general.
print("e(a) =", multiplicity(a))
print("len(R/a) =", colength(a))

# The log canonical threshold is read off where the diagonal ray enters P.
print("lct(a) =", format_rational(lct(a)))

# Squaring the ideal scales Q by 2, so e grows by 2^2 and lct halves.
a2 = a * a
print("e(a^2) =", multiplicity(a2), " lct(a^2) =", format_rational(lct(a2)))

# Three variables work the same way; the volume comes from an exact
# triangulation of Q, so the answer is an integer with no rounding.
k = parse_monomial_ideal("x^3, y^4, z^5, x*y*z")
print("e(x^3, y^4, z^5, xyz) =", multiplicity(k))
