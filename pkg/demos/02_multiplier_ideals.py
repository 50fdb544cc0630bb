"""Multiplier ideals of a monomial ideal and where they jump.

Run: python demos/02_multiplier_ideals.py
"""

from fractions import Fraction

from asymideal import jumping_scan, multiplier_ideal
from asymideal.textio import format_rational, parse_monomial_ideal

a = parse_monomial_ideal("x^2, y^3")

# X^u belongs to I(lam * a) when u + (1, 1) sits strictly inside lam * P.
# Below the threshold 5/6 nothing is excluded and the ideal is the whole ring.
for lam in (Fraction(1, 2), Fraction(4, 5), Fraction(5, 6), Fraction(1), Fraction(3, 2)):
    print(f"I({format_rational(lam)} * a) = {multiplier_ideal(a, lam)}")

# Rather than probing by hand, scan every candidate breakpoint up to 2.
print("\njumping numbers up to 2:")
for lam, ideal in jumping_scan(a, 2):
    print(f"  from {format_rational(lam)}: {ideal}")

# Subadditivity in action: the multiplier ideal of a product sits inside the
# product of the multiplier ideals.
b = parse_monomial_ideal("x^3, x*y, y^2")
lam = Fraction(3, 2)
lhs = multiplier_ideal(a * b, lam)
rhs = multiplier_ideal(a, lam) * multiplier_ideal(b, lam)
print(f"\nI(3/2 * ab) = {lhs}")
print(f"I(3/2 * a) I(3/2 * b) = {rhs}")
print("contained:", lhs <= rhs)
