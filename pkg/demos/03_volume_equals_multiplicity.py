"""Watching e(a_m)/m^2 and the normalized colength approach the same number.

The sequence a_m is spanned by monomials x^i y^j with 5i + 7j >= 5m. Its limit
region is the triangle under 5u + 7v = 5, of area 5/14, so both invariants
should tend to 5/7.

Run: python demos/03_volume_equals_multiplicity.py
"""

from fractions import Fraction

from asymideal import GradedSequence, multiplicity_limit, verify_graded_prefix, volume_limsup
from asymideal.textio import decimal12

seq = GradedSequence.weighted((5, 7), 5)
print("graded on m <= 10:", verify_graded_prefix(seq, 10).ok)

indices = [1, 2, 5, 10, 20, 50, 100]
mult = dict(multiplicity_limit(seq, indices=indices).samples)
vol = dict(volume_limsup(seq, indices=indices).samples)

print(f"{'m':>4}  {'e(a_m)/m^2':>16}  {'2 len/m^2':>16}")
for m in indices:
    print(f"{m:>4}  {decimal12(mult[m]):>16}  {decimal12(vol[m]):>16}")
print("limit 5/7 =", decimal12(Fraction(5, 7)))

# Every multiplicity sample bounds the limit from above, because e(a_m)/m^2
# is the infimum over all m for a graded sequence. The colength column has no
# such guarantee; it only converges.
