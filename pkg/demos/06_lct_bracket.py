"""Sandwiching the log canonical threshold of a graded sequence.

m * lct(a_m) increases toward lct(a_.) and m * lct(b_m) decreases toward it.
For the 5/7 sequence the common limit is 12/5.

Run: python demos/06_lct_bracket.py
"""

from fractions import Fraction

from asymideal import GradedSequence, lct_bracket
from asymideal.textio import decimal12

seq = GradedSequence.weighted((5, 7), 5)
for M in (10, 25, 50, 55):
    br = lct_bracket(seq, M, 16)
    print(f"M={M:>3}: [{decimal12(br.lower.best_bound)}, {decimal12(br.upper.best_bound)}]"
          f"  width {decimal12(br.width)}")

# The upper side follows 12m/(5m - 11) exactly, so the width at M is about
# 132/(25M - 55). It reaches 0.1 at M = 55, not earlier.
print("12/5 =", decimal12(Fraction(12, 5)))
