#!/usr/bin/env python3
"""
From an increasing rational sequence to a machine domain
========================================================

Any strictly increasing rational sequence in (0, 1) can be shadowed by a
staircase of dyadic partial sums r_i = r_{i-1} + 2**-n_i, where each step is
the largest power-of-two that still fits under the current term.  The step
lengths n_i automatically satisfy the unit mass bound, so feeding them to the
codeword allocator produces a prefix-free domain whose measure is exactly the
final partial sum.

Run me top to bottom:  python3 demos/02_dyadic_staircase.py
"""

from fractions import Fraction

from omegalib.ce_real import RationalSeq, dyadic_decompose, to_machine
from omegalib.exact import format_rational

# ---------------------------------------------------------------------------
# 1. A hand-picked sequence.  3/10 is not dyadic, so the staircase has to
#    creep up on it; 1/2 is dyadic and gets hit exactly.
# ---------------------------------------------------------------------------

terms = [Fraction(3, 10), Fraction(1, 2), Fraction(7, 10), Fraction(9, 10)]
seq = RationalSeq(terms)
staircase = dyadic_decompose(seq, 4)

print("term        step length   partial sum")
for a, n, r in zip(terms, staircase.lengths, staircase.partials):
    print(f"{format_rational(a):<12}{n:<14}{r}")
print()

# ---------------------------------------------------------------------------
# 2. The sandwich that makes the staircase converge: each partial sum lands
#    in the upper half of the remaining gap, so the distance to the current
#    term at least halves at every step.
# ---------------------------------------------------------------------------

r_prev = Fraction(0)
for i, (a, r) in enumerate(zip(terms, staircase.partials), start=1):
    r_now = r.as_fraction()
    print(f"step {i}: (a+r_prev)/2 = {format_rational((a + r_prev) / 2):<8}"
          f" <= r = {format_rational(r_now):<8} <= a = {format_rational(a)}")
    r_prev = r_now
print()

# ---------------------------------------------------------------------------
# 3. The same staircase as codewords.  The domain is prefix-free and its
#    mass equals the last partial sum on the nose.
# ---------------------------------------------------------------------------

machine = to_machine(RationalSeq(terms), 4)
print("allocated domain:", machine.domain)
print("domain measure:  ", machine.domain_measure())
print("final partial sum:", staircase.partials[-1])

# The command-line equivalent of step 1:
#
#   printf '3/10\n1/2\n7/10\n9/10\n' | omegalib decompose - --k 4
