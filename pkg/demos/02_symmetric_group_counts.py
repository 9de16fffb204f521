#!/usr/bin/env python3
"""Counting p'-degree characters of S_n two ways.

The digit-product formula multiplies split counts k(p^i, a_i) over the
base-p digits of n.  The oracle computes every character degree of S_n by
the hook length formula and counts the ones coprime to p.  They must agree
everywhere; the well-known small cases n = p, p+1, p+2 give counts p, p,
and 2p.
"""

from ppchars.landau import primes_up_to
from ppchars.symmetric import (
    alternating_degrees,
    irr_pprime_count_sym_oracle,
    macdonald_count,
    p_adic_expansion,
    symmetric_degrees,
)

n, p = 7, 5
exp = p_adic_expansion(n, p)
print(f"base-{p} digits of {n}: {list(exp.digits)}")
print(f"|Irr_5'(S_7)| by the digit product: {macdonald_count(n, p)}")
print(f"|Irr_5'(S_7)| by hook lengths     : {irr_pprime_count_sym_oracle(n, p)}")
print()

print("degrees of S_5, from hook lengths:")
for shape, degree in symmetric_degrees(5):
    print(f"  {str(shape):15s} -> {degree}")
print()

print("the closed small cases:")
for label, ns, expect in (
    ("n = p    ", [(p, p) for p in (5, 7, 11, 13, 17)], "p"),
    ("n = p + 1", [(p + 1, p) for p in (7, 11, 13)], "p"),
    ("n = p + 2", [(p + 2, p) for p in (5, 7, 11, 13)], "2p"),
):
    values = [(n, p, macdonald_count(n, p)) for n, p in ns]
    print(f"  {label}: count = {expect}:", values)
print()

print("full sweep n <= 25, all primes p <= n:")
bad = [
    (n, p)
    for n in range(1, 26)
    for p in primes_up_to(n)
    if macdonald_count(n, p) != irr_pprime_count_sym_oracle(n, p)
    or macdonald_count(n, p) < n - 1
]
print("  formula/oracle mismatches or bound violations:", bad if bad else "none")
print()

print("alternating groups (restriction rule from S_n):")
for n in (5, 6, 7):
    print(f"  A_{n} degrees: {alternating_degrees(n)}")
print("  the A_6 list 1, 5, 5, 8, 8, 9, 10 has four 5'-entries: 1, 8, 8, 9")
