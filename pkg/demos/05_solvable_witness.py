#!/usr/bin/env python3
"""A solvable group of order 3610 attaining the 2*sqrt(p-1) bound at p = 5.

Take the field V with 19^2 = 361 elements as a 2-dimensional space over
F_19.  Inside GammaL_1(361), the subgroup A generated by multiplication
with an element of order 5 and the 19-power Frobenius map is C_5 x| C_2,
and G = V x| A has exactly 4 = 2*sqrt(4) characters of 5'-degree.  The
construction works because ord_5(19) = 2: the Frobenius map then
centralizes nothing in the order-5 subgroup.

The degree multiset is computed twice: from dual orbits by Clifford
theory, and by the degree engine on the explicit order-3610 permutation
group.
"""

from collections import Counter

from ppchars.constructions import (
    build_gamma_l,
    clifford_pprime_count,
    engine_cross_check,
    find_construction_prime,
)

p = 5
r = find_construction_prime(p)
print(f"smallest usable construction prime for p = {p}: r = {r}"
      f"  (19 = 4 mod 5 has order 2)")

built = build_gamma_l(p, r)
print(f"field modulus over F_{r}: x^2 + {built.modulus[0]}")
print(f"multiplication-by-zeta matrix: {built.mult_matrix}")
print(f"Frobenius matrix:              {built.frobenius_matrix}")
print("construction invariants verified: fixed-point-free order-5 action,")
print("Frobenius normalizes but does not centralize it, C_A(P) = P")
print()

result = clifford_pprime_count(built.action, p)
print(f"|V x| A| = {361 * 10}")
print("degree multiset by Clifford theory:",
      dict(sorted(Counter(result.degrees.degrees).items())))
print(f"sum of squared degrees: {result.degrees.sum_of_squares()}")
print(f"degrees coprime to {p}: {result.pprime_count}  (= 2*sqrt(p-1) = 4)")
sizes = Counter(row["orbit_size"] for row in result.orbit_rows)
print(f"dual orbit sizes: {dict(sorted(sizes.items()))}")
print()

print("engine cross-check on the explicit order-3610 permutation group...")
report = engine_cross_check(built, p)
row = report.rows[0]
print(f"  status: {report.status}; {row['classes']} classes, "
      f"p'-count {row['pprime_count']}, sum d^2 = {row['sum_of_squares']}")
