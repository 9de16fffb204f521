#!/usr/bin/env python3
"""The generic character-degree engine on small groups.

Class-sum matrices are diagonalized over a prime field F_L with
L = 1 (mod exponent) and L > |G|, so every chi(1)^2 is read off exactly.
The run is deterministic for a fixed seed, and the resulting multiset is
seed-independent.
"""

from ppchars.engine import (
    alternating_group,
    conjugacy_classes,
    cyclic_group,
    derived_subgroup_index,
    dihedral_group,
    group_from_permutations,
    irreducible_degrees,
    symmetric_group,
)

groups = [
    cyclic_group(12),
    dihedral_group(10),
    symmetric_group(4),
    symmetric_group(5),
    alternating_group(5),
    alternating_group(6),
]

print(f"{'group':>6s} {'|G|':>5s} {'classes':>8s} {'linear':>7s}  degrees")
for g in groups:
    degrees = irreducible_degrees(g)
    cc = conjugacy_classes(g)
    assert degrees.sum_of_squares() == g.order
    assert degrees.linear_count() == derived_subgroup_index(g)
    print(f"{g.name:>6s} {g.order:5d} {len(cc.reps):8d} "
          f"{degrees.linear_count():7d}  {degrees.degrees}")
print()
print("every row satisfies sum(d^2) = |G| and #linear = [G : G'].")
print()

print("a group handed in as raw permutation generators (affine maps on Z/5):")
g = group_from_permutations([[1, 2, 3, 4, 0], [0, 2, 4, 1, 3]])
print(f"  order {g.order}, degrees {irreducible_degrees(g).degrees}")
print()

print("seed independence on A_6:")
a6 = alternating_group(6)
for seed in (0, 1, 2025):
    print(f"  seed {seed:5d}: {irreducible_degrees(a6, seed=seed).degrees}")
