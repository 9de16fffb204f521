#!/usr/bin/env python3
"""Partition counts and the split-count function k(m, s).

k(m, s) sums pi(s_1)...pi(s_m) over ordered m-tuples summing to s; it is
computed as a convolution power and double-checked here against literal
enumeration of the splits.
"""

from ppchars.partitions import partition_count, split_count, split_count_naive

print("partition function:")
print("  n     :", *[f"{n:6d}" for n in range(11)])
print("  pi(n) :", *[f"{partition_count(n):6d}" for n in range(11)])
print()
print("pi(100) =", partition_count(100))
print("pi(1000) =", partition_count(1000), "(exact, 32 digits)")
print()

print("split counts k(m, s) for m <= 6, s <= 8:")
header = "  m\\s |" + "".join(f"{s:7d}" for s in range(9))
print(header)
print("  " + "-" * (len(header) - 2))
for m in range(1, 7):
    print(f"  {m:3d} |" + "".join(f"{split_count(m, s):7d}" for s in range(9)))
print()

print("checking the DP against literal split enumeration on a grid:")
bad = [
    (m, s)
    for m in range(1, 9)
    for s in range(13)
    if split_count(m, s) != split_count_naive(m, s)
]
print("  mismatches:", bad if bad else "none")

print()
print("the elementary bound m*s <= k(m, s):")
worst = min(
    (split_count(m, s) - m * s, m, s) for m in range(1, 9) for s in range(1, 13)
)
print(f"  tightest margin on the grid: k - m*s = {worst[0]} at (m, s) = {worst[1:]}")
