"""
Walking the Young lattice
=========================

Covers, dominoes and path counts for small partitions.
"""

from wlpoly import Partition, border_strips_down, covers_up, f_count, partitions_of

lam = Partition((3, 2, 1))

# boxes that can be added, with their contents
for step in covers_up(lam):
    print(f"{lam} -> {step.larger}  content {step.content:+d}")

# a staircase has no removable domino at all
print(lam, "dominoes:", border_strips_down(lam, 2))

# elsewhere a vertical domino carries a minus sign
mu = Partition((3, 3, 1))
for strip in border_strips_down(mu, 2):
    print(f"{mu} / {strip.smaller}  height {strip.height}  sign {strip.sign:+d}")

# F counts standard tableaux, and the squares add up to n!
n = 6
print(sum(f_count(mu) ** 2 for mu in partitions_of(n)), "= 6! = 720")
