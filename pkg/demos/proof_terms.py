"""
Three permutation sums
======================

Expanding one factor of each Wronskian term with the three-term
recurrence splits F_lambda l_lambda into pieces A, B and C. The middle one
cancels in pairs.
"""

from wlpoly import Partition, proof_decomposition, serialize
from wlpoly.identities import check_t_map

dec = proof_decomposition(Partition((2, 2, 1)))
print("A =", serialize(dec.A, "human"))
print("B =", serialize(dec.B, "human"))
print("C =", serialize(dec.C, "human"))

# the pairing that makes B vanish
for r in range(1, 6):
    print(r, check_t_map(r).status)
