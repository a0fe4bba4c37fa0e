"""
Averages under the Plancherel measure
=====================================

Weighting each l_lambda by F_lambda^2 / n! collapses the whole level of
the lattice to a single power.
"""

from math import factorial

from wlpoly import ALPHA, X, f_count, partitions_of, serialize, wlp_thm1

for n in range(6):
    total = sum((wlp_thm1(lam) * f_count(lam) ** 2 for lam in partitions_of(n)), start=0 * X)
    avg = total / factorial(n)
    print(n, serialize(avg, "human"), avg == (X + ALPHA) ** n)
