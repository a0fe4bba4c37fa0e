"""
No Laguerre-shaped recurrence for Jacobi
========================================

Match coefficients for a cover/domino recurrence with free linear and
quadratic multipliers and watch where the linear system stops having a
solution.
"""

from wlpoly import partitions_up_to
from wlpoly.identities import DEFAULT_JACOBI_SAMPLES, jacobi_form_search

for lam in partitions_up_to(6)[1:]:
    rep = jacobi_form_search(lam, DEFAULT_JACOBI_SAMPLES)
    print(f"{str(lam):<16} {rep.status}")
    if rep.status == "infeasible":
        cert = rep.witness["certificates"][0]
        print("   certificate at alpha=%s beta=%s gives 0 = %s" % (cert["alpha"], cert["beta"], cert["residual"]))
