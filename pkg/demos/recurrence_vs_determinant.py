"""
Recurrence versus determinant
=============================

The same Wronskian Laguerre polynomial, once from a Wronskian determinant
and once by climbing the lattice.
"""

import time

from wlpoly import LAGUERRE, Partition, WronskianRequest, serialize, wlp_thm1, wronskian_poly

lam = Partition((3, 3, 2))

t0 = time.perf_counter()
by_det = wronskian_poly(WronskianRequest(LAGUERRE, lam))
t1 = time.perf_counter()
by_rec = wlp_thm1(lam)
t2 = time.perf_counter()

print(serialize(by_rec, "human"))
print("identical:", by_det == by_rec)
print(f"determinant {1000 * (t1 - t0):.1f} ms, recurrence {1000 * (t2 - t1):.1f} ms")

# fixing alpha afterwards is just a substitution
print(serialize(by_rec.substitute("alpha", 2), "human"))
