"""
Rectangles and conjugates
=========================

For rectangular shapes the classical Laguerre Wronskian, made monic, is a
modified one on the transposed rectangle with a shifted parameter.
"""

from wlpoly import ALPHA, conjugate, rectangle, serialize, wlp_thm1, wronskian_classical_monic

lam = rectangle(3, 2)  # two rows of length three
lhs = wronskian_classical_monic(lam)
rhs = wlp_thm1(conjugate(lam)).substitute("alpha", -ALPHA - 3)

print("shape", lam, "conjugate", conjugate(lam))
print(serialize(lhs, "human"))
print("equal:", lhs == rhs)
