import random
from fractions import Fraction
from math import factorial

import pytest
import sympy

from strategies import a_s, from_sympy, to_sympy, x_s
from wlpoly.partitions import Partition, conjugate, degree_vector, partitions_up_to, rectangle
from wlpoly.polyalg import ALPHA, ONE, X, MPoly
from wlpoly.sequences import AppellSpec, hermite, modified_jacobi, modified_laguerre
from wlpoly.wronskian import (
    CLASSICAL_LAGUERRE,
    HERMITE,
    LAGUERRE,
    WronskianRequest,
    custom,
    jacobi,
    vandermonde_factor,
    wronskian_classical_monic,
    wronskian_matrix,
    wronskian_poly,
)

P = lambda *parts: Partition(parts)  # noqa: E731


def sympy_wronskian(family, lam):
    n = degree_vector(lam)
    if not n:
        return ONE
    funcs = [to_sympy(family(k)) for k in n]
    w = sympy.wronskian(funcs, x_s)
    return from_sympy(sympy.expand(w / vandermonde_factor(n)))


def test_matrix_examples():
    l = modified_laguerre
    m = wronskian_matrix(WronskianRequest(LAGUERRE, P(1, 1)))
    assert (m.rows, m.cols) == (2, 2)
    assert [m[0, 0], m[0, 1], m[1, 0], m[1, 1]] == [l(2), l(1), 2 * l(1), ONE]
    m = wronskian_matrix(WronskianRequest(LAGUERRE, P(4)))
    assert (m.rows, m[0, 0]) == (1, l(4))
    assert wronskian_matrix(WronskianRequest(LAGUERRE, Partition(()))).rows == 0


def test_poly_examples():
    assert wronskian_poly(WronskianRequest(LAGUERRE, P(1, 1))) == X**2 + 2 * ALPHA * X + ALPHA**2 + ALPHA
    assert wronskian_poly(WronskianRequest(HERMITE, P(1, 1))) == X**2 + 1
    assert wronskian_poly(WronskianRequest(LAGUERRE, Partition(()))) == ONE
    for n in range(1, 8):
        assert wronskian_poly(WronskianRequest(LAGUERRE, P(n))) == modified_laguerre(n)
        assert wronskian_poly(WronskianRequest(HERMITE, P(n))) == hermite(n)
    with pytest.raises(ValueError):
        wronskian_poly(WronskianRequest(CLASSICAL_LAGUERRE, P(1)))


@pytest.mark.parametrize("lam", partitions_up_to(5), ids=str)
def test_laguerre_matches_sympy_wronskian(lam):
    assert wronskian_poly(WronskianRequest(LAGUERRE, lam)) == sympy_wronskian(modified_laguerre, lam)


@pytest.mark.parametrize("lam", partitions_up_to(6), ids=str)
def test_hermite_matches_sympy_wronskian(lam):
    assert wronskian_poly(WronskianRequest(HERMITE, lam)) == sympy_wronskian(hermite, lam)


@pytest.mark.parametrize("lam", partitions_up_to(8), ids=str)
def test_monic_of_degree_size(lam):
    p = wronskian_poly(WronskianRequest(LAGUERRE, lam))
    assert p.is_monic_x(lam.size) and p.is_integral()


def test_jacobi_wronskian_matches_sympy():
    a0, b0 = Fraction(1, 2), Fraction(1, 3)
    fam = lambda n: modified_jacobi(n, a0, b0)  # noqa: E731
    for lam in partitions_up_to(4):
        assert wronskian_poly(WronskianRequest(jacobi(a0, b0), lam)) == sympy_wronskian(fam, lam)


def test_specialisation_consistency():
    rng = random.Random(20261016)
    parts = partitions_up_to(7)
    for _ in range(20):
        lam = rng.choice(parts)
        a0 = Fraction(rng.randint(-9, 9), rng.randint(1, 7))
        # the Laguerre sequence at alpha = a0, built from its log-coefficients
        spec = AppellSpec("custom", tuple(a0 * (-1) ** (k - 1) * factorial(k - 1) for k in range(1, 16)))
        fixed = wronskian_poly(WronskianRequest(custom(spec), lam))
        symbolic = wronskian_poly(WronskianRequest(LAGUERRE, lam))
        assert symbolic.substitute("alpha", a0) == fixed


def test_classical_monic_examples():
    assert wronskian_classical_monic(P(1)) == X - ALPHA - 1
    p = wronskian_classical_monic(P(2, 1))
    assert p.is_monic_x(3)
    assert wronskian_classical_monic(P(2, 1), Fraction(1, 2)) == p.substitute("alpha", Fraction(1, 2))


def test_classical_monic_matches_sympy():
    for lam in partitions_up_to(4)[1:]:
        n = degree_vector(lam)
        w = sympy.expand(sympy.wronskian([sympy.assoc_laguerre(k, a_s, x_s) for k in n], x_s))
        lead = sympy.Poly(w, x_s).LC()
        assert wronskian_classical_monic(lam) == from_sympy(sympy.expand(w / lead))


@pytest.mark.parametrize("n", range(1, 5))
@pytest.mark.parametrize("m", range(1, 5))
def test_rectangle_duality(n, m):
    lam = rectangle(n, m)
    dual = wronskian_poly(WronskianRequest(LAGUERRE, conjugate(lam))).substitute("alpha", -ALPHA - n)
    assert wronskian_classical_monic(lam) == dual


def test_vandermonde_factor():
    assert vandermonde_factor((2, 1)) == -1
    assert vandermonde_factor(()) == 1
    assert vandermonde_factor((4, 2, 1)) == (2 - 4) * (1 - 4) * (1 - 2)
