import threading
from fractions import Fraction
from math import factorial

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from strategies import a_s, from_sympy, x_s
from wlpoly.polyalg import ALPHA, ONE, X, ZERO, MPoly
from wlpoly.sequences import (
    AppellSpec,
    BadNormalization,
    InsufficientCoefficients,
    SingularParameter,
    appell_from_coeffs,
    appell_spec_for,
    c_from_z,
    classical_laguerre,
    hermite,
    modified_jacobi,
    modified_laguerre,
    modified_laguerre_via_transform,
)


def sympy_jacobi_modified(n, a0, b0):
    a, b = sympy.Rational(a0.numerator, a0.denominator), sympy.Rational(b0.numerator, b0.denominator)
    scale = sympy.Integer(2) ** n * sympy.factorial(n) / sympy.rf(a + b - n + 1, n)
    return from_sympy(scale * sympy.jacobi(n, a - n, b - n, x_s))


# examples


def test_classical_laguerre_examples():
    assert classical_laguerre(0) == ONE
    assert classical_laguerre(1) == -X + ALPHA + 1
    assert classical_laguerre(2) == (X**2 - 2 * (ALPHA + 2) * X + (ALPHA + 1) * (ALPHA + 2)) / 2


def test_modified_laguerre_examples():
    assert modified_laguerre(0) == ONE
    assert modified_laguerre(1) == X + ALPHA
    assert modified_laguerre(2) == X**2 + 2 * ALPHA * X + ALPHA**2 - ALPHA
    a = ALPHA
    assert modified_laguerre(3) == X**3 + 3 * a * X**2 + 3 * a * (a - 1) * X + a * (a - 1) * (a - 2)


def test_hermite_examples():
    assert hermite(1) == X
    assert hermite(2) == X**2 - 1
    assert hermite(3) == X**3 - 3 * X


def test_jacobi_examples():
    a0, b0 = Fraction(1, 2), Fraction(1, 3)
    assert modified_jacobi(0, a0, b0) == ONE
    A1 = modified_jacobi(1, a0, b0)
    assert A1.is_monic_x(1)
    A2 = modified_jacobi(2, a0, b0)
    assert A2.derivative_x() == 2 * A1
    s = a0 + b0
    residual = A2 * (s - 1) - (X * (s - 2) + (a0 - b0)) * A1 - (X * X - 1) * ONE
    assert residual == ZERO


def test_jacobi_singular_parameters():
    with pytest.raises(SingularParameter):
        modified_jacobi(3, Fraction(1), Fraction(1))  # 1 + 1 - 3 + 1 = 0
    with pytest.raises(SingularParameter):
        modified_jacobi(1, Fraction(1, 2), Fraction(-1, 2))


# oracle sweeps


@pytest.mark.parametrize("n", range(0, 11))
def test_classical_laguerre_matches_sympy(n):
    assert classical_laguerre(n) == from_sympy(sympy.assoc_laguerre(n, a_s, x_s))


@pytest.mark.parametrize("n", range(0, 11))
def test_hermite_matches_sympy(n):
    assert hermite(n) == from_sympy(sympy.hermite_prob(n, x_s))


@pytest.mark.parametrize("n", range(0, 11))
def test_modified_laguerre_transform_identity(n):
    assert modified_laguerre(n) == modified_laguerre_via_transform(n)
    expected = sympy.factorial(n) * sympy.assoc_laguerre(n, a_s - n, -x_s)
    assert modified_laguerre(n) == from_sympy(expected)


@pytest.mark.parametrize("a0,b0", [(Fraction(1, 2), Fraction(1, 3)), (Fraction(2, 7), Fraction(5, 11)), (Fraction(13, 5), Fraction(-3, 4))])
def test_modified_jacobi_matches_sympy(a0, b0):
    for n in range(0, 8):
        assert modified_jacobi(n, a0, b0) == sympy_jacobi_modified(n, a0, b0)


@pytest.mark.parametrize("n", range(2, 11))
def test_mixed_parameter_identity(n):
    L = classical_laguerre
    shift = lambda p, k: p.substitute("alpha", ALPHA + k)  # noqa: E731
    assert L(n) * n == (-X + ALPHA + 1) * shift(L(n - 1), 1) - X * shift(L(n - 2), 2)


@pytest.mark.parametrize("n", range(1, 13))
def test_appell_property(n):
    assert modified_laguerre(n).derivative_x() == modified_laguerre(n - 1) * n
    assert hermite(n).derivative_x() == hermite(n - 1) * n
    A = lambda k: modified_jacobi(k, Fraction(2, 7), Fraction(5, 11))  # noqa: E731
    assert A(n).derivative_x() == A(n - 1) * n
    for p in (modified_laguerre(n), hermite(n), A(n)):
        assert p.is_monic_x(n)


# Appell generation


def test_appell_examples():
    herm = AppellSpec("hermite", (0, -1, 0))
    assert appell_from_coeffs(herm, 3) == X**3 - 3 * X
    lag = appell_spec_for("modified_laguerre", 3)
    assert appell_from_coeffs(lag, 3) == modified_laguerre(3)
    zero = AppellSpec("custom", (0, 0, 0, 0))
    assert appell_from_coeffs(zero, 4) == X**4
    with pytest.raises(InsufficientCoefficients):
        appell_from_coeffs(zero, 5)
    with pytest.raises(ValueError):
        AppellSpec("custom", (X,))


def test_c_from_z_examples():
    assert c_from_z([1, 0, -1, 0, 3]) == [ZERO, -ONE, ZERO, ZERO]
    assert c_from_z([1, 0, 0, 0]) == [ZERO, ZERO, ZERO]
    with pytest.raises(BadNormalization):
        c_from_z([2, 0])
    # generating function e^{xt} (1+t)^a, so c_k = a (-1)^(k-1) (k-1)!
    c = appell_spec_for("modified_laguerre", 6).c_coeffs
    assert c == tuple(ALPHA * ((-1) ** (k - 1) * factorial(k - 1)) for k in range(1, 7))


@pytest.mark.parametrize("kind,family", [("modified_laguerre", modified_laguerre), ("hermite", hermite)])
def test_c_from_z_round_trip(kind, family):
    spec = appell_spec_for(kind, 8)
    for n in range(9):
        assert appell_from_coeffs(spec, n) == family(n)


@given(st.lists(st.fractions(-3, 3, max_denominator=4), min_size=1, max_size=7))
def test_custom_appell_round_trip(cs):
    spec = AppellSpec("custom", tuple(cs))
    seq = [appell_from_coeffs(spec, n) for n in range(len(cs) + 1)]
    for n in range(1, len(seq)):
        assert seq[n].derivative_x() == seq[n - 1] * n
    z = [p.substitute("x", 0) for p in seq]
    assert c_from_z(z) == [MPoly.coerce(c) for c in cs]


def test_cache_concurrent_readers():
    from wlpoly.sequences import SequenceCache

    cache = SequenceCache("demo", lambda n, prev: X * prev[n - 1] if n else ONE)
    results = []

    def worker():
        results.append([cache[k] for k in range(30, -1, -1)])

    threads = [threading.Thread(target=worker) for _ in range(8)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert all(r == [X**k for k in range(30, -1, -1)] for r in results)
    assert cache[-1] == ZERO
