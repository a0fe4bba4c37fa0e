"""Polynomial families: classical and modified Laguerre, Hermite, modified
Jacobi, and Appell sequences built from log-generating-function coefficients.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Callable, Sequence

from .polyalg import ALPHA, ONE, X, ZERO, MPoly

__all__ = [
    "AppellSpec",
    "SequenceCache",
    "SingularParameter",
    "InsufficientCoefficients",
    "BadNormalization",
    "classical_laguerre",
    "modified_laguerre",
    "modified_laguerre_via_transform",
    "hermite",
    "modified_jacobi",
    "appell_from_coeffs",
    "c_from_z",
    "appell_spec_for",
]


class SingularParameter(ValueError):
    pass


class InsufficientCoefficients(ValueError):
    pass


class BadNormalization(ValueError):
    pass


class SequenceCache:
    """Append-only memo of a recurrence-defined sequence.

    Entries are only published after they are fully built, so concurrent
    readers never observe a partial value.
    """

    def __init__(self, name: str, step: Callable[[int, list], MPoly]):
        self.name = name
        self._step = step
        self._memo: list[MPoly] = []
        self._lock = threading.Lock()

    def __getitem__(self, n: int) -> MPoly:
        if n < 0:
            return ZERO
        memo = self._memo
        if n < len(memo):
            return memo[n]
        with self._lock:
            while len(self._memo) <= n:
                k = len(self._memo)
                self._memo.append(self._step(k, self._memo))
        return self._memo[n]


def _laguerre_step(n: int, prev: list) -> MPoly:
    if n == 0:
        return ONE
    if n == 1:
        return -X + ALPHA + 1
    # n L_n = (2n - 1 + alpha - x) L_{n-1} - (n - 1 + alpha) L_{n-2}
    top = (ALPHA - X + (2 * n - 1)) * prev[n - 1] - (ALPHA + (n - 1)) * prev[n - 2]
    return top / n


def _modified_laguerre_step(n: int, prev: list) -> MPoly:
    if n == 0:
        return ONE
    if n == 1:
        return X + ALPHA
    return (X + ALPHA + (1 - n)) * prev[n - 1] + X * (n - 1) * prev[n - 2]


def _hermite_step(n: int, prev: list) -> MPoly:
    if n == 0:
        return ONE
    if n == 1:
        return X
    return X * prev[n - 1] - prev[n - 2] * (n - 1)


_classical = SequenceCache("classical_laguerre", _laguerre_step)
_modified = SequenceCache("modified_laguerre", _modified_laguerre_step)
_hermite = SequenceCache("hermite", _hermite_step)


def classical_laguerre(n: int) -> MPoly:
    """``L_n^{(alpha)}(x)`` with symbolic alpha; zero for negative ``n``."""
    return _classical[n]


def modified_laguerre(n: int) -> MPoly:
    """``l_n^{(alpha)}(x) = n! L_n^{(alpha-n)}(-x)``, monic and Appell."""
    return _modified[n]


def modified_laguerre_via_transform(n: int) -> MPoly:
    """Same polynomial built by shifting alpha and reflecting x in ``L_n``."""
    if n < 0:
        return ZERO
    p = classical_laguerre(n).substitute("alpha", ALPHA - n).substitute("x", -X)
    return p * factorial(n)


def hermite(n: int) -> MPoly:
    """Monic probabilists' Hermite ``He_n``."""
    return _hermite[n]


_jacobi_caches: dict[tuple, SequenceCache] = {}
_jacobi_lock = threading.Lock()


def _jacobi_cache(a0: Fraction, b0: Fraction) -> SequenceCache:
    key = (a0, b0)
    with _jacobi_lock:
        cache = _jacobi_caches.get(key)
        if cache is None:
            s = a0 + b0

            def step(n: int, prev: list) -> MPoly:
                if n == 0:
                    return ONE
                lead = s - n + 1
                if lead == 0:
                    raise SingularParameter(
                        f"alpha+beta-{n}+1 vanishes at (alpha, beta) = ({a0}, {b0})"
                    )
                rhs = (X * (s - 2 * n + 2) + (a0 - b0)) * prev[n - 1]
                if n >= 2:
                    rhs = rhs + (X * X - 1) * (n - 1) * prev[n - 2]
                return rhs / lead

            cache = SequenceCache(f"modified_jacobi({a0},{b0})", step)
            _jacobi_caches[key] = cache
    return cache


def modified_jacobi(n: int, alpha0, beta0) -> MPoly:
    """Monic Appell rescaling of ``P_n^{(alpha-n, beta-n)}`` at rational parameters.

    Raises :class:`SingularParameter` when ``alpha0 + beta0 - k + 1 = 0``
    for some ``1 <= k <= n``.
    """
    if n < 0:
        return ZERO
    return _jacobi_cache(Fraction(alpha0), Fraction(beta0))[n]


@dataclass(frozen=True)
class AppellSpec:
    """An Appell sequence given by the coefficients ``c_1, c_2, ...`` of
    ``log f(t) = sum c_n t^n / n!`` where ``sum A_n t^n/n! = e^{xt} f(t)``.
    """

    kind: str
    c_coeffs: tuple

    def __post_init__(self):
        coeffs = tuple(MPoly.coerce(c) for c in self.c_coeffs)
        for c in coeffs:
            if c.degree_x() not in (0, float("-inf")):
                raise ValueError("Appell coefficients must not depend on x")
        object.__setattr__(self, "c_coeffs", coeffs)


def appell_from_coeffs(spec: AppellSpec, n: int) -> MPoly:
    """``A_n = x A_{n-1} + sum_{k=1}^n C(n-1, k-1) c_k A_{n-k}``, ``A_0 = 1``."""
    if n > len(spec.c_coeffs):
        raise InsufficientCoefficients(f"need c_1..c_{n}, have {len(spec.c_coeffs)}")
    c = spec.c_coeffs
    seq = [ONE]
    for m in range(1, n + 1):
        acc = X * seq[m - 1]
        for k in range(1, m + 1):
            if c[k - 1]:
                acc = acc + c[k - 1] * seq[m - k] * comb(m - 1, k - 1)
        seq.append(acc)
    return seq[n]


def c_from_z(z: Sequence) -> list[MPoly]:
    """Solve ``z_n = c_n + sum_{i=1}^{n-1} C(n-1, i) c_{n-i} z_i`` for ``c_1..c_N``.

    ``z`` is ``(z_0, z_1, ..., z_N)`` with ``z_n = A_n(0)``; ``z_0`` must be 1.
    """
    z = [MPoly.coerce(v) for v in z]
    if not z or z[0] != ONE:
        raise BadNormalization("z_0 must equal 1")
    c: list[MPoly] = []
    for n in range(1, len(z)):
        acc = z[n]
        for i in range(1, n):
            acc = acc - c[n - i - 1] * z[i] * comb(n - 1, i)
        c.append(acc)
    return c


def appell_spec_for(kind: str, n_max: int) -> AppellSpec:
    """Recover the log-coefficients of a built-in family from its values at 0."""
    family = {"modified_laguerre": modified_laguerre, "hermite": hermite}[kind]
    z = [family(k).substitute("x", 0) for k in range(n_max + 1)]
    return AppellSpec(kind, tuple(c_from_z(z)))
