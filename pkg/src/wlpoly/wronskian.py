"""Determinant-based Wronskian polynomials indexed by partitions."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .partitions import Partition, degree_vector
from .polyalg import ALPHA, ONE, MPoly, PolyMatrix, determinant
from .sequences import (
    AppellSpec,
    appell_from_coeffs,
    classical_laguerre,
    hermite,
    modified_jacobi,
    modified_laguerre,
)

__all__ = [
    "Family",
    "LAGUERRE",
    "HERMITE",
    "CLASSICAL_LAGUERRE",
    "jacobi",
    "custom",
    "WronskianRequest",
    "NonMonicResult",
    "DegenerateLeadingCoefficient",
    "wronskian_matrix",
    "wronskian_poly",
    "wronskian_classical_monic",
    "vandermonde_factor",
]


class NonMonicResult(AssertionError):
    pass


class DegenerateLeadingCoefficient(ArithmeticError):
    pass


@dataclass(frozen=True)
class Family:
    """A named polynomial sequence ``n -> P_n``."""

    kind: str
    alpha0: Fraction | None = None
    beta0: Fraction | None = None
    spec: AppellSpec | None = None

    def member(self, n: int) -> MPoly:
        if self.kind == "modified_laguerre":
            return modified_laguerre(n)
        if self.kind == "hermite":
            return hermite(n)
        if self.kind == "classical_laguerre":
            return classical_laguerre(n)
        if self.kind == "modified_jacobi":
            return modified_jacobi(n, self.alpha0, self.beta0)
        if self.kind == "custom":
            return appell_from_coeffs(self.spec, n)
        raise ValueError(f"unknown family {self.kind!r}")

    @property
    def is_integral(self) -> bool:
        # integer coefficients in x and alpha, so Wronskian divisions stay in Z
        return self.kind in ("modified_laguerre", "hermite")

    @property
    def is_appell(self) -> bool:
        return self.kind != "classical_laguerre"


LAGUERRE = Family("modified_laguerre")
HERMITE = Family("hermite")
CLASSICAL_LAGUERRE = Family("classical_laguerre")


def jacobi(alpha0, beta0) -> Family:
    return Family("modified_jacobi", Fraction(alpha0), Fraction(beta0))


def custom(spec: AppellSpec) -> Family:
    return Family("custom", spec=spec)


@dataclass(frozen=True)
class WronskianRequest:
    family: Family
    partition: Partition


def wronskian_matrix(req: WronskianRequest) -> PolyMatrix:
    """Row ``i`` holds the ``i``-th x-derivatives of ``P_{n_1}, ..., P_{n_r}``."""
    degrees = degree_vector(req.partition)
    row = [req.family.member(n) for n in degrees]
    rows = []
    for _ in degrees:
        rows.append(row)
        row = [p.derivative_x() for p in row]
    return PolyMatrix(len(degrees), len(degrees), tuple(p for r in rows for p in r))


def vandermonde_factor(degrees) -> int:
    """``prod_{i<j} (n_j - n_i)``."""
    out = 1
    for i in range(len(degrees)):
        for j in range(i + 1, len(degrees)):
            out *= degrees[j] - degrees[i]
    return out


@lru_cache(maxsize=None)
def _wronskian_poly(family: Family, lam: Partition) -> MPoly:
    det = determinant(wronskian_matrix(WronskianRequest(family, lam)))
    result = det.exact_div(vandermonde_factor(degree_vector(lam)), integral=family.is_integral)
    if not result.is_monic_x(lam.size):
        raise NonMonicResult(f"Wronskian for {lam} in {family.kind} is not monic of degree {lam.size}")
    return result


def wronskian_poly(req: WronskianRequest) -> MPoly:
    """Normalised Wronskian ``Wr[P_{n_1}, ..., P_{n_r}] / prod_{i<j}(n_j - n_i)``.

    Only meaningful for Appell families, where the result is monic of
    degree ``|lambda|``; use :func:`wronskian_classical_monic` for the
    classical Laguerre polynomials.
    """
    if not req.family.is_appell:
        raise ValueError("classical Laguerre is not Appell; use wronskian_classical_monic")
    return _wronskian_poly(req.family, req.partition)


@lru_cache(maxsize=None)
def _classical_monic(lam: Partition, alpha0) -> MPoly:
    det = determinant(wronskian_matrix(WronskianRequest(CLASSICAL_LAGUERRE, lam)))
    if alpha0 is not None:
        det = det.substitute("alpha", alpha0)
    lead = det.leading_coeff_x()
    if det.degree_x() != lam.size or not lead.is_constant() or not lead:
        raise DegenerateLeadingCoefficient(f"leading coefficient {lead} for {lam}")
    return det / lead.constant_value()


def wronskian_classical_monic(lam: Partition, alpha=None) -> MPoly:
    """Monic multiple of the Wronskian of classical Laguerre polynomials.

    ``alpha`` is ``None`` for a symbolic parameter or a rational value.
    The normalising constant is the reciprocal of the observed leading
    coefficient, which does not depend on alpha.
    """
    return _classical_monic(lam, None if alpha is None else Fraction(alpha))
