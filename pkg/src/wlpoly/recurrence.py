"""Recurrences down the Young lattice for Wronskian Laguerre and Hermite
polynomials, and the permutation-sum decomposition behind the Laguerre one.

Tables store ``F_lambda * P_lambda`` rather than ``P_lambda``; the division
by ``F_lambda`` happens only when a value leaves the table and must be
exact in the integers.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from math import factorial
from typing import Callable, Iterator

from .partitions import (
    Partition,
    border_strips_down,
    covers_down,
    degree_vector,
    f_count,
)
from .polyalg import ALPHA, ONE, X, ZERO, InexactDivision, MPoly, permutation_sign
from .sequences import modified_laguerre

__all__ = [
    "RecurrenceTable",
    "ProofDecomposition",
    "LengthBoundExceeded",
    "wlp_thm1",
    "wlp_alt",
    "whp_recurrence",
    "proof_decomposition",
    "thm1_table",
    "alt_table",
    "hermite_table",
    "t_map",
    "t_map_domain",
    "DEFAULT_LENGTH_BOUND",
]

DEFAULT_LENGTH_BOUND = 6


class LengthBoundExceeded(ValueError):
    pass


Rule = Callable[[Partition, Callable[[Partition], MPoly]], MPoly]


class RecurrenceTable:
    """Memo of ``F_lambda * P_lambda`` filled by a recurrence rule.

    ``rule(lam, get)`` returns ``F_lambda * P_lambda`` given ``get``,
    which yields the stored value of any smaller partition.
    """

    def __init__(self, name: str, rule: Rule):
        self.name = name
        self._rule = rule
        self._memo: dict[Partition, MPoly] = {Partition(()): ONE}
        self._lock = threading.RLock()

    def weighted(self, lam: Partition) -> MPoly:
        """``F_lambda * P_lambda``."""
        value = self._memo.get(lam)
        if value is not None:
            return value
        with self._lock:
            if lam not in self._memo:
                # build dependencies bottom-up to keep the recursion shallow
                for mu in _downset_by_size(lam):
                    if mu not in self._memo:
                        self._memo[mu] = self._rule(mu, self._memo.__getitem__)
            return self._memo[lam]

    def __call__(self, lam: Partition) -> MPoly:
        F = f_count(lam)
        try:
            return self.weighted(lam).exact_div(F)
        except InexactDivision as exc:
            raise InexactDivision(f"{self.name}: F_{lam} = {F} does not divide: {exc}") from None

    def __contains__(self, lam: Partition) -> bool:
        return lam in self._memo

    def clear(self):
        with self._lock:
            self._memo = {Partition(()): ONE}


def _downset_by_size(lam: Partition) -> list[Partition]:
    """All partitions contained in ``lam``, by increasing size."""
    seen = {lam}
    frontier = [lam]
    while frontier:
        nxt = []
        for p in frontier:
            if not p:
                continue
            for step in covers_down(p):
                if step.smaller not in seen:
                    seen.add(step.smaller)
                    nxt.append(step.smaller)
        frontier = nxt
    return sorted(seen, key=lambda p: (p.size, p))


def _thm1_rule(lam: Partition, get) -> MPoly:
    total = ZERO
    for step in covers_down(lam):
        total = total + (X + ALPHA - step.content) * get(step.smaller)
    dominoes = ZERO
    for strip in border_strips_down(lam, 2):
        term = get(strip.smaller)
        dominoes = dominoes - term if strip.height % 2 else dominoes + term
    if dominoes:
        total = total + X * dominoes * (lam.size - 1)
    return total


def _alt_rule(lam: Partition, get) -> MPoly:
    n = lam.size
    total = ZERO
    for step in covers_down(lam):
        total = total + get(step.smaller)
    total = (X + ALPHA) * total
    extra = ZERO
    for k in range(2, n + 1):
        strips = ZERO
        for strip in border_strips_down(lam, k):
            term = get(strip.smaller)
            strips = strips - term if strip.height % 2 else strips + term
        if strips:
            coeff = factorial(n - 1) // factorial(n - k)
            extra = extra + strips * (-coeff if k % 2 == 0 else coeff)
    return total + ALPHA * extra


def _hermite_rule(lam: Partition, get) -> MPoly:
    total = ZERO
    for step in covers_down(lam):
        total = total + get(step.smaller)
    total = X * total
    dominoes = ZERO
    for strip in border_strips_down(lam, 2):
        term = get(strip.smaller)
        dominoes = dominoes - term if strip.height % 2 else dominoes + term
    if dominoes:
        total = total - dominoes * (lam.size - 1)
    return total


thm1_table = RecurrenceTable("laguerre-thm1", _thm1_rule)
alt_table = RecurrenceTable("laguerre-alt", _alt_rule)
hermite_table = RecurrenceTable("hermite", _hermite_rule)


def wlp_thm1(lam: Partition) -> MPoly:
    """Wronskian Laguerre polynomial from the cover/domino recurrence.

    ``F_l l_l = sum_{mu<.l} (x + a - c(l/mu)) F_mu l_mu
    + x(|l|-1) sum_{rho in R2-(l)} (-1)^ht F_rho l_rho``.
    """
    return thm1_table(lam)


def wlp_alt(lam: Partition) -> MPoly:
    """Wronskian Laguerre polynomial from the recurrence over all border strips."""
    return alt_table(lam)


def whp_recurrence(lam: Partition) -> MPoly:
    """Wronskian Hermite polynomial from its cover/domino recurrence."""
    return hermite_table(lam)


# permutation-sum decomposition


@dataclass(frozen=True)
class ProofDecomposition:
    """``F_lambda l_lambda = A + sign_prefactor * B + C``."""

    A: MPoly
    B: MPoly
    C: MPoly
    sign_prefactor: int

    def total(self) -> MPoly:
        return self.A + self.B * self.sign_prefactor + self.C


def _inv_factorial(n: int) -> Fraction:
    # 1/n! vanishes for negative n
    return Fraction(0) if n < 0 else Fraction(1, factorial(n))


def _lag(n: int) -> MPoly:
    return ZERO if n < 0 else modified_laguerre(n)


def proof_decomposition(
    lam: Partition, max_length: int = DEFAULT_LENGTH_BOUND, family: Callable[[int], MPoly] = _lag
) -> ProofDecomposition:
    """Evaluate the three permutation sums obtained by applying the
    modified Laguerre three-term recurrence to one factor of each
    Wronskian term.

    Permutations are 1-based tuples ``sigma`` with ``sigma[i-1] = sigma(i)``
    and the shifted degrees are ``sigma(n)_i = n_i - sigma(i) + 1``.
    """
    if not lam:
        raise ValueError("decomposition needs a non-empty partition")
    r = lam.length
    if r > max_length:
        raise LengthBoundExceeded(f"length {r} exceeds bound {max_length}")
    n = degree_vector(lam)
    size = lam.size
    sign = -1 if (r * (r - 1) // 2) % 2 else 1
    pref = sign * factorial(size - 1)

    A = ZERO
    B = ZERO
    C = ZERO
    for sigma in permutations(range(1, r + 1)):
        sg = permutation_sign(sigma)
        shifted = [n[i] - sigma[i] + 1 for i in range(r)]
        others = [family(s) for s in shifted]
        for j in range(r):
            # 1 / prod_i sigma(n[j])_i!
            weight = _inv_factorial(shifted[j] - 1)
            if not weight:
                continue
            for i in range(r):
                if i != j:
                    weight *= _inv_factorial(shifted[i])
            if not weight:
                continue
            rest = ONE
            for i in range(r):
                if i != j:
                    rest = rest * others[i]
            if not rest:
                continue
            lower1 = family(shifted[j] - 1) * rest
            if lower1:
                row = j + 1
                A = A + (X + ALPHA + (row - lam.parts[j])) * lower1 * (sg * weight * pref)
                B = B + lower1 * (sg * (sigma[j] - r) * weight)
            lower2 = family(shifted[j] - 2) * rest
            if lower2:
                C = C + X * lower2 * (sg * (shifted[j] - 1) * weight * pref)
    return ProofDecomposition(A, B, C, pref)


def t_map_domain(r: int) -> Iterator[tuple[int, tuple[int, ...]]]:
    """Pairs ``(j, sigma)`` with ``sigma(j) != r``, ``j`` and ``sigma`` 1-based."""
    for sigma in permutations(range(1, r + 1)):
        for j in range(1, r + 1):
            if sigma[j - 1] != r:
                yield j, sigma


def t_map(j: int, sigma: tuple[int, ...]) -> tuple[int, tuple[int, ...]]:
    """``(j, sigma) -> (k, sigma o (j k))`` with ``k = sigma^{-1}(sigma(j) + 1)``."""
    k = sigma.index(sigma[j - 1] + 1) + 1
    tau = list(sigma)
    tau[j - 1], tau[k - 1] = sigma[k - 1], sigma[j - 1]
    return k, tuple(tau)
