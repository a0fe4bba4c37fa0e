"""Batch checks of the identities satisfied by Wronskian Laguerre polynomials
and of the combinatorics underneath them.

Every check returns a :class:`VerificationReport`. A report passes only
when every residual it computed is exactly zero.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Any, Callable, Iterable, Sequence

from .partitions import (
    Partition,
    border_strips_down,
    border_strips_up,
    conjugate,
    covers_down,
    covers_up,
    degree_vector,
    f_count,
    f_count_oracle,
    partitions_of,
    partitions_up_to,
    rectangle,
)
from .polyalg import ALPHA, X, ZERO, MPoly, permutation_sign, solve_linear, to_json_obj
from .recurrence import (
    proof_decomposition,
    t_map,
    t_map_domain,
    whp_recurrence,
    wlp_alt,
    wlp_thm1,
)
from .sequences import (
    appell_from_coeffs,
    appell_spec_for,
    hermite,
    modified_laguerre,
)
from .wronskian import (
    HERMITE,
    LAGUERRE,
    WronskianRequest,
    jacobi,
    wronskian_classical_monic,
    wronskian_poly,
)

__all__ = [
    "VerificationReport",
    "ZeroDenominator",
    "check_thm1",
    "check_alt",
    "check_hermite",
    "check_average",
    "check_content_transfer",
    "check_weighted_content_sum",
    "check_degree_vector_identity",
    "check_decomposition",
    "check_t_map",
    "check_appell",
    "check_combinatorics",
    "rectangle_duality",
    "jacobi_form_search",
    "jacobi_system",
    "recurrence_form_system",
    "plancherel_normalization",
    "DEFAULT_JACOBI_SAMPLES",
    "IDENTITIES",
    "run_identity",
]


class ZeroDenominator(ZeroDivisionError):
    pass


@dataclass
class VerificationReport:
    identity: str
    range: Any
    status: str  # "pass", "fail" or "infeasible"
    witness: Any = None
    ms: float = 0.0
    details: dict = field(default_factory=dict, repr=False, compare=False)

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    @property
    def failed(self) -> bool:
        return self.status == "fail"

    def to_dict(self) -> dict:
        return {
            "identity": self.identity,
            "range": self.range,
            "status": self.status,
            "witness": self.witness,
            "ms": round(self.ms, 3),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=False)


def _report(identity: str, rng, residual_or_ok, start: float, witness_partition=None):
    """Build a report from a residual polynomial, an integer residual or a bool."""
    ms = (time.perf_counter() - start) * 1000
    if isinstance(residual_or_ok, bool):
        ok = residual_or_ok
        residual = None
    else:
        ok = not residual_or_ok
        residual = residual_or_ok
    if ok:
        return VerificationReport(identity, rng, "pass", None, ms)
    witness = {"partition": list(witness_partition.parts) if witness_partition is not None else None}
    if isinstance(residual, MPoly):
        witness["residual"] = to_json_obj(residual)
    elif residual is not None:
        witness["residual"] = str(residual)
    return VerificationReport(identity, rng, "fail", witness, ms)


def _rng(lam: Partition):
    return list(lam.parts)


# recurrence vs determinant oracle


def check_thm1(lam: Partition) -> VerificationReport:
    start = time.perf_counter()
    residual = wlp_thm1(lam) - wronskian_poly(WronskianRequest(LAGUERRE, lam))
    return _report("thm1", _rng(lam), residual, start, lam)


def check_alt(lam: Partition) -> VerificationReport:
    start = time.perf_counter()
    residual = wlp_alt(lam) - wronskian_poly(WronskianRequest(LAGUERRE, lam))
    return _report("alt", _rng(lam), residual, start, lam)


def check_hermite(lam: Partition) -> VerificationReport:
    start = time.perf_counter()
    residual = whp_recurrence(lam) - wronskian_poly(WronskianRequest(HERMITE, lam))
    return _report("hermite", _rng(lam), residual, start, lam)


# averaging and content identities


def check_average(n: int) -> VerificationReport:
    """``sum_{lam |- n} F_lam^2 l_lam = n! (x + alpha)^n``."""
    start = time.perf_counter()
    total = ZERO
    for lam in partitions_of(n):
        F = f_count(lam)
        total = total + wlp_thm1(lam) * (F * F)
    residual = total - (X + ALPHA) ** n * factorial(n)
    return _report("average", n, residual, start)


def check_content_transfer(mu: Partition) -> VerificationReport:
    """Sum of contents of addable boxes equals sum over removable boxes."""
    start = time.perf_counter()
    up = sum(s.content for s in covers_up(mu))
    down = sum(s.content for s in covers_down(mu)) if mu else 0
    return _report("content", _rng(mu), up - down, start, mu)


def check_weighted_content_sum(mu: Partition) -> VerificationReport:
    """``sum_{lam covering mu} F_lam c(lam/mu) = 0``."""
    start = time.perf_counter()
    total = sum(f_count(s.larger) * s.content for s in covers_up(mu))
    return _report("weighted-content", _rng(mu), total, start, mu)


def _degree_vector_sides(n: Sequence[int]) -> tuple[Fraction, Fraction]:
    r = len(n)
    if len(set(n)) != r:
        raise ZeroDenominator(f"repeated entries in {tuple(n)}")
    if any(v + 1 == 0 for v in n):
        raise ZeroDenominator(f"entry -1 in {tuple(n)}")
    lhs = Fraction(0)
    for k in range(r):
        term = Fraction(n[k] + 1 - r, n[k] + 1)
        for j in range(r):
            if j != k:
                term *= Fraction(n[k] + 1 - n[j], n[k] - n[j])
        lhs += term
    rhs = Fraction(r)
    for v in n:
        rhs *= Fraction(v, v + 1)
    return lhs, rhs


def check_degree_vector_identity(n: Sequence[int]) -> VerificationReport:
    """The weighted-content identity rewritten as a rational identity in the
    degree vector ``n``."""
    start = time.perf_counter()
    lhs, rhs = _degree_vector_sides(tuple(n))
    return _report("degree-vector", list(n), lhs - rhs, start)


def plancherel_normalization(n: int) -> VerificationReport:
    start = time.perf_counter()
    total = sum(f_count(lam) ** 2 for lam in partitions_of(n))
    return _report("plancherel", n, total - factorial(n), start)


# decomposition


def check_decomposition(lam: Partition, max_length: int = 5) -> VerificationReport:
    """``B = 0``, ``A`` and ``C`` match their lattice forms, and the three add up."""
    start = time.perf_counter()
    dec = proof_decomposition(lam, max_length=max_length)

    def weighted(p: Partition) -> MPoly:
        return wronskian_poly(WronskianRequest(LAGUERRE, p)) * f_count(p)

    target = weighted(lam)
    a_form = ZERO
    for step in covers_down(lam):
        a_form = a_form + (X + ALPHA - step.content) * weighted(step.smaller)
    c_form = ZERO
    for strip in border_strips_down(lam, 2):
        term = weighted(strip.smaller) * strip.sign
        c_form = c_form + term
    c_form = X * c_form * (lam.size - 1)
    for name, residual in (
        ("B", dec.B),
        ("A", dec.A - a_form),
        ("C", dec.C - c_form),
        ("total", dec.total() - target),
    ):
        if residual:
            rep = _report("decomposition", _rng(lam), residual, start, lam)
            rep.witness["term"] = name
            return rep
    return _report("decomposition", _rng(lam), True, start)


def check_t_map(r: int, lam: Partition | None = None) -> VerificationReport:
    """The pairing on ``{(j, sigma): sigma(j) != r}`` is a sign-reversing involution
    preserving the lowered degree vectors ``sigma(n[j])``."""
    start = time.perf_counter()
    n = degree_vector(lam) if lam is not None else tuple(range(2 * r - 1, r - 1, -1))
    if len(n) != r:
        raise ValueError("partition length must equal r")

    def lowered(j, sigma):
        return tuple(n[i] - sigma[i] + 1 - (1 if i == j - 1 else 0) for i in range(r))

    domain = set(t_map_domain(r))
    for j, sigma in domain:
        k, tau = t_map(j, sigma)
        ok = (
            (k, tau) in domain
            and t_map(k, tau) == (j, sigma)
            and permutation_sign(tau) == -permutation_sign(sigma)
            and tau[k - 1] == sigma[j - 1]
            and lowered(j, sigma) == lowered(k, tau)
        )
        if not ok:
            rep = _report("t-map", r, False, start)
            rep.witness = {"j": j, "sigma": list(sigma)}
            return rep
    return _report("t-map", r, True, start)


# Appell machinery


def check_appell(n: int, n_max: int = 12) -> VerificationReport:
    """Rebuild ``l_n`` and ``He_n`` from recovered log-coefficients and check
    the derivative property of the recovered sequences up to ``n_max``."""
    start = time.perf_counter()
    for kind, fam in (("modified_laguerre", modified_laguerre), ("hermite", hermite)):
        spec = appell_spec_for(kind, max(n, 1))
        residual = appell_from_coeffs(spec, n) - fam(n)
        if residual:
            rep = _report("appell", n, residual, start)
            rep.witness["family"] = kind
            return rep
        if 1 <= n <= n_max:
            residual = fam(n).derivative_x() - fam(n - 1) * n
            if residual:
                rep = _report("appell", n, residual, start)
                rep.witness["family"] = kind
                return rep
    return _report("appell", n, True, start)


def check_combinatorics(lam: Partition) -> VerificationReport:
    """Path-count formula vs lattice DP, the cover sums, and strip duality."""
    start = time.perf_counter()
    F = f_count(lam)
    problems = []
    if lam.size <= 12 and F != f_count_oracle(lam):
        problems.append("f_count")
    if lam and F != sum(f_count(s.smaller) for s in covers_down(lam)):
        problems.append("cover-sum")
    if sum(f_count(s.larger) for s in covers_up(lam)) != (lam.size + 1) * F:
        problems.append("up-cover-sum")
    if sum(f_count(s.larger) * s.sign for s in border_strips_up(lam, 2)) != 0:
        problems.append("domino-sum")
    for k in range(1, 5):
        for s in border_strips_down(lam, k):
            if lam not in {t.larger for t in border_strips_up(s.smaller, k)}:
                problems.append(f"strip-duality-{k}")
    if problems:
        rep = _report("combinatorics", _rng(lam), False, start, lam)
        rep.witness["checks"] = problems
        return rep
    return _report("combinatorics", _rng(lam), True, start)


# rectangles


def rectangle_duality(n: int, m: int) -> VerificationReport:
    """``m`` rows of length ``n``: classical Wronskian at alpha equals the
    modified one on the conjugate rectangle at ``-alpha - n``."""
    start = time.perf_counter()
    lam = rectangle(n, m)
    lhs = wronskian_classical_monic(lam)
    rhs = wlp_thm1(conjugate(lam)).substitute("alpha", -ALPHA - n)
    return _report("rectangle", [n, m], lhs - rhs, start, lam)


# Jacobi


DEFAULT_JACOBI_SAMPLES = (
    (Fraction(1, 2), Fraction(1, 3)),
    (Fraction(2, 7), Fraction(5, 11)),
    (Fraction(13, 5), Fraction(-3, 4)),
)


def recurrence_form_system(lam: Partition, family):
    """Coefficient-matching system for a recurrence of the shape

    ``F_l P_l = sum_{mu <. l} (a x + b) F_mu P_mu
    + sum_{rho in R2-(l)} (c x^2 + d x + e) F_rho P_rho``

    for an Appell ``family`` whose members have x-only coefficients.
    Returns ``(A, b, unknowns)``; unknowns are ``(a, b)`` per lower cover
    followed by ``(c, d, e)`` per domino removal.
    """

    def wr(p: Partition) -> MPoly:
        return wronskian_poly(WronskianRequest(family, p)) * f_count(p)

    columns: list[MPoly] = []
    unknowns: list[tuple[str, list[int]]] = []
    for step in covers_down(lam):
        base = wr(step.smaller)
        columns += [X * base, base]
        unknowns += [(v, list(step.smaller.parts)) for v in ("a", "b")]
    for strip in border_strips_down(lam, 2):
        base = wr(strip.smaller)
        columns += [X * X * base, X * base, base]
        unknowns += [(v, list(strip.smaller.parts)) for v in ("c", "d", "e")]
    target = wr(lam)

    def coeff(p: MPoly, k: int):
        c = p.coeff_x(k)
        return c.constant_value() if c else 0

    rows = lam.size + 1
    A = [[coeff(col, k) for col in columns] for k in range(rows)]
    b = [coeff(target, k) for k in range(rows)]
    return A, b, unknowns


def jacobi_system(lam: Partition, a0, b0):
    """:func:`recurrence_form_system` for modified Jacobi at ``(a0, b0)``."""
    return recurrence_form_system(lam, jacobi(a0, b0))


def jacobi_form_search(lam: Partition, samples: Iterable = DEFAULT_JACOBI_SAMPLES) -> VerificationReport:
    """Decide at each parameter sample whether the Laguerre-shaped recurrence
    has a solution for ``lam``.

    ``pass`` if solvable at every sample, ``infeasible`` if infeasible at
    every sample (the witness carries the certificates ``y`` with
    ``y A = 0`` and ``y b != 0``), ``fail`` if the samples disagree.
    """
    start = time.perf_counter()
    samples = [(Fraction(a), Fraction(b)) for a, b in samples]
    per_sample = []
    for a0, b0 in samples:
        A, b, unknowns = jacobi_system(lam, a0, b0)
        sol = solve_linear(A, b)
        per_sample.append((a0, b0, A, b, unknowns, sol))
    ms = (time.perf_counter() - start) * 1000
    feasible = [s[5].feasible for s in per_sample]
    details = {"samples": per_sample}
    if all(feasible):
        rep = VerificationReport("jacobi", _rng(lam), "pass", None, ms, details)
    elif not any(feasible):
        certs = [
            {
                "alpha": str(a0),
                "beta": str(b0),
                "certificate": [str(v) for v in sol.certificate],
                "residual": str(sol.residual),
            }
            for a0, b0, _, _, _, sol in per_sample
        ]
        rep = VerificationReport(
            "jacobi", _rng(lam), "infeasible", {"partition": _rng(lam), "certificates": certs}, ms, details
        )
    else:
        rep = VerificationReport(
            "jacobi",
            _rng(lam),
            "fail",
            {"partition": _rng(lam), "feasible_at": [[str(a), str(b)] for (a, b), f in zip(samples, feasible) if f]},
            ms,
            details,
        )
    return rep


# registry used by the command line


def _partitions_from(min_size: int = 0):
    return lambda max_size: [lam for lam in partitions_up_to(max_size) if lam.size >= min_size]


def _sizes(max_size: int):
    return list(range(max_size + 1))


def _rectangle_shapes(max_size: int):
    return [(n, m) for n in range(1, max_size + 1) for m in range(1, max_size + 1)]


IDENTITIES: dict[str, tuple[Callable[[int], list], Callable[[Any], VerificationReport]]] = {
    "thm1": (_partitions_from(), check_thm1),
    "alt": (_partitions_from(), check_alt),
    "hermite": (_partitions_from(), check_hermite),
    "average": (_sizes, check_average),
    "content": (_partitions_from(), check_content_transfer),
    "weighted-content": (_partitions_from(), check_weighted_content_sum),
    "degree-vector": (
        lambda m: [degree_vector(lam) for lam in partitions_up_to(m)],
        check_degree_vector_identity,
    ),
    "rectangle": (_rectangle_shapes, lambda nm: rectangle_duality(*nm)),
    "jacobi": (_partitions_from(1), jacobi_form_search),
    "plancherel": (_sizes, plancherel_normalization),
    "appell": (_sizes, check_appell),
    "decomposition": (
        lambda m: [lam for lam in partitions_up_to(m) if lam and lam.length <= 5],
        check_decomposition,
    ),
    "combinatorics": (_partitions_from(), check_combinatorics),
}


def run_identity(name: str, max_size: int, threads: int = 1) -> list[VerificationReport]:
    """Run one named check over its default range; output order never depends
    on ``threads``."""
    try:
        items, check = IDENTITIES[name]
    except KeyError:
        raise ValueError(f"unknown identity {name!r}; choose from {sorted(IDENTITIES)}") from None
    work = items(max_size)
    if threads <= 1:
        return [check(w) for w in work]
    from concurrent.futures import ThreadPoolExecutor

    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(check, work))
