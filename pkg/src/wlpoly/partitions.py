"""Integer partitions and the Young-lattice combinatorics around them.

Partitions are immutable, canonical (no trailing zeros) and ordered so
that sorting puts them in reverse lexicographic order, the order used
everywhere for enumeration output.

Border strips are handled through beta-sets: with a partition padded to
``L`` rows, ``beta_i = lambda_i + L - i`` and removing a border strip of
size ``k`` is the same as moving one bead from ``b`` to a free position
``b - k``. The number of beads jumped over is the height of the strip.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator

__all__ = [
    "Partition",
    "CoverStep",
    "BorderStrip",
    "DegreeVector",
    "MalformedPartition",
    "EmptyPartition",
    "OracleBoundExceeded",
    "parse_partition",
    "partitions_of",
    "partitions_up_to",
    "degree_vector",
    "from_degree_vector",
    "covers_down",
    "covers_up",
    "border_strips_down",
    "border_strips_up",
    "f_count",
    "f_count_oracle",
    "meet_join",
    "conjugate",
    "rectangle",
    "DEFAULT_ORACLE_BOUND",
]

DEFAULT_ORACLE_BOUND = 12

DegreeVector = tuple  # strictly decreasing tuple of non-negative ints


class MalformedPartition(ValueError):
    pass


class EmptyPartition(ValueError):
    pass


class OracleBoundExceeded(ValueError):
    pass


@dataclass(frozen=True, order=False)
class Partition:
    """A weakly decreasing tuple of positive integers.

    Trailing zeros are stripped on construction, so ``Partition((2, 1, 0))``
    equals ``Partition((2, 1))``.
    """

    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        if any(p <= 0 for p in parts):
            raise MalformedPartition(f"parts must be positive: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise MalformedPartition(f"parts must be weakly decreasing: {parts}")
        object.__setattr__(self, "parts", parts)

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __bool__(self) -> bool:
        return bool(self.parts)

    def part(self, i: int) -> int:
        """1-based row length, zero beyond the last row."""
        return self.parts[i - 1] if 1 <= i <= len(self.parts) else 0

    # reverse lexicographic: larger part tuples sort first
    def _key(self):
        return tuple(-p for p in self.parts) + (1,)

    def __lt__(self, other: "Partition") -> bool:
        return self._key() < other._key()

    def __le__(self, other: "Partition") -> bool:
        return self._key() <= other._key()

    def __gt__(self, other: "Partition") -> bool:
        return self._key() > other._key()

    def __ge__(self, other: "Partition") -> bool:
        return self._key() >= other._key()

    def contains(self, other: "Partition") -> bool:
        """Young-diagram inclusion ``other <= self``."""
        return other.length <= self.length and all(
            o <= s for o, s in zip(other.parts, self.parts)
        )

    def to_text(self) -> str:
        return ",".join(str(p) for p in self.parts)

    def __str__(self) -> str:
        return "(" + ",".join(str(p) for p in self.parts) + ")" if self.parts else "∅"

    def __repr__(self) -> str:
        return f"Partition({self.parts!r})"


@dataclass(frozen=True)
class CoverStep:
    larger: Partition
    smaller: Partition
    row: int
    content: int


@dataclass(frozen=True)
class BorderStrip:
    larger: Partition
    smaller: Partition
    size_k: int
    height: int

    @property
    def sign(self) -> int:
        return -1 if self.height % 2 else 1


def parse_partition(text: str) -> Partition:
    """Parse ``"3,1"`` into ``Partition((3, 1))``; the empty string is ∅."""
    text = text.strip()
    if text.startswith("[") and text.endswith("]"):
        text = text[1:-1].strip()
    if not text:
        return Partition(())
    tokens = [t.strip() for t in text.split(",")]
    try:
        values = [int(t) for t in tokens]
    except ValueError:
        raise MalformedPartition(f"non-integer token in {text!r}") from None
    if any(v < 0 for v in values):
        raise MalformedPartition(f"negative part in {text!r}")
    for a, b in zip(values, values[1:]):
        if a < b:
            raise MalformedPartition(f"parts increase in {text!r}")
    return Partition(tuple(values))


def _partitions(n: int, largest: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def _partitions_cached(n: int) -> tuple[Partition, ...]:
    return tuple(Partition(p) for p in _partitions(n, n))


def partitions_of(n: int) -> list[Partition]:
    """All partitions of ``n`` in reverse lexicographic order."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return list(_partitions_cached(n))


def partitions_up_to(max_size: int) -> list[Partition]:
    """Partitions of ``0..max_size``, by size then reverse lexicographic."""
    return [p for n in range(max_size + 1) for p in _partitions_cached(n)]


def degree_vector(lam: Partition) -> DegreeVector:
    r = lam.length
    return tuple(lam.parts[i] + r - (i + 1) for i in range(r))


def from_degree_vector(n: tuple[int, ...]) -> Partition:
    r = len(n)
    return Partition(tuple(n[i] - r + (i + 1) for i in range(r)))


def covers_down(lam: Partition) -> list[CoverStep]:
    """All ``mu`` obtained from ``lam`` by removing one box, top row first."""
    if not lam:
        raise EmptyPartition("the empty partition covers nothing")
    parts = lam.parts
    r = len(parts)
    out = []
    for i in range(r):
        if i == r - 1 or parts[i] > parts[i + 1]:
            smaller = parts[:i] + (parts[i] - 1,) + parts[i + 1 :]
            out.append(CoverStep(lam, Partition(smaller), i + 1, parts[i] - (i + 1)))
    return out


def covers_up(mu: Partition) -> list[CoverStep]:
    """All ``lam`` obtained from ``mu`` by adding one box, top row first."""
    parts = mu.parts
    r = len(parts)
    out = []
    for i in range(r + 1):
        if i == 0 or parts[i - 1] > (parts[i] if i < r else 0):
            row_len = (parts[i] if i < r else 0) + 1
            larger = parts[:i] + (row_len,) + parts[i + 1 :]
            out.append(CoverStep(Partition(larger), mu, i + 1, row_len - (i + 1)))
    return out


def _beta(parts: tuple[int, ...], length: int) -> list[int]:
    padded = parts + (0,) * (length - len(parts))
    return [padded[i] + length - (i + 1) for i in range(length)]


def _from_beta(beta: list[int]) -> Partition:
    beta = sorted(beta, reverse=True)
    length = len(beta)
    return Partition(tuple(beta[i] - length + (i + 1) for i in range(length)))


def border_strips_down(lam: Partition, k: int) -> list[BorderStrip]:
    """All ``mu`` with ``lam/mu`` a border strip of size ``k``."""
    if k < 1:
        raise ValueError("k must be positive")
    beta = _beta(lam.parts, lam.length + k)
    occupied = set(beta)
    out = []
    for b in beta:
        target = b - k
        if target < 0 or target in occupied:
            continue
        height = sum(1 for c in beta if target < c < b)
        moved = [target if c == b else c for c in beta]
        out.append(BorderStrip(lam, _from_beta(moved), k, height))
    out.sort(key=lambda s: s.smaller)
    return out


def border_strips_up(rho: Partition, k: int) -> list[BorderStrip]:
    """All ``lam`` with ``lam/rho`` a border strip of size ``k``."""
    if k < 1:
        raise ValueError("k must be positive")
    beta = _beta(rho.parts, rho.length + k)
    occupied = set(beta)
    out = []
    for b in beta:
        target = b + k
        if target in occupied:
            continue
        height = sum(1 for c in beta if b < c < target)
        moved = [target if c == b else c for c in beta]
        out.append(BorderStrip(_from_beta(moved), rho, k, height))
    out.sort(key=lambda s: s.larger)
    return out


def f_count(lam: Partition) -> int:
    """Number of saturated chains from ∅ to ``lam`` in the Young lattice."""
    n = degree_vector(lam)
    num = math.factorial(lam.size)
    for i in range(len(n)):
        for j in range(i + 1, len(n)):
            num *= n[i] - n[j]
    den = 1
    for ni in n:
        den *= math.factorial(ni)
    q, rem = divmod(num, den)
    assert rem == 0, f"non-integral path count for {lam}"
    return q


@lru_cache(maxsize=None)
def _f_dp(parts: tuple[int, ...]) -> int:
    if not parts:
        return 1
    return sum(_f_dp(c.smaller.parts) for c in covers_down(Partition(parts)))


def f_count_oracle(lam: Partition, bound: int = DEFAULT_ORACLE_BOUND) -> int:
    """Path count by dynamic programming over lower covers."""
    if lam.size > bound:
        raise OracleBoundExceeded(f"|{lam}| = {lam.size} exceeds oracle bound {bound}")
    return _f_dp(lam.parts)


def meet_join(gamma: Partition, nu: Partition) -> tuple[Partition, Partition]:
    r = max(gamma.length, nu.length)
    g = [gamma.part(i) for i in range(1, r + 1)]
    v = [nu.part(i) for i in range(1, r + 1)]
    meet = Partition(tuple(min(a, b) for a, b in zip(g, v)))
    join = Partition(tuple(max(a, b) for a, b in zip(g, v)))
    return meet, join


def conjugate(lam: Partition) -> Partition:
    if not lam:
        return lam
    return Partition(tuple(sum(1 for p in lam.parts if p > j) for j in range(lam.parts[0])))


def rectangle(width: int, height: int) -> Partition:
    """``height`` rows of length ``width``."""
    return Partition((width,) * height)
