"""Integer partitions, their statistics, and symmetric-group characters."""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

__all__ = [
    "Partition",
    "PartitionStatistics",
    "character",
    "enumerate_partitions",
    "partition_count",
    "statistics",
    "sub_partitions",
]


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    Parts are sorted on construction, so two partitions compare (and hash)
    equal exactly when they have the same multiset of parts. The empty tuple
    is the empty partition.
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()) -> "Partition":
        parts = sorted((int(p) for p in parts), reverse=True)
        if parts and parts[-1] < 1:
            raise ValueError(f"partition parts must be positive: {parts}")
        return super().__new__(cls, parts)

    def __repr__(self) -> str:
        return f"Partition({tuple(self)!r})"

    def __str__(self) -> str:
        if not self:
            return "0"
        return "(" + ",".join(map(str, self)) + ")"

    @property
    def weight(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def multiplicities(self) -> dict[int, int]:
        return dict(Counter(self))

    @property
    def aut_order(self) -> int:
        return math.prod(math.factorial(k) for k in Counter(self).values())

    @property
    def zee(self) -> int:
        """``|Aut(lambda)| * prod(parts)``, the centralizer order of the class."""
        return self.aut_order * math.prod(self)

    @property
    def kappa(self) -> int:
        return sum(part * (part - 2 * i + 1) for i, part in enumerate(self, start=1))

    def transpose(self) -> "Partition":
        if not self:
            return self
        return Partition(sum(1 for part in self if part > j) for j in range(self[0]))

    def divide(self, d: int) -> "Partition | None":
        """``self / d`` when ``d`` divides every part, else ``None``.

        The empty partition is divisible by everything.
        """
        if d < 1:
            raise ValueError("divisor must be positive")
        if any(part % d for part in self):
            return None
        return Partition(part // d for part in self)

    def scale(self, d: int) -> "Partition":
        return Partition(part * d for part in self)

    def union(self, other: Iterable[int]) -> "Partition":
        return Partition(tuple(self) + tuple(other))

    def remove(self, other: Iterable[int]) -> "Partition | None":
        """Multiset difference ``self - other``; ``None`` if ``other`` is not contained."""
        left = Counter(self)
        left.subtract(Counter(other))
        if any(v < 0 for v in left.values()):
            return None
        return Partition(left.elements())

    def statistics(self) -> "PartitionStatistics":
        return PartitionStatistics(self.weight, self.length, self.zee, self.kappa)


@dataclass(frozen=True)
class PartitionStatistics:
    weight: int
    length: int
    zee: int
    kappa: int


def statistics(lam: Iterable[int]) -> PartitionStatistics:
    return Partition(lam).statistics()


def _reverse_lex(n: int) -> Iterator[Partition]:
    # Zoghbi-Stojmenovic ZS1: each step rewrites only the tail of the array.
    if n == 0:
        yield Partition(())
        return
    make = tuple.__new__
    x = [1] * (n + 1)
    x[1] = n
    m = h = 1
    yield make(Partition, (n,))
    while x[1] != 1:
        if x[h] == 2:
            m += 1
            x[h] = 1
            h -= 1
        else:
            r = x[h] - 1
            t = m - h + 1
            x[h] = r
            while t >= r:
                h += 1
                x[h] = r
                t -= r
            if t == 0:
                m = h
            else:
                m = h + 1
                if t > 1:
                    h += 1
                    x[h] = t
        yield make(Partition, x[1 : m + 1])


@lru_cache(maxsize=None)
def _partitions(n: int) -> tuple[Partition, ...]:
    return tuple(_reverse_lex(n))


def enumerate_partitions(n: int) -> list[Partition]:
    """All partitions of ``n`` in reverse lexicographic order."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n > 40:
        # too many to keep around
        return list(_reverse_lex(n))
    return list(_partitions(n))


@lru_cache(maxsize=None)
def partition_count(n: int) -> int:
    """p(n) by Euler's pentagonal-number recurrence."""
    if n < 0:
        return 0
    if n == 0:
        return 1
    total = 0
    k = 1
    while True:
        g1 = k * (3 * k - 1) // 2
        if g1 > n:
            break
        sign = 1 if k % 2 else -1
        total += sign * partition_count(n - g1)
        g2 = k * (3 * k + 1) // 2
        if g2 <= n:
            total += sign * partition_count(n - g2)
        k += 1
    return total


def sub_partitions(mu: Partition) -> list[Partition]:
    """Every sub-multiset of the parts of ``mu`` (including empty and ``mu``)."""
    items = sorted(Counter(mu).items(), reverse=True)
    out = [()]
    for part, mult in items:
        out = [prefix + (part,) * k for prefix in out for k in range(mult + 1)]
    return [Partition(p) for p in out]


def _beta_set(lam: tuple[int, ...]) -> tuple[int, ...]:
    n = len(lam)
    return tuple(part + n - 1 - i for i, part in enumerate(lam))


def _from_beta(beta: Iterable[int]) -> Partition:
    beta = sorted(beta, reverse=True)
    n = len(beta)
    return Partition(b - (n - 1 - i) for i, b in enumerate(beta) if b - (n - 1 - i) > 0)


@lru_cache(maxsize=None)
def _mn(lam: Partition, mu: Partition) -> int:
    # Murnaghan-Nakayama: strip a rim hook of length mu[0] in every possible way.
    if not mu:
        return 1 if not lam else 0
    r, rest = mu[0], Partition(mu[1:])
    beta = _beta_set(lam)
    occupied = set(beta)
    total = 0
    for b in beta:
        target = b - r
        if target < 0 or target in occupied:
            continue
        height = sum(1 for c in beta if target < c < b)
        new_lam = _from_beta((occupied - {b}) | {target})
        value = _mn(new_lam, rest)
        total += -value if height % 2 else value
    return total


def character(lam: Iterable[int], mu: Iterable[int]) -> int:
    """Irreducible character ``chi_lam`` of ``S_n`` on the class of cycle type ``mu``.

    Zero when the weights differ.
    """
    lam, mu = Partition(lam), Partition(mu)
    if lam.weight != mu.weight:
        return 0
    return _mn(lam, mu)
