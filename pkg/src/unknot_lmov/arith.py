"""Exact integer/rational kernels: divisors, Moebius, p-adic valuation, f_p and
the generalized binomial used by every closed formula in the package.

Scalars are ``int`` or :class:`fractions.Fraction`; nothing here touches floats.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from numbers import Rational
from typing import Iterator

__all__ = [
    "INFINITE",
    "PrimePower",
    "as_rational",
    "binom_z",
    "common_divisors",
    "divisors",
    "factorize",
    "fp",
    "is_prime",
    "mobius",
    "primes_upto",
    "vp",
]


class _InfiniteValuation:
    """Valuation of zero. Compares greater than every integer."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "INFINITE"

    def __eq__(self, other) -> bool:
        return other is self

    def __hash__(self) -> int:
        return hash("INFINITE")

    def __gt__(self, other) -> bool:
        return other is not self

    def __ge__(self, other) -> bool:
        return True

    def __lt__(self, other) -> bool:
        return False

    def __le__(self, other) -> bool:
        return other is self


INFINITE = _InfiniteValuation()


@dataclass(frozen=True)
class PrimePower:
    """``p**k`` with ``p`` prime (trial-division certified)."""

    p: int
    k: int

    def __post_init__(self) -> None:
        if not is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")
        if self.k < 0:
            raise ValueError("exponent must be nonnegative")

    @property
    def value(self) -> int:
        return self.p**self.k

    @classmethod
    def exact_in(cls, n: int, p: int) -> "PrimePower":
        """The prime power ``p^k`` with ``p^k || n``."""
        k = vp(n, p)
        if k is INFINITE:
            raise ValueError("no exact prime power divides 0")
        return cls(p, k)


def as_rational(x) -> Rational:
    """Normalize a rational scalar: integral values become ``int``."""
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else x
    if isinstance(x, Rational):
        return as_rational(Fraction(x.numerator, x.denominator))
    raise TypeError(f"not an exact rational: {x!r}")


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    i = 3
    while i * i <= n:
        if n % i == 0:
            return False
        i += 2
    return True


def primes_upto(n: int) -> list[int]:
    return [p for p in range(2, n + 1) if is_prime(p)]


@lru_cache(maxsize=4096)
def factorize(n: int) -> tuple[tuple[int, int], ...]:
    """Trial-division factorization of ``n >= 1`` as ``((p, e), ...)``."""
    if n < 1:
        raise ValueError("factorize expects n >= 1")
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
        p += 1 if p == 2 else 2
    if n > 1:
        out.append((n, 1))
    return tuple(out)


@lru_cache(maxsize=4096)
def divisors(n: int) -> tuple[int, ...]:
    """All positive divisors of ``n``, increasing."""
    if n < 1:
        raise ValueError("divisors expects n >= 1")
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return tuple(small + large[::-1])


def common_divisors(*ns: int) -> Iterator[int]:
    """Positive common divisors of the arguments; zeros impose no constraint."""
    g = 0
    for n in ns:
        g = math.gcd(g, n)
    if g == 0:
        raise ValueError("common divisors of all-zero input are unbounded")
    return iter(divisors(g))


def mobius(n: int) -> int:
    if n < 1:
        raise ValueError("mobius expects n >= 1")
    fs = factorize(n)
    if any(e > 1 for _, e in fs):
        return 0
    return -1 if len(fs) % 2 else 1


def vp(n: int, p: int):
    """Exponent of ``p`` in ``n``; :data:`INFINITE` for ``n == 0``."""
    if p < 2:
        raise ValueError("p must be a prime")
    if n == 0:
        return INFINITE
    n = abs(n)
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return k


def fp(n: int, p: int, mod: int | None = None) -> int:
    """Product of ``1 <= i <= n`` with ``p`` not dividing ``i``.

    With ``mod`` the product is reduced modulo ``mod`` as it is built.
    """
    if n < 0:
        raise ValueError("fp expects n >= 0")
    if mod is None:
        return math.prod(i for i in range(1, n + 1) if i % p)
    acc = 1 % mod
    for i in range(1, n + 1):
        if i % p:
            acc = acc * i % mod
    return acc


def binom_z(a: int, b: int) -> int:
    """Binomial coefficient extended to negative tops.

    ``binom_z(a, 0) == 1``; for ``a >= 0`` the ordinary ``C(a, b)`` (zero when
    ``b > a``); for ``a < 0`` the value ``(-1)^b C(b - a - 1, b)``.
    """
    if b < 0:
        raise ValueError("binom_z expects b >= 0")
    if b == 0:
        return 1
    if a >= 0:
        return math.comb(a, b)
    return (-1) ** b * math.comb(-a + b - 1, b)
