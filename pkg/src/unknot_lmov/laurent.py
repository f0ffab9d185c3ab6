"""Sparse exact Laurent polynomials in ``q^(1/2)`` and ``a^(1/2)``.

Exponents are stored doubled, so ``q^(3/2) a^(-1/2)`` has key ``(3, -1)``.
Coefficients are ``int`` or ``Fraction`` (integral values are kept as ``int``
so the common all-integer case stays on the fast path).
"""

from __future__ import annotations

import json
from collections import Counter, defaultdict
from fractions import Fraction
from functools import lru_cache
from numbers import Rational
from typing import Iterable, Mapping

from .arith import as_rational, divisors, mobius

__all__ = [
    "BpsTable",
    "HalfInt",
    "LFrac",
    "LPoly",
    "NotRepresentableError",
    "bracket",
    "cyclotomic",
    "exact_div",
    "format_half",
    "parse_rational",
    "qbinomial",
    "substitute_power",
    "to_z2_basis",
]

# A half-integer held as its double: value == HalfInt / 2.
HalfInt = int
Key = tuple  # (q exponent doubled, a exponent doubled)


def format_half(doubled: HalfInt) -> str:
    if doubled % 2 == 0:
        return str(doubled // 2)
    return f"{doubled}/2"


def format_rational(c: Rational) -> str:
    c = Fraction(c)
    return f"{c.numerator}/{c.denominator}"


def parse_rational(text) -> Rational:
    if isinstance(text, int):
        return text
    num, _, den = str(text).partition("/")
    return as_rational(Fraction(int(num), int(den or 1)))


def _quo(c: Rational, d: Rational) -> Rational:
    if d == 1:
        return c
    if d == -1:
        return -c
    return as_rational(Fraction(c) / d)


class LPoly:
    """Immutable element of ``Q[q^(+-1/2), a^(+-1/2)]``."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Key, Rational] | None = None):
        clean = {}
        for key, c in (terms or {}).items():
            c = as_rational(c)
            if c:
                clean[(int(key[0]), int(key[1]))] = c
        self._terms = clean
        self._hash = None

    @classmethod
    def _wrap(cls, terms: dict) -> "LPoly":
        # Caller guarantees: no zero coefficients, integral Fractions already ints.
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def _collect(cls, acc: Mapping[Key, Rational]) -> "LPoly":
        out = {}
        for key, c in acc.items():
            if c:
                if type(c) is Fraction and c.denominator == 1:
                    c = c.numerator
                out[key] = c
        return cls._wrap(out)

    @classmethod
    def const(cls, c: Rational) -> "LPoly":
        return cls({(0, 0): c})

    @classmethod
    def monomial(cls, q2: HalfInt = 0, a2: HalfInt = 0, c: Rational = 1) -> "LPoly":
        return cls({(q2, a2): c})

    # -- inspection -------------------------------------------------------
    @property
    def terms(self) -> dict[Key, Rational]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def coefficient(self, q2: HalfInt, a2: HalfInt = 0) -> Rational:
        return self._terms.get((q2, a2), 0)

    def is_q_only(self) -> bool:
        return all(a2 == 0 for _, a2 in self._terms)

    def is_integral(self) -> bool:
        return all(type(c) is int for c in self._terms.values())

    def a_slices(self) -> dict[HalfInt, dict[HalfInt, Rational]]:
        """Group terms by ``a`` exponent: ``{a2: {q2: coeff}}``."""
        out: dict = defaultdict(dict)
        for (q2, a2), c in self._terms.items():
            out[a2][q2] = c
        return dict(out)

    # -- ring structure ---------------------------------------------------
    def __eq__(self, other) -> bool:
        if isinstance(other, LPoly):
            return self._terms == other._terms
        if isinstance(other, Rational):
            return self._terms == ({(0, 0): other} if other else {})
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __neg__(self) -> "LPoly":
        return LPoly._wrap({k: -c for k, c in self._terms.items()})

    def __add__(self, other) -> "LPoly":
        if isinstance(other, Rational):
            other = LPoly.const(other)
        if not isinstance(other, LPoly):
            return NotImplemented
        acc = dict(self._terms)
        for key, c in other._terms.items():
            acc[key] = acc.get(key, 0) + c
        return LPoly._collect(acc)

    __radd__ = __add__

    def __sub__(self, other) -> "LPoly":
        if isinstance(other, Rational):
            other = LPoly.const(other)
        if not isinstance(other, LPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "LPoly":
        return (-self) + other

    def scalar_mul(self, c: Rational) -> "LPoly":
        c = as_rational(c)
        if not c:
            return LPoly()
        if c == 1:
            return self
        return LPoly._collect({k: v * c for k, v in self._terms.items()})

    def __mul__(self, other) -> "LPoly":
        if isinstance(other, Rational):
            return self.scalar_mul(other)
        if not isinstance(other, LPoly):
            return NotImplemented
        if len(self._terms) < len(other._terms):
            small, big = self._terms, other._terms
        else:
            small, big = other._terms, self._terms
        acc: dict = defaultdict(int)
        for (q1, a1), c1 in small.items():
            for (q2, a2), c2 in big.items():
                acc[(q1 + q2, a1 + a2)] += c1 * c2
        return LPoly._collect(acc)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LPoly":
        if n < 0:
            raise ValueError("negative powers are not Laurent in general")
        result = LPoly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def shift(self, q2: HalfInt = 0, a2: HalfInt = 0) -> "LPoly":
        """Multiply by the monomial ``q^(q2/2) a^(a2/2)``."""
        return LPoly._wrap({(q + q2, a + a2): c for (q, a), c in self._terms.items()})

    def substitute_power(self, d_q: int, d_a: int) -> "LPoly":
        return substitute_power(self, d_q, d_a)

    def evaluate(self, q_half: Rational, a_half: Rational) -> Rational:
        """Value at ``q^(1/2) = q_half``, ``a^(1/2) = a_half`` (both nonzero)."""
        q_half, a_half = Fraction(q_half), Fraction(a_half)
        return as_rational(sum(c * q_half**q2 * a_half**a2 for (q2, a2), c in self._terms.items()))

    def __repr__(self) -> str:
        if not self._terms:
            return "LPoly(0)"
        parts = []
        for (q2, a2), c in sorted(self._terms.items()):
            mono = []
            if q2:
                mono.append(f"q^{format_half(q2)}")
            if a2:
                mono.append(f"a^{format_half(a2)}")
            parts.append(f"{c}" + ("*" + "*".join(mono) if mono else ""))
        return "LPoly(" + " + ".join(parts) + ")"

    # -- serialization ----------------------------------------------------
    def to_json(self) -> list:
        return [[q2, a2, format_rational(c)] for (q2, a2), c in sorted(self._terms.items())]

    @classmethod
    def from_json(cls, data: Iterable) -> "LPoly":
        return cls({(int(q2), int(a2)): parse_rational(c) for q2, a2, c in data})

    def dumps(self) -> str:
        return json.dumps(self.to_json(), separators=(",", ":"))


def bracket(n: int, var: str = "q") -> LPoly:
    """``x^(n/2) - x^(-n/2)`` in ``x = q`` or ``x = a``."""
    if n == 0:
        return LPoly()
    if var == "q":
        return LPoly._wrap({(n, 0): 1, (-n, 0): -1})
    if var == "a":
        return LPoly._wrap({(0, n): 1, (0, -n): -1})
    raise ValueError(f"unknown variable {var!r}")


def substitute_power(f: LPoly, d_q: int, d_a: int) -> LPoly:
    """``f(q^d_q, a^d_a)``; ``d_q = -1`` realizes ``q -> 1/q``."""
    if d_q == 0 or d_a == 0:
        raise ValueError("substitution exponents must be nonzero")
    if d_q == 1 and d_a == 1:
        return f
    return LPoly._wrap({(q2 * d_q, a2 * d_a): c for (q2, a2), c in f.items()})


@lru_cache(maxsize=None)
def qbinomial(n: int, k: int) -> LPoly:
    """Gaussian binomial ``[n choose k]_q`` as a polynomial in ``q``."""
    if n < 0 or k < 0:
        raise ValueError("qbinomial expects nonnegative arguments")
    if k > n:
        return LPoly()
    if k == 0 or k == n:
        return LPoly.const(1)
    # [n, k] = [n-1, k-1] + q^k [n-1, k]
    return qbinomial(n - 1, k - 1) + qbinomial(n - 1, k).shift(q2=2 * k)


def _q_power_minus_one(d: int) -> LPoly:
    return LPoly._wrap({(2 * d, 0): 1, (0, 0): -1})


@lru_cache(maxsize=None)
def cyclotomic(n: int) -> LPoly:
    """``Phi_n(q)`` from the Moebius product of ``q^d - 1``, by exact division."""
    if n < 1:
        raise ValueError("cyclotomic expects n >= 1")
    num, den = LPoly.const(1), LPoly.const(1)
    for d in divisors(n):
        mu = mobius(n // d)
        if mu == 1:
            num = num * _q_power_minus_one(d)
        elif mu == -1:
            den = den * _q_power_minus_one(d)
    out = exact_div(num, den)
    assert out is not None
    return out


def _div_slice(f: dict[int, Rational], g: list[tuple[int, Rational]]) -> dict | None:
    # Dense long division of one a-slice by a q-only divisor (doubled exponents).
    gmin, gmax = g[0][0], g[-1][0]
    lead = g[-1][1]
    span = gmax - gmin
    fmin, fmax = min(f), max(f)
    if fmax - fmin < span:
        return None
    r = [0] * (fmax - fmin + 1)
    for e, c in f.items():
        r[e - fmin] = c
    quotient = {}
    for idx in range(fmax - fmin, span - 1, -1):
        c = r[idx]
        if not c:
            continue
        qc = _quo(c, lead)
        e = idx - span  # offset of the quotient term's lowest product exponent
        quotient[idx + fmin - gmax] = qc
        for ge, gc in g:
            r[e + ge - gmin] -= qc * gc
    if any(r[:span]):
        return None
    return quotient


def exact_div(f: LPoly, g: LPoly) -> LPoly | None:
    """``h`` with ``f == g * h``, or ``None`` if ``g`` does not divide ``f``.

    ``g`` must involve only ``q``.
    """
    if not g:
        raise ZeroDivisionError("division by the zero polynomial")
    if not g.is_q_only():
        raise ValueError("exact_div supports q-only divisors")
    if not f:
        return LPoly()
    divisor = sorted((q2, c) for (q2, _), c in g.items())
    out = {}
    for a2, sl in f.a_slices().items():
        qs = _div_slice(sl, divisor)
        if qs is None:
            return None
        for q2, c in qs.items():
            if type(c) is Fraction and c.denominator == 1:
                c = c.numerator
            out[(q2, a2)] = c
    return LPoly._wrap(out)


class NotRepresentableError(ValueError):
    """Raised when a polynomial has no expansion in ``z^2`` and ``a^(1/2)``.

    ``reason`` names the first violated condition.
    """

    def __init__(self, reason: str):
        super().__init__(reason)
        self.reason = reason


@lru_cache(maxsize=None)
def _symmetric_power_in_w(k: int) -> tuple[int, ...]:
    # q^k + q^-k as a polynomial in w = z^2 = q - 2 + q^-1 (coefficient list, low first).
    if k == 0:
        return (2,)
    if k == 1:
        return (2, 1)
    prev, prev2 = _symmetric_power_in_w(k - 1), _symmetric_power_in_w(k - 2)
    out = [0] * (len(prev) + 1)
    for i, c in enumerate(prev):
        out[i] += 2 * c
        out[i + 1] += c
    for i, c in enumerate(prev2):
        out[i] -= c
    return tuple(out)


class BpsTable:
    """Finite map ``(g, Q) -> n`` read as ``sum n z^(2g) a^Q``; ``Q`` doubled."""

    __slots__ = ("_entries",)

    def __init__(self, entries: Mapping[tuple[int, HalfInt], Rational] | None = None):
        self._entries = {}
        for (g, q2), n in (entries or {}).items():
            if g < 0:
                raise ValueError("genus must be nonnegative")
            n = as_rational(n)
            if n:
                self._entries[(int(g), int(q2))] = n

    @property
    def entries(self) -> dict[tuple[int, HalfInt], Rational]:
        return dict(self._entries)

    def __getitem__(self, key: tuple[int, HalfInt]) -> Rational:
        return self._entries.get(key, 0)

    def __eq__(self, other) -> bool:
        if not isinstance(other, BpsTable):
            return NotImplemented
        return self._entries == other._entries

    def __hash__(self) -> int:
        return hash(frozenset(self._entries.items()))

    def __len__(self) -> int:
        return len(self._entries)

    def __repr__(self) -> str:
        body = ", ".join(f"({g}, {format_half(q2)}): {n}" for (g, q2), n in sorted(self._entries.items()))
        return "BpsTable({" + body + "})"

    def is_integral(self) -> bool:
        return all(type(n) is int for n in self._entries.values())

    @property
    def max_genus(self) -> int:
        return max((g for g, _ in self._entries), default=-1)

    def genus_row(self, g: int) -> dict[HalfInt, Rational]:
        return {q2: n for (gg, q2), n in self._entries.items() if gg == g}

    def expand(self) -> LPoly:
        """The Laurent polynomial ``sum n (q - 2 + 1/q)^g a^Q``."""
        z2 = LPoly._wrap({(2, 0): 1, (0, 0): -2, (-2, 0): 1})
        out = LPoly()
        for (g, q2), n in self._entries.items():
            out = out + (z2**g).shift(a2=q2).scalar_mul(n)
        return out

    def to_json(self) -> list:
        rows = []
        for (g, q2), n in sorted(self._entries.items()):
            rows.append([g, q2, n if type(n) is int else format_rational(n)])
        return rows

    @classmethod
    def from_json(cls, data: Iterable) -> "BpsTable":
        return cls({(int(g), int(q2)): parse_rational(n) for g, q2, n in data})


def to_z2_basis(f: LPoly) -> BpsTable:
    """Rewrite a ``q <-> 1/q`` symmetric polynomial in powers of ``z^2``.

    Raises :class:`NotRepresentableError` on half-integer ``q`` powers, broken
    symmetry, or a non-integral ``z^2`` coefficient.
    """
    for (q2, a2), _ in sorted(f.items()):
        if q2 % 2:
            raise NotRepresentableError(
                f"half-integer q power q^{format_half(q2)} at a^{format_half(a2)}"
            )
    if substitute_power(f, -1, 1) != f:
        raise NotRepresentableError("not invariant under q -> 1/q")
    entries: dict = {}
    for a2, sl in sorted(f.a_slices().items()):
        acc: dict[int, Rational] = defaultdict(int)
        for q2, c in sl.items():
            k = q2 // 2
            if k < 0:
                continue
            if k == 0:
                acc[0] += c
                continue
            for g, w in enumerate(_symmetric_power_in_w(k)):
                if w:
                    acc[g] += c * w
        for g, n in sorted(acc.items()):
            n = as_rational(n)
            if not n:
                continue
            if type(n) is not int:
                raise NotRepresentableError(
                    f"non-integral coefficient {n} of z^{2 * g} a^{format_half(a2)}"
                )
            entries[(g, a2)] = n
    return BpsTable(entries)


class LFrac:
    """Quotient ``num / prod_n {n}_q^e`` with the denominator kept factored.

    Sums bring both sides over the bracket-wise maximum of exponents, so the
    denominator is a common multiple (not always the least one). Equality is
    exact: both sides are compared over a shared denominator.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: LPoly | Rational, den: Mapping[int, int] | None = None):
        if isinstance(num, Rational):
            num = LPoly.const(num)
        sign = 1
        clean: Counter = Counter()
        for n, e in (den or {}).items():
            if e < 0:
                raise ValueError("bracket exponents must be nonnegative")
            if e == 0:
                continue
            if n == 0:
                raise ZeroDivisionError("{0} = 0 in a denominator")
            if n < 0:
                n = -n
                sign *= (-1) ** e
            clean[n] += e
        self.num = num if sign == 1 else -num
        self.den = clean

    def den_poly(self) -> LPoly:
        out = LPoly.const(1)
        for n, e in sorted(self.den.items()):
            out = out * bracket(n) ** e
        return out

    def _raise_to(self, target: Counter) -> LPoly:
        num = self.num
        for n, e in sorted(target.items()):
            extra = e - self.den.get(n, 0)
            if extra:
                num = num * bracket(n) ** extra
        return num

    def _common(self, other: "LFrac") -> tuple[LPoly, LPoly, Counter]:
        target = self.den | other.den
        return self._raise_to(target), other._raise_to(target), target

    @staticmethod
    def _coerce(x) -> "LFrac":
        if isinstance(x, LFrac):
            return x
        if isinstance(x, (LPoly, Rational)):
            return LFrac(x)
        raise TypeError(f"cannot combine LFrac with {type(x).__name__}")

    def __add__(self, other) -> "LFrac":
        other = self._coerce(other)
        if not other.num:
            return self
        if not self.num:
            return other
        a, b, den = self._common(other)
        return LFrac(a + b, den)

    __radd__ = __add__

    def __neg__(self) -> "LFrac":
        return LFrac(-self.num, self.den)

    def __sub__(self, other) -> "LFrac":
        return self + (-self._coerce(other))

    def __mul__(self, other) -> "LFrac":
        if isinstance(other, Rational):
            return LFrac(self.num.scalar_mul(other), self.den)
        if isinstance(other, LPoly):
            return LFrac(self.num * other, self.den)
        if isinstance(other, LFrac):
            return LFrac(self.num * other.num, self.den + other.den)
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LFrac":
        return LFrac(self.num**n, Counter({k: e * n for k, e in self.den.items()}))

    def divide_bracket(self, n: int, power: int = 1) -> "LFrac":
        return LFrac(self.num, self.den + Counter({n: power}))

    def __eq__(self, other) -> bool:
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        a, b, _ = self._common(other)
        return a == b

    __hash__ = None

    def __bool__(self) -> bool:
        return bool(self.num)

    def __repr__(self) -> str:
        den = "*".join(f"{{{n}}}^{e}" for n, e in sorted(self.den.items())) or "1"
        return f"LFrac({self.num!r} / {den})"

    def substitute_power(self, d_q: int, d_a: int) -> "LFrac":
        # {n}_{q^d} = {n d}_q; the sign of d_q is absorbed by LFrac's normalization.
        den = Counter({n * d_q: e for n, e in self.den.items()})
        return LFrac(substitute_power(self.num, d_q, d_a), den)

    def reduce(self) -> "LFrac":
        """Cancel every denominator bracket that divides the numerator."""
        num, den = self.num, Counter(self.den)
        if not num:
            return LFrac(num)
        for n in sorted(den, reverse=True):
            b = bracket(n)
            while den[n]:
                h = exact_div(num, b)
                if h is None:
                    break
                num = h
                den[n] -= 1
        return LFrac(num, den)

    def to_lpoly(self) -> LPoly | None:
        """The Laurent polynomial equal to this quotient, or ``None``."""
        r = self.reduce()
        if any(r.den.values()):
            return None
        return r.num

    def evaluate(self, q_half: Rational, a_half: Rational) -> Rational:
        d = self.den_poly().evaluate(q_half, a_half)
        if d == 0:
            raise ZeroDivisionError("denominator vanishes at this point")
        return as_rational(Fraction(self.num.evaluate(q_half, a_half)) / d)
