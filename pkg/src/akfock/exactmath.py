"""Laurent polynomials over the integers and the q-combinatorics built on them.

Polynomials are stored sparsely as ``{exponent: coefficient}`` with zero
coefficients pruned, so two polynomials are equal exactly when their
dictionaries are.  Rationals are plain :class:`fractions.Fraction` values.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping

from .errors import DomainError

__all__ = [
    "Fraction",
    "LaurentPolynomial",
    "NonDivisibleError",
    "add",
    "bar",
    "eval_at_one",
    "exact_divide",
    "mul",
    "q_binomial",
    "q_factorial",
    "q_integer",
]


class NonDivisibleError(DomainError, ArithmeticError):
    """Raised when a Laurent polynomial has no exact quotient."""


class LaurentPolynomial:
    """An element of Z[q, q^-1], immutable once built."""

    __slots__ = ("_c", "_hash")

    def __init__(self, coefficients: Mapping[int, int] | None = None):
        c = {}
        if coefficients:
            for k, v in coefficients.items():
                if v:
                    c[int(k)] = int(v)
        self._c = c
        self._hash = None

    @classmethod
    def _raw(cls, c: dict) -> "LaurentPolynomial":
        # caller guarantees no zero coefficients
        p = object.__new__(cls)
        p._c = c
        p._hash = None
        return p

    @classmethod
    def zero(cls) -> "LaurentPolynomial":
        return cls._raw({})

    @classmethod
    def one(cls) -> "LaurentPolynomial":
        return cls._raw({0: 1})

    @classmethod
    def monomial(cls, exponent: int, coefficient: int = 1) -> "LaurentPolynomial":
        return cls({exponent: coefficient})

    @classmethod
    def q(cls) -> "LaurentPolynomial":
        return cls._raw({1: 1})

    # -- access ---------------------------------------------------------

    @property
    def coefficients(self) -> dict[int, int]:
        """A copy of the exponent -> coefficient map."""
        return dict(self._c)

    def terms(self) -> list[tuple[int, int]]:
        """(exponent, coefficient) pairs in decreasing exponent order."""
        return sorted(self._c.items(), reverse=True)

    def __getitem__(self, exponent: int) -> int:
        return self._c.get(exponent, 0)

    def is_zero(self) -> bool:
        return not self._c

    def __bool__(self) -> bool:
        return bool(self._c)

    def degree(self) -> int | None:
        return max(self._c) if self._c else None

    def valuation(self) -> int | None:
        return min(self._c) if self._c else None

    def __eq__(self, other):
        if isinstance(other, LaurentPolynomial):
            return self._c == other._c
        if isinstance(other, int):
            return self._c == ({0: other} if other else {})
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._c.items()))
        return self._hash

    # -- arithmetic -----------------------------------------------------

    @staticmethod
    def _coerce(x) -> "LaurentPolynomial":
        if isinstance(x, LaurentPolynomial):
            return x
        if isinstance(x, int):
            return LaurentPolynomial({0: x})
        raise TypeError(f"cannot use {type(x).__name__} as a Laurent polynomial")

    def __add__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        c = dict(self._c)
        for k, v in other._c.items():
            s = c.get(k, 0) + v
            if s:
                c[k] = s
            else:
                c.pop(k, None)
        return LaurentPolynomial._raw(c)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPolynomial._raw({k: -v for k, v in self._c.items()})

    def __sub__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        c: dict[int, int] = {}
        for k1, v1 in self._c.items():
            for k2, v2 in other._c.items():
                k = k1 + k2
                c[k] = c.get(k, 0) + v1 * v2
        return LaurentPolynomial(c)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are not supported")
        result = LaurentPolynomial.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, k: int) -> "LaurentPolynomial":
        """Multiply by q^k."""
        return LaurentPolynomial._raw({e + k: v for e, v in self._c.items()})

    def bar(self) -> "LaurentPolynomial":
        return LaurentPolynomial._raw({-k: v for k, v in self._c.items()})

    def is_bar_symmetric(self) -> bool:
        return all(self._c.get(-k) == v for k, v in self._c.items())

    def eval_at_one(self) -> int:
        return sum(self._c.values())

    def evaluate(self, x):
        return sum(v * x**k for k, v in self._c.items())

    def in_positive_part(self) -> bool:
        """True when every exponent is >= 1, i.e. the polynomial lies in qZ[q]."""
        return all(k >= 1 for k in self._c)

    def nonpositive_part(self) -> "LaurentPolynomial":
        return LaurentPolynomial._raw({k: v for k, v in self._c.items() if k <= 0})

    def symmetric_completion(self) -> "LaurentPolynomial":
        """The unique bar-symmetric polynomial agreeing with self on exponents <= 0."""
        c: dict[int, int] = {}
        for k, v in self._c.items():
            if k < 0:
                c[k] = v
                c[-k] = v
            elif k == 0:
                c[0] = v
        return LaurentPolynomial._raw(c)

    # -- text -----------------------------------------------------------

    def __str__(self):
        if not self._c:
            return "0"
        out = []
        for k, v in self.terms():
            sign = "-" if v < 0 else "+"
            a = abs(v)
            if k == 0:
                body = str(a)
            else:
                var = "q" if k == 1 else f"q^{k}"
                body = var if a == 1 else f"{a}{var}"
            if not out:
                out.append(body if sign == "+" else "-" + body)
            else:
                out.append(f"{sign} {body}")
        return " ".join(out)

    def __repr__(self):
        return f"LaurentPolynomial({str(self)!r})"

    _TERM = re.compile(r"([+-]?)\s*(\d*)\s*(q(?:\^(-?\d+))?)?")

    @classmethod
    def parse(cls, text: str) -> "LaurentPolynomial":
        """Inverse of ``str``; accepts e.g. ``"q^2 + 2 + q^-2"`` or ``"-3q + 1"``."""
        s = text.strip()
        if s == "0":
            return cls.zero()
        s = s.replace(" ", "")
        if not s:
            raise ValueError("empty polynomial text")
        c: dict[int, int] = {}
        pos = 0
        while pos < len(s):
            m = cls._TERM.match(s, pos)
            if not m or m.end() == pos or (not m.group(2) and not m.group(3)):
                raise ValueError(f"cannot parse polynomial {text!r}")
            sign = -1 if m.group(1) == "-" else 1
            if pos > 0 and not m.group(1):
                raise ValueError(f"cannot parse polynomial {text!r}")
            coeff = int(m.group(2)) if m.group(2) else 1
            if m.group(3):
                exp = int(m.group(4)) if m.group(4) is not None else 1
            else:
                exp = 0
            c[exp] = c.get(exp, 0) + sign * coeff
            pos = m.end()
        return cls(c)


def add(p: LaurentPolynomial, r: LaurentPolynomial) -> LaurentPolynomial:
    return p + r


def mul(p: LaurentPolynomial, r: LaurentPolynomial) -> LaurentPolynomial:
    return p * r


def bar(p: LaurentPolynomial) -> LaurentPolynomial:
    """The ring involution q -> q^-1."""
    return p.bar()


def eval_at_one(p: LaurentPolynomial) -> int:
    return p.eval_at_one()


@lru_cache(maxsize=None)
def q_integer(j: int) -> LaurentPolynomial:
    """[j]_q = q^(j-1) + q^(j-3) + ... + q^(1-j)."""
    if j < 0:
        raise ValueError("q_integer needs j >= 0")
    return LaurentPolynomial({j - 1 - 2 * t: 1 for t in range(j)})


@lru_cache(maxsize=None)
def q_factorial(j: int) -> LaurentPolynomial:
    if j < 0:
        raise ValueError("q_factorial needs j >= 0")
    result = LaurentPolynomial.one()
    for t in range(1, j + 1):
        result = result * q_integer(t)
    return result


def q_binomial(l: int, j: int) -> LaurentPolynomial:
    if not 0 <= j <= l:
        return LaurentPolynomial.zero()
    return exact_divide(q_factorial(l), q_factorial(j) * q_factorial(l - j))


def exact_divide(p: LaurentPolynomial, divisor: LaurentPolynomial) -> LaurentPolynomial:
    """Return s with ``s * divisor == p``.

    Long division from the top exponent down; raises
    :class:`NonDivisibleError` as soon as a remainder cannot be cleared.
    """
    if divisor.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    dc = divisor._c
    d_top = max(dc)
    d_span = d_top - min(dc)
    d_lead = dc[d_top]
    rem = dict(p._c)
    quot: dict[int, int] = {}
    while rem:
        r_top = max(rem)
        if r_top - min(rem) < d_span:
            raise NonDivisibleError(f"{p} is not divisible by {divisor}")
        c, r = divmod(rem[r_top], d_lead)
        if r:
            raise NonDivisibleError(f"{p} is not divisible by {divisor}")
        shift = r_top - d_top
        quot[shift] = c
        for k, v in dc.items():
            e = k + shift
            s = rem.get(e, 0) - c * v
            if s:
                rem[e] = s
            else:
                rem.pop(e, None)
    return LaurentPolynomial(quot)


def poly_sum(polys: Iterable[LaurentPolynomial]) -> LaurentPolynomial:
    total: dict[int, int] = {}
    for p in polys:
        for k, v in p._c.items():
            total[k] = total.get(k, 0) + v
    return LaurentPolynomial(total)
