"""Exact arithmetic in the ring Z[1/2] of dyadic rationals.

A :class:`DyadicRational` stores ``numerator / 2**exponent`` with
``exponent >= 0``.  Values are kept canonical (the numerator is odd unless
the exponent is already 0, and zero is stored as ``(0, 0)``) so that equality
and hashing are structural.
"""
from __future__ import annotations

import re
from fractions import Fraction
from typing import Union

from .errors import DyadicParseError, NotDyadicQuotient

__all__ = [
    "DyadicRational",
    "normalize",
    "add",
    "sub",
    "neg",
    "mul",
    "compare",
    "div_exact",
    "parse_dyadic",
    "format_dyadic",
    "MAX_EXPONENT",
]

MAX_EXPONENT = 2**63 - 1

_LITERAL = re.compile(r"\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*\Z")


def _canon(n: int, e: int) -> tuple[int, int]:
    if n == 0:
        return 0, 0
    if e > 0:
        tz = (n & -n).bit_length() - 1
        if tz:
            k = tz if tz < e else e
            n >>= k
            e -= k
    if e > MAX_EXPONENT:
        raise OverflowError(f"dyadic exponent {e} exceeds {MAX_EXPONENT}")
    return n, e


class DyadicRational:
    """An immutable dyadic rational ``numerator / 2**exponent``.

    >>> DyadicRational(6, 3)
    DyadicRational('3/4')
    >>> DyadicRational(1, 1) + DyadicRational(1, 2)
    DyadicRational('3/4')
    """

    __slots__ = ("_n", "_e")

    def __init__(self, numerator: int = 0, exponent: int = 0):
        if exponent < 0:
            raise ValueError("exponent must be non-negative")
        self._n, self._e = _canon(int(numerator), int(exponent))

    @classmethod
    def _raw(cls, n: int, e: int) -> DyadicRational:
        # caller guarantees canonical (n, e)
        obj = object.__new__(cls)
        obj._n = n
        obj._e = e
        return obj

    @classmethod
    def coerce(cls, value: Union[DyadicRational, int, str, Fraction]) -> DyadicRational:
        if isinstance(value, DyadicRational):
            return value
        if isinstance(value, bool):
            raise TypeError("bool is not a dyadic rational")
        if isinstance(value, int):
            return cls._raw(value, 0)
        if isinstance(value, str):
            return parse_dyadic(value)
        if isinstance(value, Fraction):
            den = value.denominator
            if den & (den - 1):
                raise NotDyadicQuotient(f"{value} is not a dyadic rational")
            return cls(value.numerator, den.bit_length() - 1)
        raise TypeError(f"cannot convert {type(value).__name__} to DyadicRational")

    @property
    def numerator(self) -> int:
        return self._n

    @property
    def exponent(self) -> int:
        return self._e

    @property
    def denominator(self) -> int:
        return 1 << self._e

    def as_pair(self) -> tuple[int, int]:
        return self._n, self._e

    # arithmetic

    def __add__(self, other):
        if not isinstance(other, DyadicRational):
            if isinstance(other, int) and not isinstance(other, bool):
                other = DyadicRational._raw(other, 0)
            else:
                return NotImplemented
        an, ae, bn, be = self._n, self._e, other._n, other._e
        if ae >= be:
            n, e = an + (bn << (ae - be)), ae
        else:
            n, e = (an << (be - ae)) + bn, be
        return DyadicRational._raw(*_canon(n, e))

    __radd__ = __add__

    def __neg__(self):
        return DyadicRational._raw(-self._n, self._e)

    def __pos__(self):
        return self

    def __abs__(self):
        return self if self._n >= 0 else -self

    def __sub__(self, other):
        if not isinstance(other, DyadicRational):
            if isinstance(other, int) and not isinstance(other, bool):
                other = DyadicRational._raw(other, 0)
            else:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, DyadicRational):
            if isinstance(other, int) and not isinstance(other, bool):
                other = DyadicRational._raw(other, 0)
            else:
                return NotImplemented
        return DyadicRational._raw(*_canon(self._n * other._n, self._e + other._e))

    __rmul__ = __mul__

    def scale2(self, k: int) -> DyadicRational:
        """Multiply by ``2**k`` (``k`` may be negative)."""
        if k >= 0:
            if k <= self._e:
                return DyadicRational._raw(self._n, self._e - k)
            return DyadicRational._raw(self._n << (k - self._e), 0)
        return DyadicRational._raw(*_canon(self._n, self._e - k))

    def div_exact(self, other: DyadicRational) -> DyadicRational:
        """Exact quotient; raises :class:`NotDyadicQuotient` if it is not dyadic."""
        other = DyadicRational.coerce(other)
        if other._n == 0:
            raise ZeroDivisionError("dyadic division by zero")
        bn = other._n
        tz = (bn & -bn).bit_length() - 1
        odd = bn >> tz
        q, r = divmod(self._n, odd)
        if r:
            raise NotDyadicQuotient(f"{self} / {other} has an odd denominator factor")
        # self/other = q / 2**(self.e - other.e + tz)
        shift = self._e - other._e + tz
        if shift >= 0:
            return DyadicRational._raw(*_canon(q, shift))
        return DyadicRational._raw(q << -shift, 0)

    def log2_exact(self) -> int | None:
        """Return ``k`` if the value is exactly ``2**k``, else ``None``."""
        n = self._n
        if n <= 0 or n & (n - 1):
            return None
        return n.bit_length() - 1 - self._e

    # ordering

    def _cmp(self, other: DyadicRational) -> int:
        an, ae, bn, be = self._n, self._e, other._n, other._e
        if ae >= be:
            bn <<= ae - be
        else:
            an <<= be - ae
        return (an > bn) - (an < bn)

    def __eq__(self, other):
        if isinstance(other, DyadicRational):
            return self._n == other._n and self._e == other._e
        if isinstance(other, int) and not isinstance(other, bool):
            return self._e == 0 and self._n == other
        return NotImplemented

    def __hash__(self):
        if self._e == 0:
            return hash(self._n)
        return hash((self._n, self._e))

    def __lt__(self, other):
        other = _maybe(other)
        return NotImplemented if other is None else self._cmp(other) < 0

    def __le__(self, other):
        other = _maybe(other)
        return NotImplemented if other is None else self._cmp(other) <= 0

    def __gt__(self, other):
        other = _maybe(other)
        return NotImplemented if other is None else self._cmp(other) > 0

    def __ge__(self, other):
        other = _maybe(other)
        return NotImplemented if other is None else self._cmp(other) >= 0

    def __bool__(self):
        return self._n != 0

    def __float__(self):
        # Only the SVG renderer needs this.
        return float(Fraction(self._n, 1 << self._e))

    def __str__(self):
        if self._e == 0:
            return str(self._n)
        return f"{self._n}/{1 << self._e}"

    def __repr__(self):
        return f"DyadicRational('{self}')"

    def __reduce__(self):
        return (DyadicRational, (self._n, self._e))


def _maybe(value) -> DyadicRational | None:
    if isinstance(value, DyadicRational):
        return value
    if isinstance(value, int) and not isinstance(value, bool):
        return DyadicRational._raw(value, 0)
    return None


ZERO = DyadicRational._raw(0, 0)
ONE = DyadicRational._raw(1, 0)


def normalize(numerator: int, exponent: int) -> DyadicRational:
    return DyadicRational(numerator, exponent)


def add(a: DyadicRational, b: DyadicRational) -> DyadicRational:
    return a + b


def sub(a: DyadicRational, b: DyadicRational) -> DyadicRational:
    return a - b


def neg(a: DyadicRational) -> DyadicRational:
    return -a


def mul(a: DyadicRational, b: DyadicRational) -> DyadicRational:
    return a * b


def compare(a: DyadicRational, b: DyadicRational) -> int:
    """Three-way comparison: -1, 0 or 1."""
    return DyadicRational.coerce(a)._cmp(DyadicRational.coerce(b))


def div_exact(a: DyadicRational, b: DyadicRational) -> DyadicRational:
    return DyadicRational.coerce(a).div_exact(b)


def parse_dyadic(text: str) -> DyadicRational:
    """Parse ``"3"``, ``"-5/16"`` or a non-canonical ``"6/16"``.

    The denominator must be a positive power of two.
    """
    m = _LITERAL.match(text)
    if m is None:
        raise DyadicParseError(f"not a dyadic literal: {text!r}")
    num = int(m.group(1))
    if m.group(2) is None:
        return DyadicRational._raw(num, 0)
    den = int(m.group(2))
    if den <= 0 or den & (den - 1):
        raise DyadicParseError(f"denominator {den} is not a power of two in {text!r}")
    return DyadicRational(num, den.bit_length() - 1)


def format_dyadic(x: DyadicRational) -> str:
    return str(x)
