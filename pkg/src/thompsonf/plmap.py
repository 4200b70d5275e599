"""Elements of Thompson's group F as exact piecewise-linear maps of [0, 1].

An :class:`FElement` is a canonical breakpoint list: it starts at ``(0, 0)``,
ends at ``(1, 1)``, is strictly increasing in both coordinates, every slope
is a power of two, and no interior breakpoint is collinear with its
neighbours.  Canonical form makes group equality structural equality.

Products follow function composition: ``f * g`` (and ``compose(f, g)``) is
``x -> f(g(x))``, so the right factor acts first.
"""
from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from ._backend import kernels as _k
from .dyadic import DyadicRational
from .errors import (
    BadEndpoints,
    DyadicParseError,
    ElementParseError,
    NotDyadicQuotient,
    NotIncreasing,
    OutOfDomain,
    SlopeNotPowerOfTwo,
)

__all__ = [
    "FElement",
    "make_element",
    "evaluate",
    "preimage",
    "compose",
    "inverse",
    "identity",
    "standard_generator",
    "abelianization",
    "in_derived_subgroup",
    "is_identity",
    "equals",
    "format_element",
    "parse_element",
]

_D = DyadicRational._raw
_IDENTITY_PTS = ((0, 0, 0, 0), (1, 0, 1, 0))


def _pair_to_raw(x: DyadicRational, y: DyadicRational) -> tuple[int, int, int, int]:
    return (x._n, x._e, y._n, y._e)


class FElement:
    """An element of F, stored in raw kernel form (see ``_pykernels``)."""

    __slots__ = ("_pts", "_slopes", "_hash")

    def __init__(self, pairs: Iterable[tuple]):
        other = make_element(pairs)
        self._pts = other._pts
        self._slopes = other._slopes
        self._hash = None

    @classmethod
    def _from_raw(cls, pts: tuple, slopes: tuple) -> FElement:
        obj = object.__new__(cls)
        obj._pts = pts
        obj._slopes = slopes
        obj._hash = None
        return obj

    @property
    def breakpoints(self) -> tuple[tuple[DyadicRational, DyadicRational], ...]:
        return tuple((_D(p[0], p[1]), _D(p[2], p[3])) for p in self._pts)

    @property
    def slope_exponents(self) -> tuple[int, ...]:
        """``log2`` of the slope of each segment, left to right."""
        return self._slopes

    def __len__(self):
        return len(self._pts)

    def __call__(self, x) -> DyadicRational:
        return evaluate(self, x)

    def __mul__(self, other):
        if not isinstance(other, FElement):
            return NotImplemented
        return compose(self, other)

    def __pow__(self, m: int) -> FElement:
        base = self if m >= 0 else inverse(self)
        result = identity()
        for _ in range(abs(m)):
            result = compose(result, base)
        return result

    def inverse(self) -> FElement:
        return inverse(self)

    def __eq__(self, other):
        if not isinstance(other, FElement):
            return NotImplemented
        return self._pts == other._pts

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self._pts)
        return self._hash

    def __repr__(self):
        inner = ", ".join(f"({x}, {y})" for x, y in self.breakpoints)
        return f"FElement([{inner}])"

    def __str__(self):
        return format_element(self)


def _coord(v) -> DyadicRational:
    try:
        return DyadicRational.coerce(v)
    except (DyadicParseError, NotDyadicQuotient):
        # a non-dyadic rational breakpoint forces a non-dyadic slope
        if isinstance(v, str) and _is_rational(v):
            raise SlopeNotPowerOfTwo(f"breakpoint coordinate {v} is not dyadic") from None
        if isinstance(v, Fraction):
            raise SlopeNotPowerOfTwo(f"breakpoint coordinate {v} is not dyadic") from None
        raise


_RATIONAL = re.compile(r"\s*[+-]?\d+(?:\s*/\s*0*[1-9]\d*)?\s*\Z")


def _is_rational(text: str) -> bool:
    return _RATIONAL.match(text) is not None


def make_element(pairs: Iterable[tuple]) -> FElement:
    """Validate a breakpoint list and return the canonical element.

    Coordinates may be :class:`DyadicRational`, ints, fractions or literals.
    Collinear interior breakpoints are dropped.
    """
    pts = [(_coord(x), _coord(y)) for x, y in pairs]
    if len(pts) < 2:
        raise BadEndpoints("an element needs at least the breakpoints (0,0) and (1,1)")
    if pts[0] != (0, 0):
        raise BadEndpoints(f"first breakpoint must be (0, 0), got ({pts[0][0]}, {pts[0][1]})")
    if pts[-1] != (1, 1):
        raise BadEndpoints(f"last breakpoint must be (1, 1), got ({pts[-1][0]}, {pts[-1][1]})")
    raw = [_pair_to_raw(*pts[0])]
    slopes: list[int] = []
    for (x0, y0), (x1, y1) in zip(pts, pts[1:]):
        dx, dy = x1 - x0, y1 - y0
        if dx <= 0 or dy <= 0:
            raise NotIncreasing(
                f"breakpoints ({x0}, {y0}) and ({x1}, {y1}) are not strictly increasing")
        try:
            ratio = dy.div_exact(dx)
        except NotDyadicQuotient:
            raise SlopeNotPowerOfTwo(
                f"slope on [{x0}, {x1}] is not dyadic, let alone a power of 2") from None
        s = ratio.log2_exact()
        if s is None:
            raise SlopeNotPowerOfTwo(f"slope {ratio} on [{x0}, {x1}] is not a power of 2")
        if slopes and slopes[-1] == s:
            raw[-1] = _pair_to_raw(x1, y1)
        else:
            slopes.append(s)
            raw.append(_pair_to_raw(x1, y1))
    return FElement._from_raw(tuple(raw), tuple(slopes))


def identity() -> FElement:
    return FElement._from_raw(_IDENTITY_PTS, (0,))


def _unit(x) -> DyadicRational:
    x = DyadicRational.coerce(x)
    if x._n < 0 or x._n > (1 << x._e):
        raise OutOfDomain(f"{x} is outside [0, 1]")
    return x


def evaluate(f: FElement, x) -> DyadicRational:
    x = _unit(x)
    return _D(*_k.evaluate(f._pts, f._slopes, x._n, x._e))


def preimage(f: FElement, y) -> DyadicRational:
    y = _unit(y)
    return _D(*_k.preimage(f._pts, f._slopes, y._n, y._e))


def compose(f: FElement, g: FElement) -> FElement:
    """The element ``x -> f(g(x))``; ``g`` acts first."""
    return FElement._from_raw(*_k.compose(f._pts, f._slopes, g._pts, g._slopes))


def inverse(f: FElement) -> FElement:
    return FElement._from_raw(*_k.inverse(f._pts, f._slopes))


def is_identity(f: FElement) -> bool:
    return f._pts == _IDENTITY_PTS


def equals(f: FElement, g: FElement) -> bool:
    return f._pts == g._pts


_X0 = ((0, 0, 0, 0), (1, 1, 1, 2), (3, 2, 1, 1), (1, 0, 1, 0))
_X1 = ((0, 0, 0, 0), (1, 1, 1, 1), (3, 2, 5, 3), (7, 3, 3, 2), (1, 0, 1, 0))


@lru_cache(maxsize=None)
def standard_generator(i: int) -> FElement:
    """The generator ``x_i``; for ``i >= 2`` it is ``x0^-(i-1) x1 x0^(i-1)``."""
    if i < 0:
        raise ValueError("generator index must be non-negative")
    if i == 0:
        return make_element((_D(p[0], p[1]), _D(p[2], p[3])) for p in _X0)
    if i == 1:
        return make_element((_D(p[0], p[1]), _D(p[2], p[3])) for p in _X1)
    x0 = standard_generator(0)
    return compose(inverse(x0), compose(standard_generator(i - 1), x0))


def abelianization(f: FElement) -> tuple[int, int]:
    """Image in Z + Z: log2 of the slope at 0 and at 1."""
    return f._slopes[0], f._slopes[-1]


def in_derived_subgroup(f: FElement) -> bool:
    """True iff ``f`` is the identity near 0 and near 1.

    The first segment starts at (0, 0) and the last ends at (1, 1), so slope 1
    on both means they lie on the diagonal.
    """
    return f._slopes[0] == 0 and f._slopes[-1] == 0


def format_element(f: FElement) -> str:
    """One ``"x y"`` line per breakpoint, trailing newline included."""
    return "".join(f"{x} {y}\n" for x, y in f.breakpoints)


def parse_element(text: str) -> FElement:
    """Inverse of :func:`format_element`; blank lines and ``#`` comments are skipped.

    Membership violations raise the same errors as :func:`make_element`.
    """
    pairs = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if len(fields) != 2:
            raise ElementParseError(f"line {lineno}: expected 'x y', got {line!r}")
        for tok in fields:
            if not _is_rational(tok):
                raise ElementParseError(f"line {lineno}: {tok!r} is not a number")
        pairs.append((fields[0], fields[1]))
    return make_element(pairs)


def element_from_raw(pts: Sequence[tuple[int, int, int, int]]) -> FElement:
    """Build from raw ``(xn, xe, yn, ye)`` tuples, with full validation."""
    return make_element((DyadicRational(p[0], p[1]), DyadicRational(p[2], p[3])) for p in pts)
