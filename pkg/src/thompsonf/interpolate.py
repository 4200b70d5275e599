"""Elements of F carrying one dyadic partition of [0, 1] onto another.

Each pair of consecutive points is handled by :func:`segment_map`: a slope-1
piece followed by pieces whose lengths follow the binary expansions of the
remaining length ratio, so that every slope is a power of two.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .dyadic import DyadicRational, parse_dyadic
from .errors import LengthMismatch, PartitionError
from .plmap import FElement, make_element

__all__ = [
    "DyadicPartition",
    "SegmentTrace",
    "segment_map",
    "segment_trace",
    "interpolate",
    "parse_partition",
    "format_partition",
]

Pair = tuple[DyadicRational, DyadicRational]


@dataclass(frozen=True)
class DyadicPartition:
    """Strictly increasing dyadic points from 0 to 1."""

    points: tuple[DyadicRational, ...]

    def __init__(self, points: Iterable):
        pts = tuple(DyadicRational.coerce(p) for p in points)
        if len(pts) < 2 or pts[0] != 0 or pts[-1] != 1:
            raise PartitionError("a partition must start at 0 and end at 1")
        for a, b in zip(pts, pts[1:]):
            if not a < b:
                raise PartitionError(f"partition points {a} and {b} are not strictly increasing")
        object.__setattr__(self, "points", pts)

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)


@dataclass(frozen=True)
class SegmentTrace:
    """Intermediate quantities of one shorter-to-longer segment construction.

    ``c1 < c2`` are the source and target lengths, ``c = t / 2**j``.  ``d`` is
    the length of the slope-1 piece, ``ratio`` the remaining length ratio, and
    ``target_exps`` / ``source_exps`` the exponents of the two binary
    decompositions (of ``ratio`` and of 1).
    """

    c1: DyadicRational
    c2: DyadicRational
    t1: int
    j1: int
    t2: int
    j2: int
    z1: int
    z2: int
    d: DyadicRational
    ratio: int
    target_exps: tuple[int, ...]
    source_exps: tuple[int, ...]
    pairs: tuple[Pair, ...]


def _binary_exponents(r: int) -> tuple[int, ...]:
    return tuple(k for k in range(r.bit_length() - 1, -1, -1) if r >> k & 1)


def _unit_exponents(m: int) -> tuple[int, ...]:
    # 1 = 1/2 + 1/4 + ... + 1/2^(m-1) + 1/2^(m-1); m == 1 gives 1 = 2^0
    if m == 1:
        return (0,)
    return tuple(-k for k in range(1, m)) + (-(m - 1),)


def segment_trace(x_lo, x_hi, y_lo, y_hi) -> SegmentTrace:
    """Run the construction for a segment whose source is strictly shorter."""
    x_lo, x_hi, y_lo, y_hi = (DyadicRational.coerce(v) for v in (x_lo, x_hi, y_lo, y_hi))
    c1 = x_hi - x_lo
    c2 = y_hi - y_lo
    if not (0 < c1 < c2):
        raise ValueError("segment_trace needs 0 < x_hi - x_lo < y_hi - y_lo")
    t1, j1 = c1.numerator, c1.exponent
    t2, j2 = c2.numerator, c2.exponent
    z1 = t1 << j2
    z2 = t2 << j1
    d = (c1 * (z1 - 1)).div_exact(DyadicRational(z1))
    ratio = z2 - z1 + 1
    target_exps = _binary_exponents(ratio)
    source_exps = _unit_exponents(len(target_exps))

    unit = c1 - d  # == 2**-(j1 + j2)
    assert unit == DyadicRational(1, j1 + j2)
    assert (c2 - d).div_exact(unit) == ratio

    pairs = [(x_lo, y_lo)]
    x, y = x_lo, y_lo
    if d:
        x, y = x + d, y + d
        pairs.append((x, y))
    for k, kp in zip(target_exps, source_exps):
        x = x + unit.scale2(kp)
        y = y + unit.scale2(k)
        pairs.append((x, y))
    assert pairs[-1] == (x_hi, y_hi)
    return SegmentTrace(c1, c2, t1, j1, t2, j2, z1, z2, d, ratio,
                        target_exps, source_exps, tuple(pairs))


def segment_map(x_lo, x_hi, y_lo, y_hi) -> list[Pair]:
    """Breakpoints of a map ``[x_lo, x_hi] -> [y_lo, y_hi]`` with power-of-2 slopes.

    >>> [(str(x), str(y)) for x, y in segment_map(0, "1/2", 0, "3/4")]
    [('0', '0'), ('3/8', '3/8'), ('7/16', '5/8'), ('1/2', '3/4')]
    """
    x_lo, x_hi, y_lo, y_hi = (DyadicRational.coerce(v) for v in (x_lo, x_hi, y_lo, y_hi))
    if not (x_lo < x_hi and y_lo < y_hi):
        raise ValueError("segment endpoints must be strictly increasing")
    c1 = x_hi - x_lo
    c2 = y_hi - y_lo
    if c1 == c2:
        return [(x_lo, y_lo), (x_hi, y_hi)]
    if c1 < c2:
        return list(segment_trace(x_lo, x_hi, y_lo, y_hi).pairs)
    # build the shorter-to-longer map the other way round and transpose it
    return [(x, y) for y, x in segment_trace(y_lo, y_hi, x_lo, x_hi).pairs]


def interpolate(source, target) -> FElement:
    """An element of F with ``f(source[i]) == target[i]`` for every ``i``."""
    src = source if isinstance(source, DyadicPartition) else DyadicPartition(source)
    tgt = target if isinstance(target, DyadicPartition) else DyadicPartition(target)
    if len(src) != len(tgt):
        raise LengthMismatch(f"partitions have {len(src)} and {len(tgt)} points")
    pairs: list[Pair] = [(src.points[0], tgt.points[0])]
    for i in range(len(src) - 1):
        piece = segment_map(src.points[i], src.points[i + 1], tgt.points[i], tgt.points[i + 1])
        pairs.extend(piece[1:])
    return make_element(pairs)


def parse_partition(text: str) -> DyadicPartition:
    return DyadicPartition(parse_dyadic(tok) for tok in text.split())


def format_partition(p: Sequence[DyadicRational] | DyadicPartition) -> str:
    return " ".join(str(x) for x in p)
