import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from thompsonf.dyadic import DyadicRational
from thompsonf.errors import LengthMismatch, PartitionError
from thompsonf.interpolate import (
    DyadicPartition,
    format_partition,
    interpolate,
    parse_partition,
    segment_map,
    segment_trace,
)
from thompsonf.plmap import evaluate, is_identity, make_element

from conftest import D, partitions


def strs(pairs):
    return [(str(x), str(y)) for x, y in pairs]


def test_segment_map_shorter_to_longer():
    # t1=1, j1=1, t2=3, j2=2: z1=4, z2=6, d=3/8, ratio 3 = 2 + 1, slopes 1, 4, 2
    assert strs(segment_map(0, D("1/2"), 0, D("3/4"))) == [
        ("0", "0"), ("3/8", "3/8"), ("7/16", "5/8"), ("1/2", "3/4")]
    tr = segment_trace(0, D("1/2"), 0, D("3/4"))
    assert (tr.z1, tr.z2, tr.d, tr.ratio) == (4, 6, D("3/8"), 3)
    assert tr.target_exps == (1, 0) and tr.source_exps == (-1, -1)


def test_segment_map_equal_lengths():
    assert strs(segment_map(0, D("1/2"), 0, D("1/2"))) == [("0", "0"), ("1/2", "1/2")]
    assert strs(segment_map(D("1/4"), D("1/2"), D("1/2"), D("3/4"))) == [("1/4", "1/2"), ("1/2", "3/4")]


def test_segment_map_quarter_to_half():
    assert strs(segment_map(0, D("1/4"), 0, D("1/2"))) == [
        ("0", "0"), ("1/8", "1/8"), ("3/16", "3/8"), ("1/4", "1/2")]


def test_segment_map_longer_to_shorter_is_transpose():
    fwd = segment_map(0, D("1/4"), 0, D("1/2"))
    back = segment_map(0, D("1/2"), 0, D("1/4"))
    assert back == [(y, x) for x, y in fwd]


def test_segment_map_zero_length_slope_one_piece():
    # c1 = 1/2, c2 = 1: z1 = 1 so d = 0 and a single slope-2 piece remains
    assert strs(segment_map(0, D("1/2"), 0, 1)) == [("0", "0"), ("1/2", "1")]


def test_segment_trace_rejects_wrong_orientation():
    with pytest.raises(ValueError):
        segment_trace(0, D("1/2"), 0, D("1/4"))


def slopes_of(pairs):
    out = []
    for (x0, y0), (x1, y1) in zip(pairs, pairs[1:]):
        r = (y1 - y0).div_exact(x1 - x0)
        out.append(r.log2_exact())
    return out


@settings(max_examples=300, deadline=None)
@given(st.integers(1, 2**8), st.integers(0, 8), st.integers(1, 2**8), st.integers(0, 8),
       st.integers(-64, 64), st.integers(-64, 64))
def test_segment_trace_identities(n1, e1, n2, e2, off_x, off_y):
    c1, c2 = DyadicRational(n1, e1), DyadicRational(n2, e2)
    if c1 == c2:
        return
    if c2 < c1:
        c1, c2 = c2, c1
    x_lo, y_lo = DyadicRational(off_x, 4), DyadicRational(off_y, 5)
    tr = segment_trace(x_lo, x_lo + c1, y_lo, y_lo + c2)
    assert tr.c1 - tr.d == DyadicRational(1, tr.j1 + tr.j2)
    assert (tr.c2 - tr.d).div_exact(tr.c1 - tr.d) == tr.ratio == tr.z2 - tr.z1 + 1
    assert sum(2**k for k in tr.target_exps) == tr.ratio
    assert sum(DyadicRational(1, 0).scale2(k) for k in tr.source_exps) == 1
    assert len(tr.target_exps) == len(tr.source_exps)
    assert tr.pairs[0] == (x_lo, y_lo) and tr.pairs[-1] == (x_lo + c1, y_lo + c2)
    assert all(s is not None for s in slopes_of(tr.pairs))


def test_interpolate_examples():
    assert is_identity(interpolate([0, 1], [0, 1]))
    f = interpolate([0, D("1/2"), 1], [0, D("1/4"), 1])
    assert evaluate(f, D("1/2")) == D("1/4")
    src = [0, D("1/4"), D("1/2"), D("3/4"), 1]
    tgt = [0, D("1/2"), D("5/8"), D("3/4"), 1]
    g = interpolate(src, tgt)
    assert [evaluate(g, x) for x in src] == tgt


def test_interpolate_errors():
    with pytest.raises(LengthMismatch):
        interpolate([0, D("1/2"), 1], [0, 1])
    with pytest.raises(PartitionError):
        interpolate([0, D("1/2"), D("1/4"), 1], [0, D("1/4"), D("1/2"), 1])
    with pytest.raises(PartitionError):
        DyadicPartition([D("1/4"), 1])


@settings(max_examples=150, deadline=None)
@given(partitions(), partitions())
def test_interpolate_property(p, q):
    n = min(len(p), len(q))
    p = p[:n - 1] + [p[-1]]
    q = q[:n - 1] + [q[-1]]
    f = interpolate(p, q)
    # revalidate through the public constructor
    assert make_element(f.breakpoints) == f
    assert [evaluate(f, x) for x in p] == q


@settings(max_examples=50, deadline=None)
@given(partitions())
def test_interpolate_same_partition_is_identity(p):
    assert is_identity(interpolate(p, p))


def test_partition_text_format():
    p = parse_partition("0 1/4  3/8\n1")
    assert format_partition(p) == "0 1/4 3/8 1"
    with pytest.raises(PartitionError):
        parse_partition("0 1/2")
