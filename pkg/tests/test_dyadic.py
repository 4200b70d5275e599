from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from thompsonf.dyadic import (
    DyadicRational,
    add,
    compare,
    div_exact,
    mul,
    normalize,
    parse_dyadic,
    sub,
)
from thompsonf.errors import DyadicParseError, NotDyadicQuotient

from conftest import D, dyadics, frac


@pytest.mark.parametrize("n, e, want", [(4, 2, (1, 0)), (0, 7, (0, 0)), (6, 3, (3, 2)), (-12, 1, (-6, 0))])
def test_normalize(n, e, want):
    assert normalize(n, e).as_pair() == want


def test_add_sub_examples():
    assert add(D("1/2"), D("1/4")) == D("3/4")
    assert add(D("3/8"), D("-3/8")).as_pair() == (0, 0)
    assert add(D("7/8"), D("1/8")).as_pair() == (1, 0)
    assert sub(D("1"), D("1/8")) == D("7/8")
    assert -D("5/16") == D("-5/16")


def test_mul_examples():
    assert mul(D("1/2"), D("3/4")) == D("3/8")
    assert mul(D("5/32"), D("1")) == D("5/32")
    assert mul(D("3/4"), D("0")).as_pair() == (0, 0)


def test_compare_examples():
    assert compare(D("1/2"), D("3/8")) == 1
    assert compare(D("5/16"), D("5/16")) == 0
    assert compare(D("3/8"), D("1/2")) == -1
    # 2^-30 reached by repeated halving and by a product
    a = D("1")
    for _ in range(30):
        a = a * D("1/2")
    b = DyadicRational(3, 31) - DyadicRational(1, 31) * 1
    assert compare(a, b) == 0 and a == b


def test_div_exact():
    assert div_exact(D("3/8"), D("3/4")) == D("1/2")
    assert div_exact(D("3/8"), D("1/8")) == D("3")
    assert div_exact(D("6"), D("1/4")) == D("24")
    with pytest.raises(NotDyadicQuotient):
        div_exact(D("1/4"), D("3/4"))
    with pytest.raises(ZeroDivisionError):
        div_exact(D("1"), D("0"))


def test_parse_and_format():
    assert parse_dyadic("6/16") == D("3/8")
    assert str(parse_dyadic("6/16")) == "3/8"
    assert str(parse_dyadic(" -5/16 ")) == "-5/16"
    assert str(parse_dyadic("8/4")) == "2"
    assert parse_dyadic("0/8").as_pair() == (0, 0)
    for bad in ["1/3", "1/0", "x", "1/", "", "1.5", "3/-4"]:
        with pytest.raises(DyadicParseError):
            parse_dyadic(bad)


def test_negative_exponent_rejected():
    with pytest.raises(ValueError):
        DyadicRational(1, -1)


def test_exponent_overflow_detected():
    with pytest.raises(OverflowError):
        DyadicRational(1, 2**63)


# properties, checked against Fraction arithmetic

@given(dyadics, dyadics, dyadics)
def test_ring_axioms(a, b, c):
    assert a + (b + c) == (a + b) + c
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert a + b - b == a


@given(dyadics, dyadics)
def test_matches_fraction_oracle(a, b):
    assert frac(a + b) == frac(a) + frac(b)
    assert frac(a - b) == frac(a) - frac(b)
    assert frac(a * b) == frac(a) * frac(b)
    assert compare(a, b) == (frac(a) > frac(b)) - (frac(a) < frac(b))


@given(dyadics)
def test_canonical_form(a):
    n, e = a.as_pair()
    assert (n == 0 and e == 0) or n % 2 == 1 or e == 0
    assert normalize(n, e).as_pair() == (n, e)


@given(dyadics, dyadics)
def test_compare_agrees_with_sign_of_difference(a, b):
    d = (a - b).numerator
    assert compare(a, b) == (d > 0) - (d < 0)


@given(dyadics)
def test_parse_format_roundtrip(a):
    assert parse_dyadic(str(a)).as_pair() == a.as_pair()


@given(dyadics, st.integers(-40, 40))
def test_scale2(a, k):
    assert frac(a.scale2(k)) == frac(a) * Fraction(2) ** k


@given(dyadics, dyadics.filter(bool))
def test_div_exact_oracle(a, b):
    q = Fraction(frac(a)) / frac(b)
    den = q.denominator
    if den & (den - 1) == 0:
        assert frac(div_exact(a, b)) == q
    else:
        with pytest.raises(NotDyadicQuotient):
            div_exact(a, b)


def test_hash_consistent_with_int():
    assert hash(D("2")) == hash(2) and D("2") == 2
    assert len({D("1/2"), DyadicRational(2, 2), DyadicRational(1, 1)}) == 1
