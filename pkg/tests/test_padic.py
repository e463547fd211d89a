import pytest
from hypothesis import given, settings, strategies as st

from g2heights.padic import (PadicNumber, PrecisionError, iwasawa_log,
                             iwasawa_log_rational, padic_sqrt)
from g2heights.rat import QQ

PRIMES = (5, 7, 11)

rats = st.fractions(
    min_value=-10 ** 6, max_value=10 ** 6, max_denominator=10 ** 4).map(
        lambda f: QQ(f.numerator, f.denominator))


def P(q, p=7, prec=12):
    return PadicNumber.from_rat(QQ(q), p, prec)


def test_representation_roundtrip():
    x = P(QQ(22, 7), 7, 10)
    assert x.val == -1
    y = P(QQ(22, 7), 7, 10) - P(QQ(1, 7), 7, 10)
    assert y.val == 0
    assert (y - P(3)).is_zeroish()


def test_digits_of_negative_one():
    x = P(-1, 5, 4)
    assert x.digits() == [(4, 0), (4, 1), (4, 2), (4, 3)]


@given(a=rats, b=rats, c=rats, p=st.sampled_from(PRIMES))
@settings(max_examples=60, deadline=None)
def test_ring_laws(a, b, c, p):
    xa, xb, xc = (PadicNumber.from_rat(v, p, 14) for v in (a, b, c))
    assert ((xa + xb) * xc - (xa * xc + xb * xc)).is_zeroish()
    assert ((xa * xb) * xc - xa * (xb * xc)).is_zeroish()
    assert (xa + xb - (xb + xa)).is_zeroish()


@given(a=rats, p=st.sampled_from(PRIMES))
@settings(max_examples=40, deadline=None)
def test_sub_self_is_zero(a, p):
    x = PadicNumber.from_rat(a, p, 12)
    assert (x - x).is_zeroish()


@given(a=rats, b=rats, p=st.sampled_from(PRIMES))
@settings(max_examples=40, deadline=None)
def test_division_inverts(a, b, p):
    if a == 0 or b == 0:
        return
    xa = PadicNumber.from_rat(a, p, 12)
    xb = PadicNumber.from_rat(b, p, 12)
    assert ((xa / xb) * xb - xa).is_zeroish()


def test_with_prec_caps_down():
    x = P(3, 7, 12)
    assert x.with_prec(5).prec == 5


def test_iwasawa_log_of_p_is_zero():
    for p in PRIMES:
        x = PadicNumber.from_rat(QQ(p), p, 10)
        assert iwasawa_log(x).is_zeroish()


@given(a=rats, b=rats, p=st.sampled_from(PRIMES))
@settings(max_examples=30, deadline=None)
def test_iwasawa_log_is_homomorphic(a, b, p):
    if a == 0 or b == 0:
        return
    xa = PadicNumber.from_rat(a, p, 14)
    xb = PadicNumber.from_rat(b, p, 14)
    la = iwasawa_log(xa)
    lb = iwasawa_log(xb)
    lab = iwasawa_log(xa * xb)
    m = min(la.prec, lb.prec, lab.prec)
    assert (lab - la - lb).with_prec(m).is_zeroish()


def test_iwasawa_log_rational_matches_elementwise():
    v = iwasawa_log_rational(2, 7, 10)
    w = iwasawa_log(PadicNumber.from_rat(QQ(2), 7, 12))
    assert (v - w.with_prec(v.prec)).is_zeroish()


def test_sqrt_roundtrip_and_failure():
    x = P(2, 7, 10)
    r = padic_sqrt(x)
    assert (r * r - x).is_zeroish()
    with pytest.raises((ValueError, ArithmeticError)):
        padic_sqrt(P(3, 5, 10))  # 3 is not a square mod 5


def test_inverting_zero_raises():
    z = PadicNumber.zero_at(7, 4)
    with pytest.raises((PrecisionError, ZeroDivisionError)):
        P(1) / z
