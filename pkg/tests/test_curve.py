import pytest
from hypothesis import given, settings, strategies as st

from g2heights.curve import (CurvePoint, FpRing, Genus2Curve, JacPoint, Poly,
                             brute_jacobian_classes, cantor_add, cantor_mul,
                             cantor_sub, iota, jacobian_counts,
                             mumford_from_points, point_order, reduce_point)
from g2heights.rat import QQ
from g2heights.series import QRING

C56 = Genus2Curve([-2, 1, 0, 0, 1])
C55 = Genus2Curve([0, 0, 0, 0, -1])


def fp_points(curve, p):
    """All degree-2 Mumford points of J(F_p) plus the identity."""
    ring = FpRing(p)
    f = curve.f_poly(ring)
    pts = [JacPoint.identity(ring)]
    for u1 in range(p):
        for u0 in range(p):
            u = Poly.from_list(ring, [u0, u1, 1])
            for w1 in range(p):
                for w0 in range(p):
                    v = Poly.from_list(ring, [w0, w1])
                    if ((v * v - f) % u).is_zero():
                        pts.append(JacPoint(u, v))
    return pts


def test_singular_curve_rejected():
    with pytest.raises(ValueError):
        Genus2Curve([0, 0, 0, 0, 0])


def test_discriminants():
    # disc(x^5 + a) = 5^5 a^4
    assert C55.discriminant() == 5 ** 5
    assert C56.discriminant() == 53 * 61


def test_group_order_matches_class_enumeration():
    p = 7
    _, _, n = jacobian_counts(C56, p)
    assert n == brute_jacobian_classes(C56, p)


def test_identity_and_inverse():
    u = mumford_from_points(CurvePoint(QQ(0), QQ(1)), CurvePoint(QQ(1), QQ(-1)),
                            C56)
    assert cantor_sub(u, u, C56).is_identity()
    assert cantor_add(u, u.neg(), C56).is_identity()


def test_cantor_group_laws_over_fp():
    p = 7
    pts = fp_points(C56, p)[:40]
    for a in pts[::7]:
        for b in pts[::11]:
            ab = cantor_add(a, b, C56)
            ba = cantor_add(b, a, C56)
            assert ab.key() == ba.key()
    a, b, c = pts[3], pts[10], pts[17]
    left = cantor_add(cantor_add(a, b, C56), c, C56)
    right = cantor_add(a, cantor_add(b, c, C56), C56)
    assert left.key() == right.key()


def test_cantor_mul_matches_repeated_add():
    u = mumford_from_points(CurvePoint(QQ(0), QQ(1)), CurvePoint(QQ(1), QQ(-1)),
                            C56)
    acc = u
    for n in range(2, 7):
        acc = cantor_add(acc, u, C56)
        d = cantor_sub(acc, cantor_mul(u, n, C56), C56)
        assert d.is_identity()


def test_point_order_annihilates():
    p = 7
    _, _, n = jacobian_counts(C56, p)
    P = fp_points(C56, p)[5]
    m = point_order(P, n, C56)
    assert n % m == 0
    assert cantor_mul(P, m, C56).is_identity()
    assert not cantor_mul(P, m // min(
        q for q in range(2, m + 1) if m % q == 0), C56).is_identity() or m == 1


def test_reduce_point_is_group_hom():
    p = 7
    u = mumford_from_points(CurvePoint(QQ(0), QQ(1)), CurvePoint(QQ(1), QQ(-1)),
                            C56)
    r1 = reduce_point(cantor_mul(u, 3, C56), C56, p)
    r2 = cantor_mul(reduce_point(u, C56, p), 3, C56)
    assert r1.key() == r2.key()


def test_mumford_validation():
    with pytest.raises(ValueError):
        JacPoint.from_mumford(QRING, [1, 1, 1], [5]).validate(C56)
    JacPoint.from_mumford(QRING, [2, 2, 1], [-1, 1]).validate(C55)


@given(n=st.integers(min_value=1, max_value=20))
@settings(max_examples=12, deadline=None)
def test_iota_multiples_stay_on_jacobian(n):
    u = iota(CurvePoint(QQ(1), QQ(-1)))
    R = cantor_mul(u, n, C56)
    if not R.is_identity():
        R.validate(C56)
