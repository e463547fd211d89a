"""Frobenius action on p-adic de Rham cohomology of y^2 = f(x), deg f = 5.

Monsky-Washnitzer lift for odd p >= 5 of good reduction: the matrix of
Frobenius on the basis {x^i dx/2y : i = 0..3}, the characteristic
polynomial t^4 + a1 t^3 + a2 t^2 + p a1 t + p^2, and (in the ordinary
case) the symmetric matrix b describing the unit-root subspace, read off
from the differentials eta1 = (b11 + (b12 - b2) x - 2 b1 x^2 - 3 x^3) dx/2y
and eta2 = (b12 + b22 x - x^2) dx/2y spanning it.

The cohomological reductions are done in exact rational arithmetic; the
only p-adic error is the truncation of the Frobenius series in k, whose
tail reduces to terms of valuation above the requested precision.
"""

import math

from .curve import Poly, poly_xgcd
from .padic import PadicNumber
from .rat import QQ, as_rational, rat_unit_mod, rat_val
from .series import QRING


# dense exact-rational polynomials, low degree first ------------------------

def _trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmul(a, b):
    if not a or not b:
        return []
    out = [QQ(0)] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca == 0:
            continue
        for j, cb in enumerate(b):
            out[i + j] += ca * cb
    return _trim(out)


def _padd(a, b):
    n = max(len(a), len(b))
    out = [(a[i] if i < len(a) else QQ(0)) + (b[i] if i < len(b) else QQ(0))
           for i in range(n)]
    return _trim(out)


def _pscale(a, c):
    if c == 0:
        return []
    return [v * c for v in a]


def _pdivmod_monic(a, b):
    r = a[:]
    db = len(b) - 1
    q = [QQ(0)] * max(0, len(r) - db)
    for k in range(len(r) - db - 1, -1, -1):
        c = r[k + db]
        if c != 0:
            q[k] = c
            for i in range(db):
                r[k + i] -= c * b[i]
            r[k + db] = QQ(0)
    return _trim(q), _trim(r[:db])


def _pderiv(a):
    return _trim([a[i] * i for i in range(1, len(a))])


def frobenius_matrix(curve, p, prec):
    """Matrix of Frobenius on {x^i dx/2y}, as exact rationals that agree
    with the true matrix modulo p^prec."""
    if p < 5:
        raise ValueError("need p >= 5")
    if not curve.has_good_reduction(p):
        raise ValueError("bad reduction at %d" % p)
    b1, b2, b3, b4, b5 = curve.b
    f = [QQ(b5), QQ(b4), QQ(b3), QQ(b2), QQ(b1), QQ(1)]
    fp = _trim([QQ(b4), QQ(2 * b3), QQ(3 * b2), QQ(4 * b1), QQ(5)])

    # reduction of a p^j-divisible term loses at most about
    # log_p(2 s_max + 1) digits, so pad the series length accordingly
    kmax = prec + 2
    while kmax < prec + 2 + math.ceil(math.log(2 * (kmax * p + p), p)):
        kmax += 1

    fxp = [QQ(0)] * (5 * p + 1)
    for i, c in enumerate(f):
        fxp[i * p] = c
    fpow = [QQ(1)]
    for _ in range(p):
        fpow = _pmul(fpow, f)
    base = _padd(fxp, _pscale(fpow, -1))

    fq = Poly.from_list(QRING, f)
    g, u0q, v0q = poly_xgcd(fq, fq.deriv())
    if not g.is_one():
        raise ArithmeticError("f and f' are not coprime")
    u0 = [u0q.coeff(i) for i in range(u0q.degree() + 1)]
    v0 = [v0q.coeff(i) for i in range(v0q.degree() + 1)]

    cols = []
    for i in range(4):
        buckets = {}
        pw = [QQ(1)]
        bk = QQ(1)
        for k in range(kmax):
            if k:
                pw = _pmul(pw, base)
                bk = bk * (QQ(-1, 2) - (k - 1)) / k
            s = k * p + (p - 1) // 2
            a = _pscale(pw, bk * p)
            a = [QQ(0)] * (p * i + p - 1) + a
            buckets[s] = _padd(buckets.get(s, []), _trim(a))
        for s in range(max(buckets), 0, -1):
            a = buckets.pop(s, [])
            if not a:
                continue
            av0 = _pmul(a, v0)
            qq, v = _pdivmod_monic(av0, f)
            u = _padd(_pmul(a, u0), _pmul(qq, fp))
            term = _pscale(_pderiv(v), QQ(2, 2 * s - 1))
            buckets[s - 1] = _padd(buckets.get(s - 1, []), _padd(u, term))
        a0 = buckets.pop(0, [])
        while len(a0) - 1 > 3:
            d = len(a0) - 1
            k = d - 4
            c = a0[d] * QQ(2, 2 * k + 5)
            red = _pscale(f, QQ(k))
            red = ([QQ(0)] * (k - 1) + red) if k else []
            red = _padd(red, [QQ(0)] * k + _pscale(fp, QQ(1, 2)))
            a0 = _padd(a0, _pscale(red, -c))
            if len(a0) - 1 >= d:
                raise ArithmeticError("degree reduction failed")
        cols.append([(a0[j] if j < len(a0) else QQ(0)) for j in range(4)])
    m = [[cols[j][i] for j in range(4)] for i in range(4)]
    for row in m:
        for c in row:
            if c != 0 and rat_val(c, p) < 0:
                raise ArithmeticError("Frobenius matrix is not p-integral")
    return m


def _mat_mod(m, p, prec):
    mod = p ** prec
    return [[0 if c == 0 else (rat_unit_mod(c, p, prec) * p ** rat_val(c, p)) % mod
             if rat_val(c, p) < prec else 0
             for c in row] for row in m]


def _matmul(a, b, mod):
    return [[sum(a[i][k] * b[k][j] for k in range(4)) % mod for j in range(4)]
            for i in range(4)]


def frobenius_charpoly(curve, p, _cache={}):
    """(a1, a2) with char poly t^4 + a1 t^3 + a2 t^2 + p a1 t + p^2."""
    key = (tuple(curve.b), p)
    if key in _cache:
        return _cache[key]
    prec = 6
    while p ** prec <= 12 * p:
        prec += 1
    mod = p ** prec
    m = _mat_mod(frobenius_matrix(curve, p, prec), p, prec)
    m2 = _matmul(m, m, mod)
    t1 = sum(m[i][i] for i in range(4)) % mod
    t2 = sum(m2[i][i] for i in range(4)) % mod
    a1 = -t1 % mod
    a2 = (t1 * t1 - t2) * pow(2, -1, mod) % mod
    if a1 > mod // 2:
        a1 -= mod
    if a2 > mod // 2:
        a2 -= mod
    if abs(a1) > 4 * math.isqrt(p) + 4 or abs(a2) > 6 * p:
        raise ArithmeticError("characteristic polynomial out of Weil bounds")
    _cache[key] = (a1, a2)
    return a1, a2


def jacobian_order_kedlaya(curve, p):
    a1, a2 = frobenius_charpoly(curve, p)
    return 1 + a1 + a2 + p * a1 + p * p


def is_ordinary(curve, p):
    _, a2 = frobenius_charpoly(curve, p)
    return a2 % p != 0


def unit_root_b_matrix(curve, p, prec):
    """The symmetric matrix (b11, b12, b22) of the unit-root subspace,
    as p-adic numbers mod p^prec.  Requires good ordinary reduction."""
    mod = p ** prec
    m = _mat_mod(frobenius_matrix(curve, p, prec), p, prec)
    mn = [[1 if i == j else 0 for j in range(4)] for i in range(4)]
    for _ in range(prec):
        mn = _matmul(mn, m, mod)
    w1 = [mn[i][2] for i in range(4)]
    w2 = [mn[i][3] for i in range(4)]
    det = (w1[2] * w2[3] - w2[2] * w1[3]) % mod
    if det % p == 0:
        raise ArithmeticError("reduction is not ordinary (or precision loss)")
    dinv = pow(det, -1, mod)

    def solve(r2, r3):
        al = (r2 * w2[3] - r3 * w2[2]) * dinv % mod
        be = (w1[2] * r3 - w1[3] * r2) * dinv % mod
        return [(al * w1[i] + be * w2[i]) % mod for i in range(4)]

    eta2 = solve(-1 % mod, 0)
    eta1 = solve(-2 * curve.b1 % mod, -3 % mod)
    b12 = eta2[0]
    b22 = eta2[1]
    b11 = eta1[0]
    b12_alt = (eta1[1] + curve.b2) % mod
    if (b12 - b12_alt) % mod != 0:
        raise ArithmeticError("inconsistent unit-root matrix readings")
    return (PadicNumber.from_rat(b11, p, prec),
            PadicNumber.from_rat(b12, p, prec),
            PadicNumber.from_rat(b22, p, prec))
