"""Coordinates of a genus-2 Jacobian point away from the theta divisor.

For a class [P1 + P2 - 2*oo] with Mumford pair (u, v), u = x^2 + u1*x + u0,
v = v1*x + v0, the coordinates X11, X12, X22, X111, X112, X122, X222 and X
are symmetric functions of (x1, y1), (x2, y2) and generate the coordinate
ring of J minus the theta divisor.  They are computed here over any
coefficient ring: exact rationals, p-adics, finite fields, or truncated
series (for residue-disc parametrizations).

Two branches: the generic one works in the quotient algebra K[x]/(u), so
the two points never need to be separated; when u is a perfect square
(P1 = P2 = (x0, y0)) the closed doubling formulas are used instead.
"""

from .curve import DegenerateError


# ---------------------------------------------------------------------------
# arithmetic in A = K[x]/(x^2 + u1*x + u0), elements stored as (c0, c1)

def _amul(a, b, u1, u0):
    a0, a1 = a
    b0, b1 = b
    c2 = a1 * b1
    return (a0 * b0 - c2 * u0, a0 * b1 + a1 * b0 - c2 * u1)


def _aadd(*els):
    it = iter(els)
    r0, r1 = next(it)
    for e0, e1 in it:
        r0 = r0 + e0
        r1 = r1 + e1
    return (r0, r1)


def _aneg(a):
    return (-a[0], -a[1])


def _ascale(a, c):
    return (a[0] * c, a[1] * c)


def _aeval(coeffs, xel, u1, u0, zero):
    """Evaluate a polynomial (list of scalars, low degree first) at an
    algebra element by Horner."""
    acc = (zero, zero)
    for c in reversed(coeffs):
        acc = _amul(acc, xel, u1, u0)
        acc = (acc[0] + c, acc[1])
    return acc


# ---------------------------------------------------------------------------

class GrantCoords:
    __slots__ = ("x11", "x12", "x22", "x111", "x112", "x122", "x222", "x")

    def __init__(self, x11, x12, x22, x111, x112, x122, x222, x):
        self.x11 = x11
        self.x12 = x12
        self.x22 = x22
        self.x111 = x111
        self.x112 = x112
        self.x122 = x122
        self.x222 = x222
        self.x = x

    def as_dict(self):
        return {"X11": self.x11, "X12": self.x12, "X22": self.x22,
                "X111": self.x111, "X112": self.x112, "X122": self.x122,
                "X222": self.x222, "X": self.x}

    def __repr__(self):
        return "GrantCoords(%s)" % self.as_dict()


def grant_coords(P, curve):
    """Coordinates of a Jacobian point not on the theta divisor."""
    ring = P.ring()
    if P.is_identity():
        raise DegenerateError("coordinates have a pole at the identity")
    if P.u.degree() != 2:
        raise DegenerateError("coordinates have a pole on the theta divisor")
    u0, u1 = P.u.coeff(0), P.u.coeff(1)
    v0, v1 = P.v.coeff(0), P.v.coeff(1)
    b1, b2, b3, b4, b5 = curve.b

    x22 = -u1
    x12 = -u0
    x222 = v1
    x122 = v0
    x112 = v0 * u1 - v1 * u0

    wsq = u1 * u1 - 4 * u0
    y1y2 = v1 * v1 * u0 - v1 * v0 * u1 + v0 * v0
    s, q = -u1, u0
    f0 = 2 * b5 + b4 * s + 2 * b3 * q + b2 * (q * s) + 2 * b1 * (q * q) + q * q * s
    big_g = f0 - 2 * y1y2

    if ring.is_zeroish(wsq):
        # u = (x - x0)^2: the class is [2(x0, y0) - 2*oo]
        x0 = -(u1 / 2)
        y0 = v1 * x0 + v0
        if ring.is_zeroish(y0):
            raise DegenerateError("double of a two-torsion point is the identity")
        xp2 = x0 * x0
        xp3 = xp2 * x0
        xp4 = xp3 * x0
        xp5 = xp4 * x0
        xp7 = xp5 * xp2
        fx = xp5 + b1 * xp4 + b2 * xp3 + b3 * xp2 + b4 * x0 + b5
        fp = 5 * xp4 + 4 * b1 * xp3 + 3 * b2 * xp2 + 2 * b3 * x0 + b4
        g1 = fp * fp - 4 * fx * (6 * xp3 + 4 * b1 * xp2 + 2 * b2 * x0 + b3)
        gt2 = (4 * xp7 - 8 * b2 * xp5 - 32 * b3 * xp4
               + 4 * (b2 * b2 - 4 * b1 * b3 - 11 * b4) * xp3
               - 8 * (3 * b1 * b4 + 7 * b5) * xp2
               - 4 * (b2 * b4 + 8 * b1 * b5) * x0 - 8 * b2 * b5)
        g2 = -(g1 * fp) + fx * gt2
        g3 = x0 * g1 - 2 * fx * (xp4 + b2 * xp2 + b4)
        ysq = y0 * y0
        x11 = g1 / (4 * ysq)
        x111 = g2 / (8 * (ysq * y0))
        x = g3 / (4 * ysq)
        return GrantCoords(x11, x12, x22, x111, x112, x122, x222, x)

    # generic branch in A = K[x]/(u)
    zero, one = ring.zero(), ring.one()
    x1 = (zero, one)
    x2 = (-u1, -one)
    y1 = (v0, v1)
    y2 = (v0 - v1 * u1, -v1)

    x1sq = _amul(x1, x1, u1, u0)
    x2sq = _amul(x2, x2, u1, u0)
    x1x2 = _amul(x1, x2, u1, u0)
    x1cb = _amul(x1sq, x1, u1, u0)
    x2cb = _amul(x2sq, x2, u1, u0)
    x1sq_x2sq = _amul(x1sq, x2sq, u1, u0)

    fpcs = [b4, 2 * b3, 3 * b2, 4 * b1, 5]
    fpx1 = _aeval(fpcs, x1, u1, u0, zero)
    fpx2 = _aeval(fpcs, x2, u1, u0, zero)

    d1f0 = _aadd((ring.coerce(b4), zero),
                 _ascale(x2, 2 * b3),
                 _ascale(_aadd(_ascale(x1x2, 2), x2sq), b2),
                 _ascale(_amul(x1, x2sq, u1, u0), 4 * b1),
                 _ascale(x1sq_x2sq, 3),
                 _ascale(_amul(x1, x2cb, u1, u0), 2))
    d2f0 = _aadd((ring.coerce(b4), zero),
                 _ascale(x1, 2 * b3),
                 _ascale(_aadd(_ascale(x1x2, 2), x1sq), b2),
                 _ascale(_amul(x2, x1sq, u1, u0), 4 * b1),
                 _ascale(x1sq_x2sq, 3),
                 _ascale(_amul(x2, x1cb, u1, u0), 2))

    t1 = _aadd(_amul(y1, d1f0, u1, u0), _aneg(_amul(y2, fpx1, u1, u0)))
    t2 = _aadd(_amul(y2, d2f0, u1, u0), _aneg(_amul(y1, fpx2, u1, u0)))
    dnum = _aadd(_ascale(_amul(x2, t1, u1, u0), 2),
                 _aneg(_ascale(_amul(x1, t2, u1, u0), 2)))

    w_el = (u1, one + one)
    xy = _aadd(_amul(x2, y1, u1, u0), _amul(x1, y2, u1, u0))
    num = _aadd(_aneg(_amul(w_el, dnum, u1, u0)), _ascale(xy, 4 * big_g))
    if not ring.is_zeroish(num[1]):
        raise ArithmeticError("coordinate numerator not symmetric")
    wsq_inv = one / wsq
    x111 = (num[0] * wsq_inv * wsq_inv) / 2
    x11 = big_g * wsq_inv
    x = (x11 * x22 - x12 * x12 + b2 * x12 - b4) / 2
    return GrantCoords(x11, x12, x22, x111, x112, x122, x222, x)


def t_coords(coords):
    """Formal-group parameters (T1, T2) of a point, from its coordinates."""
    inv = -(coords.x111)
    return coords.x11 / inv, coords.x / inv
