"""Odd-degree genus-2 curves, Mumford-represented Jacobian points, Cantor
arithmetic over a pluggable coefficient field, finite fields, and point
counting."""

from .rat import QQ, as_rational, is_rational
from .series import QRING


class DegenerateError(ArithmeticError):
    """A group-law or coordinate computation hit a non-generic configuration."""


# ---------------------------------------------------------------------------
# finite fields

class FpElt:
    __slots__ = ("n", "p")

    def __init__(self, n, p):
        self.n = n % p
        self.p = p

    def _c(self, other):
        if isinstance(other, FpElt):
            return other
        if isinstance(other, int):
            return FpElt(other, self.p)
        if is_rational(other):
            q = as_rational(other)
            return FpElt(int(q.numerator) * pow(int(q.denominator), -1, self.p), self.p)
        return None

    def __add__(self, o):
        o = self._c(o)
        return NotImplemented if o is None else FpElt(self.n + o.n, self.p)

    __radd__ = __add__

    def __neg__(self):
        return FpElt(-self.n, self.p)

    def __sub__(self, o):
        o = self._c(o)
        return NotImplemented if o is None else FpElt(self.n - o.n, self.p)

    def __rsub__(self, o):
        return (-self) + o

    def __mul__(self, o):
        o = self._c(o)
        return NotImplemented if o is None else FpElt(self.n * o.n, self.p)

    __rmul__ = __mul__

    def __truediv__(self, o):
        o = self._c(o)
        if o is None:
            return NotImplemented
        return FpElt(self.n * pow(o.n, -1, self.p), self.p)

    def __rtruediv__(self, o):
        return self._c(o) / self

    def __eq__(self, o):
        o = self._c(o)
        return NotImplemented if o is None else self.n == o.n

    def __hash__(self):
        return hash((self.n, self.p))

    def __repr__(self):
        return "%d" % self.n


class FpRing:
    def __init__(self, p):
        self.p = p

    def coerce(self, x):
        if isinstance(x, FpElt):
            return x
        if isinstance(x, int):
            return FpElt(x, self.p)
        q = as_rational(x)
        return FpElt(int(q.numerator) * pow(int(q.denominator), -1, self.p), self.p)

    def zero(self):
        return FpElt(0, self.p)

    def one(self):
        return FpElt(1, self.p)

    def is_zero(self, x):
        return x.n == 0

    is_zeroish = is_zero

    def from_rat(self, q):
        return self.coerce(q)


class Fp2Elt:
    """a + b*s with s^2 = ns, a quadratic non-residue mod p."""

    __slots__ = ("a", "b", "p", "ns")

    def __init__(self, a, b, p, ns):
        self.a = a % p
        self.b = b % p
        self.p = p
        self.ns = ns

    def _c(self, o):
        if isinstance(o, Fp2Elt):
            return o
        if isinstance(o, int):
            return Fp2Elt(o, 0, self.p, self.ns)
        if isinstance(o, FpElt):
            return Fp2Elt(o.n, 0, self.p, self.ns)
        if is_rational(o):
            q = as_rational(o)
            return Fp2Elt(int(q.numerator) * pow(int(q.denominator), -1, self.p), 0, self.p, self.ns)
        return None

    def __add__(self, o):
        o = self._c(o)
        return NotImplemented if o is None else Fp2Elt(self.a + o.a, self.b + o.b, self.p, self.ns)

    __radd__ = __add__

    def __neg__(self):
        return Fp2Elt(-self.a, -self.b, self.p, self.ns)

    def __sub__(self, o):
        o = self._c(o)
        return NotImplemented if o is None else Fp2Elt(self.a - o.a, self.b - o.b, self.p, self.ns)

    def __rsub__(self, o):
        return (-self) + o

    def __mul__(self, o):
        o = self._c(o)
        if o is None:
            return NotImplemented
        return Fp2Elt(self.a * o.a + self.ns * self.b * o.b,
                      self.a * o.b + self.b * o.a, self.p, self.ns)

    __rmul__ = __mul__

    def inverse(self):
        d = (self.a * self.a - self.ns * self.b * self.b) % self.p
        di = pow(d, -1, self.p)
        return Fp2Elt(self.a * di, -self.b * di, self.p, self.ns)

    def __truediv__(self, o):
        o = self._c(o)
        return NotImplemented if o is None else self * o.inverse()

    def __rtruediv__(self, o):
        return self._c(o) * self.inverse()

    def __eq__(self, o):
        o = self._c(o)
        return NotImplemented if o is None else (self.a == o.a and self.b == o.b)

    def __hash__(self):
        return hash((self.a, self.b, self.p))

    def __pow__(self, n):
        r = Fp2Elt(1, 0, self.p, self.ns)
        b = self
        while n:
            if n & 1:
                r = r * b
            b = b * b
            n >>= 1
        return r

    def __repr__(self):
        return "(%d+%d*s)" % (self.a, self.b)


class Fp2Ring:
    def __init__(self, p):
        self.p = p
        self.ns = next(n for n in range(2, p) if pow(n, (p - 1) // 2, p) == p - 1)

    def coerce(self, x):
        if isinstance(x, Fp2Elt):
            return x
        if isinstance(x, int):
            return Fp2Elt(x, 0, self.p, self.ns)
        q = as_rational(x)
        return Fp2Elt(int(q.numerator) * pow(int(q.denominator), -1, self.p), 0, self.p, self.ns)

    def zero(self):
        return Fp2Elt(0, 0, self.p, self.ns)

    def one(self):
        return Fp2Elt(1, 0, self.p, self.ns)

    def is_zero(self, x):
        return x.a == 0 and x.b == 0

    is_zeroish = is_zero

    def from_rat(self, q):
        return self.coerce(q)

    def elements(self):
        for a in range(self.p):
            for b in range(self.p):
                yield Fp2Elt(a, b, self.p, self.ns)


# ---------------------------------------------------------------------------
# polynomials over a pluggable field

class Poly:
    __slots__ = ("ring", "cs")

    def __init__(self, ring, cs):
        self.ring = ring
        cs = list(cs)
        while cs and ring.is_zeroish(cs[-1]):
            cs.pop()
        self.cs = cs

    @classmethod
    def from_list(cls, ring, vals):
        return cls(ring, [ring.coerce(v) for v in vals])

    @classmethod
    def zero(cls, ring):
        return cls(ring, [])

    @classmethod
    def const(cls, ring, c):
        return cls(ring, [ring.coerce(c)])

    @classmethod
    def x(cls, ring):
        return cls(ring, [ring.zero(), ring.one()])

    def degree(self):
        return len(self.cs) - 1

    def is_zero(self):
        return not self.cs

    def is_one(self):
        return len(self.cs) == 1 and self.ring.is_zeroish(self.cs[0] - self.ring.one())

    def lc(self):
        return self.cs[-1]

    def coeff(self, i):
        return self.cs[i] if i < len(self.cs) else self.ring.zero()

    def __add__(self, o):
        if not isinstance(o, Poly):
            o = Poly.const(self.ring, o)
        n = max(len(self.cs), len(o.cs))
        return Poly(self.ring, [self.coeff(i) + o.coeff(i) for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.ring, [-c for c in self.cs])

    def __sub__(self, o):
        if not isinstance(o, Poly):
            o = Poly.const(self.ring, o)
        return self + (-o)

    def __rsub__(self, o):
        return (-self) + o

    def __mul__(self, o):
        if not isinstance(o, Poly):
            return Poly(self.ring, [c * o for c in self.cs])
        if self.is_zero() or o.is_zero():
            return Poly.zero(self.ring)
        out = [self.ring.zero()] * (len(self.cs) + len(o.cs) - 1)
        for i, a in enumerate(self.cs):
            for j, b in enumerate(o.cs):
                out[i + j] = out[i + j] + a * b
        return Poly(self.ring, out)

    __rmul__ = __mul__

    def __divmod__(self, o):
        if o.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        r = list(self.cs)
        q = [self.ring.zero()] * max(0, len(r) - len(o.cs) + 1)
        dlc = o.lc()
        while len(r) >= len(o.cs):
            c = r[-1] / dlc
            k = len(r) - len(o.cs)
            q[k] = c
            for i, b in enumerate(o.cs):
                r[k + i] = r[k + i] - c * b
            while r and self.ring.is_zeroish(r[-1]):
                r.pop()
        return Poly(self.ring, q), Poly(self.ring, r)

    def __mod__(self, o):
        return divmod(self, o)[1]

    def __floordiv__(self, o):
        return divmod(self, o)[0]

    def exact_div(self, o):
        q, r = divmod(self, o)
        if not r.is_zero():
            raise DegenerateError("inexact polynomial division")
        return q

    def monic(self):
        if self.is_zero():
            return self
        lc = self.lc()
        return Poly(self.ring, [c / lc for c in self.cs])

    def deriv(self):
        return Poly(self.ring, [self.cs[i] * i for i in range(1, len(self.cs))])

    def eval(self, x):
        acc = self.ring.zero()
        for c in reversed(self.cs):
            acc = acc * x + c
        return acc

    def map(self, fn, ring):
        return Poly(ring, [fn(c) for c in self.cs])

    def __eq__(self, o):
        if not isinstance(o, Poly):
            return NotImplemented
        return (self - o).is_zero()

    __hash__ = None

    def __repr__(self):
        return "Poly(%s)" % self.cs


def poly_xgcd(a, b):
    """Extended gcd: (g, s, t) with s*a + t*b = g, g monic (or zero)."""
    ring = a.ring
    r0, r1 = a, b
    s0, s1 = Poly.const(ring, 1), Poly.zero(ring)
    t0, t1 = Poly.zero(ring), Poly.const(ring, 1)
    while not r1.is_zero():
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0.is_zero():
        return r0, s0, t0
    lc = r0.lc()
    return r0.monic(), s0 * (ring.one() / lc), t0 * (ring.one() / lc)


# ---------------------------------------------------------------------------
# the curve

def _sylvester_det(rows, n):
    """Determinant of an n x n exact-rational matrix via fraction-free elimination."""
    m = [row[:] for row in rows]
    det = as_rational(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col] != 0), None)
        if piv is None:
            return as_rational(0)
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            det = -det
        det = det * m[col][col]
        inv = 1 / as_rational(m[col][col])
        for r in range(col + 1, n):
            fac = m[r][col] * inv
            if fac == 0:
                continue
            for c in range(col, n):
                m[r][c] = m[r][c] - fac * m[col][c]
    return det


class Genus2Curve:
    """y^2 = x^5 + b1*x^4 + b2*x^3 + b3*x^2 + b4*x + b5 with integral b_i."""

    def __init__(self, b):
        b = [int(x) for x in b]
        if len(b) != 5:
            raise ValueError("need five coefficients b1..b5")
        self.b = b
        self.b1, self.b2, self.b3, self.b4, self.b5 = b
        if self.discriminant() == 0:
            raise ValueError("singular curve: discriminant is zero")

    def f_poly(self, ring=QRING):
        return Poly.from_list(ring, [self.b5, self.b4, self.b3, self.b2, self.b1, 1])

    def discriminant(self):
        """disc(f) = (-1)^(5*4/2) Res(f, f') / lc(f)."""
        if not hasattr(self, "_disc"):
            f = [as_rational(c) for c in [self.b5, self.b4, self.b3, self.b2, self.b1, 1]]
            fp = [f[i] * i for i in range(1, 6)]
            n, m = 5, 4
            size = n + m
            rows = []
            for i in range(m):
                rows.append([as_rational(0)] * i + list(reversed(f)) + [as_rational(0)] * (m - 1 - i))
            for i in range(n):
                rows.append([as_rational(0)] * i + list(reversed(fp)) + [as_rational(0)] * (n - 1 - i))
            self._disc = _sylvester_det(rows, size)
        return self._disc

    def has_good_reduction(self, q):
        from .rat import rat_val
        if q == 2:
            return False
        return rat_val(self.discriminant(), q) == 0

    def is_on_curve(self, x, y):
        return y * y == self.f_poly().eval(x)

    def __repr__(self):
        return "Genus2Curve(b=%s)" % (self.b,)


class CurvePoint:
    """Affine point (x, y) or the point at infinity."""

    __slots__ = ("x", "y", "infinite")

    def __init__(self, x=None, y=None, infinite=False):
        self.infinite = infinite
        self.x = x
        self.y = y

    @classmethod
    def infinity(cls):
        return cls(infinite=True)

    def neg(self):
        if self.infinite:
            return self
        return CurvePoint(self.x, -self.y)

    def __repr__(self):
        return "oo" if self.infinite else "(%s, %s)" % (self.x, self.y)


# ---------------------------------------------------------------------------
# Jacobian points

class JacPoint:
    """Mumford pair (u, v): u monic, deg u <= 2, v^2 = f mod u, deg v < deg u."""

    __slots__ = ("u", "v")

    def __init__(self, u, v):
        self.u = u
        self.v = v

    @classmethod
    def identity(cls, ring=QRING):
        return cls(Poly.const(ring, 1), Poly.zero(ring))

    @classmethod
    def from_mumford(cls, ring, u_coeffs, v_coeffs):
        u = Poly.from_list(ring, u_coeffs)
        v = Poly.from_list(ring, v_coeffs)
        return cls(u, v)

    def ring(self):
        return self.u.ring

    def is_identity(self):
        return self.u.degree() == 0

    def on_theta(self):
        return 0 < self.u.degree() <= 1

    def neg(self):
        return JacPoint(self.u, -self.v)

    def validate(self, curve):
        f = curve.f_poly(self.ring())
        r = (self.v * self.v - f) % self.u
        if not r.is_zero():
            raise ValueError("invalid Mumford pair: v^2 != f mod u")
        return True

    def map(self, fn, ring):
        return JacPoint(self.u.map(fn, ring), self.v.map(fn, ring))

    def key(self):
        return (tuple(repr(c) for c in self.u.cs), tuple(repr(c) for c in self.v.cs))

    def __repr__(self):
        return "JacPoint(u=%s, v=%s)" % (self.u.cs, self.v.cs)


def iota(P, ring=QRING):
    """The class [P - oo] for a curve point P."""
    if P.infinite:
        return JacPoint.identity(ring)
    u = Poly.from_list(ring, [-P.x, 1])
    v = Poly.from_list(ring, [P.y])
    return JacPoint(u, v)


def mumford_from_points(P1, P2, curve, ring=QRING):
    """The class [P1 + P2 - 2*oo] for affine P1, P2 (tangent rule when equal)."""
    x1, y1 = ring.coerce(P1.x), ring.coerce(P1.y)
    x2, y2 = ring.coerce(P2.x), ring.coerce(P2.y)
    if ring.is_zeroish(x1 - x2):
        if ring.is_zeroish(y1 + y2):
            raise DegenerateError("P2 = -P1: the class cancels to the identity")
        # P1 = P2: v is the tangent line y + f'(x)(x - x1)/(2y)
        f = curve.f_poly(ring)
        slope = f.deriv().eval(x1) / (y1 + y1)
        u = Poly(ring, [x1 * x1, -(x1 + x1), ring.one()])
        v = Poly(ring, [y1 - slope * x1, slope])
        return JacPoint(u, v)
    u = Poly(ring, [x1 * x2, -(x1 + x2), ring.one()])
    slope = (y2 - y1) / (x2 - x1)
    v = Poly(ring, [y1 - slope * x1, slope])
    return JacPoint(u, v)


def cantor_add(P, Q, curve):
    """Cantor composition + reduction for genus 2, deg f = 5."""
    ring = P.ring()
    f = curve.f_poly(ring)
    u1, v1 = P.u, P.v
    u2, v2 = Q.u, Q.v
    d1, e1, e2 = poly_xgcd(u1, u2)
    if d1.degree() == 0:
        d = d1
        h1, h2, h3 = e1, e2, Poly.zero(ring)
    else:
        d, c1, c2 = poly_xgcd(d1, v1 + v2)
        h1, h2, h3 = c1 * e1, c1 * e2, c2
    u = (u1 * u2).exact_div(d * d)
    mixed = h1 * u1 * v2 + h2 * u2 * v1 + h3 * (v1 * v2 + f)
    v = mixed.exact_div(d) % u
    # reduction to deg u <= 2
    while u.degree() > 2:
        u_next = (f - v * v).exact_div(u)
        u = u_next.monic()
        v = (-v) % u
    return JacPoint(u, v)


def cantor_mul(P, n, curve):
    if n < 0:
        return cantor_mul(P.neg(), -n, curve)
    R = JacPoint.identity(P.ring())
    B = P
    while n:
        if n & 1:
            R = cantor_add(R, B, curve)
        if n > 1:
            B = cantor_add(B, B, curve)
        n >>= 1
    return R


def cantor_sub(P, Q, curve):
    return cantor_add(P, Q.neg(), curve)


# ---------------------------------------------------------------------------
# point counting

def count_curve_points(curve, p):
    """#C(F_p) including the single point at infinity."""
    f = [curve.b5 % p, curve.b4 % p, curve.b3 % p, curve.b2 % p, curve.b1 % p, 1]
    n = 1
    for x in range(p):
        z = 0
        for c in reversed(f):
            z = (z * x + c) % p
        if z == 0:
            n += 1
        elif pow(z, (p - 1) // 2, p) == 1:
            n += 2
    return n


def count_curve_points_quadratic(curve, p):
    """#C(F_{p^2})."""
    ring = Fp2Ring(p)
    f = curve.f_poly(ring)
    n = 1
    half = (p * p - 1) // 2
    for x in ring.elements():
        z = f.eval(x)
        if ring.is_zero(z):
            n += 1
        elif z ** half == ring.one():
            n += 2
    return n


def jacobian_counts(curve, p, counts=None):
    """(a1, a2, #J(F_p)) with char poly t^4 + a1 t^3 + a2 t^2 + p a1 t + p^2."""
    if not curve.has_good_reduction(p):
        raise ValueError("bad reduction at %d" % p)
    if counts is None:
        n1 = count_curve_points(curve, p)
        n2 = count_curve_points_quadratic(curve, p)
    else:
        n1, n2 = counts
    s1 = (p + 1) - n1
    s2 = (p * p + 1) - n2
    a1 = -s1
    a2 = (s1 * s1 - s2) // 2
    nj = 1 + a1 + a2 + p * a1 + p * p
    return a1, a2, nj


def brute_jacobian_classes(curve, p):
    """Directly enumerate Mumford pairs over F_p (oracle for small p)."""
    ring = FpRing(p)
    f = curve.f_poly(ring)
    n = 1  # identity
    for a in range(p):
        z = f.eval(ring.coerce(a))
        for b in range(p):
            if ring.coerce(b * b) == z:
                n += 1
    for u1 in range(p):
        for u0 in range(p):
            u = Poly.from_list(ring, [u0, u1, 1])
            for w1 in range(p):
                for w0 in range(p):
                    v = Poly.from_list(ring, [w0, w1])
                    if ((v * v - f) % u).is_zero():
                        n += 1
    return n


def _factorize(n):
    from sympy import factorint
    return factorint(n)


def point_order(P, group_order, curve):
    """Order of P in a finite Jacobian, given a multiple of it."""
    m = group_order
    for q, e in _factorize(group_order).items():
        for _ in range(e):
            if cantor_mul(P, m // q, curve).is_identity():
                m //= q
            else:
                break
    return m


def reduce_point(P, curve, p):
    """Reduce a Jacobian point with p-integral Mumford coefficients mod p."""
    ring = FpRing(p)
    return P.map(ring.coerce, ring)
