"""Capped-absolute-precision p-adic numbers and the Iwasawa logarithm.

A nonzero element is p^val * unit known modulo p^(prec - val); prec is the
absolute precision, i.e. the element is determined modulo p^prec.  An exact
zero has valuation INF.  A "zero at precision" (indistinguishable from zero)
has unit 0 and valuation == prec.
"""

import math

from .rat import as_rational, is_rational, rat_unit_mod, rat_val

INF = math.inf


class PrecisionError(ArithmeticError):
    """Raised when a result cannot be certified at the working precision."""


class PadicNumber:
    __slots__ = ("p", "val", "unit", "prec")

    def __init__(self, p, val, unit, prec):
        self.p = p
        if unit == 0 and val is not INF:
            val = prec
        if val is not INF:
            rel = prec - val
            if rel <= 0:
                # nothing is known; normalize to O(p^prec)
                val, unit = prec, 0
            else:
                unit %= p ** rel
                if unit == 0:
                    val = prec
        self.val = val
        self.unit = unit
        self.prec = prec

    # construction ---------------------------------------------------------

    @classmethod
    def from_rat(cls, q, p, prec):
        q = as_rational(q)
        if q == 0:
            return cls.exact_zero(p)
        v = rat_val(q, p)
        if prec - v <= 0:
            return cls(p, prec, 0, prec)
        return cls(p, v, rat_unit_mod(q, p, prec - v), prec)

    @classmethod
    def exact_zero(cls, p):
        return cls(p, INF, 0, INF)

    @classmethod
    def zero_at(cls, p, prec):
        return cls(p, prec, 0, prec)

    # predicates -----------------------------------------------------------

    def is_exact_zero(self):
        return self.val is INF

    def is_zeroish(self):
        """True when the element cannot be distinguished from zero."""
        return self.unit == 0

    def is_unit(self):
        return self.unit != 0 and self.val == 0

    # helpers --------------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, PadicNumber):
            if other.p != self.p:
                raise ValueError("mixed primes")
            return other
        if is_rational(other):
            return ("exact", as_rational(other))
        return None

    def lift(self):
        """An integer (or rational, if val < 0) representative."""
        if self.is_exact_zero() or self.unit == 0:
            return 0
        if self.val >= 0:
            return self.unit * self.p ** self.val
        return as_rational(self.unit) / self.p ** (-self.val)

    def with_prec(self, prec):
        if prec >= self.prec:
            return self
        if self.is_exact_zero():
            return PadicNumber.zero_at(self.p, prec)
        return PadicNumber(self.p, self.val, self.unit, prec)

    # arithmetic -----------------------------------------------------------

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if isinstance(o, tuple):
            if o[1] == 0:
                return self
            o = PadicNumber.from_rat(o[1], self.p, self.prec if self.prec is not INF else 64)
        if self.is_exact_zero():
            return o
        if o.is_exact_zero():
            return self
        prec = min(self.prec, o.prec)
        v = min(self.val, o.val)
        rel = prec - v
        if rel <= 0:
            return PadicNumber.zero_at(self.p, prec)
        m = self.p ** rel
        a = (self.unit * self.p ** (self.val - v)) % m
        b = (o.unit * self.p ** (o.val - v)) % m
        s = (a + b) % m
        if s == 0:
            return PadicNumber.zero_at(self.p, prec)
        w = 0
        while s % self.p == 0:
            s //= self.p
            w += 1
        return PadicNumber(self.p, v + w, s, prec)

    __radd__ = __add__

    def __neg__(self):
        if self.is_exact_zero() or self.unit == 0:
            return self
        return PadicNumber(self.p, self.val, -self.unit % self.p ** (self.prec - self.val), self.prec)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if isinstance(o, tuple):
            return self + (-o[1])
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if isinstance(o, tuple):
            q = o[1]
            if q == 0:
                return PadicNumber.exact_zero(self.p)
            if self.is_exact_zero():
                return self
            v2 = rat_val(q, self.p)
            prec = self.prec + v2
            v = self.val + v2
            rel = prec - v
            if self.unit == 0:
                return PadicNumber.zero_at(self.p, prec)
            u = (self.unit * rat_unit_mod(q, self.p, rel)) % self.p ** rel
            return PadicNumber(self.p, v, u, prec)
        if self.is_exact_zero() or o.is_exact_zero():
            return PadicNumber.exact_zero(self.p)
        prec = min(self.prec + o.val, o.prec + self.val)
        v = self.val + o.val
        rel = prec - v
        if rel <= 0 or self.unit == 0 or o.unit == 0:
            return PadicNumber.zero_at(self.p, prec)
        u = (self.unit * o.unit) % self.p ** rel
        return PadicNumber(self.p, v, u, prec)

    __rmul__ = __mul__

    def inverse(self):
        if self.is_exact_zero():
            raise ZeroDivisionError("p-adic division by exact zero")
        if self.unit == 0:
            raise PrecisionError("cannot invert O(p^%s)" % self.prec)
        rel = self.prec - self.val
        u = pow(self.unit, -1, self.p ** rel)
        return PadicNumber(self.p, -self.val, u, self.prec - 2 * self.val)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if isinstance(o, tuple):
            q = o[1]
            if q == 0:
                raise ZeroDivisionError("p-adic division by zero")
            return self * (1 / as_rational(q))
        return self * o.inverse()

    def __rtruediv__(self, other):
        inv = self.inverse()
        return inv * other

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        if self.is_exact_zero():
            return PadicNumber.from_rat(1, self.p, 64) if n == 0 else self
        r = PadicNumber.from_rat(1, self.p, self.prec)
        b = self
        while n:
            if n & 1:
                r = r * b
            b = b * b
            n >>= 1
        return r

    # comparison / display ---------------------------------------------------

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if isinstance(o, tuple):
            o = PadicNumber.from_rat(o[1], self.p, self.prec if self.prec is not INF else 64)
        d = self - o
        return d.is_exact_zero() or d.unit == 0

    __hash__ = None

    def digits(self):
        """List of (digit, power) pairs with nonzero digit, lowest power first."""
        if self.is_exact_zero() or self.unit == 0:
            return []
        out = []
        n, k = self.unit, self.val
        while n:
            n, r = divmod(n, self.p)
            if r:
                out.append((r, k))
            k += 1
        return out

    def __str__(self):
        if self.is_exact_zero():
            return "0"
        terms = []
        for d, k in self.digits():
            if k == 0:
                terms.append(str(d))
            elif k == 1:
                terms.append("%d*%d" % (d, self.p))
            else:
                terms.append("%d*%d^%d" % (d, self.p, k))
        tail = "O(%d^%d)" % (self.p, self.prec) if self.prec is not INF else ""
        if not terms:
            return tail or "0"
        s = " + ".join(terms)
        return s + (" + " + tail if tail else "")

    def __repr__(self):
        return "PadicNumber(%s)" % self


def teichmuller_pad(p, target):
    """Digits of internal padding needed for log/exp style series at target digits."""
    pad = 2
    k = p
    while k < target + pad:
        k *= p
        pad += 1
    return pad


def iwasawa_log(x):
    """Iwasawa branch of log_p: log_p(p) = 0, so log_p(x) = log(unit part).

    The result has absolute precision prec - val(x) (the relative precision of x).
    """
    if not isinstance(x, PadicNumber):
        raise TypeError("iwasawa_log expects a PadicNumber")
    if x.is_exact_zero() or x.unit == 0:
        raise ZeroDivisionError("log of zero")
    p = x.p
    rel = x.prec - x.val
    e = 2 if p == 2 else p - 1
    pad = teichmuller_pad(p, rel)
    work = rel + pad
    # pad the working precision so divisions by k do not eat into the
    # honest rel digits; the final with_prec(rel) keeps only what is certified
    u = PadicNumber(p, 0, x.unit % p ** rel, work)
    # u^e = 1 + z with val(z) >= 1 (>= 3 for p = 2)
    ue = u ** e
    z = ue - 1
    if z.is_exact_zero() or z.unit == 0:
        res = PadicNumber.zero_at(p, rel)
        return res
    total = PadicNumber.zero_at(p, work)
    zk = z.with_prec(work)
    k = 1
    while not zk.is_exact_zero() and zk.unit != 0:
        total = total + zk * (as_rational((-1) ** (k + 1)) / k)
        k += 1
        zk = (zk * z).with_prec(work)
    return (total * (as_rational(1) / e)).with_prec(rel)


def iwasawa_log_rational(q, p, prec):
    """log_p of a nonzero rational, to absolute precision prec."""
    v = rat_val(as_rational(q), p)
    x = PadicNumber.from_rat(q, p, prec + max(v, 0) + 1)
    return iwasawa_log(x).with_prec(prec)


def padic_sqrt(x):
    """Square root of a p-adic with even valuation and square unit (p odd)."""
    if x.p == 2:
        raise NotImplementedError("sqrt at p = 2 not needed")
    if x.is_exact_zero():
        return x
    if x.unit == 0:
        raise PrecisionError("sqrt of O(p^%s)" % x.prec)
    if x.val % 2:
        raise ValueError("sqrt of odd-valuation element")
    p = x.p
    rel = x.prec - x.val
    r = None
    if p % 4 == 3:
        c = pow(x.unit % p, (p + 1) // 4, p)
        if c * c % p == x.unit % p:
            r = c
    if r is None:
        a = x.unit % p
        for c in range(1, p):
            if c * c % p == a:
                r = c
                break
    if r is None:
        raise ValueError("unit is not a square mod p")
    m = p
    while m < p ** rel:
        m = m * m if m * m <= p ** rel else p ** rel
        # Newton: r <- (r + a/r)/2 mod m
        r = (r + x.unit * pow(r, -1, m)) * pow(2, -1, m) % m
    return PadicNumber(p, x.val // 2, r % p ** rel, x.val // 2 + rel)
