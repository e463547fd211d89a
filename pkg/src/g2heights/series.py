"""Truncated multivariate power series with total-degree cutoff.

Terms of total degree >= trunc are unrepresented (unknown).  Negative
exponents (a bounded pole) are allowed in variable 0 only; all other
variables stay >= 0.  Coefficients live in a pluggable ring: exact
rationals for formal expansions, capped p-adics for evaluation work.
"""

from .padic import PadicNumber
from .rat import as_rational, is_rational


class RationalRing:
    """Exact rational coefficients."""

    def from_rat(self, q):
        return as_rational(q)

    def is_zero(self, x):
        return x == 0

    def is_zeroish(self, x):
        return x == 0

    def zero(self):
        return as_rational(0)

    def one(self):
        return as_rational(1)

    def coerce(self, x):
        return as_rational(x)


QRING = RationalRing()


class PadicCoeffRing:
    """Capped-precision p-adic coefficients at a default working precision."""

    def __init__(self, p, prec):
        self.p = p
        self.prec = prec

    def from_rat(self, q):
        return PadicNumber.from_rat(q, self.p, self.prec)

    def is_zero(self, x):
        return x.is_exact_zero()

    def is_zeroish(self, x):
        return x.is_zeroish()

    def zero(self):
        return PadicNumber.exact_zero(self.p)

    def one(self):
        return PadicNumber.from_rat(1, self.p, self.prec)

    def coerce(self, x):
        if isinstance(x, PadicNumber):
            return x
        return self.from_rat(x)


class SeriesCoeffRing:
    """Ring adapter whose elements are TSeries over a base coefficient ring.

    Lets polynomial/Cantor code run with power-series entries (residue-disc
    parametrizations, exact limit computations)."""

    def __init__(self, base, nvars, trunc):
        self.base = base
        self.nvars = nvars
        self.trunc = trunc

    def coerce(self, x):
        if isinstance(x, TSeries):
            return x
        return TSeries.const(self.base, self.nvars, self.trunc, x)

    def from_rat(self, q):
        return TSeries.const(self.base, self.nvars, self.trunc, q)

    def zero(self):
        return TSeries.zero(self.base, self.nvars, self.trunc)

    def one(self):
        return TSeries.const(self.base, self.nvars, self.trunc, 1)

    def is_zero(self, x):
        return x.is_zero()

    def is_zeroish(self, x):
        return all(self.base.is_zeroish(c) for c in x.coeffs.values())

    def variable(self, i=0):
        return TSeries.variable(self.base, self.nvars, self.trunc, i)


class TSeries:
    __slots__ = ("ring", "nvars", "trunc", "coeffs")

    def __init__(self, ring, nvars, trunc, coeffs=None):
        self.ring = ring
        self.nvars = nvars
        self.trunc = trunc
        self.coeffs = {}
        if coeffs:
            for e, c in coeffs.items():
                if sum(e) < trunc and not ring.is_zero(c):
                    if any(e[i] < 0 for i in range(1, nvars)):
                        raise ValueError("negative exponent outside variable 0")
                    self.coeffs[e] = c

    # constructors -----------------------------------------------------------

    @classmethod
    def zero(cls, ring, nvars, trunc):
        return cls(ring, nvars, trunc)

    @classmethod
    def const(cls, ring, nvars, trunc, c):
        e = (0,) * nvars
        return cls(ring, nvars, trunc, {e: ring.coerce(c)})

    @classmethod
    def variable(cls, ring, nvars, trunc, i):
        e = tuple(1 if j == i else 0 for j in range(nvars))
        return cls(ring, nvars, trunc, {e: ring.one()})

    @classmethod
    def monomial(cls, ring, nvars, trunc, e, c):
        return cls(ring, nvars, trunc, {tuple(e): ring.coerce(c)})

    # basic queries -----------------------------------------------------------

    def is_zero(self):
        return not self.coeffs

    def low_degree(self):
        """Smallest represented total degree; trunc if none (all we know is 0)."""
        if not self.coeffs:
            return self.trunc
        return min(sum(e) for e in self.coeffs)

    def graded_part(self, d):
        return {e: c for e, c in self.coeffs.items() if sum(e) == d}

    def coefficient(self, e):
        e = tuple(e)
        if sum(e) >= self.trunc:
            raise ValueError("coefficient beyond truncation")
        return self.coeffs.get(e, self.ring.zero())

    def constant_term(self):
        return self.coeffs.get((0,) * self.nvars, self.ring.zero())

    def truncate(self, t):
        if t >= self.trunc:
            t = self.trunc
        return TSeries(self.ring, self.nvars, t,
                       {e: c for e, c in self.coeffs.items() if sum(e) < t})

    def map_coeffs(self, fn, ring=None):
        ring = ring or self.ring
        return TSeries(ring, self.nvars, self.trunc,
                       {e: fn(c) for e, c in self.coeffs.items()})

    # ring operations ----------------------------------------------------------

    def _scalar(self, x):
        return self.ring.coerce(x)

    def __add__(self, other):
        if not isinstance(other, TSeries):
            if is_rational(other) or isinstance(other, PadicNumber):
                other = TSeries.const(self.ring, self.nvars, self.trunc, other)
            else:
                return NotImplemented
        t = min(self.trunc, other.trunc)
        out = {}
        for e, c in self.coeffs.items():
            if sum(e) < t:
                out[e] = c
        for e, c in other.coeffs.items():
            if sum(e) >= t:
                continue
            if e in out:
                out[e] = out[e] + c
            else:
                out[e] = c
        return TSeries(self.ring, self.nvars, t, out)

    __radd__ = __add__

    def __neg__(self):
        return TSeries(self.ring, self.nvars, self.trunc,
                       {e: -c for e, c in self.coeffs.items()})

    def __sub__(self, other):
        if isinstance(other, TSeries):
            return self + (-other)
        return self + (-self._scalar(other))

    def __rsub__(self, other):
        return (-self) + other

    def scalar_mul(self, x):
        x = self._scalar(x)
        if self.ring.is_zero(x):
            return TSeries.zero(self.ring, self.nvars, self.trunc)
        return TSeries(self.ring, self.nvars, self.trunc,
                       {e: c * x for e, c in self.coeffs.items()})

    def __mul__(self, other):
        if not isinstance(other, TSeries):
            if is_rational(other) or isinstance(other, PadicNumber):
                return self.scalar_mul(other)
            return NotImplemented
        lo1, lo2 = self.low_degree(), other.low_degree()
        t = min(self.trunc + lo2, other.trunc + lo1)
        a = sorted(((sum(e), e, c) for e, c in self.coeffs.items()))
        b = sorted(((sum(e), e, c) for e, c in other.coeffs.items()))
        out = {}
        for d1, e1, c1 in a:
            lim = t - d1
            for d2, e2, c2 in b:
                if d2 >= lim:
                    break
                e = tuple(x + y for x, y in zip(e1, e2))
                p = c1 * c2
                if e in out:
                    out[e] = out[e] + p
                else:
                    out[e] = p
        return TSeries(self.ring, self.nvars, t, out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        r = TSeries.const(self.ring, self.nvars, self.trunc, 1)
        b = self
        while n:
            if n & 1:
                r = r * b
            b = b * b if n > 1 else b
            n >>= 1
        return r

    def divide(self, den):
        """Graded long division.  den's lowest graded part must be a single
        monomial (for two variables any lowest part is handled, by exact
        division of homogeneous parts); per-degree exact divisibility is
        required.  The quotient may acquire a pole in variable 0 only."""
        if den.is_zero():
            raise ZeroDivisionError("series division by zero")
        # leading graded parts that are zero to working precision are
        # treated as exactly zero, as in polynomial division
        degs = sorted({sum(e) for e in den.coeffs})
        drop = []
        for d in degs:
            part = den.graded_part(d)
            if all(self.ring.is_zeroish(c) for c in part.values()):
                drop.extend(part)
            else:
                break
        else:
            raise ZeroDivisionError("series divisor is zero to precision")
        if drop:
            dropped = set(drop)
            den = TSeries(den.ring, den.nvars, den.trunc,
                          {e: c for e, c in den.coeffs.items()
                           if e not in dropped})
        lo_d = den.low_degree()
        low = den.graded_part(lo_d)
        if len(low) != 1:
            if self.nvars == 2:
                return self._divide_general(den)
            raise ValueError("divisor's lowest graded part is not a monomial")
        (em, cm), = low.items()
        lo_n = self.low_degree()
        t = min(self.trunc - lo_d, den.trunc - 2 * lo_d + lo_n)
        rem = dict(self.coeffs)
        den_rest = [(e, c) for e, c in den.coeffs.items() if e != em]
        out = {}
        for d in range(lo_n - lo_d, t):
            # quotient part of degree d comes from remainder at degree d + lo_d
            part = [(e, c) for e, c in rem.items() if sum(e) == d + lo_d]
            qpart = {}
            for e, c in part:
                q = tuple(x - y for x, y in zip(e, em))
                if any(q[i] < 0 for i in range(1, self.nvars)):
                    raise ValueError("series not divisible: monomial %s by %s" % (e, em))
                qc = c / cm
                if not self.ring.is_zero(qc):
                    qpart[q] = qc
                del rem[e]
            if not qpart:
                continue
            for q, qc in qpart.items():
                out[q] = qc
                # subtract qc * (den - leading monomial) from the remainder
                for e2, c2 in den_rest:
                    if d + sum(e2) >= t + lo_d:
                        continue
                    e = tuple(x + y for x, y in zip(q, e2))
                    v = qc * c2
                    if e in rem:
                        rem[e] = rem[e] - v
                        if self.ring.is_zero(rem[e]):
                            del rem[e]
                    else:
                        rem[e] = -v
        return TSeries(self.ring, self.nvars, t, out)

    def _divide_general(self, den):
        """Two-variable graded division with an arbitrary lowest graded part.

        A homogeneous degree-m part sum_j c_j T1^(m-j) T2^j is identified
        with the one-variable polynomial sum_j c_j s^j; per-degree quotients
        come from exact division in that polynomial ring."""
        ring = self.ring
        lo_d = den.low_degree()
        lo_n = self.low_degree()
        t = min(self.trunc - lo_d, den.trunc - 2 * lo_d + lo_n)
        den_lo = den.graded_part(lo_d)
        dcs = [ring.zero()] * (max(e[1] for e in den_lo) + 1)
        for e, c in den_lo.items():
            dcs[e[1]] = c
        while dcs and ring.is_zeroish(dcs[-1]):
            dcs.pop()
        den_rest = [(e, c) for e, c in den.coeffs.items() if sum(e) > lo_d]
        rem = dict(self.coeffs)
        out = {}
        for d in range(lo_n - lo_d, t):
            m = d + lo_d
            part = [(e, c) for e, c in rem.items() if sum(e) == m]
            if not part:
                continue
            rcs = [ring.zero()] * (max(e[1] for e, _ in part) + 1)
            for e, c in part:
                rcs[e[1]] = c
                del rem[e]
            while rcs and ring.is_zeroish(rcs[-1]):
                rcs.pop()
            qcs = [ring.zero()] * max(0, len(rcs) - len(dcs) + 1)
            while len(rcs) >= len(dcs):
                c = rcs[-1] / dcs[-1]
                k = len(rcs) - len(dcs)
                qcs[k] = c
                for i, dc in enumerate(dcs):
                    rcs[k + i] = rcs[k + i] - c * dc
                rcs.pop()
                while rcs and ring.is_zeroish(rcs[-1]):
                    rcs.pop()
            if rcs:
                raise ValueError("series not divisible at degree %d" % m)
            for j, qc in enumerate(qcs):
                if ring.is_zeroish(qc):
                    continue
                q = (d - j, j)
                out[q] = qc
                for e2, c2 in den_rest:
                    if d + sum(e2) >= t + lo_d:
                        continue
                    e = (q[0] + e2[0], q[1] + e2[1])
                    v = qc * c2
                    if e in rem:
                        rem[e] = rem[e] - v
                    else:
                        rem[e] = -v
        return TSeries(self.ring, 2, t, out)

    def __truediv__(self, other):
        if isinstance(other, TSeries):
            return self.divide(other)
        x = self._scalar(other)
        return TSeries(self.ring, self.nvars, self.trunc,
                       {e: c / x for e, c in self.coeffs.items()})

    # calculus -----------------------------------------------------------------

    def diff(self, i):
        out = {}
        for e, c in self.coeffs.items():
            if e[i] == 0:
                continue
            e2 = tuple(x - (1 if j == i else 0) for j, x in enumerate(e))
            out[e2] = c * e[i]
        return TSeries(self.ring, self.nvars, self.trunc - 1, out)

    def integrate(self, i):
        out = {}
        for e, c in self.coeffs.items():
            if e[i] == -1:
                raise ValueError("cannot integrate dlog term in variable %d" % i)
            e2 = tuple(x + (1 if j == i else 0) for j, x in enumerate(e))
            out[e2] = c / (e[i] + 1)
        return TSeries(self.ring, self.nvars, self.trunc + 1, out)

    # composition ----------------------------------------------------------------

    def subs(self, args):
        """Substitute args[i] (series in a common variable set, each with
        low_degree >= 1) for variable i.  self must be pole-free."""
        if any(e[0] < 0 for e in self.coeffs):
            raise ValueError("cannot compose a series with a pole")
        if len(args) != self.nvars:
            raise ValueError("need one series per variable")
        ring, nv = args[0].ring, args[0].nvars
        tm = min(a.trunc for a in args)
        minlow = min(a.low_degree() for a in args)
        if minlow < 1:
            raise ValueError("substituted series must have positive low degree")
        t = min(tm, self.trunc * minlow)
        res = _subs_rec(self.coeffs, self.nvars, args, ring, nv, t)
        return res.truncate(t)

    def eval(self, vals, conv=None):
        """Evaluate at scalar values.  vals[0] may be inverted when the series
        has a pole in variable 0.  conv maps stored coefficients into the
        scalar ring (default: identity)."""
        if conv is None:
            conv = lambda c: c
        pole = min((e[0] for e in self.coeffs), default=0)
        acc = None
        if pole < 0:
            inv0 = 1 / vals[0] if not isinstance(vals[0], PadicNumber) else vals[0].inverse()
        pw = {}

        def power(i, k):
            key = (i, k)
            if key not in pw:
                if k == 0:
                    v = None
                elif k < 0:
                    base = inv0
                    v = base
                    for _ in range(-k - 1):
                        v = v * base
                else:
                    v = vals[i]
                    for _ in range(k - 1):
                        v = v * vals[i]
                pw[key] = v
            return pw[key]

        for e, c in sorted(self.coeffs.items()):
            term = conv(c)
            for i, k in enumerate(e):
                if k != 0:
                    term = term * power(i, k)
            acc = term if acc is None else acc + term
        if acc is None:
            acc = conv(self.ring.zero())
        return acc

    # display --------------------------------------------------------------------

    def to_str(self, names=None):
        if names is None:
            names = ["T%d" % (i + 1) for i in range(self.nvars)]
        terms = []
        for e in sorted(self.coeffs, key=lambda e: (sum(e), e)):
            c = self.coeffs[e]
            mono = "*".join(
                ("%s" % names[i] if k == 1 else "%s^%d" % (names[i], k))
                for i, k in enumerate(e) if k != 0)
            cs = str(c)
            if "+" in cs or "-" in cs[1:] or " " in cs:
                cs = "(%s)" % cs
            terms.append(cs + ("*" + mono if mono else ""))
        body = " + ".join(terms) if terms else "0"
        return "%s + O(deg %d)" % (body, self.trunc)

    def __str__(self):
        return self.to_str()

    def __repr__(self):
        return "TSeries(%s)" % self.to_str()


def _subs_rec(coeffs, nvars, args, ring, nv, t):
    """Horner substitution over the last variable, recursing on the rest."""
    if not coeffs:
        return TSeries.zero(ring, nv, t)
    if nvars == 1:
        kmax = max(e[0] for e in coeffs)
        res = TSeries.zero(ring, nv, t)
        for k in range(kmax, -1, -1):
            res = res * args[0]
            c = coeffs.get((k,))
            if c is not None:
                res = res + TSeries.const(ring, nv, t, c)
        return res
    groups = {}
    for e, c in coeffs.items():
        groups.setdefault(e[-1], {})[e[:-1]] = c
    kmax = max(groups)
    res = TSeries.zero(ring, nv, t)
    last = args[-1]
    for k in range(kmax, -1, -1):
        res = res * last
        if k in groups:
            res = res + _subs_rec(groups[k], nvars - 1, args[:-1], ring, nv, t)
    return res.truncate(t)


def series_exp(f):
    """exp of a series with zero constant term and no pole."""
    if any(e[0] < 0 for e in f.coeffs):
        raise ValueError("exp of a series with a pole")
    if not f.ring.is_zero(f.constant_term()):
        raise ValueError("exp needs zero constant term")
    lo = f.low_degree()
    if f.is_zero():
        return TSeries.const(f.ring, f.nvars, f.trunc, 1)
    res = TSeries.const(f.ring, f.nvars, f.trunc, 1)
    term = TSeries.const(f.ring, f.nvars, f.trunc, 1)
    k = 1
    while k * lo < f.trunc:
        term = (term * f) / k
        if term.is_zero():
            break
        res = res + term
        k += 1
    return res


def series_log1p(f):
    """log(1 + f) for a series f with zero constant term and no pole."""
    if not f.ring.is_zero(f.constant_term()):
        raise ValueError("log1p needs zero constant term")
    lo = f.low_degree()
    if f.is_zero():
        return TSeries.zero(f.ring, f.nvars, f.trunc)
    res = TSeries.zero(f.ring, f.nvars, f.trunc)
    term = None
    k = 1
    fk = f
    while k * lo < f.trunc:
        res = res + fk / (k if k % 2 else -k)
        k += 1
        fk = fk * f
        if fk.is_zero():
            break
    return res


def series_sqrt(g, root0):
    """Square root of a series with invertible constant term, by Newton
    iteration from a supplied scalar square root of the constant term."""
    r = TSeries.const(g.ring, g.nvars, g.trunc, root0)
    half = g.ring.coerce(as_rational(1) / 2)
    prec = 1
    while prec < g.trunc:
        r = (r + g.divide(r)).scalar_mul(half)
        prec *= 2
    return r.truncate(g.trunc)


def solve_hessian(targets, nvars, trunc):
    """The unique f with second partials targets[i][j], f(0)=0, grad f(0)=0.

    Uses Euler's identity degreewise: sum_ij x_i x_j H_ij restricted to
    degree d equals d(d-1) f_d.
    """
    ring = targets[0][0].ring
    s = TSeries.zero(ring, nvars, trunc)
    for i in range(nvars):
        for j in range(nvars):
            m = TSeries.variable(ring, nvars, trunc, i) * \
                TSeries.variable(ring, nvars, trunc, j)
            s = s + (m * targets[i][j]).truncate(trunc)
    st = min(trunc, s.trunc)
    out = {}
    for e, c in s.coeffs.items():
        d = sum(e)
        if d >= st:
            continue
        if d < 2:
            if not ring.is_zero(c):
                raise ValueError("inconsistent Hessian system")
            continue
        out[e] = c / (d * (d - 1))
    f = TSeries(ring, nvars, st, out)
    for i in range(nvars):
        for j in range(i, nvars):
            got = f.diff(i).diff(j)
            want = targets[i][j].truncate(got.trunc)
            if not (got - want).is_zero():
                raise ValueError("inconsistent Hessian system at (%d,%d)" % (i, j))
    return f
