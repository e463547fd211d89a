"""Quadratic Chabauty for bihyperelliptic curves of genus 4.

A curve X: y^2 = f5 x^10 + f4 x^8 + f3 x^6 + f2 x^4 + f1 x^2 + f0 covers two
genus-2 quintic curves C1 and C2.  When both Jacobians have rank 2 and the
formal logarithms are injective on the rational points, the global height is
a quadratic form in the two logarithms on each side, and

    rho(z) = lambda_p(2 iota phi1(z)) - lambda_p(2 iota phi2(z))
             - 6 chi_p(x(z)) - Q1(2 iota phi1(z)) + Q2(2 iota phi2(z))

extends to a locally analytic function on X(Q_p) whose values at rational
points lie in an explicit finite set.  All local heights here use the naive
sigma function (zero shift matrix) on both sides.

This module computes the quadratic-form coefficients from generators, the
power-series expansion of the extended rho on residue discs (including the
disc through the branch locus of the second covering, where the Mumford
coordinates acquire poles), and Strassman-style root bounds.  It also
contains the exhaustive partition search backing the uniform multiplier
bound used to keep auxiliary multiples off the theta divisor.
"""

from .coords import grant_coords, t_coords
from .curve import (CurvePoint, DegenerateError, FpRing, Genus2Curve,
                    JacPoint, Poly, cantor_add, mumford_from_points,
                    point_order, reduce_point)
from .divpoly import DivisionValues
from .formal import FormalGroup
from .heights import (LogMultiple, global_height, in_reduction_kernel,
                      jacobian_group_order, neron_function_at_p,
                      neron_function_away, reduction_order_exact)
from .integrate import jacobian_log
from .padic import PadicNumber, PrecisionError, iwasawa_log, padic_sqrt
from .rat import QQ, as_rational, rat_val
from .series import (QRING, PadicCoeffRing, RationalRing, SeriesCoeffRing,
                     TSeries, series_log1p, series_sqrt)
from .sigma import log_sigma_unit

ZERO_SHIFT = [[0, 0], [0, 0]]


class BihyperCurve:
    """y^2 = f5 x^10 + f4 x^8 + f3 x^6 + f2 x^4 + f1 x^2 + f0 with its two
    genus-2 quotients and covering maps."""

    def __init__(self, f):
        if len(f) != 6:
            raise ValueError("need coefficients [f0, ..., f5]")
        f0, f1, f2, f3, f4, f5 = [as_rational(c) for c in f]
        if f0 == 0 or f5 == 0:
            raise ValueError("f0 and f5 must be nonzero")
        self.f = (f0, f1, f2, f3, f4, f5)
        self.c1 = Genus2Curve([f4, f3 * f5, f2 * f5 ** 2, f1 * f5 ** 3,
                               f0 * f5 ** 4])
        self.c2 = Genus2Curve([f1, f0 * f2, f0 ** 2 * f3, f0 ** 3 * f4,
                               f0 ** 4 * f5])

    def eval_f(self, x):
        f0, f1, f2, f3, f4, f5 = self.f
        x2 = x * x
        return ((((f5 * x2 + f4) * x2 + f3) * x2 + f2) * x2 + f1) * x2 + f0

    def phi1(self, x, y):
        f5 = self.f[5]
        return (f5 * x * x, f5 * f5 * y)

    def phi2(self, x, y):
        f0 = self.f[0]
        xi = 1 / x
        return (f0 * xi * xi, f0 * f0 * y * xi ** 5)

    def is_on_curve(self, x, y):
        return self.eval_f(as_rational(x)) == as_rational(y) ** 2

    def __repr__(self):
        return "BihyperCurve(f=%s)" % (list(self.f),)


def nu_v(P, curve, p, q, prec=None, mu=None, **kw):
    """nu_q(P) = lambda_q(2 iota(P)) + 2 chi_q(2 y(P)) for an affine point P
    of a genus-2 curve with y(P) != 0.

    For q != p closed forms are used when available: 8 chi_q(x(P)) for
    non-integral P, and -2 chi_q(max{|f'(x)|, |2y|}) for integral P when the
    correction mu_q is known to vanish (good reduction) or is supplied.
    Otherwise the definition is evaluated through the local Neron function.
    """
    x, y = as_rational(P.x), as_rational(P.y)
    if y == 0:
        raise ValueError("nu is undefined at Weierstrass points")
    if q == p:
        u = mumford_from_points(P, P, curve)
        lam = neron_function_at_p(u, curve, p, prec, **kw)
        return lam + iwasawa_log(PadicNumber.from_rat(
            2 * y, p, lam.prec + 2)) * 2
    if rat_val(x, q) < 0:
        return LogMultiple(-8 * rat_val(x, q), q)
    if rat_val(y, q) < 0:
        raise ValueError("point with integral x but non-integral y")
    fprime = curve.f_poly().deriv().eval(x)
    d = min(rat_val(fprime, q) if fprime != 0 else 10 ** 9,
            rat_val(2 * y, q))
    if curve.has_good_reduction(q):
        return LogMultiple(2 * d, q)
    if mu is not None:
        # lambda_q picks up mu * chi_q(q) = -mu * log_p(q) on top of the
        # naive term
        return LogMultiple(2 * d - as_rational(mu), q)
    u = mumford_from_points(P, P, curve)
    return neron_function_away(u, curve, p, q) + LogMultiple(
        -2 * rat_val(2 * y, q), q)


def w_term(X, z, p, q):
    """The local contribution -nu_q(phi1(z)) + nu_q(phi2(z))
    + 4 chi_q(f5 x(z)^4 / f0) of a rational point z at a prime q != p."""
    x, y = as_rational(z.x), as_rational(z.y)
    p1 = CurvePoint(*X.phi1(x, y))
    p2 = CurvePoint(*X.phi2(x, y))
    r = X.f[5] / X.f[0] * x ** 4
    chi = LogMultiple(-4 * rat_val(r, q), q)
    return nu_v(p1, X.c1, p, q) * (-1) + nu_v(p2, X.c2, p, q) + chi


def _solve3(rows, rhs):
    """Gaussian elimination for a 3x3 p-adic system."""
    n = 3
    m = [list(rows[i]) + [rhs[i]] for i in range(n)]
    for col in range(n):
        piv = max(range(col, n),
                  key=lambda r: -m[r][col].val
                  if not m[r][col].is_zeroish() else -(10 ** 9))
        if m[piv][col].is_zeroish():
            raise ArithmeticError("singular system: the formal logarithms "
                                  "of the generators are dependent")
        m[col], m[piv] = m[piv], m[col]
        inv = m[col][col].inverse()
        m[col] = [c * inv for c in m[col]]
        for r in range(n):
            if r != col:
                f = m[r][col]
                m[r] = [a - f * b for a, b in zip(m[r], m[col])]
    return [m[i][n] for i in range(n)]


def apply_form(alphas, l1, l2):
    return l1 * l1 * alphas[0] + l1 * l2 * alphas[1] + l2 * l2 * alphas[2]


def solve_height_form(u1, u2, curve, p, prec, fg=None, order_hint=None):
    """Coefficients (a1, a2, a3) with h_p = a1 L1^2 + a2 L1 L2 + a3 L2^2 on
    the span of u1 and u2, for the naive-sigma height.

    Returns (alphas, residual) where residual = h_p(u1 - u2) - form(u1 - u2)
    is an independent consistency check and should vanish to precision.
    """
    if fg is None:
        fg = FormalGroup(curve, prec + 5)
    pts = [u1, u2, cantor_add(u1, u2, curve)]
    rows, rhs = [], []
    for u in pts:
        l1, l2 = jacobian_log(u, curve, p, prec, fg=fg, order_hint=order_hint)
        rows.append([l1 * l1, l1 * l2, l2 * l2])
        rhs.append(global_height(u, curve, p, prec, cmat=ZERO_SHIFT, fg=fg,
                                 order_hint=order_hint))
    alphas = _solve3(rows, rhs)
    um = cantor_add(u1, u2.neg(), curve)
    l1, l2 = jacobian_log(um, curve, p, prec, fg=fg, order_hint=order_hint)
    h = global_height(um, curve, p, prec, cmat=ZERO_SHIFT, fg=fg,
                      order_hint=order_hint)
    residual = h - apply_form(alphas, l1, l2)
    return alphas, residual


def rho_value(X, z, p, prec, alphas1, alphas2, fg1=None, fg2=None,
              hint1=None, hint2=None):
    """rho at a rational point z of X with x(z) != 0 and y(z) != 0."""
    x, y = as_rational(z.x), as_rational(z.y)
    if x == 0 or y == 0:
        raise ValueError("z is outside the domain of rho")
    out = PadicNumber.zero_at(p, prec)
    for sgn, (cx, cy), curve, fg, alphas, hint in (
            (1, X.phi1(x, y), X.c1, fg1, alphas1, hint1),
            (-1, X.phi2(x, y), X.c2, fg2, alphas2, hint2)):
        P = CurvePoint(cx, cy)
        u = mumford_from_points(P, P, curve)
        lam = neron_function_at_p(u, curve, p, prec, cmat=ZERO_SHIFT, fg=fg,
                                  order_hint=hint)
        l1, l2 = jacobian_log(u, curve, p, prec, fg=fg, order_hint=hint)
        out = out + (lam - apply_form(alphas, l1, l2)) * sgn
    return out - iwasawa_log(PadicNumber.from_rat(x, p, prec + 2)) * 6


# ---------------------------------------------------------------------------
# residue-disc expansions

class LogSeries:
    """s(t) + r * log_p(t): a truncated power series plus a log term."""

    __slots__ = ("series", "logt")

    def __init__(self, series, logt=0):
        self.series = series
        self.logt = as_rational(logt)

    def __add__(self, other):
        if isinstance(other, LogSeries):
            return LogSeries(self.series + other.series,
                             self.logt + other.logt)
        return LogSeries(self.series + other, self.logt)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (other * -1)

    def __mul__(self, c):
        return LogSeries(self.series.scalar_mul(c), self.logt * as_rational(c))

    __rmul__ = __mul__


def _drop_zeroish_constant(w):
    """Remove a constant term that is zero to working precision."""
    c0 = w.constant_term()
    if not (c0.is_exact_zero() or c0.is_zeroish()):
        raise ArithmeticError("series has a genuinely nonzero constant term")
    return TSeries(w.ring, 1, w.trunc,
                   {e: c for e, c in w.coeffs.items() if e[0] != 0})


def _series_iwlog(S):
    """log_p of a nonzero one-variable series, as a LogSeries.

    S = c t^k (1 + w(t)) gives k log_p(t) + log_p(c) + log1p(w)."""
    k = S.low_degree()
    c = S.coefficient((k,))
    if c.is_zeroish():
        raise ArithmeticError("indeterminate leading series coefficient")
    mono = TSeries.monomial(S.ring, 1, S.trunc, (k,), c)
    w = _drop_zeroish_constant(S.divide(mono) - 1)
    return LogSeries(series_log1p(w) + iwasawa_log(c), k)


def _eval_2var(f, A, B, conv):
    """f(A(t), B(t)) for a two-variable series f and one-variable series A, B
    whose coefficients all have positive valuation.

    A term of total degree d contributes valuation >= d, so the sum may stop
    once d exceeds the coefficient precision plus the t-truncation."""
    ring = A.ring
    cap = ring.prec + A.trunc
    pa, pb = {}, {}

    def power(cache, base, k):
        if k not in cache:
            cache[k] = base if k == 1 else power(cache, base, k - 1) * base
        return cache[k]

    acc = TSeries.zero(ring, 1, A.trunc)
    for e, c in sorted(f.coeffs.items(), key=lambda ec: sum(ec[0])):
        if sum(e) > cap:
            break
        term = TSeries.const(ring, 1, A.trunc, conv(c))
        if e[0]:
            term = term * power(pa, A, e[0])
        if e[1]:
            term = term * power(pb, B, e[1])
        acc = acc + term
    return acc


def _neron_log_series(u, curve, p, prec, fg, m, pbase):
    """(lambda_p as a LogSeries, L1 series, L2 series) along a residue-disc
    family u(t) of Jacobian points, for the naive sigma function.

    m must send every specialization of the family into the kernel of
    reduction.  The family is expected over an exact-rational series ring
    (sound through the Cantor chain); the result lives over pbase."""
    sring = u.ring()
    hl = log_sigma_unit(fg, prec + 1)
    l1s = fg.log[0].truncate(prec + 1)
    l2s = fg.log[1].truncate(prec + 1)
    dv = DivisionValues(u, curve)
    err = None
    for k in (1, 2, 3, 4):
        mm = m * k
        try:
            M = dv.multiple(mm)
            if M.is_identity() or M.u.degree() != 2:
                continue
            t1, t2 = t_coords(grant_coords(M, curve))
            phi = dv.value(mm)
        except (DegenerateError, PrecisionError, ValueError) as e:
            err = e
            continue
        if sring.is_zeroish(t1) or sring.is_zeroish(phi):
            continue
        if isinstance(sring.base, RationalRing):
            t1 = t1.map_coeffs(pbase.from_rat, pbase)
            t2 = t2.map_coeffs(pbase.from_rat, pbase)
            phi = phi.map_coeffs(pbase.from_rat, pbase)
        logt1 = _series_iwlog(t1)
        logphi = _series_iwlog(phi)
        if t1.low_degree() > 0:
            # the family tends to theta inside the kernel: compose the
            # sigma-unit and logarithm series directly
            hval = hl.subs((t1, t2))
            l1 = l1s.subs((t1, t2)).scalar_mul(QQ(1, mm))
            l2 = l2s.subs((t1, t2)).scalar_mul(QQ(1, mm))
        else:
            hval = _eval_2var(hl, t1, t2, pbase.from_rat)
            l1 = _eval_2var(l1s, t1, t2, pbase.from_rat).scalar_mul(QQ(1, mm))
            l2 = _eval_2var(l2s, t1, t2, pbase.from_rat).scalar_mul(QQ(1, mm))
        lam = (logt1 + hval - logphi) * QQ(-2, mm * mm)
        return lam, l1, l2
    raise err or DegenerateError("no usable multiple along the disc")


def _disc_parametrization(X, x0, y0, p, sring):
    """(x(t), y(t)) over the series ring for the residue disc of (x0, y0):
    x(t) = x0 + p t, with the square root anchored at y0.

    Over an exact-rational ring (x0, y0) must be a rational point of X, so
    the root of the constant term is y0 itself; over a p-adic ring y0 only
    needs to determine the sign of the square root mod p."""
    base = sring.base
    t = sring.variable(0)
    x0, y0 = as_rational(x0), as_rational(y0)
    xt = t.scalar_mul(p) + base.from_rat(x0)
    f0, f1, f2, f3, f4, f5 = X.f
    x2 = xt * xt
    g = ((((x2.scalar_mul(f5) + f4) * x2 + f3) * x2 + f2) * x2 + f1) * x2 + f0
    if isinstance(base, RationalRing):
        if X.eval_f(x0) != y0 * y0:
            raise ValueError("exact expansion needs a rational point of X")
        return xt, series_sqrt(g, y0)
    r0 = padic_sqrt(g.constant_term())
    d = r0 - base.from_rat(y0)
    if not d.is_zeroish() and d.val == 0:
        r0 = -r0
    return xt, series_sqrt(g, r0)


def _family_multiplier(u, curve, p, max_m=None):
    """A multiplier sending the whole disc family into the kernel of
    reduction, read off from the constant terms of the Mumford
    coefficients."""
    base = u.ring().base
    exact = isinstance(base, RationalRing)

    def center(c):
        lo = c.low_degree() if not c.is_zero() else 0
        if lo > 0:
            return base.from_rat(0)
        if lo < 0:
            return None
        return c.constant_term()

    ucs = [center(c) for c in u.u.cs]
    vcs = [center(c) for c in u.v.cs]
    if any(c is None for c in ucs + vcs):
        # the center degenerates through the singular locus inside the
        # kernel: the family already reduces to the identity
        return 1
    if exact:
        u0 = JacPoint(Poly(QRING, ucs), Poly(QRING, vcs))
        n = jacobian_group_order(curve, p)
        try:
            return point_order(reduce_point(u0, curve, p), n, curve)
        except (ValueError, ZeroDivisionError, DegenerateError):
            return reduction_order_exact(u0, curve, p, n)
    if curve.has_good_reduction(p) and all(
            c.is_exact_zero() or c.is_zeroish() or c.val >= 0
            for c in ucs + vcs):
        fp = FpRing(p)
        ubar = Poly(fp, [fp.from_rat(c.lift()) for c in ucs])
        vbar = Poly(fp, [fp.from_rat(c.lift()) for c in vcs])
        n = jacobian_group_order(curve, p)
        return point_order(JacPoint(ubar, vbar), n, curve)
    # bad reduction or non-integral center: p-adic walk on the center
    if max_m is None:
        max_m = 4 * (p + 1) ** 2
    wring = PadicCoeffRing(p, max(base.prec, 32))
    u0 = JacPoint(Poly(wring, [wring.coerce(c) for c in ucs]),
                  Poly(wring, [wring.coerce(c) for c in vcs]))
    R = u0
    for m in range(1, max_m + 1):
        if m > 1:
            R = cantor_add(R, u0, curve)
        if R.is_identity():
            return m
        if R.u.degree() == 2 and in_reduction_kernel(R, curve, p):
            return m
    raise ArithmeticError("no kernel multiplier for the disc center")


def rho_expansion(X, x0, y0, p, prec, alphas1, alphas2, tdeg=8,
                  fg1=None, fg2=None, pad=6, slack=48):
    """Power series of the extended function rho on the residue disc of
    (x0, y0), in the parameter t with x = x0 + p t.

    Discs with y0 != 0 mod p and finite x0 are supported; for x0 = 0 mod p
    the second covering passes through its branch locus and the logarithmic
    singularities of the two sides cancel exactly, which is asserted.
    Returns a one-variable TSeries over the p-adics.
    """
    x0, y0 = as_rational(x0), as_rational(y0)
    if y0 == 0 or rat_val(y0, p) > 0:
        raise ValueError("Weierstrass residue discs are not supported")
    exact = X.eval_f(x0) == y0 * y0
    tt = max(prec, tdeg)
    if fg1 is None:
        fg1 = FormalGroup(X.c1, tt + 5)
    if fg2 is None:
        fg2 = FormalGroup(X.c2, tt + 5)
    pbase = PadicCoeffRing(p, prec + pad)
    base = QRING if exact else pbase
    f0, f5 = X.f[0], X.f[5]
    sring0 = SeriesCoeffRing(pbase, 1, tdeg + 2)
    xt0, _ = _disc_parametrization(X, x0, y0, p, sring0)
    chi = _series_iwlog(xt0)
    rho = LogSeries(chi.series.truncate(tdeg).scalar_mul(-6), -6 * chi.logt)
    for sgn, curve, fg, alphas in ((1, X.c1, fg1, alphas1),
                                   (-1, X.c2, fg2, alphas2)):
        sring = SeriesCoeffRing(base, 1, tdeg + slack)
        xt, yt = _disc_parametrization(X, x0, y0, p, sring)
        if sgn == 1:
            cx = (xt * xt).scalar_mul(f5)
            cy = yt.scalar_mul(f5 * f5)
        else:
            xi = sring.one().divide(xt)
            cx = (xi * xi).scalar_mul(f0)
            cy = (yt * xi ** 5).scalar_mul(f0 * f0)
        P = CurvePoint(cx, cy)
        u = mumford_from_points(P, P, curve, sring)
        m = _family_multiplier(u, curve, p)
        lam, l1, l2 = _neron_log_series(u, curve, p, tt, fg, m, pbase)
        l1, l2 = l1.truncate(tdeg), l2.truncate(tdeg)
        if min(lam.series.trunc, l1.trunc, l2.trunc) < tdeg:
            raise ArithmeticError("series truncation exhausted; increase "
                                  "the slack parameter")
        part = LogSeries(lam.series.truncate(tdeg), lam.logt) - \
            LogSeries(apply_form(alphas, l1, l2))
        rho = rho + part * sgn
    if rho.logt != 0:
        raise ArithmeticError("logarithmic singularities did not cancel")
    return rho.series.map_coeffs(lambda c: c.with_prec(prec), pbase)


def strassman_report(series, value):
    """Root analysis of series(t) = value over Z_p.

    Returns a dict with the Strassman bound on the number of roots counted
    with multiplicity, the multiplicity of t = 0 within precision, and a
    status: "no-roots", "accounted" (every possible root sits at t = 0), or
    "undecided" (precision too low to conclude).  The bound is valid
    provided the unrepresented tail of the series stays above the minimal
    valuation, which holds for residue-disc expansions whose coefficients
    gain valuation with the degree.
    """
    coeffs = {e[0]: c for e, c in series.coeffs.items()}
    p = None
    for c in coeffs.values():
        p = c.p
        break
    if p is None:
        raise ValueError("cannot analyse a series with no known coefficients")
    maxprec = max(c.prec for c in coeffs.values())
    if isinstance(value, LogMultiple):
        value = value.to_padic(p, maxprec)
    elif not isinstance(value, PadicNumber):
        value = PadicNumber.from_rat(as_rational(value), p, maxprec)
    c0 = coeffs.get(0)
    coeffs[0] = (c0 - value) if c0 is not None else -value
    n = series.trunc
    vals, zprecs = [], []
    for i in range(n):
        c = coeffs.get(i)
        if c is None or c.is_exact_zero():
            vals.append(None)
            zprecs.append(None)
        elif c.is_zeroish():
            vals.append(None)
            zprecs.append(c.prec)
        else:
            vals.append(c.val)
            zprecs.append(None)
    known = [(i, v) for i, v in enumerate(vals) if v is not None]
    if not known:
        return {"bound": None, "t0_multiplicity": None, "minval": None,
                "status": "undecided"}
    minval = min(v for _, v in known)
    bound = max(i for i, v in known if v == minval)
    undecided = any(zp is not None and (zp < minval or
                                        (zp == minval and i > bound))
                    for i, zp in enumerate(zprecs))
    mult = 0
    while mult < n and vals[mult] is None:
        mult += 1
    if undecided:
        status = "undecided"
    elif bound == 0:
        status = "no-roots"
    elif mult >= bound:
        status = "accounted"
    else:
        status = "undecided"
    return {"bound": bound, "t0_multiplicity": mult, "minval": minval,
            "status": status}


# ---------------------------------------------------------------------------
# the partition search behind the uniform multiplier bound

def partition_check(range_max, parts=4, reverse=False):
    """Whether {1, ..., range_max} splits into `parts` classes such that no
    class contains a sum of two or of three of its own elements (repetition
    allowed) nor four consecutive integers.

    Nonexistence at range_max = 41 caps the multiplier needed to move four
    non-special points off the theta divisor simultaneously.
    """
    members = [set() for _ in range(parts)]
    sum2 = [{} for _ in range(parts)]
    sum3 = [{} for _ in range(parts)]

    def bump(d, key, delta):
        c = d.get(key, 0) + delta
        if c:
            d[key] = c
        else:
            del d[key]

    def can_place(k, i):
        if k in sum2[i] or k in sum3[i]:
            return False
        if k - 3 in members[i] and k - 2 in members[i] and \
                k - 1 in members[i]:
            return False
        return True

    def place(k, i):
        for s, c in list(sum2[i].items()):
            bump(sum3[i], k + s, c)
        for a in members[i]:
            bump(sum3[i], 2 * k + a, 1)
        bump(sum3[i], 3 * k, 1)
        for a in members[i]:
            bump(sum2[i], k + a, 1)
        bump(sum2[i], 2 * k, 1)
        members[i].add(k)

    def unplace(k, i):
        members[i].discard(k)
        bump(sum2[i], 2 * k, -1)
        for a in members[i]:
            bump(sum2[i], k + a, -1)
        bump(sum3[i], 3 * k, -1)
        for a in members[i]:
            bump(sum3[i], 2 * k + a, -1)
        for s, c in list(sum2[i].items()):
            bump(sum3[i], k + s, -c)

    def search(k, used):
        if k > range_max:
            return True
        order = range(min(used + 1, parts))
        if reverse:
            order = reversed(list(order))
        for i in order:
            if can_place(k, i):
                place(k, i)
                if search(k + 1, max(used, i + 1)):
                    return True
                unplace(k, i)
        return False

    return search(1, 0)


def max_valid_partition_range(parts=4, limit=100):
    """Largest n <= limit such that the next integer still admits a valid
    split; scanning upward from 1 and stopping at the first failure."""
    best = 0
    for n in range(1, limit + 1):
        if partition_check(n, parts):
            best = n
        else:
            break
    return best
