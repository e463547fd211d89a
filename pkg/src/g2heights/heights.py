"""p-adic Neron functions, global p-adic heights and Coleman-Gross pairings.

All heights are with respect to the cyclotomic idele class character:
chi_p = log_p (Iwasawa branch) and chi_q(x) = -ord_q(x) log_p(q) for q != p.

At p the local Neron function of a point P off the theta divisor is

    lambda_p(P) = -(2/m^2) log_p(sigma(T(mP)) / phi_m(P)),

with m chosen so that mP lies in the kernel of reduction and off theta;
sigma is the p-adic sigma function attached to a symmetric matrix c (the
unit-root matrix b for the canonical height, 0 for the naive one).  Away
from p the sigma value degenerates to T_1(mP) and only valuations matter,
so lambda_q(P) is an explicit rational multiple of log_p(q).
"""

import math

from .coords import grant_coords, t_coords
from .curve import (CurvePoint, DegenerateError, cantor_add, cantor_mul,
                    jacobian_counts,
                    mumford_from_points, point_order, reduce_point)
from .divpoly import DivisionValues
from .formal import FormalGroup
from .kedlaya import jacobian_order_kedlaya, unit_root_b_matrix
from .padic import PadicNumber, PrecisionError, iwasawa_log, iwasawa_log_rational
from .rat import QQ, as_rational, rat_val
from .series import PadicCoeffRing, QRING
from .sigma import log_sigma_unit


class LogMultiple:
    """A symbolic value r * log_p(q) with r rational."""

    __slots__ = ("r", "q")

    def __init__(self, r, q):
        self.r = as_rational(r)
        self.q = q

    def is_zero(self):
        return self.r == 0

    def to_padic(self, p, prec):
        if self.r == 0:
            return PadicNumber.zero_at(p, prec)
        return iwasawa_log_rational(self.q, p, prec + 2) * self.r

    def __add__(self, other):
        if other == 0:
            return self
        if not isinstance(other, LogMultiple) or other.q != self.q:
            raise ValueError("incompatible log terms")
        return LogMultiple(self.r + other.r, self.q)

    __radd__ = __add__

    def __mul__(self, c):
        return LogMultiple(self.r * as_rational(c), self.q)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, LogMultiple):
            return self.q == other.q and self.r == other.r
        return other == 0 and self.r == 0

    def __repr__(self):
        return "(%s)*log_%s" % (self.r, self.q)


def _factorize(n):
    from sympy import factorint
    return factorint(int(n))


def jacobian_group_order(curve, p, hint=None):
    """#J(F_p) (or a multiple of the exponent) at a good prime."""
    if hint is not None:
        return hint
    if p <= 256:
        return jacobian_counts(curve, p)[2]
    if p <= 4000:
        return jacobian_order_kedlaya(curve, p)
    raise ValueError("pass a group-order hint for p = %d" % p)


def _coord_val(x, q):
    """q-adic valuation of a coordinate (exact rational or q-adic),
    as a lower bound for imprecise zeros."""
    if isinstance(x, PadicNumber):
        if x.is_exact_zero():
            return math.inf
        return x.prec if x.is_zeroish() else x.val
    return math.inf if x == 0 else rat_val(x, q)


def in_reduction_kernel(P, curve, q):
    """Whether a point off theta reduces to the identity mod q.

    In the projective embedding (1 : X11 : X12 : X22 : X111 : X112 : X122 :
    X222 : X) the identity is (0 : ... : 0 : 1 : 0 : ... : 0), so the point
    reduces to it exactly when X111 strictly q-adically dominates every
    other coordinate."""
    try:
        c = grant_coords(P, curve)
    except DegenerateError:
        return False
    v111 = _coord_val(c.x111, q)
    if v111 >= 0:
        return False
    for x in (c.x11, c.x12, c.x22, c.x112, c.x122, c.x222, c.x):
        if _coord_val(x, q) <= v111:
            return False
    return True


def _away_value_at(P, curve, q, m, wprec):
    """(2/m^2)(ord_q T1(mP) - ord_q phi_m(P)) computed q-adically at a
    working precision, or None when m is not usable at that precision."""
    ring = PadicCoeffRing(q, wprec)
    Pq = P.map(ring.coerce, ring)
    try:
        R = cantor_mul(Pq, m, curve)
        if R.is_identity() or R.u.degree() != 2:
            return None
        if not in_reduction_kernel(R, curve, q):
            return None
        c = grant_coords(R, curve)
        t1 = c.x11 / (-c.x111)
        phi = DivisionValues(Pq, curve).value(m)
    except (DegenerateError, ArithmeticError):
        return None
    if t1.is_zeroish() or phi.is_zeroish():
        return None
    return QQ(2, m * m) * (t1.val - phi.val)


def neron_function_away(P, curve, p, q, max_m=None):
    """lambda_q(P) for q != p, as a rational multiple of log_p(q)."""
    if P.is_identity():
        return LogMultiple(0, q)
    # at good primes lambda_q is the naive valuation formula on all of
    # J_Theta; the same holds when ord_q(disc) = 1, where the correction
    # term mu_q is pinned to zero (mu_q <= ord_q(disc)/4 and mu_q in (1/2)Z)
    naive_ok = curve.has_good_reduction(q) or \
        (q != 2 and rat_val(curve.discriminant(), q) == 1)
    if naive_ok and P.u.degree() == 2:
        c = grant_coords(P, curve)
        d = 0
        for x in (c.x11, c.x12, c.x22):
            if x != 0:
                d = max(d, -rat_val(x, q))
        return LogMultiple(d, q)
    # bad reduction: walk the multiples q-adically until one lands in the
    # kernel of reduction.  Capped-precision Cantor arithmetic can go quietly
    # wrong near theta, so every candidate is certified by recomputing the
    # value independently at doubled precision and requiring agreement.
    if max_m is None:
        max_m = max(256, (math.isqrt(q) + 2) ** 4)
    wprec = 128
    ring = PadicCoeffRing(q, wprec)
    Pq = P.map(ring.coerce, ring)
    R = None
    checked = 0
    for m in range(1, max_m + 1):
        try:
            if m == 1:
                R = Pq
            elif R is not None:
                R = cantor_add(R, Pq, curve)
            else:
                R = cantor_mul(Pq, m, curve)
        except DegenerateError:
            try:
                R = cantor_mul(Pq, m, curve)
            except DegenerateError:
                R = None
                continue
        if R.is_identity() or R.u.degree() != 2:
            continue
        if not in_reduction_kernel(R, curve, q):
            continue
        r1 = _away_value_at(P, curve, q, m, wprec)
        if r1 is not None and r1 == _away_value_at(P, curve, q, m, 2 * wprec):
            return LogMultiple(r1, q)
        checked += 1
        if checked >= 8:
            break
    raise ArithmeticError("no certified kernel multiplier below %d at q = %d"
                          % (max_m, q))


def reduction_order_exact(P, curve, p, n):
    """A multiple of the order of the reduction of P mod p, found by testing
    kernel membership on exact multiples of P itself.

    Works when the Mumford coefficients have p in a denominator, where a
    naive coefficientwise reduction is undefined.  n must be a multiple of
    the group exponent mod p."""
    def in_ker(R):
        return R.is_identity() or (R.u.degree() == 2 and
                                   in_reduction_kernel(R, curve, p))
    m = n
    for l in _factorize(n):
        while m % l == 0 and in_ker(cantor_mul(P, m // l, curve)):
            m //= l
    return m


def canonical_b_matrix(curve, p, prec):
    """The unit-root matrix b as a symmetric 2x2 matrix of p-adic numbers."""
    b11, b12, b22 = unit_root_b_matrix(curve, p, prec)
    return [[b11, b12], [b12, b22]]


def neron_function_at_p(P, curve, p, prec, cmat=None, fg=None,
                        order_hint=None, pad=10):
    """lambda_p(P) mod p^prec for an exact rational point P off theta.

    cmat is the symmetric sigma-shift matrix: None selects the unit-root
    matrix (canonical height); [[0, 0], [0, 0]] gives the naive height.
    """
    if cmat is None:
        cmat = canonical_b_matrix(curve, p, prec + pad)
    n = jacobian_group_order(curve, p, order_hint)
    try:
        m = point_order(reduce_point(P, curve, p), n, curve)
    except (ValueError, ZeroDivisionError, DegenerateError):
        # a Mumford coefficient has p in a denominator; find the order on
        # exact multiples instead
        m = reduction_order_exact(P, curve, p, n)
    if fg is None:
        fg = FormalGroup(curve, prec + 5)
    hl = log_sigma_unit(fg, prec + 1)
    l1s = fg.log[0].truncate(prec + 1)
    l2s = fg.log[1].truncate(prec + 1)
    for _ in range(6):
        ring = PadicCoeffRing(p, prec + pad)
        Pp = P.map(ring.coerce, ring)
        dv = DivisionValues(Pp, curve)
        for k in (1, 2, 3, 4):
            mm = m * k
            try:
                t1, t2 = t_coords(dv.coords(mm))
                phi = dv.value(mm)
            except (DegenerateError, PrecisionError):
                continue
            if t1.is_zeroish() or phi.is_zeroish():
                continue
            if t1.val < 1 or (not t2.is_zeroish() and t2.val < 1):
                raise ArithmeticError("m * P did not land in the reduction kernel")
            break
        else:
            # every multiple degenerated at this working precision; points
            # deep in the kernel need more digits
            pad += max(8, pad)
            continue
        conv = ring.from_rat
        hval = hl.eval((t1, t2), conv)
        l1 = l1s.eval((t1, t2), conv)
        l2 = l2s.eval((t1, t2), conv)
        c11, c12, c22 = (ring.coerce(cmat[0][0]), ring.coerce(cmat[0][1]),
                         ring.coerce(cmat[1][1]))
        shift = (l1 * l1 * c11 + l2 * l2 * c22) * QQ(1, 2) + l1 * l2 * c12
        logsig = iwasawa_log(t1) + hval + shift
        lam = (logsig - iwasawa_log(phi)) * QQ(-2, mm * mm)
        if lam.prec >= prec:
            return lam.with_prec(prec)
        # the ladder lost digits through p-divisible intermediates; retry
        pad += prec - lam.prec + 4
    raise PrecisionError("could not certify lambda_p to the requested precision")


def neron_function(P, curve, p, q, prec, **kw):
    """Local Neron function at any prime q (p-adic at q = p, symbolic else)."""
    if q == p:
        return neron_function_at_p(P, curve, p, prec, **kw)
    return neron_function_away(P, curve, p, q)


def height_support(P, curve):
    """Primes where lambda_q(P) can be nonzero: bad reduction and
    denominators of the Mumford coefficients."""
    qs = set(_factorize(2 * abs(int(curve.discriminant()))))
    for poly in (P.u, P.v):
        for i in range(poly.degree() + 1):
            den = int(as_rational(poly.coeff(i)).denominator)
            if den > 1:
                qs |= set(_factorize(den))
    return sorted(qs)


def global_height_breakdown(P, curve, p, prec, cmat=None, fg=None,
                            order_hint=None):
    """(lambda_p, {q: LogMultiple}) for a point off the theta divisor."""
    lam_p = neron_function_at_p(P, curve, p, prec, cmat=cmat, fg=fg,
                                order_hint=order_hint)
    away = {}
    for q in height_support(P, curve):
        if q == p:
            continue
        lam = neron_function_away(P, curve, p, q)
        if not lam.is_zero():
            away[q] = lam
    return lam_p, away


def global_height(P, curve, p, prec, cmat=None, fg=None, order_hint=None):
    """The global p-adic height h_p(P), mod p^prec."""
    if P.is_identity():
        return PadicNumber.zero_at(p, prec)
    err = None
    for k in range(1, 9):
        R = P if k == 1 else cantor_mul(P, k, curve)
        if R.is_identity() or R.u.degree() != 2:
            continue
        try:
            lam_p, away = global_height_breakdown(R, curve, p, prec, cmat=cmat,
                                                  fg=fg, order_hint=order_hint)
        except (DegenerateError, ArithmeticError) as e:
            # small multiples of R on theta can block the division-value
            # ladder; h_p is exactly quadratic, so pass to a larger multiple
            err = e
            continue
        h = lam_p
        for lam in away.values():
            h = h + lam.to_padic(p, prec)
        return (h * QQ(1, k * k)).with_prec(prec)
    raise err or ArithmeticError("no usable multiple for the global height")


def cg_pairing_split(curve, p, q, P1, P2, prec=None, **kw):
    """Coleman-Gross local pairing <P1 - P2, P2^- - P1^-> at the prime q.

    P1, P2 are non-Weierstrass curve points (x, y) with P1 != P2^-.
    Returns a PadicNumber when q = p, a LogMultiple otherwise.
    """
    (x1, y1), (x2, y2) = (P1.x, P1.y), (P2.x, P2.y)
    n1 = CurvePoint(x1, -y1)
    n2 = CurvePoint(x2, -y2)
    v1 = mumford_from_points(n2, n1, curve)
    v2 = mumford_from_points(n2, n2, curve)
    v3 = mumford_from_points(n1, n1, curve)
    if q == p:
        lam = [neron_function_at_p(v, curve, p, prec, **kw)
               for v in (v1, v2, v3)]
    else:
        lam = [neron_function_away(v, curve, p, q) for v in (v1, v2, v3)]
    return (2 * lam[0] + (-1) * lam[1] + (-1) * lam[2]) * QQ(-1, 2)


def cg_pairing_combination(curve, p, q, terms, prec=None, **kw):
    """General local pairing -(1/2) sum k_i m_j lambda_q(iota(Q_j) - u_i).

    terms is a list of (coefficient, JacPoint) pairs, one for each
    iota(Q_j) - u_i, prepared by the caller.
    """
    if q == p:
        vals = [neron_function_at_p(v, curve, p, prec, **kw) * QQ(c)
                for c, v in terms]
    else:
        vals = [neron_function_away(v, curve, p, q) * QQ(c) for c, v in terms]
    acc = vals[0]
    for v in vals[1:]:
        acc = acc + v
    return acc * QQ(-1, 2)
