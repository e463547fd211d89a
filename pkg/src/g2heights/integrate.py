"""p-adic integrals of the holomorphic differentials dx/2y and x dx/2y.

The integral between two points of the curve is the value of the extended
formal-group logarithm at the class [P1 - P2]: pick m with m[P1 - P2] in the
kernel of reduction, then

    int_{P2}^{P1} omega_i = (1/m) L_i(T(m [P1 - P2])).

This needs no assumption on the reduction type of the curve at p.  For two
points in a common residue disc the same value is a convergent power-series
integral, which serves as an independent cross-check.
"""

from .coords import grant_coords, t_coords
from .curve import (DegenerateError, cantor_add, cantor_mul, cantor_sub, iota,
                    point_order, reduce_point)
from .heights import in_reduction_kernel, jacobian_group_order
from .padic import PadicNumber, PrecisionError
from .rat import QQ, as_rational, rat_val
from .series import PadicCoeffRing


def kernel_multiplier(u, curve, p, order_hint=None, max_m=None):
    """A positive integer m with m*u in the kernel of reduction mod p."""
    if u.u.degree() == 2 and in_reduction_kernel(u, curve, p):
        return 1
    exact = not any(isinstance(c, PadicNumber)
                    for poly in (u.u, u.v) for c in poly.cs)
    if exact and curve.has_good_reduction(p):
        n = jacobian_group_order(curve, p, order_hint)
        try:
            return point_order(reduce_point(u, curve, p), n, curve)
        except (ValueError, ZeroDivisionError, DegenerateError):
            from .heights import reduction_order_exact
            return reduction_order_exact(u, curve, p, n)
    # bad reduction: certified q-adic walk, as for the local heights
    if max_m is None:
        max_m = max(256, (p + 2) ** 2 * 16)
    found = []
    for wprec in (128, 256):
        ring = PadicCoeffRing(p, wprec)
        uq = u.map(ring.coerce, ring)
        R = None
        for m in range(1, max_m + 1):
            try:
                if m == 1:
                    R = uq
                elif R is not None:
                    R = cantor_add(R, uq, curve)
                else:
                    R = cantor_mul(uq, m, curve)
            except DegenerateError:
                try:
                    R = cantor_mul(uq, m, curve)
                except DegenerateError:
                    R = None
                    continue
            if R.u.degree() == 2 and in_reduction_kernel(R, curve, p):
                found.append(m)
                break
    if len(found) == 2 and found[0] == found[1]:
        return found[0]
    raise ArithmeticError("no certified kernel multiplier at p = %d" % p)


def jacobian_log(u, curve, p, prec, fg=None, order_hint=None, pad=6):
    """(L1, L2) extended to all of J(Q_p) by L(u) = L(mu)/m."""
    if u.is_identity():
        z = PadicNumber.zero_at(p, prec)
        return z, z
    from .formal import FormalGroup
    if fg is None:
        fg = FormalGroup(curve, prec + 4)
    m = kernel_multiplier(u, curve, p, order_hint=order_hint)
    l1s = fg.log[0].truncate(prec + 1)
    l2s = fg.log[1].truncate(prec + 1)
    pad += 2 * rat_val(QQ(m), p)
    for _ in range(6):
        ring = PadicCoeffRing(p, prec + pad)
        up = u.map(ring.coerce, ring)
        for k in (1, 2, 3, 4):
            try:
                R = cantor_mul(up, m * k, curve)
                if R.is_identity() or R.u.degree() != 2:
                    continue
                t1, t2 = t_coords(grant_coords(R, curve))
            except (DegenerateError, PrecisionError):
                continue
            if t1.is_zeroish() and t2.is_zeroish():
                continue
            conv = ring.from_rat
            l1 = l1s.eval((t1, t2), conv) * QQ(1, m * k)
            l2 = l2s.eval((t1, t2), conv) * QQ(1, m * k)
            if min(l1.prec, l2.prec) >= prec:
                return l1.with_prec(prec), l2.with_prec(prec)
        # points deep in the kernel can eat many digits; grow quickly
        pad += max(4, pad // 2)
    raise PrecisionError("could not certify the Jacobian logarithm")


def integrate_holomorphic(P1, P2, curve, p, prec, fg=None, order_hint=None):
    """(int_{P2}^{P1} dx/2y, int_{P2}^{P1} x dx/2y) as p-adic numbers."""
    u = cantor_sub(iota(P1), iota(P2), curve)
    return jacobian_log(u, curve, p, prec, fg=fg, order_hint=order_hint)


def _taylor_shift(cs, x0):
    """Ascending coefficients of f(x0 + t) by repeated synthetic division."""
    a = list(cs)
    out = []
    while a:
        r = a[-1]
        quot = [r]
        for c in reversed(a[:-1]):
            r = r * x0 + c
            quot.append(r)
        out.append(r)
        a = list(reversed(quot[:-1]))
    return out


def tiny_integrals(P1, P2, curve, p, prec):
    """Same-disc integrals of dx/2y and x dx/2y by termwise integration.

    P1 and P2 must be affine points in a common non-Weierstrass residue
    disc; the expansion variable is t = x - x(P2).
    """
    nterms = prec + 8
    ring = PadicCoeffRing(p, prec + 6)
    x1, y1 = ring.coerce(P1.x), ring.coerce(P1.y)
    x2, y2 = ring.coerce(P2.x), ring.coerce(P2.y)
    t0 = x1 - x2
    if (not t0.is_zeroish() and t0.val < 1) or (y1 - y2).val < 1:
        raise ValueError("points do not share a residue disc")
    if y2.is_zeroish() or y2.val > 0:
        raise ValueError("Weierstrass residue disc")
    fcs = [ring.coerce(as_rational(c))
           for c in (curve.b[4], curve.b[3], curve.b[2], curve.b[1],
                     curve.b[0], 1)]
    shifted = _taylor_shift(fcs, x2)
    # relative series s(t) = f(x2 + t)/f(x2) = 1 + (val >= 1 terms)
    f0 = shifted[0]
    s = [c / f0 for c in shifted]
    # 1/y(t) = (1/y2) * s(t)^(-1/2) via the binomial series
    w = [ring.from_rat(1)] + [ring.from_rat(0)] * (nterms - 1)
    smin1 = [ring.from_rat(0)] + s[1:6] + [ring.from_rat(0)] * (nterms - 6)
    powk = [ring.from_rat(1)] + [ring.from_rat(0)] * (nterms - 1)
    coef = as_rational(1)
    for k in range(1, nterms):
        # pow_k = (s - 1)^k, truncated
        nxt = [ring.from_rat(0)] * nterms
        for i in range(nterms):
            if powk[i].is_exact_zero():
                continue
            for j in range(1, min(6, nterms - i)):
                nxt[i + j] = nxt[i + j] + powk[i] * smin1[j]
        powk = nxt
        coef = coef * QQ(-(2 * k - 1), 2 * k)
        if all(c.is_exact_zero() for c in powk):
            break
        for i in range(nterms):
            w[i] = w[i] + powk[i] * coef
    inv2y = [c / (y2 + y2) for c in w]
    # integrands: 1/2y and (x2 + t)/2y
    g1 = inv2y
    g2 = [inv2y[i] * x2 + (inv2y[i - 1] if i else 0) for i in range(nterms)]
    out = []
    for g in (g1, g2):
        acc = PadicNumber.zero_at(p, prec)
        tp = t0
        for i in range(nterms):
            acc = acc + g[i] * tp * QQ(1, i + 1)
            tp = tp * t0
        out.append(acc.with_prec(prec))
    return out[0], out[1]
