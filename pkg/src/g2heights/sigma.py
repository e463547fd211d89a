"""Sigma functions attached to the formal group of a genus-2 Jacobian.

The naive sigma is the unique odd series sigma0 = T1 * (unit) over Q with
X_ij = -D_i D_j log sigma0, D_i the invariant derivations.  A symmetric
matrix c shifts it by sigma(c) = sigma0 * exp((1/2) sum c_ij L_i L_j); the
canonical p-adic sigma uses for c the Frobenius-split Hodge matrix."""

from .rat import QQ
from .series import PadicCoeffRing, TSeries, series_exp, solve_hessian


def _pair_name(i, j):
    return ("11", "12", "12", "22")[2 * i + j]


def _log_t1_hessian(fg, i, j):
    """D_i D_j log T1 as a series with a pole in T1."""
    c = fg.c_matrix
    trunc = c[0][0].trunc
    tinv = TSeries.monomial(c[0][0].ring, 2, trunc, (-1, 0), 1)
    tinv2 = TSeries.monomial(c[0][0].ring, 2, trunc, (-2, 0), 1)
    acc = (c[i][0] * c[j][0].diff(0) + c[i][1] * c[j][0].diff(1)) * tinv
    return acc - (c[i][0] * c[j][0]) * tinv2


def log_sigma_unit(fg, trunc=None):
    """log(sigma0 / T1) as a series over Q with zero constant term."""
    targets = [[None, None], [None, None]]
    tmin = None
    for i in range(2):
        for j in range(2):
            r = -fg.x_series(_pair_name(i, j)) - _log_t1_hessian(fg, i, j)
            if any(e[0] < 0 for e in r.coeffs):
                raise ArithmeticError("log-sigma Hessian has a pole")
            targets[i][j] = r
            tmin = r.trunc if tmin is None else min(tmin, r.trunc)
    if not (targets[0][1] - targets[1][0]).is_zero():
        raise ArithmeticError("log-sigma Hessian is not symmetric")
    if trunc is not None:
        tmin = min(tmin, trunc - 2)
    targets = [[targets[i][j].truncate(tmin).subs(fg.exp) for j in range(2)]
               for i in range(2)]
    h = solve_hessian(targets, 2, tmin + 2)
    return h.subs([s.truncate(h.trunc) for s in fg.log])


def sigma_naive(fg, trunc=None):
    """The sigma series over Q with c = 0, as a series in (T1, T2)."""
    hl = log_sigma_unit(fg, trunc)
    t1 = TSeries.variable(hl.ring, 2, hl.trunc + 1, 0)
    sig = t1 * series_exp(hl)
    if trunc is not None:
        sig = sig.truncate(trunc)
    return sig


def quadratic_log_shift(fg, cmat, trunc):
    """(1/2) sum_ij c_ij L_i(T) L_j(T) for a symmetric 2x2 matrix c."""
    l1 = fg.log[0].truncate(trunc)
    l2 = fg.log[1].truncate(trunc)
    c11, c12, c22 = cmat[0][0], cmat[0][1], cmat[1][1]
    return (l1 * l1 * c11 + l2 * l2 * c22) / 2 + l1 * l2 * c12


def sigma_custom(fg, cmat, trunc=None):
    """sigma(c) = sigma0 * exp((1/2) sum c_ij L_i L_j), rational c."""
    sig = sigma_naive(fg, trunc)
    shift = quadratic_log_shift(fg, cmat, sig.trunc)
    return (sig * series_exp(shift)).truncate(sig.trunc)


def sigma_canonical(fg, bmat, p, prec, trunc=None):
    """The canonical p-adic sigma: c = the Hodge splitting matrix bmat,
    with p-adic entries."""
    sig = sigma_naive(fg, trunc)
    ring = PadicCoeffRing(p, prec)
    sigp = sig.map_coeffs(ring.from_rat, ring)
    l1 = fg.log[0].truncate(sig.trunc).map_coeffs(ring.from_rat, ring)
    l2 = fg.log[1].truncate(sig.trunc).map_coeffs(ring.from_rat, ring)
    b11, b12, b22 = bmat[0][0], bmat[0][1], bmat[1][1]
    shift = (l1 * l1 * b11 + l2 * l2 * b22) / 2 + l1 * l2 * b12
    return (sigp * series_exp(shift)).truncate(sigp.trunc)
