"""Formal group of a genus-2 Jacobian at the identity.

The nine functions (1, X11, X12, X22, X111, X112, X122, X222, X) embed
J minus the theta divisor; after clearing the common denominator w^4
(w = x1 - x2) they become polynomials on the symmetric square of the
curve.  Quadratic relations among them are found by exact linear algebra,
and those relations determine, degree by degree, the expansion of every
coordinate in the local parameters T1 = -X11/X111, T2 = -X/X111.

From the expansions: the invariant differentials (pullbacks of dx/2y and
x dx/2y), the formal logarithm L, its inverse E, and the strict formal
group law F(T, S) = E(L(T) + L(S)).
"""

from .rat import QQ, as_rational
from .series import QRING, TSeries

# coordinate indices: 0 = the constant 1, then the Kummer-style functions
COORD_NAMES = ("1", "11", "12", "22", "111", "112", "122", "222", "x")
_UNKNOWN = (0, 2, 3, 5, 6, 7)   # 1/X111, Y12, Y22, Y112, Y122, Y222
_IDX111 = 4


# ---------------------------------------------------------------------------
# polynomials in Q[x1, x2, y1, y2] / (y1^2 - f(x1), y2^2 - f(x2))
# terms: {(i, j, s1, s2): rational} with s1, s2 in {0, 1}

def _padd(*ps):
    out = {}
    for p in ps:
        for e, c in p.items():
            out[e] = out.get(e, QQ(0)) + c
    return {e: c for e, c in out.items() if c != 0}


def _pscale(p, c):
    c = as_rational(c)
    if c == 0:
        return {}
    return {e: v * c for e, v in p.items()}


def _pmul(a, b, fcs):
    raw = {}
    for (i1, j1, s1, t1), c1 in a.items():
        for (i2, j2, s2, t2), c2 in b.items():
            e = (i1 + i2, j1 + j2, s1 + s2, t1 + t2)
            raw[e] = raw.get(e, QQ(0)) + c1 * c2
    # reduce y1^2 -> f(x1), y2^2 -> f(x2)
    for axis in (2, 3):
        nxt = {}
        for e, c in raw.items():
            if e[axis] < 2:
                nxt[e] = nxt.get(e, QQ(0)) + c
                continue
            for k, fk in enumerate(fcs):
                if fk == 0:
                    continue
                e2 = list(e)
                e2[axis] -= 2
                e2[axis - 2] += k
                e2 = tuple(e2)
                nxt[e2] = nxt.get(e2, QQ(0)) + c * fk
        raw = nxt
    return {e: c for e, c in raw.items() if c != 0}


def cleared_coordinates(curve):
    """The nine coordinates times w^4, as polynomials on the symmetric
    square (with the y-squares reduced)."""
    b1, b2, b3, b4, b5 = [QQ(c) for c in curve.b]
    fcs = [b5, b4, b3, b2, b1, QQ(1)]

    def mono(i, j, s1, s2, c=1):
        return {(i, j, s1, s2): QQ(c)}

    one = mono(0, 0, 0, 0)
    x1, x2 = mono(1, 0, 0, 0), mono(0, 1, 0, 0)
    y1, y2 = mono(0, 0, 1, 0), mono(0, 0, 0, 1)

    def mul(*ps):
        r = one
        for p in ps:
            r = _pmul(r, p, fcs)
        return r

    w = _padd(x1, _pscale(x2, -1))
    w2 = mul(w, w)
    w3 = mul(w2, w)
    w4 = mul(w2, w2)
    e1 = _padd(x1, x2)
    e2 = mul(x1, x2)
    x1sq, x2sq = mul(x1, x1), mul(x2, x2)

    f0 = _padd(_pscale(one, 2 * b5), _pscale(e1, b4), _pscale(e2, 2 * b3),
               _pscale(mul(e2, e1), b2), _pscale(mul(e2, e2), 2 * b1),
               mul(e2, e2, e1))
    big_g = _padd(f0, _pscale(mul(y1, y2), -2))

    fpcs = [b4, 2 * b3, 3 * b2, 4 * b1, QQ(5)]

    def fprime_at(xv):
        acc = {}
        for c in reversed(fpcs):
            acc = _padd(mul(acc, xv), _pscale(one, c))
        return acc

    d1f0 = _padd(_pscale(one, b4), _pscale(x2, 2 * b3),
                 _pscale(_padd(_pscale(e2, 2), x2sq), b2),
                 _pscale(mul(x1, x2sq), 4 * b1),
                 _pscale(mul(x1sq, x2sq), 3),
                 _pscale(mul(x1, x2sq, x2), 2))
    d2f0 = _padd(_pscale(one, b4), _pscale(x1, 2 * b3),
                 _pscale(_padd(_pscale(e2, 2), x1sq), b2),
                 _pscale(mul(x2, x1sq), 4 * b1),
                 _pscale(mul(x1sq, x2sq), 3),
                 _pscale(mul(x2, x1sq, x1), 2))

    t1 = _padd(mul(y1, d1f0), _pscale(mul(y2, fprime_at(x1)), -1))
    t2 = _padd(mul(y2, d2f0), _pscale(mul(y1, fprime_at(x2)), -1))
    dnum = _padd(_pscale(mul(x2, t1), 2), _pscale(mul(x1, t2), -2))
    xy = _padd(mul(x2, y1), mul(x1, y2))
    num = _padd(_pscale(mul(w, dnum), -1), _pscale(mul(big_g, xy), 4))

    v1w = _padd(y1, _pscale(y2, -1))                 # v1 * w
    v0w = _padd(mul(x1, y2), _pscale(mul(x2, y1), -1))   # v0 * w

    z = [None] * 9
    z[0] = w4
    z[1] = mul(big_g, w2)
    z[2] = _pscale(mul(e2, w4), -1)
    z[3] = mul(e1, w4)
    z[4] = _pscale(num, QQ(1, 2))
    z[5] = _pscale(_padd(mul(v0w, e1, w3), mul(v1w, e2, w3)), -1)
    z[6] = mul(v0w, w3)
    z[7] = mul(v1w, w3)
    z[8] = _pscale(_padd(mul(big_g, e1, w2),
                         _pscale(mul(_padd(mul(e2, e2), _pscale(e2, b2),
                                           _pscale(one, b4)), w4), -1)),
                   QQ(1, 2))
    return z


# ---------------------------------------------------------------------------
# exact linear algebra

def _row_reduce_basis(rows, ncols):
    """Maintain a reduced basis of the row space; returns (basis, pivots)."""
    basis, pivots = [], []
    for row in rows:
        row = row[:]
        for b, p in zip(basis, pivots):
            if row[p] != 0:
                fac = row[p]
                for c in range(ncols):
                    row[c] = row[c] - fac * b[c]
        piv = next((c for c in range(ncols) if row[c] != 0), None)
        if piv is None:
            continue
        inv = 1 / row[piv]
        row = [v * inv for v in row]
        # back-substitute into the existing basis
        for k, b in enumerate(basis):
            if b[piv] != 0:
                fac = b[piv]
                basis[k] = [b[c] - fac * row[c] for c in range(ncols)]
        basis.append(row)
        pivots.append(piv)
    return basis, pivots


def _nullspace(rows, ncols):
    basis, pivots = _row_reduce_basis(rows, ncols)
    free = [c for c in range(ncols) if c not in pivots]
    out = []
    for fc in free:
        vec = [QQ(0)] * ncols
        vec[fc] = QQ(1)
        for b, p in zip(basis, pivots):
            vec[p] = -b[fc]
        out.append(vec)
    return out


def _invert_matrix(m):
    n = len(m)
    a = [row[:] + [QQ(1) if i == j else QQ(0) for j in range(n)]
         for i, row in enumerate(m)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            raise ValueError("singular matrix")
        a[col], a[piv] = a[piv], a[col]
        inv = 1 / a[col][col]
        a[col] = [v * inv for v in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                fac = a[r][col]
                a[r] = [a[r][c] - fac * a[col][c] for c in range(2 * n)]
    return [row[n:] for row in a]


def coordinate_quadrics(curve):
    """Rational vectors c with sum c_ab X_a X_b = 0, X_a the nine
    coordinates.  Returned as dicts over index pairs (a, b), a <= b."""
    z = cleared_coordinates(curve)
    fcs = [QQ(c) for c in [curve.b5, curve.b4, curve.b3, curve.b2, curve.b1, 1]]
    pairs = [(a, b) for a in range(9) for b in range(a, 9)]
    prods = [_pmul(z[a], z[b], fcs) for a, b in pairs]
    monos = sorted(set().union(*[set(p) for p in prods]))
    rows = [[p.get(mn, QQ(0)) for p in prods] for mn in monos]
    null = _nullspace(rows, len(pairs))
    quads = []
    for vec in null:
        quads.append({pairs[i]: vec[i] for i in range(len(pairs)) if vec[i] != 0})
    return quads


# ---------------------------------------------------------------------------
# formal expansion

def _conv(d1, d2):
    out = {}
    for (i1, j1), c1 in d1.items():
        for (i2, j2), c2 in d2.items():
            e = (i1 + i2, j1 + j2)
            out[e] = out.get(e, QQ(0)) + c1 * c2
    return out


class FormalGroup:
    """Expansions at the identity: coordinates, differentials, log, exp."""

    def __init__(self, curve, trunc):
        self.curve = curve
        self.trunc = trunc
        self.quadrics = coordinate_quadrics(curve)
        self._expand()
        self._differentials()
        self._logarithm()

    # -- coordinate expansions ----------------------------------------------

    def _expand(self):
        trunc = self.trunc
        quads = self.quadrics
        gp = [[{} for _ in range(trunc)] for _ in range(9)]
        gp[_IDX111][0] = {(0, 0): QQ(1)}
        gp[1][1] = {(1, 0): QQ(-1)}
        gp[8][1] = {(0, 1): QQ(-1)}

        m_rows = [[q.get((min(k, _IDX111), max(k, _IDX111)), QQ(0))
                   for k in _UNKNOWN] for q in quads]
        basis, pivots = _row_reduce_basis(m_rows, len(_UNKNOWN))
        if len(pivots) < len(_UNKNOWN):
            raise ArithmeticError("quadric relations do not determine the "
                                  "coordinate expansions")
        # pick six independent rows of m_rows for the solve
        sel, chosen = [], []
        for ri, row in enumerate(m_rows):
            test, _ = _row_reduce_basis(chosen + [row], len(_UNKNOWN))
            if len(test) > len(chosen):
                chosen = test
                sel.append(ri)
            if len(sel) == len(_UNKNOWN):
                break
        minv = _invert_matrix([m_rows[ri] for ri in sel])

        for m in range(1, trunc):
            resid = [{} for _ in quads]
            for qi, q in enumerate(quads):
                acc = {}
                for (a, b), cab in q.items():
                    for i in range(m + 1):
                        da, db = gp[a][i], gp[b][m - i]
                        if not da or not db:
                            continue
                        for e, c in _conv(da, db).items():
                            acc[e] = acc.get(e, QQ(0)) + cab * c
                resid[qi] = acc
            for i in range(m + 1):
                mono = (i, m - i)
                r = [resid[qi].get(mono, QQ(0)) for qi in range(len(quads))]
                if all(v == 0 for v in r):
                    continue
                y = [-sum(minv[a][b] * r[sel[b]] for b in range(len(sel)))
                     for a in range(len(_UNKNOWN))]
                for qi in range(len(quads)):
                    chk = r[qi] + sum(m_rows[qi][k] * y[k]
                                      for k in range(len(_UNKNOWN)))
                    if chk != 0:
                        raise ArithmeticError(
                            "inconsistent coordinate recursion at degree %d" % m)
                for k, idx in enumerate(_UNKNOWN):
                    if y[k] != 0:
                        gp[idx][m][mono] = y[k]

        self.y_series = []
        for k in range(9):
            coeffs = {}
            for d in range(trunc):
                coeffs.update(gp[k][d])
            self.y_series.append(TSeries(QRING, 2, trunc, coeffs))
        y0 = self.y_series[0]
        if y0.low_degree() != 3 or y0.coefficient((3, 0)) != -1:
            raise ArithmeticError("unexpected leading behaviour of 1/X111")

    def x_series(self, name):
        """The coordinate X_<name> as a series in (T1, T2), with a pole in
        T1 only."""
        k = COORD_NAMES.index(name)
        return self.y_series[k] / self.y_series[0]

    # -- invariant differentials --------------------------------------------

    def _differentials(self):
        y0 = self.y_series[0]
        e1 = self.y_series[3] / y0          # x1 + x2
        e2 = -(self.y_series[2] / y0)       # x1 * x2
        v1 = self.y_series[7] / y0
        v0 = self.y_series[6] / y0
        nsym = v1 * v1 * e2 + v1 * v0 * e1 + v0 * v0    # y1 * y2
        de1 = [e1.diff(0), e1.diff(1)]
        de2 = [e2.diff(0), e2.diff(1)]
        two_n = nsym + nsym
        a = [[None, None], [None, None]]
        for j in range(2):
            a[0][j] = (v0 * de1[j] + v1 * de2[j]) / two_n
            a[1][j] = ((v1 * e2 + v0 * e1) * de1[j] - v0 * de2[j]) / two_n
        for i in range(2):
            for j in range(2):
                s = a[i][j]
                if any(e[0] < 0 for e in s.coeffs):
                    raise ArithmeticError("invariant differential has a pole")
                want = QQ(1) if i == j else QQ(0)
                if s.constant_term() != want:
                    raise ArithmeticError("differentials are not normalized")
        t = min(s.trunc for row in a for s in row)
        self.jac = [[s.truncate(t) for s in row] for row in a]
        if not (self.jac[0][0].diff(1) - self.jac[0][1].diff(0)).is_zero() or \
           not (self.jac[1][0].diff(1) - self.jac[1][1].diff(0)).is_zero():
            raise ArithmeticError("differentials are not closed")

    # -- logarithm, exponential, invariant derivations ----------------------

    def _logarithm(self):
        logs = []
        for i in range(2):
            part1 = TSeries(QRING, 2, self.jac[i][0].trunc,
                            {e: c for e, c in self.jac[i][0].coeffs.items()
                             if e[1] == 0}).integrate(0)
            part2 = self.jac[i][1].integrate(1)
            logs.append(part1 + part2)
        self.log = logs
        # E with L(E(z)) = z, by degree-raising fixed point
        t = min(s.trunc for s in logs)
        z = [TSeries.variable(QRING, 2, t, 0), TSeries.variable(QRING, 2, t, 1)]
        h = [logs[i].truncate(t) - z[i] for i in range(2)]
        e = [z[0], z[1]]
        for _ in range(t):
            e_new = [z[i] - h[i].subs(e) for i in range(2)]
            if all((e_new[i] - e[i]).is_zero() for i in range(2)):
                break
            e = e_new
        self.exp = e
        for i in range(2):
            chk = logs[i].truncate(t).subs(self.exp)
            if not (chk - z[i]).is_zero():
                raise ArithmeticError("exponential does not invert the log")
        # invariant derivations D_i = sum_j c[i][j] d/dT_j, c = (jac^-1)^T
        det = self.jac[0][0] * self.jac[1][1] - self.jac[0][1] * self.jac[1][0]
        inv = [[self.jac[1][1] / det, -(self.jac[0][1] / det)],
               [-(self.jac[1][0] / det), self.jac[0][0] / det]]
        self.c_matrix = [[inv[j][i] for j in range(2)] for i in range(2)]

    def deriv_invariant(self, i, s):
        """Apply the invariant derivation D_i to a series in (T1, T2)."""
        return self.c_matrix[i][0] * s.diff(0) + self.c_matrix[i][1] * s.diff(1)

    def group_law(self, trunc):
        """F(T, S) = E(L(T) + L(S)) over variables (T1, T2, S1, S2)."""
        vs = [TSeries.variable(QRING, 4, trunc, k) for k in range(4)]
        sums = []
        for i in range(2):
            lt = self.log[i].truncate(trunc).subs([vs[0], vs[1]])
            ls = self.log[i].truncate(trunc).subs([vs[2], vs[3]])
            sums.append(lt + ls)
        return [self.exp[i].truncate(trunc).subs(sums) for i in range(2)]
