import random

import pytest

from _golden import golden_sigma_degree8
from g2heights.curve import Genus2Curve
from g2heights.formal import FormalGroup
from g2heights.rat import QQ
from g2heights.series import QRING, TSeries
from g2heights.sigma import (log_sigma_unit, quadratic_log_shift,
                             sigma_custom, sigma_naive)


def random_cases(seed, n=3):
    rng = random.Random(seed)
    cases = []
    while len(cases) < n:
        b = [rng.randint(-4, 4) for _ in range(5)]
        try:
            curve = Genus2Curve(b)
        except ValueError:
            continue
        c = [QQ(rng.randint(-6, 6), rng.randint(1, 4)) for _ in range(3)]
        cases.append((curve, c))
    return cases


@pytest.mark.parametrize("curve,c", random_cases(20260823))
def test_sigma_matches_golden_degree8(curve, c):
    fg = FormalGroup(curve, 13)
    cmat = [[c[0], c[1]], [c[1], c[2]]]
    sig = sigma_custom(fg, cmat, 9)
    assert sig.trunc >= 9
    want = golden_sigma_degree8(curve.b, c)
    got = {e: v for e, v in sig.coeffs.items() if sum(e) <= 8}
    for e in set(want) | set(got):
        assert got.get(e, QQ(0)) == want.get(e, QQ(0)), (e, curve.b, c)


def test_sigma_is_odd():
    fg = FormalGroup(Genus2Curve([1, -1, 2, 0, 3]), 13)
    sig = sigma_custom(fg, [[QQ(1, 2), QQ(-1)], [QQ(-1), QQ(2, 3)]], 9)
    neg = sig.subs([-TSeries.variable(QRING, 2, sig.trunc, 0),
                    -TSeries.variable(QRING, 2, sig.trunc, 1)])
    assert (neg + sig).is_zero()


def test_sigma_leading_term():
    fg = FormalGroup(Genus2Curve([-2, 1, 0, 0, 1]), 8)
    sig = sigma_naive(fg, 7)
    lead = {e: v for e, v in sig.coeffs.items() if sum(e) == 1}
    assert lead == {(1, 0): QQ(1)}


@pytest.mark.parametrize("b,c", [
    ([-2, 1, 0, 0, 1], [QQ(0), QQ(0), QQ(0)]),
    ([0, 0, 3, -2, 1], [QQ(1, 2), QQ(-1, 3), QQ(2)]),
])
def test_sigma_ode_residual(b, c):
    """D_i D_j log sigma = -X_ij + c_ij, exactly to truncation."""
    curve = Genus2Curve(b)
    fg = FormalGroup(curve, 13)
    cmat = [[c[0], c[1]], [c[1], c[2]]]
    hl = log_sigma_unit(fg, 9)
    shift = quadratic_log_shift(fg, cmat, hl.trunc)
    ls = hl + shift
    t1 = TSeries.variable(QRING, 2, ls.trunc, 0)
    for i in range(2):
        di = fg.deriv_invariant(i, ls) + fg.deriv_invariant(i, t1) / t1
        for j in range(2):
            dij = fg.deriv_invariant(j, di)
            resid = dij + fg.x_series("%d%d" % (min(i, j) + 1, max(i, j) + 1))
            resid = resid - TSeries.const(QRING, 2, resid.trunc, cmat[i][j])
            assert resid.truncate(min(resid.trunc, 6)).is_zero(), (i, j)
