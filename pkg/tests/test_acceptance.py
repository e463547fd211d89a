"""Acceptance suite: one pass/fail line per criterion.

Run with plain pytest; each criterion prints a single line of the form
"criterion N (<summary>): PASS (<elapsed>)" on the live terminal.
"""

import os
import subprocess
import sys
import time

HERE = os.path.dirname(os.path.abspath(__file__))

import pytest

from g2heights.chabauty import (BihyperCurve, rho_expansion,
                                solve_height_form, strassman_report)
from g2heights.cli import main as cli_main
from g2heights.curve import CurvePoint, Genus2Curve, JacPoint, \
    mumford_from_points
from g2heights.formal import FormalGroup
from g2heights.heights import (LogMultiple, canonical_b_matrix,
                               cg_pairing_split, global_height,
                               neron_function_at_p, neron_function_away)
from g2heights.kedlaya import unit_root_b_matrix
from g2heights.rat import QQ
from g2heights.series import QRING
from g2heights.sigma import sigma_custom


def digits(x, lo, hi):
    d = dict((k, v) for v, k in x.digits())
    return [d.get(i, 0) for i in range(lo, hi)]


def report(capsys, num, summary, ok, t0, budget):
    dt = time.time() - t0
    verdict = "PASS" if (ok and dt <= budget) else "FAIL"
    with capsys.disabled():
        print("criterion %d (%s): %s (%.1fs)" % (num, summary, verdict, dt))
    assert ok, summary
    assert dt <= budget, "over the %ds budget: %.1fs" % (budget, dt)


def test_criterion_1_cm_curve_heights(capsys):
    """CM curve y^2 = x^5 - 1 at p = 10^6 + 81, naive sigma: local and
    global height digits, and the away values at 2 and 5."""
    t0 = time.time()
    p, prec = 10 ** 6 + 81, 20
    curve = Genus2Curve([0, 0, 0, 0, -1])
    P = JacPoint.from_mumford(QRING, [2, 2, 1], [-1, 1])
    hint = 1001600512000
    fg = FormalGroup(curve, prec + 5)
    cmat = [[QQ(0), QQ(0)], [QQ(0), QQ(0)]]
    lam = neron_function_at_p(P, curve, p, prec, cmat=cmat, fg=fg,
                              order_hint=hint)
    ok = digits(lam, 1, 20) == [
        790065, 875980, 899921, 943161, 701712, 507099, 399164, 725683,
        423209, 174881, 96387, 973189, 88349, 970515, 117600, 519019,
        639751, 971144, 996211]
    ok = ok and neron_function_away(P, curve, p, 2).r == 0
    ok = ok and neron_function_away(P, curve, p, 5).r == QQ(-1, 2)
    h = global_height(P, curve, p, prec, cmat=cmat, fg=fg, order_hint=hint)
    ok = ok and digits(h, 1, 20) == [
        227482, 997009, 96340, 795588, 602398, 562446, 378071, 977705,
        744905, 778414, 506461, 834642, 129041, 687989, 134678, 452034,
        429426, 552523, 572577]
    report(capsys, 1, "CM curve heights to O(p^20)", ok, t0, 300)


def test_criterion_2_model_curve_heights(capsys):
    """y^2 = x^3 (x-1)^2 + 1 at p = 11: unit-root constants, canonical
    local heights, local pairings, and a global height."""
    t0 = time.time()
    p, prec = 11, 9
    curve = Genus2Curve([-2, 1, 0, 0, 1])
    b11, b12, b22 = unit_root_b_matrix(curve, p, 10)
    ok = digits(b11, 0, 10) == [6, 6, 3, 0, 6, 2, 10, 1, 6, 9]
    ok = ok and digits(b12, 0, 10) == [3, 10, 10, 0, 1, 1, 5, 1, 3, 4]
    ok = ok and digits(b22, 0, 10) == [4, 3, 6, 6, 9, 10, 4, 5, 2, 2]
    fg = FormalGroup(curve, prec + 5)
    cmat = canonical_b_matrix(curve, p, prec + 10)
    n1 = CurvePoint(QQ(1), QQ(1))
    n2 = CurvePoint(QQ(0), QQ(-1))
    vs = (mumford_from_points(n2, n1, curve),
          mumford_from_points(n2, n2, curve),
          mumford_from_points(n1, n1, curve))
    expect = ([9, 8, 8, 4, 5, 10, 8, 9], [0, 0, 2, 6, 10, 10, 9, 10],
              [2, 4, 2, 6, 2, 5, 3, 1])
    for v, e in zip(vs, expect):
        lam = neron_function_at_p(v, curve, p, prec, cmat=cmat, fg=fg)
        ok = ok and digits(lam, 1, 9) == e
    P1 = CurvePoint(QQ(1), QQ(-1))
    P2 = CurvePoint(QQ(0), QQ(1))
    pair_p = cg_pairing_split(curve, p, p, P1, P2, prec=prec, cmat=cmat,
                              fg=fg)
    ok = ok and digits(pair_p, 1, 9) == [3, 4, 4, 1, 1, 3, 3, 7]
    ok = ok and cg_pairing_split(curve, p, 2, P1, P2) == \
        LogMultiple(QQ(5, 6), 2)
    D1 = mumford_from_points(P1, n2, curve)
    h = global_height(D1, curve, p, prec, cmat=cmat, fg=fg)
    ok = ok and digits(h, 1, 9) == [8, 0, 0, 2, 6, 6, 5, 9]
    report(capsys, 2, "unit-root constants, pairings, heights at p = 11",
           ok, t0, 120)


def test_criterion_3_sigma_golden(capsys):
    """sigma^(c) agrees with the closed-form degree-8 expansion, exactly
    over Q, for random curves and shift matrices."""
    import random
    if HERE not in sys.path:
        sys.path.insert(0, HERE)
    from _golden import golden_sigma_degree8
    t0 = time.time()
    rng = random.Random(8261)
    ok = True
    done = 0
    while done < 3:
        b = [rng.randint(-4, 4) for _ in range(5)]
        try:
            curve = Genus2Curve(b)
        except ValueError:
            continue
        c = [QQ(rng.randint(-6, 6), rng.randint(1, 4)) for _ in range(3)]
        fg = FormalGroup(curve, 13)
        sig = sigma_custom(fg, [[c[0], c[1]], [c[1], c[2]]], 9)
        want = golden_sigma_degree8(b, c)
        got = {e: v for e, v in sig.coeffs.items() if sum(e) <= 8}
        for e in set(want) | set(got):
            ok = ok and got.get(e, QQ(0)) == want.get(e, QQ(0))
        done += 1
    report(capsys, 3, "golden sigma expansion through degree 8", ok, t0, 60)


def test_criterion_4_chabauty_disc(capsys):
    """The quadratic-Chabauty expansion on the disc of (0, 4) mod 5 and
    its root analysis."""
    t0 = time.time()
    p, prec, tdeg = 5, 4, 6
    X = BihyperCurve([1, 0, 0, -1, 0, 1])
    fg1 = FormalGroup(X.c1, 13)
    fg2 = FormalGroup(X.c2, 13)
    a1, r1 = solve_height_form(
        mumford_from_points(CurvePoint(QQ(0), QQ(1)),
                            CurvePoint(QQ(1), QQ(1)), X.c1),
        mumford_from_points(CurvePoint(QQ(-1), QQ(1)),
                            CurvePoint(QQ(2), QQ(5)), X.c1),
        X.c1, p, 12, fg=fg1)
    a2, r2 = solve_height_form(
        mumford_from_points(CurvePoint(QQ(0), QQ(1)),
                            CurvePoint(QQ(1), QQ(1)), X.c2),
        mumford_from_points(CurvePoint(QQ(1), QQ(1)),
                            CurvePoint(QQ(1, 4), QQ(31, 32)), X.c2),
        X.c2, p, 12, fg=fg2)
    ok = (r1.is_zeroish() or r1.val >= 5) and (r2.is_zeroish() or r2.val >= 5)
    rho = rho_expansion(X, 0, -1, p, prec, a1, a2, tdeg=tdeg,
                        fg1=fg1, fg2=fg2)
    expect = {0: {1: 2, 2: 2}, 2: {2: 2, 3: 2}, 4: {3: 3}}
    for i in range(tdeg):
        c = rho.coefficient((i,))
        got = {} if (c.is_exact_zero() or c.is_zeroish()) else \
            dict((k, v) for v, k in c.digits() if k < 4)
        ok = ok and got == expect.get(i, {})
    reps = [strassman_report(rho, u) for u in
            (0, LogMultiple(QQ(8, 3), 2), LogMultiple(QQ(-2), 2))]
    ok = ok and reps[0]["status"] == "no-roots"
    ok = ok and reps[1]["status"] == "accounted" and reps[1]["bound"] == 2 \
        and reps[1]["t0_multiplicity"] == 2
    ok = ok and reps[2]["status"] == "no-roots"
    report(capsys, 4, "residue-disc expansion and root analysis", ok, t0, 300)


def test_criterion_5_partition_check(capsys):
    """Exhaustive nonexistence certificate through the CLI."""
    t0 = time.time()
    code = cli_main(["partition-check", "--max", "41"])
    out = capsys.readouterr().out
    ok = code == 0 and "no valid partition" in out
    report(capsys, 5, "partition-check --max 41", ok, t0, 600)


PROPERTY_SUITES = [
    "test_formal.py",
    "test_sigma.py::test_sigma_ode_residual",
    "test_divpoly.py::test_sigma_phi_duplication",
    "test_divpoly.py::test_vanishing_on_theta_over_fp",
    "test_heights.py::test_quasi_quadraticity_at_p",
    "test_heights.py::test_quasi_quadraticity_away",
    "test_heights.py::test_global_parallelogram_law",
    "test_heights.py::test_character_product_formula",
    "test_kedlaya.py::test_charpoly_against_point_counts",
    "test_integrate.py::test_tiny_integrals_match_jacobian_log",
    "test_integrate.py::test_path_additivity",
]


def test_criterion_6_property_suites(capsys):
    """The property suites across the modules, all required to pass."""
    t0 = time.time()
    ids = [os.path.join(HERE, s) for s in PROPERTY_SUITES]
    r = subprocess.run([sys.executable, "-m", "pytest", "-q", *ids],
                       capture_output=True, text=True)
    ok = r.returncode == 0
    if not ok:
        with capsys.disabled():
            print(r.stdout[-2000:])
    report(capsys, 6, "property suites", ok, t0, 600)
