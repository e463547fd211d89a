"""Command-line front end.

Subcommands: expand, sigma, frobenius, divpoly, neron, height, cg-pair,
integrate, qc, partition-check.

Configuration files are flat "key = value" text; '#' starts a comment.
Rationals are written a/b, lists are comma separated.

  curve file:    b = b1, b2, b3, b4, b5        (y^2 = x^5 + b1 x^4 + ... + b5)
  point file:    x = ..., y = ...              (a point of the curve)
                 or infinity = true
  divisor file:  p1 = x1, y1  and  p2 = x2, y2 (the class [P1 + P2 - 2*oo])
                 or u = u0, u1, u2  and  v = v0, v1   (Mumford coefficients)
                 or point = x, y                      (the class [P - oo])
  qc curve file: f = f0, f1, f2, f3, f4, f5    (y^2 = f5 x^10 + ... + f0)
                 disc1 = x0, y0  disc2 = ...   (residue-disc centers)
  generators:    side1.gen1, side1.gen2, side2.gen1, side2.gen2,
                 each a divisor in the inline form "x1, y1 ; x2, y2"
  upsilon file:  upsilon1 = 0   upsilon2 = 8/3 log 2   ...

Exit codes: 0 success, 2 domain or parse error, 3 precision exhausted,
4 golden-file mismatch.
"""

import argparse
import sys

from .chabauty import (BihyperCurve, partition_check, rho_expansion,
                       solve_height_form, strassman_report)
from .curve import (CurvePoint, DegenerateError, Genus2Curve, JacPoint, Poly,
                    QRING, iota, mumford_from_points)
from .divpoly import division_value
from .formal import FormalGroup
from .heights import (LogMultiple, cg_pairing_split, global_height,
                      global_height_breakdown, neron_function_at_p,
                      neron_function_away)
from .integrate import integrate_holomorphic
from .kedlaya import (frobenius_charpoly, frobenius_matrix, is_ordinary,
                      unit_root_b_matrix)
from .padic import PadicNumber, PrecisionError
from .rat import QQ, as_rational
from .sigma import sigma_canonical, sigma_custom, sigma_naive

NAIVE_SHIFT = [[QQ(0), QQ(0)], [QQ(0), QQ(0)]]


class CliError(Exception):
    pass


# -- configuration parsing --------------------------------------------------

def parse_config(path):
    data = {}
    try:
        fh = open(path)
    except OSError as e:
        raise CliError(str(e))
    with fh:
        for ln, raw in enumerate(fh, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise CliError("%s:%d: expected key = value" % (path, ln))
            k, v = line.split("=", 1)
            data[k.strip()] = v.strip()
    return data


def parse_rat(s, where=""):
    try:
        if "/" in s:
            a, b = s.split("/")
            return QQ(int(a.strip()), int(b.strip()))
        return QQ(int(s.strip()))
    except (ValueError, ZeroDivisionError):
        raise CliError("bad rational %r %s" % (s, where))


def parse_rat_list(s, where=""):
    return [parse_rat(t, where) for t in s.replace(",", " ").split()]


def load_curve(path):
    data = parse_config(path)
    if "b" not in data:
        raise CliError("%s: missing key 'b'" % path)
    b = parse_rat_list(data["b"], "in %s" % path)
    if len(b) != 5 or any(x.denominator != 1 for x in b):
        raise CliError("%s: b must be five integers" % path)
    try:
        return Genus2Curve([int(x) for x in b])
    except ValueError as e:
        raise CliError("%s: %s" % (path, e))


def _curve_point(data, curve, path):
    if data.get("infinity", "").lower() in ("true", "1", "yes"):
        return CurvePoint.infinity()
    if "x" not in data or "y" not in data:
        raise CliError("%s: need x and y (or infinity = true)" % path)
    P = CurvePoint(parse_rat(data["x"]), parse_rat(data["y"]))
    if not curve.is_on_curve(P.x, P.y):
        raise CliError("%s: point is not on the curve" % path)
    return P


def load_curve_point(path, curve):
    return _curve_point(parse_config(path), curve, path)


def _divisor_from_pair(s, curve, where):
    halves = s.split(";")
    pts = []
    for h in halves:
        xy = parse_rat_list(h, where)
        if len(xy) != 2:
            raise CliError("bad point %r %s" % (h, where))
        if not curve.is_on_curve(xy[0], xy[1]):
            raise CliError("point %r is not on the curve %s" % (h, where))
        pts.append(CurvePoint(xy[0], xy[1]))
    if len(pts) == 1:
        return iota(pts[0])
    if len(pts) == 2:
        return mumford_from_points(pts[0], pts[1], curve)
    raise CliError("divisor %s must list one or two points" % where)


def load_divisor(path, curve):
    data = parse_config(path)
    if "u" in data or "v" in data:
        u = parse_rat_list(data.get("u", "1"), "in %s" % path)
        v = parse_rat_list(data.get("v", "0"), "in %s" % path)
        P = JacPoint(Poly(QRING, u), Poly(QRING, v))
        try:
            P.validate(curve)
        except ValueError as e:
            raise CliError("%s: %s" % (path, e))
        return P
    if "point" in data:
        return _divisor_from_pair(data["point"], curve, "in %s" % path)
    if "p1" in data and "p2" in data:
        return _divisor_from_pair(data["p1"] + ";" + data["p2"], curve,
                                  "in %s" % path)
    raise CliError("%s: need u/v, point, or p1/p2" % path)


def parse_cmatrix(s):
    cs = parse_rat_list(s, "in --c")
    if len(cs) != 3:
        raise CliError("--c must give c11, c12, c22")
    return [[cs[0], cs[1]], [cs[1], cs[2]]]


def parse_upsilon(s, where=""):
    parts = s.split()
    if len(parts) == 1:
        return parse_rat(parts[0], where)
    if len(parts) == 3 and parts[1] == "log":
        return LogMultiple(parse_rat(parts[0], where), int(parts[2]))
    raise CliError("bad upsilon %r %s (want 'r' or 'r log q')" % (s, where))


# -- output helpers ---------------------------------------------------------

def fmt_value(v):
    if isinstance(v, PadicNumber):
        return str(v)
    if isinstance(v, LogMultiple):
        return repr(v)
    return str(as_rational(v))


def emit(out, key, value):
    out.append("%s = %s" % (key, value))


# -- subcommands ------------------------------------------------------------

def cmd_expand(args, out):
    curve = load_curve(args.curve)
    # the expansion machinery needs a few guard degrees to set itself up
    fg = FormalGroup(curve, max(args.degree + 2, 8))
    for name in ("11", "12", "22", "111", "112", "122", "222"):
        emit(out, "X%s" % name, fg.x_series(name).truncate(args.degree))
    for i in (0, 1):
        emit(out, "L%d" % (i + 1), fg.log[i].truncate(args.degree))
        emit(out, "E%d" % (i + 1), fg.exp[i].truncate(args.degree))
    fdeg = min(args.degree, 7)
    flaw = fg.group_law(fdeg)
    for i in (0, 1):
        emit(out, "F%d" % (i + 1), flaw[i])
    return 0


def cmd_sigma(args, out):
    curve = load_curve(args.curve)
    fg = FormalGroup(curve, max(args.degree + 5, 8))
    if args.mode == "naive":
        sig = sigma_naive(fg, args.degree)
    elif args.mode == "custom":
        if args.c is None:
            raise CliError("--mode custom needs --c c11, c12, c22")
        sig = sigma_custom(fg, parse_cmatrix(args.c), args.degree)
    else:
        if args.prime is None or args.prec is None:
            raise CliError("--mode canonical needs --prime and --prec")
        from .heights import canonical_b_matrix
        b = canonical_b_matrix(curve, args.prime, args.prec)
        sig = sigma_canonical(fg, b, args.prime, args.prec, args.degree)
    emit(out, "sigma", sig)
    return 0


def cmd_frobenius(args, out):
    curve = load_curve(args.curve)
    p, prec = args.prime, args.prec
    m = frobenius_matrix(curve, p, prec)
    for i in range(4):
        emit(out, "M%d" % (i + 1),
             ", ".join(str(PadicNumber.from_rat(c, p, prec)) for c in m[i]))
    a1, a2 = frobenius_charpoly(curve, p)
    emit(out, "charpoly",
         "t^4 + (%d)*t^3 + (%d)*t^2 + (%d)*t + %d" % (a1, a2, p * a1, p * p))
    ordinary = is_ordinary(curve, p)
    emit(out, "ordinary", ordinary)
    if ordinary:
        b11, b12, b22 = unit_root_b_matrix(curve, p, prec)
        emit(out, "b11", b11)
        emit(out, "b12", b12)
        emit(out, "b22", b22)
    return 0


def cmd_divpoly(args, out):
    curve = load_curve(args.curve)
    P = load_divisor(args.point, curve)
    emit(out, "phi_%d" % args.n, fmt_value(division_value(P, args.n, curve)))
    return 0


def _shift_matrix(args):
    if args.mode == "naive":
        return NAIVE_SHIFT
    if args.mode == "custom":
        if args.c is None:
            raise CliError("--mode custom needs --c c11, c12, c22")
        return parse_cmatrix(args.c)
    return None


def cmd_neron(args, out):
    curve = load_curve(args.curve)
    P = load_divisor(args.point, curve)
    p, q = args.prime, args.place
    emit(out, "place", q)
    if q == p:
        lam = neron_function_at_p(P, curve, p, args.prec,
                                  cmat=_shift_matrix(args),
                                  order_hint=args.order_hint)
        emit(out, "value", lam)
    else:
        lam = neron_function_away(P, curve, p, q)
        emit(out, "rational_multiplier", lam.r)
        emit(out, "value", repr(lam))
    return 0


def cmd_height(args, out):
    curve = load_curve(args.curve)
    P = load_divisor(args.point, curve)
    cmat = _shift_matrix(args)
    if args.breakdown:
        lam_p, away = global_height_breakdown(P, curve, args.prime, args.prec,
                                              cmat=cmat,
                                              order_hint=args.order_hint)
        emit(out, "lambda_%d" % args.prime, lam_p)
        h = lam_p
        for q in sorted(away):
            emit(out, "lambda_%d" % q, repr(away[q]))
            h = h + away[q].to_padic(args.prime, args.prec)
        emit(out, "height", h.with_prec(args.prec))
    else:
        emit(out, "height",
             global_height(P, curve, args.prime, args.prec, cmat=cmat,
                           order_hint=args.order_hint))
    return 0


def cmd_cg_pair(args, out):
    curve = load_curve(args.curve)
    P1 = load_curve_point(args.d1, curve)
    P2 = load_curve_point(args.d2, curve)
    val = cg_pairing_split(curve, args.prime, args.place, P1, P2,
                           prec=args.prec, cmat=_shift_matrix(args),
                           order_hint=args.order_hint)
    emit(out, "place", args.place)
    if isinstance(val, LogMultiple):
        emit(out, "rational_multiplier", val.r)
        emit(out, "value", repr(val))
    else:
        emit(out, "value", val)
    return 0


def cmd_integrate(args, out):
    curve = load_curve(args.curve)
    P1 = load_curve_point(getattr(args, "from"), curve)
    P2 = load_curve_point(args.to, curve)
    vals = integrate_holomorphic(P1, P2, curve, args.prime, args.prec,
                                 order_hint=args.order_hint)
    emit(out, "integral_omega%d" % args.omega, vals[args.omega - 1])
    return 0


def _qc_generators(path, X):
    data = parse_config(path)
    gens = []
    for side, curve in (("side1", X.c1), ("side2", X.c2)):
        pair = []
        for g in ("gen1", "gen2"):
            key = "%s.%s" % (side, g)
            if key not in data:
                raise CliError("%s: missing key %s" % (path, key))
            pair.append(_divisor_from_pair(data[key], curve,
                                           "at %s in %s" % (key, path)))
        gens.append(pair)
    return gens


def cmd_qc(args, out):
    data = parse_config(args.curve_x)
    if "f" not in data:
        raise CliError("%s: missing key 'f'" % args.curve_x)
    f = parse_rat_list(data["f"], "in %s" % args.curve_x)
    if len(f) != 6 or any(c.denominator != 1 for c in f):
        raise CliError("%s: f must be six integers" % args.curve_x)
    X = BihyperCurve([int(c) for c in f])
    discs = [parse_rat_list(v, "at %s" % k) for k, v in sorted(data.items())
             if k.startswith("disc")]
    if not discs:
        raise CliError("%s: no residue-disc centers (disc1 = x0, y0)"
                       % args.curve_x)
    ups = [(k, parse_upsilon(v, "at %s" % k))
           for k, v in sorted(parse_config(args.upsilon).items())
           if k.startswith("upsilon")]
    if not ups:
        raise CliError("%s: no upsilon values" % args.upsilon)
    (g1a, g1b), (g2a, g2b) = _qc_generators(args.generators, X)
    p, prec, tdeg = args.prime, args.prec, args.t_degree
    fg1 = FormalGroup(X.c1, max(prec, tdeg) + 5)
    fg2 = FormalGroup(X.c2, max(prec, tdeg) + 5)
    alphas1, r1 = solve_height_form(g1a, g1b, X.c1, p, prec + 6, fg=fg1)
    alphas2, r2 = solve_height_form(g2a, g2b, X.c2, p, prec + 6, fg=fg2)
    for name, r in (("side1", r1), ("side2", r2)):
        if not (r.is_zeroish() or r.val >= prec - 1):
            raise ArithmeticError("%s height form fails its quadraticity "
                                  "check: residual %s" % (name, r))
    all_decided = True
    for x0, y0 in discs:
        emit(out, "disc", "%s, %s" % (x0, y0))
        rho = rho_expansion(X, x0, y0, p, prec, alphas1, alphas2, tdeg=tdeg,
                            fg1=fg1, fg2=fg2)
        emit(out, "rho", rho)
        for key, u in ups:
            rep = strassman_report(rho, u)
            emit(out, "%s.value" % key, fmt_value(u))
            emit(out, "%s.root_bound" % key, rep["bound"])
            emit(out, "%s.t0_multiplicity" % key, rep["t0_multiplicity"])
            emit(out, "%s.status" % key, rep["status"])
            if rep["status"] == "undecided":
                all_decided = False
    emit(out, "analysis", "decided" if all_decided else "advisory")
    return 0


def cmd_partition_check(args, out):
    ok = partition_check(args.max)
    emit(out, "range", args.max)
    emit(out, "classes", 4)
    out.append("valid partition exists" if ok else "no valid partition")
    return 0


# -- driver -----------------------------------------------------------------

def build_parser():
    ap = argparse.ArgumentParser(
        prog="g2heights",
        description="p-adic heights and quadratic Chabauty for odd-degree "
                    "genus-2 curves")
    ap.add_argument("--golden", metavar="FILE",
                    help="compare output to a recorded golden file")
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, fn, **kw):
        sp = sub.add_parser(name, **kw)
        sp.set_defaults(fn=fn)
        return sp

    sp = add("expand", cmd_expand, help="formal-group expansions")
    sp.add_argument("--curve", required=True)
    sp.add_argument("--degree", type=int, required=True)
    sp.add_argument("--format", choices=("text", "structured"),
                    default="text")

    sp = add("sigma", cmd_sigma, help="sigma function series")
    sp.add_argument("--curve", required=True)
    sp.add_argument("--mode", choices=("naive", "canonical", "custom"),
                    default="naive")
    sp.add_argument("--c", help="c11, c12, c22 for --mode custom")
    sp.add_argument("--degree", type=int, required=True)
    sp.add_argument("--prime", type=int)
    sp.add_argument("--prec", type=int)

    sp = add("frobenius", cmd_frobenius, help="Frobenius matrix and "
             "unit-root constants")
    sp.add_argument("--curve", required=True)
    sp.add_argument("--prime", type=int, required=True)
    sp.add_argument("--prec", type=int, required=True)

    sp = add("divpoly", cmd_divpoly, help="division values")
    sp.add_argument("--curve", required=True)
    sp.add_argument("--point", required=True)
    sp.add_argument("--n", type=int, required=True)

    sp = add("neron", cmd_neron, help="local Neron function")
    sp.add_argument("--curve", required=True)
    sp.add_argument("--point", required=True)
    sp.add_argument("--prime", type=int, required=True)
    sp.add_argument("--place", type=int, required=True)
    sp.add_argument("--prec", type=int, default=10)
    sp.add_argument("--mode", choices=("naive", "canonical", "custom"),
                    default="canonical")
    sp.add_argument("--c")
    sp.add_argument("--order-hint", type=int, default=None,
                    dest="order_hint",
                    help="multiple of #J(F_p), for large p")

    sp = add("height", cmd_height, help="global p-adic height")
    sp.add_argument("--curve", required=True)
    sp.add_argument("--point", required=True)
    sp.add_argument("--prime", type=int, required=True)
    sp.add_argument("--prec", type=int, required=True)
    sp.add_argument("--mode", choices=("naive", "canonical", "custom"),
                    default="canonical")
    sp.add_argument("--c")
    sp.add_argument("--breakdown", action="store_true",
                    help="also emit the per-place values")
    sp.add_argument("--order-hint", type=int, default=None,
                    dest="order_hint",
                    help="multiple of #J(F_p), for large p")

    sp = add("cg-pair", cmd_cg_pair, help="Coleman-Gross local pairing")
    sp.add_argument("--curve", required=True)
    sp.add_argument("--d1", required=True)
    sp.add_argument("--d2", required=True)
    sp.add_argument("--prime", type=int, required=True)
    sp.add_argument("--place", type=int, required=True)
    sp.add_argument("--prec", type=int, default=10)
    sp.add_argument("--mode", choices=("naive", "canonical", "custom"),
                    default="canonical")
    sp.add_argument("--c")
    sp.add_argument("--order-hint", type=int, default=None,
                    dest="order_hint",
                    help="multiple of #J(F_p), for large p")

    sp = add("integrate", cmd_integrate, help="integrals of dx/2y, x dx/2y")
    sp.add_argument("--curve", required=True)
    sp.add_argument("--from", required=True)
    sp.add_argument("--to", required=True)
    sp.add_argument("--omega", type=int, choices=(1, 2), required=True)
    sp.add_argument("--prime", type=int, required=True)
    sp.add_argument("--prec", type=int, required=True)
    sp.add_argument("--order-hint", type=int, default=None,
                    dest="order_hint",
                    help="multiple of #J(F_p), for large p")

    sp = add("qc", cmd_qc, help="quadratic-Chabauty disc analysis")
    sp.add_argument("--curve-x", required=True, dest="curve_x")
    sp.add_argument("--prime", type=int, required=True)
    sp.add_argument("--generators", required=True)
    sp.add_argument("--upsilon", required=True)
    sp.add_argument("--t-degree", type=int, default=8, dest="t_degree")
    sp.add_argument("--prec", type=int, required=True)

    sp = add("partition-check", cmd_partition_check,
             help="sum-free-style partition search")
    sp.add_argument("--max", type=int, required=True)
    return ap


def main(argv=None):
    ap = build_parser()
    args = ap.parse_args(argv)
    out = []
    try:
        status = args.fn(args, out)
    except PrecisionError as e:
        print("precision exhausted: %s" % e, file=sys.stderr)
        return 3
    except (CliError, DegenerateError, ValueError, ZeroDivisionError,
            ArithmeticError) as e:
        print("error: %s" % e, file=sys.stderr)
        return 2
    text = "\n".join(str(line) for line in out)
    if args.golden:
        try:
            with open(args.golden) as fh:
                want = fh.read().rstrip("\n")
        except OSError as e:
            print("error: %s" % e, file=sys.stderr)
            return 2
        if text != want:
            print(text)
            print("golden mismatch against %s" % args.golden, file=sys.stderr)
            return 4
    print(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
