"""Command-line front end.

Every command prints one JSON document (or CSV with ``--csv``) on stdout.
Errors are reported as ``{"error": {"code": ..., "message": ...}}`` on stderr.

Exit codes: 0 success, 1 bound violation, 2 input error, 3 convergence failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys

import numpy as np

from . import inequalities as ineq
from . import oracle
from .errors import ConvergenceFailure, InvalidInput, NotchQuadError
from .notches import NotchSet, notches
from .quadrature import QuadratureResult, integrate, norm_2m, weight_function
from .ratfun import RationalFunction, SimplePartialFraction, reflect_axis, reflect_circle, segment_lift, semiaxis_lift

DOMAINS = ("circle", "axis", "semiaxis", "segment")
EXIT_OK, EXIT_VIOLATION, EXIT_INPUT, EXIT_CONVERGENCE = 0, 1, 2, 3


# serialization: floats always carry 17 significant digits

def _plain(obj):
    if isinstance(obj, dict):
        return {str(k): _plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_plain(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return [_plain(v) for v in obj.tolist()]
    if isinstance(obj, (bool, np.bool_)):
        return bool(obj)
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, (complex, np.complexfloating)):
        return [float(obj.real), float(obj.imag)]
    if isinstance(obj, (float, np.floating)):
        return float(obj)
    return obj


def _encode(obj) -> str:
    if isinstance(obj, bool) or obj is None:
        return json.dumps(obj)
    if isinstance(obj, float):
        if math.isinf(obj):
            return '"inf"' if obj > 0 else '"-inf"'
        if math.isnan(obj):
            return '"nan"'
        return format(obj, ".17g")
    if isinstance(obj, (int, str)):
        return json.dumps(obj)
    if isinstance(obj, list):
        return "[" + ", ".join(_encode(v) for v in obj) + "]"
    return "{" + ", ".join(f"{json.dumps(k)}: {_encode(v)}" for k, v in obj.items()) + "}"


def dumps(obj) -> str:
    return _encode(_plain(obj))


def _float(v):
    if isinstance(v, str) and v in ("inf", "-inf", "nan"):
        return float(v)
    return v


# input

def parse_q(text: str) -> float:
    if text.lower() in ("inf", "infinity"):
        return math.inf
    try:
        return float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"q must be a number or 'inf', got {text!r}") from None


def _load_json(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise InvalidInput(f"cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise InvalidInput(f"{path} is not valid JSON: {exc}") from exc


def load_spf(data) -> SimplePartialFraction:
    poles = data.get("spf") if isinstance(data, dict) else None
    if not isinstance(poles, list) or not poles:
        raise InvalidInput("'spf' must be a non-empty list of [re, im] pairs")
    try:
        pts = tuple(complex(float(p[0]), float(p[1])) if isinstance(p, (list, tuple)) else complex(float(p))
                    for p in poles)
    except (TypeError, ValueError, IndexError) as exc:
        raise InvalidInput(f"malformed SPF pole list: {exc}") from exc
    return SimplePartialFraction(pts)


def load_spec(path: str | None, need: str = "rational"):
    """Read a problem spec; ``need`` is ``"rational"``, ``"spf"`` or ``"any"``."""
    if path is None:
        raise InvalidInput("--spec FILE is required")
    data = _load_json(path)
    if not isinstance(data, dict):
        raise InvalidInput("spec must be a JSON object")
    if "spf" in data:
        if need == "rational":
            return ineq.spf_to_rational(load_spf(data))
        return load_spf(data)
    if need == "spf":
        raise InvalidInput("this command needs an 'spf' pole list")
    return RationalFunction.from_json(data)


def pole_set_for(domain: str, R: RationalFunction, r: float):
    if domain == "circle":
        return reflect_circle(R, r)
    if domain == "axis":
        return reflect_axis(R)
    if domain == "semiaxis":
        return semiaxis_lift(R)
    return segment_lift(R)


# commands

def cmd_nodes(args):
    R = load_spec(args.spec)
    ps = pole_set_for(args.domain, R, args.r)
    if args.sweep:
        phis = [2 * math.pi * k / args.sweep for k in range(args.sweep)]
    else:
        phis = [args.phi]
    sets = [notches(args.domain, ps, args.m, phi) for phi in phis]
    if args.csv:
        return _nodes_csv(sets), EXIT_OK
    if args.sweep:
        return dumps([s.to_json() for s in sets]), EXIT_OK
    return dumps(sets[0].to_json()), EXIT_OK


def _nodes_csv(sets) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["phi", "k", "param", "x", "mu", "residual"])
    for s in sets:
        xs = s.x if s.x is not None else s.params
        for k in range(s.points.size):
            w.writerow([format(s.phi, ".17g"), k, format(float(s.params[k]), ".17g"),
                        format(float(xs[k]), ".17g"), format(float(s.mu_values[k]), ".17g"),
                        format(float(s.residuals[k]), ".17g")])
        if s.infinite:
            w.writerow([format(s.phi, ".17g"), s.points.size, "inf", "inf", "0", format(float(s.residuals[-1]), ".17g")])
    return buf.getvalue().rstrip("\n")


def _quadrature(args, mode):
    R = load_spec(args.spec)
    fn = norm_2m if mode == "norm" else integrate
    res = fn(args.domain, R, args.m, args.phi, r=args.r, weight=args.weight)
    out = res.to_json()
    if args.verify:
        m = args.m
        f = (lambda z: R.abs2(z) ** m) if mode == "norm" else (lambda z: R(z) ** m)
        est = oracle.integrate(f, oracle.make_domain(args.domain, args.r, args.weight), tol=1e-12)
        if not est.converged:
            raise ConvergenceFailure("oracle did not reach its tolerance")
        value = est.value.real if mode == "norm" else complex(est.value)
        out["oracle"] = value
        out["discrepancy"] = abs(complex(res.value) - complex(value))
    return dumps(out), EXIT_OK


def cmd_integrate(args):
    return _quadrature(args, "integral")


def cmd_norm(args):
    return _quadrature(args, "norm")


def cmd_constant(args):
    p, q = args.p, args.q
    fam = args.family
    out = {"domain": args.domain, "family": fam, "p": p, "q": q, "m_p": ineq.m_p(p)}
    if fam == "rational":
        R = load_spec(args.spec) if args.spec else None
        if args.geometric:
            c = ineq.nikolskii_constant(args.domain, p, q, r=args.r, R=R, n=args.n, delta=args.delta, geometric=True)
        else:
            if R is None:
                raise InvalidInput("the mu-exact constant needs --spec (or use --geometric)")
            out["mu_sup"] = weight_function(args.domain, R, args.r).mu_sup()[1]
            c = ineq.nikolskii_constant(args.domain, p, q, r=args.r, mu_max=out["mu_sup"])
    elif fam == "laurent":
        c = ineq.laurent_constant(p, q, _need(args.n, "--n"), args.r)
    elif fam == "trig":
        c = ineq.trig_constant(p, q, _need(args.n, "--n"))
    elif fam == "trig-plus":
        c = ineq.trig_plus_constant(p, q, _need(args.n, "--n"))
    else:
        c = ineq.segment_polynomial_constant(p, q, _need(args.n, "--n"))
    out["constant"] = c
    if args.compare_baranov:
        if args.domain != "circle" or args.delta is None or args.n is None:
            raise InvalidInput("--compare-baranov needs --domain circle, --n and --delta")
        b = ineq.baranov_constant(p, q, args.n, args.delta, args.r)
        out["baranov"] = b
        out["ratio"] = c / b
    return dumps(out), EXIT_OK


def _need(v, flag):
    if v is None:
        raise InvalidInput(f"{flag} is required")
    return v


def cmd_bound(args):
    t = args.type
    if t in ("spf", "spf-mixed", "spf-semiaxis"):
        rho = load_spec(args.spec, "spf")
        if t == "spf":
            reports = list(ineq.spf_bounds(rho, args.p))
        elif t == "spf-mixed":
            reports = [ineq.spf_mixed_bound(rho, args.p, args.q)]
        else:
            reports = list(ineq.spf_semiaxis_bound(rho, _need(args.alpha, "--alpha"), args.m))
        out = [r.to_json() for r in reports]
        ok = all(r.holds for r in reports)
        return dumps(out if len(out) > 1 else out[0]), EXIT_OK if ok else EXIT_VIOLATION
    R = load_spec(args.spec)
    if t == "pointwise":
        rep = ineq.pointwise_bound(args.domain, R, args.m, _need(args.point, "--point"), r=args.r, weight=args.weight)
    elif t == "nikolskii":
        rep = ineq.nikolskii_bound(args.domain, R, args.p, args.q, r=args.r, weight=args.weight)
    else:
        alt = ineq.alternative_check(args.domain, R, args.m, _need(args.d, "--d"), _need(args.point, "--point"),
                                     r=args.r, weight=args.weight)
        out = {"first": alt.first, "second": alt.second, "holds": alt.any}
        return dumps(out), EXIT_OK if alt.any else EXIT_VIOLATION
    return dumps(rep.to_json()), EXIT_OK if rep.holds else EXIT_VIOLATION


def cmd_extremal(args):
    kind = args.kind
    params = {}
    if kind == "rho_p":
        params = {"p": _need(args.p, "--p")}
    elif kind == "circle_delta_star":
        params = {"n": _need(args.n, "--n"), "delta": _need(args.delta, "--delta"), "r": args.r}
    elif kind in ("segment_jacobi", "trig_star"):
        params = {"n": _need(args.n, "--n")}
    elif kind == "circle_poly":
        params = {"n": _need(args.n, "--n"), "r": args.r}
    elif kind == "circle_star":
        params = {"pole_set": reflect_circle(load_spec(args.spec), args.r), "phi": args.phi_opt}
    elif kind == "axis_star":
        params = {"pole_set": reflect_axis(load_spec(args.spec)), "phi": args.phi_opt}
    w = ineq.extremal_witness(kind, **params)
    out = w.to_json()
    reports = _witness_reports(w)
    out["reports"] = [r.to_json() for r in reports]
    out["equality"] = all(r.equality for r in reports)
    return dumps(out), EXIT_OK


def _witness_reports(w):
    k = w.kind
    if k == "rho_p":
        p = w.params["p"]
        d, paths = ineq.spf_d(w.function, p)
        reps = [ineq.BoundReport(f"rho_p_d[p={p}]", d, 2.0 * ineq.m_p(p), paths)]
        if p in (2, 4):
            reps = ineq.rho_sharpness(int(p))
        return reps
    if k == "circle_delta_star":
        return [ineq.circle_delta_sharpness(w.params["n"], w.params["delta"], w.params["r"])]
    if k == "segment_jacobi":
        return [ineq.segment_sharpness(w.params["n"])]
    R = w.function
    if k in ("trig_star", "circle_poly"):
        r = w.params.get("r", 1.0)
        sup = ineq.sup_norm("circle", R, r=r)[1]
        l2 = float(oracle.lp_norm_p(R, oracle.Circle(r), 2).value) ** 0.5
        n = w.params["n"]
        c = ineq.trig_plus_constant(2, math.inf, n) if k == "trig_star" else ineq.laurent_constant(2, math.inf, n, r)
        return [ineq.BoundReport(k, sup, c * l2, {"sup": "max", "l2": "oracle"})]
    domain = "circle" if k == "circle_star" else "axis"
    ps = w.params["pole_set"]
    r = ps.radius or 1.0
    sup = ineq.sup_norm(domain, R, [p.location for p in R.poles], r)[1]
    l2sq = ineq.lp_norm(domain, R, 2, r=r)[0] ** 2
    B = weight_function(domain, R, r)
    mu = B.mu_sup()[1]
    rhs = 2 * math.pi * r * sup ** 2 / (mu + 1) if domain == "circle" else math.pi * sup ** 2 / mu
    return [ineq.BoundReport(k, l2sq, rhs, {"sup": "max", "l2": "quadrature"})]


def cmd_suite(args):
    from .suite import run_all

    results = run_all(args.seed, workers=args.workers)
    out = {"seed": args.seed, "passed": all(r.passed for r in results), "criteria": [r.to_json() for r in results]}
    return dumps(out), EXIT_OK if out["passed"] else EXIT_VIOLATION


# round trip

def _revive(data):
    """Rebuild the object behind an emitted JSON document and serialize it again."""
    if isinstance(data, list):
        return [_revive(d) for d in data]
    if not isinstance(data, dict):
        raise InvalidInput("expected a JSON object or array")
    if "numerator" in data:
        return RationalFunction.from_json(data).to_json()
    if "spf" in data and "kind" not in data:
        rho = load_spf(data)
        return {"spf": [[z.real, z.imag] for z in rho.poles]}
    if "mode" in data and "contributions" in data:
        extra = {k: data[k] for k in ("oracle", "discrepancy") if k in data}
        return {**QuadratureResult.from_json(data).to_json(), **extra}
    if "nodes" in data and "domain" in data:
        return NotchSet.from_json(data).to_json()
    if "lhs" in data and "rhs" in data:
        return ineq.BoundReport.from_json(data).to_json()
    if "error" in data:
        err = data["error"]
        if not isinstance(err, dict) or "code" not in err:
            raise InvalidInput("malformed error JSON")
        return {"error": {"code": str(err["code"]), "message": str(err.get("message", ""))}}
    return _walk_floats(data)


def _walk_floats(obj):
    if isinstance(obj, dict):
        return {k: _walk_floats(v) for k, v in obj.items()}
    if isinstance(obj, list):
        return [_walk_floats(v) for v in obj]
    return _float(obj)


def cmd_from_json(path: str):
    return dumps(_revive(_load_json(path))), EXIT_OK


# parser

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="notchquad", description=__doc__.splitlines()[0])
    parser.add_argument("--from-json", metavar="FILE", help="parse an emitted JSON document and print it again")
    sub = parser.add_subparsers(dest="command")

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--domain", choices=DOMAINS, default="circle")
    common.add_argument("--r", type=float, default=1.0, help="circle radius")
    common.add_argument("--m", type=int, default=1)
    common.add_argument("--phi", type=float, default=0.0)
    common.add_argument("--spec", metavar="FILE", help="rational function JSON or {\"spf\": [[re, im], ...]}")
    common.add_argument("--weight", choices=("inv_sqrt", "sqrt"), default="inv_sqrt")
    common.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("nodes", parents=[common], help="quadrature nodes")
    p.add_argument("--csv", action="store_true")
    p.add_argument("--sweep", type=int, metavar="K", help="K equally spaced phi values in [0, 2 pi)")
    p.set_defaults(func=cmd_nodes)

    for name, func in (("integrate", cmd_integrate), ("norm", cmd_norm)):
        p = sub.add_parser(name, parents=[common], help=f"{name} via the notch quadrature")
        p.add_argument("--verify", action="store_true", help="attach the adaptive-oracle value")
        p.set_defaults(func=func)

    lp = argparse.ArgumentParser(add_help=False)
    lp.add_argument("--p", type=float)
    lp.add_argument("--q", type=parse_q)
    lp.add_argument("--n", type=int)
    lp.add_argument("--delta", type=float)

    p = sub.add_parser("constant", parents=[common, lp], help="Nikolskii-type constants")
    p.add_argument("--family", choices=("rational", "laurent", "trig", "trig-plus", "segment-polynomial"),
                   default="rational")
    p.add_argument("--geometric", action="store_true")
    p.add_argument("--compare-baranov", action="store_true")
    p.set_defaults(func=cmd_constant)

    p = sub.add_parser("bound", parents=[common, lp], help="check one inequality instance")
    p.add_argument("--type", choices=("pointwise", "nikolskii", "alternative", "spf", "spf-mixed", "spf-semiaxis"),
                   default="pointwise")
    p.add_argument("--point", type=float, help="theta on circle/segment, x on axis/semiaxis")
    p.add_argument("--d", type=float)
    p.add_argument("--alpha", type=float)
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("extremal", parents=[lp], help="extremal witness with its sharpness report")
    p.add_argument("--kind", required=True)
    p.add_argument("--r", type=float, default=1.0)
    p.add_argument("--phi", dest="phi_opt", type=float, default=None)
    p.add_argument("--spec", metavar="FILE")
    p.set_defaults(func=cmd_extremal)

    p = sub.add_parser("suite", help="run all acceptance criteria")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_suite)
    return parser


def _check_args(args):
    if getattr(args, "m", 1) is not None and getattr(args, "m", 1) < 1:
        raise InvalidInput("--m must be a positive integer")
    if getattr(args, "r", 1.0) is not None and not getattr(args, "r", 1.0) > 0:
        raise InvalidInput("--r must be positive")
    if args.command in ("constant",) or (args.command == "bound" and args.type in ("nikolskii", "spf", "spf-mixed")):
        _need(args.p, "--p")
    if args.command == "constant" or (args.command == "bound" and args.type in ("nikolskii", "spf-mixed")):
        _need(args.q, "--q")


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.from_json:
            text, code = cmd_from_json(args.from_json)
        elif args.command is None:
            parser.print_usage(sys.stderr)
            return EXIT_INPUT
        else:
            _check_args(args)
            text, code = args.func(args)
    except ConvergenceFailure as exc:
        print(dumps({"error": {"code": exc.code, "message": str(exc)}}), file=sys.stderr)
        return EXIT_CONVERGENCE
    except NotchQuadError as exc:
        print(dumps({"error": {"code": exc.code, "message": str(exc)}}), file=sys.stderr)
        return EXIT_INPUT
    print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
